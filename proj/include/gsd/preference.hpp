#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gsd/detail/bitset.hpp"
#include "gsd/errors.hpp"
#include "gsd/quality.hpp"

namespace gsd {

using IndexPair = std::pair<int, int>;

// Three-way comparison with an optional tie tolerance. The default (0) is
// exact double comparison; a positive tolerance coarsens both deduplication
// and the component orders.
inline int cmp_tol(double a, double b, double tol) {
    if (std::abs(a - b) <= tol) return 0;
    return a < b ? -1 : 1;
}

// The preference system [Q, R1, R2] built from a pooled set of quality
// vectors (Q deduplicated and extended by per-dimension extremes).
//
//   (q,p) in R1            iff q_i >= p_i on every dimension
//   ((q,p),(r,s)) in R2    iff both in R1 and |q_i - p_i| >= |r_i - s_i|
//                          on every metric dimension
//
// Element 0 is the minimal vector q_min, element 1 the maximal vector q_max
// (reused rather than duplicated when an attained vector already equals the
// componentwise extreme). With no metric dimensions R2 degenerates to the
// diagonal, i.e. plain first-order stochastic dominance on the R1 poset.
struct PreferenceSystem {
    std::vector<QualityVector> elements;
    std::vector<char> attained;       // synthetic extremes are 0
    std::vector<int> metric_dims;
    double tie_tol = 0.0;
    int min_index = 0;
    int max_index = 0;
    detail::BitMatrix r1;             // r1.test(i, j) <=> (q_i, q_j) in R1

    int size() const { return static_cast<int>(elements.size()); }

    bool in_r1(int i, int j) const { return r1.test(i, j); }

    std::vector<double> gap(int i, int j) const {
        std::vector<double> g(metric_dims.size());
        for (size_t k = 0; k < metric_dims.size(); ++k)
            g[k] = std::abs(elements[i][metric_dims[k]] - elements[j][metric_dims[k]]);
        return g;
    }

    bool in_r2(const IndexPair& e, const IndexPair& f) const {
        if (!in_r1(e.first, e.second) || !in_r1(f.first, f.second)) return false;
        for (int dim : metric_dims) {
            const double ge = std::abs(elements[e.first][dim] - elements[e.second][dim]);
            const double gf = std::abs(elements[f.first][dim] - elements[f.second][dim]);
            if (ge < gf) return false;
        }
        return true;
    }

    std::vector<IndexPair> r1_pairs() const {
        std::vector<IndexPair> out;
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j)
                if (r1.test(i, j)) out.emplace_back(i, j);
        return out;
    }

    std::vector<std::pair<IndexPair, IndexPair>> r2_pairs() const {
        std::vector<std::pair<IndexPair, IndexPair>> out;
        const auto pairs = r1_pairs();
        for (const auto& e : pairs)
            for (const auto& f : pairs)
                if (in_r2(e, f)) out.emplace_back(e, f);
        return out;
    }

    std::optional<int> index_of(const QualityVector& v) const {
        for (int i = 0; i < size(); ++i) {
            bool same = true;
            for (size_t k = 0; k < v.size(); ++k)
                if (cmp_tol(elements[i][k], v[k], tie_tol) != 0) { same = false; break; }
            if (same) return i;
        }
        return std::nullopt;
    }
};

namespace relation {

// Strict part P_R = {(a,b) in R : (b,a) not in R}.
inline std::vector<IndexPair> strict_part(const std::vector<IndexPair>& rel) {
    std::vector<IndexPair> out;
    auto in = [&](int a, int b) {
        return std::find(rel.begin(), rel.end(), IndexPair{a, b}) != rel.end();
    };
    for (const auto& [a, b] : rel)
        if (!in(b, a)) out.emplace_back(a, b);
    return out;
}

// Indifference part I_R = {(a,b) in R : (b,a) in R}.
inline std::vector<IndexPair> indifference_part(const std::vector<IndexPair>& rel) {
    std::vector<IndexPair> out;
    auto in = [&](int a, int b) {
        return std::find(rel.begin(), rel.end(), IndexPair{a, b}) != rel.end();
    };
    for (const auto& [a, b] : rel)
        if (in(b, a)) out.emplace_back(a, b);
    return out;
}

}  // namespace relation

namespace detail_pref {

inline bool vectors_equal(const QualityVector& a, const QualityVector& b, double tol) {
    for (size_t k = 0; k < a.size(); ++k)
        if (cmp_tol(a[k], b[k], tol) != 0) return false;
    return true;
}

inline bool geq_componentwise(const QualityVector& a, const QualityVector& b, double tol) {
    for (size_t k = 0; k < a.size(); ++k)
        if (cmp_tol(a[k], b[k], tol) < 0) return false;
    return true;
}

}  // namespace detail_pref

// Builds the preference system from pooled (already reoriented) quality
// vectors. Duplicates are merged; extremes are the per-dimension min/max of
// the attained values and reuse an attained vector when one coincides.
inline PreferenceSystem build_system(const std::vector<QualityVector>& vectors,
                                     const std::vector<CriterionSpec>& criteria,
                                     double tie_tol = 0.0) {
    if (vectors.empty()) throw data_error("build_system: no quality vectors");
    const size_t n = criteria.size();
    for (const auto& v : vectors)
        if (v.size() != n) throw data_error("quality vector has wrong length");

    PreferenceSystem sys;
    sys.tie_tol = tie_tol;
    for (size_t k = 0; k < n; ++k)
        if (criteria[k].scale == Scale::metric) sys.metric_dims.push_back(static_cast<int>(k));

    QualityVector lo = vectors[0], hi = vectors[0];
    for (const auto& v : vectors)
        for (size_t k = 0; k < n; ++k) {
            lo[k] = std::min(lo[k], v[k]);
            hi[k] = std::max(hi[k], v[k]);
        }

    std::vector<QualityVector> dedup;
    std::vector<char> att;
    auto find = [&](const QualityVector& v) -> int {
        for (size_t i = 0; i < dedup.size(); ++i)
            if (detail_pref::vectors_equal(dedup[i], v, tie_tol)) return static_cast<int>(i);
        return -1;
    };
    // extremes occupy slots 0 (min) and 1 (max); a degenerate single-point
    // set collapses both onto the same element
    dedup.push_back(lo);
    att.push_back(0);
    if (detail_pref::vectors_equal(hi, lo, tie_tol)) {
        sys.min_index = 0;
        sys.max_index = 0;
    } else {
        dedup.push_back(hi);
        att.push_back(0);
        sys.min_index = 0;
        sys.max_index = 1;
    }
    for (const auto& v : vectors) {
        const int at = find(v);
        if (at >= 0) {
            att[at] = 1;
        } else {
            dedup.push_back(v);
            att.push_back(1);
        }
    }

    sys.elements = std::move(dedup);
    sys.attained = std::move(att);

    const int d = sys.size();
    sys.r1 = detail::BitMatrix(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (detail_pref::geq_componentwise(sys.elements[i], sys.elements[j], tie_tol))
                sys.r1.set(i, j);
    return sys;
}

inline PreferenceSystem system_from_table(const QualityTable& reoriented, double tie_tol = 0.0) {
    std::vector<QualityVector> vecs;
    vecs.reserve(reoriented.classifiers.size() * reoriented.datasets.size());
    for (size_t c = 0; c < reoriented.classifiers.size(); ++c)
        for (size_t d = 0; d < reoriented.datasets.size(); ++d)
            vecs.push_back(reoriented.vector_at(static_cast<int>(c), static_cast<int>(d)));
    return build_system(vecs, reoriented.criteria, tie_tol);
}

// Per-criterion transform: positive-affine on metric dimensions, any
// strictly increasing relabeling of the attained values on ordinal ones.
struct Automorphism {
    struct DimTransform {
        bool affine = true;
        double scale = 1.0;
        double shift = 0.0;
        std::map<double, double> table;  // ordinal relabeling
    };
    std::vector<DimTransform> dims;

    static Automorphism identity(size_t num_criteria) {
        Automorphism t;
        t.dims.resize(num_criteria);
        return t;
    }

    QualityVector apply(const QualityVector& v) const {
        QualityVector out(v.size());
        for (size_t k = 0; k < v.size(); ++k) {
            const auto& t = dims[k];
            if (t.affine) {
                out[k] = t.scale * v[k] + t.shift;
            } else {
                const auto it = t.table.find(v[k]);
                if (it == t.table.end())
                    throw data_error("automorphism table misses attained value");
                out[k] = it->second;
            }
        }
        return out;
    }
};

// Rebuilds the system from the transformed attained vectors. The relation
// pattern is preserved element-for-element (Q is finite, transforms are
// strictly monotone and metric gaps rescale uniformly per dimension).
inline PreferenceSystem apply_automorphism(const PreferenceSystem& sys, const Automorphism& t) {
    if (t.dims.size() != (sys.elements.empty() ? 0 : sys.elements[0].size()))
        throw data_error("automorphism dimension mismatch");
    for (int dim : sys.metric_dims) {
        const auto& dt = t.dims[dim];
        if (!dt.affine)
            throw data_error("metric dimension requires a positive-scale affine transform");
        if (dt.scale <= 0.0)
            throw data_error("automorphism needs positive scale on metric dimension");
    }
    for (const auto& dt : t.dims) {
        if (dt.affine) continue;
        double prev_in = 0.0, prev_out = 0.0;
        bool first = true;
        for (const auto& [in, out] : dt.table) {  // std::map iterates in increasing key order
            if (!first && (in <= prev_in || out <= prev_out))
                throw data_error("ordinal automorphism must be strictly increasing");
            prev_in = in;
            prev_out = out;
            first = false;
        }
    }

    std::vector<QualityVector> transformed;
    std::vector<CriterionSpec> criteria(t.dims.size());
    for (size_t k = 0; k < criteria.size(); ++k) {
        criteria[k].name = "c" + std::to_string(k);
        criteria[k].scale = Scale::ordinal;
    }
    for (int dim : sys.metric_dims) criteria[dim].scale = Scale::metric;
    for (int i = 0; i < sys.size(); ++i)
        if (sys.attained[i]) transformed.push_back(t.apply(sys.elements[i]));
    return build_system(transformed, criteria, sys.tie_tol);
}

}  // namespace gsd
