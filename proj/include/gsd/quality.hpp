#pragma once

#include <cmath>
#include <string>
#include <unordered_set>
#include <vector>

#include "gsd/errors.hpp"

namespace gsd {

enum class Scale { metric, ordinal };
enum class Direction { maximize, minimize };

struct CriterionSpec {
    std::string name;
    Scale scale = Scale::metric;
    Direction direction = Direction::maximize;
};

// One quality vector, one coordinate per criterion, already oriented so that
// larger is better.
using QualityVector = std::vector<double>;

// Dense value of each criterion for each (classifier, data set) pair.
struct QualityTable {
    std::vector<std::string> classifiers;
    std::vector<std::string> datasets;
    std::vector<CriterionSpec> criteria;
    std::vector<double> values;  // [classifier][dataset][criterion]

    double& at(int c, int d, int k) {
        return values[(static_cast<size_t>(c) * datasets.size() + d) * criteria.size() + k];
    }
    double at(int c, int d, int k) const {
        return values[(static_cast<size_t>(c) * datasets.size() + d) * criteria.size() + k];
    }

    QualityVector vector_at(int c, int d) const {
        QualityVector v(criteria.size());
        for (size_t k = 0; k < criteria.size(); ++k) v[k] = at(c, d, static_cast<int>(k));
        return v;
    }

    int classifier_index(const std::string& id) const {
        for (size_t i = 0; i < classifiers.size(); ++i)
            if (classifiers[i] == id) return static_cast<int>(i);
        return -1;
    }

    void validate() const {
        if (classifiers.size() < 2) throw data_error("need at least 2 classifiers");
        if (datasets.empty()) throw data_error("need at least 1 data set");
        if (criteria.empty()) throw data_error("need at least 1 criterion");
        std::unordered_set<std::string> names;
        for (const auto& c : criteria)
            if (!names.insert(c.name).second)
                throw data_error("duplicate criterion name: " + c.name);
        names.clear();
        for (const auto& c : classifiers)
            if (!names.insert(c).second) throw data_error("duplicate classifier id: " + c);
        names.clear();
        for (const auto& d : datasets)
            if (!names.insert(d).second) throw data_error("duplicate data set id: " + d);
        const size_t expect =
            classifiers.size() * datasets.size() * criteria.size();
        if (values.size() != expect) throw data_error("value array has wrong size");
        for (double v : values)
            if (!std::isfinite(v)) throw data_error("non-finite quality value");
    }
};

// Negates minimize-type criteria so every order reads "larger is better".
// Distances |x - y| are unchanged, so the induced preference system is too.
inline QualityTable reorient(const QualityTable& table) {
    QualityTable out = table;
    for (size_t k = 0; k < out.criteria.size(); ++k) {
        if (out.criteria[k].direction == Direction::minimize) {
            for (size_t c = 0; c < out.classifiers.size(); ++c)
                for (size_t d = 0; d < out.datasets.size(); ++d)
                    out.at(static_cast<int>(c), static_cast<int>(d), static_cast<int>(k)) =
                        -out.at(static_cast<int>(c), static_cast<int>(d), static_cast<int>(k));
            out.criteria[k].direction = Direction::maximize;
        }
    }
    return out;
}

}  // namespace gsd
