#pragma once

#include <cstdint>
#include <vector>

namespace gsd::detail {

// Fixed-width bit rows used for relation/reachability math on small posets.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64),
          data_(static_cast<size_t>(rows) * words_, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int words() const { return words_; }

    void set(int r, int c) { data_[idx(r) + c / 64] |= (uint64_t{1} << (c % 64)); }
    void reset(int r, int c) { data_[idx(r) + c / 64] &= ~(uint64_t{1} << (c % 64)); }
    bool test(int r, int c) const {
        return (data_[idx(r) + c / 64] >> (c % 64)) & 1u;
    }

    const uint64_t* row(int r) const { return data_.data() + idx(r); }
    uint64_t* row(int r) { return data_.data() + idx(r); }

    // dst |= src, both rows of this matrix
    void or_row_into(int src, uint64_t* dst) const {
        const uint64_t* s = row(src);
        for (int w = 0; w < words_; ++w) dst[w] |= s[w];
    }

    int count_row(int r) const {
        int n = 0;
        const uint64_t* p = row(r);
        for (int w = 0; w < words_; ++w) n += __builtin_popcountll(p[w]);
        return n;
    }

private:
    size_t idx(int r) const { return static_cast<size_t>(r) * words_; }

    int rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<uint64_t> data_;
};

}  // namespace gsd::detail
