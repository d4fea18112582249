#include "polycoh/bit_matrix.hpp"

#include <bit>
#include <utility>

namespace polycoh {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * stride_, 0) {}

void BitMatrix::set(std::size_t row, std::size_t col, bool value) {
    std::uint64_t& word = data_[row * stride_ + col / 64];
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    word = value ? (word | bit) : (word & ~bit);
}

std::size_t BitMatrix::row_weight(std::size_t row) const {
    std::size_t weight = 0;
    for (std::size_t w = 0; w < stride_; ++w) weight += static_cast<std::size_t>(std::popcount(data_[row * stride_ + w]));
    return weight;
}

void BitMatrix::xor_row(std::size_t target, std::size_t source) {
    std::uint64_t* t = &data_[target * stride_];
    const std::uint64_t* s = &data_[source * stride_];
    for (std::size_t w = 0; w < stride_; ++w) t[w] ^= s[w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < stride_; ++w) std::swap(data_[a * stride_ + w], data_[b * stride_ + w]);
}

std::vector<std::size_t> BitMatrix::row_reduce() {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t col = 0; col < cols_ && next < rows_; ++col) {
        std::size_t found = next;
        while (found < rows_ && !get(found, col)) ++found;
        if (found == rows_) continue;
        swap_rows(next, found);
        for (std::size_t r = 0; r < rows_; ++r)
            if (r != next && get(r, col)) xor_row(r, next);
        pivots.push_back(col);
        ++next;
    }
    return pivots;
}

std::vector<std::vector<bool>> BitMatrix::nullspace() const {
    BitMatrix reduced = *this;
    const auto pivots = reduced.row_reduce();
    std::vector<char> is_pivot(cols_, 0);
    for (std::size_t p : pivots) is_pivot[p] = 1;

    std::vector<std::vector<bool>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<bool> x(cols_, false);
        x[free] = true;
        // Row i of the reduced matrix reads x[pivot_i] + sum_free (entry) x[free] = 0.
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (reduced.get(i, free)) x[pivots[i]] = true;
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace polycoh
