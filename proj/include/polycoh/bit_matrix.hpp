#pragma once

#include <cstdint>
#include <vector>

namespace polycoh {

/// Dense GF(2) matrix, rows packed 64 columns per word.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t row, std::size_t col) const {
        return (data_[row * stride_ + col / 64] >> (col % 64)) & 1u;
    }
    void set(std::size_t row, std::size_t col, bool value);
    std::size_t row_weight(std::size_t row) const;

    /// Reduced row echelon form in place; returns the pivot column of each
    /// nonzero row, in order.
    std::vector<std::size_t> row_reduce();

    /// Basis of {x : Mx = 0}, one vector per free column. Does not modify *this.
    std::vector<std::vector<bool>> nullspace() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    void xor_row(std::size_t target, std::size_t source);
    void swap_rows(std::size_t a, std::size_t b);

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> data_;
};

}  // namespace polycoh
