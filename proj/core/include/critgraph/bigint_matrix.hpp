#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace critgraph {

using Int = mpz_class;

// Dense matrix of arbitrary-precision integers. All arithmetic is exact;
// dimensions are fixed at construction.
class BigIntMatrix {
public:
    BigIntMatrix() = default;
    BigIntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static BigIntMatrix identity(std::size_t n);
    static BigIntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    BigIntMatrix transpose() const;
    bool is_zero() const;

    BigIntMatrix column(std::size_t j) const;
    BigIntMatrix columns(const std::vector<std::size_t>& idx) const;
    static BigIntMatrix hstack(const BigIntMatrix& a, const BigIntMatrix& b);

    void swap_rows(std::size_t i, std::size_t k);
    void swap_cols(std::size_t j, std::size_t k);
    // col_dst += q * col_src
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& q);
    // row_dst += q * row_src
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& q);
    void negate_col(std::size_t j);

    friend BigIntMatrix operator*(const BigIntMatrix& a, const BigIntMatrix& b);
    friend BigIntMatrix operator*(const Int& s, const BigIntMatrix& a);
    friend BigIntMatrix operator+(const BigIntMatrix& a, const BigIntMatrix& b);
    friend BigIntMatrix operator-(const BigIntMatrix& a, const BigIntMatrix& b);
    bool operator==(const BigIntMatrix& o) const = default;

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

} // namespace critgraph
