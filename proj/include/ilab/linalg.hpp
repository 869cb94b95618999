#pragma once

#include "ilab/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace ilab {

// Dense row-major rational matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalVector row(std::size_t r) const;
    void append_row(const RationalVector& row);
    Matrix transposed() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// In-place reduced row echelon form; returns pivot columns (one per nonzero row, in order).
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

// Basis of {x : m x = 0}, one vector per free column, free entry 1.
std::vector<RationalVector> kernel(const Matrix& m);

// Some solution of m x = b (free variables zero), or nullopt when inconsistent.
std::optional<RationalVector> solve(const Matrix& m, const RationalVector& b);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace ilab
