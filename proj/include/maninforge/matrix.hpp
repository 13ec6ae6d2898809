#pragma once

#include "maninforge/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace mforge {

struct Rref;

/// Dense exact-rational matrix, row-major. All reductions use deterministic
/// pivoting (first nonzero entry scanning top-to-bottom, columns
/// left-to-right) so echelon forms and kernel bases are reproducible.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix hcat(const Matrix& a, const Matrix& b);
    static Matrix vcat(const Matrix& a, const Matrix& b);
    /// Assembles a matrix from equally sized column vectors.
    static Matrix from_columns(const std::vector<Matrix>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Matrix&) const = default;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Rational& s) const;

    Matrix transpose() const;
    bool is_zero() const;

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    Matrix column(std::size_t j) const;
    void set_column(std::size_t j, const Matrix& v);

    Rref rref() const;
    std::size_t rank() const;
    /// Null-space basis as columns; cols() - rank() of them.
    Matrix kernel() const;
    /// Exact inverse, or nullopt when singular.
    std::optional<Matrix> inverse() const;
    /// Any exact solution of this*x = b (column-wise), or nullopt when none.
    std::optional<Matrix> solve(const Matrix& b) const;

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

/// Reduced row echelon form together with the pivot column indices.
struct Rref {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

inline std::size_t Matrix::rank() const { return rref().pivots.size(); }

inline Matrix operator*(const Rational& s, const Matrix& m) { return m * s; }

/// Column vector with a single 1 in position i.
Matrix basis_vector(std::size_t n, std::size_t i);

/// True when the columns of a and b span the same subspace.
bool same_column_span(const Matrix& a, const Matrix& b);

} // namespace mforge
