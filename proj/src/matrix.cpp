#include "maninforge/matrix.hpp"

#include <stdexcept>

namespace mforge {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

Matrix Matrix::vcat(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vcat: column mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) m.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) m.at(a.rows() + i, j) = b.at(i, j);
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Matrix>& cols) {
    if (cols.empty()) return Matrix();
    Matrix m(cols.front().rows(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix +: shape mismatch");
    Matrix m(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix -: shape mismatch");
    Matrix m(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - o.a_[k];
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix *: shape mismatch");
    Matrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& lhs = at(i, k);
            if (lhs == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                m.at(i, j) += lhs * o.at(k, j);
        }
    return m;
}

Matrix Matrix::operator*(const Rational& s) const {
    Matrix m(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * s;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::invalid_argument("block: out of range");
    Matrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = at(r0 + i, c0 + j);
    return m;
}

Matrix Matrix::column(std::size_t j) const { return block(0, j, rows_, 1); }

void Matrix::set_column(std::size_t j, const Matrix& v) {
    if (v.rows() != rows_ || v.cols() != 1) throw std::invalid_argument("set_column: shape mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v.at(i, 0);
}

Rref Matrix::rref() const {
    Rref r{*this, {}};
    Matrix& m = r.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t piv = row;
        while (piv < rows_ && m.at(piv, col) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(row, j), m.at(piv, j));
        const Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t j = 0; j < cols_; ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            const Rational f = m.at(i, col);
            for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        r.pivots.push_back(col);
        ++row;
    }
    return r;
}

Matrix Matrix::kernel() const {
    const Rref r = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    Matrix k(cols_, cols_ - r.pivots.size());
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        k.at(free_col, out) = 1;
        for (std::size_t p = 0; p < r.pivots.size(); ++p)
            k.at(r.pivots[p], out) = -r.reduced.at(p, free_col);
        ++out;
    }
    return k;
}

std::optional<Matrix> Matrix::inverse() const {
    if (!is_square()) throw std::invalid_argument("inverse: matrix not square");
    const Rref r = hcat(*this, identity(rows_)).rref();
    if (r.pivots.size() != rows_) return std::nullopt;
    for (std::size_t p = 0; p < rows_; ++p)
        if (r.pivots[p] != p) return std::nullopt;
    return r.reduced.block(0, cols_, rows_, cols_);
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
    if (b.rows() != rows_) throw std::invalid_argument("solve: row mismatch");
    const Rref r = hcat(*this, b).rref();
    for (std::size_t p : r.pivots)
        if (p >= cols_) return std::nullopt;
    Matrix x(cols_, b.cols());
    for (std::size_t p = 0; p < r.pivots.size(); ++p)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(r.pivots[p], j) = r.reduced.at(p, cols_ + j);
    return x;
}

std::string Matrix::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        s += (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) s += ",";
            s += rat_str(at(i, j));
        }
        s += "]";
    }
    return s + "]";
}

Matrix basis_vector(std::size_t n, std::size_t i) {
    Matrix v(n, 1);
    v.at(i, 0) = 1;
    return v;
}

bool same_column_span(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) return false;
    const auto ra = a.transpose().rref();
    const auto rb = b.transpose().rref();
    if (ra.pivots.size() != rb.pivots.size()) return false;
    const std::size_t rank = ra.pivots.size();
    return ra.reduced.block(0, 0, rank, a.rows()) ==
           rb.reduced.block(0, 0, rank, b.rows());
}

} // namespace mforge
