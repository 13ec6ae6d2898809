#include "maninforge/lie_core.hpp"

#include <stdexcept>

namespace mforge {

LieAlgebra::LieAlgebra(std::size_t dim, std::string name,
                       std::vector<std::string> basis_names)
    : dim_(dim), name_(std::move(name)), basis_names_(std::move(basis_names)),
      c_(dim * dim * dim) {
    if (basis_names_.empty()) {
        basis_names_.reserve(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            basis_names_.push_back("e" + std::to_string(i));
    }
    if (basis_names_.size() != dim_)
        throw std::invalid_argument("LieAlgebra: basis name count mismatch");
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Matrix& value) {
    if (value.rows() != dim_ || value.cols() != 1)
        throw std::invalid_argument("set_bracket: value shape mismatch");
    for (std::size_t k = 0; k < dim_; ++k) {
        c(i, j, k) = value.at(k, 0);
        c(j, i, k) = -value.at(k, 0);
    }
}

Matrix LieAlgebra::bracket(const Matrix& x, const Matrix& y) const {
    if (x.rows() != dim_ || y.rows() != dim_ || x.cols() != 1 || y.cols() != 1)
        throw std::invalid_argument("bracket: dimension mismatch");
    Matrix out(dim_, 1);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x.at(i, 0) == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y.at(j, 0) == 0) continue;
            const Rational f = x.at(i, 0) * y.at(j, 0);
            for (std::size_t k = 0; k < dim_; ++k)
                out.at(k, 0) += f * c(i, j, k);
        }
    }
    return out;
}

Matrix LieAlgebra::ad(const Matrix& x) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        m.set_column(j, bracket(x, basis_vector(dim_, j)));
    return m;
}

Report LieAlgebra::check_antisymmetry() const {
    Report r;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                if (c(i, j, k) != -c(j, i, k))
                    r.fail("antisymmetry", {i, j, k}, rat_str(c(i, j, k)),
                           rat_str(-c(j, i, k)));
    return r;
}

Report LieAlgebra::check_jacobi() const {
    Report r;
    // The Jacobiator is antisymmetric in (i, j, l) once antisymmetry of the
    // bracket holds (checked separately), so ordered triples suffice.
    std::vector<Rational> sum(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t l = j + 1; l < dim_; ++l) {
                for (std::size_t k = 0; k < dim_; ++k) sum[k] = 0;
                const auto accumulate = [&](std::size_t a, std::size_t b,
                                            std::size_t d) {
                    for (std::size_t m = 0; m < dim_; ++m) {
                        const Rational& f = c(a, b, m);
                        if (f == 0) continue;
                        for (std::size_t k = 0; k < dim_; ++k)
                            if (c(m, d, k) != 0) sum[k] += f * c(m, d, k);
                    }
                };
                accumulate(i, j, l);
                accumulate(j, l, i);
                accumulate(l, i, j);
                for (std::size_t k = 0; k < dim_; ++k)
                    if (sum[k] != 0)
                        r.fail("jacobi", {i, j, l, k}, rat_str(sum[k]), "0");
            }
    return r;
}

Rational BilinearForm::eval(const Matrix& x, const Matrix& y) const {
    return (x.transpose() * gram_ * y).at(0, 0);
}

Report BilinearForm::validate() const {
    Report r;
    r.require(gram_.is_square(), "form.square", {}, gram_.str());
    if (!r.passed()) return r;
    r.require_eq(gram_, gram_.transpose(), "form.symmetric", {});
    r.require(gram_.inverse().has_value(), "form.nondegenerate", {}, gram_.str());
    return r;
}

Subspace Subspace::coordinate(std::size_t n, std::size_t from, std::size_t count) {
    Matrix b(n, count);
    for (std::size_t j = 0; j < count; ++j) b.at(from + j, j) = 1;
    return Subspace(b);
}

Matrix LinearMap::apply(const Matrix& ambient) const {
    const auto x = source.coords(ambient);
    if (!x) throw std::invalid_argument("LinearMap::apply: vector outside source");
    return target.vec(coeffs * *x);
}

Report check_ad_invariance(const LieAlgebra& a, const BilinearForm& f) {
    Report r;
    if (f.dim() != a.dim()) {
        r.fail("invariance.dim", {}, std::to_string(f.dim()), std::to_string(a.dim()));
        return r;
    }
    const std::size_t n = a.dim();
    // ([e_i, e_j], e_k) + (e_j, [e_i, e_k]) = (ad_i^T g + g ad_i)[j][k].
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix adi = a.ad(basis_vector(n, i));
        const Matrix defect = adi.transpose() * f.gram() + f.gram() * adi;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (defect.at(j, k) != 0)
                    r.fail("invariance", {i, j, k}, rat_str(defect.at(j, k)),
                           "0");
    }
    return r;
}

bool is_isotropic(const BilinearForm& f, const Subspace& s) {
    return restricted_gram(f, s).is_zero();
}

bool is_lagrangian(const BilinearForm& f, const Subspace& s) {
    return is_isotropic(f, s) && 2 * s.dim() == s.ambient_dim();
}

Subspace orthogonal_complement(const BilinearForm& f, const Subspace& s) {
    return Subspace((s.basis().transpose() * f.gram()).kernel());
}

Matrix pairing_gram(const BilinearForm& f, const Subspace& a, const Subspace& b) {
    return a.basis().transpose() * f.gram() * b.basis();
}

Matrix restricted_gram(const BilinearForm& f, const Subspace& s) {
    return pairing_gram(f, s, s);
}

LinearMap transpose_map(const LinearMap& m, const BilinearForm& f_src,
                        const BilinearForm& f_tgt) {
    // Crossed regime: pairing of target against source under the (shared)
    // ambient form is nondegenerate; adjoint keeps direction.
    if (m.source.ambient_dim() == m.target.ambient_dim() &&
        f_src.gram() == f_tgt.gram()) {
        const Matrix w = pairing_gram(f_src, m.target, m.source);
        if (auto winv_t = w.transpose().inverse()) {
            return LinearMap{m.source, m.target,
                             *winv_t * m.coeffs.transpose() * w};
        }
    }
    // Restricted regime: both restrictions nondegenerate; adjoint swaps
    // direction.
    const Matrix gs = restricted_gram(f_src, m.source);
    const Matrix gt = restricted_gram(f_tgt, m.target);
    const auto gs_inv = gs.inverse();
    if (gs_inv && gt.inverse().has_value())
        return LinearMap{m.target, m.source, *gs_inv * m.coeffs.transpose() * gt};
    throw std::invalid_argument("transpose_map: degenerate restricted form");
}

std::pair<LinearMap, LinearMap> sym_skew_split(const LinearMap& m,
                                               const BilinearForm& f_src,
                                               const BilinearForm& f_tgt) {
    const LinearMap mt = transpose_map(m, f_src, f_tgt);
    if (!(mt.source == m.source))
        throw std::invalid_argument("sym_skew_split: adjoint changes direction");
    const Rational half(1, 2);
    LinearMap g{m.source, m.target, (m.coeffs + mt.coeffs) * half};
    LinearMap b{m.source, m.target, (m.coeffs - mt.coeffs) * half};
    return {g, b};
}

LieAlgebra opposite(const LieAlgebra& a) {
    LieAlgebra o(a.dim(), a.name() + "^op", a.basis_names());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k) o.c(i, j, k) = -a.c(i, j, k);
    return o;
}

Matrix projector(const Subspace& onto, const Subspace& along) {
    if (onto.ambient_dim() != along.ambient_dim() ||
        onto.dim() + along.dim() != onto.ambient_dim())
        throw std::invalid_argument("projector: subspaces not complementary");
    const Matrix p = Matrix::hcat(onto.basis(), along.basis());
    const auto pinv = p.inverse();
    if (!pinv) throw std::invalid_argument("projector: subspaces not complementary");
    return onto.basis() * pinv->block(0, 0, onto.dim(), onto.ambient_dim());
}

} // namespace mforge
