#include "maninforge/cps.hpp"

#include <stdexcept>

namespace mforge {

namespace {

/// Conjugates an adapted-basis block matrix back to ambient coordinates.
Matrix to_ambient(const Matrix& blocks, const Subspace& first,
                  const Subspace& second) {
    const Matrix p = Matrix::hcat(first.basis(), second.basis());
    const auto pinv = p.inverse();
    if (!pinv) throw std::invalid_argument("adapted basis is not complementary");
    return p * blocks * *pinv;
}

Matrix four_blocks(const Matrix& tl, const Matrix& tr, const Matrix& bl,
                   const Matrix& br) {
    return Matrix::vcat(Matrix::hcat(tl, tr), Matrix::hcat(bl, br));
}

/// Graph subspaces {x + (m)(x)} and {x + (m2)(x)} over the source basis.
Subspace graph_of(const LinearMap& m) {
    Matrix b(m.source.ambient_dim(), m.source.dim());
    for (std::size_t j = 0; j < m.source.dim(); ++j) {
        const Matrix x = basis_vector(m.source.dim(), j);
        b.set_column(j, m.source.vec(x) + m.target.vec(m.coeffs * x));
    }
    return Subspace(b);
}

} // namespace

std::pair<ComplexProductStructure, DoubleSplitting>
cps_from_anti_isometry(const BilinearForm& form, const LinearMap& phi) {
    const Subspace& ep = phi.source;
    const Subspace& em = phi.target;
    const std::size_t d = ep.dim();
    if (em.dim() != d || ep.ambient_dim() != form.dim())
        throw std::invalid_argument("cps_from_anti_isometry: dimension mismatch");
    if (!pairing_gram(form, ep, em).is_zero())
        throw std::invalid_argument("cps_from_anti_isometry: halves not orthogonal");
    const auto phi_inv = phi.coeffs.inverse();
    if (!phi_inv)
        throw std::invalid_argument("cps_from_anti_isometry: phi singular");
    const LinearMap phit = transpose_map(phi, form, form);
    if (!(phit.coeffs == -*phi_inv))
        throw std::invalid_argument("cps_from_anti_isometry: phi^T != -phi^-1");

    const Matrix id = Matrix::identity(d);
    const Matrix z = Matrix::zero(d, d);
    const Matrix e_blk = four_blocks(id, z, z, -id);
    const Matrix f_blk = four_blocks(z, *phi_inv, phi.coeffs, z);
    const Matrix j_blk = f_blk * e_blk;

    ComplexProductStructure c{to_ambient(e_blk, ep, em), to_ambient(j_blk, ep, em),
                              to_ambient(f_blk, ep, em), form};
    DoubleSplitting s{graph_of(phi),
                      graph_of(LinearMap{ep, em, -phi.coeffs}), ep, em};
    return {c, s};
}

std::pair<ComplexProductStructure, DoubleSplitting>
cps_from_metric(const BilinearForm& form, const LinearMap& G) {
    const Subspace& fp = G.source;
    const Subspace& fm = G.target;
    const std::size_t d = fp.dim();
    if (fm.dim() != d || fp.ambient_dim() != form.dim())
        throw std::invalid_argument("cps_from_metric: dimension mismatch");
    if (!is_lagrangian(form, fp) || !is_lagrangian(form, fm))
        throw std::invalid_argument("cps_from_metric: halves not Lagrangian");
    const LinearMap gt = transpose_map(G, form, form);
    if (!(gt.source == G.source) || !(gt.coeffs == G.coeffs))
        throw std::invalid_argument("cps_from_metric: G not symmetric");
    const auto ginv = G.coeffs.inverse();
    if (!ginv) throw std::invalid_argument("cps_from_metric: G singular");

    const Matrix id = Matrix::identity(d);
    const Matrix z = Matrix::zero(d, d);
    const Matrix e_blk = four_blocks(z, *ginv, G.coeffs, z);
    const Matrix f_blk = four_blocks(id, z, z, -id);
    const Matrix j_blk = f_blk * e_blk;

    ComplexProductStructure c{to_ambient(e_blk, fp, fm), to_ambient(j_blk, fp, fm),
                              to_ambient(f_blk, fp, fm), form};
    DoubleSplitting s{fp, fm, graph_of(G),
                      graph_of(LinearMap{fp, fm, -G.coeffs})};
    return {c, s};
}

std::pair<Subspace, Subspace> gauge_splitting(const LinearMap& G,
                                              const LinearMap& B) {
    if (!(G.source == B.source) || !(G.target == B.target))
        throw std::invalid_argument("gauge_splitting: base mismatch");
    return {graph_of(LinearMap{G.source, G.target, B.coeffs + G.coeffs}),
            graph_of(LinearMap{G.source, G.target, B.coeffs - G.coeffs})};
}

ComplexProductStructure cps_gauged(const BilinearForm& form, const LinearMap& G,
                                   const LinearMap& B) {
    if (!(G.source == B.source) || !(G.target == B.target))
        throw std::invalid_argument("cps_gauged: base mismatch");
    const auto ginv = G.coeffs.inverse();
    if (!ginv) throw std::invalid_argument("cps_gauged: G singular");
    const Matrix& g = G.coeffs;
    const Matrix& b = B.coeffs;
    const Matrix bgb = b * *ginv * b;
    const Matrix e_blk = Matrix::vcat(Matrix::hcat(-(*ginv * b), *ginv),
                                      Matrix::hcat(g - bgb, b * *ginv));
    const Matrix j_blk = Matrix::vcat(Matrix::hcat(-(*ginv * b), *ginv),
                                      Matrix::hcat(-g - bgb, b * *ginv));
    return ComplexProductStructure{to_ambient(e_blk, G.source, G.target),
                                   to_ambient(j_blk, G.source, G.target),
                                   to_ambient(j_blk * e_blk, G.source, G.target),
                                   form};
}

Report verify_cps(const ComplexProductStructure& c) {
    Report r;
    const std::size_t n = c.dim();
    const Matrix id = Matrix::identity(n);
    r.require_eq(c.E * c.E, id, "cps.e-squared", {});
    r.require_eq(c.J * c.J, -id, "cps.j-squared", {});
    r.require_eq(c.E * c.J + c.J * c.E, Matrix::zero(n, n), "cps.anticommute", {});
    r.require_eq(c.F, c.J * c.E, "cps.f-is-je", {});
    const Matrix& m = c.form.gram();
    r.require_eq(c.E.transpose() * m, m * c.E, "cps.e-symmetric", {});
    r.require_eq(c.J.transpose() * m, m * c.J, "cps.j-symmetric", {});
    r.require_eq(c.F.transpose() * m, -(m * c.F), "cps.f-skew", {});
    return r;
}

Subspace eigenspace(const Matrix& op, const Rational& eigenvalue) {
    if (eigenvalue != 1 && eigenvalue != -1)
        throw std::invalid_argument("eigenspace: only eigenvalues +1/-1 supported");
    if (!(op * op == Matrix::identity(op.rows())))
        throw std::invalid_argument("eigenspace: operator is not an involution");
    return Subspace((op - Matrix::identity(op.rows()) * eigenvalue).kernel());
}

std::optional<std::pair<LinearMap, LinearMap>> dual_gauge_data(const LinearMap& G,
                                                               const LinearMap& B) {
    const auto ginv = G.coeffs.inverse();
    if (!ginv) throw std::invalid_argument("dual_gauge_data: G singular");
    const Matrix core = G.coeffs - B.coeffs * *ginv * B.coeffs;
    const auto core_inv = core.inverse();
    if (!core_inv) return std::nullopt;
    LinearMap gtilde{G.target, G.source, *core_inv};
    LinearMap btilde{G.target, G.source, -(*ginv * B.coeffs * *core_inv)};
    return std::make_pair(gtilde, btilde);
}

NijenhuisTable nijenhuis_defect(const LieAlgebra& a, const Matrix& op,
                                StructureKind kind) {
    const std::size_t n = a.dim();
    const Matrix sq = op * op;
    const Matrix id = Matrix::identity(n);
    if (kind == StructureKind::Product && !(sq == id))
        throw std::invalid_argument("nijenhuis_defect: op^2 != I for product kind");
    if (kind == StructureKind::Complex && !(sq == -id))
        throw std::invalid_argument("nijenhuis_defect: op^2 != -I for complex kind");
    NijenhuisTable t;
    t.dim = n;
    t.defect.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix x = basis_vector(n, i);
        const Matrix ax = op * x;
        for (std::size_t j = 0; j < n; ++j) {
            const Matrix y = basis_vector(n, j);
            const Matrix ay = op * y;
            Matrix d = a.bracket(ax, ay) -
                       op * (a.bracket(ax, y) + a.bracket(x, ay));
            const Matrix xy = a.bracket(x, y);
            d = (kind == StructureKind::Product) ? d + xy : d - xy;
            t.defect.push_back(d);
        }
    }
    return t;
}

} // namespace mforge
