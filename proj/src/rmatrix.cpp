#include "maninforge/rmatrix.hpp"

#include <stdexcept>

namespace mforge {

std::pair<RMatrix, RMatrix> split_r(const RMatrix& r) {
    const Rational half(1, 2);
    RMatrix plus{r.algebra, (r.coeffs + r.coeffs.transpose()) * half};
    RMatrix minus{r.algebra, (r.coeffs - r.coeffs.transpose()) * half};
    return {plus, minus};
}

Matrix rhat(const RMatrix& r) { return r.coeffs.transpose(); }

Report check_cybe(const RMatrix& r) {
    Report rep;
    const std::size_t n = r.algebra.dim();
    const Matrix& c = r.coeffs;
    std::vector<Rational> t(n * n * n);
    const auto idx = [n](std::size_t i, std::size_t j, std::size_t k) {
        return (i * n + j) * n + k;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (c.at(a, b) == 0) continue;
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v < n; ++v) {
                    const Rational f = c.at(a, b) * c.at(u, v);
                    if (f == 0) continue;
                    for (std::size_t k = 0; k < n; ++k) {
                        // [r12, r13]: [e_a, e_u] (x) e_b (x) e_v
                        t[idx(k, b, v)] += f * r.algebra.c(a, u, k);
                        // [r12, r23]: e_a (x) [e_b, e_u] (x) e_v
                        t[idx(a, k, v)] += f * r.algebra.c(b, u, k);
                        // [r13, r23]: e_a (x) e_u (x) [e_b, e_v]
                        t[idx(a, u, k)] += f * r.algebra.c(b, v, k);
                    }
                }
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (t[idx(i, j, k)] != 0)
                    rep.fail("cybe", {i, j, k}, rat_str(t[idx(i, j, k)]), "0");
    return rep;
}

Report check_factorizable(const RMatrix& r) {
    Report rep;
    const auto [rp, rm] = split_r(r);
    const Matrix rhp = rhat(rp);
    rep.require(rhp.inverse().has_value(), "factorizable.invertible", {},
                rhp.str());
    const std::size_t n = r.algebra.dim();
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix adx = r.algebra.ad(basis_vector(n, i));
        rep.require_eq(rhp * adx.transpose() + adx * rhp, Matrix::zero(n, n),
                       "factorizable.invariance", {i});
    }
    return rep;
}

OOperator gb_from_r(const ManinTriple& t, const RMatrix& r) {
    const Report fact = check_factorizable(r);
    if (!fact.passed())
        throw std::invalid_argument("gb_from_r: r not factorizable: " +
                                    fact.summary());
    if (r.algebra.dim() != t.gminus.dim())
        throw std::invalid_argument("gb_from_r: r dimension mismatch");
    const Matrix psi = pairing_gram(t.form, t.gminus, t.gplus);
    const auto [rp, rm] = split_r(r);
    OOperator o;
    o.B = LinearMap{t.gplus, t.gminus, rhat(rm) * psi};
    o.G = LinearMap{t.gplus, t.gminus, rhat(rp) * psi};
    return o;
}

Report check_semenov(const SplitContext& sc, const OOperator& o) {
    Report rep;
    const auto ginv = o.G.coeffs.inverse();
    if (!ginv) throw std::invalid_argument("check_semenov: G singular");
    const LieAlgebra gm = sc.minus_algebra();
    const std::size_t m = gm.dim();
    // R = B G^-1 as an operator on minus coordinates.
    const Matrix rop = o.B.coeffs * *ginv;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const Matrix x = basis_vector(m, i);
            const Matrix y = basis_vector(m, j);
            const Matrix lhs = gm.bracket(rop * x, rop * y) -
                               rop * gm.bracket(rop * x, y) -
                               rop * gm.bracket(x, rop * y);
            rep.require_eq(lhs, -gm.bracket(x, y), "semenov", {i, j});
        }
    return rep;
}

Report check_semenov(const ManinTriple& t, const OOperator& o) {
    return check_semenov(t.context(), o);
}

LieAlgebra dual_bracket_from_r(const LieAlgebra& k, const RMatrix& r) {
    const std::size_t n = k.dim();
    const auto [rp, rm] = split_r(r);
    const Matrix rhm = rhat(rm);
    LieAlgebra dual(n, k.name() + "*");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const Matrix xi = basis_vector(n, a);
            const Matrix lm = basis_vector(n, b);
            const Matrix value = k.ad(rhm * lm).transpose() * xi -
                                 k.ad(rhm * xi).transpose() * lm;
            dual.set_bracket(a, b, value);
        }
    return dual;
}

std::vector<Matrix> cobracket_from_r(const LieAlgebra& k, const RMatrix& r) {
    const auto [rp, rm] = split_r(r);
    std::vector<Matrix> out;
    for (std::size_t z = 0; z < k.dim(); ++z) {
        const Matrix adz = k.ad(basis_vector(k.dim(), z));
        out.push_back(adz * rm.coeffs + rm.coeffs * adz.transpose());
    }
    return out;
}

Report check_dual_pairing(const LieAlgebra& k, const RMatrix& r) {
    Report rep;
    const LieAlgebra dual = dual_bracket_from_r(k, r);
    const std::vector<Matrix> delta = cobracket_from_r(k, r);
    const std::size_t n = k.dim();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t z = 0; z < n; ++z) {
                if (dual.c(a, b, z) != delta[z].at(a, b))
                    rep.fail("dual-pairing", {a, b, z}, rat_str(dual.c(a, b, z)),
                             rat_str(delta[z].at(a, b)));
            }
    return rep;
}

ManinTriple double_from_bialgebra(const LieAlgebra& k, const RMatrix& r) {
    const std::size_t n = k.dim();
    const LieAlgebra dual = dual_bracket_from_r(k, r);
    const auto [rp, rm] = split_r(r);
    const Matrix rhm = rhat(rm);

    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(k.basis_names()[i] + "*");
    for (std::size_t i = 0; i < n; ++i) names.push_back(k.basis_names()[i]);
    LieAlgebra g(2 * n, k.name() + "-double", names);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Matrix v(2 * n, 1);
            for (std::size_t l = 0; l < n; ++l) v.at(l, 0) = dual.c(i, j, l);
            g.set_bracket(i, j, v);
            Matrix w(2 * n, 1);
            for (std::size_t l = 0; l < n; ++l) w.at(n + l, 0) = k.c(i, j, l);
            g.set_bracket(n + i, n + j, w);
        }
    // [X, xi] = rhat-(ad*_X xi) + ad_X rhat-(xi) - ad*_X xi.
    for (std::size_t x = 0; x < n; ++x) {
        const Matrix adx = k.ad(basis_vector(n, x));
        for (std::size_t a = 0; a < n; ++a) {
            const Matrix xi = basis_vector(n, a);
            const Matrix adstar = adx.transpose() * xi;
            const Matrix in_k = rhm * adstar + adx * (rhm * xi);
            Matrix v(2 * n, 1);
            for (std::size_t l = 0; l < n; ++l) {
                v.at(l, 0) = -adstar.at(l, 0);
                v.at(n + l, 0) = in_k.at(l, 0);
            }
            g.set_bracket(n + x, a, v);
        }
    }
    Matrix gram(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        gram.at(i, n + i) = 1;
        gram.at(n + i, i) = 1;
    }
    return ManinTriple{g, BilinearForm(gram),
                       Subspace::coordinate(2 * n, 0, n),
                       Subspace::coordinate(2 * n, n, n)};
}

} // namespace mforge
