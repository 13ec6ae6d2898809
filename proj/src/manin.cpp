#include "maninforge/manin.hpp"

#include <stdexcept>

namespace mforge {

namespace {

/// Structure constants of a bracket-closed subspace in its declared basis.
LieAlgebra restrict_algebra(const LieAlgebra& g, const Subspace& s,
                            const std::string& name) {
    LieAlgebra out(s.dim(), name);
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = i + 1; j < s.dim(); ++j) {
            const Matrix br = g.bracket(s.basis().column(i), s.basis().column(j));
            const auto coords = s.coords(br);
            if (!coords)
                throw std::invalid_argument("restrict_algebra: subspace " + name +
                                            " not closed under the bracket");
            out.set_bracket(i, j, *coords);
        }
    return out;
}

} // namespace

LieAlgebra SplitContext::minus_algebra() const {
    return restrict_algebra(g, minus, g.name() + ".minus");
}

LieAlgebra SplitContext::plus_algebra() const {
    return restrict_algebra(g, plus, g.name() + ".plus");
}

Report verify_manin_triple(const ManinTriple& t) {
    Report r;
    r.merge(t.g.check_antisymmetry());
    r.merge(t.g.check_jacobi());
    r.merge(t.form.validate());
    r.merge(check_ad_invariance(t.g, t.form));
    r.require(is_lagrangian(t.form, t.gplus), "manin.plus-lagrangian", {},
              restricted_gram(t.form, t.gplus).str());
    r.require(is_lagrangian(t.form, t.gminus), "manin.minus-lagrangian", {},
              restricted_gram(t.form, t.gminus).str());
    const bool complementary =
        t.gplus.dim() + t.gminus.dim() == t.g.dim() &&
        Matrix::hcat(t.gplus.basis(), t.gminus.basis()).rank() == t.g.dim();
    r.require(complementary, "manin.complementary", {}, "");
    for (std::size_t i = 0; i < t.gplus.dim(); ++i)
        for (std::size_t j = i + 1; j < t.gplus.dim(); ++j) {
            const Matrix br =
                t.g.bracket(t.gplus.basis().column(i), t.gplus.basis().column(j));
            r.require(t.gplus.contains(br), "manin.plus-closed", {i, j}, br.str());
        }
    for (std::size_t i = 0; i < t.gminus.dim(); ++i)
        for (std::size_t j = i + 1; j < t.gminus.dim(); ++j) {
            const Matrix br =
                t.g.bracket(t.gminus.basis().column(i), t.gminus.basis().column(j));
            r.require(t.gminus.contains(br), "manin.minus-closed", {i, j}, br.str());
        }
    return r;
}

Matrix dressing(const SplitContext& sc, const Matrix& xminus, const Matrix& yplus) {
    if (!sc.minus.contains(xminus) || !sc.plus.contains(yplus))
        throw std::invalid_argument("dressing: inputs outside declared subspaces");
    const Matrix projected = sc.proj_plus() * sc.g.bracket(xminus, yplus);
    return *sc.plus.coords(projected);
}

Matrix dressing(const ManinTriple& t, const Matrix& xminus, const Matrix& yplus) {
    return dressing(t.context(), xminus, yplus);
}

Report check_invariant_extension(const SplitContext& sc, const LinearMap& G) {
    Report r;
    const std::size_t p = sc.plus.dim();
    const std::size_t m = sc.minus.dim();
    for (std::size_t i = 0; i < m; ++i) {
        const Matrix xm = sc.minus.basis().column(i);
        for (std::size_t j = 0; j < p; ++j) {
            const Matrix yp = sc.plus.basis().column(j);
            const Matrix lhs = G.target.vec(G.coeffs * dressing(sc, xm, yp));
            const Matrix rhs = sc.g.bracket(xm, G.target.vec(G.coeffs * basis_vector(p, j)));
            r.require_eq(lhs, rhs, "invariant-extension", {i, j});
        }
    }
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            const Matrix gx = G.target.vec(G.coeffs * basis_vector(p, i));
            const Matrix gy = G.target.vec(G.coeffs * basis_vector(p, j));
            const Matrix sum = dressing(sc, gx, sc.plus.basis().column(j)) +
                               dressing(sc, gy, sc.plus.basis().column(i));
            r.require_eq(sum, Matrix::zero(p, 1), "invariant-extension.antisym",
                         {i, j});
        }
    return r;
}

Report check_invariant_extension(const ManinTriple& t, const LinearMap& G) {
    return check_invariant_extension(t.context(), G);
}

Report check_o_operator(const SplitContext& sc, const OOperator& o) {
    Report r;
    const std::size_t p = sc.plus.dim();
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j) {
            const Matrix x = basis_vector(p, i);
            const Matrix y = basis_vector(p, j);
            const Matrix bx = o.B.target.vec(o.B.coeffs * x);
            const Matrix by = o.B.target.vec(o.B.coeffs * y);
            const Matrix gx = o.G.target.vec(o.G.coeffs * x);
            const Matrix gy = o.G.target.vec(o.G.coeffs * y);
            const Matrix sigma_part =
                dressing(sc, bx, sc.plus.basis().column(j)) -
                dressing(sc, by, sc.plus.basis().column(i));
            const Matrix lhs =
                sc.g.bracket(bx, by) - o.B.target.vec(o.B.coeffs * sigma_part);
            const Matrix rhs = sc.g.bracket(gx, gy) * o.mass;
            r.require_eq(lhs, rhs, "o-operator.mass", {i, j});
        }
    return r;
}

Report check_o_operator(const ManinTriple& t, const OOperator& o) {
    return check_o_operator(t.context(), o);
}

Report validate_o_operator(const SplitContext& sc, const OOperator& o) {
    Report r;
    r.require(o.B.source == sc.plus && o.B.target == sc.minus &&
                  o.G.source == sc.plus && o.G.target == sc.minus,
              "o-operator.bases", {}, "maps must go plus -> minus");
    if (!r.passed()) return r;
    const LinearMap bt = transpose_map(o.B, sc.form, sc.form);
    const LinearMap gt = transpose_map(o.G, sc.form, sc.form);
    r.require_eq(bt.coeffs, -o.B.coeffs, "o-operator.twist-skew", {});
    r.require_eq(gt.coeffs, o.G.coeffs, "o-operator.metric-symmetric", {});
    r.require(o.G.coeffs.inverse().has_value(), "o-operator.metric-invertible",
              {}, o.G.coeffs.str());
    r.merge(check_invariant_extension(sc, o.G));
    r.merge(check_o_operator(sc, o));
    return r;
}

LieAlgebra bracket_B(const SplitContext& sc, const OOperator& o, bool force) {
    if (!force) {
        const Report ok = check_o_operator(sc, o);
        if (!ok.passed())
            throw std::invalid_argument("bracket_B: O-operator check failed: " +
                                        ok.summary());
    }
    const std::size_t p = sc.plus.dim();
    LieAlgebra out(p, sc.g.name() + ".bracket-B");
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j) {
            const Matrix bx = o.B.target.vec(o.B.coeffs * basis_vector(p, i));
            const Matrix by = o.B.target.vec(o.B.coeffs * basis_vector(p, j));
            out.set_bracket(i, j,
                            dressing(sc, bx, sc.plus.basis().column(j)) -
                                dressing(sc, by, sc.plus.basis().column(i)));
        }
    return out;
}

LieAlgebra bracket_B(const ManinTriple& t, const OOperator& o, bool force) {
    return bracket_B(t.context(), o, force);
}

Report check_graph_homomorphism(const SplitContext& sc, const OOperator& o) {
    Report r;
    const LieAlgebra lb = bracket_B(sc, o, /*force=*/true);
    const std::size_t p = sc.plus.dim();
    for (int sign : {+1, -1}) {
        const Matrix graph_map =
            (sign > 0) ? o.B.coeffs + o.G.coeffs : o.B.coeffs - o.G.coeffs;
        const std::string tag = (sign > 0) ? "graph-homomorphism.plus"
                                           : "graph-homomorphism.minus";
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = i + 1; j < p; ++j) {
                const Matrix x = basis_vector(p, i);
                const Matrix y = basis_vector(p, j);
                const Matrix lhs = o.B.target.vec(
                    graph_map * lb.bracket(x, y));
                const Matrix rhs = sc.g.bracket(o.B.target.vec(graph_map * x),
                                                o.B.target.vec(graph_map * y));
                r.require_eq(lhs, rhs, tag, {i, j});
            }
    }
    return r;
}

Report check_graph_homomorphism(const ManinTriple& t, const OOperator& o) {
    return check_graph_homomorphism(t.context(), o);
}

} // namespace mforge
