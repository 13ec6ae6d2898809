#include "maninforge/reverse.hpp"

#include <stdexcept>

namespace mforge {

namespace {

/// Plus-side bracket table in graph coordinates: [u_i, u_j] lies in F- and
/// both graphs are identified with E+ coordinate-wise, so the F- coordinates
/// of [u_i, u_j] recover the E+ structure constants.
LieAlgebra plus_table(const QuasiManinTriple& q) {
    const std::size_t n = q.Fplus.dim();
    LieAlgebra out(n, "Fplus");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Matrix b = q.g.bracket(q.Fplus.basis().column(i),
                                         q.Fplus.basis().column(j));
            const auto c = q.Fminus.coords(b);
            if (!c)
                throw std::invalid_argument(
                    "plus_table: [F+, F+] escapes F-");
            out.set_bracket(i, j, *c);
        }
    return out;
}

} // namespace

Report AntiIsoPair::validate() const {
    Report rep;
    const std::size_t p = eplus.dim();
    rep.require(eminus.dim() == p, "anti-iso.dims", {},
                std::to_string(eminus.dim()));
    rep.require(phi.rows() == p && phi.cols() == p, "anti-iso.phi-shape", {},
                phi.str());
    if (!rep.passed()) return rep;

    rep.merge(eplus.check_antisymmetry());
    rep.merge(eplus.check_jacobi());
    rep.merge(eminus.check_antisymmetry());
    rep.merge(eminus.check_jacobi());
    rep.merge(formplus.validate());
    rep.merge(formminus.validate());
    rep.merge(check_ad_invariance(eplus, formplus));
    rep.merge(check_ad_invariance(eminus, formminus));

    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j) {
            const Matrix x = basis_vector(p, i);
            const Matrix y = basis_vector(p, j);
            rep.require_eq(phi * eplus.bracket(x, y),
                           -eminus.bracket(phi * x, phi * y),
                           "anti-iso.antihom", {i, j});
        }

    rep.require_eq(formplus.gram(),
                   -phi.transpose() * formminus.gram() * phi,
                   "anti-iso.form", {});

    const auto phinv = phi.inverse();
    rep.require(phinv.has_value(), "anti-iso.invertible", {}, phi.str());
    if (phinv && formplus.gram().inverse()) {
        const Matrix adjoint =
            *formplus.gram().inverse() * phi.transpose() * formminus.gram();
        rep.require_eq(adjoint, -*phinv, "anti-iso.transpose", {});
    }
    return rep;
}

std::pair<LieAlgebra, BilinearForm> direct_sum_quadratic(const AntiIsoPair& p) {
    const std::size_t np = p.eplus.dim();
    const std::size_t nm = p.eminus.dim();
    std::vector<std::string> names = p.eplus.basis_names();
    names.insert(names.end(), p.eminus.basis_names().begin(),
                 p.eminus.basis_names().end());
    LieAlgebra g(np + nm, p.eplus.name() + "+" + p.eminus.name(), names);
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = i + 1; j < np; ++j) {
            Matrix v(np + nm, 1);
            for (std::size_t k = 0; k < np; ++k) v.at(k, 0) = p.eplus.c(i, j, k);
            g.set_bracket(i, j, v);
        }
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = i + 1; j < nm; ++j) {
            Matrix v(np + nm, 1);
            for (std::size_t k = 0; k < nm; ++k)
                v.at(np + k, 0) = p.eminus.c(i, j, k);
            g.set_bracket(np + i, np + j, v);
        }
    Matrix gram(np + nm, np + nm);
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = 0; j < np; ++j)
            gram.at(i, j) = p.formplus.gram().at(i, j);
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j < nm; ++j)
            gram.at(np + i, np + j) = p.formminus.gram().at(i, j);
    return {g, BilinearForm(gram)};
}

QuasiManinTriple quasi_manin_from_phi(const AntiIsoPair& p) {
    const std::size_t n = p.eplus.dim();
    if (p.eminus.dim() != n || p.phi.rows() != n || p.phi.cols() != n ||
        !p.phi.inverse())
        throw std::invalid_argument("quasi_manin_from_phi: phi must be an "
                                    "invertible square matrix between equal dims");
    auto [g, form] = direct_sum_quadratic(p);
    const Matrix id = Matrix::identity(n);
    return QuasiManinTriple{std::move(g), std::move(form),
                            Subspace(Matrix::vcat(id, p.phi)),
                            Subspace(Matrix::vcat(id, -p.phi))};
}

Report QuasiManinTriple::verify() const {
    Report rep;
    rep.merge(g.check_antisymmetry());
    rep.merge(g.check_jacobi());
    rep.merge(form.validate());
    rep.merge(check_ad_invariance(g, form));
    rep.require(is_lagrangian(form, Fplus), "quasi.plus-lagrangian", {},
                Fplus.basis().str());
    rep.require(is_lagrangian(form, Fminus), "quasi.minus-lagrangian", {},
                Fminus.basis().str());
    rep.require(Matrix::hcat(Fplus.basis(), Fminus.basis()).rank() == g.dim(),
                "quasi.complementary", {}, "");
    const std::size_t np = Fplus.dim();
    const std::size_t nm = Fminus.dim();
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = i + 1; j < nm; ++j) {
            const Matrix b = g.bracket(Fminus.basis().column(i),
                                       Fminus.basis().column(j));
            rep.require(Fminus.contains(b), "quasi.minus-closed", {i, j}, b.str());
        }
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = i + 1; j < np; ++j) {
            const Matrix b = g.bracket(Fplus.basis().column(i),
                                       Fplus.basis().column(j));
            rep.require(Fminus.contains(b), "quasi.plus-into-minus", {i, j},
                        b.str());
        }
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = 0; j < nm; ++j) {
            const Matrix b = g.bracket(Fplus.basis().column(i),
                                       Fminus.basis().column(j));
            rep.require(Fplus.contains(b), "quasi.crossed-into-plus", {i, j},
                        b.str());
        }
    return rep;
}

LinearMap metric_from_phi(const QuasiManinTriple& q) {
    return LinearMap{q.Fplus, q.Fminus, Matrix::identity(q.Fplus.dim())};
}

Report check_metric_from_phi(const QuasiManinTriple& q, const LinearMap& G) {
    Report rep;
    const LinearMap gt = transpose_map(G, q.form, q.form);
    rep.require_eq(gt.coeffs, G.coeffs, "reverse.metric-symmetric", {});
    rep.merge(check_invariant_extension(q.context(), G));
    return rep;
}

Report check_theta(const LieAlgebra& eplus, const BilinearForm& formplus,
                   const Matrix& theta) {
    Report rep;
    const std::size_t n = eplus.dim();
    rep.require_eq(theta.transpose() * formplus.gram() +
                       formplus.gram() * theta,
                   Matrix::zero(n, n), "theta.skew", {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Matrix x = basis_vector(n, i);
            const Matrix y = basis_vector(n, j);
            const Matrix lhs = eplus.bracket(theta * x, theta * y) -
                               theta * eplus.bracket(theta * x, y) -
                               theta * eplus.bracket(x, theta * y);
            rep.require_eq(lhs, -eplus.bracket(x, y), "theta.mcybe", {i, j});
        }
    return rep;
}

OOperator b_from_theta(const QuasiManinTriple& q, const Matrix& theta,
                       bool force) {
    if (!force) {
        // The crossed pairing (u_i, v_j) is twice the plus-side Gram matrix,
        // so skewness against it is equivalent to skewness on E+.
        const Report rep = check_theta(
            plus_table(q), BilinearForm(pairing_gram(q.form, q.Fplus, q.Fminus)),
            theta);
        if (!rep.passed())
            throw std::invalid_argument("b_from_theta: invalid theta: " +
                                        rep.summary());
    }
    OOperator o;
    o.B = LinearMap{q.Fplus, q.Fminus, theta};
    o.G = LinearMap{q.Fplus, q.Fminus, Matrix::identity(q.Fplus.dim())};
    return o;
}

LieAlgebra theta_bracket(const LieAlgebra& eplus, const Matrix& theta) {
    const std::size_t n = eplus.dim();
    LieAlgebra out(n, eplus.name() + "_theta", eplus.basis_names());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Matrix x = basis_vector(n, i);
            const Matrix y = basis_vector(n, j);
            out.set_bracket(i, j, eplus.bracket(theta * x, y) -
                                      eplus.bracket(theta * y, x));
        }
    return out;
}

ReverseResult build_manin_from_orthogonal(const AntiIsoPair& p,
                                          const Matrix& theta) {
    const Report pair_rep = p.validate();
    if (!pair_rep.passed())
        throw std::invalid_argument("build_manin_from_orthogonal: invalid "
                                    "pair: " + pair_rep.summary());
    const Report theta_rep = check_theta(p.eplus, p.formplus, theta);
    if (!theta_rep.passed())
        throw std::invalid_argument("build_manin_from_orthogonal: invalid "
                                    "theta: " + theta_rep.summary());

    ReverseResult out;
    out.quasi = quasi_manin_from_phi(p);
    out.report.merge(out.quasi.verify());

    const LinearMap G = metric_from_phi(out.quasi);
    out.report.merge(check_metric_from_phi(out.quasi, G));

    out.op = b_from_theta(out.quasi, theta, /*force=*/true);
    const SplitContext sc = out.quasi.context();
    out.report.merge(validate_o_operator(sc, out.op));

    // The induced plus bracket agrees with the theta bracket on the graph
    // coordinates.
    const LieAlgebra bb = bracket_B(sc, out.op, /*force=*/true);
    const LieAlgebra tb = theta_bracket(p.eplus, theta);
    const std::size_t n = p.eplus.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Matrix lhs(n, 1), rhs(n, 1);
            for (std::size_t k = 0; k < n; ++k) {
                lhs.at(k, 0) = bb.c(i, j, k);
                rhs.at(k, 0) = tb.c(i, j, k);
            }
            out.report.require_eq(lhs, rhs, "reverse.bracket-theta", {i, j});
        }

    GtildeResult gt = build_gtilde_B(sc, out.op);
    out.report.merge(gt.report);
    out.tw = gt.tw;
    if (!out.tw.form)
        throw std::logic_error("build_manin_from_orthogonal: missing form");
    out.triple = ManinTriple{out.tw.algebra, *out.tw.form, out.tw.plus_side,
                             out.tw.minus_side};

    IdealSplit ids = split_ideals(out.tw, out.op);
    out.report.merge(ids.report);
    out.EplusB = ids.Eplus;
    out.EminusB = ids.Eminus;

    // Theta-ideal closed form: with Theta±(X) = (X, (theta ± I)X) in twilled
    // coordinates, [Theta±X, Theta±Y] = ±2 Theta±([X, Y]).
    const Matrix id = Matrix::identity(n);
    const auto embed = [&](int sign, const Matrix& x) {
        return Matrix::vcat(x, (theta + Rational(sign) * id) * x);
    };
    for (int sign : {+1, -1}) {
        const std::string tag = sign > 0 ? "reverse.closed-form.plus"
                                         : "reverse.closed-form.minus";
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const Matrix x = basis_vector(n, i);
                const Matrix y = basis_vector(n, j);
                const Matrix lhs = out.tw.algebra.bracket(embed(sign, x),
                                                          embed(sign, y));
                const Matrix rhs =
                    Rational(2 * sign) * embed(sign, p.eplus.bracket(x, y));
                out.report.require_eq(lhs, rhs, tag, {i, j});
            }
    }
    return out;
}

} // namespace mforge
