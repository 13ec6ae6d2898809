#include "maninforge/twilled.hpp"

#include "maninforge/cps.hpp"

#include <stdexcept>

namespace mforge {

namespace {

/// Raw bracket assembly on the plus(+)minus coordinate space, without any
/// validation. Plus block first, minus block second.
LieAlgebra assemble(const LieAlgebra& gplus, const LieAlgebra& gminus,
                    const ActionPair& a, const std::string& name) {
    const std::size_t p = gplus.dim();
    const std::size_t m = gminus.dim();
    LieAlgebra t(p + m, name);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j) {
            Matrix v(p + m, 1);
            for (std::size_t k = 0; k < p; ++k) v.at(k, 0) = gplus.c(i, j, k);
            t.set_bracket(i, j, v);
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Matrix v(p + m, 1);
            for (std::size_t k = 0; k < m; ++k) v.at(p + k, 0) = gminus.c(i, j, k);
            t.set_bracket(p + i, p + j, v);
        }
    // [f_i, e_j] = sigma_{f_i} e_j - rho_{e_j} f_i.
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            Matrix v(p + m, 1);
            for (std::size_t k = 0; k < p; ++k) v.at(k, 0) = a.sigma_at(i, j, k);
            for (std::size_t l = 0; l < m; ++l) v.at(p + l, 0) = -a.rho_at(j, i, l);
            t.set_bracket(p + i, j, v);
        }
    return t;
}

} // namespace

ActionPair ActionPair::zero(std::size_t p, std::size_t m) {
    ActionPair a;
    a.p = p;
    a.m = m;
    a.sigma.assign(m * p * p, Rational(0));
    a.rho.assign(p * m * m, Rational(0));
    return a;
}

Matrix ActionPair::sigma_map(std::size_t i) const {
    Matrix out(p, p);
    for (std::size_t j = 0; j < p; ++j)
        for (std::size_t k = 0; k < p; ++k) out.at(k, j) = sigma_at(i, j, k);
    return out;
}

Matrix ActionPair::rho_map(std::size_t j) const {
    Matrix out(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < m; ++l) out.at(l, i) = rho_at(j, i, l);
    return out;
}

Matrix ActionPair::sigma_apply(const Matrix& xminus, const Matrix& yplus) const {
    Matrix out(p, 1);
    for (std::size_t i = 0; i < m; ++i) {
        if (xminus.at(i, 0) == 0) continue;
        out = out + sigma_map(i) * yplus * xminus.at(i, 0);
    }
    return out;
}

Matrix ActionPair::rho_apply(const Matrix& yplus, const Matrix& xminus) const {
    Matrix out(m, 1);
    for (std::size_t j = 0; j < p; ++j) {
        if (yplus.at(j, 0) == 0) continue;
        out = out + rho_map(j) * xminus * yplus.at(j, 0);
    }
    return out;
}

ActionPair ActionPair::negated_rho() const {
    ActionPair a = *this;
    for (auto& x : a.rho) x = -x;
    return a;
}

Report check_sigma_representation(const LieAlgebra& gminus, const ActionPair& a) {
    Report r;
    for (std::size_t i = 0; i < a.m; ++i)
        for (std::size_t j = i + 1; j < a.m; ++j) {
            Matrix lhs(a.p, a.p);
            for (std::size_t l = 0; l < a.m; ++l) {
                const Rational& c = gminus.c(i, j, l);
                if (c != 0) lhs = lhs + a.sigma_map(l) * c;
            }
            const Matrix rhs =
                a.sigma_map(i) * a.sigma_map(j) - a.sigma_map(j) * a.sigma_map(i);
            r.require_eq(lhs, rhs, "sigma-representation", {i, j});
        }
    return r;
}

Report check_twilled_constraints(const LieAlgebra& gplus, const LieAlgebra& gminus,
                                 const ActionPair& a) {
    Report r;
    if (gplus.dim() != a.p || gminus.dim() != a.m) {
        r.fail("twilled.dims", {}, std::to_string(gplus.dim()),
               std::to_string(a.p));
        return r;
    }
    const LieAlgebra t = assemble(gplus, gminus, a, "candidate");
    const std::size_t p = a.p;
    const std::size_t n = p + a.m;
    const Report jac = t.check_jacobi();
    for (const auto& f : jac.failures()) {
        const std::size_t plus_count = static_cast<std::size_t>(f.witness[0] < p) +
                                       static_cast<std::size_t>(f.witness[1] < p) +
                                       static_cast<std::size_t>(f.witness[2] < p);
        std::string tag;
        switch (plus_count) {
            case 3: tag = "twilled.plus-jacobi"; break;
            case 2: tag = "twilled.cocycle.rho"; break;
            case 1: tag = "twilled.cocycle.sigma"; break;
            default: tag = "twilled.minus-jacobi"; break;
        }
        r.fail(tag, f.witness, f.lhs, f.rhs);
    }
    (void)n;
    return r;
}

Matrix TwilledAlgebra::to_twilled(const Matrix& ambient) const {
    const auto x = embedding.solve(ambient);
    if (!x) throw std::invalid_argument("to_twilled: vector outside embedding");
    return *x;
}

TwilledAlgebra build_twilled(const LieAlgebra& gplus, const LieAlgebra& gminus,
                             const ActionPair& a, int plus_sign) {
    if (plus_sign != 1 && plus_sign != -1)
        throw std::invalid_argument("build_twilled: sign must be +1 or -1");
    const LieAlgebra eff_plus = (plus_sign > 0) ? gplus : opposite(gplus);
    const ActionPair eff = (plus_sign > 0) ? a : a.negated_rho();
    const Report constraints = check_twilled_constraints(eff_plus, gminus, eff);
    if (!constraints.passed())
        throw std::invalid_argument("build_twilled: constraint failure: " +
                                    constraints.summary());
    const std::size_t p = gplus.dim();
    const std::size_t m = gminus.dim();
    TwilledAlgebra tw;
    tw.algebra = assemble(eff_plus, gminus, eff,
                          gplus.name() + "(x)" + gminus.name());
    tw.plus_side = Subspace::coordinate(p + m, 0, p);
    tw.minus_side = Subspace::coordinate(p + m, p, m);
    tw.source_plus = gplus;
    tw.source_minus = gminus;
    tw.effective = eff;
    tw.plus_sign = plus_sign;
    tw.embedding = Matrix::identity(p + m);
    return tw;
}

ActionPair coboundary_rho(const SplitContext& sc, const LinearMap& B) {
    const std::size_t p = sc.plus.dim();
    const std::size_t m = sc.minus.dim();
    ActionPair a = ActionPair::zero(p, m);
    for (std::size_t i = 0; i < m; ++i) {
        const Matrix fi = sc.minus.basis().column(i);
        for (std::size_t j = 0; j < p; ++j) {
            const Matrix sig = dressing(sc, fi, sc.plus.basis().column(j));
            for (std::size_t k = 0; k < p; ++k) a.sigma_at(i, j, k) = sig.at(k, 0);
            // rho_{e_j} f_i = B sigma_{f_i} e_j - [f_i, B e_j].
            const Matrix bej = B.target.vec(B.coeffs * basis_vector(p, j));
            const Matrix amb =
                B.target.vec(B.coeffs * sig) - sc.g.bracket(fi, bej);
            const auto rho = sc.minus.coords(amb);
            if (!rho)
                throw std::invalid_argument(
                    "coboundary_rho: value escapes the minus side");
            for (std::size_t l = 0; l < m; ++l) a.rho_at(j, i, l) = rho->at(l, 0);
        }
    }
    return a;
}

GtildeResult build_gtilde_B(const SplitContext& sc, const OOperator& o) {
    GtildeResult out;
    const LieAlgebra lb = bracket_B(sc, o);
    const LieAlgebra gminus_alg = sc.minus_algebra();
    const ActionPair actions = coboundary_rho(sc, o.B);
    out.tw = build_twilled(lb, gminus_alg, actions, -1);

    const std::size_t p = sc.plus.dim();
    const std::size_t m = sc.minus.dim();
    out.tw.embedding = Matrix::hcat(sc.plus.basis(), sc.minus.basis());
    out.tw.form = BilinearForm(out.tw.embedding.transpose() * sc.form.gram() *
                               out.tw.embedding);

    // Literal closed form of the bracket, checked term-by-term against the
    // assembled structure constants on every basis pair.
    const Matrix proj = sc.proj_plus();
    const auto bmap = [&](const Matrix& amb) {
        const auto c = sc.plus.coords(proj * amb);
        return o.B.target.vec(o.B.coeffs * *c);
    };
    for (std::size_t alpha = 0; alpha < p + m; ++alpha)
        for (std::size_t beta = alpha + 1; beta < p + m; ++beta) {
            const Matrix xa = out.tw.embedding.column(alpha);
            const Matrix xb = out.tw.embedding.column(beta);
            const Matrix xap = proj * xa, xbm = xb - proj * xb;
            const Matrix xam = xa - xap, xbp = proj * xb;
            // -[X+,Y+]_B + [X-,Y-] + sigma_{X-}Y+ - sigma_{Y-}X+
            //   + B Pi[X+,Y-] - [BX+,Y-] - B Pi[Y+,X-] + [BY+,X-]
            Matrix literal = sc.g.bracket(xam, xbm);
            {
                const auto ca = sc.plus.coords(xap);
                const auto cb = sc.plus.coords(xbp);
                literal = literal - sc.plus.vec(lb.bracket(*ca, *cb));
            }
            if (!xam.is_zero() && !xbp.is_zero())
                literal = literal +
                          sc.plus.vec(dressing(sc, xam, xbp));
            if (!xbm.is_zero() && !xap.is_zero())
                literal = literal -
                          sc.plus.vec(dressing(sc, xbm, xap));
            literal = literal + bmap(sc.g.bracket(xap, xbm)) -
                      sc.g.bracket(bmap(xap), xbm) -
                      bmap(sc.g.bracket(xbp, xam)) + sc.g.bracket(bmap(xbp), xam);
            const Matrix assembled = out.tw.algebra.bracket(
                basis_vector(p + m, alpha), basis_vector(p + m, beta));
            out.report.require_eq(assembled, out.tw.to_twilled(literal),
                                  "gtilde.literal", {alpha, beta});
        }

    out.report.merge(check_ad_invariance(out.tw.algebra, *out.tw.form));
    out.report.merge(verify_manin_triple(ManinTriple{
        out.tw.algebra, *out.tw.form, out.tw.plus_side, out.tw.minus_side}));
    return out;
}

namespace {

/// Twilled-coordinate vector (x, (B ± G)x) over plus coordinates x.
Matrix graph_vec(const OOperator& o, int sign, const Matrix& x) {
    const Matrix gm = (sign > 0) ? o.B.coeffs + o.G.coeffs
                                 : o.B.coeffs - o.G.coeffs;
    return Matrix::vcat(x, gm * x);
}

Matrix embed_minus(std::size_t p, const Matrix& xm) {
    return Matrix::vcat(Matrix::zero(p, 1), xm);
}

} // namespace

IdealSplit split_ideals(const TwilledAlgebra& tw, const OOperator& o) {
    IdealSplit out;
    const std::size_t p = tw.source_plus.dim();
    const std::size_t m = tw.source_minus.dim();
    std::vector<Matrix> up, um;
    for (std::size_t j = 0; j < p; ++j) {
        up.push_back(graph_vec(o, +1, basis_vector(p, j)));
        um.push_back(graph_vec(o, -1, basis_vector(p, j)));
    }
    out.Eplus = Subspace(Matrix::from_columns(up));
    out.Eminus = Subspace(Matrix::from_columns(um));

    const auto ginv = o.G.coeffs.inverse();
    if (!ginv) throw std::invalid_argument("split_ideals: G singular");

    for (int sign : {+1, -1}) {
        const Subspace& e = (sign > 0) ? out.Eplus : out.Eminus;
        const std::string side = (sign > 0) ? ".plus" : ".minus";
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = i + 1; j < p; ++j) {
                const Matrix br = tw.algebra.bracket(e.basis().column(i),
                                                     e.basis().column(j));
                out.report.require(e.contains(br), "ideal.closed" + side, {i, j},
                                   br.str());
                // [(I+B±G)X, (I+B±G)Y] = ±2 (I+B±G) G^-1 [GX, GY].
                const Matrix core =
                    *ginv * tw.source_minus.bracket(
                                o.G.coeffs * basis_vector(p, i),
                                o.G.coeffs * basis_vector(p, j));
                const Matrix rhs = graph_vec(o, sign, core) * Rational(2 * sign);
                out.report.require_eq(br, rhs, "ideal.closed-form" + side, {i, j});
            }
    }
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            const Matrix br = tw.algebra.bracket(out.Eplus.basis().column(i),
                                                 out.Eminus.basis().column(j));
            out.report.require_eq(br, Matrix::zero(p + m, 1), "ideal.crossed",
                                  {i, j});
        }
    if (tw.form) {
        out.report.require(
            pairing_gram(*tw.form, out.Eplus, out.Eminus).is_zero(),
            "ideal.orthogonal", {},
            pairing_gram(*tw.form, out.Eplus, out.Eminus).str());
    }
    out.report.require(
        Matrix::hcat(out.Eplus.basis(), out.Eminus.basis()).rank() == p + m,
        "ideal.complementary", {}, "");

    // X- -> 1/2 (I+B±G) G^-1 X- is an injective homomorphism (plus sign) /
    // antihomomorphism (minus sign) onto the ideal.
    const Rational half(1, 2);
    for (int sign : {+1, -1}) {
        const std::string side = (sign > 0) ? ".plus" : ".minus";
        std::vector<Matrix> cols;
        for (std::size_t i = 0; i < m; ++i)
            cols.push_back(graph_vec(o, sign, *ginv * basis_vector(m, i)) * half);
        const Matrix psi = Matrix::from_columns(cols);
        out.report.require(psi.rank() == m, "ideal.minus-iso.injective" + side,
                           {}, psi.str());
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                const Matrix lhs =
                    tw.algebra.bracket(psi.column(i), psi.column(j));
                const Matrix rhs = psi *
                                   tw.source_minus.bracket(basis_vector(m, i),
                                                           basis_vector(m, j)) *
                                   Rational(sign);
                out.report.require_eq(lhs, rhs, "ideal.minus-iso" + side, {i, j});
            }
    }
    return out;
}

PhiBResult phi_B(const TwilledAlgebra& tw, const OOperator& o) {
    PhiBResult out;
    const IdealSplit ideals = split_ideals(tw, o);
    const std::size_t p = tw.source_plus.dim();
    out.map = LinearMap{ideals.Eplus, ideals.Eminus, Matrix::identity(p)};

    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j) {
            const Matrix br = tw.algebra.bracket(ideals.Eplus.basis().column(i),
                                                 ideals.Eplus.basis().column(j));
            const auto coords = ideals.Eplus.coords(br);
            if (!coords) {
                out.report.fail("phi.antihom", {i, j}, br.str(),
                                "not in the plus ideal");
                continue;
            }
            const Matrix lhs = ideals.Eminus.vec(*coords);
            const Matrix rhs =
                -tw.algebra.bracket(ideals.Eminus.basis().column(i),
                                    ideals.Eminus.basis().column(j));
            out.report.require_eq(lhs, rhs, "phi.antihom", {i, j});
        }

    if (tw.form) {
        const LinearMap phit = transpose_map(out.map, *tw.form, *tw.form);
        out.report.require_eq(phit.coeffs, -Matrix::identity(p),
                              "phi.anti-isometry", {});
        // Operator form E[JX, JY] = J[X, Y] for the gauged structure, in
        // twilled coordinates.
        const std::size_t n = tw.algebra.dim();
        const LinearMap gmap{tw.plus_side, tw.minus_side, o.G.coeffs};
        const LinearMap bmap{tw.plus_side, tw.minus_side, o.B.coeffs};
        const ComplexProductStructure c = cps_gauged(*tw.form, gmap, bmap);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                const Matrix x = basis_vector(n, a);
                const Matrix y = basis_vector(n, b);
                const Matrix lhs =
                    c.E * tw.algebra.bracket(c.J * x, c.J * y);
                const Matrix rhs = c.J * tw.algebra.bracket(x, y);
                out.report.require_eq(lhs, rhs, "phi.ejj", {a, b});
            }
    }
    return out;
}

Report nijenhuis_phi(const TwilledAlgebra& tw, const OOperator& o) {
    Report r;
    const IdealSplit ideals = split_ideals(tw, o);
    const std::size_t p = tw.source_plus.dim();
    const auto ginv = o.G.coeffs.inverse();
    if (!ginv) throw std::invalid_argument("nijenhuis_phi: G singular");
    const Rational half(1, 2);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j) {
            const Matrix ui = ideals.Eplus.basis().column(i);
            const Matrix uj = ideals.Eplus.basis().column(j);
            const Matrix vi = ideals.Eminus.basis().column(i);
            const Matrix vj = ideals.Eminus.basis().column(j);
            const Matrix bpp = tw.algebra.bracket(ui, uj);
            const Matrix bmm = tw.algebra.bracket(vi, vj);
            const auto cpp = ideals.Eplus.coords(bpp);
            const auto cmm = ideals.Eminus.coords(bmm);
            if (!cpp || !cmm) {
                r.fail("nijenhuis.closed-form", {i, j}, bpp.str(), bmm.str());
                continue;
            }
            const Matrix n_phi = ideals.Eminus.vec(*cpp) +
                                 ideals.Eplus.vec(*cmm) -
                                 tw.algebra.bracket(vi, uj) -
                                 tw.algebra.bracket(ui, vj);
            const Matrix core = tw.source_minus.bracket(
                o.G.coeffs * basis_vector(p, i), o.G.coeffs * basis_vector(p, j));
            r.require_eq(n_phi, embed_minus(p, core * Rational(-4)),
                         "nijenhuis.closed-form", {i, j});
            // [X+,Y+] = -1/2 (I+B+G) G^-1 N ; [X-,Y-] = +1/2 (I+B-G) G^-1 N.
            const Matrix gcore = *ginv * core * Rational(-4);
            r.require_eq(bpp, graph_vec(o, +1, gcore) * -half,
                         "nijenhuis.bracket-relation.plus", {i, j});
            r.require_eq(bmm, graph_vec(o, -1, gcore) * half,
                         "nijenhuis.bracket-relation.minus", {i, j});
        }
    return r;
}

Report adjoint_intertwiner_check(const TwilledAlgebra& tw, const OOperator& o) {
    Report r;
    const IdealSplit ideals = split_ideals(tw, o);
    const std::size_t p = tw.source_plus.dim();
    const std::size_t m = tw.source_minus.dim();
    for (std::size_t i = 0; i < m; ++i) {
        const Matrix fi = embed_minus(p, basis_vector(m, i));
        for (int sign : {+1, -1}) {
            const std::string side = (sign > 0) ? ".plus" : ".minus";
            for (std::size_t j = 0; j < p; ++j) {
                const Matrix lhs = tw.algebra.bracket(
                    fi, graph_vec(o, sign, basis_vector(p, j)));
                // Dressing in the source context is the effective sigma table.
                Matrix sig(p, 1);
                for (std::size_t k = 0; k < p; ++k)
                    sig.at(k, 0) = tw.effective.sigma_at(i, j, k);
                r.require_eq(lhs, graph_vec(o, sign, sig), "intertwiner" + side,
                             {i, j});
            }
            const Subspace& e = (sign > 0) ? ideals.Eplus : ideals.Eminus;
            for (std::size_t a = 0; a < p; ++a)
                for (std::size_t b = a + 1; b < p; ++b) {
                    const Matrix x = e.basis().column(a);
                    const Matrix y = e.basis().column(b);
                    const Matrix lhs =
                        tw.algebra.bracket(fi, tw.algebra.bracket(x, y));
                    const Matrix rhs =
                        tw.algebra.bracket(tw.algebra.bracket(fi, x), y) +
                        tw.algebra.bracket(x, tw.algebra.bracket(fi, y));
                    r.require_eq(lhs, rhs, "intertwiner.derivation" + side,
                                 {i, a, b});
                }
        }
    }
    return r;
}

} // namespace mforge
