#pragma once

#include "maninforge/lie_core.hpp"

namespace mforge {

/// Quadratic Lie algebra split into two complementary Lagrangian halves.
/// The minus side must be a subalgebra; the plus side need not be (this is
/// the shared substrate for Manin triples and quasi-triples).
struct SplitContext {
    LieAlgebra g;
    BilinearForm form;
    Subspace plus;
    Subspace minus;

    Matrix proj_plus() const { return projector(plus, minus); }
    Matrix proj_minus() const { return projector(minus, plus); }

    /// Structure constants of the minus side in its declared basis
    /// (requires closure).
    LieAlgebra minus_algebra() const;
    /// Structure constants of the plus side (requires closure; true Manin
    /// triples only).
    LieAlgebra plus_algebra() const;
};

/// Manin triple (g, g+, g-): both halves Lagrangian subalgebras.
struct ManinTriple {
    LieAlgebra g;
    BilinearForm form;
    Subspace gplus;
    Subspace gminus;

    SplitContext context() const { return {g, form, gplus, gminus}; }
};

/// All Manin-triple invariants: Jacobi, form validity and ad-invariance,
/// both halves Lagrangian, complementary, and closed under the bracket.
Report verify_manin_triple(const ManinTriple& t);

/// Dressing action sigma_{X-} Y+ = Pi_{g+} [X-, Y+], returned as g+
/// coordinates. Inputs are ambient vectors of the declared halves.
Matrix dressing(const SplitContext& sc, const Matrix& xminus, const Matrix& yplus);
Matrix dressing(const ManinTriple& t, const Matrix& xminus, const Matrix& yplus);

/// G is a minus-side-invariant extension: G(sigma_{X-} Y+) = [X-, G Y+] for
/// all basis pairs, and sigma_{G X+} Y+ + sigma_{G Y+} X+ = 0.
Report check_invariant_extension(const SplitContext& sc, const LinearMap& G);
Report check_invariant_extension(const ManinTriple& t, const LinearMap& G);

/// Extended O-operator data of mass -1: a skew twist B and a symmetric
/// invertible invariant extension G, both plus -> minus.
struct OOperator {
    LinearMap B;
    LinearMap G;
    Rational mass = Rational(-1);
};

/// The mass -1 identity:
/// [BX, BY] - B(sigma_{BX} Y - sigma_{BY} X) = mass [GX, GY].
Report check_o_operator(const SplitContext& sc, const OOperator& o);
Report check_o_operator(const ManinTriple& t, const OOperator& o);

/// Full OOperator invariant suite: transpose conditions, invertibility,
/// invariance of G, and the mass identity.
Report validate_o_operator(const SplitContext& sc, const OOperator& o);

/// Induced bracket on the plus side:
/// [X, Y]_B = sigma_{BX} Y - sigma_{BY} X. Refuses construction when the
/// O-operator check fails unless forced (negative testing).
LieAlgebra bracket_B(const SplitContext& sc, const OOperator& o, bool force = false);
LieAlgebra bracket_B(const ManinTriple& t, const OOperator& o, bool force = false);

/// (B ± G) [X,Y]_B = [(B±G)X, (B±G)Y] for both signs, on all basis pairs.
Report check_graph_homomorphism(const SplitContext& sc, const OOperator& o);
Report check_graph_homomorphism(const ManinTriple& t, const OOperator& o);

} // namespace mforge
