#pragma once

#include "maninforge/twilled.hpp"

namespace mforge {

/// Two Lie algebras connected by an anti-isomorphism phi (E+ -> E-, basis
/// coefficients) that reverses the forms: (X,Y)_+ = -(phi X, phi Y)_-.
struct AntiIsoPair {
    LieAlgebra eplus;
    LieAlgebra eminus;
    Matrix phi;
    BilinearForm formplus;
    BilinearForm formminus;

    /// Antihomomorphism, form compatibility, ad-invariance of both forms,
    /// and phi^T = -phi^-1.
    Report validate() const;
};

/// Quadratic direct sum: block-diagonal bracket and Gram matrix, plus-block
/// coordinates first. Both halves are ideals by construction (asserted).
std::pair<LieAlgebra, BilinearForm> direct_sum_quadratic(const AntiIsoPair& p);

/// Direct sum split along F± = graph(±phi): the minus side is a subalgebra,
/// the plus side a module with [F+, F+] contained in F-.
struct QuasiManinTriple {
    LieAlgebra g;
    BilinearForm form;
    Subspace Fplus;
    Subspace Fminus;

    SplitContext context() const { return {g, form, Fplus, Fminus}; }
    /// Lagrangian property and the closure table.
    Report verify() const;
};

QuasiManinTriple quasi_manin_from_phi(const AntiIsoPair& p);

/// The graph flip G(X + phi X) = X - phi X as a map F+ -> F-
/// (identity coefficients in the graph bases).
LinearMap metric_from_phi(const QuasiManinTriple& q);

/// Symmetry, invariance and antisymmetry of the graph-flip metric.
Report check_metric_from_phi(const QuasiManinTriple& q, const LinearMap& G);

/// theta skew w.r.t. the plus form and solving the modified Yang-Baxter
/// identity [tX,tY] - t[tX,Y] - t[X,tY] = -[X,Y] on E+.
Report check_theta(const LieAlgebra& eplus, const BilinearForm& formplus,
                   const Matrix& theta);

/// B(X + phi X) = theta X - phi(theta X): coefficients theta in the graph
/// bases, paired with the graph-flip G. Refuses invalid theta unless forced.
OOperator b_from_theta(const QuasiManinTriple& q, const Matrix& theta,
                       bool force = false);

/// [X,Y]_theta = [theta X, Y] - [theta Y, X] on E+.
LieAlgebra theta_bracket(const LieAlgebra& eplus, const Matrix& theta);

struct ReverseResult {
    QuasiManinTriple quasi;
    OOperator op;
    TwilledAlgebra tw;
    ManinTriple triple;
    Subspace EplusB;  // twilled coordinates
    Subspace EminusB;
    Report report;
};

/// Full pipeline: quasi triple, graph metric, theta twist, induced bracket,
/// coboundary actions, sign -1 twilled assembly, Manin-triple verification,
/// ideal splitting, and the Theta± closed form
/// [Theta±X, Theta±Y] = ±2 Theta±([X,Y]).
ReverseResult build_manin_from_orthogonal(const AntiIsoPair& p,
                                          const Matrix& theta);

} // namespace mforge
