#pragma once

#include "maninforge/reverse.hpp"
#include "maninforge/rmatrix.hpp"

/// Built-in example algebras and structures used by the bundled examples and
/// the test suite.
namespace mforge::fixtures {

/// sl2 with basis H, X+, X-: [H,X+]=2X+, [H,X-]=-2X-, [X+,X-]=H.
LieAlgebra sl2();

/// r = X+ (x) X- + 1/4 H (x) H on sl2 (factorizable, solves the classical
/// Yang-Baxter equation).
RMatrix sl2_r();

/// Classical double of (sl2, r): six-dimensional ambient with dual block
/// h, x+, x- first, then H, X+, X-, hyperbolic form. Hardcoded table.
ManinTriple sl2_double();

/// Two-dimensional nonabelian algebra [e0,e1]=e1.
LieAlgebra nonabelian2();

/// Three-dimensional Heisenberg algebra [e0,e1]=e2.
LieAlgebra heisenberg3();

/// Abelian algebra of the given dimension.
LieAlgebra abelian(std::size_t n);

/// Semidirect double k* (+) k with k* abelian and [X, xi] = -ad*_X xi,
/// hyperbolic form (dual block first).
ManinTriple semidirect_double(const LieAlgebra& k);

/// sl2 and its opposite as an anti-isomorphic quadratic pair: phi = identity
/// on coordinates, plus form = minus the (half-)Killing Gram of the minus
/// side.
AntiIsoPair sl2_pair();

/// theta = diag(0, 1, -1) on the plus side of sl2_pair().
Matrix sl2_theta();

/// exp(ad_{t X+}) on sl2 coordinates.
Matrix sl2_aut_upper(const Rational& t);
/// exp(ad_{t X-}) on sl2 coordinates.
Matrix sl2_aut_lower(const Rational& t);
/// Weyl flip H -> -H, X+ <-> X-.
Matrix sl2_weyl();

/// Pushforward of r along an automorphism: coeffs -> A coeffs A^T.
RMatrix conjugate_r(const RMatrix& r, const Matrix& a);

} // namespace mforge::fixtures
