#pragma once

#include "maninforge/manin.hpp"

namespace mforge {

/// r = sum coeffs[i][j] e_i (x) e_j on the carrier algebra.
struct RMatrix {
    LieAlgebra algebra;
    Matrix coeffs;
};

/// Symmetric and skew components (C+C^T)/2 and (C-C^T)/2.
std::pair<RMatrix, RMatrix> split_r(const RMatrix& r);

/// Matrix of the first-slot contraction xi -> <xi (x) I, r>, i.e. coeffs^T
/// (dual coordinates in, carrier coordinates out).
Matrix rhat(const RMatrix& r);

/// [r13,r23] + [r12,r13] + [r12,r23] = 0, expanded entrywise into the n^3
/// tensor basis.
Report check_cybe(const RMatrix& r);

/// Symmetric part invertible and ad-invariant:
/// rhat+ ad*_X + ad_X rhat+ = 0 with ad* the plain transpose.
Report check_factorizable(const RMatrix& r);

/// B = rhat- o psi, G = rhat+ o psi with psi: g+ -> g-* induced by the
/// Manin form (psi[i][j] = (e_j^{g+}, f_i^{g-})_g). r lives on the minus
/// algebra; throws when r is not factorizable.
OOperator gb_from_r(const ManinTriple& t, const RMatrix& r);

/// Modified Yang-Baxter form for R = B G^-1 on the minus side:
/// [RX,RY] - R[RX,Y] - R[X,RY] = -[X,Y].
Report check_semenov(const SplitContext& sc, const OOperator& o);
Report check_semenov(const ManinTriple& t, const OOperator& o);

/// Dual bracket [xi,lm]_r = ad*_{rhat-(lm)} xi - ad*_{rhat-(xi)} lm on the
/// dual basis.
LieAlgebra dual_bracket_from_r(const LieAlgebra& k, const RMatrix& r);

/// Pairing consistency <[xi,lm]_r, Z> = <xi (x) lm, ad_Z r-> on all basis
/// triples, with ad_Z r- = ad_Z C- + C- ad_Z^T.
Report check_dual_pairing(const LieAlgebra& k, const RMatrix& r);

/// Cobracket table delta_r(e_k) = ad_{e_k} r- as n x n coefficient matrices.
std::vector<Matrix> cobracket_from_r(const LieAlgebra& k, const RMatrix& r);

/// Classical double: ambient = k* (+) k (dual block first), dual bracket on
/// k*, the carrier bracket on k, crossed bracket
/// [X, xi] = rhat-(ad*_X xi) + ad_X rhat-(xi) - ad*_X xi, hyperbolic form.
ManinTriple double_from_bialgebra(const LieAlgebra& k, const RMatrix& r);

} // namespace mforge
