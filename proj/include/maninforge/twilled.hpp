#pragma once

#include "maninforge/manin.hpp"

#include <optional>

namespace mforge {

/// Mutual actions of a pair of Lie algebras: sigma (minus acting on plus)
/// and rho (plus acting on minus), as dense basis tables.
/// sigma[i][j][k]: sigma_{f_i} e_j = sum_k sigma[i][j][k] e_k.
/// rho[j][i][l]:   rho_{e_j} f_i  = sum_l rho[j][i][l] f_l.
struct ActionPair {
    std::size_t p = 0; // dim of the plus algebra
    std::size_t m = 0; // dim of the minus algebra
    std::vector<Rational> sigma; // m*p*p
    std::vector<Rational> rho;   // p*m*m

    static ActionPair zero(std::size_t p, std::size_t m);

    Rational& sigma_at(std::size_t i, std::size_t j, std::size_t k) {
        return sigma[(i * p + j) * p + k];
    }
    const Rational& sigma_at(std::size_t i, std::size_t j, std::size_t k) const {
        return sigma[(i * p + j) * p + k];
    }
    Rational& rho_at(std::size_t j, std::size_t i, std::size_t l) {
        return rho[(j * m + i) * m + l];
    }
    const Rational& rho_at(std::size_t j, std::size_t i, std::size_t l) const {
        return rho[(j * m + i) * m + l];
    }

    /// p x p matrix of sigma_{f_i} acting on plus coordinates.
    Matrix sigma_map(std::size_t i) const;
    /// m x m matrix of rho_{e_j} acting on minus coordinates.
    Matrix rho_map(std::size_t j) const;
    /// sigma_{x_minus} y_plus for coordinate vectors (bilinear extension).
    Matrix sigma_apply(const Matrix& xminus, const Matrix& yplus) const;
    /// rho_{y_plus} x_minus for coordinate vectors.
    Matrix rho_apply(const Matrix& yplus, const Matrix& xminus) const;

    ActionPair negated_rho() const;
};

/// sigma is a representation of gminus on gplus.
Report check_sigma_representation(const LieAlgebra& gminus, const ActionPair& a);

/// The two 1-cocycle constraints that make the assembled bracket a Lie
/// bracket: for all minus pairs,
///   rho_{[f,f']} = ad_f rho_{f'} - rho_{f'} sigma_f + rho_f sigma_{f'} - ad_{f'} rho_f
/// and the mirrored constraint for sigma over plus pairs.
Report check_twilled_constraints(const LieAlgebra& gplus, const LieAlgebra& gminus,
                                 const ActionPair& a);

/// Lie algebra on gplus (+) gminus assembled from the mutual actions.
/// Basis order: plus block (indices 0..p-1) then minus block (p..p+m-1).
struct TwilledAlgebra {
    LieAlgebra algebra;
    Subspace plus_side;
    Subspace minus_side;
    LieAlgebra source_plus;   // plus bracket as given (before any sign)
    LieAlgebra source_minus;
    ActionPair effective;     // the (sigma, rho) actually used in assembly
    int plus_sign = +1;
    std::optional<BilinearForm> form; // transported ambient form, when known
    Matrix embedding;                 // original ambient basis columns [plus|minus]

    /// Converts an original-ambient vector into twilled coordinates.
    Matrix to_twilled(const Matrix& ambient) const;
};

/// Assembles the bracket
/// [X+ + X-, Y+ + Y-] = s[X+,Y+] + sigma_{X-}Y+ - sigma_{Y-}X+
///                      + [X-,Y-] + s rho_{X+}Y- - s rho_{Y+}X-
/// where s = plus_sign (the -1 variant is the extension of the opposite
/// plus algebra by (sigma, -rho)). Verifies constraints and Jacobi.
TwilledAlgebra build_twilled(const LieAlgebra& gplus, const LieAlgebra& gminus,
                             const ActionPair& a, int plus_sign);

/// Coboundary rho of a twist B: rho_{Y+} X- = B sigma_{X-} Y+ - [X-, B Y+],
/// tabulated over the declared bases (dressing sigma).
ActionPair coboundary_rho(const SplitContext& sc, const LinearMap& B);

struct GtildeResult {
    TwilledAlgebra tw;
    Report report;
};

/// One-call composition: bracket_B + dressing sigma + coboundary rho +
/// build_twilled(sign -1), with the literal closed-form bracket, the form
/// invariance, and the Manin-triple property of the result all verified.
GtildeResult build_gtilde_B(const SplitContext& sc, const OOperator& o);

struct IdealSplit {
    Subspace Eplus;  // graph(B + G), in twilled coordinates
    Subspace Eminus; // graph(B - G)
    Report report;
};

/// E± = graph(B ± G) inside the twilled algebra; verifies closure, the
/// vanishing of crossed brackets (ideal property), the closed-form bracket
/// [(I+B±G)X, (I+B±G)Y] = ±2 (I+B±G) G^-1 [GX, GY], the double splitting,
/// and that X- -> 1/2 (I+B±G) G^-1 X- is an injective (anti)homomorphism.
IdealSplit split_ideals(const TwilledAlgebra& tw, const OOperator& o);

struct PhiBResult {
    LinearMap map; // E+ -> E- in twilled coordinates
    Report report;
};

/// phi_B((I+B+G)X+) = (I+B-G)X+; verifies the antihomomorphism property and
/// the operator identity E[JX, JY] = J[X, Y] for the gauged structure.
PhiBResult phi_B(const TwilledAlgebra& tw, const OOperator& o);

/// Nijenhuis tensor of phi_B on E+ pairs equals -4[GX, GY], and
/// [X+, Y+] = -1/2 (I+B+G) G^-1 N_phi(X+, Y+).
Report nijenhuis_phi(const TwilledAlgebra& tw, const OOperator& o);

/// ad_{X-} within the twilled algebra intertwines with the dressing action:
/// ad_{X-} (I+B±G) Y+ = (I+B±G) Pi_plus [X-, Y+], plus the derivation
/// property of ad_{X-} on E± pairs.
Report adjoint_intertwiner_check(const TwilledAlgebra& tw, const OOperator& o);

} // namespace mforge
