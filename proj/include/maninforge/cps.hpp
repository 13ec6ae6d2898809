#pragma once

#include "maninforge/lie_core.hpp"

#include <optional>
#include <utility>

namespace mforge {

/// Complex product structure {E, J, F} on a quadratic vector space, stored
/// in ambient coordinates.
struct ComplexProductStructure {
    Matrix E;
    Matrix J;
    Matrix F;
    BilinearForm form;

    std::size_t dim() const { return E.rows(); }
};

/// Simultaneous Lagrangian (F+, F-) and orthogonal (E+, E-) decompositions.
struct DoubleSplitting {
    Subspace Fplus;
    Subspace Fminus;
    Subspace Eplus;
    Subspace Eminus;
};

/// Builds {E, J, F} from an anti-isometry phi: E+ -> E- between the two
/// orthogonal halves (in the adapted basis: E = diag(I,-I),
/// F = offdiag(phi^-1, phi), J = F.E). Also returns F± = graph(±phi).
std::pair<ComplexProductStructure, DoubleSplitting>
cps_from_anti_isometry(const BilinearForm& form, const LinearMap& phi);

/// Builds {E, J, F} from a symmetric invertible G: F+ -> F- between the two
/// Lagrangian halves (adapted basis: E = offdiag(G^-1, G), F = diag(I,-I),
/// J = F.E). Also returns E± = graph(±G).
std::pair<ComplexProductStructure, DoubleSplitting>
cps_from_metric(const BilinearForm& form, const LinearMap& G);

/// E± gauged by a skew twist: graph(B ± G) over the F+ basis.
std::pair<Subspace, Subspace> gauge_splitting(const LinearMap& G,
                                              const LinearMap& B);

/// Gauged structure in the Lagrangian splitting:
/// E = [[-G^-1 B, G^-1],[G - B G^-1 B, B G^-1]], J likewise with the
/// -G - B G^-1 B block, F = J.E = [[I,0],[2B,-I]].
ComplexProductStructure cps_gauged(const BilinearForm& form, const LinearMap& G,
                                   const LinearMap& B);

/// The six defining identities: E^2=I, J^2=-I, EJ+JE=0, F=JE, E and J
/// symmetric and F skew w.r.t. the form.
Report verify_cps(const ComplexProductStructure& c);

/// ±1 eigenspace of an involution (throws unless op^2 = I and ev = ±1).
Subspace eigenspace(const Matrix& op, const Rational& eigenvalue);

/// Dual-gauge pair Gtilde = (G - B G^-1 B)^-1,
/// Btilde = -G^-1 B (G - B G^-1 B)^-1 as maps F- -> F+, or nullopt when the
/// generalized metric G - B G^-1 B is singular.
std::optional<std::pair<LinearMap, LinearMap>> dual_gauge_data(const LinearMap& G,
                                                               const LinearMap& B);

enum class StructureKind { Product, Complex };

/// Nijenhuis defect table N(e_i, e_j) for an operator on a Lie algebra:
/// N = [Ax,Ay] - A([Ax,y] + [x,Ay]) ± [x,y] (product: +, complex: -).
struct NijenhuisTable {
    std::size_t dim = 0;
    std::vector<Matrix> defect; // dim*dim column vectors, index i*dim + j

    const Matrix& at(std::size_t i, std::size_t j) const {
        return defect[i * dim + j];
    }
    bool all_zero() const {
        for (const auto& d : defect)
            if (!d.is_zero()) return false;
        return true;
    }
};

NijenhuisTable nijenhuis_defect(const LieAlgebra& a, const Matrix& op,
                                StructureKind kind);

} // namespace mforge
