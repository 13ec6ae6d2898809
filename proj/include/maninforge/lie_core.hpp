#pragma once

#include "maninforge/matrix.hpp"
#include "maninforge/report.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mforge {

/// Lie algebra given by structure constants c[i][j][k]:
/// [e_i, e_j] = sum_k c[i][j][k] e_k.
class LieAlgebra {
public:
    LieAlgebra() = default;
    LieAlgebra(std::size_t dim, std::string name,
               std::vector<std::string> basis_names = {});

    std::size_t dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }

    Rational& c(std::size_t i, std::size_t j, std::size_t k) {
        return c_[(i * dim_ + j) * dim_ + k];
    }
    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }

    /// Sets [e_i, e_j] = value (column vector) and the antisymmetric partner.
    void set_bracket(std::size_t i, std::size_t j, const Matrix& value);

    /// Bilinear bracket of two coordinate column vectors.
    Matrix bracket(const Matrix& x, const Matrix& y) const;
    /// Matrix of ad_x: y -> [x, y].
    Matrix ad(const Matrix& x) const;

    Report check_antisymmetry() const;
    Report check_jacobi() const;

    bool operator==(const LieAlgebra&) const = default;

private:
    std::size_t dim_ = 0;
    std::string name_;
    std::vector<std::string> basis_names_;
    std::vector<Rational> c_;
};

/// Symmetric nondegenerate bilinear form as a Gram matrix.
class BilinearForm {
public:
    BilinearForm() = default;
    explicit BilinearForm(Matrix gram) : gram_(std::move(gram)) {}

    const Matrix& gram() const { return gram_; }
    std::size_t dim() const { return gram_.rows(); }
    Rational eval(const Matrix& x, const Matrix& y) const;

    /// Symmetry and nondegeneracy.
    Report validate() const;

    bool operator==(const BilinearForm&) const = default;

private:
    Matrix gram_;
};

/// Subspace of an ambient coordinate space, stored as an explicit basis
/// (columns of a full-column-rank matrix).
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}

    /// Span of `count` consecutive ambient coordinates starting at `from`.
    static Subspace coordinate(std::size_t n, std::size_t from, std::size_t count);

    std::size_t ambient_dim() const { return basis_.rows(); }
    std::size_t dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }

    /// Coordinates -> ambient vector.
    Matrix vec(const Matrix& coords) const { return basis_ * coords; }
    /// Ambient vector -> coordinates, when the vector lies in the span.
    std::optional<Matrix> coords(const Matrix& ambient) const {
        return basis_.solve(ambient);
    }
    bool contains(const Matrix& ambient) const { return coords(ambient).has_value(); }

    bool operator==(const Subspace&) const = default;

private:
    Matrix basis_;
};

/// Linear map between subspaces, as a coefficient matrix relative to the
/// declared bases (target.dim x source.dim).
struct LinearMap {
    Subspace source;
    Subspace target;
    Matrix coeffs;

    Matrix apply_coords(const Matrix& coords) const { return coeffs * coords; }
    /// Applies to an ambient vector of the source span; throws when outside.
    Matrix apply(const Matrix& ambient) const;
};

Report check_ad_invariance(const LieAlgebra& a, const BilinearForm& f);
bool is_isotropic(const BilinearForm& f, const Subspace& s);
bool is_lagrangian(const BilinearForm& f, const Subspace& s);
Subspace orthogonal_complement(const BilinearForm& f, const Subspace& s);

/// basis(a)^T . gram . basis(b) — the form evaluated pairwise on two bases.
Matrix pairing_gram(const BilinearForm& f, const Subspace& a, const Subspace& b);
/// Restriction of the form to a subspace: pairing_gram(f, s, s).
Matrix restricted_gram(const BilinearForm& f, const Subspace& s);

/// Adjoint of m with respect to the given forms. Two regimes:
/// - when the pairing of target against source under f_src is nondegenerate
///   (e.g. two Lagrangian halves of one split form), the adjoint is again
///   source -> target, via (m X, Y) = (X, m^T Y);
/// - otherwise, when both restricted forms are nondegenerate (e.g. the two
///   orthogonal halves), the adjoint is target -> source.
/// Throws std::invalid_argument when neither regime applies.
LinearMap transpose_map(const LinearMap& m, const BilinearForm& f_src,
                        const BilinearForm& f_tgt);

/// m = G + B with transpose(G) = G, transpose(B) = -B (crossed-pairing
/// regime; the adjoint must preserve direction).
std::pair<LinearMap, LinearMap> sym_skew_split(const LinearMap& m,
                                               const BilinearForm& f_src,
                                               const BilinearForm& f_tgt);

/// Same space, negated bracket.
LieAlgebra opposite(const LieAlgebra& a);

/// Ambient matrix of the projection onto `onto` along `along`.
Matrix projector(const Subspace& onto, const Subspace& along);

} // namespace mforge
