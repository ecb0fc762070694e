#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tanaka/graded.hpp"
#include "tanaka/subspace.hpp"

namespace tanaka {

/// A vector space with a fixed, possibly degenerate, antisymmetric form.
class PresymplecticSpace {
public:
    PresymplecticSpace() = default;
    explicit PresymplecticSpace(Matrix omega);

    /// Form [[0, I_s, 0], [-I_s, 0, 0], [0, 0, 0_r]] on a space of dim 2s + r.
    static PresymplecticSpace normal_form(std::size_t s, std::size_t r);
    /// Normal form with the given dimension and nullity.
    static PresymplecticSpace with_nullity(std::size_t dim, std::size_t nullity);

    std::size_t dim() const { return omega_.rows(); }
    std::size_t nullity() const { return nullity_; }
    std::size_t rank() const { return dim() - nullity_; }
    const Matrix& omega() const { return omega_; }
    Scalar form(const Vector& u, const Vector& v) const;

private:
    Matrix omega_;
    std::size_t nullity_ = 0;
};

Subspace null_space(const PresymplecticSpace& P);

/// Finite-dimensional Lie algebra of n x n matrices given by a basis.
class MatrixLieAlgebra {
public:
    MatrixLieAlgebra() = default;
    /// Throws if the basis is dependent or (when `verify`) not closed under commutators.
    MatrixLieAlgebra(std::size_t n, std::vector<Matrix> basis, bool verify = true);

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Matrix>& basis() const { return basis_; }
    const Matrix& element(std::size_t i) const { return basis_.at(i); }
    /// Span of the flattened basis inside End(Q^n).
    const Subspace& span() const { return span_; }
    bool contains(const Matrix& x) const { return span_.contains(x.flat()); }
    /// Coefficients of x in the given basis.
    std::optional<Vector> coordinates(const Matrix& x) const;
    Matrix combination(const Vector& coeffs) const;

private:
    std::size_t n_ = 0;
    std::vector<Matrix> basis_;
    Subspace span_;
    CoordinateSolver solver_;
};

/// {phi : omega(phi q1, q2) = omega(phi q2, q1)}, the Lie algebra preserving omega.
MatrixLieAlgebra sp_algebra(const PresymplecticSpace& P);

/// Degree attached to each coordinate of a vector space.
struct VectorGrading {
    std::vector<int> degree_of;
};

/// Pieces sp(V)_k = sp(V) cap Hom(V,V)_k, as subspaces of row-major flattened End(V).
/// Requires omega to pair V_a with V_b only when a + b is one fixed constant.
std::vector<std::pair<int, Subspace>> sp_grading(const PresymplecticSpace& P, const VectorGrading& grading);

/// Closed-form dimension (dim - r) r + s (2s + 1) + r^2 of the algebra
/// preserving a form of rank 2s and nullity r.
std::size_t sp_dimension_formula(std::size_t dim, std::size_t nullity);

} // namespace tanaka
