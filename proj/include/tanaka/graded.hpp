#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tanaka/matrix.hpp"
#include "tanaka/report.hpp"

namespace tanaka {

struct GradedComponent {
    int degree = 0;
    std::size_t dim = 0;
    std::vector<std::string> labels;
};

/// Direct sum of graded components laid out consecutively in increasing degree.
class GradedVectorSpace {
public:
    GradedVectorSpace() = default;
    explicit GradedVectorSpace(std::vector<GradedComponent> components);

    const std::vector<GradedComponent>& components() const { return components_; }
    std::size_t total_dim() const { return total_; }
    /// Dimension of the degree-d component (0 when absent).
    std::size_t dim(int degree) const;
    /// Offset of the degree-d component in the total basis.
    std::size_t offset(int degree) const;
    bool has_degree(int degree) const;
    int degree_of(std::size_t index) const;
    const std::string& label(std::size_t index) const;
    int min_degree() const;
    int max_degree() const;

private:
    std::vector<GradedComponent> components_;
    std::vector<std::size_t> offsets_;
    std::vector<int> degree_of_;
    std::vector<std::string> labels_;
    std::size_t total_ = 0;
};

using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t n);

/// Graded Lie algebra given by structure constants over a labeled basis.
class GradedLieAlgebra {
public:
    GradedLieAlgebra() = default;
    explicit GradedLieAlgebra(GradedVectorSpace space);

    const GradedVectorSpace& space() const { return space_; }
    std::size_t dim() const { return space_.total_dim(); }

    /// Sets [e_a, e_b] only; the caller is responsible for [e_b, e_a].
    void set_bracket(std::size_t a, std::size_t b, const Vector& value);
    /// Sets [e_a, e_b] = value and [e_b, e_a] = -value.
    void set_bracket_antisymmetric(std::size_t a, std::size_t b, const Vector& value);
    /// Overwrites a single structure constant c[a][b]^d.
    void set_constant(std::size_t a, std::size_t b, std::size_t d, const Scalar& value);

    const SparseVector& bracket_sparse(std::size_t a, std::size_t b) const { return table_[a * dim() + b]; }
    Vector bracket_basis(std::size_t a, std::size_t b) const;
    Vector bracket(const Vector& x, const Vector& y) const;
    /// [e_a, v] for a vector v.
    Vector ad(std::size_t a, const Vector& v) const;
    /// Matrix of ad(e_a).
    Matrix ad_matrix(std::size_t a) const;
    bool is_abelian() const;

private:
    GradedVectorSpace space_;
    std::vector<SparseVector> table_;
};

/// Antisymmetry, Jacobi identity on all basis triples, and degree additivity.
Report check_graded_lie(const GradedLieAlgebra& L);

/// Copy of L with the `which`-th nonzero constant c of [e_a, e_b] (a < b, in table
/// order, cyclically) replaced by c + 1, keeping antisymmetry.
GradedLieAlgebra with_corrupted_constant(const GradedLieAlgebra& L, std::size_t which);

} // namespace tanaka
