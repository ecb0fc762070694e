#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tanaka/matrix.hpp"

namespace tanaka {

/// Linear subspace of Q^n held in a canonical echelon basis.
///
/// The basis vectors are the rows of the reduced row-echelon form of any
/// spanning set; equivalently the columns of `basis()` are in reduced column
/// echelon form with pivot columns ordered by pivot row. Two Subspace values
/// describe the same subspace iff they compare equal.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
    static Subspace full(std::size_t ambient);
    static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient);
    /// Span of the columns of `m`.
    static Subspace column_space(const Matrix& m);
    /// Span of the coordinate vectors e_i, i in `indices`.
    static Subspace coordinate(const std::vector<std::size_t>& indices, std::size_t ambient);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    bool is_zero() const { return rows_.empty(); }
    bool is_full() const { return rows_.size() == ambient_; }

    /// Basis vectors in canonical order.
    const std::vector<Vector>& vectors() const { return rows_; }
    const Vector& vector(std::size_t i) const { return rows_.at(i); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    /// ambient_dim x dim matrix with the basis vectors as columns.
    Matrix basis() const;

    /// v minus its component along the subspace, normalized so the entries at
    /// pivot columns are zero. Two vectors are congruent modulo the subspace
    /// iff their residues agree.
    Vector reduce(const Vector& v) const;
    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// Coefficients of v in the canonical basis, if v lies in the subspace.
    std::optional<Vector> coordinates(const Vector& v) const;
    /// Entries of v at the non-pivot columns: coordinates on the quotient.
    Vector quotient_coordinates(const Vector& v) const;
    std::vector<std::size_t> free_columns() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::size_t ambient_ = 0;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace sum(const std::vector<Subspace>& parts, std::size_t ambient);
bool contains(const Subspace& outer, const Subspace& inner);
/// {f : f(s) = 0 for s in S}, in the dual coordinates.
Subspace annihilator(const Subspace& s);
/// Image of S under the linear map m.
Subspace image(const Matrix& m, const Subspace& s);
/// {v : m v in S}.
Subspace preimage(const Matrix& m, const Subspace& s);
/// Canonical complement of `sub` inside `sup`: the span of the residues of
/// `sup` modulo `sub`. Requires sub to be contained in sup.
Subspace complement_in(const Subspace& sub, const Subspace& sup);
/// Kronecker product of subspaces of Q^a and Q^b inside Q^(ab).
Subspace kron(const Subspace& a, const Subspace& b);
/// Some solution x of m x = b, if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Solves B x = v repeatedly for a fixed matrix B with independent columns.
class CoordinateSolver {
public:
    CoordinateSolver() = default;
    explicit CoordinateSolver(const Matrix& columns);
    std::size_t dim() const { return dim_; }
    std::optional<Vector> solve(const Vector& v) const;
    /// Like solve, but throws std::logic_error when v is outside the span.
    Vector coordinates(const Vector& v) const;

private:
    std::size_t dim_ = 0, ambient_ = 0;
    Matrix transform_;              // rows of the left-inverse transform
};

} // namespace tanaka
