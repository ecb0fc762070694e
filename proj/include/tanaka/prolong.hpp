#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tanaka/graded.hpp"
#include "tanaka/presymplectic.hpp"
#include "tanaka/report.hpp"
#include "tanaka/subspace.hpp"

namespace tanaka {

/// Block Hom(g_{-j}, g_{k-j}) of the order-1 cochains of degree k.
struct CochainBlock1 {
    int j = 0;
    int target_degree = 0;
    std::size_t source_dim = 0, target_dim = 0, offset = 0;
};

/// Block Hom(g_{-i} ^ g_{-j}, g_{l-i-j}) (tensor product when i < j).
struct CochainBlock2 {
    int i = 0, j = 0;
    int target_degree = 0;
    std::size_t target_dim = 0, offset = 0;
    /// basis pairs (index in g_{-i}, index in g_{-j}); a < b when i == j
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

struct SpencerSpaces {
    int level = 0;
    std::size_t dim1 = 0, dim2 = 0;
    std::vector<CochainBlock1> c1;
    std::vector<CochainBlock2> c2;
};

/// The partially computed prolongation of (g_-, g_0).
///
/// Elements of degree d < 0 are coordinate vectors over the basis of the
/// degree-d component of g_-. Elements of degree k >= 0 are coordinate vectors
/// over the canonical basis of the k-th piece, whose basis vectors are symbols
/// in the order-1 cochains of degree k (block layout of `cochain1_blocks`,
/// entry s * dim g_{k-j} + t of block j holding the t-th coordinate of the
/// image of the s-th basis vector of g_{-j}).
class Tower {
public:
    /// Checks that g0 acts on gminus by grading-preserving derivations.
    Tower(GradedLieAlgebra gminus, MatrixLieAlgebra g0);

    const GradedLieAlgebra& gminus() const { return gminus_; }
    const MatrixLieAlgebra& g0() const { return g0_; }
    int depth() const { return depth_; }
    /// Highest degree k >= 0 whose piece has been computed.
    int computed_max() const { return static_cast<int>(pieces_.size()) - 1; }
    bool terminated() const { return terminated_; }
    /// Largest degree with a nonzero piece (meaningful once terminated).
    int mu() const;

    /// Dimension of g_d for any d (-depth <= d); zero above the range once terminated.
    std::size_t dim(int d) const;
    /// Piece of degree k >= 0 as a subspace of the degree-k cochains.
    const Subspace& piece(int k) const;

    std::vector<CochainBlock1> cochain1_blocks(int k) const;
    std::size_t cochain1_dim(int k) const;

    /// Computes the next piece as the kernel of the Spencer boundary.
    void extend();
    /// Coordinates in the g_0 piece of the i-th basis matrix of g0().
    Vector g0_coordinates(std::size_t i) const { return g0_coords_.at(i); }
    /// Symbol of a g_0 matrix (must be grading-preserving).
    Vector g0_symbol(const Matrix& x) const;

    /// x(e_s) for x of degree k >= 0 and e_s the s-th basis vector of g_{-j}.
    Vector act(int k, const Vector& x, int j, std::size_t s) const;
    /// [x, y] for x of degree p and y of degree q, as an element of degree p + q.
    Vector bracket(int p, const Vector& x, int q, const Vector& y) const;

    /// Embeds an element of g_{-j} into full g_- coordinates.
    Vector embed_minus(int d, const Vector& x) const;
    Vector project_minus(int d, const Vector& full) const;

private:
    Vector bracket_nonneg_basis(int p, std::size_t a, int q, std::size_t b) const;
    /// Coordinates in piece k of a symbol vector; throws if outside.
    Vector piece_coordinates(int k, const Vector& symbol) const;

    GradedLieAlgebra gminus_;
    MatrixLieAlgebra g0_;
    int depth_ = 0;
    std::vector<Subspace> pieces_;
    std::vector<Vector> g0_coords_;
    bool terminated_ = false;

    mutable std::mutex memo_mutex_;
    mutable std::map<std::tuple<int, std::size_t, int, std::size_t>, Vector> memo_;
};

SpencerSpaces spencer_spaces(const Tower& tower, int level);
/// Matrix of the boundary d f(u,v) = [f(u),v] + [u,f(v)] - f([u,v]) from the
/// order-1 to the order-2 cochains of the given level.
Matrix spencer_boundary(const Tower& tower, const SpencerSpaces& S);

/// g_0-action on order-1 cochains: (X f)(v) = [X, f(v)] - f([X, v]).
Vector act_on_cochain1(const Tower& tower, const SpencerSpaces& S, std::size_t g0_index, const Vector& f);
/// g_0-action on order-2 cochains: (X c)(u,v) = [X, c(u,v)] - c([X,u], v) - c(u, [X,v]).
Vector act_on_cochain2(const Tower& tower, const SpencerSpaces& S, std::size_t g0_index, const Vector& c);

struct ProlongOptions {
    int max_degree = 10;
    /// Allow g_0 with a nonzero common fixed vector on g_-.
    bool waive_fixed_vector_check = false;
};

struct ProlongationResult {
    std::shared_ptr<const Tower> tower;
    /// (k, g_k) for k >= 1
    std::vector<std::pair<int, Subspace>> pieces;
    int mu = 0;
    bool terminated = false;
    GradedLieAlgebra full_algebra;
    /// structural checks on the assembled algebra
    Report checks;

    std::vector<std::size_t> piece_dims() const;
    std::size_t total_dim() const { return full_algebra.dim(); }
};

/// Raised when max_degree is reached without nu consecutive vanishing pieces.
class NonTerminationError : public std::runtime_error {
public:
    NonTerminationError(const std::string& what, std::shared_ptr<const ProlongationResult> partial)
        : std::runtime_error(what), partial_(std::move(partial)) {}
    const ProlongationResult& partial() const { return *partial_; }

private:
    std::shared_ptr<const ProlongationResult> partial_;
};

ProlongationResult prolong(const MatrixLieAlgebra& g0, const GradedLieAlgebra& gminus, ProlongOptions opts = {});

/// True iff the g0 matrices have a common nonzero kernel vector on g_-.
bool has_fixed_vector(const MatrixLieAlgebra& g0, const GradedLieAlgebra& gminus);

/// Assembles the graded Lie algebra on g_- + g_0 + ... + g_mu of a terminated tower.
GradedLieAlgebra assemble_algebra(const Tower& tower);

} // namespace tanaka
