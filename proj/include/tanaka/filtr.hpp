#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tanaka/matrix.hpp"
#include "tanaka/models.hpp"
#include "tanaka/prolong.hpp"
#include "tanaka/report.hpp"
#include "tanaka/subspace.hpp"

namespace tanaka {

using MultiIndex = std::vector<int>;

/// k-tuple filtration stored on the box lo <= I <= hi with A_lo = 0 and A_hi = A;
/// outside the box each index is clamped into it.
class MultiFiltration {
public:
    MultiFiltration() = default;
    /// `pieces` lists A_I for every I in the box in row-major order (last index fastest).
    MultiFiltration(std::size_t module_dim, std::vector<Matrix> g0_action, MultiIndex lo, MultiIndex hi,
                    std::vector<Subspace> pieces);
    /// 1-filtration 0 = A_lo ⊂ ... ⊂ A_hi = A from the chain of its proper nonzero steps.
    static MultiFiltration chain(std::size_t module_dim, std::vector<Matrix> g0_action, int lo,
                                 const std::vector<Subspace>& steps);
    /// 0 ⊂ A with one jump at level 1.
    static MultiFiltration trivial(std::size_t module_dim, std::vector<Matrix> g0_action);

    std::size_t module_dim() const { return dim_; }
    std::size_t arity() const { return lo_.size(); }
    const MultiIndex& lo() const { return lo_; }
    const MultiIndex& hi() const { return hi_; }
    const std::vector<Matrix>& g0_action() const { return action_; }
    const Subspace& piece(const MultiIndex& I) const;
    /// Every index of the box, row-major.
    std::vector<MultiIndex> box() const;
    /// Throws unless pieces are monotone with A_lo = 0 and A_hi = A.
    void validate() const;

private:
    std::size_t flat_index(const MultiIndex& I) const;

    std::size_t dim_ = 0;
    std::vector<Matrix> action_;
    MultiIndex lo_, hi_;
    std::vector<Subspace> pieces_;
};

struct GradedObject {
    std::size_t dim = 0;
    /// canonical complement of the decremented sum inside A_I
    Subspace representatives;
};

/// A_I / sum_l A_{I - e_l}. Throws std::out_of_range for I outside the box.
GradedObject graded_object(const MultiFiltration& F, const MultiIndex& I);
/// Nonzero graded objects in box order.
std::vector<std::pair<MultiIndex, std::size_t>> graded_dims(const MultiFiltration& F);
/// sum_l A_{I - e_l}
Subspace lower_sum(const MultiFiltration& F, const MultiIndex& I);

/// Pieces g0-invariant and r . A_I in the decremented sum. Throws if a radical
/// matrix is outside the span of the g0 action.
bool is_g0_reductive(const MultiFiltration& F, const std::vector<Matrix>& radical);

/// (A^*)_I = ann(A_{-I}) with the dual action -X^T.
MultiFiltration dual_filtration(const MultiFiltration& F);
/// A_I (x) B_J with the action X (x) 1 + 1 (x) X; actions must have equal length.
MultiFiltration tensor_filtration(const MultiFiltration& A, const MultiFiltration& B);
/// B cap A_I in coordinates of the canonical basis of B (a g0-submodule).
MultiFiltration sub_filtration(const MultiFiltration& F, const Subspace& B);
/// f(A_I) for a surjection f onto a module with the given action.
MultiFiltration image_filtration(const MultiFiltration& F, const Matrix& f, std::vector<Matrix> target_action);

/// Actions of the g_0 basis of the model on every g_d in bases adapted to the
/// standard filtrations: g_- as in the tower, g_0 by the model's g0 elements,
/// g_1 and g_2 by the closed-form images of Hom(U, Q) and Sym^2 U^*.
struct AdaptedModules {
    int min_degree = 0, max_degree = 0;
    std::map<int, std::size_t> dim;
    /// action[d][x]: matrix of the x-th g_0 element on g_d
    std::map<int, std::vector<Matrix>> action;
    /// per basis vector of g_d: level in the standard filtration and its B label
    std::map<int, std::vector<int>> level;
    std::map<int, std::vector<std::string>> label;
    std::vector<std::size_t> radical;
    /// central torus: sum of E_ii on U, and on Null (positive) or Q (rank zero)
    std::vector<Vector> torus;
};

AdaptedModules adapted_modules(const Model& model, const ProlongationResult& result);

struct StandardFiltration {
    int degree = 0;
    MultiFiltration filtration;
    std::vector<Matrix> radical;
    /// B labels of the graded objects from the bottom up
    std::vector<std::string> labels;
};

/// The filtrations of g_{-2}, ..., g_2 (positive) or g_{-1}, g_0, g_1 (rank zero).
std::vector<StandardFiltration> standard_filtrations(const Model& model, const ProlongationResult& result);

struct CatalogEntry {
    std::string name;
    std::size_t dim = 0;
    /// weights of the central torus (U scalar, Null scalar)
    int weight_u = 0, weight_null = 0;
};

/// A_1..A_6 (rank zero: A_1, A_2, A_4) and B_0..B_9 with Null = Q for rank zero.
std::map<std::string, CatalogEntry> module_catalog(const Model& model);

struct DecompositionPiece {
    int i = 0, j = 0;
    int target_degree = 0;
    std::string a_label, b_label;
    MultiIndex index;
    std::size_t dim = 0;
    std::size_t expected_dim = 0;
    bool weight_ok = true;
};

struct SpencerDecomposition {
    int level = 0;
    std::vector<DecompositionPiece> pieces;
    std::size_t total = 0;
    std::size_t c2_dim = 0;
    Report checks;
};

/// Graded pieces Hom(A_i, B_j) of the filtration of C^{l,2} induced by the standard
/// filtrations, with exact invariance, radical-triviality and catalog checks.
SpencerDecomposition spencer_graded_decomposition(const Model& model, const ProlongationResult& result, int level);

} // namespace tanaka
