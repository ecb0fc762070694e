#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tanaka/graded.hpp"
#include "tanaka/presymplectic.hpp"
#include "tanaka/prolong.hpp"
#include "tanaka/report.hpp"

namespace tanaka {

enum class ModelKind { positive, rank_zero };

std::string kind_name(ModelKind k);

/// Index bookkeeping for U (dim m), Q (dim n), U (x) Q and Sym^2 U.
struct ModelIndex {
    std::size_t m = 0, n = 0;
    std::size_t uq(std::size_t i, std::size_t a) const { return i * n + a; }
    std::size_t sym(std::size_t i, std::size_t j) const;
    std::size_t uq_dim() const { return m * n; }
    std::size_t sym_dim() const { return m * (m + 1) / 2; }
    /// (i, j), i <= j, of a Sym^2 U monomial index
    std::pair<std::size_t, std::size_t> sym_pair(std::size_t k) const;
};

/// A g_0 basis element described through its blocks: a on U, c on Q and,
/// for the rank-zero model, phi in Hom(U, Q) (n x m).
struct G0Element {
    std::string label;
    Matrix a, c, phi;
};

struct Model {
    ModelKind kind = ModelKind::positive;
    std::size_t m = 0, n = 0, nullity = 0;
    ModelIndex idx;
    /// (Q, omega) in normal form; the zero form for the rank-zero model
    PresymplecticSpace q_space;
    GradedLieAlgebra gminus;
    MatrixLieAlgebra g0;
    std::vector<G0Element> g0_elements;

    std::size_t offset_uq() const;
    std::size_t offset_sym() const;
    /// Matrix on g_- of the g_0 element with the given blocks.
    Matrix represent(const Matrix& a, const Matrix& c, const Matrix& phi) const;
};

/// g_{-1} = U (x) Q, g_{-2} = Sym^2 U, [u1 q1, u2 q2] = omega(q1, q2) u1 u2.
Model build_positive_model(std::size_t m, std::size_t n, std::size_t r);
/// Abelian g_{-1} = (U (x) Q) + Sym^2 U with g_0 = Hom(U, Q) x| (gl(U) + gl(Q)).
Model build_rank_zero_model(std::size_t m, std::size_t n);

/// Basis e_i^* (x) f_a of Hom(U, Q) as n x m matrices.
std::vector<Matrix> hom_uq_basis(std::size_t m, std::size_t n);
/// Basis of Sym^2 U^* as symmetric m x m matrices: E_ii and E_ij + E_ji.
std::vector<Matrix> sym2_dual_basis(std::size_t m);

struct PiCandidates {
    /// pi_1(Hom(U,Q)) in the degree-1 cochains (positive model only)
    std::vector<Vector> pi1;
    /// degree-2 (positive) or degree-1 (rank zero) images of Sym^2 U^*
    std::vector<Vector> pi2;
    int pi2_level = 2;
    std::optional<Subspace> g1, g2;
    std::string note;
};

/// Closed-form images of Hom(U,Q) and Sym^2 U^* in the cochain spaces of the tower.
PiCandidates closed_form_pi(const Model& model, const Tower& tower);

struct VerifyOptions {
    int max_degree = 10;
    /// corrupt one structure constant of the assembled algebra before checking it
    bool inject_defect = false;
};

struct ProlongationVerification {
    std::optional<ProlongationResult> result;
    Report report;
};

ProlongationVerification verify_prolongation_theorem(const Model& model, VerifyOptions opts = {});

struct PsiIsomorphism {
    PresymplecticSpace v_space;
    VectorGrading grading;
    std::vector<std::pair<int, Subspace>> sp_pieces;
    /// image in End(V) of every basis element of the assembled algebra
    std::vector<Matrix> images;
    /// discovered uniform constants, by degree, relative to the closed formulas
    std::map<int, Scalar> constants;
    Report checks;
};

/// The presymplectic V of the model with its grading (Q + U + U^* or U^* + Q + U).
std::pair<PresymplecticSpace, VectorGrading> model_vector_space(const Model& model);

PsiIsomorphism build_psi(const Model& model, const ProlongationResult& result);

} // namespace tanaka
