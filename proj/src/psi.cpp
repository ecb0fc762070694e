#include "tanaka/grass.hpp"
#include "tanaka/models.hpp"

#include <stdexcept>

namespace tanaka {

std::pair<PresymplecticSpace, VectorGrading> model_vector_space(const Model& M) {
    const std::size_t m = M.m, n = M.n, d = 2 * m + n;
    Matrix W(d, d);
    VectorGrading g;
    g.degree_of.assign(d, 0);
    if (M.kind == ModelKind::positive) {
        // Q, then U (degree -1), then U^* (degree 1); omega(f, v) = f(v)
        W.set_block(0, 0, M.q_space.omega());
        for (std::size_t i = 0; i < m; ++i) {
            W(n + m + i, n + i) = 1;
            W(n + i, n + m + i) = -1;
            g.degree_of[n + i] = -1;
            g.degree_of[n + m + i] = 1;
        }
    } else {
        // U^* (degree 1), then Q = Null, then U; shifted integer degrees
        for (std::size_t i = 0; i < m; ++i) {
            W(i, m + n + i) = 1;
            W(m + n + i, i) = -1;
            g.degree_of[i] = 1;
        }
    }
    return {PresymplecticSpace(std::move(W)), std::move(g)};
}

namespace {

struct Blocks {
    std::size_t q, u, us;  // offsets of Q, U, U^*
};

Blocks blocks_of(const Model& M) {
    if (M.kind == ModelKind::positive) return {0, M.n, M.n + M.m};
    return {M.m, M.m + M.n, 0};
}

Matrix natural_action(const Model& M, const G0Element& X) {
    const std::size_t m = M.m, n = M.n, d = 2 * m + n;
    const Blocks b = blocks_of(M);
    Matrix Y(d, d);
    if (X.a.rows() == m) {
        Y.set_block(b.u, b.u, X.a);
        // a^* lambda = -lambda o a
        Y.set_block(b.us, b.us, Scalar(-1) * X.a.transpose());
    }
    if (X.c.rows() == n) Y.set_block(b.q, b.q, X.c);
    if (X.phi.rows() == n && X.phi.cols() == m) Y.set_block(b.q, b.u, X.phi);
    return Y;
}

const Subspace* piece_of(const std::vector<std::pair<int, Subspace>>& pieces, int k) {
    for (const auto& [d, s] : pieces)
        if (d == k) return &s;
    return nullptr;
}

// Uniform c with a = c b over all pairs; nullopt when no such constant exists.
std::optional<Scalar> uniform_ratio(const std::vector<Matrix>& as, const std::vector<Matrix>& bs) {
    std::optional<Scalar> c;
    for (std::size_t i = 0; i < as.size(); ++i) {
        const Vector& a = as[i].flat();
        const Vector& b = bs[i].flat();
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (b[j].is_zero()) {
                if (!a[j].is_zero()) return std::nullopt;
                continue;
            }
            Scalar r = a[j] / b[j];
            if (c && *c != r) return std::nullopt;
            c = r;
        }
    }
    if (!c) c = Scalar(1);
    return c;
}

} // namespace

PsiIsomorphism build_psi(const Model& M, const ProlongationResult& R) {
    PsiIsomorphism out;
    Report& rep = out.checks;
    auto [V, grading] = model_vector_space(M);
    out.v_space = V;
    out.grading = grading;
    out.sp_pieces = sp_grading(V, grading);
    const std::size_t m = M.m, n = M.n, d = V.dim();
    const Blocks bl = blocks_of(M);
    const Tower& tower = *R.tower;
    const GradedLieAlgebra& L = R.full_algebra;
    const auto& space = L.space();
    const auto& ix = M.idx;
    out.images.assign(L.dim(), Matrix(d, d));
    auto image = [&](int deg, std::size_t t) -> Matrix& { return out.images[space.offset(deg) + t]; };
    auto psi_of = [&](int deg, const Vector& x) {
        Matrix r(d, d);
        for (std::size_t t = 0; t < x.size(); ++t)
            if (!x[t].is_zero()) r += x[t] * image(deg, t);
        return r;
    };

    // degree -1
    std::vector<Matrix> formula(tower.dim(-1), Matrix(d, d));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t a = 0; a < n; ++a) {
            Matrix& Y = formula[ix.uq(i, a)];
            // lambda -> lambda(w) q
            Y(bl.q + a, bl.us + i) = 1;
            // p -> omega(q, p) w
            for (std::size_t b = 0; b < n; ++b)
                if (!M.q_space.omega()(a, b).is_zero()) Y(bl.u + i, bl.q + b) = M.q_space.omega()(a, b);
        }
    if (M.kind == ModelKind::rank_zero)
        for (std::size_t k = 0; k < ix.sym_dim(); ++k) {
            auto [i, j] = ix.sym_pair(k);
            Matrix& Y = formula[ix.uq_dim() + k];
            // beta_{u.v}(lambda) = (1/2) lambda(u) v + (1/2) lambda(v) u
            Y(bl.u + j, bl.us + i) += half();
            Y(bl.u + i, bl.us + j) += half();
        }
    const Subspace* sp_m1 = piece_of(out.sp_pieces, -1);
    {
        // the element of sp_{-1} with the prescribed U^* -> Q (and, rank zero, U^* -> U) part
        std::vector<Matrix> solved;
        bool ok = sp_m1 != nullptr;
        std::vector<std::pair<std::size_t, std::size_t>> fixed;
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                if (grading.degree_of[c] == 1 && grading.degree_of[r] == grading.degree_of[c] - 1) fixed.emplace_back(r, c);
        if (M.kind == ModelKind::positive) {
            fixed.clear();
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t i = 0; i < m; ++i) fixed.emplace_back(bl.q + a, bl.us + i);
        }
        Matrix A(fixed.size(), ok ? sp_m1->dim() : 0);
        for (std::size_t c = 0; ok && c < sp_m1->dim(); ++c)
            for (std::size_t e = 0; e < fixed.size(); ++e) A(e, c) = sp_m1->vector(c)[fixed[e].first * d + fixed[e].second];
        for (std::size_t t = 0; ok && t < formula.size(); ++t) {
            Vector b(fixed.size());
            for (std::size_t e = 0; e < fixed.size(); ++e) b[e] = formula[t](fixed[e].first, fixed[e].second);
            auto y = solve(A, b);
            if (!y) {
                ok = false;
                break;
            }
            Vector flat(d * d);
            for (std::size_t c = 0; c < y->size(); ++c) axpy(flat, (*y)[c], sp_m1->vector(c));
            solved.push_back(Matrix::unflatten(flat, d, d));
        }
        ok = ok && rank(A) == A.cols();
        if (!ok) {
            rep.add("psi.minus1_defined", false, "unique element of sp_{-1} per basis vector", "no unique solution",
                    "psi_{-1} is an isomorphism onto sp_omega(V)_{-1}");
            return out;
        }
        // compare the remaining block with the closed formula
        std::vector<Matrix> other_s, other_f;
        for (std::size_t t = 0; t < formula.size(); ++t) {
            Matrix s = solved[t], f = formula[t];
            for (const auto& [r, c] : fixed) s(r, c) = f(r, c) = 0;
            other_s.push_back(s);
            other_f.push_back(f);
        }
        auto c = uniform_ratio(other_s, other_f);
        out.constants[-1] = c ? *c : Scalar(0);
        const bool matches = c && c->is_one();
        rep.add("psi.minus1_formula", c.has_value(), "Q -> U part equals c * omega(q, p) w for one constant c",
                c ? "c = " + c->to_string() + (matches ? "" : " (sign forced by sp membership)") : "no uniform constant",
                "psi_{-1}(w(x)q)(p) = omega(q, p) w");
        for (std::size_t t = 0; t < solved.size(); ++t) image(-1, t) = solved[t];
    }

    // degree -2
    if (M.kind == ModelKind::positive) {
        std::vector<Matrix> eta(ix.sym_dim(), Matrix(d, d));
        for (std::size_t k = 0; k < ix.sym_dim(); ++k) {
            auto [i, j] = ix.sym_pair(k);
            // eta_{u.v}(lambda) = lambda(u) v + lambda(v) u
            eta[k](bl.u + j, bl.us + i) += 1;
            eta[k](bl.u + i, bl.us + j) += 1;
        }
        std::vector<Matrix> lhs, rhs;
        for (std::size_t x = 0; x < tower.dim(-1); ++x)
            for (std::size_t y = x + 1; y < tower.dim(-1); ++y) {
                lhs.push_back(commutator(image(-1, x), image(-1, y)));
                Matrix r(d, d);
                Vector br = tower.bracket(-1, unit_vector(tower.dim(-1), x), -1, unit_vector(tower.dim(-1), y));
                for (std::size_t k = 0; k < br.size(); ++k)
                    if (!br[k].is_zero()) r += br[k] * eta[k];
                rhs.push_back(r);
            }
        auto c = uniform_ratio(lhs, rhs);
        out.constants[-2] = c ? *c : Scalar(0);
        rep.add("psi.minus2_normalization", c.has_value() && !c->is_zero(),
                "[psi w1q1, psi w2q2] = c omega(q1,q2) eta_{w1.w2} for one constant c",
                c ? "c = " + c->to_string() : "no uniform constant",
                "[psi_{-1}(w1(x)q1), psi_{-1}(w2(x)q2)] = omega(q1,q2) psi_{-2}(w1.w2)");
        for (std::size_t k = 0; k < ix.sym_dim(); ++k) image(-2, k) = (c ? *c : Scalar(1)) * eta[k];
    }

    // degree 0
    std::vector<Matrix> nat;
    std::size_t outside0 = 0;
    const Subspace* sp0 = piece_of(out.sp_pieces, 0);
    for (const auto& X : M.g0_elements) {
        nat.push_back(natural_action(M, X));
        if (!sp0 || !sp0->contains(nat.back().flat())) ++outside0;
    }
    rep.add("psi.g0_in_sp0", outside0 == 0, "0 generators outside sp_0", std::to_string(outside0) + " outside",
            "the natural action of g_0 on V preserves omega and the grading");
    {
        std::vector<Vector> cols;
        for (std::size_t i = 0; i < M.g0.dim(); ++i) cols.push_back(tower.g0_coordinates(i));
        CoordinateSolver G(Matrix::from_columns(cols, tower.dim(0)));
        for (std::size_t t = 0; t < tower.dim(0); ++t) {
            Vector coef = G.coordinates(unit_vector(tower.dim(0), t));
            Matrix Y(d, d);
            for (std::size_t i = 0; i < coef.size(); ++i)
                if (!coef[i].is_zero()) Y += coef[i] * nat[i];
            image(0, t) = Y;
        }
    }

    // positive degrees: [psi(phi), psi(v)] = psi(phi(v)) for all v in g_-
    bool consistent = true, unique = true;
    for (int k = 1; k <= R.mu; ++k) {
        const Subspace* spk = piece_of(out.sp_pieces, k);
        const std::size_t R_k = spk ? spk->dim() : 0;
        std::vector<std::pair<int, std::size_t>> vs;
        for (int j = 1; j <= tower.depth(); ++j)
            for (std::size_t s = 0; s < tower.dim(-j); ++s) vs.emplace_back(j, s);
        Matrix A(vs.size() * d * d, R_k);
        for (std::size_t r = 0; r < R_k; ++r) {
            Matrix Z = Matrix::unflatten(spk->vector(r), d, d);
            for (std::size_t e = 0; e < vs.size(); ++e) {
                Matrix C = commutator(Z, image(-vs[e].first, vs[e].second));
                for (std::size_t q = 0; q < d * d; ++q) A(e * d * d + q, r) = C.flat()[q];
            }
        }
        if (rank(A) != R_k) unique = false;
        for (std::size_t t = 0; t < tower.dim(k); ++t) {
            Vector b(vs.size() * d * d);
            Vector et = unit_vector(tower.dim(k), t);
            for (std::size_t e = 0; e < vs.size(); ++e) {
                const auto [j, s] = vs[e];
                Matrix T = psi_of(k - j, tower.act(k, et, j, s));
                for (std::size_t q = 0; q < d * d; ++q) b[e * d * d + q] = T.flat()[q];
            }
            auto y = solve(A, b);
            if (!y) {
                consistent = false;
                continue;
            }
            Matrix Y(d, d);
            for (std::size_t r = 0; r < R_k; ++r)
                if (!(*y)[r].is_zero()) Y += (*y)[r] * Matrix::unflatten(spk->vector(r), d, d);
            image(k, t) = Y;
        }
    }
    rep.add("psi.intertwining_consistent", consistent, "solvable for every basis element",
            consistent ? "solvable" : "inconsistent system",
            "psi_k is induced by the adjoint action of sp_omega(V) on sp_{<0}");
    rep.add("psi.intertwining_unique", unique, "unique solutions", unique ? "unique" : "non-unique",
            "an element of sp_k, k > 0, commuting with sp_{<0} is zero");

    // degree-preserving
    std::size_t wrong_deg = 0;
    for (std::size_t g = 0; g < L.dim(); ++g) {
        const Subspace* p = piece_of(out.sp_pieces, space.degree_of(g));
        if (!p || !p->contains(out.images[g].flat())) ++wrong_deg;
    }
    rep.add("psi.degree_preserving", wrong_deg == 0, "0 images off degree", std::to_string(wrong_deg) + " off degree",
            "psi maps g_k into sp_omega(V)_k");

    std::vector<Vector> flats;
    for (const auto& Y : out.images) flats.push_back(Y.flat());
    const std::size_t img_rank = Subspace::span(flats, d * d).dim();
    const std::size_t sp_dim = sp_algebra(V).dim();
    rep.add("psi.bijective", img_rank == L.dim() && L.dim() == sp_dim,
            "rank " + std::to_string(sp_dim) + " = dim g = dim sp_omega(V)",
            "rank " + std::to_string(img_rank) + ", dim g " + std::to_string(L.dim()) + ", dim sp " + std::to_string(sp_dim),
            "psi is a linear isomorphism g -> sp_omega(V)");

    std::size_t bad = 0, pairs = 0;
    std::string witness;
    for (std::size_t a = 0; a < L.dim(); ++a)
        for (std::size_t b = a + 1; b < L.dim(); ++b) {
            ++pairs;
            Matrix lhs(d, d);
            for (const auto& [g, c] : L.bracket_sparse(a, b)) lhs += c * out.images[g];
            if (lhs != commutator(out.images[a], out.images[b]) && bad++ == 0)
                witness = "[" + space.label(a) + ", " + space.label(b) + "]";
        }
    rep.add("psi.brackets", bad == 0, "0 violating pairs",
            std::to_string(bad) + " violating pairs of " + std::to_string(pairs) + (bad ? ", first " + witness : std::string()),
            "psi([x, y]) = [psi x, psi y]");

    std::size_t neg = 0;
    for (const auto& [k, s] : out.sp_pieces)
        if (k < 0) neg += s.dim();
    long long sd = stratum_dim(static_cast<long long>(m), static_cast<long long>(d), static_cast<long long>(M.nullity), 0);
    rep.add("psi.negative_dim_equals_stratum_dim", static_cast<long long>(neg) == sd, std::to_string(sd),
            std::to_string(neg), "dim of the negative part of sp_omega(V) = dim of the open stratum");
    return out;
}

} // namespace tanaka
