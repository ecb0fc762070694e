#include "tanaka/filtr.hpp"

#include <algorithm>
#include <stdexcept>

namespace tanaka {

namespace {

using Structure = std::vector<std::pair<int, std::string>>;

std::map<int, Structure> level_structure(const Model& M) {
    if (M.kind == ModelKind::positive)
        return {{-2, {{1, "B0"}}},
                {-1, {{1, "B2"}, {2, "B1"}}},
                {0, {{1, "B6"}, {2, "B5"}, {3, "B4"}, {4, "B3"}}},
                {1, {{1, "B8"}, {2, "B7"}}},
                {2, {{1, "B9"}}}};
    return {{-1, {{1, "B2"}, {2, "B0"}}}, {0, {{1, "B8"}, {2, "B5"}, {3, "B3"}}}, {1, {{1, "B9"}}}};
}

std::string source_label(const Model& M, int i, int j, std::string p, std::string q) {
    if (i == j && q < p) std::swap(p, q);
    if (M.kind == ModelKind::positive) {
        if (i == 2 && j == 2 && p == "B0" && q == "B0") return "A1";
        if (i == 1 && j == 2 && q == "B0") return p == "B2" ? "A2" : (p == "B1" ? "A3" : "?");
        if (i == 1 && j == 1) {
            if (p == "B2" && q == "B2") return "A4";
            if (p == "B1" && q == "B2") return "A5";
            if (p == "B1" && q == "B1") return "A6";
        }
        return "?";
    }
    if (i == 1 && j == 1) {
        if (p == "B0" && q == "B0") return "A1";
        if (p == "B0" && q == "B2") return "A2";
        if (p == "B2" && q == "B2") return "A4";
    }
    return "?";
}

int label_number(const std::string& s) { return std::stoi(s.substr(1)); }

bool allowed(const Model& M, const std::string& a, const std::string& b) {
    if (a == "?" || b.empty()) return false;
    const int i = label_number(a), j = label_number(b);
    if (M.kind == ModelKind::positive) return (1 <= i && i <= 6 && 1 <= j && j <= 9) || (i <= 3 && j == 0);
    return (i == 1 || i == 2 || i == 4) && (j == 0 || j == 2 || j == 3 || j == 5 || j == 8 || j == 9);
}

struct Cochain {
    std::size_t block;
    std::size_t p, q, t;
    MultiIndex level;
    std::size_t piece;
};

using Sparse = std::map<std::size_t, Scalar>;

} // namespace

SpencerDecomposition spencer_graded_decomposition(const Model& M, const ProlongationResult& R, int level) {
    if (level < 1) throw std::invalid_argument("spencer_graded_decomposition: level must be >= 1");
    SpencerDecomposition out;
    out.level = level;
    Report& rep = out.checks;
    const Tower& tower = *R.tower;
    const SpencerSpaces S = spencer_spaces(tower, level);
    out.c2_dim = S.dim2;
    const AdaptedModules A = adapted_modules(M, R);
    const auto structure = level_structure(M);
    const auto catalog = module_catalog(M);

    auto count_at = [&](int d, int lv) {
        std::size_t c = 0;
        for (int x : A.level.at(d)) c += x == lv;
        return c;
    };
    auto dual = [](int lv) { return 1 - lv; };

    // structural pieces, including empty ones
    std::map<std::tuple<std::size_t, int, int, int>, std::size_t> piece_of;
    std::vector<std::size_t> blocks;
    for (std::size_t b = 0; b < S.c2.size(); ++b) {
        const auto& blk = S.c2[b];
        if (blk.target_dim == 0 || !structure.count(blk.target_degree)) continue;
        blocks.push_back(b);
        const auto& si = structure.at(-blk.i);
        const auto& sj = structure.at(-blk.j);
        for (std::size_t x = 0; x < si.size(); ++x)
            for (std::size_t y = (blk.i == blk.j ? x : 0); y < sj.size(); ++y)
                for (const auto& [tl, tlab] : structure.at(blk.target_degree)) {
                    DecompositionPiece pc;
                    pc.i = blk.i;
                    pc.j = blk.j;
                    pc.target_degree = blk.target_degree;
                    pc.a_label = source_label(M, blk.i, blk.j, si[x].second, sj[y].second);
                    pc.b_label = tlab;
                    int a = dual(si[x].first), bb = dual(sj[y].first);
                    if (blk.i == blk.j && bb < a) std::swap(a, bb);
                    pc.index = {a, bb, tl};
                    const std::size_t ci = count_at(-blk.i, si[x].first), cj = count_at(-blk.j, sj[y].first);
                    const std::size_t src = (blk.i == blk.j && x == y) ? ci * (ci - (ci > 0)) / 2 : ci * cj;
                    pc.dim = src * count_at(blk.target_degree, tl);
                    auto ca = catalog.find(pc.a_label), cb = catalog.find(pc.b_label);
                    pc.expected_dim = (ca != catalog.end() && cb != catalog.end()) ? ca->second.dim * cb->second.dim : 0;
                    piece_of[{b, pc.index[0], pc.index[1], pc.index[2]}] = out.pieces.size();
                    out.pieces.push_back(std::move(pc));
                }
    }

    // basis cochains e^*_p ^ e^*_q (x) t in adapted coordinates
    std::vector<Cochain> cochains;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, std::size_t> where;
    std::vector<std::size_t> counted(out.pieces.size(), 0);
    for (std::size_t b : blocks) {
        const auto& blk = S.c2[b];
        const auto& li = A.level.at(-blk.i);
        const auto& lj = A.level.at(-blk.j);
        const auto& lt = A.level.at(blk.target_degree);
        for (const auto& [p, q] : blk.pairs)
            for (std::size_t t = 0; t < blk.target_dim; ++t) {
                int a = dual(li[p]), bb = dual(lj[q]);
                if (blk.i == blk.j && bb < a) std::swap(a, bb);
                MultiIndex lv{a, bb, lt[t]};
                auto it = piece_of.find({b, a, bb, lt[t]});
                if (it == piece_of.end()) throw std::logic_error("spencer_graded_decomposition: cochain outside the catalog");
                where[{b, p, q, t}] = cochains.size();
                cochains.push_back({b, p, q, t, lv, it->second});
                ++counted[it->second];
            }
    }
    bool counts_agree = true;
    for (std::size_t k = 0; k < out.pieces.size(); ++k) counts_agree = counts_agree && counted[k] == out.pieces[k].dim;

    // X . c for X given by its matrices on each degree
    auto act = [&](const std::map<int, Matrix>& X, const Cochain& c) {
        Sparse r;
        const auto& blk = S.c2[c.block];
        const bool wedge = blk.i == blk.j;
        auto add = [&](std::size_t p, std::size_t q, std::size_t t, Scalar v) {
            if (v.is_zero()) return;
            if (wedge) {
                if (p == q) return;
                if (p > q) {
                    std::swap(p, q);
                    v = -v;
                }
            }
            r[where.at({c.block, p, q, t})] += v;
        };
        const Matrix& T = X.at(blk.target_degree);
        const Matrix& Xi = X.at(-blk.i);
        const Matrix& Xj = X.at(-blk.j);
        for (std::size_t t2 = 0; t2 < T.rows(); ++t2) add(c.p, c.q, t2, T(t2, c.t));
        for (std::size_t p2 = 0; p2 < Xi.cols(); ++p2) add(p2, c.q, c.t, -Xi(c.p, p2));
        for (std::size_t q2 = 0; q2 < Xj.cols(); ++q2) add(c.p, q2, c.t, -Xj(c.q, q2));
        return r;
    };
    auto le = [](const MultiIndex& x, const MultiIndex& y) {
        for (std::size_t l = 0; l < x.size(); ++l)
            if (x[l] > y[l]) return false;
        return true;
    };
    auto matrices_of = [&](const Vector& coef) {
        std::map<int, Matrix> X;
        for (const auto& [d, mats] : A.action) {
            Matrix s(A.dim.at(d), A.dim.at(d));
            for (std::size_t x = 0; x < coef.size(); ++x)
                if (!coef[x].is_zero()) s += coef[x] * mats[x];
            X[d] = std::move(s);
        }
        return X;
    };

    std::size_t not_invariant = 0, not_trivial = 0;
    std::string inv_witness, rad_witness;
    const std::size_t ng0 = M.g0.dim();
    std::vector<bool> is_radical(ng0, false);
    for (std::size_t r : A.radical) is_radical[r] = true;
    for (std::size_t x = 0; x < ng0; ++x) {
        auto X = matrices_of(unit_vector(ng0, x));
        for (const auto& c : cochains)
            for (const auto& [d, v] : act(X, c)) {
                if (v.is_zero()) continue;
                const auto& ld = cochains[d].level;
                if (!le(ld, c.level)) {
                    if (not_invariant++ == 0) inv_witness = M.g0_elements[x].label;
                } else if (is_radical[x] && ld == c.level) {
                    if (not_trivial++ == 0) rad_witness = M.g0_elements[x].label;
                }
            }
    }

    // central torus weights
    std::vector<bool> weight_ok(out.pieces.size(), true);
    for (std::size_t z = 0; z < A.torus.size(); ++z) {
        auto Z = matrices_of(A.torus[z]);
        for (const auto& c : cochains) {
            const auto& pc = out.pieces[c.piece];
            auto ca = catalog.find(pc.a_label), cb = catalog.find(pc.b_label);
            if (ca == catalog.end() || cb == catalog.end()) {
                weight_ok[c.piece] = false;
                continue;
            }
            const int w = z == 0 ? cb->second.weight_u - ca->second.weight_u
                                 : cb->second.weight_null - ca->second.weight_null;
            Sparse img = act(Z, c);
            const std::size_t self = where.at({c.block, c.p, c.q, c.t});
            for (const auto& [d, v] : img)
                if (!(d == self ? v == Scalar(w) : v.is_zero())) weight_ok[c.piece] = false;
            if (w != 0 && !img.count(self)) weight_ok[c.piece] = false;
        }
    }

    std::size_t bad_dims = 0, bad_types = 0, bad_weights = 0;
    std::string dim_witness, type_witness, weight_witness;
    for (std::size_t k = 0; k < out.pieces.size(); ++k) {
        auto& pc = out.pieces[k];
        pc.weight_ok = weight_ok[k];
        out.total += pc.dim;
        const std::string name = "Hom(" + pc.a_label + ", " + pc.b_label + ")";
        if (pc.dim != pc.expected_dim && bad_dims++ == 0) dim_witness = name;
        if (!allowed(M, pc.a_label, pc.b_label) && bad_types++ == 0) type_witness = name;
        if (!pc.weight_ok && bad_weights++ == 0) weight_witness = name;
    }

    const std::string lv = "level " + std::to_string(level);
    rep.add("decomposition.total_equals_c2", out.total == S.dim2 && counts_agree, std::to_string(S.dim2),
            std::to_string(out.total) + (counts_agree ? "" : " (piece counts disagree with the cochain basis)"),
            "graded pieces of C^{l,2} sum to dim C^{l,2}, " + lv);
    rep.add("decomposition.g0_invariant", not_invariant == 0, "0 violations",
            std::to_string(not_invariant) + (not_invariant ? " violations, first under " + inv_witness : " violations"),
            "each filtration piece is a g0-submodule");
    rep.add("decomposition.radical_trivial", not_trivial == 0, "0 violations",
            std::to_string(not_trivial) + (not_trivial ? " violations, first under " + rad_witness : " violations"),
            "the nilradical acts trivially on every graded object");
    rep.add("decomposition.catalog_dims", bad_dims == 0, "dim gr = dim A_i * dim B_j",
            std::to_string(bad_dims) + " mismatches" + (bad_dims ? ", first " + dim_witness : std::string()),
            "graded objects are of the form Hom(A_i, B_j)");
    rep.add("decomposition.torus_weights", bad_weights == 0, "central torus acts by the catalog weights",
            std::to_string(bad_weights) + " mismatches" + (bad_weights ? ", first " + weight_witness : std::string()),
            "graded pieces matched by the weights of U and Null scalars");
    rep.add("decomposition.types_allowed", bad_types == 0, "only the listed Hom(A_i, B_j)",
            std::to_string(bad_types) + " unlisted" + (bad_types ? ", first " + type_witness : std::string()),
            "the A/B lists of the vanishing argument");
    return out;
}

} // namespace tanaka
