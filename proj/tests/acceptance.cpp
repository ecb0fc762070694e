// One pass/fail line per acceptance criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tanaka/filtr.hpp"
#include "tanaka/grass.hpp"
#include "tanaka/models.hpp"
#include "tanaka/zvariety.hpp"

using namespace tanaka;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

struct GridPoint {
    ModelKind kind;
    std::size_t m, n, r;
    std::string name() const {
        return (kind == ModelKind::positive ? "positive(" : "rank-zero(") + std::to_string(m) + "," +
               std::to_string(n) + (kind == ModelKind::positive ? "," + std::to_string(r) : std::string()) + ")";
    }
    Model build() const { return kind == ModelKind::positive ? build_positive_model(m, n, r) : build_rank_zero_model(m, n); }
};

std::vector<GridPoint> positive_grid(std::vector<std::size_t> ms) {
    std::vector<GridPoint> g;
    for (auto m : ms)
        for (std::size_t n = 2; n <= 4; ++n)
            for (std::size_t r = 0; r + 2 <= n; ++r)
                if ((n - r) % 2 == 0) g.push_back({ModelKind::positive, m, n, r});
    return g;
}

std::vector<GridPoint> rank_zero_grid(std::vector<std::size_t> ms) {
    std::vector<GridPoint> g;
    for (auto m : ms)
        for (std::size_t n = 1; n <= 3; ++n) g.push_back({ModelKind::rank_zero, m, n, 0});
    return g;
}

struct Verified {
    GridPoint point;
    ProlongationVerification tv;
    double seconds;
};

bool passed(const Report& r, const std::string& name, std::string* why = nullptr) {
    const Check* c = r.find(name);
    if (!c) {
        if (why) *why = name + " missing";
        return false;
    }
    if (c->status != Status::pass && why) *why = name + ": expected " + c->expected + ", got " + c->actual;
    return c->status == Status::pass;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Vector nonzero(Rng& rng, std::size_t n) {
    Vector v = rng.vector(n, -3, 3);
    if (is_zero(v)) v[0] = 1;
    return v;
}

} // namespace

int main() {
    int failures = 0;
    auto report = [&](int id, const std::string& title, const std::function<Outcome()>& body) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double s = seconds_since(t0);
        failures += !o.ok;
        std::printf("%s criterion %d: %s [%.2fs]%s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), s,
                    o.detail.empty() ? "" : " : ", o.detail.c_str());
        std::fflush(stdout);
    };

    std::vector<Verified> positive, rank_zero;
    auto verify_all = [](const std::vector<GridPoint>& grid) {
        std::vector<Verified> out;
        for (const auto& p : grid) {
            auto t0 = std::chrono::steady_clock::now();
            ProlongationVerification tv = verify_prolongation_theorem(p.build());
            out.push_back({p, std::move(tv), seconds_since(t0)});
        }
        return out;
    };

    report(1, "positive closed form (mn, m(m+1)/2, 0, 0) with mu = 2, m in {2,3}, n in {2,3,4}", [&] {
        Outcome o;
        positive = verify_all(positive_grid({2, 3}));
        double worst = 0;
        for (const auto& v : positive) {
            std::string why;
            worst = std::max(worst, v.seconds);
            if (!v.tv.result) o.fail(v.point.name() + ": prolongation did not terminate");
            else if (!passed(v.tv.report, "prolong.piece_dims", &why) || !passed(v.tv.report, "prolong.mu", &why))
                o.fail(v.point.name() + " " + why);
            if (v.seconds > 60) o.fail(v.point.name() + " took longer than 60 s");
        }
        if (o.ok) o.detail = std::to_string(positive.size()) + " grid points, slowest " + std::to_string(worst) + " s";
        return o;
    });

    report(2, "rank-zero closed form (m(m+1)/2, 0) with mu = 1, m in {2,3}, n in {1,2,3}", [&] {
        Outcome o;
        rank_zero = verify_all(rank_zero_grid({2, 3}));
        for (const auto& v : rank_zero) {
            std::string why;
            if (!v.tv.result) o.fail(v.point.name() + ": prolongation did not terminate");
            else if (!passed(v.tv.report, "prolong.piece_dims", &why) || !passed(v.tv.report, "prolong.mu", &why))
                o.fail(v.point.name() + " " + why);
            if (v.seconds > 30) o.fail(v.point.name() + " took longer than 30 s");
        }
        if (o.ok) o.detail = std::to_string(rank_zero.size()) + " grid points";
        return o;
    });

    report(3, "kernel-computed g_1, g_2 equal the closed-form spans as echelon subspaces", [&] {
        Outcome o;
        std::size_t n = 0;
        for (const auto* grid : {&positive, &rank_zero})
            for (const auto& v : *grid) {
                std::string why;
                for (const char* name : {"pi.g1_equals_kernel", "pi.g2_equals_kernel", "pi.equivariant", "pi.injective"})
                    if (!passed(v.tv.report, name, &why)) o.fail(v.point.name() + " " + why);
                ++n;
            }
        if (o.ok) o.detail = std::to_string(n) + " grid points";
        return o;
    });

    report(4, "psi is a bracket-preserving isomorphism onto sp_omega(V), dim g = dim sp_omega(V)", [&] {
        Outcome o;
        std::size_t pairs = 0;
        for (const auto* grid : {&positive, &rank_zero})
            for (const auto& v : *grid) {
                if (!v.tv.result) {
                    o.fail(v.point.name() + ": no prolongation");
                    continue;
                }
                auto t0 = std::chrono::steady_clock::now();
                Model M = v.point.build();
                PsiIsomorphism psi = build_psi(M, *v.tv.result);
                if (!psi.checks.ok()) {
                    for (const auto& c : psi.checks.checks())
                        if (c.status != Status::pass) o.fail(v.point.name() + " " + c.name + ": " + c.actual);
                }
                const std::size_t sp = sp_dimension_formula(2 * M.m + M.n, M.kind == ModelKind::positive ? M.nullity : M.n);
                if (v.tv.result->total_dim() != sp)
                    o.fail(v.point.name() + " dim g " + std::to_string(v.tv.result->total_dim()) + " != " + std::to_string(sp));
                if (seconds_since(t0) > 120) o.fail(v.point.name() + " took longer than 120 s");
                const std::size_t d = v.tv.result->total_dim();
                pairs += d * (d - 1) / 2;
            }
        if (o.ok) o.detail = std::to_string(pairs) + " basis pairs checked";
        return o;
    });

    report(5, "Jacobi suite passes on every assembled g and fails on 5 corruptions of each", [&] {
        Outcome o;
        std::size_t caught = 0;
        for (const auto* grid : {&positive, &rank_zero})
            for (const auto& v : *grid) {
                if (!v.tv.result) continue;
                const GradedLieAlgebra& L = v.tv.result->full_algebra;
                if (!check_graded_lie(L).ok()) o.fail(v.point.name() + ": assembled algebra fails");
                for (std::size_t which = 0; which < 5; ++which) {
                    if (check_graded_lie(with_corrupted_constant(L, which)).ok())
                        o.fail(v.point.name() + ": corruption " + std::to_string(which) + " not detected");
                    else
                        ++caught;
                }
            }
        if (o.ok) o.detail = std::to_string(caught) + " corruptions detected";
        return o;
    });

    report(6, "stratum_dim matches the fiber-bundle count for dim V <= 12, gap dim V - 2m - n_omega + 2 >= 2", [&] {
        Outcome o;
        std::size_t cases = 0;
        for (long long D = 4; D <= 12; ++D)
            for (long long nw = 0; nw <= D; ++nw)
                for (long long m = 2; 2 * m <= D - nw; ++m) {
                    if ((D - nw) % 2) continue;
                    for (long long k = 0; k <= std::min(m, nw); ++k) {
                        if (!stratum_params_admissible(m, D, nw, k)) {
                            o.fail("admissible parameters rejected");
                            continue;
                        }
                        ++cases;
                        if (stratum_dim(m, D, nw, k) != stratum_dim_decomposition(m, D, nw, k))
                            o.fail("mismatch at (" + std::to_string(m) + "," + std::to_string(D) + "," +
                                   std::to_string(nw) + "," + std::to_string(k) + ")");
                    }
                    if (nw >= 1) {
                        const long long gap = stratum_dim(m, D, nw, 0) - stratum_dim(m, D, nw, 1);
                        if (gap != D - 2 * m - nw + 2 || gap < 2) o.fail("gap " + std::to_string(gap));
                    }
                }
        if (o.ok) o.detail = std::to_string(cases) + " parameter tuples";
        return o;
    });

    report(7, "line criterion agrees with the 5-point pencil oracle, 100 flags per parameter set, dim V <= 8", [&] {
        Outcome o;
        std::size_t sets = 0, lines = 0, flags = 0;
        for (std::size_t D = 4; D <= 8; ++D)
            for (std::size_t nw = D % 2; nw <= D; nw += 2)
                for (std::size_t m = 2; 2 * m <= D - nw; ++m) {
                    PresymplecticSpace P = PresymplecticSpace::with_nullity(D, nw);
                    Rng rng(1000 * D + 10 * nw + m);
                    ++sets;
                    for (int s = 0; s < 100; ++s) {
                        IsotropicFlag F = random_flag(P, m, rng);
                        validate_flag(F);
                        const bool c = is_line(F);
                        lines += c;
                        ++flags;
                        if (c != pencil_oracle(F).all_isotropic)
                            o.fail("disagreement at dim V " + std::to_string(D) + ", n_omega " + std::to_string(nw));
                    }
                }
        if (o.ok)
            o.detail = std::to_string(sets) + " parameter sets, " + std::to_string(lines) + " lines among " +
                       std::to_string(flags) + " flags";
        return o;
    });

    report(8, "Z: tangent sequence (n, m+n, m), II rank dim W - m - n, base locus T^alpha; strictly larger on E", [&] {
        Outcome o;
        std::size_t smooth = 0, special = 0;
        for (std::size_t m = 2; m <= 3; ++m)
            for (std::size_t n = 1; n <= 3; ++n) {
                WLayout L(m, n);
                Rng rng(100 * m + n);
                const std::string where = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
                for (int s = 0; s < 20; ++s) {
                    Scalar t(rng.integer(1, 3) * (rng.integer(0, 1) ? 1 : -1));
                    ZPoint p = z_embed(L, nonzero(rng, m), nonzero(rng, n), t);
                    ZTangentReport T = z_tangent(L, p);
                    if (T.intersection_with_uq.dim() != n || T.tangent.dim() != m + n || T.epsilon_image.dim() != m ||
                        !T.checks.ok())
                        o.fail("tangent sequence at " + where);
                    SecondFundamentalForm II = second_fundamental_form(L, p);
                    if (II.rank != L.dim() - m - n) o.fail("II rank " + std::to_string(II.rank) + " at " + where);
                    if (II.locus_bound != II.t_alpha || !II.checks.ok()) o.fail("base locus at " + where);
                    ++smooth;
                }
                for (int s = 0; s < 5; ++s) {
                    ZPoint p = z_embed(L, nonzero(rng, m), nonzero(rng, n), Scalar(0));
                    SecondFundamentalForm II = second_fundamental_form(L, p);
                    const bool strict = II.t_beta && !II.t_alpha.contains(*II.t_beta) &&
                                        passed(II.checks, "z.II_vanishes_on_T_beta") &&
                                        passed(II.checks, "z.II_vanishes_on_T_alpha");
                    if (!strict || !II.checks.ok()) o.fail("E point at " + where);
                    ++special;
                }
            }
        if (o.ok) o.detail = std::to_string(smooth) + " smooth points, " + std::to_string(special) + " points of E";
        return o;
    });

    report(9, "symmetry_check accepts every g_0 basis element and rejects a random non-member", [&] {
        Outcome o;
        std::string summary;
        for (std::size_t n = 1; n <= 2; ++n) {
            Model M = build_rank_zero_model(2, n);
            SymmetrySampler S(2, n);
            for (std::size_t x = 0; x < M.g0.dim(); ++x)
                if (!symmetry_check(S, M.g0.element(x))) o.fail("rejects " + M.g0_elements[x].label);
            Rng rng(900 + n);
            std::size_t rejected = 0, tried = 0;
            while (tried < 10) {
                Matrix X(S.layout().dim(), S.layout().dim());
                for (std::size_t i = 0; i < X.rows(); ++i)
                    for (std::size_t j = 0; j < X.cols(); ++j) X(i, j) = Scalar(rng.integer(-2, 2));
                if (M.g0.contains(X)) continue;
                ++tried;
                rejected += !symmetry_check(S, X);
            }
            if (rejected < 1) o.fail("no random non-member rejected for n = " + std::to_string(n));
            summary += (summary.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " +
                       std::to_string(rejected) + "/10 rejected over " + std::to_string(S.size()) + " samples";
        }
        if (o.ok) o.detail = summary;
        return o;
    });

    report(10, "standard filtrations are g0-reductive; decomposition totals equal dim C^{l,2}, l = 1..4, m = 2", [&] {
        Outcome o;
        std::size_t decomps = 0;
        auto grid = positive_grid({2});
        auto rz = rank_zero_grid({2});
        grid.insert(grid.end(), rz.begin(), rz.end());
        for (const auto& p : grid) {
            Model M = p.build();
            ProlongationResult R = prolong(M.g0, M.gminus);
            for (const auto& sf : standard_filtrations(M, R))
                if (!is_g0_reductive(sf.filtration, sf.radical))
                    o.fail(p.name() + ": filtration of g_" + std::to_string(sf.degree) + " not reductive");
            for (int l = 1; l <= 4; ++l) {
                SpencerDecomposition D = spencer_graded_decomposition(M, R, l);
                if (D.total != spencer_spaces(*R.tower, l).dim2)
                    o.fail(p.name() + " level " + std::to_string(l) + ": total " + std::to_string(D.total));
                for (const auto& c : D.checks.checks())
                    if (c.status != Status::pass) o.fail(p.name() + " level " + std::to_string(l) + " " + c.name);
                ++decomps;
            }
        }
        if (o.ok) o.detail = std::to_string(decomps) + " decompositions";
        return o;
    });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
