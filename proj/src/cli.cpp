#include "tanaka/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "tanaka/filtr.hpp"
#include "tanaka/grass.hpp"
#include "tanaka/models.hpp"
#include "tanaka/zvariety.hpp"

namespace tanaka::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <class T>
bool parse_number(const std::string& s, T& out) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

std::string dims_text(const std::vector<std::size_t>& d) {
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? ", " : "") + std::to_string(d[i]);
    return s;
}

Model build_model(const ModelConfig& c) {
    return c.kind == "positive" ? build_positive_model(c.m, c.n, c.nullity) : build_rank_zero_model(c.m, c.n);
}

std::string cell_prefix(const ModelConfig& c) {
    std::string p = "m" + std::to_string(c.m) + ".n" + std::to_string(c.n);
    if (c.kind == "positive") p += ".r" + std::to_string(c.nullity);
    return p + ".";
}

bool admissible(const ModelConfig& c) {
    try {
        validate_config(c);
        return true;
    } catch (const ConfigError&) {
        return false;
    }
}

// Aggregates per-sample reports into one check per name.
void aggregate(Report& into, const std::vector<Report>& samples, const std::string& prefix) {
    std::vector<std::string> names;
    std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
    std::map<std::string, std::string> witness, source, expected;
    for (std::size_t s = 0; s < samples.size(); ++s)
        for (const auto& c : samples[s].checks()) {
            if (!tally.count(c.name)) {
                names.push_back(c.name);
                source[c.name] = c.source;
                expected[c.name] = c.expected;
            }
            auto& [total, bad] = tally[c.name];
            ++total;
            if (c.status != Status::pass && bad++ == 0)
                witness[c.name] = "sample " + std::to_string(s) + ": " + c.actual;
        }
    for (const auto& name : names) {
        const auto [total, bad] = tally[name];
        into.add(prefix + name, bad == 0, expected[name] + " at every sample",
                 std::to_string(total - bad) + "/" + std::to_string(total) + " samples" +
                     (bad ? ", first failure " + witness[name] : std::string()),
                 source[name]);
    }
}

Vector nonzero_vector(Rng& rng, std::size_t n) {
    Vector v = rng.vector(n, -3, 3);
    if (is_zero(v)) v[rng.integer(0, static_cast<long long>(n) - 1)] = 1;
    return v;
}

Scalar nonzero_scalar(Rng& rng) {
    long long t = rng.integer(-3, 2);
    return Scalar(t >= 0 ? t + 1 : t);
}

// ---- commands ----

void cmd_prolong(const ModelConfig& c, Document& d) {
    Model M = build_model(c);
    ProlongOptions po;
    po.max_degree = c.max_degree;
    ProlongationResult R = prolong(M.g0, M.gminus, po);
    const auto dims = R.piece_dims();
    d.details.push_back("piece dims (g_1, g_2, ...): " + dims_text(dims));
    d.details.push_back("dim g = " + std::to_string(R.total_dim()) + ", mu = " + std::to_string(R.mu));
    const std::size_t m = c.m, n = c.n;
    std::vector<std::size_t> expected = c.kind == "positive" ? std::vector<std::size_t>{m * n, m * (m + 1) / 2, 0, 0}
                                                             : std::vector<std::size_t>{m * (m + 1) / 2, 0};
    d.report.add("prolong.piece_dims", dims == expected, dims_text(expected), dims_text(dims),
                 "kernel dimensions of the Spencer boundary");
    d.report.add("prolong.terminated", R.terminated, "true", R.terminated ? "true" : "false",
                 "nu consecutive zero pieces");
    d.report.merge(R.checks, "lie.");
}

Report verify_cell(const ModelConfig& c0, const std::string& target, bool inject) {
    ModelConfig c = c0;
    if (target == "thm4.2") c.kind = "positive";
    if (target == "thm4.12") c.kind = "rank-zero";
    Report rep;
    Model M = build_model(c);
    VerifyOptions vo;
    vo.max_degree = c.max_degree;
    vo.inject_defect = inject;
    ProlongationVerification tv = verify_prolongation_theorem(M, vo);
    if (target != "psi") rep.merge(tv.report);
    if (target == "psi" || target == "all") {
        if (!tv.result) {
            rep.add_error("psi.build", "prolongation did not terminate", "psi is defined on the assembled algebra");
        } else {
            try {
                PsiIsomorphism psi = build_psi(M, *tv.result);
                rep.merge(psi.checks);
            } catch (const std::exception& e) {
                rep.add_error("psi.build", e.what(), "psi is defined on the assembled algebra");
            }
        }
    }
    return rep;
}

void cmd_verify(const ModelConfig& c, const std::string& target, const std::optional<GridSpec>& grid, bool inject,
                Document& d) {
    if (!grid) {
        ModelConfig cc = c;
        if (target == "thm4.2") cc.kind = "positive";
        if (target == "thm4.12") cc.kind = "rank-zero";
        validate_config(cc);
        d.report = verify_cell(cc, target, inject);
        return;
    }
    std::vector<ModelConfig> cells;
    for (auto m : grid->m)
        for (auto n : grid->n)
            for (auto r : grid->r) {
                ModelConfig cc = c;
                if (target == "thm4.2") cc.kind = "positive";
                if (target == "thm4.12") cc.kind = "rank-zero";
                cc.m = m;
                cc.n = n;
                cc.nullity = cc.kind == "positive" ? r : 0;
                if (!admissible(cc)) continue;
                if (std::none_of(cells.begin(), cells.end(), [&](const ModelConfig& x) {
                        return x.m == cc.m && x.n == cc.n && x.nullity == cc.nullity;
                    }))
                    cells.push_back(cc);
            }
    if (cells.empty()) throw ConfigError("grid has no admissible parameter sets");
    std::vector<Report> reports(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < cells.size();) {
            try {
                reports[i] = verify_cell(cells[i], target, inject);
            } catch (const std::exception& e) {
                reports[i].add_error("run", e.what());
            }
        }
    };
    const std::size_t nt = std::min<std::size_t>(cells.size(), std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        d.details.push_back("cell " + cell_prefix(cells[i]).substr(0, cell_prefix(cells[i]).size() - 1) + ": " +
                            std::to_string(reports[i].count(Status::pass)) + " passed, " +
                            std::to_string(reports[i].count(Status::fail) + reports[i].count(Status::error)) +
                            " failed");
        d.report.merge(reports[i], cell_prefix(cells[i]));
    }
}

void cmd_spencer(const ModelConfig& c, int level, Document& d) {
    if (level < 1) throw ConfigError("constraint violated: level ≥ 1");
    Model M = build_model(c);
    ProlongOptions po;
    po.max_degree = c.max_degree;
    ProlongationResult R = prolong(M.g0, M.gminus, po);
    const Tower& tower = *R.tower;
    if (level > tower.computed_max() + 1)
        throw ConfigError("constraint violated: level ≤ " + std::to_string(tower.computed_max() + 1));
    SpencerSpaces S = spencer_spaces(tower, level);
    Matrix D = spencer_boundary(tower, S);
    const std::size_t rk = rank(D);
    d.details.push_back("dim C^{" + std::to_string(level) + ",1} = " + std::to_string(S.dim1));
    d.details.push_back("dim C^{" + std::to_string(level) + ",2} = " + std::to_string(S.dim2));
    d.details.push_back("rank of the boundary = " + std::to_string(rk));
    const std::size_t expected = tower.dim(level);
    d.report.add("spencer.kernel_dim", S.dim1 - rk == expected, std::to_string(expected), std::to_string(S.dim1 - rk),
                 "g_l is the kernel of the boundary on C^{l,1}");
    std::size_t c1 = 0, c2 = 0;
    for (const auto& b : S.c1) c1 += b.source_dim * b.target_dim;
    for (const auto& b : S.c2) c2 += b.pairs.size() * b.target_dim;
    d.report.add("spencer.block_dims", c1 == S.dim1 && c2 == S.dim2,
                 std::to_string(S.dim1) + ", " + std::to_string(S.dim2),
                 std::to_string(c1) + ", " + std::to_string(c2), "C^{l,q} is the sum of its Hom blocks");
}

void cmd_strata(long long m, long long dimv, long long nw, Document& d) {
    if (m < 2) throw ConfigError("constraint violated: dim U ≥ 2 (4 ≤ 2m)");
    if (2 * m > dimv - nw) throw ConfigError("constraint violated: 2m ≤ dim V − n_omega");
    if ((dimv - nw) % 2 != 0) throw ConfigError("constraint violated: dim V − n_omega even");
    std::vector<long long> dims;
    bool agree = true;
    for (long long k = 0; k <= std::min(m, nw); ++k) {
        long long a = stratum_dim(m, dimv, nw, k), b = stratum_dim_decomposition(m, dimv, nw, k);
        agree = agree && a == b;
        dims.push_back(a);
        d.details.push_back("k = " + std::to_string(k) + "  dim = " + std::to_string(a));
    }
    std::string dt;
    for (std::size_t i = 0; i < dims.size(); ++i) dt += (i ? ", " : "") + std::to_string(dims[i]);
    d.report.add("strata.formula_matches_decomposition", agree, "equal for every k", dt,
                 "closed dimension formula against the fiber-bundle count");
    if (dims.size() >= 2) {
        const long long gap = dims[0] - dims[1], want = dimv - 2 * m - nw + 2;
        d.details.push_back("codim gap = " + std::to_string(gap));
        d.report.add("strata.codim_gap", gap == want && gap >= 2, std::to_string(want) + " (>= 2)",
                     std::to_string(gap), "dim V - 2m - n_omega + 2");
    }
}

void cmd_lines(std::size_t m, std::size_t dimv, std::size_t nw, std::size_t count, std::uint64_t seed, Document& d) {
    if (m < 1 || m + 1 > dimv) throw ConfigError("constraint violated: 1 ≤ m < dim V");
    if (nw > dimv || (dimv - nw) % 2 != 0) throw ConfigError("constraint violated: dim V − n_omega even and ≥ 0");
    PresymplecticSpace P = PresymplecticSpace::with_nullity(dimv, nw);
    Rng rng(seed);
    std::size_t bad = 0, lines = 0;
    std::string witness;
    for (std::size_t s = 0; s < count; ++s) {
        IsotropicFlag F = random_flag(P, m, rng);
        validate_flag(F);
        const bool criterion = is_line(F);
        const bool oracle = pencil_oracle(F).all_isotropic;
        lines += criterion;
        if (criterion != oracle && bad++ == 0) witness = "flag " + std::to_string(s);
    }
    d.details.push_back(std::to_string(lines) + " of " + std::to_string(count) + " flags span lines");
    d.report.add("lines.criterion_matches_pencil", bad == 0, "0 disagreements",
                 std::to_string(bad) + " disagreements" + (bad ? ", first " + witness : std::string()),
                 "the pencil is isotropic iff W_+ lies in the perp of W_-");
}

void cmd_zgeom(std::size_t m, std::size_t n, std::size_t points, std::size_t e_points, std::uint64_t seed,
               Document& d) {
    if (m < 2) throw ConfigError("constraint violated: dim U ≥ 2");
    if (n < 1) throw ConfigError("constraint violated: dim Q ≥ 1");
    WLayout L(m, n);
    Rng rng(seed);
    std::vector<Report> smooth, special;
    for (std::size_t s = 0; s < points; ++s) {
        ZPoint p = z_embed(L, nonzero_vector(rng, m), nonzero_vector(rng, n), nonzero_scalar(rng));
        Report r;
        r.merge(z_tangent(L, p).checks);
        r.merge(second_fundamental_form(L, p).checks);
        smooth.push_back(std::move(r));
    }
    for (std::size_t s = 0; s < e_points; ++s) {
        ZPoint p = z_embed(L, nonzero_vector(rng, m), nonzero_vector(rng, n), Scalar(0));
        special.push_back(second_fundamental_form(L, p).checks);
    }
    aggregate(d.report, smooth, "smooth.");
    aggregate(d.report, special, "exceptional.");

    Model M = build_rank_zero_model(m, n);
    SymmetrySampler S(m, n, seed);
    std::size_t bad = 0;
    std::string witness;
    for (std::size_t x = 0; x < M.g0.dim(); ++x)
        if (!S.check(M.g0.element(x)) && bad++ == 0) witness = M.g0_elements[x].label;
    d.details.push_back(std::to_string(S.size()) + " sample points for the symmetry check");
    d.report.add("symmetry.g0_preserves_cone", bad == 0, "0 failures",
                 std::to_string(bad) + " failures" + (bad ? ", first " + witness : std::string()),
                 "g_0 is tangent to the cone over Z");
    std::size_t rejected = 0, tried = 0;
    while (tried < 10) {
        Matrix X(L.dim(), L.dim());
        for (std::size_t i = 0; i < L.dim(); ++i)
            for (std::size_t j = 0; j < L.dim(); ++j) X(i, j) = Scalar(rng.integer(-2, 2));
        if (M.g0.contains(X)) continue;
        ++tried;
        rejected += !S.check(X);
    }
    d.report.add("symmetry.rejects_non_members", rejected >= 1, ">= 1 of 10 rejected",
                 std::to_string(rejected) + " of 10 rejected", "endomorphisms outside g_0 move the cone");
}

void cmd_filtr(const ModelConfig& c, int level, Document& d) {
    if (level < 1) throw ConfigError("constraint violated: level ≥ 1");
    Model M = build_model(c);
    ProlongOptions po;
    po.max_degree = c.max_degree;
    ProlongationResult R = prolong(M.g0, M.gminus, po);
    for (const auto& sf : standard_filtrations(M, R)) {
        const std::string name = "filtr.g" + std::to_string(sf.degree) + ".";
        bool valid = true;
        std::string why = "monotone";
        try {
            sf.filtration.validate();
        } catch (const std::exception& e) {
            valid = false;
            why = e.what();
        }
        d.report.add(name + "valid", valid, "monotone, 0 at the bottom, everything at the top", why,
                     "filtration by subspaces");
        const bool red = is_g0_reductive(sf.filtration, sf.radical);
        d.report.add(name + "g0_reductive", red, "true", red ? "true" : "false",
                     "g_0-submodules with nilradical acting trivially on graded objects");
        std::string labels;
        for (const auto& l : sf.labels)
            if (!l.empty()) labels += (labels.empty() ? "" : ", ") + l;
        d.details.push_back("g_" + std::to_string(sf.degree) + ": graded objects " + labels);
    }
    SpencerDecomposition D = spencer_graded_decomposition(M, R, level);
    for (const auto& p : D.pieces)
        if (p.dim)
            d.details.push_back("Hom(" + p.a_label + ", " + p.b_label + ") in Hom(g_-" + std::to_string(p.i) +
                                " ^ g_-" + std::to_string(p.j) + ", g_" + std::to_string(p.target_degree) +
                                ")  dim " + std::to_string(p.dim));
    d.details.push_back("total " + std::to_string(D.total) + " of dim C^{" + std::to_string(level) +
                        ",2} = " + std::to_string(D.c2_dim));
    d.report.merge(D.checks, "level" + std::to_string(level) + ".");
}

} // namespace

ModelConfig parse_config(const std::string& text) {
    ModelConfig c;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    std::set<std::string> seen;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (eq == std::string::npos) throw ConfigError(where + "expected `key = value`", lineno);
        const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(where + "missing key", lineno);
        if (value.empty()) throw ConfigError(where + "missing value for `" + key + "`", lineno);
        if (!seen.insert(key).second) throw ConfigError(where + "duplicate key `" + key + "`", lineno);
        auto count = [&](std::size_t& out) {
            if (!parse_number(value, out)) throw ConfigError(where + "`" + key + "` must be a nonnegative integer", lineno);
        };
        if (key == "kind") {
            if (value != "positive" && value != "rank-zero")
                throw ConfigError(where + "kind must be `positive` or `rank-zero`", lineno);
            c.kind = value;
        } else if (key == "m") {
            count(c.m);
        } else if (key == "n") {
            count(c.n);
        } else if (key == "nullity") {
            count(c.nullity);
        } else if (key == "seed") {
            if (!parse_number(value, c.seed)) throw ConfigError(where + "`seed` must be an unsigned integer", lineno);
        } else if (key == "max_degree") {
            if (!parse_number(value, c.max_degree) || c.max_degree < 0)
                throw ConfigError(where + "`max_degree` must be a nonnegative integer", lineno);
        } else {
            throw ConfigError(where + "unknown key `" + key + "`", lineno);
        }
    }
    if (c.kind == "rank-zero" && seen.count("nullity"))
        throw ConfigError("`nullity` applies to the positive kind only");
    validate_config(c);
    return c;
}

void validate_config(const ModelConfig& c) {
    if (c.kind != "positive" && c.kind != "rank-zero") throw ConfigError("kind must be `positive` or `rank-zero`");
    if (c.m < 2) throw ConfigError("constraint violated: dim U ≥ 2 (m = " + std::to_string(c.m) + ")");
    if (c.n < 1) throw ConfigError("constraint violated: dim Q ≥ 1 (n = " + std::to_string(c.n) + ")");
    if (c.kind == "positive") {
        if (c.nullity > c.n)
            throw ConfigError("constraint violated: nullity ≤ n (nullity = " + std::to_string(c.nullity) +
                              ", n = " + std::to_string(c.n) + ")");
        if ((c.n - c.nullity) % 2 != 0) throw ConfigError("constraint violated: n − nullity even");
        if (c.n - c.nullity < 2) throw ConfigError("constraint violated: n − nullity ≥ 2");
    }
}

GridSpec parse_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ',');) parts.push_back(trim(p));
    if (parts.size() != 3) throw ConfigError("--grid expects mspec,nspec,rspec");
    auto spec = [](const std::string& s) {
        std::vector<std::size_t> out;
        std::stringstream items(s);
        for (std::string it; std::getline(items, it, '+');) {
            const auto dash = it.find('-');
            std::size_t a = 0, b = 0;
            const bool ok = dash == std::string::npos
                                ? parse_number(it, a) && (b = a, true)
                                : parse_number(it.substr(0, dash), a) && parse_number(it.substr(dash + 1), b);
            if (!ok || b < a) throw ConfigError("--grid: bad item `" + it + "`");
            for (std::size_t v = a; v <= b; ++v)
                if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
        }
        if (out.empty()) throw ConfigError("--grid: empty spec");
        return out;
    };
    return {spec(parts[0]), spec(parts[1]), spec(parts[2])};
}

std::string render_text(const Document& d) {
    std::string s = "tanaka " + d.command + " [";
    for (std::size_t i = 0; i < d.config.size(); ++i) s += (i ? " " : "") + d.config[i].first + "=" + d.config[i].second;
    s += "]\n";
    for (const auto& line : d.details) s += "  " + line + "\n";
    return s + d.report.to_text();
}

std::string render_json(const Document& d) {
    nlohmann::ordered_json j;
    j["command"] = d.command;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [k, v] : d.config) cfg[k] = v;
    j["config"] = cfg;
    j["details"] = d.details;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : d.report.sorted())
        checks.push_back({{"name", c.name},
                          {"status", status_name(c.status)},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"paper_ref", c.source}});
    j["checks"] = checks;
    j["summary"] = {{"total", d.report.checks().size()},
                    {"pass", d.report.count(Status::pass)},
                    {"fail", d.report.count(Status::fail)},
                    {"error", d.report.count(Status::error)}};
    return j.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of Tanaka prolongations, presymplectic Grassmannians and the cone over Z", "tanaka"};
    app.require_subcommand(1);

    ModelConfig cfg;
    std::string kind = "positive", json_path, config_path, grid_text, target;
    std::size_t m = 2, n = 2, nullity = 0, dimv = 0, count = 100, points = 20, e_points = 5;
    int level = 1;
    bool inject = false;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--json", json_path, "write the structured report to PATH");
        sub->add_option("--seed", cfg.seed, "random seed")->default_val(0);
        sub->add_option("--max-degree", cfg.max_degree, "highest prolongation degree")->default_val(10);
    };
    auto model = [&](CLI::App* sub) {
        sub->add_option("--kind", kind, "positive or rank-zero")->check(CLI::IsMember({"positive", "rank-zero"}));
        sub->add_option("--m", m, "dim U");
        sub->add_option("--n", n, "dim Q");
        sub->add_option("--nullity", nullity, "nullity of omega on Q");
        sub->add_option("--config", config_path, "key = value configuration file");
    };

    CLI::App* prolong_cmd = app.add_subcommand("prolong", "compute the prolongation of a model");
    common(prolong_cmd);
    model(prolong_cmd);
    CLI::App* verify_cmd = app.add_subcommand("verify", "verify the closed forms and the isomorphism");
    common(verify_cmd);
    model(verify_cmd);
    verify_cmd->add_option("target", target, "thm4.2, thm4.12, psi or all")
        ->required()
        ->check(CLI::IsMember({"thm4.2", "thm4.12", "psi", "all"}));
    verify_cmd->add_option("--grid", grid_text, "sweep mspec,nspec,rspec (items a or a-b joined by +)");
    verify_cmd->add_flag("--inject-defect", inject, "corrupt one structure constant before checking");
    CLI::App* spencer_cmd = app.add_subcommand("spencer", "Spencer cochain dimensions and boundary rank");
    common(spencer_cmd);
    model(spencer_cmd);
    spencer_cmd->add_option("--level", level, "level l")->required();
    CLI::App* strata_cmd = app.add_subcommand("strata", "stratum dimensions of the isotropic Grassmannian");
    common(strata_cmd);
    strata_cmd->add_option("--m", m, "dim W")->required();
    strata_cmd->add_option("--dimv", dimv, "dim V")->required();
    strata_cmd->add_option("--nullity", nullity, "nullity of omega")->required();
    CLI::App* lines_cmd = app.add_subcommand("lines", "line criterion against the pencil oracle");
    common(lines_cmd);
    lines_cmd->add_option("--m", m, "dim W")->required();
    lines_cmd->add_option("--dimv", dimv, "dim V")->required();
    lines_cmd->add_option("--nullity", nullity, "nullity of omega")->required();
    lines_cmd->add_option("--count", count, "number of random flags")->default_val(100);
    CLI::App* zgeom_cmd = app.add_subcommand("zgeom", "tangent spaces, second fundamental form and symmetries of Z");
    common(zgeom_cmd);
    zgeom_cmd->add_option("--m", m, "dim U");
    zgeom_cmd->add_option("--n", n, "dim Q");
    zgeom_cmd->add_option("--points", points, "random points off E")->default_val(20);
    zgeom_cmd->add_option("--e-points", e_points, "random points of E")->default_val(5);
    CLI::App* filtr_cmd = app.add_subcommand("filtr", "standard filtrations and the graded Spencer decomposition");
    common(filtr_cmd);
    model(filtr_cmd);
    filtr_cmd->add_option("--level", level, "level l")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    Document doc;
    doc.command = sub->get_name() + (target.empty() ? "" : " " + target);
    try {
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f) throw ConfigError("cannot read config file " + config_path);
            std::stringstream buf;
            buf << f.rdbuf();
            ModelConfig fc = parse_config(buf.str());
            if (sub->count("--kind") == 0) kind = fc.kind;
            if (sub->count("--m") == 0) m = fc.m;
            if (sub->count("--n") == 0) n = fc.n;
            if (sub->count("--nullity") == 0) nullity = fc.nullity;
            if (sub->count("--seed") == 0) cfg.seed = fc.seed;
            if (sub->count("--max-degree") == 0) cfg.max_degree = fc.max_degree;
        }
        cfg.kind = kind;
        cfg.m = m;
        cfg.n = n;
        cfg.nullity = kind == "positive" ? nullity : 0;
        if (cfg.max_degree < 0) throw ConfigError("constraint violated: max-degree ≥ 0");

        const std::string name = sub->get_name();
        auto model_config = [&] {
            doc.config = {{"kind", cfg.kind}, {"m", std::to_string(cfg.m)}, {"n", std::to_string(cfg.n)}};
            if (cfg.kind == "positive") doc.config.emplace_back("nullity", std::to_string(cfg.nullity));
            doc.config.emplace_back("seed", std::to_string(cfg.seed));
            doc.config.emplace_back("max_degree", std::to_string(cfg.max_degree));
        };
        if (name == "prolong") {
            validate_config(cfg);
            model_config();
            cmd_prolong(cfg, doc);
        } else if (name == "verify") {
            std::optional<GridSpec> grid;
            if (!grid_text.empty()) grid = parse_grid(grid_text);
            if (target == "thm4.2") cfg.kind = "positive";
            if (target == "thm4.12") {
                cfg.kind = "rank-zero";
                cfg.nullity = 0;
            }
            model_config();
            if (grid) doc.config.emplace_back("grid", grid_text);
            if (inject) doc.config.emplace_back("inject_defect", "true");
            cmd_verify(cfg, target, grid, inject, doc);
        } else if (name == "spencer") {
            validate_config(cfg);
            model_config();
            doc.config.emplace_back("level", std::to_string(level));
            cmd_spencer(cfg, level, doc);
        } else if (name == "strata") {
            doc.config = {{"m", std::to_string(m)}, {"dimv", std::to_string(dimv)}, {"nullity", std::to_string(nullity)}};
            cmd_strata(static_cast<long long>(m), static_cast<long long>(dimv), static_cast<long long>(nullity), doc);
        } else if (name == "lines") {
            doc.config = {{"m", std::to_string(m)},        {"dimv", std::to_string(dimv)},
                          {"nullity", std::to_string(nullity)}, {"count", std::to_string(count)},
                          {"seed", std::to_string(cfg.seed)}};
            cmd_lines(m, dimv, nullity, count, cfg.seed, doc);
        } else if (name == "zgeom") {
            doc.config = {{"m", std::to_string(m)},
                          {"n", std::to_string(n)},
                          {"points", std::to_string(points)},
                          {"e_points", std::to_string(e_points)},
                          {"seed", std::to_string(cfg.seed)}};
            cmd_zgeom(m, n, points, e_points, cfg.seed, doc);
        } else if (name == "filtr") {
            validate_config(cfg);
            model_config();
            doc.config.emplace_back("level", std::to_string(level));
            cmd_filtr(cfg, level, doc);
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonTerminationError& e) {
        doc.report.add_error("prolong.terminated", e.what(), "nu consecutive zero pieces");
    } catch (const std::exception& e) {
        doc.report.add_error("run", e.what());
    }

    out << render_text(doc);
    if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) {
            err << "error: cannot write " << json_path << "\n";
            return 2;
        }
        f << render_json(doc);
    }
    return doc.report.ok() ? 0 : 1;
}

} // namespace tanaka::cli
