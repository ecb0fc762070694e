#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tanaka/cli.hpp"

using namespace tanaka::cli;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string config_error(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

nlohmann::json read_json(const std::string& path) {
    std::ifstream f(path);
    return nlohmann::json::parse(f);
}

bool has(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

} // namespace

TEST_SUITE("cli") {

TEST_CASE("config parsing") {
    ModelConfig c = parse_config("kind = positive\nm = 2\nn = 2\nnullity = 0");
    CHECK(c.kind == "positive");
    CHECK(c.m == 2);
    CHECK(c.n == 2);
    CHECK(c.nullity == 0);
    ModelConfig d = parse_config("# rank zero\nkind = rank-zero  # comment\n\nm = 3\nn = 1\nseed = 7\nmax_degree = 4\n");
    CHECK(d.kind == "rank-zero");
    CHECK(d.seed == 7);
    CHECK(d.max_degree == 4);
    CHECK(has(config_error("nullity = 3\nn = 2"), "nullity ≤ n"));
    CHECK(has(config_error("m = 1"), "dim U ≥ 2"));
    CHECK(has(config_error("m = 2\ncolour = red"), "line 2"));
    CHECK(has(config_error("m = 2\ncolour = red"), "unknown key"));
    CHECK(has(config_error("m 2"), "line 1"));
    CHECK(has(config_error("m = two"), "line 1"));
    CHECK(has(config_error("m = 2\nm = 3"), "duplicate"));
}

TEST_CASE("grid parsing") {
    GridSpec g = parse_grid("2-3,2+4,0-2");
    CHECK(g.m == std::vector<std::size_t>{2, 3});
    CHECK(g.n == std::vector<std::size_t>{2, 4});
    CHECK(g.r == std::vector<std::size_t>{0, 1, 2});
    CHECK_THROWS_AS(parse_grid("2,3"), ConfigError);
    CHECK_THROWS_AS(parse_grid("3-2,2,0"), ConfigError);
}

TEST_CASE("prolong command") {
    Outcome o = run_cli({"prolong", "--kind", "positive", "--m", "2", "--n", "2", "--nullity", "0"});
    CHECK(o.code == 0);
    CHECK(has(o.out, "4, 3, 0, 0"));
    CHECK(has(o.out, "pass  lie.jacobi"));
}

TEST_CASE("strata command") {
    Outcome o = run_cli({"strata", "--m", "2", "--dimv", "7", "--nullity", "1"});
    CHECK(o.code == 0);
    CHECK(has(o.out, "k = 0  dim = 9"));
    CHECK(has(o.out, "k = 1  dim = 5"));
    CHECK(has(o.out, "codim gap = 4"));
}

TEST_CASE("injected defect exits 1 with a named failing check") {
    Outcome o = run_cli({"verify", "all", "--m", "2", "--n", "2", "--nullity", "0", "--inject-defect"});
    CHECK(o.code == 1);
    CHECK(has(o.out, "fail  lie.jacobi"));
}

TEST_CASE("usage and parameter errors exit 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"verify", "thm9.9"}).code == 2);
    Outcome o = run_cli({"prolong", "--m", "2", "--n", "2", "--nullity", "3"});
    CHECK(o.code == 2);
    CHECK(has(o.err, "nullity ≤ n"));
    CHECK(run_cli({"prolong", "--m", "1"}).code == 2);
    CHECK(run_cli({"strata", "--m", "2", "--dimv", "6", "--nullity", "1"}).code == 2);
    CHECK(run_cli({"prolong", "--config", "/nonexistent/file.cfg"}).code == 2);
}

TEST_CASE("config files feed the model options") {
    const auto path = std::filesystem::temp_directory_path() / "tanaka_cli_test.cfg";
    {
        std::ofstream f(path);
        f << "kind = rank-zero\nm = 2\nn = 1\n";
    }
    Outcome o = run_cli({"prolong", "--config", path.string()});
    CHECK(o.code == 0);
    CHECK(has(o.out, "kind=rank-zero"));
    CHECK(has(o.out, "piece dims (g_1, g_2, ...): 3, 0"));
    std::filesystem::remove(path);
}

TEST_CASE("reports are deterministic and match the schema") {
    const auto dir = std::filesystem::temp_directory_path();
    const std::string a = (dir / "tanaka_a.json").string(), b = (dir / "tanaka_b.json").string();
    Outcome x = run_cli({"zgeom", "--m", "2", "--n", "2", "--seed", "3", "--json", a});
    Outcome y = run_cli({"zgeom", "--m", "2", "--n", "2", "--seed", "3", "--json", b});
    CHECK(x.code == 0);
    CHECK(x.out == y.out);
    std::ifstream fa(a), fb(b);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    CHECK(sa.str() == sb.str());

    nlohmann::json doc = read_json(a);
    nlohmann::json schema = read_json(TANAKA_SCHEMA_PATH);
    for (const auto& key : schema["required"]) CHECK(doc.contains(key.get<std::string>()));
    for (const auto& [key, value] : doc.items()) CHECK(schema["properties"].contains(key));
    const auto& item = schema["properties"]["checks"]["items"];
    std::string last;
    for (const auto& c : doc["checks"]) {
        for (const auto& key : item["required"]) CHECK(c.contains(key.get<std::string>()));
        CHECK(c.size() == item["required"].size());
        const auto name = c["name"].get<std::string>();
        CHECK(last <= name);
        last = name;
        CHECK(has("pass fail error", c["status"].get<std::string>()));
    }
    CHECK(doc["summary"]["total"] == doc["checks"].size());
    CHECK(doc["summary"]["fail"] == 0);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

TEST_CASE("grid sweep over thm4.12") {
    Outcome o = run_cli({"verify", "thm4.12", "--grid", "2,1-2,0"});
    CHECK(o.code == 0);
    CHECK(has(o.out, "m2.n1.prolong.piece_dims"));
    CHECK(has(o.out, "m2.n2.prolong.piece_dims"));
}

TEST_CASE("spencer, lines and filtr commands") {
    Outcome s = run_cli({"spencer", "--m", "2", "--n", "2", "--nullity", "0", "--level", "1"});
    CHECK(s.code == 0);
    CHECK(has(s.out, "dim C^{1,1} = 40"));
    CHECK(has(s.out, "dim C^{1,2} = 60"));
    CHECK(has(s.out, "rank of the boundary = 36"));
    CHECK(run_cli({"lines", "--m", "2", "--dimv", "6", "--nullity", "0", "--count", "20"}).code == 0);
    CHECK(run_cli({"filtr", "--kind", "rank-zero", "--m", "2", "--n", "1", "--level", "2"}).code == 0);
}

}
