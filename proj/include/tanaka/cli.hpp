#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tanaka/report.hpp"

namespace tanaka::cli {

struct ModelConfig {
    std::string kind = "positive";
    std::size_t m = 2, n = 2, nullity = 0;
    std::uint64_t seed = 0;
    int max_degree = 10;
};

/// Syntax or constraint error in a configuration; `line` is 0 for constraint errors.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& what, std::size_t line = 0) : std::runtime_error(what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Line-oriented `key = value` with `#` comments. Keys: kind, m, n, nullity, seed, max_degree.
ModelConfig parse_config(const std::string& text);
/// Throws ConfigError naming the violated inequality.
void validate_config(const ModelConfig& c);

/// Cartesian sweep spec "mspec,nspec,rspec"; each spec is a '+'-separated list of
/// values or ranges a-b.
struct GridSpec {
    std::vector<std::size_t> m, n, r;
};
GridSpec parse_grid(const std::string& text);

struct Document {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;
    /// informational lines (tables) printed before the checks
    std::vector<std::string> details;
    Report report;
};

std::string render_text(const Document& d);
std::string render_json(const Document& d);

/// Runs the command line (args without the program name). Exit codes: 0 all checks
/// passed, 1 a check failed or errored, 2 usage or parameter error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tanaka::cli
