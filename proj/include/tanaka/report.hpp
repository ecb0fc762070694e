#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace tanaka {

enum class Status { pass, fail, error };

const char* status_name(Status s);

/// One verified claim: what was expected, what was computed.
struct Check {
    std::string name;
    Status status = Status::pass;
    std::string expected;
    std::string actual;
    /// Short description of the mathematical statement being checked.
    std::string source;
};

/// Ordered collection of checks.
class Report {
public:
    void add(Check c) { checks_.push_back(std::move(c)); }
    void add(const std::string& name, bool ok, const std::string& expected, const std::string& actual,
             const std::string& source = {});
    void add_error(const std::string& name, const std::string& message, const std::string& source = {});
    /// Equality check between two printable values.
    template <class T>
    void expect_eq(const std::string& name, const T& expected, const T& actual, const std::string& source = {}) {
        add(name, expected == actual, to_text(expected), to_text(actual), source);
    }
    /// Appends all checks of `other`, prefixing their names with `prefix`.
    void merge(const Report& other, const std::string& prefix = {});

    const std::vector<Check>& checks() const { return checks_; }
    std::size_t count(Status s) const;
    bool ok() const { return count(Status::fail) == 0 && count(Status::error) == 0; }
    /// Checks sorted by name (stable for equal names).
    std::vector<Check> sorted() const;
    const Check* find(const std::string& name) const;
    /// Human-readable listing, one line per check.
    std::string to_text() const;

private:
    static std::string to_text(const std::string& s) { return s; }
    static std::string to_text(const char* s) { return s; }
    static std::string to_text(bool b) { return b ? "true" : "false"; }
    template <class T>
    static std::string to_text(const T& v) {
        if constexpr (requires { v.to_string(); }) return v.to_string();
        else if constexpr (requires { std::to_string(v); }) return std::to_string(v);
        else return list_text(v);
    }
    template <class C>
    static std::string list_text(const C& c) {
        std::string s = "(";
        bool first = true;
        for (const auto& x : c) {
            if (!first) s += ", ";
            first = false;
            s += to_text(x);
        }
        return s + ")";
    }

    std::vector<Check> checks_;
};

} // namespace tanaka
