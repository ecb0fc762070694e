#include "tanaka/report.hpp"

#include <algorithm>

namespace tanaka {

const char* status_name(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
    }
    return "error";
}

void Report::add(const std::string& name, bool ok, const std::string& expected, const std::string& actual,
                 const std::string& source) {
    checks_.push_back({name, ok ? Status::pass : Status::fail, expected, actual, source});
}

void Report::add_error(const std::string& name, const std::string& message, const std::string& source) {
    checks_.push_back({name, Status::error, "", message, source});
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (Check c : other.checks_) {
        c.name = prefix + c.name;
        checks_.push_back(std::move(c));
    }
}

std::size_t Report::count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(checks_.begin(), checks_.end(), [s](const Check& c) { return c.status == s; }));
}

std::vector<Check> Report::sorted() const {
    std::vector<Check> v = checks_;
    std::stable_sort(v.begin(), v.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
    return v;
}

const Check* Report::find(const std::string& name) const {
    for (const auto& c : checks_)
        if (c.name == name) return &c;
    return nullptr;
}

std::string Report::to_text() const {
    std::string out;
    for (const auto& c : sorted()) {
        out += std::string(status_name(c.status)) + "  " + c.name;
        if (c.status == Status::pass) {
            if (!c.actual.empty()) out += "  = " + c.actual;
        } else {
            out += "  expected " + (c.expected.empty() ? std::string("-") : c.expected) + ", got " + c.actual;
        }
        out += "\n";
    }
    out += std::to_string(count(Status::pass)) + " passed, " + std::to_string(count(Status::fail)) + " failed, " +
           std::to_string(count(Status::error)) + " errors\n";
    return out;
}

} // namespace tanaka
