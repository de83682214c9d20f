#pragma once
// Output of one gl6cusp invocation: inputs, computed values and named checks,
// rendered as line-oriented text or as JSON.

#include <string>
#include <utility>
#include <vector>

#include "gl6/suite.hpp"

namespace gl6::cli {

struct RunReport {
    std::string subcommand;
    std::vector<std::pair<std::string, std::string>> inputs;
    /// Computed values that are not pass/fail checks, in insertion order.
    std::vector<std::pair<std::string, std::string>> values;
    std::vector<CheckRecord> records;

    void input(std::string key, std::string value) { inputs.emplace_back(std::move(key), std::move(value)); }
    void value(std::string key, std::string v) { values.emplace_back(std::move(key), std::move(v)); }
    void check(std::string name, std::string tag, bool passed, std::string detail) {
        records.push_back({std::move(name), std::move(tag), passed, std::move(detail)});
    }

    bool all_passed() const;
    /// 0 when every check passed, 1 otherwise.
    int exit_status() const { return all_passed() ? 0 : 1; }
};

/// Sorts records by name; values keep their order.
std::string render_text(RunReport report);
std::string render_json(RunReport report);

}  // namespace gl6::cli
