#include "report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace gl6::cli {

namespace {

void sort_records(RunReport& r) {
    std::stable_sort(r.records.begin(), r.records.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
}

}  // namespace

bool RunReport::all_passed() const {
    return std::all_of(records.begin(), records.end(), [](const CheckRecord& c) { return c.passed; });
}

std::string render_text(RunReport report) {
    sort_records(report);
    std::ostringstream out;
    out << "gl6cusp " << report.subcommand << "\n";
    for (const auto& [k, v] : report.inputs) out << "  " << k << " = " << v << "\n";
    for (const auto& [k, v] : report.values) {
        if (v.find('\n') == std::string::npos) {
            out << k << ": " << v << "\n";
        } else {
            out << k << ":\n";
            std::istringstream lines(v);
            for (std::string line; std::getline(lines, line);) out << "  " << line << "\n";
        }
    }
    std::size_t failed = 0;
    for (const auto& r : report.records) {
        failed += !r.passed;
        out << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << r.tag << "] " << r.detail << "\n";
    }
    if (!report.records.empty())
        out << report.records.size() - failed << " passed, " << failed << " failed\n";
    return out.str();
}

std::string render_json(RunReport report) {
    sort_records(report);
    nlohmann::ordered_json j;
    j["subcommand"] = report.subcommand;
    j["inputs"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.inputs) j["inputs"][k] = v;
    j["values"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.values) j["values"][k] = v;
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : report.records)
        j["records"].push_back({{"name", r.name}, {"tag", r.tag}, {"verdict", r.passed ? "pass" : "fail"}, {"detail", r.detail}});
    j["exit_status"] = report.exit_status();
    return j.dump(2) + "\n";
}

}  // namespace gl6::cli
