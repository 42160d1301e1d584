#pragma once

#include <string>
#include <vector>

#include <jwcat/homotopy.hpp>

namespace jwcat
{

enum class ReportFormat
{
    Text,
    Json,
};

struct VerificationConfig
{
    int window = 16;
    int order = -1; // -1 means 2 * window + 1
    ReportFormat format = ReportFormat::Text;
    // Groups or check ids to run; empty runs everything.
    std::vector<std::string> only;
    // Directory with JSON fixtures; empty skips the file-based checks.
    std::string data_dir;

    int effective_order() const { return order < 0 ? 2 * window + 1 : order; }
    // Throws std::invalid_argument for a window below 4, an order below 1
    // or an unknown selection.
    void validate() const;
};

inline constexpr int kMinWindow = 4;

struct CheckResult
{
    std::string id;     // "group.name"
    std::string group;
    std::string anchor; // statement being reproduced
    std::string title;
    Verdict verdict = Verdict::Fail;
    std::string detail;
    std::vector<std::string> witnesses;
    double millis = 0;
};

struct Report
{
    VerificationConfig config;
    std::vector<CheckResult> checks;

    std::size_t count(Verdict v) const;
    // 0 all pass, 1 any fail, 2 inconclusive with none failing.
    int exit_code() const;

    std::string to_text(bool timings = true) const;
    std::string to_json(bool timings = true) const;
};

// Group names in execution order.
const std::vector<std::string> &check_groups();

// Statements the suite reproduces. Each is the anchor of checks in exactly
// one group; anchors starting with "artifact:" cover tooling checks.
const std::vector<std::string> &in_scope_anchors();

Report run_suite(const VerificationConfig &cfg);

} // namespace jwcat
