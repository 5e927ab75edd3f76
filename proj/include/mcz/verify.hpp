#pragma once

#include <string>
#include <vector>

namespace mcz {

enum class VerifyProfile { Quick, Full };

/// One row of the reproduction report.
struct ReportEntry {
    std::string check_id;
    std::string paper_anchor;
    std::string expected;
    std::string actual;
    double tolerance = 0.0;
    bool passed = false;
};

/// Runs the static check registry; Quick caps brute-force bounds, Full runs
/// the complete ranges. Failures are data, not errors. Order is fixed by
/// check_id.
std::vector<ReportEntry> run_verify(VerifyProfile profile);

std::string report_to_json(const std::vector<ReportEntry>& report);
std::string report_to_text(const std::vector<ReportEntry>& report);
std::string report_to_csv(const std::vector<ReportEntry>& report);
std::vector<ReportEntry> report_from_json(const std::string& text);

}  // namespace mcz
