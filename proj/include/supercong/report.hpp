#pragma once

// Serialization of claim reports as JSON, CSV or Markdown.
//
// All three formats are byte-stable for identical input: JSON keys are
// sorted, CSV columns and Markdown table columns have a fixed order, and
// floating-point timings appear only when they were recorded.

#include "supercong/verifier.hpp"

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace supercong {

enum class ReportFormat { json, csv, md };

/// "json", "csv" or "md"; DomainError otherwise.
ReportFormat parse_format(const std::string& name);

/// Column order shared by the CSV and Markdown writers.
inline constexpr const char* kReportColumns[] = {"claim_id", "p",      "r",          "m",          "n",
                                                 "extra",    "lhs",    "rhs",        "modulus",    "status",
                                                 "note",     "quote_anchor", "elapsed_ms", "replay"};

void emit_report(const std::vector<ClaimReport>& reports, ReportFormat format, std::ostream& out);

/// Writes to a file, replacing it. std::runtime_error if the path is unwritable.
void emit_report(const std::vector<ClaimReport>& reports, ReportFormat format, const std::filesystem::path& path);

struct ReportTally {
  std::size_t pass = 0, fail = 0, skip = 0, error = 0;
  std::size_t conjecture_fail = 0;  // fails whose note marks a conjecture counterexample
};

ReportTally tally(const std::vector<ClaimReport>& reports);

}  // namespace supercong
