#include "supercong/report.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace supercong {

namespace {

std::string opt(const std::optional<u64>& v) { return v ? std::to_string(*v) : std::string(); }

std::string opt_ms(const std::optional<double>& v) {
  if (!v) return {};
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(3);
  s << *v;
  return s.str();
}

std::vector<std::string> row(const ClaimReport& rep) {
  const auto& i = rep.instance;
  return {i.claim_id,
          std::to_string(i.p),
          std::to_string(i.r),
          std::to_string(i.m),
          std::to_string(i.n),
          i.extras_string(),
          opt(rep.lhs),
          opt(rep.rhs),
          opt(rep.modulus),
          status_name(rep.status),
          rep.note,
          rep.quote_anchor,
          opt_ms(rep.elapsed_ms),
          rep.replay};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

template <typename T>
nlohmann::json nullable(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

void emit_json(const std::vector<ClaimReport>& reports, std::ostream& out) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& rep : reports) {
    const auto& i = rep.instance;
    nlohmann::json extra = nlohmann::json::object();
    for (const auto& [k, v] : i.extra) extra[k] = v;
    doc.push_back({{"claim_id", i.claim_id},
                   {"p", i.p},
                   {"r", i.r},
                   {"m", i.m},
                   {"n", i.n},
                   {"extra", extra},
                   {"lhs", nullable(rep.lhs)},
                   {"rhs", nullable(rep.rhs)},
                   {"modulus", nullable(rep.modulus)},
                   {"status", status_name(rep.status)},
                   {"note", rep.note},
                   {"quote_anchor", rep.quote_anchor},
                   {"elapsed_ms", nullable(rep.elapsed_ms)},
                   {"replay", rep.replay}});
  }
  out << doc.dump(2) << '\n';
}

void emit_csv(const std::vector<ClaimReport>& reports, std::ostream& out) {
  bool first = true;
  for (const char* col : kReportColumns) {
    out << (first ? "" : ",") << col;
    first = false;
  }
  out << '\n';
  for (const auto& rep : reports) {
    auto fields = row(rep);
    for (std::size_t k = 0; k < fields.size(); ++k) out << (k ? "," : "") << csv_field(fields[k]);
    out << '\n';
  }
}

void emit_md(const std::vector<ClaimReport>& reports, std::ostream& out) {
  out << "# Claim reports\n";
  if (reports.empty()) {
    out << "\nNo instances.\n";
    return;
  }
  std::string current;
  for (const auto& rep : reports) {
    if (rep.instance.claim_id != current) {
      current = rep.instance.claim_id;
      out << "\n## " << current << "\n\n`" << rep.quote_anchor << "`\n\n|";
      for (const char* col : kReportColumns) out << ' ' << col << " |";
      out << "\n|";
      for (std::size_t k = 0; k < std::size(kReportColumns); ++k) out << "---|";
      out << '\n';
    }
    out << '|';
    for (const auto& f : row(rep)) out << ' ' << md_cell(f) << " |";
    out << '\n';
  }
}

}  // namespace

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "md") return ReportFormat::md;
  throw DomainError("unknown report format '" + name + "' (expected json, csv or md)");
}

void emit_report(const std::vector<ClaimReport>& reports, ReportFormat format, std::ostream& out) {
  switch (format) {
    case ReportFormat::json: emit_json(reports, out); break;
    case ReportFormat::csv: emit_csv(reports, out); break;
    case ReportFormat::md: emit_md(reports, out); break;
  }
}

void emit_report(const std::vector<ClaimReport>& reports, ReportFormat format, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write report to " + path.string());
  emit_report(reports, format, out);
  if (!out.flush()) throw std::runtime_error("write failed for " + path.string());
}

ReportTally tally(const std::vector<ClaimReport>& reports) {
  ReportTally t;
  for (const auto& rep : reports) {
    switch (rep.status) {
      case ClaimStatus::pass: ++t.pass; break;
      case ClaimStatus::fail:
        ++t.fail;
        if (rep.note.rfind("conjecture counterexample", 0) == 0) ++t.conjecture_fail;
        break;
      case ClaimStatus::skip: ++t.skip; break;
      case ClaimStatus::error: ++t.error; break;
    }
  }
  return t;
}

}  // namespace supercong
