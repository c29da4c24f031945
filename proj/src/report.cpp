#include "hbe/report.hpp"

#include <cstdio>
#include <ostream>

#include "hbe/errors.hpp"

namespace hbe {

OutputFormat parse_format(const std::string &name) {
  if (name == "text") {
    return OutputFormat::Text;
  }
  if (name == "json") {
    return OutputFormat::Json;
  }
  if (name == "csv") {
    return OutputFormat::Csv;
  }
  throw DomainError("unknown output format " + name);
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

nlohmann::ordered_json to_json(const VerificationReport &r, const ReportOptions &opt) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["m"] = r.point.m ? nlohmann::ordered_json(r.point.m->to_string()) : nlohmann::ordered_json();
  j["n"] = r.point.n;
  j["equal"] = r.equal;
  j["lhs"] = r.lhs.to_string();
  j["rhs"] = r.rhs.to_string();
  j["terms"] = r.lhs_terms;
  if (opt.timing) {
    j["t_lhs_ns"] = r.wall_time_lhs.count();
    j["t_rhs_ns"] = r.wall_time_rhs.count();
  } else {
    j["t_lhs_ns"] = nullptr;
    j["t_rhs_ns"] = nullptr;
  }
  return j;
}

nlohmann::ordered_json to_json(const NumericReport &r, const ReportOptions &) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["m"] = format_real(r.m);
  j["n"] = r.n;
  j["equal"] = r.pass;
  j["lhs"] = format_real(r.lhs);
  j["rhs"] = format_real(r.rhs);
  j["terms"] = r.n + 1;
  j["t_lhs_ns"] = nullptr;
  j["t_rhs_ns"] = nullptr;
  j["rel_err"] = format_real(r.rel_err);
  j["tol"] = format_real(r.tol);
  return j;
}

std::string to_csv_row(const VerificationReport &r, const ReportOptions &opt) {
  std::string row = r.identity + ",";
  row += (r.point.m ? r.point.m->to_string() : std::string()) + ",";
  row += std::to_string(r.point.n) + ",";
  row += std::string(r.equal ? "true" : "false") + ",";
  row += r.lhs.to_string() + "," + r.rhs.to_string() + ",";
  row += std::to_string(r.lhs_terms) + ",";
  if (opt.timing) {
    row += std::to_string(r.wall_time_lhs.count()) + "," + std::to_string(r.wall_time_rhs.count());
  } else {
    row += ",";
  }
  return row;
}

std::string to_csv_row(const NumericReport &r, const ReportOptions &) {
  return r.identity + "," + format_real(r.m) + "," + std::to_string(r.n) + "," +
         (r.pass ? "true" : "false") + "," + format_real(r.lhs) + "," + format_real(r.rhs) + "," +
         std::to_string(r.n + 1) + ",,";
}

namespace {

void write_text(std::ostream &os, const VerificationReport &r, const ReportOptions &opt) {
  os << (r.equal ? "ok       " : "MISMATCH ") << r.identity;
  if (r.point.m) {
    os << " m=" << r.point.m->to_string();
  }
  os << " n=" << r.point.n << " terms=" << r.lhs_terms;
  if (opt.timing) {
    os << " t_lhs=" << r.wall_time_lhs.count() << "ns t_rhs=" << r.wall_time_rhs.count() << "ns";
  }
  os << "\n    lhs = " << r.lhs.to_string() << "\n    rhs = " << r.rhs.to_string() << "\n";
}

void write_text(std::ostream &os, const NumericReport &r) {
  os << (r.pass ? "ok   " : "FAIL ") << r.identity << " m=" << format_real(r.m) << " n=" << r.n
     << " lhs=" << format_real(r.lhs) << " rhs=" << format_real(r.rhs)
     << " rel_err=" << format_real(r.rel_err) << " tol=" << format_real(r.tol) << "\n";
}

template <class Report>
void write_all(std::ostream &os, const std::vector<Report> &reports, OutputFormat format,
               const ReportOptions &opt) {
  switch (format) {
  case OutputFormat::Json: {
    auto arr = nlohmann::ordered_json::array();
    for (const auto &r : reports) {
      arr.push_back(to_json(r, opt));
    }
    os << arr.dump(2) << "\n";
    break;
  }
  case OutputFormat::Csv:
    os << kReportCsvHeader << "\n";
    for (const auto &r : reports) {
      os << to_csv_row(r, opt) << "\n";
    }
    break;
  case OutputFormat::Text:
    for (const auto &r : reports) {
      if constexpr (std::is_same_v<Report, VerificationReport>) {
        write_text(os, r, opt);
      } else {
        write_text(os, r);
      }
    }
    break;
  }
}

} // namespace

void write_reports(std::ostream &os, const std::vector<VerificationReport> &reports,
                   OutputFormat format, const ReportOptions &opt) {
  write_all(os, reports, format, opt);
}

void write_reports(std::ostream &os, const std::vector<NumericReport> &reports,
                   OutputFormat format, const ReportOptions &opt) {
  write_all(os, reports, format, opt);
}

} // namespace hbe
