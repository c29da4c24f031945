#ifndef HBE_REPORT_HPP
#define HBE_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hbe/catalog.hpp"
#include "hbe/numeric.hpp"

namespace hbe {

enum class OutputFormat { Text, Json, Csv };

OutputFormat parse_format(const std::string &name);

struct ReportOptions {
  bool timing = true;
};

// Column order of the csv output.
inline constexpr const char *kReportCsvHeader =
    "identity,m,n,equal,lhs,rhs,terms,t_lhs_ns,t_rhs_ns";

nlohmann::ordered_json to_json(const VerificationReport &r, const ReportOptions &opt = {});
nlohmann::ordered_json to_json(const NumericReport &r, const ReportOptions &opt = {});
std::string to_csv_row(const VerificationReport &r, const ReportOptions &opt = {});
std::string to_csv_row(const NumericReport &r, const ReportOptions &opt = {});

void write_reports(std::ostream &os, const std::vector<VerificationReport> &reports,
                   OutputFormat format, const ReportOptions &opt = {});
void write_reports(std::ostream &os, const std::vector<NumericReport> &reports,
                   OutputFormat format, const ReportOptions &opt = {});

/// 17 significant digits.
std::string format_real(double x);

} // namespace hbe

#endif // HBE_REPORT_HPP
