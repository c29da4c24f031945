#ifndef HBE_CLI_HPP
#define HBE_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hbe/catalog.hpp"
#include "hbe/report.hpp"

namespace hbe::cli {

enum class Command { List, Verify, Eval, Fit, Bench, Numeric };

inline constexpr int kExitPass = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::List;
  std::vector<std::string> identities; // empty means all
  std::int64_t n_max = 200;
  std::vector<std::string> m_spec;     // "p/2" strings or real literals
  OutputFormat format = OutputFormat::Text;
  std::uint64_t seed = 20240607;
  bool timing = true;
  unsigned threads = 0;
  bool thm51_half_integer = false;

  // eval
  std::string sum;                     // "U" or "V"
  std::int64_t d = 1;
  std::int64_t n = 0;
  std::string side = "lhs";

  // bench
  std::vector<std::int64_t> n_grid;

  // numeric
  int count = 50;
  double tol = 1e-8;
  double h = 1e-6;
};

struct ParseResult {
  std::optional<RunConfig> config;
  int exit_code = kExitPass; // meaningful when config is empty (help or error)
};

/// Parses argv. Help and usage errors are written to `out`/`err` and
/// reported through exit_code.
ParseResult parse_args(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// Executes a parsed command against `catalog`. 0 = all pass, 1 = at least
/// one mismatch or failed tolerance, 2 = usage or domain error.
int run(const RunConfig &config, const Catalog &catalog, std::ostream &out, std::ostream &err);
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// parse_args + run.
int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace hbe::cli

#endif // HBE_CLI_HPP
