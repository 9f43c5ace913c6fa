#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace specbound::cli {

enum class Command { spectrum, chivec, verify, sweep };
enum class Format { text, json, csv };

struct RunConfig {
  Command command = Command::verify;
  /// graph6 file, or "-" for stdin. Ignored when `generator` is set.
  std::string input = "-";
  /// `family:param[:param...]` spec, see parse_family().
  std::optional<std::string> generator;
  /// Number of gnp graphs; seeds run seed, seed+1, ...
  std::size_t count = 1;
  std::uint64_t seed = 0;
  double tol = 1e-7;
  long max_iter = 200000;
  /// Defaults to csv for sweep, text otherwise.
  std::optional<Format> format;
  bool parallel = false;
  unsigned threads = 0;  // 0: hardware concurrency when parallel
  bool metadata = true;
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUncertified = 2;

/// Parses argv into a RunConfig. On --help or a usage error, the message is
/// written to `out`/`err` and the exit code is returned instead.
struct ParsedArgs {
  std::optional<RunConfig> config;
  int exit_code = kExitOk;
};
ParsedArgs parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Executes one command. 0 when every graph is certified (or, for
/// spectrum, processed), 2 when any graph fails certification, 1 on input
/// or usage errors (with a message on `err` naming the line number).
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// CSV header used by verify and sweep.
inline constexpr const char* kReportCsvHeader =
    "graph6,n,m,s_plus,s_minus,chi_vec,bound,slack,equality,certified";

/// %.10g
std::string format_number(double x);

}  // namespace specbound::cli
