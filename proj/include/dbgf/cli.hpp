#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dbgf/core.hpp"
#include "dbgf/cycles.hpp"
#include "dbgf/poly.hpp"
#include "dbgf/trees.hpp"

namespace dbgf::cli {

enum class Format { text, json, csv };

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitError = 3,
};

/// Default output format; overridable through this environment variable.
inline constexpr const char* kFormatEnv = "DBGF_FORMAT";
inline constexpr std::uint64_t kDefaultSeed = 20150601;

struct RunConfig {
  std::string command;
  int n_min = 0;
  int n_max = 0;
  std::optional<std::string> taps;   // comma-separated tap indices
  std::optional<std::string> table;  // hex truth table
  bool constant = false;
  std::string kind = "linear";       // formula: linear | zero | fryers
  std::optional<std::size_t> distance;
  std::size_t limit = 100;
  bool list = false;
  bool dump_matrix = false;
  bool determinant = false;
  bool galois = false;
  bool necklaces = false;
  std::size_t samples = 10;
  Format format = Format::text;
  unsigned workers = 0;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::string> out_path;
};

Format parse_format(const std::string& name);
/// "3" or "3..5".
std::pair<int, int> parse_order_range(const std::string& text);
std::vector<int> parse_taps(const std::string& text);

/// Parses argv into a RunConfig; throws Error(parse) on bad arguments.
/// Returns std::nullopt after printing help.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Runs a parsed configuration; writes to `out` (or the --out file) and
/// diagnostics to `err`.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + dispatch with the documented exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Rendering.
std::string render_polynomial(const IntPolynomial& p, int n, const std::string& source, Format format);
std::string render_profile(const CycleProfile& profile, Format format);
std::string render_report(const Report& report, Format format);
std::string render_functions(const std::vector<FeedbackFunction>& fs, const FeedbackFunction& reference,
                             Format format);

/// Reads the "coeffs" array of a rendered polynomial back. Coefficients
/// beyond 64 bits are emitted as decimal strings; both forms are accepted.
IntPolynomial polynomial_from_json(const std::string& json_text);

/// The cross-route verification suite used by `verify`.
Report verify_suite(int n_min, int n_max, std::size_t samples, std::uint64_t seed, unsigned workers);

}  // namespace dbgf::cli
