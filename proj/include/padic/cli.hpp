#ifndef PADIC_CLI_HPP
#define PADIC_CLI_HPP

// Command orchestration behind the padic_spectrum tool. Argument parsing
// lives in the tool; this layer validates a Config and produces output.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace padic::cli {

enum class Command { Eigenvalues, Eigenvector, Spectrum, Zeta, Tree, Verify };
enum class Format { Json, Csv, Text, Dot };

struct Config {
  Command command = Command::Eigenvalues;
  std::uint64_t p = 2;
  unsigned digits = 12;
  unsigned count = 5;
  unsigned index = 1;
  unsigned terms = 25;     ///< eigenvector coefficients K
  unsigned samples = 40;   ///< eigenvector samples for the residual
  unsigned depth = 6;      ///< tree depth
  unsigned N = 60;         ///< half-line truncation for verify
  std::string cutoff = "5";
  std::string s = "2";     ///< "re" or "re,im"
  std::string mode = "verified";  ///< paper | verified
  std::string eps = "1e-10";
  std::string dump_matrix;        ///< verify: write the D0*D0 truncation here
  unsigned term_budget = 256;
  Format format = Format::Json;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidConfig = 2;

Command command_from_string(const std::string& name);
Format format_from_string(const std::string& name);

/// PADIC_TERM_BUDGET and PADIC_DIGITS override the corresponding fields.
void apply_environment(Config& config);

/// Throws ConfigError on any invalid field.
void validate(const Config& config);

/// Validates, runs and writes the result to `out`; diagnostics go to `err`.
/// Returns the process exit status.
int run(const Config& config, std::ostream& out, std::ostream& err);

}  // namespace padic::cli

#endif  // PADIC_CLI_HPP
