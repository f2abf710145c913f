#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace twotors::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kDomainError = 2,
  kVerificationFailure = 3,
};

/// A parsed invocation: exactly one subcommand plus its flags.
struct Command {
  std::string name;
  bool json = false;
  std::optional<std::string> roots;
  std::optional<std::string> lead;
  std::optional<std::string> poly;
  std::optional<std::string> alpha;
  std::optional<std::string> class_indices;
  std::optional<std::string> pair_with;
  std::optional<unsigned> g, s, a;
  std::optional<std::string> orientation;
  std::optional<std::string> parity;
  std::optional<std::string> nu;
  std::optional<unsigned> genus;
  std::uint64_t seed = 1;
  std::optional<std::string> inject_fault;
};

/// Thrown for malformed invocations (exit code 1).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  std::string out;
  std::string err;
  int exit_code = kSuccess;
};

/// Parses argv (without the program name). Returns nullopt with help text in
/// `help` when --help was requested. Throws UsageError.
std::optional<Command> parse_command(const std::vector<std::string>& args, std::string* help = nullptr);

/// Executes a validated command; never throws.
Outcome run(const Command& cmd, bool styled = false);

/// parse_command + run, mapping every failure to its exit code.
Outcome run_cli(const std::vector<std::string>& args, bool styled = false);

}  // namespace twotors::cli
