#ifndef BOREL_CLI_HPP
#define BOREL_CLI_HPP

#include "borel/cartan.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>

namespace borel::cli {

enum class Subcommand { roots, ideals, abelian, classify, lattice, normalizer, centralizer, check };
enum class Format { text, json, dot };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitCapacity = 3;

struct Command {
  Subcommand subcommand = Subcommand::roots;
  Family family = Family::A;
  int rank = 1;
  Format format = Format::text;
  bool include_zero = false;
  unsigned jobs = 1;
  std::optional<std::string> set;  // root-set literal
  std::optional<std::string> out;  // output path; stdout when empty
  bool unicode = false;
  bool color = false;
  int brute_force_bound = 20;
};

/// Parses argv-style arguments (program name excluded). Throws InvalidInput
/// for anything malformed, including a family/rank pair we do not support
/// and `--format dot` outside `lattice`.
Command parse_command(std::span<const std::string> args);

/// Executes a parsed command, writing the result to `out` (or the `--out`
/// file) and diagnostics to `err`. Returns the process exit status.
int run(const Command& command, std::ostream& out, std::ostream& err);

/// parse_command + run with exit-status mapping; what `main` calls.
int main(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace borel::cli

#endif // BOREL_CLI_HPP
