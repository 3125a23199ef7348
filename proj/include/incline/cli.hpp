#pragma once

// The command behind the `incline` executable, callable in-process.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace incline::cli {

enum class Command { axioms, check, decompose, factor, cprank, verify };

struct CommandRequest {
  Command command = Command::check;
  std::string input_path;
  std::optional<std::string> method;  // djl | pairwise
  std::optional<std::string> mode;    // ul | lu | auto
  bool exact = false;
  std::optional<std::size_t> max_width;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  std::optional<std::string> certificate_path;
};

inline constexpr int kHolds = 0;
inline constexpr int kRefuted = 1;
inline constexpr int kUsage = 2;

std::optional<Command> parse_command(const std::string& name);

// Writes one JSON document (sorted keys) to `out` and diagnostics to `err`.
// Returns kHolds, kRefuted or kUsage.
int run(const CommandRequest& req, std::ostream& out, std::ostream& err);

}  // namespace incline::cli
