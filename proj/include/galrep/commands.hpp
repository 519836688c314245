#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galrep/fixture.hpp"

namespace galrep {

struct CommandOptions {
  std::vector<std::string> reps;
  std::optional<std::string> subgroup;
  std::optional<std::size_t> limit;
  std::optional<std::uint64_t> prime;
  std::optional<std::size_t> stride;
  std::optional<unsigned> degree;
  bool records = false;
};

struct CommandResult {
  int status = 0;  // 0 ok, 1 validation or parse, 2 ambiguity, 3 I/O, 4 internal
  std::string output;
  std::string error;
};

/// Command names; `wd` and `ec` take a subcommand as the second word.
const std::vector<std::string>& command_names();

/// Runs one command against a parsed fixture. Never throws: failures become a status
/// and a one-line message. Text mode prints human-readable lines; records mode prints
/// `<command> key=value ...` with keys sorted and no spaces inside values.
CommandResult run_command(const std::vector<std::string>& command, const Fixture& fixture, const CommandOptions& options);

}  // namespace galrep
