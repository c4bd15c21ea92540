#ifndef RINGSPREAD_CLI_SPEC_IO_HPP
#define RINGSPREAD_CLI_SPEC_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "ringspread/state_spec.hpp"

namespace ringspread::cli {

/**
 * Parses one state-spec document. The syntax is YAML, so both block style
 *
 *   kind: trig
 *   harmonic: 2
 *   phase: sin
 *
 * and flow/JSON style (`{kind: coherent, l: 0.0, theta: 0.0}`) are accepted.
 * Errors are ParseError messages carrying `source:line:column` and the
 * offending field.
 */
StateSpec parse_state_spec(std::string_view text, std::string_view source = "<spec>");

StateSpec load_state_spec(const std::filesystem::path& path);

/// Resolves a command-line argument: an existing file is parsed, otherwise a
/// catalog name is looked up. Throws IoError if neither matches.
StateSpec resolve_state_argument(const std::string& argument);

/// Single-line flow document that parse_state_spec reads back exactly
/// (doubles use shortest round-trip formatting).
std::string format_state_spec(const StateSpec& spec);

}  // namespace ringspread::cli

#endif  // RINGSPREAD_CLI_SPEC_IO_HPP
