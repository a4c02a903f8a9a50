#pragma once

// Line-oriented profile files.
//
//   # comment
//   2: a > b = c > d
//   1: d > a = b = c
//
// Each payload line is `<multiplicity>: <ranking>`. Within a ranking `>`
// separates indifference classes (best first) and `=` joins tied
// alternatives. Names are runs of characters other than whitespace and
// `>`, `=`, `:`, `#`. The roster is the alternatives of the first payload
// line in order of appearance; every later line must rank exactly that set.

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "whipcheck/model.hpp"

namespace whipcheck {

/// Malformed input. `line()` is 1-based, 0 when the problem is not tied to a line.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& kind, std::size_t line, const std::string& detail);
  std::size_t line() const noexcept { return line_; }
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
  std::size_t line_;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& detail) : InputError("ParseError", line, detail) {}
};

class InconsistentRoster : public InputError {
 public:
  InconsistentRoster(std::size_t line, const std::string& detail)
      : InputError("InconsistentRoster", line, detail) {}
};

Profile parse_profile(std::string_view text);

/// Throws InputError (line 0) if the file cannot be read.
Profile read_profile_file(const std::filesystem::path& path);

/// "a > b = c" with tied alternatives in roster order.
std::string render_ranking(const WeakOrder& order, const AlternativeRoster& roster);

/// One line per entry, tied alternatives in roster order. Parsing the output
/// gives back a profile equal to the input whenever the roster order matches
/// first appearance in the first entry (always true for parsed profiles).
std::string render_profile(const Profile& profile);

}  // namespace whipcheck
