#include "whipcheck/profile_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace whipcheck {

InputError::InputError(const std::string& kind, std::size_t line, const std::string& detail)
    : std::runtime_error(kind + (line > 0 ? " at line " + std::to_string(line) : std::string()) +
                         ": " + detail),
      kind_(kind),
      line_(line) {}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_name_char(char c) {
  return !is_space(c) && c != '>' && c != '=' && c != ':' && c != '#';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

struct RankingLine {
  std::uint64_t multiplicity = 0;
  // Names per class, best first.
  std::vector<std::vector<std::string>> classes;
  std::vector<std::string> names;  // appearance order
};

RankingLine parse_line(std::string_view payload, std::size_t line_no) {
  RankingLine out;
  const auto colon = payload.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError(line_no, "expected '<multiplicity>: <ranking>'");
  }
  const auto count_text = trim(payload.substr(0, colon));
  const auto* first = count_text.data();
  const auto* last = first + count_text.size();
  const auto [ptr, ec] = std::from_chars(first, last, out.multiplicity);
  if (count_text.empty() || ec != std::errc() || ptr != last) {
    throw ParseError(line_no, "multiplicity '" + std::string(count_text) + "' is not a positive integer");
  }
  if (out.multiplicity == 0) throw ParseError(line_no, "multiplicity must be positive");

  const auto ranking = payload.substr(colon + 1);
  bool expect_name = true;
  out.classes.emplace_back();
  std::size_t pos = 0;
  while (pos < ranking.size()) {
    const char c = ranking[pos];
    if (is_space(c)) {
      ++pos;
    } else if (c == '>' || c == '=') {
      if (expect_name) {
        throw ParseError(line_no, std::string("unexpected '") + c + "' where a name was expected");
      }
      if (c == '>') out.classes.emplace_back();
      expect_name = true;
      ++pos;
    } else if (is_name_char(c)) {
      if (!expect_name) {
        throw ParseError(line_no, "missing '>' or '=' before '" +
                                      std::string(ranking.substr(pos, 1)) + "...'");
      }
      const auto start = pos;
      while (pos < ranking.size() && is_name_char(ranking[pos])) ++pos;
      std::string name(ranking.substr(start, pos - start));
      out.classes.back().push_back(name);
      out.names.push_back(std::move(name));
      expect_name = false;
    } else {
      throw ParseError(line_no, std::string("unexpected character '") + c + "'");
    }
  }
  if (out.names.empty()) throw ParseError(line_no, "ranking is empty");
  if (expect_name) throw ParseError(line_no, "ranking ends with an operator");
  return out;
}

}  // namespace

Profile parse_profile(std::string_view text) {
  std::vector<std::string> roster;
  std::unordered_map<std::string, AltIndex> index_of;
  std::vector<ProfileEntry> entries;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    auto line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }

    auto parsed = parse_line(line, line_no);
    if (roster.empty()) {
      for (const auto& name : parsed.names) {
        if (!index_of.emplace(name, roster.size()).second) {
          throw ParseError(line_no, "alternative '" + name + "' is ranked twice");
        }
        roster.push_back(name);
      }
      if (roster.size() < 2) throw ParseError(line_no, "at least 2 alternatives are required");
    } else {
      std::vector<bool> seen(roster.size(), false);
      for (const auto& name : parsed.names) {
        const auto it = index_of.find(name);
        if (it == index_of.end()) {
          throw InconsistentRoster(line_no, "alternative '" + name + "' is not ranked on the first line");
        }
        if (seen[it->second]) throw ParseError(line_no, "alternative '" + name + "' is ranked twice");
        seen[it->second] = true;
      }
      for (AltIndex i = 0; i < roster.size(); ++i) {
        if (!seen[i]) {
          throw InconsistentRoster(line_no, "alternative '" + roster[i] + "' is missing");
        }
      }
    }

    std::vector<WeakOrder::Class> classes;
    classes.reserve(parsed.classes.size());
    for (const auto& names : parsed.classes) {
      WeakOrder::Class cls;
      for (const auto& name : names) cls.push_back(index_of.at(name));
      classes.push_back(std::move(cls));
    }
    entries.push_back({make_weak_order(std::move(classes), roster.size()), parsed.multiplicity});
    if (end == text.size()) break;
  }

  if (entries.empty()) throw ParseError(0, "no rankings found");
  return Profile(AlternativeRoster(std::move(roster)), std::move(entries));
}

Profile read_profile_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("ReadError", 0, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_profile(buffer.str());
}

std::string render_ranking(const WeakOrder& order, const AlternativeRoster& roster) {
  std::string out;
  const auto& classes = order.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (c > 0) out += " > ";
    for (std::size_t t = 0; t < classes[c].size(); ++t) {
      if (t > 0) out += " = ";
      out += roster.name(classes[c][t]);
    }
  }
  return out;
}

std::string render_profile(const Profile& profile) {
  std::string out;
  for (const auto& entry : profile.entries()) {
    out += std::to_string(entry.multiplicity) + ": " + render_ranking(entry.order, profile.roster()) + "\n";
  }
  return out;
}

}  // namespace whipcheck
