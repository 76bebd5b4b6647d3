#include "fcakit/cxt_io.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <unordered_set>

namespace fca {
namespace {

int parse_count(const std::string& line, int line_no, const char* what) {
  int value = 0;
  const char* begin = line.data();
  const char* end = begin + line.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || value < 0)
    throw ParseError(line_no, std::string("expected non-negative ") + what);
  if (value > 1'000'000) throw ParseError(line_no, std::string(what) + " too large");
  return value;
}

}  // namespace

FormalContext read_cxt(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  auto need = [&](size_t idx, const char* what) -> const std::string& {
    if (idx >= lines.size())
      throw ParseError(static_cast<int>(lines.size()) + 1,
                       std::string("unexpected end of file, expected ") + what);
    return lines[idx];
  };

  if (need(0, "header \"B\"") != "B") throw ParseError(1, "expected header \"B\"");
  if (!need(1, "blank line").empty()) throw ParseError(2, "expected blank line after header");
  const int g = parse_count(need(2, "object count"), 3, "object count");
  const int m = parse_count(need(3, "attribute count"), 4, "attribute count");
  if (!need(4, "blank line").empty()) throw ParseError(5, "expected blank line before names");

  size_t at = 5;
  std::vector<std::string> object_names;
  object_names.reserve(static_cast<size_t>(g));
  {
    std::unordered_set<std::string> seen;
    for (int i = 0; i < g; ++i, ++at) {
      const std::string& n = need(at, "object name");
      if (!seen.insert(n).second)
        throw ParseError(static_cast<int>(at) + 1, "duplicate object name: \"" + n + "\"");
      object_names.push_back(n);
    }
  }
  std::vector<std::string> attribute_names;
  attribute_names.reserve(static_cast<size_t>(m));
  {
    std::unordered_set<std::string> seen;
    for (int i = 0; i < m; ++i, ++at) {
      const std::string& n = need(at, "attribute name");
      if (!seen.insert(n).second)
        throw ParseError(static_cast<int>(at) + 1, "duplicate attribute name: \"" + n + "\"");
      attribute_names.push_back(n);
    }
  }

  std::vector<Bitset> rows;
  rows.reserve(static_cast<size_t>(g));
  for (int i = 0; i < g; ++i, ++at) {
    const std::string& r = need(at, "incidence row");
    const int line_no = static_cast<int>(at) + 1;
    if (static_cast<int>(r.size()) != m)
      throw ParseError(line_no, "row has " + std::to_string(r.size()) +
                                    " characters, expected " + std::to_string(m));
    Bitset bits(m);
    for (int j = 0; j < m; ++j) {
      char c = r[static_cast<size_t>(j)];
      if (c == 'X')
        bits.set(j);
      else if (c != '.')
        throw ParseError(line_no, std::string("illegal character '") + c +
                                      "' in row (expected '.' or 'X')");
    }
    rows.push_back(std::move(bits));
  }

  for (; at < lines.size(); ++at) {
    if (!lines[at].empty())
      throw ParseError(static_cast<int>(at) + 1, "unexpected trailing content");
  }

  return FormalContext(std::move(object_names), std::move(attribute_names), std::move(rows));
}

FormalContext read_cxt(const std::string& text) {
  std::istringstream in(text);
  return read_cxt(in);
}

std::string write_cxt(const FormalContext& k) {
  std::string out;
  out += "B\n\n";
  out += std::to_string(k.object_count());
  out += '\n';
  out += std::to_string(k.attribute_count());
  out += "\n\n";
  for (const auto& n : k.object_names()) {
    out += n;
    out += '\n';
  }
  for (const auto& n : k.attribute_names()) {
    out += n;
    out += '\n';
  }
  for (int g = 0; g < k.object_count(); ++g) {
    for (int m = 0; m < k.attribute_count(); ++m) out += k.incident(g, m) ? 'X' : '.';
    out += '\n';
  }
  return out;
}

}  // namespace fca
