#include "borel/notation.hpp"

#include "borel/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

namespace borel {

namespace {

[[noreturn]] void syntax_error(std::string_view term, const std::string& why) {
  throw InvalidInput("malformed root '" + std::string(term) + "': " + why);
}

// Reads a nonnegative decimal integer at `pos`; returns -1 if none.
int read_int(const std::string& s, std::size_t& pos) {
  const std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) return -1;
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + pos, value);
  if (ec != std::errc{}) return -1;
  return value;
}

Root parse_vector(const std::string& s, std::string_view term, int rank) {
  Coefficients c = Coefficients::Zero(rank);
  std::size_t pos = 1;
  int filled = 0;
  while (true) {
    bool negative = pos < s.size() && s[pos] == '-';
    if (negative) ++pos;
    const int v = read_int(s, pos);
    if (v < 0) syntax_error(term, "expected an integer entry");
    if (filled == rank) syntax_error(term, "vector longer than rank " + std::to_string(rank));
    c(filled++) = negative ? -v : v;
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (pos + 1 != s.size() || s[pos] != ']') syntax_error(term, "expected ']' at the end");
  if (filled != rank) syntax_error(term, "vector has " + std::to_string(filled) + " entries, rank is " +
                                             std::to_string(rank));
  return Root(c);
}

Root parse_sum(const std::string& s, std::string_view term, int rank) {
  Coefficients c = Coefficients::Zero(rank);
  std::size_t pos = 0;
  while (true) {
    int k = read_int(s, pos);
    if (k < 0) k = 1;
    if (pos >= s.size() || (s[pos] != 'a' && s[pos] != 'A'))
      syntax_error(term, "expected a simple root like 'a1'");
    ++pos;
    const int i = read_int(s, pos);
    if (i < 1 || i > rank)
      syntax_error(term, "simple root index must be in 1.." + std::to_string(rank));
    c(i - 1) += k;
    if (pos == s.size()) break;
    if (s[pos] != '+') syntax_error(term, "unexpected character '" + std::string(1, s[pos]) + "'");
    ++pos;
  }
  return Root(c);
}

} // namespace

Root parse_root_term(std::string_view term, int rank) {
  std::string s;
  for (char ch : term)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) syntax_error(term, "empty term");
  return s.front() == '[' ? parse_vector(s, term, rank) : parse_sum(s, term, rank);
}

std::vector<Root> parse_root_set(std::string_view literal, const RootSystem& rs) {
  std::vector<Root> out;
  if (std::all_of(literal.begin(), literal.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); }))
    return out;
  // split on commas outside brackets
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= literal.size(); ++i) {
    if (i < literal.size()) {
      if (literal[i] == '[') ++depth;
      if (literal[i] == ']') --depth;
      if (literal[i] != ',' || depth > 0) continue;
    }
    const std::string_view term = literal.substr(start, i - start);
    Root r = parse_root_term(term, rs.rank());
    if (!rs.contains(r))
      throw InvalidInput("'" + std::string(term) + "' (" + to_string(r) + ") is not a positive root of " +
                         rs.label());
    out.push_back(std::move(r));
    start = i + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace borel
