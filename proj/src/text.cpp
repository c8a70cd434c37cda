#include "mzv/text.hpp"

#include <cctype>

namespace mzv {

namespace {

std::string normalize(std::string_view text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto ch = static_cast<unsigned char>(text[i]);
    if (std::isspace(ch)) continue;
    if (text.substr(i, 2) == "·") {
      s.push_back('*');
      ++i;
    } else if (text.substr(i, 3) == "−") {
      s.push_back('-');
      i += 2;
    } else {
      s.push_back(static_cast<char>(ch));
    }
  }
  return s;
}

}  // namespace

std::vector<std::pair<Rational, std::string>> split_linear_terms(std::string_view text) {
  const std::string s = normalize(text);
  if (s.empty()) throw ParseError("empty expression");
  std::vector<std::pair<Rational, std::string>> out;
  if (s == "0") return out;
  std::size_t i = 0;
  while (i < s.size()) {
    Rational sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (!out.empty()) {
      throw ParseError("expected '+' or '-' in: " + std::string(text));
    }
    std::size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    Rational coeff = 1;
    bool have_coeff = i > start;
    if (have_coeff) coeff = parse_rational(s.substr(start, i - start));
    if (i < s.size() && s[i] == '*') {
      if (!have_coeff) throw ParseError("dangling '*' in: " + std::string(text));
      ++i;
    }
    start = i;
    int depth = 0;
    while (i < s.size()) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0 && (s[i] == '+' || s[i] == '-')) break;
      ++i;
    }
    std::string atom = s.substr(start, i - start);
    if (!have_coeff && atom.empty()) throw ParseError("empty term in: " + std::string(text));
    out.emplace_back(sign * coeff, std::move(atom));
  }
  return out;
}

}  // namespace mzv
