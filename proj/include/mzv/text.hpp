#pragma once

// Shared formatting/parsing for "c·atom + c·atom - ..." linear combinations.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mzv/words.hpp"

namespace mzv {

/// Splits a signed sum into (coefficient, atom) pairs. Accepts '·' or '*'
/// between coefficient and atom and U+2212 or '-' for minus. A bare number
/// yields an empty atom.
std::vector<std::pair<Rational, std::string>> split_linear_terms(std::string_view text);

/// Renders terms as "c·atom + c·atom - ..."; coefficient 1 is omitted and an
/// empty atom prints the bare coefficient.
template <class Map, class AtomFn>
std::string format_linear(const Map& terms, AtomFn atom) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    const bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);
    const std::string a = atom(key);
    if (a.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "·";
      out += a;
    }
  }
  return out;
}

}  // namespace mzv
