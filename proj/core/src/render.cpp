#include "krull/render.hpp"

namespace krull {

std::string monomial_text(std::string_view var, std::size_t exponent) {
  if (exponent == 0) return {};
  std::string out(var);
  if (exponent > 1) out += "^" + std::to_string(exponent);
  return out;
}

std::string join_signed_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [c, mono] = terms[i];
    const bool negative = sgn(c) < 0;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Rational mag = abs(c);
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace krull
