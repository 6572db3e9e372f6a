#pragma once

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "krull/bivariate.hpp"
#include "krull/dense_poly.hpp"
#include "krull/rational_function.hpp"
#include "krull/render.hpp"

namespace krull {

/// f = a₀ + a₁z + … + aₙzⁿ over a coefficient domain C
/// (Rational, UniRatFunc, BiFracQ or BiFracFp).
template <class C>
using Poly = DensePoly<C>;

namespace detail {

inline bool is_atom(const std::string& s) {
  for (char ch : s) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '^')) return false;
  }
  return !s.empty();
}

}  // namespace detail

// Canonical printer; parse_poly(render(f)) == f.
template <class C>
std::string render(const Poly<C>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (is_zero(f[i])) continue;
    const std::string c = to_string(f[i]);
    const std::string mono = monomial_text("z", i);
    std::string term;
    if (mono.empty()) {
      term = detail::is_atom(c) ? c : "(" + c + ")";
    } else if (c == "1") {
      term = mono;
    } else {
      term = (detail::is_atom(c) ? c : "(" + c + ")") + "*" + mono;
    }
    if (!first) out += " + ";
    out += term;
    first = false;
  }
  return out;
}

inline std::string render(const Poly<Rational>& f) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (is_zero(f[i])) continue;
    terms.emplace_back(f[i], monomial_text("z", i));
  }
  return join_signed_terms(terms);
}

}  // namespace krull
