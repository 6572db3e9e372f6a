#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "krull/rational.hpp"

namespace krull {

// "" for exponent 0, "x" for 1, "x^k" otherwise.
std::string monomial_text(std::string_view var, std::size_t exponent);

// Joins (coefficient, monomial) terms into "c0 + c1*m1 - c2*m2 ..." with unit
// coefficients elided. An empty list renders as "0". Monomials may be empty
// (constant term) or products such as "x^2*y".
std::string join_signed_terms(const std::vector<std::pair<Rational, std::string>>& terms);

}  // namespace krull
