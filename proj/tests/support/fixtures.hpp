#pragma once

#include <string>
#include <vector>

namespace fixtures {

// P1, P2, P3: each product and its factorization.
inline const std::vector<std::string> kP1Factors{"1+4*x^4+4*z", "x+2*x*z^2+2*x^2*z^4+z^5"};
inline const std::vector<std::string> kP2Factors{"x*y-z+x*z^2", "y+x*z+x*z^2+x*y*z^3+y*z^4+z^5"};
inline const std::vector<std::string> kP3Factors{"1+x*y*z^2", "y+x*z+z^2"};

inline const std::string kP1 = "(" + kP1Factors[0] + ")*(" + kP1Factors[1] + ")";
inline const std::string kP2 = "(" + kP2Factors[0] + ")*(" + kP2Factors[1] + ")";
inline const std::string kP3 = "y + x*z + (1+x*y^2)*z^2 + x^2*y*z^3 + x*y*z^4";

}  // namespace fixtures
