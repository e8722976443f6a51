#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace turan {

using Rational = boost::rational<std::int64_t>;

/// Always "p/q", including integers ("4/1") and zero ("0/1").
inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Accepts "p/q" or a bare integer.
Rational parse_rational(const std::string& text);

}  // namespace turan
