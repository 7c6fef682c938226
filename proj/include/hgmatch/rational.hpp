#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "hgmatch/errors.hpp"

namespace hgmatch {

// Exact rational scalar. cpp_rational keeps values canonical (reduced,
// positive denominator), so string output is stable and == is exact.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Canonical text form: "p" when the value is integral, else "p/q" reduced.
inline std::string rational_to_string(const Rational& r) {
  return r.str();
}

// Accepts "p" and "p/q" with optional sign. Rejects zero denominators.
inline Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' ||
          c == '+' || c == '/')) {
      throw InputError("bad rational literal '" + s + "'");
    }
  }
  auto slash = s.find('/');
  if (slash != std::string::npos &&
      s.find('/', slash + 1) != std::string::npos) {
    throw InputError("bad rational literal '" + s + "'");
  }
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw InputError("bad rational literal '" + s + "': " + e.what());
  }
}

}  // namespace hgmatch
