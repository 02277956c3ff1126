#ifndef CELLCALC_RATIONAL_HPP
#define CELLCALC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "cellcalc/errors.hpp"

namespace cellcalc {

using Rational = boost::multiprecision::cpp_rational;

// Parses "n", "-n" or "n/d"; rejects anything else (including d = 0).
inline Rational parse_rational(const std::string& s) {
  auto parse_int = [](const std::string& t) {
    if (t.empty()) throw InputError("empty integer in rational literal");
    std::size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (k == t.size()) throw InputError("bad rational literal: " + t);
    for (; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') throw InputError("bad rational literal: " + t);
    return boost::multiprecision::cpp_int(t);
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  boost::multiprecision::cpp_int num = parse_int(s.substr(0, slash));
  boost::multiprecision::cpp_int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in rational literal: " + s);
  return Rational(num, den);
}

inline std::string rational_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace cellcalc

#endif
