#ifndef STDMON_RATIONAL_HPP
#define STDMON_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace stdmon {

// Arbitrary-precision exact arithmetic. cpp_rational keeps the denominator
// positive and the fraction in lowest terms at all times.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Int rat_num(const Rat& x) { return numerator(x); }
inline Int rat_den(const Rat& x) { return denominator(x); }

// Accepts "a" or "a/b" with optional signs; rejects zero denominators.
inline Rat parse_rational(const std::string& s) {
  auto parse_int = [&s](const std::string& part) {
    if (part.empty()) throw error("malformed rational: " + s);
    try {
      return Int(part);
    } catch (const std::runtime_error&) {
      throw error("malformed rational: " + s);
    }
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw error("rational with zero denominator: " + s);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

inline std::string format_rational(const Rat& x) {
  std::string out = rat_num(x).str();
  if (rat_den(x) != 1) out += "/" + rat_den(x).str();
  return out;
}

}  // namespace stdmon

#endif
