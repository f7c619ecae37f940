/**
 * @file rational.hpp
 * @brief Exact rationals on top of GMP's mpq_class.
 *
 * mpq_class already keeps values canonical (lowest terms, positive
 * denominator) as long as constructors from a raw numerator/denominator
 * pair are followed by canonicalize(); make_rational() does that.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace slopelab {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& p, const Integer& q) {
  if (q == 0) throw std::domain_error("rational with zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long p, long q = 1) {
  return make_rational(Integer(p), Integer(q));
}

/// "p/q", or "p" for integers.
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Accepts "p/q", "p", with optional sign on the numerator.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '+')) s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  auto parse_int = [](const std::string& t) {
    if (t.empty()) throw std::invalid_argument("malformed rational");
    std::size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("malformed rational");
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw std::invalid_argument("malformed rational: " + t);
    return Integer(t);
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  Integer q = parse_int(s.substr(slash + 1));
  if (q <= 0) throw std::invalid_argument("denominator must be positive: " + s);
  return make_rational(parse_int(s.substr(0, slash)), q);
}

inline Integer floor_of(const Rational& r) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

inline Integer ceil_of(const Rational& r) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
  return z.get_si();
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace slopelab
