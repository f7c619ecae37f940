/**
 * @file cfe.hpp
 * @brief Continued fraction expansions of rationals.
 *
 * Three flavors are used:
 *  - positive:     r = a0 + 1/(a1 + 1/(a2 + ...)), a_j (j >= 1) share r's sign
 *  - even-length:  the positive expansion adjusted so the index of the last term is even
 *  - negative:     r = b0 - 1/(b1 - 1/(b2 - ...)), written [[b0, b1, ...]]
 */
#pragma once

#include "slopelab/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace slopelab {

enum class CfFlavor { Positive, EvenLength, Negative };

struct ContinuedFraction {
  std::vector<std::int64_t> terms;
  CfFlavor flavor = CfFlavor::Positive;
  /// False only for the even-length flavor of an integer, which stays [n].
  bool even_ok = true;

  /// Index of the last term (the paper-style length l).
  int length() const { return int(terms.size()) - 1; }
  std::int64_t operator[](std::size_t j) const { return terms.at(j); }
};

class DegenerateExpansion : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Euclid with sign-consistent quotients: floor for r > 0, ceiling for r < 0.
inline ContinuedFraction positive_cfe(const Rational& r) {
  ContinuedFraction cf;
  cf.flavor = CfFlavor::Positive;
  const bool neg = r < 0;
  Rational x = neg ? Rational(-r) : r;
  for (;;) {
    Integer a = floor_of(x);
    cf.terms.push_back(to_int64(a));
    Rational frac = x - a;
    if (frac == 0) break;
    x = 1 / frac;
  }
  if (neg)
    for (auto& t : cf.terms) t = -t;
  return cf;
}

inline ContinuedFraction even_length_cfe(const Rational& r) {
  ContinuedFraction cf = positive_cfe(r);
  cf.flavor = CfFlavor::EvenLength;
  if (cf.terms.size() == 1) {
    cf.even_ok = false;
    return cf;
  }
  if (cf.length() % 2 == 1) {
    if (r > 0) {
      cf.terms.back() -= 1;
      cf.terms.push_back(1);
    } else {
      cf.terms.back() += 1;
      cf.terms.push_back(-1);
    }
  }
  return cf;
}

inline Rational eval_cfe(const ContinuedFraction& cf) {
  if (cf.terms.empty()) throw DegenerateExpansion("empty continued fraction");
  const bool negative = cf.flavor == CfFlavor::Negative;
  Rational x(Integer(cf.terms.back()));
  for (int j = int(cf.terms.size()) - 2; j >= 0; --j) {
    if (x == 0) throw DegenerateExpansion("zero denominator while evaluating continued fraction");
    Rational tail = 1 / x;
    x = Rational(Integer(cf.terms[std::size_t(j)])) + (negative ? Rational(-tail) : tail);
  }
  return x;
}

struct BracketSums {
  std::int64_t e_sum = 0;  // [r]_e: even indices >= 3
  std::int64_t o_sum = 0;  // [r]_o: odd indices >= 3
  std::int64_t total = 0;  // [r]
};

inline BracketSums bracket_sums(const Rational& r) {
  ContinuedFraction cf = even_length_cfe(r);
  BracketSums b;
  for (int j = 3; j <= cf.length(); ++j) {
    if (j % 2 == 0) b.e_sum += cf[std::size_t(j)];
    else b.o_sum += cf[std::size_t(j)];
  }
  b.total = b.e_sum + b.o_sum;
  return b;
}

/// [[b0, ..., bk]] with b0 = floor(r) and every later term <= -2.
/// This is the expansion whose partial sums all lie below r.
inline ContinuedFraction negative_cfe_descending(const Rational& r) {
  ContinuedFraction cf;
  cf.flavor = CfFlavor::Negative;
  Rational x = r;
  Integer b = floor_of(x);
  cf.terms.push_back(to_int64(b));
  while (x != b) {
    x = 1 / (b - x);  // x = b - 1/x'  with x' < -1
    b = floor_of(x);
    cf.terms.push_back(to_int64(b));
  }
  return cf;
}

/// For -1 < r < 0: [[0, floor(-1/r), ...]] continued with terms <= -2.
/// The first term after 0 is positive, so the path starts by climbing to 0.
inline ContinuedFraction negative_cfe_through_zero(const Rational& r) {
  if (!(r < 0 && r > -1)) throw std::invalid_argument("negative_cfe_through_zero expects -1 < r < 0");
  ContinuedFraction cf;
  cf.flavor = CfFlavor::Negative;
  cf.terms.push_back(0);
  Rational x = -1 / r;  // r = 0 - 1/x
  Integer b = floor_of(x);
  cf.terms.push_back(to_int64(b));
  while (x != b) {
    x = 1 / (b - x);
    b = floor_of(x);
    cf.terms.push_back(to_int64(b));
  }
  return cf;
}

}  // namespace slopelab
