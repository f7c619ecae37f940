/**
 * @file knot.hpp
 * @brief Montesinos and pretzel knot descriptions, normalization and the
 * associated pretzel vector.
 */
#pragma once

#include "slopelab/cfe.hpp"
#include "slopelab/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace slopelab {

class KnotInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class NotAKnot : public KnotInputError {
 public:
  using KnotInputError::KnotInputError;
};
class MoreThanOneNegativeTangle : public KnotInputError {
 public:
  using KnotInputError::KnotInputError;
};
class NoNegativeTangle : public KnotInputError {
 public:
  using KnotInputError::KnotInputError;
};

struct MontesinosKnot {
  std::vector<Rational> fractions;  // r_0 < 0 < r_1, ..., r_m after normalization
  int m() const { return int(fractions.size()) - 1; }
};

struct PretzelKnot {
  std::vector<std::int64_t> q;
  int m() const { return int(q.size()) - 1; }
};

using KnotSpec = std::variant<MontesinosKnot, PretzelKnot>;

enum class LinkType { Knot, Link };

inline LinkType classify(const std::vector<Rational>& fractions) {
  int even_den = 0, odd_num = 0;
  for (const auto& r : fractions) {
    if (r == 0) throw KnotInputError("tangle fractions must be nonzero");
    if (mpz_even_p(r.get_den_mpz_t())) ++even_den;
    if (mpz_odd_p(r.get_num_mpz_t())) ++odd_num;
  }
  if (even_den == 1) return LinkType::Knot;
  if (even_den == 0 && odd_num % 2 == 1) return LinkType::Knot;
  return LinkType::Link;
}

/// Moves integer parts between tangles so every fraction lies in (-1, 1).
/// The sum and the classes mod 1 are preserved.  The number of negative
/// tangles after reduction is forced by the sum; the tangle that ends up
/// negative is the one that was most negative in the input (first on ties).
inline std::vector<Rational> reduce_integer_parts(const std::vector<Rational>& in) {
  if (in.size() < 3) throw KnotInputError("a Montesinos knot needs at least three tangles");
  Rational sum = 0, frac_sum = 0;
  std::vector<Rational> frac(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (is_integer(in[i])) throw KnotInputError("integral tangle " + to_string(in[i]) + " is not a rational tangle");
    frac[i] = in[i] - floor_of(in[i]);
    sum += in[i];
    frac_sum += frac[i];
  }
  Rational negatives = frac_sum - sum;  // integer by construction
  std::int64_t n_neg = to_int64(negatives.get_num());
  if (n_neg < 0 || n_neg > std::int64_t(in.size()))
    throw NoNegativeTangle("integer parts cannot be absorbed into tangles of absolute value < 1");
  std::vector<std::size_t> order(in.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return in[a] < in[b]; });
  std::vector<Rational> out = frac;
  for (std::int64_t k = 0; k < n_neg; ++k) out[order[std::size_t(k)]] -= 1;
  return out;
}

/// Reduced form with the unique negative tangle rotated to index 0.
inline MontesinosKnot normalize_reduced(const std::vector<Rational>& fractions) {
  if (classify(fractions) != LinkType::Knot) throw NotAKnot("fractions describe a link, not a knot");
  std::vector<Rational> r = reduce_integer_parts(fractions);
  auto neg = std::count_if(r.begin(), r.end(), [](const Rational& x) { return x < 0; });
  if (neg > 1) throw MoreThanOneNegativeTangle("reduced diagram has " + std::to_string(neg) + " negative tangles");
  if (neg == 0) throw NoNegativeTangle("reduced diagram has no negative tangle");
  auto it = std::find_if(r.begin(), r.end(), [](const Rational& x) { return x < 0; });
  std::rotate(r.begin(), it, r.end());
  return MontesinosKnot{r};
}

inline MontesinosKnot as_montesinos(const PretzelKnot& p) {
  MontesinosKnot k;
  for (auto q : p.q) k.fractions.push_back(make_rational(1, q));
  return k;
}

struct AssociatedPretzelData {
  std::vector<std::int64_t> q;
  std::int64_t q0_prime = 0;
  std::vector<std::int64_t> qi_prime;  // r_i[2] for i >= 1
};

inline AssociatedPretzelData associated_pretzel(const MontesinosKnot& k) {
  if (k.fractions.size() < 3) throw KnotInputError("a Montesinos knot needs at least three tangles");
  AssociatedPretzelData d;
  ContinuedFraction c0 = even_length_cfe(k.fractions[0]);
  if (!c0.even_ok || c0.terms[0] != 0) throw KnotInputError("r_0 must satisfy -1 < r_0 < 0");
  const bool special = c0.length() == 2 && c0[2] == -1;
  d.q.push_back(special ? c0[1] - 1 : c0[1]);
  d.q0_prime = (k.fractions[0] == make_rational(1, d.q[0])) ? 0 : c0[2];
  for (std::size_t i = 1; i < k.fractions.size(); ++i) {
    ContinuedFraction ci = even_length_cfe(k.fractions[i]);
    if (!ci.even_ok || ci.terms[0] != 0) throw KnotInputError("r_i must satisfy 0 < |r_i| < 1");
    d.q.push_back(ci[1] + 1);
    d.qi_prime.push_back(ci[2]);
  }
  return d;
}

/// "m:-46/327,35/151,..." or "p:-7,5,7,3,5".
inline KnotSpec parse_knot_spec(std::string_view spec) {
  if (spec.size() < 3 || spec[1] != ':' || (spec[0] != 'm' && spec[0] != 'p'))
    throw KnotInputError("knot spec must look like m:r0,r1,... or p:q0,q1,...");
  std::vector<std::string> items;
  std::string cur;
  for (char ch : spec.substr(2)) {
    if (ch == ',') { items.push_back(cur); cur.clear(); }
    else cur.push_back(ch);
  }
  items.push_back(cur);
  try {
    if (spec[0] == 'p') {
      PretzelKnot p;
      for (const auto& s : items) {
        Rational r = parse_rational(s);
        if (!is_integer(r)) throw KnotInputError("pretzel entries must be integers");
        p.q.push_back(to_int64(r.get_num()));
      }
      for (auto q : p.q)
        if (q == 0) throw KnotInputError("pretzel entries must be nonzero");
      if (p.q.size() < 3) throw KnotInputError("a pretzel knot needs at least three tangles");
      return p;
    }
    MontesinosKnot k;
    for (const auto& s : items) k.fractions.push_back(parse_rational(s));
    return k;
  } catch (const KnotInputError&) {
    throw;
  } catch (const std::exception& e) {
    throw KnotInputError(std::string("cannot parse knot spec: ") + e.what());
  }
}

inline std::string spec_string(const KnotSpec& k) {
  std::ostringstream os;
  if (auto p = std::get_if<PretzelKnot>(&k)) {
    os << "p:";
    for (std::size_t i = 0; i < p->q.size(); ++i) os << (i ? "," : "") << p->q[i];
  } else {
    const auto& m = std::get<MontesinosKnot>(k);
    os << "m:";
    for (std::size_t i = 0; i < m.fractions.size(); ++i) os << (i ? "," : "") << to_string(m.fractions[i]);
  }
  return os.str();
}

/// Hypotheses of the pretzel degree theorem: q0 < -1 < 1 < q_i, all odd, m >= 2 even.
inline bool pretzel_strict_ok(const std::vector<std::int64_t>& q) {
  if (q.size() < 3) return false;
  const int m = int(q.size()) - 1;
  if (m % 2 != 0) return false;
  if (!(q[0] < -1)) return false;
  for (std::size_t i = 1; i < q.size(); ++i)
    if (!(q[i] > 1)) return false;
  for (auto x : q)
    if (x % 2 == 0) return false;
  return true;
}

}  // namespace slopelab
