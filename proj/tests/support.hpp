#pragma once

#include "slopelab/knot.hpp"
#include "slopelab/verify.hpp"

#include <ostream>
#include <random>
#include <string>

namespace slopelab {
inline void PrintTo(const LaurentPoly& p, std::ostream* os) { *os << p.str(); }
inline void PrintTo(const Degree& d, std::ostream* os) { *os << d.str(); }
}  // namespace slopelab

namespace testing_support {

inline slopelab::KnotSpec knot(const std::string& s) { return slopelab::normalize_spec(slopelab::parse_knot_spec(s)); }

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

/// Random odd q with q0 < -1 < 1 < q_i, entries up to `bound` in absolute value.
inline slopelab::IntVector random_strict_q(int m, std::int64_t bound) {
  slopelab::IntVector q;
  q.push_back(-(2 * uniform(1, (bound - 1) / 2) + 1));
  for (int i = 0; i < m; ++i) q.push_back(2 * uniform(1, (bound - 1) / 2) + 1);
  return q;
}

}  // namespace testing_support
