/**
 * @file degree.hpp
 * @brief Degree of the colored Jones polynomial of pretzel and Montesinos knots.
 *
 * Color convention: N = n + 1.  For a pretzel diagram
 *   deg J_{K,n+1} = w(D) (n^2 + 2n) + max over tight k of delta(n, k),
 * and js, jx are the N^2 and N coefficients of deg J_{K,N} for large N.
 */
#pragma once

#include "slopelab/cfe.hpp"
#include "slopelab/diagram.hpp"
#include "slopelab/knot.hpp"
#include "slopelab/qip.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace slopelab {

class HypothesisViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SAndS1 {
  Rational s, s1;
};

inline SAndS1 s_and_s1(const IntVector& q) {
  if (q.size() < 2) throw std::invalid_argument("need at least two entries");
  Rational inv = 0, num = 0;
  for (std::size_t i = 1; i < q.size(); ++i) {
    if (q[i] == 1) throw std::domain_error("q_i = 1 makes s(q) undefined");
    inv += make_rational(1, q[i] - 1);
    num += make_rational(q[i] + q[0] - 2, q[i] - 1);
  }
  if (inv == 0) throw std::domain_error("sum of (q_i - 1)^{-1} vanishes");
  return {1 + Rational(static_cast<long>(q[0])) + 1 / inv, num / inv};
}

inline void check_tight(const IntVector& k, std::size_t len) {
  if (k.size() != len) throw std::invalid_argument("k must have one entry per tangle");
  std::int64_t s = 0;
  for (std::size_t i = 1; i < k.size(); ++i) s += k[i];
  if (s != k[0]) throw std::invalid_argument("k is not tight: k_0 != sum k_i");
}

/// -2[(q0+1)k0^2 + sum (q_i-1)k_i^2 + sum (q0+q_i-2)k_i - n(n+2)/2 sum q + (m-1)n].
inline Integer delta_nk(std::int64_t n, const IntVector& k, const IntVector& q) {
  check_tight(k, q.size());
  const std::int64_t m = std::int64_t(q.size()) - 1;
  Integer inner = Integer(static_cast<long>(q[0] + 1)) * k[0] * k[0];
  Integer sum_q = 0;
  for (auto x : q) sum_q += x;
  for (std::size_t i = 1; i < q.size(); ++i) {
    inner += Integer(static_cast<long>(q[i] - 1)) * k[i] * k[i];
    inner += Integer(static_cast<long>(q[0] + q[i] - 2)) * k[i];
  }
  inner += Integer(static_cast<long>((m - 1) * n));
  return -2 * inner + Integer(static_cast<long>(n * (n + 2))) * sum_q;
}

/// The special Montesinos variant: delta_nk + n^2 sum (q'_i - 1), q' indexed from tangle 1.
inline Integer delta_nk_special(std::int64_t n, const IntVector& k, const IntVector& q, const IntVector& q_prime) {
  if (q_prime.size() + 1 != q.size()) throw std::invalid_argument("q' needs one entry per positive tangle");
  Integer extra = 0;
  for (auto x : q_prime) extra += x - 1;
  return delta_nk(n, k, q) + Integer(static_cast<long>(n * n)) * extra;
}

/// a_i = q_i - 1, b_i = q0 + q_i - 2 over the positive tangles.
inline SeparableQuadratic pretzel_quadratic(const IntVector& q) {
  IntVector a, b;
  for (std::size_t i = 1; i < q.size(); ++i) {
    if (q[i] <= 1) throw HypothesisViolation("positive tangles need q_i > 1");
    a.push_back(q[i] - 1);
    b.push_back(q[0] + q[i] - 2);
  }
  return SeparableQuadratic(a, b);
}

enum class DegreeCase { Negative, ZeroNonzeroS1, ZeroZeroS1, Positive };

inline std::string case_label(DegreeCase c) {
  switch (c) {
    case DegreeCase::Negative: return "1";
    case DegreeCase::ZeroNonzeroS1: return "2a";
    case DegreeCase::ZeroZeroS1: return "2b";
    case DegreeCase::Positive: return "3";
  }
  return "?";
}

inline DegreeCase classify_case(const SAndS1& ss) {
  if (ss.s < 0) return DegreeCase::Negative;
  if (ss.s > 0) return DegreeCase::Positive;
  return ss.s1 == 0 ? DegreeCase::ZeroZeroS1 : DegreeCase::ZeroNonzeroS1;
}

struct MaxDelta {
  std::int64_t t = 0;  // k_0 at the maximum (smallest such t)
  IntVector k;
  Integer value;
  DegreeCase dcase = DegreeCase::Negative;
  SAndS1 ss;
};

/// Exact maximum of delta (or its special variant) over tight k with t <= n.
inline MaxDelta maximize_degree(const IntVector& q, std::int64_t n, const IntVector* q_prime = nullptr) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  SeparableQuadratic f = pretzel_quadratic(q);
  MaxDelta best;
  best.ss = s_and_s1(q);
  best.dcase = classify_case(best.ss);
  bool have = false;
  for (std::int64_t t = 0; t <= n; ++t) {
    LatticeOptimum opt = lattice_min(f, t);
    IntVector k{t};
    k.insert(k.end(), opt.minimizer.begin(), opt.minimizer.end());
    Integer d = q_prime ? delta_nk_special(n, k, q, *q_prime) : delta_nk(n, k, q);
    if (!have || d > best.value) {
      have = true;
      best.value = d;
      best.t = t;
      best.k = k;
    }
  }
  return best;
}

enum class SurfaceHint { SStar, Reference };

inline std::string hint_name(SurfaceHint h) { return h == SurfaceHint::SStar ? "SStar" : "Reference"; }

struct DegreeQuadratic {
  Rational js, jx;
  SurfaceHint surface_hint = SurfaceHint::SStar;
  DegreeCase dcase = DegreeCase::Negative;
  SAndS1 ss;
  bool strict_ok = false;
  std::vector<std::string> flags;
};

/// js and jx of a pretzel knot from the sign of s(q) and s1(q).
inline DegreeQuadratic pretzel_js_jx(const IntVector& q, bool strict = true) {
  DegreeQuadratic d;
  d.strict_ok = pretzel_strict_ok(q);
  if (strict && !d.strict_ok) throw HypothesisViolation("pretzel vector violates q0 < -1 < 1 < q_i, all odd, m even");
  if (q.size() < 3 || q[0] >= -1) throw HypothesisViolation("need q0 < -1 and at least two positive tangles");
  (void)pretzel_quadratic(q);  // validates q_i > 1
  if (!d.strict_ok) d.flags.push_back("outside theorem hypotheses");
  const Rational mm1(static_cast<long>(q.size()) - 2);  // m - 1
  d.ss = s_and_s1(q);
  d.dcase = classify_case(d.ss);
  switch (d.dcase) {
    case DegreeCase::Negative:
      d.js = -2 * d.ss.s;
      d.jx = -2 * d.ss.s1 + 4 * d.ss.s - 2 * mm1;
      d.surface_hint = SurfaceHint::SStar;
      break;
    case DegreeCase::ZeroNonzeroS1:
    case DegreeCase::ZeroZeroS1:
      d.js = 0;
      if (d.ss.s1 >= 0) {
        d.jx = -2 * mm1;
        d.surface_hint = SurfaceHint::Reference;
      } else {
        d.jx = -2 * d.ss.s1 - 2 * mm1;
        d.surface_hint = SurfaceHint::SStar;
      }
      if (d.dcase == DegreeCase::ZeroZeroS1)
        d.flags.push_back("leading-coefficient non-cancellation relies on parity hypotheses");
      break;
    case DegreeCase::Positive:
      d.js = 0;
      d.jx = -2 * mm1;
      d.surface_hint = SurfaceHint::Reference;
      break;
  }
  return d;
}

enum class TRMove { TR1neg, TR2neg, TRpos };

/// Change of deg <K^n> as (coefficient of n^2, coefficient of n).
struct TRShift {
  std::int64_t quad = 0, lin = 0;
};

inline TRShift tr_move_shift(TRMove mv, std::int64_t r1, std::int64_t r2 = 0) {
  switch (mv) {
    case TRMove::TR1neg:
      if (r1 >= 0) throw std::invalid_argument("TR1neg needs r < 0");
      return {-r1, 2 * (-r1 - 1)};
    case TRMove::TR2neg:
      if (r1 >= 0 || r2 >= 0) throw std::invalid_argument("TR2neg needs r1, r2 < 0");
      return {-(r1 + r2), -2 * r2};
    case TRMove::TRpos:
      if (r1 <= 0 || r2 <= 0) throw std::invalid_argument("TRpos needs r1, r2 > 0");
      return {r1 + r2, 2 * r2};
  }
  return {};
}

struct TRStep {
  int tangle;
  TRMove move;
  std::int64_t r1, r2;
  TRShift shift;
};

/// The moves that grow K from its special Montesinos knot L, following the expansions.
inline std::vector<TRStep> tr_moves(const MontesinosKnot& k) {
  std::vector<TRStep> out;
  AssociatedPretzelData ap = associated_pretzel(k);
  ContinuedFraction c0 = even_length_cfe(k.fractions[0]);
  const int l0 = c0.length();
  if (ap.q0_prime != 0) {
    for (int j = 1; j + 2 <= l0 - 1; j += 2)
      out.push_back({0, TRMove::TR2neg, c0[std::size_t(j + 2)], c0[std::size_t(j + 1)],
                     tr_move_shift(TRMove::TR2neg, c0[std::size_t(j + 2)], c0[std::size_t(j + 1)])});
    out.push_back({0, TRMove::TR1neg, c0[std::size_t(l0)], 0, tr_move_shift(TRMove::TR1neg, c0[std::size_t(l0)])});
  }
  for (std::size_t i = 1; i < k.fractions.size(); ++i) {
    ContinuedFraction ci = even_length_cfe(k.fractions[i]);
    for (int j = 2; j + 2 <= ci.length(); j += 2)
      out.push_back({int(i), TRMove::TRpos, ci[std::size_t(j + 2)], ci[std::size_t(j + 1)],
                     tr_move_shift(TRMove::TRpos, ci[std::size_t(j + 2)], ci[std::size_t(j + 1)])});
  }
  return out;
}

/// deg J_{K,n+1} predicted exactly from the tight-state maximum and the TR shifts.
inline Integer predicted_degree(const KnotSpec& spec, std::int64_t n) {
  const Integer framing = Integer(static_cast<long>(n * n + 2 * n));
  if (auto p = std::get_if<PretzelKnot>(&spec)) {
    int w = writhe(build_diagram(standard_program(*p)));
    return framing * w + maximize_degree(p->q, n).value;
  }
  const auto& k = std::get<MontesinosKnot>(spec);
  AssociatedPretzelData ap = associated_pretzel(k);
  int w = writhe(build_diagram(standard_program(k)));
  Integer d = framing * w + maximize_degree(ap.q, n, &ap.qi_prime).value;
  for (const auto& st : tr_moves(k)) d += Integer(static_cast<long>(st.shift.quad * n * n + st.shift.lin * n));
  return d;
}

struct MontesinosCorrections {
  std::int64_t q0_prime = 0;
  std::int64_t r0_bracket = 0;    // [r0]
  std::int64_t r0_odd = 0;        // [r0]_o
  std::int64_t r0_2 = 0;          // r0[2], 0 when absent
  std::int64_t sum_ri2_minus1 = 0;
  std::int64_t sum_ri_bracket = 0;
  std::int64_t sum_ri_even = 0;
  int omega_P = 0;
  int omega_K = 0;
};

struct MontesinosDegree {
  IntVector q;
  DegreeQuadratic pretzel;
  DegreeQuadratic knot;
  MontesinosCorrections corr;
};

inline bool montesinos_strict_ok(const MontesinosKnot& k, const AssociatedPretzelData& ap) {
  if (!pretzel_strict_ok(ap.q)) return false;
  if (!(k.fractions[0] < 0)) return false;
  for (std::size_t i = 0; i < k.fractions.size(); ++i) {
    if (abs(k.fractions[i]) >= 1) return false;
    if (i > 0 && !(k.fractions[i] > 0)) return false;
  }
  return true;
}

inline MontesinosDegree montesinos_js_jx(const MontesinosKnot& k, bool strict = true) {
  MontesinosDegree out;
  AssociatedPretzelData ap = associated_pretzel(k);
  out.q = ap.q;
  const bool ok = montesinos_strict_ok(k, ap);
  if (strict && !ok) throw HypothesisViolation("Montesinos knot violates the theorem hypotheses");
  out.pretzel = pretzel_js_jx(ap.q, false);
  out.pretzel.strict_ok = pretzel_strict_ok(ap.q);
  auto& c = out.corr;
  c.q0_prime = ap.q0_prime;
  ContinuedFraction c0 = even_length_cfe(k.fractions[0]);
  BracketSums b0 = bracket_sums(k.fractions[0]);
  c.r0_bracket = b0.total;
  c.r0_odd = b0.o_sum;
  c.r0_2 = c0.length() >= 2 ? c0[2] : 0;
  for (std::size_t i = 1; i < k.fractions.size(); ++i) {
    BracketSums bi = bracket_sums(k.fractions[i]);
    c.sum_ri2_minus1 += ap.qi_prime[i - 1] - 1;
    c.sum_ri_bracket += bi.total;
    c.sum_ri_even += bi.e_sum;
  }
  c.omega_P = writhe(build_diagram(standard_program(PretzelKnot{ap.q})));
  c.omega_K = writhe(build_diagram(standard_program(k)));
  const Rational ratio = c.q0_prime == 0 ? Rational(0) : make_rational(c.q0_prime, c.r0_2);
  DegreeQuadratic d = out.pretzel;
  d.strict_ok = ok;
  d.flags.clear();
  if (!ok) d.flags.push_back("outside theorem hypotheses");
  d.js = out.pretzel.js - c.q0_prime - c.r0_bracket - c.omega_P + c.omega_K + c.sum_ri2_minus1 + c.sum_ri_bracket;
  d.jx = out.pretzel.jx - 2 * ratio + 2 * c.r0_odd - 2 * c.sum_ri2_minus1 - 2 * c.sum_ri_even;
  out.knot = d;
  return out;
}

/// Pretzel knot vectors with s(q) >= 0 and s1(q) = 0; positive entries nondecreasing.
/// Vectors that describe links are skipped.
inline std::vector<IntVector> exceptional_scan(std::int64_t q0_min, std::int64_t qi_min, std::int64_t qi_max,
                                               const std::vector<int>& ms) {
  std::vector<IntVector> out;
  for (int m : ms) {
    for (std::int64_t q0 = q0_min; q0 <= -2; ++q0) {
      IntVector q(std::size_t(m + 1), 0);
      q[0] = q0;
      std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t lo) {
        if (i == q.size()) {
          SAndS1 ss = s_and_s1(q);
          if (ss.s < 0 || ss.s1 != 0) return;
          std::vector<Rational> r;
          for (auto x : q) r.push_back(make_rational(1, x));
          if (classify(r) == LinkType::Knot) out.push_back(q);
          return;
        }
        for (std::int64_t v = lo; v <= qi_max; ++v) {
          q[i] = v;
          rec(i + 1, v);
        }
      };
      rec(1, std::max<std::int64_t>(qi_min, 2));
    }
  }
  return out;
}

}  // namespace slopelab
