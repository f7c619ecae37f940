#include "slopelab/degree.hpp"
#include "slopelab/jones.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace slopelab;
using testing_support::random_strict_q;
using testing_support::uniform;

namespace {

const IntVector kP{-7, 5, 7, 3, 5};
const char* kExample = "m:-46/327,35/151,5/31,16/35,1/5";

// max of delta over every tight k with k0 <= n, by enumeration
Integer brute_max_delta(const IntVector& q, std::int64_t n, const IntVector* qp = nullptr) {
  Integer best;
  bool have = false;
  IntVector k(q.size(), 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i == q.size()) {
      k[0] = 0;
      for (std::size_t j = 1; j < q.size(); ++j) k[0] += k[j];
      Integer d = qp ? delta_nk_special(n, k, q, *qp) : delta_nk(n, k, q);
      if (!have || d > best) best = d, have = true;
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      k[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(1, n);
  return best;
}

std::set<IntVector> as_set(const std::vector<IntVector>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(SAndS1, Examples) {
  SAndS1 ss = s_and_s1(kP);
  EXPECT_EQ(ss.s, make_rational(-36, 7));
  EXPECT_EQ(ss.s1, make_rational(-32, 7));
  EXPECT_EQ(s_and_s1({-3, 5, 5}).s, 0);
  EXPECT_EQ(s_and_s1({-2, 3, 7}).s, make_rational(1, 2));
}

TEST(DeltaNK, ZeroStateAndTightness) {
  for (int it = 0; it < 50; ++it) {
    IntVector q = random_strict_q(2 * int(uniform(1, 2)), 15);
    std::int64_t n = uniform(0, 9), m = std::int64_t(q.size()) - 1, sum = 0;
    for (auto x : q) sum += x;
    IntVector zero(q.size(), 0);
    ASSERT_EQ(delta_nk(n, zero, q), Integer(static_cast<long>(n * (n + 2) * sum - 2 * (m - 1) * n)));
    IntVector ones(q.size() - 1, 1);
    IntVector k(q.size(), 0);
    k[1] = n;
    k[0] = n;
    ASSERT_EQ(delta_nk_special(n, k, q, ones), delta_nk(n, k, q));
  }
  EXPECT_THROW(delta_nk(3, {1, 1, 1}, {-3, 3, 3}), std::invalid_argument);
  EXPECT_THROW(delta_nk(3, {1, 1}, {-3, 3, 3}), std::invalid_argument);
}

TEST(PretzelJsJx, Examples) {
  DegreeQuadratic d = pretzel_js_jx(kP);
  EXPECT_EQ(d.js, make_rational(72, 7));
  EXPECT_EQ(d.jx, make_rational(-122, 7));
  EXPECT_EQ(d.dcase, DegreeCase::Negative);
  EXPECT_EQ(d.surface_hint, SurfaceHint::SStar);

  d = pretzel_js_jx({-3, 5, 5});
  EXPECT_EQ(d.js, 0);
  EXPECT_EQ(d.dcase, DegreeCase::ZeroZeroS1);
  EXPECT_FALSE(d.flags.empty());

  EXPECT_THROW(pretzel_js_jx({-2, 3, 7}), HypothesisViolation);
  d = pretzel_js_jx({-2, 3, 7}, false);
  EXPECT_EQ(d.dcase, DegreeCase::Positive);
  EXPECT_EQ(d.js, 0);
  EXPECT_EQ(d.jx, -2);  // -2(m-1) with m + 1 = 3 tangles
  EXPECT_EQ(d.surface_hint, SurfaceHint::Reference);
}

TEST(PretzelJsJx, PermutationInvariance) {
  for (int it = 0; it < 100; ++it) {
    IntVector q = random_strict_q(2 * int(uniform(1, 2)), 25);
    DegreeQuadratic d = pretzel_js_jx(q);
    IntVector p = q;
    std::shuffle(p.begin() + 1, p.end(), testing_support::rng());
    DegreeQuadratic e = pretzel_js_jx(p);
    ASSERT_EQ(d.js, e.js);
    ASSERT_EQ(d.jx, e.jx);
    ASSERT_EQ(d.dcase, e.dcase);
  }
}

TEST(TRMoves, Shifts) {
  auto s = tr_move_shift(TRMove::TRpos, 5, 2);
  EXPECT_EQ(s.quad, 7);
  EXPECT_EQ(s.lin, 4);
  s = tr_move_shift(TRMove::TR2neg, -4, -1);
  EXPECT_EQ(s.quad, 5);
  EXPECT_EQ(s.lin, 2);
  s = tr_move_shift(TRMove::TR1neg, -3);
  EXPECT_EQ(s.quad, 3);
  EXPECT_EQ(s.lin, 4);
  EXPECT_THROW(tr_move_shift(TRMove::TRpos, -1, 2), std::invalid_argument);
}

TEST(MontesinosJsJx, Example) {
  auto k = std::get<MontesinosKnot>(parse_knot_spec(kExample));
  MontesinosDegree md = montesinos_js_jx(k);
  EXPECT_EQ(md.q, kP);
  EXPECT_EQ(md.pretzel.js, make_rational(72, 7));
  EXPECT_EQ(md.pretzel.jx, make_rational(-122, 7));
  EXPECT_EQ(md.knot.js, make_rational(100, 7));
  EXPECT_EQ(md.knot.jx, make_rational(-374, 7));
  EXPECT_EQ(md.corr.q0_prime, -9);
  EXPECT_EQ(md.corr.omega_P, -13);
  EXPECT_EQ(md.corr.omega_K, -43);
}

TEST(MontesinosJsJx, PretzelAsMontesinos) {
  for (int it = 0; it < 60; ++it) {
    IntVector q = random_strict_q(2 * int(uniform(1, 2)), 15);
    MontesinosDegree md = montesinos_js_jx(as_montesinos(PretzelKnot{q}));
    DegreeQuadratic d = pretzel_js_jx(q);
    ASSERT_EQ(md.knot.js, d.js);
    ASSERT_EQ(md.knot.jx, d.jx);
  }
}

TEST(MaximizeDegree, Examples) {
  MaxDelta m = maximize_degree(kP, 14);
  EXPECT_EQ(m.dcase, DegreeCase::Negative);
  EXPECT_EQ(m.t, 14);
  EXPECT_EQ(maximize_degree({-3, 5, 5}, 6).dcase, DegreeCase::ZeroZeroS1);
  m = maximize_degree({-2, 3, 7}, 6);
  EXPECT_EQ(m.dcase, DegreeCase::Positive);
  EXPECT_EQ(m.t, 0);
}

TEST(MaximizeDegree, AgainstEnumeration) {
  for (int it = 0; it < 80; ++it) {
    IntVector q = random_strict_q(2 * int(uniform(1, 2)), 13);
    std::int64_t n = uniform(0, 6);
    ASSERT_EQ(maximize_degree(q, n).value, brute_max_delta(q, n));
    IntVector qp;
    for (std::size_t i = 1; i < q.size(); ++i) qp.push_back(uniform(1, 4));
    ASSERT_EQ(maximize_degree(q, n, &qp).value, brute_max_delta(q, n, &qp));
  }
}

TEST(PredictedDegree, MatchesOracle) {
  for (const char* s : {"p:-3,3,3", "p:-5,3,3", "p:-3,3,5", "p:-3,5,7", "p:-5,5,5", "p:-3,3,3,3,3", "p:-7,5,7,3,5",
                        "m:-1/3,2/7,1/4", "m:-2/7,2/5,1/3", "m:-4/15,2/5,1/3", "m:-3/11,2/5,2/7"}) {
    KnotSpec k = testing_support::knot(s);
    for (int n = 1; n <= 2; ++n) {
      LaurentPoly j = colored_jones(k, n + 1);
      EXPECT_EQ(Integer(static_cast<long>(j.degree().value())), predicted_degree(k, n)) << s << " n=" << n;
    }
  }
}

TEST(ExceptionalScan, Families) {
  auto found = as_set(exceptional_scan(-10, 3, 10, {2, 3}));
  std::set<IntVector> expected{{-3, 5, 5}, {-3, 4, 7}, {-2, 3, 5, 5}, {-2, 3, 7}};
  EXPECT_EQ(found, expected);
  EXPECT_EQ(as_set(exceptional_scan(-4, 3, 8, {2})), (std::set<IntVector>{{-3, 5, 5}, {-3, 4, 7}, {-2, 3, 7}}));
  EXPECT_EQ(as_set(exceptional_scan(-4, 3, 8, {3})), (std::set<IntVector>{{-2, 3, 5, 5}}));
  EXPECT_TRUE(exceptional_scan(-10, 3, 4, {2, 3}).empty());
  for (const auto& q : found) {
    SAndS1 ss = s_and_s1(q);
    EXPECT_GE(ss.s, 0);
    EXPECT_EQ(ss.s1, 0);
  }
}
