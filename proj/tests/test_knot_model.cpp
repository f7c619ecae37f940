#include "slopelab/diagram.hpp"
#include "slopelab/knot.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

using namespace slopelab;
using testing_support::uniform;

namespace {

std::vector<Rational> fr(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<Rational> out;
  for (auto [p, q] : xs) out.push_back(make_rational(p, q));
  return out;
}

const char* kExample = "m:-46/327,35/151,5/31,16/35,1/5";

std::vector<Rational> fractional_parts(const std::vector<Rational>& r) {
  std::vector<Rational> out;
  for (const auto& x : r) out.push_back(x - floor_of(x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Classify, Examples) {
  EXPECT_EQ(classify(fr({{-1, 3}, {-3, 10}, {1, 4}, {3, 7}})), LinkType::Link);
  EXPECT_EQ(classify(fr({{-1, 3}, {1, 3}, {1, 3}})), LinkType::Knot);
  EXPECT_EQ(classify(fr({{-1, 2}, {1, 3}, {1, 3}})), LinkType::Knot);
  EXPECT_EQ(classify(fr({{-1, 3}, {1, 3}, {1, 5}, {1, 7}})), LinkType::Link);
}

TEST(Normalize, Examples) {
  auto k = normalize_reduced(fr({{-1, 3}, {1, 4}, {3, 7}}));
  EXPECT_EQ(k.fractions, fr({{-1, 3}, {1, 4}, {3, 7}}));
  auto ex = std::get<MontesinosKnot>(parse_knot_spec(kExample));
  EXPECT_EQ(normalize_reduced(ex.fractions).fractions, ex.fractions);

  auto in = fr({{-4, 3}, {4, 3}, {1, 3}});
  auto out = normalize_reduced(in).fractions;
  Rational s_in = 0, s_out = 0;
  for (auto& x : in) s_in += x;
  for (auto& x : out) s_out += x;
  EXPECT_EQ(s_in, s_out);
  EXPECT_EQ(fractional_parts(in), fractional_parts(out));
  EXPECT_LT(out[0], 0);
}

TEST(Normalize, RandomInvariants) {
  int checked = 0;
  for (int i = 0; i < 3000; ++i) {
    std::vector<Rational> r;
    int n = int(uniform(3, 5));
    for (int j = 0; j < n; ++j) {
      Rational x;
      do x = make_rational(uniform(-40, 40), uniform(2, 13));
      while (is_integer(x));
      r.push_back(x);
    }
    MontesinosKnot k;
    try {
      k = normalize_reduced(r);
    } catch (const KnotInputError&) {
      continue;
    }
    ++checked;
    Rational s_in = 0, s_out = 0;
    for (auto& x : r) s_in += x;
    for (auto& x : k.fractions) s_out += x;
    ASSERT_EQ(s_in, s_out);
    ASSERT_EQ(fractional_parts(r), fractional_parts(k.fractions));
    ASSERT_LT(k.fractions[0], 0);
    for (std::size_t j = 0; j < k.fractions.size(); ++j) {
      ASSERT_LT(abs(k.fractions[j]), 1);
      if (j) { ASSERT_GT(k.fractions[j], 0); }
    }
    ASSERT_EQ(normalize_reduced(k.fractions).fractions, k.fractions);
  }
  EXPECT_GT(checked, 50);
}

TEST(Normalize, Errors) {
  EXPECT_THROW(normalize_reduced(fr({{-1, 3}, {-3, 10}, {1, 4}, {3, 7}})), NotAKnot);
  EXPECT_THROW(normalize_reduced(fr({{1, 3}, {1, 3}, {1, 3}})), NoNegativeTangle);
  EXPECT_THROW(normalize_reduced(fr({{-4, 3}, {1, 3}, {1, 3}})), NotAKnot);
  EXPECT_THROW(normalize_reduced(fr({{-1, 3}, {-1, 3}, {1, 3}, {1, 3}, {1, 3}})), MoreThanOneNegativeTangle);
  EXPECT_THROW(parse_knot_spec("p:-3,0,3"), KnotInputError);
  EXPECT_THROW(parse_knot_spec("p:-3,3"), KnotInputError);
  EXPECT_THROW(parse_knot_spec("x:1"), KnotInputError);
  EXPECT_THROW(parse_knot_spec("m:1/2,a"), KnotInputError);
}

TEST(Normalize, PretzelRotationIdempotent) {
  KnotSpec k = normalize_spec(parse_knot_spec("p:5,7,-3,5,3"));
  EXPECT_EQ(spec_string(k), "p:-3,5,3,5,7");
  EXPECT_EQ(spec_string(normalize_spec(k)), spec_string(k));
  EXPECT_EQ(spec_string(parse_knot_spec(kExample)), kExample);
}

TEST(AssociatedPretzel, Example) {
  auto ex = std::get<MontesinosKnot>(parse_knot_spec(kExample));
  auto ap = associated_pretzel(ex);
  EXPECT_EQ(ap.q, (std::vector<std::int64_t>{-7, 5, 7, 3, 5}));
  EXPECT_EQ(ap.q0_prime, -9);
  EXPECT_EQ(ap.qi_prime, (std::vector<std::int64_t>{3, 5, 5, 1}));
}

TEST(AssociatedPretzel, PretzelFractions) {
  auto ap = associated_pretzel(normalize_reduced(fr({{-1, 3}, {1, 3}, {1, 3}})));
  EXPECT_EQ(ap.q, (std::vector<std::int64_t>{-3, 3, 3}));
  EXPECT_EQ(ap.q0_prime, 0);
  for (int i = 0; i < 200; ++i) {
    IntVector q = testing_support::random_strict_q(2 * int(uniform(1, 2)), 25);
    auto a = associated_pretzel(as_montesinos(PretzelKnot{q}));
    ASSERT_EQ(a.q, q);
    ASSERT_EQ(a.q0_prime, 0);
    for (auto x : a.qi_prime) ASSERT_EQ(x, 1);
  }
}

TEST(Diagram, CrossingCountsAndWrithe) {
  Diagram dp = build_standard_diagram(parse_knot_spec("p:-7,5,7,3,5"));
  EXPECT_EQ(dp.size(), 27u);
  EXPECT_EQ(writhe(dp), -13);
  Diagram dk = build_standard_diagram(parse_knot_spec(kExample));
  EXPECT_EQ(dk.size(), 61u);
  EXPECT_EQ(writhe(dk), -43);
  EXPECT_EQ(build_standard_diagram(parse_knot_spec("p:1,1,1")).size(), 3u);
}

TEST(Diagram, Planarity) {
  for (const char* s : {"p:1,1,1", "p:-3,3,3", "p:-7,5,7,3,5", kExample, "m:-1/3,2/7,1/4", "m:-2/7,2/5,1/3"}) {
    Diagram d = build_standard_diagram(parse_knot_spec(s));
    const int V = int(d.size());
    EXPECT_EQ(d.components, 1) << s;
    EXPECT_EQ(V - 2 * V + face_count(d), 2) << s;
    std::map<int, int> seen;
    for (const auto& t : pd_code(d))
      for (int e : t) ++seen[e];
    EXPECT_EQ(int(seen.size()), 2 * V) << s;
    for (auto [e, n] : seen) EXPECT_EQ(n, 2) << s << " edge " << e;
  }
}

TEST(Diagram, MirrorNegatesWrithe) {
  for (const char* s : {"p:1,1,1", "p:-3,3,3", kExample}) {
    KnotProgram prog = standard_program(parse_knot_spec(s));
    EXPECT_EQ(writhe(build_diagram(prog, true)), -writhe(build_diagram(prog))) << s;
  }
}

TEST(Diagram, WritheInvariantUnderRotation) {
  // rotating the row of tangles is a planar isotopy of the closure
  for (int i = 0; i < 30; ++i) {
    IntVector q = testing_support::random_strict_q(2 * int(uniform(1, 2)), 11);
    int w = writhe(build_diagram(standard_program(PretzelKnot{q})));
    for (std::size_t r = 1; r < q.size(); ++r) {
      IntVector rot = q;
      std::rotate(rot.begin(), rot.begin() + long(r), rot.end());
      ASSERT_EQ(writhe(build_diagram(standard_program(PretzelKnot{rot}))), w);
    }
  }
}

TEST(Diagram, SignsMatchOrientation) {
  // right-hand rule: positive when (over x under) points up
  for (const char* s : {"p:1,1,1", "p:-7,5,7,3,5", kExample}) {
    Diagram d = build_standard_diagram(parse_knot_spec(s));
    for (const auto& x : d.crossings) {
      auto dir = [&](int a, int b) {
        int in = x.incoming[std::size_t(a)] ? a : b, out = in == a ? b : a;
        auto p = detail::slot_pos(in), q = detail::slot_pos(out);
        return std::array<int, 2>{q[0] - p[0], q[1] - p[1]};
      };
      auto over = x.over_swne ? dir(0, 2) : dir(1, 3);
      auto under = x.over_swne ? dir(1, 3) : dir(0, 2);
      int cross = over[0] * under[1] - over[1] * under[0];
      ASSERT_NE(cross, 0);
      ASSERT_EQ(x.sign, cross > 0 ? 1 : -1) << s;
      // reversing the orientation of both strands keeps the sign
      std::array<int, 2> ro{-over[0], -over[1]}, ru{-under[0], -under[1]};
      ASSERT_EQ(ro[0] * ru[1] - ro[1] * ru[0], cross);
    }
  }
}

TEST(Diagram, LinksRejected) {
  EXPECT_THROW(writhe(build_diagram(standard_program(PretzelKnot{{-3, 3, 3, 3}}))), MultiComponent);
}
