#include "slopelab/jones.hpp"
#include "slopelab/tl.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace slopelab;

namespace {

LaurentPoly loop() { return -v_pow(-2) - v_pow(2); }

KnotProgram unknot_program() {
  KnotProgram u;
  u.tangles.push_back({true, {}});
  return u;
}

// v^{2n-2} + v^{2n-6} + ... + v^{2-2n}
LaurentPoly quantum_integer(int n) {
  LaurentPoly p;
  for (int j = 0; j < n; ++j) p += v_pow(2 * n - 2 - 4 * j);
  return p;
}

// top c points, bottom a + b points: the trivalent vertex before projectors
TLElement vertex(int a, int b, int c) {
  const int x = (b + c - a) / 2, y = (a + c - b) / 2, z = (a + b - c) / 2;
  Matching m(std::size_t(a + b + c));
  auto join = [&](int p, int q) {
    m[std::size_t(p)] = std::uint8_t(q);
    m[std::size_t(q)] = std::uint8_t(p);
  };
  for (int j = 0; j < y; ++j) join(j, c + j);
  for (int j = 0; j < x; ++j) join(y + j, c + a + z + j);
  for (int j = 0; j < z; ++j) join(c + a - 1 - j, c + a + j);
  TLElement g(c, a + b);
  g.add(m, 1);
  return g;
}

// reflection in a horizontal line
TLElement flipped(const TLElement& x) {
  TLElement out(x.bot(), x.top());
  const int t = x.top(), b = x.bot();
  auto map = [&](int p) { return p < t ? b + p : p - t; };
  for (const auto& [m, c] : x.terms()) {
    Matching n(m.size());
    for (int p = 0; p < t + b; ++p) n[std::size_t(map(p))] = std::uint8_t(map(m[std::size_t(p)]));
    out.add(n, c);
  }
  return out;
}

}  // namespace

TEST(TemperleyLieb, Relations) {
  for (int k = 2; k <= 5; ++k) {
    for (int i = 0; i + 1 < k; ++i) {
      TLElement e = tl_generator(k, i);
      EXPECT_EQ(e * e, e * loop());
      EXPECT_EQ(tl_identity(k) * e, e);
      EXPECT_EQ(e * tl_identity(k), e);
      if (i + 2 < k) {
        TLElement f = tl_generator(k, i + 1);
        EXPECT_EQ(e * f * e, e);
        EXPECT_EQ(f * e * f, f);
      }
      for (int j = i + 2; j + 1 < k; ++j) EXPECT_EQ(e * tl_generator(k, j), tl_generator(k, j) * e);
    }
  }
  TLElement cap = vertex(1, 1, 0);
  EXPECT_EQ(tl_closure(cap * flipped(cap)), loop());
  EXPECT_THROW(tl_multiply(tl_identity(2), tl_identity(3)), ArityMismatch);
}

TEST(TemperleyLieb, DeltaValues) {
  EXPECT_EQ(delta_n(0), LaurentPoly(1));
  EXPECT_EQ(delta_n(1), loop());
  EXPECT_EQ(delta_n(2), v_pow(-4) + LaurentPoly(1) + v_pow(4));
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(delta_n(n), delta_n_closed_form(n)) << n;
    LaurentPoly expected = quantum_integer(n + 1);
    EXPECT_EQ(delta_n(n), n % 2 ? -expected : expected) << n;
  }
}

TEST(JonesWenzl, Properties) {
  EXPECT_EQ(jw_projector(1).F, tl_identity(1));
  for (int n = 1; n <= 5; ++n) {
    JWProjector p = jw_projector(n);
    EXPECT_EQ(p.F * p.F, p.F * p.d) << n;
    for (int i = 0; i + 1 < n; ++i) {
      EXPECT_TRUE((p.F * tl_generator(n, i)).is_zero()) << n;
      EXPECT_TRUE((tl_generator(n, i) * p.F).is_zero()) << n;
    }
    EXPECT_EQ(p.F.coeff(tl_identity(n).terms().begin()->first), p.d) << n;
    if (n <= 4) { EXPECT_EQ(tl_closure(p.F), delta_n(n) * p.d) << n; }
  }
}

TEST(Theta, Examples) {
  EXPECT_EQ(theta(0, 0, 0).as_poly().value(), LaurentPoly(1));
  EXPECT_EQ(theta(1, 1, 0).as_poly().value(), delta_n(1));
  EXPECT_EQ(theta(2, 2, 0).as_poly().value(), delta_n(2));
  EXPECT_THROW(theta(1, 1, 1), InadmissibleTriple);
  EXPECT_THROW(theta(4, 1, 1), InadmissibleTriple);
}

TEST(Theta, AgainstNetwork) {
  const int triples[][3] = {{1, 1, 0}, {1, 1, 2}, {2, 2, 2}, {2, 1, 1}, {3, 2, 1}, {2, 2, 4}, {3, 3, 2}, {4, 2, 2}};
  for (const auto& t : triples) {
    const int a = t[0], b = t[1], c = t[2];
    auto pa = jw_projector(std::max(a, 1)), pb = jw_projector(std::max(b, 1)), pc = jw_projector(std::max(c, 1));
    TLElement fa = a ? pa.F : TLElement(0, 0), fb = b ? pb.F : TLElement(0, 0), fc = c ? pc.F : TLElement(0, 0);
    LaurentPoly da = a ? pa.d : LaurentPoly(1), db = b ? pb.d : LaurentPoly(1), dc = c ? pc.d : LaurentPoly(1);
    if (!a) fa.add({}, 1);
    if (!b) fb.add({}, 1);
    if (!c) fc.add({}, 1);
    TLElement g = vertex(a, b, c);
    LaurentPoly net = tl_closure(fc * g * tl_tensor(fa, fb) * flipped(g));
    LaurentFraction th = theta(a, b, c);
    EXPECT_EQ(net * th.den, th.num * da * db * dc) << a << "," << b << "," << c;
  }
}

TEST(ColoredJones, Unknot) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(colored_jones(unknot_program(), n), quantum_integer(n)) << n;
    EXPECT_EQ(unknot_jones(n), quantum_integer(n)) << n;
  }
}

TEST(ColoredJones, TrefoilTable) {
  // left-handed trefoil: V = -t^-4 + t^-3 + t^-1 at t = v^4, times the unknot factor
  LaurentPoly v_left = -v_pow(-16) + v_pow(-12) + v_pow(-4);
  LaurentPoly j = colored_jones(parse_knot_spec("p:1,1,1"), 2);
  EXPECT_EQ(j, (v_pow(2) + v_pow(-2)) * v_left);
  EXPECT_EQ(j, -v_pow(-18) + v_pow(-10) + v_pow(-6) + v_pow(-2));
  EXPECT_EQ(j.eval_at_one(), 2);
}

TEST(ColoredJones, TrefoilSignFlippedValue) {
  // v^18 - v^10 - v^6 - v^2 is minus the mirror of the oracle value; it is not a
  // colored Jones polynomial since it evaluates to -2 at v = 1
  LaurentPoly quoted = v_pow(18) - v_pow(10) - v_pow(6) - v_pow(2);
  LaurentPoly j = colored_jones(parse_knot_spec("p:1,1,1"), 2);
  EXPECT_EQ(quoted, -j.mirrored());
  EXPECT_EQ(quoted.eval_at_one(), -2);
}

TEST(ColoredJones, StateSumAgreesWithCabling) {
  for (const char* s : {"p:1,1,1", "p:-3,3,3", "p:-3,5,3", "p:-1,3,3", "m:-1/3,2/7,1/4", "m:-2/7,2/5,1/3", "p:-3,3,3,3,3"}) {
    KnotSpec k = parse_knot_spec(s);
    EXPECT_EQ(jones2_state_sum(build_standard_diagram(k)), colored_jones(k, 2)) << s;
  }
}

TEST(ColoredJones, MirrorIdentity) {
  JonesOptions mirror;
  mirror.mirror = true;
  for (const char* s : {"p:1,1,1", "p:-3,3,3", "m:-1/3,2/7,1/4"}) {
    KnotSpec k = parse_knot_spec(s);
    for (int n = 2; n <= 3; ++n) EXPECT_EQ(colored_jones(k, n, mirror), colored_jones(k, n).mirrored()) << s << " " << n;
  }
  KnotProgram flipped_pretzel = standard_program(PretzelKnot{{3, -3, -3}});
  for (int n = 2; n <= 3; ++n)
    EXPECT_EQ(colored_jones(flipped_pretzel, n).mirrored(), colored_jones(parse_knot_spec("p:-3,3,3"), n)) << n;
}

TEST(ColoredJones, FoldOrderAndRotation) {
  JonesOptions rtl;
  rtl.right_to_left = true;
  for (const char* s : {"p:-3,3,5", "m:-2/7,2/5,1/3"}) {
    KnotSpec k = parse_knot_spec(s);
    for (int n = 2; n <= 3; ++n) EXPECT_EQ(colored_jones(k, n, rtl), colored_jones(k, n)) << s;
  }
  EXPECT_EQ(colored_jones(parse_knot_spec("p:5,-3,3"), 3), colored_jones(parse_knot_spec("p:-3,3,5"), 3));
}

TEST(ColoredJones, ValueAtOne) {
  for (const char* s : {"p:1,1,1", "p:-3,3,3", "p:-5,3,7", "m:-1/3,2/7,1/4"})
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(colored_jones(parse_knot_spec(s), n).eval_at_one(), n) << s << " " << n;
}

TEST(ColoredJones, Limits) {
  JonesOptions small;
  small.max_color = 3;
  EXPECT_THROW(colored_jones(parse_knot_spec("p:-3,3,3"), 4, small), ColorTooLarge);
  small.max_color = 4;
  small.max_work = 10;
  EXPECT_THROW(colored_jones(parse_knot_spec("p:-3,3,3"), 3, small), BudgetExceeded);
  EXPECT_THROW(colored_jones(parse_knot_spec("p:-3,3,3"), 0), std::invalid_argument);
  EXPECT_EQ(colored_jones(parse_knot_spec("p:-3,3,3"), 1), LaurentPoly(1));
}
