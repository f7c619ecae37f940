/**
 * @file tl.hpp
 * @brief Temperley-Lieb elements, Jones-Wenzl projectors, Delta_n and theta.
 *
 * An element is a formal combination of crossingless matchings on the
 * boundary of a disk.  Boundary points are numbered top left-to-right
 * 0..top-1, then bottom left-to-right top..top+bot-1.  The product x*y
 * places x above y.  Conventions: A = v^{-1}, loop value -v^{-2} - v^{2}.
 */
#pragma once

#include "slopelab/laurent.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace slopelab {

using Matching = std::vector<std::uint8_t>;  // partner of each boundary point

inline LaurentPoly loop_value() { return LaurentPoly::monomial(-2, -1) + LaurentPoly::monomial(2, -1); }

class ArityMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// How two matchings are glued: a partner for every glued point and an output
/// slot for every free one.  Points of x come first, then those of y.
struct GluePlan {
  int px = 0, py = 0;
  std::vector<int> glue;     // -1 for free points
  std::vector<int> out_pos;  // valid for free points
  int out_points = 0;

  void join(int a, int b) {
    glue[std::size_t(a)] = b;
    glue[std::size_t(b)] = a;
  }
  static GluePlan blank(int px, int py) {
    GluePlan p;
    p.px = px;
    p.py = py;
    p.glue.assign(std::size_t(px + py), -1);
    p.out_pos.assign(std::size_t(px + py), -1);
    return p;
  }
};

/// Glues two matchings; returns the resulting matching and the number of closed loops.
inline std::pair<Matching, int> glue_matchings(const Matching& mx, const Matching* my, const GluePlan& plan) {
  const int total = plan.px + plan.py;
  auto mate = [&](int p) {
    return p < plan.px ? int(mx[std::size_t(p)]) : plan.px + int((*my)[std::size_t(p - plan.px)]);
  };
  std::vector<char> seen(std::size_t(total), 0);
  Matching out(std::size_t(plan.out_points), 0);
  for (int s = 0; s < total; ++s) {
    if (plan.glue[std::size_t(s)] >= 0 || seen[std::size_t(s)]) continue;
    int cur = s;
    seen[std::size_t(cur)] = 1;
    for (;;) {
      cur = mate(cur);
      seen[std::size_t(cur)] = 1;
      int g = plan.glue[std::size_t(cur)];
      if (g < 0) break;
      cur = g;
      seen[std::size_t(cur)] = 1;
    }
    out[std::size_t(plan.out_pos[std::size_t(s)])] = std::uint8_t(plan.out_pos[std::size_t(cur)]);
    out[std::size_t(plan.out_pos[std::size_t(cur)])] = std::uint8_t(plan.out_pos[std::size_t(s)]);
  }
  int loops = 0;
  for (int s = 0; s < total; ++s) {
    if (seen[std::size_t(s)]) continue;
    ++loops;
    int cur = s;
    while (!seen[std::size_t(cur)]) {
      seen[std::size_t(cur)] = 1;
      int m = mate(cur);
      seen[std::size_t(m)] = 1;
      cur = plan.glue[std::size_t(m)];
    }
  }
  return {out, loops};
}

class TLElement {
 public:
  TLElement() = default;
  TLElement(int top, int bot) : top_(top), bot_(bot) {
    if ((top + bot) % 2 != 0) throw ArityMismatch("odd number of boundary points");
  }

  int top() const { return top_; }
  int bot() const { return bot_; }
  int points() const { return top_ + bot_; }
  const std::map<Matching, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Matching& m, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  void add_product(const Matching& m, const LaurentPoly& a, const LaurentPoly& b) {
    auto it = terms_.try_emplace(m).first;
    it->second.add_product(a, b);
    if (it->second.is_zero()) terms_.erase(it);
  }

  LaurentPoly coeff(const Matching& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? LaurentPoly() : it->second;
  }

  TLElement& operator+=(const TLElement& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  TLElement& operator-=(const TLElement& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  TLElement& operator*=(const LaurentPoly& k) {
    if (k.is_zero()) { terms_.clear(); return *this; }
    for (auto& [m, c] : terms_) c *= k;
    return *this;
  }
  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }
  friend TLElement operator*(TLElement a, const LaurentPoly& k) { return a *= k; }

  /// Exact division of every coefficient, or throws.
  TLElement divided_by(const LaurentPoly& d) const {
    TLElement out(top_, bot_);
    for (const auto& [m, c] : terms_) {
      auto q = c.divided_by(d);
      if (!q) throw std::domain_error("coefficient not divisible");
      out.terms_.emplace(m, *q);
    }
    return out;
  }
  bool divisible_by(const LaurentPoly& d) const {
    for (const auto& [m, c] : terms_)
      if (!c.divided_by(d)) return false;
    return true;
  }

  friend bool operator==(const TLElement& a, const TLElement& b) {
    return a.top_ == b.top_ && a.bot_ == b.bot_ && a.terms_ == b.terms_;
  }

 private:
  void check_same(const TLElement& o) const {
    if (o.top_ != top_ || o.bot_ != bot_) throw ArityMismatch("arity mismatch in sum");
  }
  int top_ = 0, bot_ = 0;
  std::map<Matching, LaurentPoly> terms_;
};

namespace detail {

inline const LaurentPoly& loop_power(int k) {
  static std::vector<LaurentPoly> cache{LaurentPoly(1)};
  while (int(cache.size()) <= k) cache.push_back(cache.back() * loop_value());
  return cache[std::size_t(k)];
}

}  // namespace detail

/// Glues x and y (y may be null for a self-gluing) into an element with the given arity.
inline TLElement glue(const TLElement& x, const TLElement* y, const GluePlan& plan, int out_top, int out_bot) {
  if (plan.out_points != out_top + out_bot) throw ArityMismatch("glue plan does not match output arity");
  TLElement out(out_top, out_bot);
  if (!y) {
    for (const auto& [mx, cx] : x.terms()) {
      auto [m, loops] = glue_matchings(mx, nullptr, plan);
      out.add_product(m, cx, detail::loop_power(loops));
    }
    return out;
  }
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y->terms()) {
      auto [m, loops] = glue_matchings(mx, &my, plan);
      if (loops == 0) out.add_product(m, cx, cy);
      else out.add_product(m, cx * cy, detail::loop_power(loops));
    }
  }
  return out;
}

/// x above y: the bottom of x is glued to the top of y.
inline TLElement tl_multiply(const TLElement& x, const TLElement& y) {
  if (x.bot() != y.top()) throw ArityMismatch("tl_multiply: x.bot != y.top");
  GluePlan p = GluePlan::blank(x.points(), y.points());
  for (int j = 0; j < x.bot(); ++j) p.join(x.top() + j, x.points() + j);
  for (int j = 0; j < x.top(); ++j) p.out_pos[std::size_t(j)] = j;
  for (int j = 0; j < y.bot(); ++j) p.out_pos[std::size_t(x.points() + y.top() + j)] = x.top() + j;
  p.out_points = x.top() + y.bot();
  return glue(x, &y, p, x.top(), y.bot());
}

inline TLElement operator*(const TLElement& x, const TLElement& y) { return tl_multiply(x, y); }

inline TLElement tl_identity(int k) {
  TLElement e(k, k);
  Matching m(std::size_t(2 * k));
  for (int j = 0; j < k; ++j) {
    m[std::size_t(j)] = std::uint8_t(k + j);
    m[std::size_t(k + j)] = std::uint8_t(j);
  }
  e.add(m, 1);
  return e;
}

/// Generator e_i of TL_k, 0 <= i <= k-2: cap on i, i+1 at top and bottom.
inline TLElement tl_generator(int k, int i) {
  if (i < 0 || i + 1 >= k) throw std::out_of_range("generator index");
  TLElement e(k, k);
  Matching m(std::size_t(2 * k));
  for (int j = 0; j < k; ++j) {
    m[std::size_t(j)] = std::uint8_t(k + j);
    m[std::size_t(k + j)] = std::uint8_t(j);
  }
  m[std::size_t(i)] = std::uint8_t(i + 1);
  m[std::size_t(i + 1)] = std::uint8_t(i);
  m[std::size_t(k + i)] = std::uint8_t(k + i + 1);
  m[std::size_t(k + i + 1)] = std::uint8_t(k + i);
  e.add(m, 1);
  return e;
}

/// x beside y, x on the left.
inline TLElement tl_tensor(const TLElement& x, const TLElement& y) {
  GluePlan p = GluePlan::blank(x.points(), y.points());
  const int top = x.top() + y.top();
  for (int j = 0; j < x.top(); ++j) p.out_pos[std::size_t(j)] = j;
  for (int j = 0; j < x.bot(); ++j) p.out_pos[std::size_t(x.top() + j)] = top + j;
  for (int j = 0; j < y.top(); ++j) p.out_pos[std::size_t(x.points() + j)] = x.top() + j;
  for (int j = 0; j < y.bot(); ++j) p.out_pos[std::size_t(x.points() + y.top() + j)] = top + x.bot() + j;
  p.out_points = x.points() + y.points();
  return glue(x, &y, p, top, x.bot() + y.bot());
}

/// Markov closure of an element of TL_k: top j joined to bottom j around the right side.
inline LaurentPoly tl_closure(const TLElement& x) {
  if (x.top() != x.bot()) throw ArityMismatch("closure needs a square element");
  GluePlan p = GluePlan::blank(x.points(), 0);
  for (int j = 0; j < x.top(); ++j) p.join(j, x.top() + j);
  TLElement r = glue(x, nullptr, p, 0, 0);
  return r.coeff(Matching{});
}

/// Delta_n by the Chebyshev recursion; Delta_{-1} = 0 here, the factorials treat it as 1.
inline LaurentPoly delta_n(int n) {
  if (n < 0) throw std::invalid_argument("delta_n needs n >= 0");
  LaurentPoly prev = 0, cur = 1;
  for (int k = 0; k < n; ++k) {
    LaurentPoly next = loop_value() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Closed form (-1)^n (v^{-2(n+1)} - v^{2(n+1)}) / (v^{-2} - v^{2}).
inline LaurentPoly delta_n_closed_form(int n) {
  LaurentPoly num = LaurentPoly::monomial(-2 * (n + 1)) - LaurentPoly::monomial(2 * (n + 1));
  LaurentPoly den = LaurentPoly::monomial(-2) - LaurentPoly::monomial(2);
  auto q = num.divided_by(den);
  if (!q) throw std::logic_error("Delta_n closed form is not a Laurent polynomial");
  return n % 2 ? -*q : *q;
}

/// Jones-Wenzl projector kept as an integral numerator: f_n = F / d.
struct JWProjector {
  TLElement F;
  LaurentPoly d;
};

/// Wenzl recursion on numerators:
///   F_{k+1} = Delta_k d_k (F_k x 1) - Delta_{k-1} (F_k x 1) e_k (F_k x 1),  d_{k+1} = Delta_k d_k^2,
/// with common Delta factors divided out as they appear.
inline JWProjector jw_projector(int n) {
  if (n < 1) throw std::invalid_argument("jw_projector needs n >= 1");
  JWProjector p{tl_identity(1), 1};
  for (int k = 1; k < n; ++k) {
    TLElement f1 = tl_tensor(p.F, tl_identity(1));
    TLElement mid = f1 * tl_generator(k + 1, k - 1) * f1;
    JWProjector next{f1 * (delta_n(k) * p.d) - mid * delta_n(k - 1), delta_n(k) * p.d * p.d};
    for (int j = 1; j <= k; ++j) {
      LaurentPoly dj = delta_n(j);
      while (next.d.divided_by(dj) && next.F.divisible_by(dj)) {
        next.d = *next.d.divided_by(dj);
        next.F = next.F.divided_by(dj);
      }
    }
    p = std::move(next);
  }
  return p;
}

/// Delta_k! = Delta_k Delta_{k-1} ... Delta_1, equal to 1 for k = 0 and k = -1.
inline LaurentPoly delta_factorial(int k) {
  LaurentPoly r = 1;
  for (int j = 1; j <= k; ++j) r *= delta_n(j);
  return r;
}

class InadmissibleTriple : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Quotient of Laurent polynomials, not reduced beyond trivial cancellation.
struct LaurentFraction {
  LaurentPoly num;
  LaurentPoly den;

  /// Exact value as a Laurent polynomial, when the division is exact.
  std::optional<LaurentPoly> as_poly() const { return num.divided_by(den); }
  friend bool operator==(const LaurentFraction& a, const LaurentFraction& b) {
    return a.num * b.den == b.num * a.den;
  }
};

inline bool admissible(int a, int b, int c) {
  return a >= 0 && b >= 0 && c >= 0 && (a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b;
}

/// theta(a,b,c) from Delta factorials with x = (b+c-a)/2, y = (a+c-b)/2, z = (a+b-c)/2.
inline LaurentFraction theta(int a, int b, int c) {
  if (!admissible(a, b, c)) throw InadmissibleTriple("inadmissible triple");
  const int x = (b + c - a) / 2, y = (a + c - b) / 2, z = (a + b - c) / 2;
  LaurentFraction t;
  t.num = delta_factorial(x + y + z) * delta_factorial(x - 1) * delta_factorial(y - 1) * delta_factorial(z - 1);
  t.den = delta_factorial(y + z - 1) * delta_factorial(z + x - 1) * delta_factorial(x + y - 1);
  if (auto q = t.as_poly()) {
    t.num = *q;
    t.den = 1;
  }
  return t;
}

}  // namespace slopelab
