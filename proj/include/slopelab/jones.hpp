/**
 * @file jones.hpp
 * @brief Colored Jones polynomials of standard diagrams by n-cabling.
 *
 * Each tangle of the program is evaluated as an element of TL_{2n} with four
 * n-point cables: NW = top 0..n-1, NE = top n..2n-1, SW = bottom 2n..3n-1,
 * SE = bottom 3n..4n-1.  One Jones-Wenzl projector sits on the NW cable of
 * the final sum before the numerator closure.
 *
 *   J_{K,n+1} = ((-1)^n v)^{w (n^2 + 2n)} (-1)^n <D^n>
 */
#pragma once

#include "slopelab/diagram.hpp"
#include "slopelab/tl.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <stdexcept>
#include <vector>

namespace slopelab {

class ColorTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct JonesOptions {
  int max_color = 4;                    // largest N allowed in J_{K,N}
  std::int64_t max_work = 4'000'000;    // crossings * Catalan(2n)^2
  bool right_to_left = false;           // fold order of the tangle sum
  bool mirror = false;                  // flip every crossing
};

inline std::int64_t catalan(int k) {
  std::int64_t c = 1;
  for (int j = 0; j < k; ++j) c = c * 2 * (2 * j + 1) / (j + 2);
  return c;
}

inline std::int64_t jones_work_estimate(const KnotProgram& prog, int color) {
  const int n = color - 1;
  std::int64_t c = catalan(2 * n);
  return std::max<std::int64_t>(1, prog.crossing_count()) * c * c;
}

/// Cabled versions of the tangle operations of the diagram builder.
class CabledKit {
 public:
  explicit CabledKit(int n) : n_(n) {
    cross_[0] = block_swap(false);
    cross_[1] = block_swap(true);
  }

  int n() const { return n_; }

  TLElement zero() const {
    Matching m(std::size_t(4 * n_));
    for (int k = 0; k < n_; ++k) {
      pair(m, n_ - 1 - k, n_ + k);
      pair(m, 2 * n_ + (n_ - 1 - k), 3 * n_ + k);
    }
    TLElement e(2 * n_, 2 * n_);
    e.add(m, 1);
    return e;
  }
  TLElement infinity() const { return tl_identity(2 * n_); }
  const TLElement& crossing(bool over_swne) const { return cross_[over_swne ? 1 : 0]; }

  TLElement hsum(const TLElement& a, const TLElement& b) const {
    const int P = 4 * n_;
    GluePlan p = GluePlan::blank(P, P);
    for (int k = 0; k < n_; ++k) {
      p.join(2 * n_ - 1 - k, P + k);
      p.join(4 * n_ - 1 - k, P + 2 * n_ + k);
    }
    for (int j = 0; j < n_; ++j) {
      p.out_pos[std::size_t(j)] = j;
      p.out_pos[std::size_t(P + n_ + j)] = n_ + j;
      p.out_pos[std::size_t(2 * n_ + j)] = 2 * n_ + j;
      p.out_pos[std::size_t(P + 3 * n_ + j)] = 3 * n_ + j;
    }
    p.out_points = P;
    return glue(a, &b, p, 2 * n_, 2 * n_);
  }
  TLElement vstack(const TLElement& a, const TLElement& b) const { return a * b; }

  LaurentPoly numerator(const TLElement& a) const {
    GluePlan p = GluePlan::blank(4 * n_, 0);
    for (int k = 0; k < n_; ++k) {
      p.join(n_ - 1 - k, n_ + k);
      p.join(2 * n_ + (n_ - 1 - k), 3 * n_ + k);
    }
    return glue(a, nullptr, p, 0, 0).coeff(Matching{});
  }

 private:
  static void pair(Matching& m, int a, int b) {
    m[std::size_t(a)] = std::uint8_t(b);
    m[std::size_t(b)] = std::uint8_t(a);
  }

  /// Elementary crossing at positions j, j+1 of TL_{2n}.
  TLElement sigma(int j, bool over_swne) const {
    TLElement s = tl_identity(2 * n_) * (over_swne ? v_pow(-1) : v_pow(1));
    s += tl_generator(2 * n_, j) * (over_swne ? v_pow(1) : v_pow(-1));
    return s;
  }

  /// The SW cable crosses the SE cable: every SW strand passes every SE strand once.
  TLElement block_swap(bool over_swne) const {
    std::vector<int> line(std::size_t(2 * n_));
    for (int j = 0; j < 2 * n_; ++j) line[std::size_t(j)] = j;
    TLElement cur = tl_identity(2 * n_);
    bool moved = true;
    while (moved) {
      moved = false;
      for (int j = 0; j + 1 < 2 * n_; ++j) {
        if (line[std::size_t(j)] < n_ && line[std::size_t(j + 1)] >= n_) {
          cur = sigma(j, over_swne) * cur;
          std::swap(line[std::size_t(j)], line[std::size_t(j + 1)]);
          moved = true;
        }
      }
    }
    return cur;
  }

  int n_;
  TLElement cross_[2];
};

/// <D^n> times d_n, where d_n is the projector denominator; evaluated tangle by tangle.
inline LaurentPoly cabled_bracket_numerator(const KnotProgram& prog, const CabledKit& kit, const JWProjector& jw,
                                            const JonesOptions& opt) {
  std::vector<TLElement> boxes;
  for (const auto& t : prog.tangles) {
    TLElement box = t.start_infinity ? kit.infinity() : kit.zero();
    for (const auto& op : t.ops) {
      std::int64_t cnt = op.count < 0 ? -op.count : op.count;
      const TLElement& c = kit.crossing((op.count > 0) != opt.mirror);
      for (std::int64_t r = 0; r < cnt; ++r)
        box = op.dir == TwistDir::Horizontal ? kit.hsum(box, c) : kit.vstack(box, c);
    }
    boxes.push_back(std::move(box));
  }
  if (boxes.empty()) throw std::invalid_argument("empty knot program");
  TLElement total;
  if (opt.right_to_left) {
    total = boxes.back();
    for (std::size_t i = boxes.size() - 1; i-- > 0;) total = kit.hsum(boxes[i], total);
  } else {
    total = boxes.front();
    for (std::size_t i = 1; i < boxes.size(); ++i) total = kit.hsum(total, boxes[i]);
  }
  TLElement proj = tl_tensor(jw.F, tl_identity(kit.n()));
  return kit.numerator(proj * total);
}

/// J_{K,N}(v) for N = color; N = 1 gives 1.
inline LaurentPoly colored_jones(const KnotProgram& prog, int color, const JonesOptions& opt = {}) {
  if (color < 1) throw std::invalid_argument("color must be >= 1");
  if (color > opt.max_color)
    throw ColorTooLarge("color " + std::to_string(color) + " exceeds cap " + std::to_string(opt.max_color));
  Diagram d = build_diagram(prog, opt.mirror);
  const int w = writhe(d);
  if (color == 1) return 1;
  if (jones_work_estimate(prog, color) > opt.max_work)
    throw BudgetExceeded("estimated work " + std::to_string(jones_work_estimate(prog, color)) + " exceeds budget " +
                         std::to_string(opt.max_work));
  const int n = color - 1;
  CabledKit kit(n);
  JWProjector jw = jw_projector(n);
  LaurentPoly num = cabled_bracket_numerator(prog, kit, jw, opt);
  auto bracket = num.divided_by(jw.d);
  if (!bracket) throw std::logic_error("cabled bracket is not divisible by the projector denominator");
  const int e = w * (n * n + 2 * n);
  const bool negate = ((std::int64_t(n) * e + n) % 2) != 0;
  LaurentPoly j = bracket->shifted(e);
  return negate ? -j : j;
}

inline LaurentPoly colored_jones(const KnotSpec& k, int color, const JonesOptions& opt = {}) {
  return colored_jones(standard_program(k), color, opt);
}

/// (v^{2N} - v^{-2N}) / (v^2 - v^{-2}).
inline LaurentPoly unknot_jones(int color) {
  auto q = (v_pow(2 * color) - v_pow(-2 * color)).divided_by(v_pow(2) - v_pow(-2));
  return *q;
}

/// Kauffman bracket by summing over all 2^c states of the PD diagram, empty diagram = 1.
inline LaurentPoly bracket_state_sum(const Diagram& d) {
  const int c = int(d.crossings.size());
  if (c > 24) throw BudgetExceeded("state sum limited to 24 crossings");
  const int nports = 4 * c;
  LaurentPoly total;
  std::vector<int> smooth(static_cast<std::size_t>(nports));
  std::vector<char> seen(static_cast<std::size_t>(nports));
  for (std::uint32_t state = 0; state < (1u << c); ++state) {
    int a_count = 0;
    for (int x = 0; x < c; ++x) {
      bool use_a = (state >> x) & 1u;
      a_count += use_a;
      bool vertical = use_a == d.crossings[std::size_t(x)].over_swne;
      int b = 4 * x;
      if (vertical) {
        smooth[std::size_t(b + 0)] = b + 3; smooth[std::size_t(b + 3)] = b + 0;
        smooth[std::size_t(b + 1)] = b + 2; smooth[std::size_t(b + 2)] = b + 1;
      } else {
        smooth[std::size_t(b + 0)] = b + 1; smooth[std::size_t(b + 1)] = b + 0;
        smooth[std::size_t(b + 2)] = b + 3; smooth[std::size_t(b + 3)] = b + 2;
      }
    }
    std::fill(seen.begin(), seen.end(), 0);
    int loops = d.free_loops;
    for (int s = 0; s < nports; ++s) {
      if (seen[std::size_t(s)]) continue;
      ++loops;
      int cur = s;
      while (!seen[std::size_t(cur)]) {
        seen[std::size_t(cur)] = 1;
        int o = smooth[std::size_t(cur)];
        seen[std::size_t(o)] = 1;
        cur = d.partner[std::size_t(o)];
      }
    }
    const int b_count = c - a_count;
    total += detail::loop_power(loops).shifted(b_count - a_count);
  }
  return total;
}

/// Color-2 value from the state sum, for comparison with the cabled evaluation.
inline LaurentPoly jones2_state_sum(const Diagram& d) {
  const int e = writhe(d) * 3;
  LaurentPoly j = bracket_state_sum(d).shifted(e);
  return (e + 1) % 2 ? -j : j;
}

}  // namespace slopelab
