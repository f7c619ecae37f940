/**
 * @file diagram.hpp
 * @brief Standard diagrams of Montesinos knots as planar diagram codes.
 *
 * A diagram is described first by a KnotProgram: a row of rational tangles,
 * each grown from the 0 (or infinity) tangle by horizontal and vertical twist
 * runs, then summed left to right and closed by the numerator closure.  The
 * program is interpreted twice: here into a PD code, and by the skein oracle
 * into Temperley-Lieb elements.  Both walk crossings in the same order.
 *
 * Crossing slots are numbered counterclockwise: 0 = SW, 1 = SE, 2 = NE, 3 = NW.
 * A twist with positive count has its over strand running SW-NE.
 */
#pragma once

#include "slopelab/cfe.hpp"
#include "slopelab/knot.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <variant>
#include <vector>

namespace slopelab {

enum class TwistDir { Horizontal, Vertical };

struct TwistOp {
  TwistDir dir;
  std::int64_t count;  // signed number of crossings
};

struct TangleProgram {
  bool start_infinity = false;  // grow from the infinity tangle instead of 0
  std::vector<TwistOp> ops;
};

struct KnotProgram {
  std::vector<TangleProgram> tangles;  // summed left to right, numerator closure

  std::int64_t crossing_count() const {
    std::int64_t c = 0;
    for (const auto& t : tangles)
      for (const auto& op : t.ops) c += op.count < 0 ? -op.count : op.count;
    return c;
  }
};

/// Tangle for an even-length expansion [a0, a1, ..., al]:
/// a_l horizontal twists on the 0 tangle, then a_{l-1} vertical, ..., a_1 vertical, a_0 horizontal.
inline TangleProgram tangle_program(const ContinuedFraction& cf) {
  if (cf.flavor == CfFlavor::Negative) throw std::invalid_argument("tangle_program expects a positive expansion");
  TangleProgram t;
  const int l = cf.length();
  for (int j = l; j >= 0; --j) {
    TwistDir d = ((l - j) % 2 == 0) ? TwistDir::Horizontal : TwistDir::Vertical;
    if (cf[std::size_t(j)] != 0) t.ops.push_back({d, cf[std::size_t(j)]});
  }
  return t;
}

/// Vertical tangle 1/q: one horizontal crossing followed by q -/+ 1 vertical ones.
inline TangleProgram pretzel_tangle(std::int64_t q) {
  if (q == 0) throw std::invalid_argument("pretzel entries must be nonzero");
  std::int64_t s = q > 0 ? 1 : -1;
  TangleProgram t;
  t.ops.push_back({TwistDir::Horizontal, s});
  if (q - s != 0) t.ops.push_back({TwistDir::Vertical, q - s});
  return t;
}

inline KnotProgram standard_program(const PretzelKnot& p) {
  KnotProgram k;
  for (auto q : p.q) k.tangles.push_back(pretzel_tangle(q));
  return k;
}

inline KnotProgram standard_program(const MontesinosKnot& m) {
  KnotProgram k;
  for (const auto& r : m.fractions) {
    ContinuedFraction cf = even_length_cfe(r);
    if (!cf.even_ok) throw KnotInputError("integral tangle has no standard rational tangle diagram");
    k.tangles.push_back(tangle_program(cf));
  }
  return k;
}

inline KnotProgram standard_program(const KnotSpec& k) {
  return std::visit([](const auto& x) { return standard_program(x); }, k);
}

class MultiComponent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Crossing {
  std::array<int, 4> edge{};      // edge label at each slot
  std::array<bool, 4> incoming{}; // orientation: slot entered by its strand
  bool over_swne = true;
  int sign = 0;
  int tangle = -1;  // provenance in the program
  int op = -1;
};

struct Diagram {
  std::vector<Crossing> crossings;
  int edges = 0;
  int components = 0;  // includes crossingless loops
  int free_loops = 0;
  /// partner[4c + s] = 4c' + s' for the wire leaving crossing c at slot s.
  std::vector<int> partner;

  std::size_t size() const { return crossings.size(); }
};

namespace detail {

class PortGraph {
 public:
  struct Box { int nw, ne, sw, se; };

  Box zero() {
    Box b{fresh(), fresh(), fresh(), fresh()};
    link(b.nw, b.ne);
    link(b.sw, b.se);
    return b;
  }
  Box infinity() {
    Box b{fresh(), fresh(), fresh(), fresh()};
    link(b.nw, b.sw);
    link(b.ne, b.se);
    return b;
  }
  Box crossing(int c) {
    Box b{fresh(), fresh(), fresh(), fresh()};
    link(b.sw, 4 * c + 0);
    link(b.se, 4 * c + 1);
    link(b.ne, 4 * c + 2);
    link(b.nw, 4 * c + 3);
    return b;
  }
  Box hsum(const Box& a, const Box& b) {
    splice(a.ne, b.nw);
    splice(a.se, b.sw);
    return {a.nw, b.ne, a.sw, b.se};
  }
  Box vstack(const Box& a, const Box& b) {
    splice(a.sw, b.nw);
    splice(a.se, b.ne);
    return {a.nw, a.ne, b.sw, b.se};
  }
  void numerator(const Box& a) {
    splice(a.nw, a.ne);
    splice(a.sw, a.se);
  }

  int loops = 0;
  std::unordered_map<int, int> partner;

 private:
  static constexpr int kBoundaryBase = 1 << 29;
  int next_ = kBoundaryBase;
  int fresh() { return next_++; }
  void link(int a, int b) { partner[a] = b; partner[b] = a; }
  void splice(int b1, int b2) {
    int p = partner.at(b1), q = partner.at(b2);
    partner.erase(b1);
    partner.erase(b2);
    if (p == b2) { ++loops; return; }
    link(p, q);
  }
};

inline std::array<int, 2> slot_pos(int s) {
  static const std::array<std::array<int, 2>, 4> pos{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}};
  return pos[std::size_t(s)];
}

}  // namespace detail

/// Interprets the program as a PD diagram.  `mirror` flips every crossing.
inline Diagram build_diagram(const KnotProgram& prog, bool mirror = false) {
  detail::PortGraph g;
  Diagram d;
  std::vector<detail::PortGraph::Box> boxes;
  for (std::size_t ti = 0; ti < prog.tangles.size(); ++ti) {
    const auto& t = prog.tangles[ti];
    auto box = t.start_infinity ? g.infinity() : g.zero();
    for (std::size_t oi = 0; oi < t.ops.size(); ++oi) {
      const auto& op = t.ops[oi];
      std::int64_t n = op.count < 0 ? -op.count : op.count;
      for (std::int64_t r = 0; r < n; ++r) {
        int c = int(d.crossings.size());
        Crossing x;
        x.over_swne = (op.count > 0) != mirror;
        x.tangle = int(ti);
        x.op = int(oi);
        d.crossings.push_back(x);
        auto cb = g.crossing(c);
        box = (op.dir == TwistDir::Horizontal) ? g.hsum(box, cb) : g.vstack(box, cb);
      }
    }
    boxes.push_back(box);
  }
  if (boxes.empty()) throw std::invalid_argument("empty knot program");
  auto total = boxes[0];
  for (std::size_t i = 1; i < boxes.size(); ++i) total = g.hsum(total, boxes[i]);
  g.numerator(total);

  const int nports = 4 * int(d.crossings.size());
  d.partner.assign(std::size_t(nports), -1);
  for (const auto& [a, b] : g.partner) {
    if (a >= nports || b >= nports) throw std::logic_error("dangling boundary after closure");
    d.partner[std::size_t(a)] = b;
  }
  d.free_loops = g.loops;

  // Orient by traversal and label wires in traversal order.
  std::vector<int> wire_label(std::size_t(nports), 0);
  int label = 0, comps = 0;
  for (int start = 0; start < nports; ++start) {
    if (wire_label[std::size_t(start)] != 0) continue;
    ++comps;
    int out = start;  // port we leave through
    do {
      int in = d.partner[std::size_t(out)];
      ++label;
      wire_label[std::size_t(out)] = label;
      wire_label[std::size_t(in)] = label;
      d.crossings[std::size_t(in / 4)].incoming[std::size_t(in % 4)] = true;
      out = 4 * (in / 4) + (in % 4 + 2) % 4;
    } while (out != start);
  }
  d.edges = label;
  d.components = comps + d.free_loops;
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    auto& x = d.crossings[c];
    for (int s = 0; s < 4; ++s) x.edge[std::size_t(s)] = wire_label[4 * c + std::size_t(s)];
    int over_in = x.over_swne ? (x.incoming[0] ? 0 : 2) : (x.incoming[1] ? 1 : 3);
    int under_in = x.over_swne ? (x.incoming[1] ? 1 : 3) : (x.incoming[0] ? 0 : 2);
    auto dir = [](int s) {
      auto a = detail::slot_pos(s), b = detail::slot_pos((s + 2) % 4);
      return std::array<int, 2>{b[0] - a[0], b[1] - a[1]};
    };
    auto o = dir(over_in), u = dir(under_in);
    int cross = o[0] * u[1] - o[1] * u[0];
    x.sign = cross > 0 ? 1 : -1;
  }
  return d;
}

inline Diagram build_standard_diagram(const KnotSpec& k) { return build_diagram(standard_program(k)); }

inline int writhe(const Diagram& d) {
  if (d.components != 1) throw MultiComponent("writhe is defined here for knots only");
  int w = 0;
  for (const auto& c : d.crossings) w += c.sign;
  return w;
}

/// PD tuples, each starting at the incoming under-edge and running counterclockwise.
inline std::vector<std::array<int, 4>> pd_code(const Diagram& d) {
  std::vector<std::array<int, 4>> out;
  for (const auto& x : d.crossings) {
    int u = x.over_swne ? (x.incoming[1] ? 1 : 3) : (x.incoming[0] ? 0 : 2);
    out.push_back({x.edge[std::size_t(u)], x.edge[std::size_t((u + 1) % 4)], x.edge[std::size_t((u + 2) % 4)],
                   x.edge[std::size_t((u + 3) % 4)]});
  }
  return out;
}

/// Faces of the 4-valent diagram graph, traced with the counterclockwise slot order.
inline int face_count(const Diagram& d) {
  const int nports = 4 * int(d.crossings.size());
  std::vector<bool> used(std::size_t(nports), false);
  int faces = 0;
  for (int s = 0; s < nports; ++s) {
    if (used[std::size_t(s)]) continue;
    ++faces;
    int cur = s;
    while (!used[std::size_t(cur)]) {
      used[std::size_t(cur)] = true;
      int arr = d.partner[std::size_t(cur)];
      cur = 4 * (arr / 4) + (arr % 4 + 3) % 4;  // turn to the clockwise neighbour
    }
  }
  return faces;
}

/// Boundary slope of the state surface of a Kauffman state (true = A-smoothing).
/// Each crossing smoothed against its orientation contributes twice its sign.
inline int state_surface_slope(const Diagram& d, const std::vector<bool>& use_a) {
  if (use_a.size() != d.crossings.size()) throw std::invalid_argument("state size mismatch");
  int slope = 0;
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const auto& x = d.crossings[c];
    // Oriented smoothing joins an incoming slot to the neighbouring outgoing one.
    // It is "vertical" (SW-NW, SE-NE) when SW and NW carry opposite directions.
    bool oriented_vertical = x.incoming[0] != x.incoming[3];
    bool a_vertical = x.over_swne;
    bool chosen_vertical = use_a[c] ? a_vertical : !a_vertical;
    if (chosen_vertical != oriented_vertical) slope += 2 * x.sign;
  }
  return slope;
}

}  // namespace slopelab
