/**
 * @file ho.hpp
 * @brief Edge-path systems for Montesinos knots and the two candidate surfaces
 * S(M, x*) and R, with twist numbers, boundary slopes and Euler characteristics.
 *
 * An edge-path is stored as the list of Farey vertices it visits, starting at
 * the tangle fraction.  If final_fraction = (K, M) is present, the path stops
 * on its last edge at the point K/M <v_{k-1}> + (M-K)/M <v_k>.
 */
#pragma once

#include "slopelab/cfe.hpp"
#include "slopelab/degree.hpp"
#include "slopelab/diagram.hpp"
#include "slopelab/knot.hpp"
#include "slopelab/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace slopelab {

class AdjacencyViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};
class NoSolution : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};
class UnsupportedEdgepathShape : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};
class ConditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct FareyVertex {
  std::int64_t p = 0, q = 1;  // q >= 0, q = 0 is infinity

  static FareyVertex from(const Rational& r) { return {to_int64(r.get_num()), to_int64(r.get_den())}; }
  static FareyVertex infinity() { return {1, 0}; }
  bool is_infinity() const { return q == 0; }
  Rational value() const {
    if (q == 0) throw std::domain_error("infinity has no rational value");
    return make_rational(p, q);
  }
  std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }
  bool operator==(const FareyVertex& o) const { return p == o.p && q == o.q; }
  bool operator!=(const FareyVertex& o) const { return !(*this == o); }
};

inline bool farey_adjacent(const FareyVertex& a, const FareyVertex& b) {
  Integer det = Integer(static_cast<long>(a.p)) * b.q - Integer(static_cast<long>(b.p)) * a.q;
  return det == 1 || det == -1;
}

struct FinalFraction {
  std::int64_t K = 0, M = 1;
};

struct EdgePath {
  std::vector<FareyVertex> vertices;
  std::optional<FinalFraction> final_fraction;

  bool constant() const {
    for (std::size_t i = 1; i < vertices.size(); ++i)
      if (vertices[i] != vertices[0]) return false;
    return true;
  }
  std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

inline void check_edgepath(const EdgePath& e) {
  if (e.vertices.empty()) throw AdjacencyViolation("edge-path without vertices");
  for (std::size_t i = 1; i < e.vertices.size(); ++i) {
    const auto& a = e.vertices[i - 1];
    const auto& b = e.vertices[i];
    if (a != b && !farey_adjacent(a, b))
      throw AdjacencyViolation("vertices " + a.str() + " and " + b.str() + " are not Farey neighbours");
  }
  if (e.final_fraction) {
    const auto& f = *e.final_fraction;
    if (f.M <= 0 || f.K < 0 || f.K > f.M) throw AdjacencyViolation("final fraction needs 0 <= K <= M, M > 0");
    if (e.vertices.size() < 2) throw AdjacencyViolation("fractional final edge needs two vertices");
  }
}

/// Partial sums [[b0..bk]], [[b0..b_{k-1}]], ..., [[b0]], then infinity.
inline EdgePath edgepath_from_negative_cfe(const ContinuedFraction& cf) {
  if (cf.flavor != CfFlavor::Negative) throw std::invalid_argument("expected a negative continued fraction");
  for (std::size_t j = 1; j < cf.terms.size(); ++j)
    if (cf.terms[j] > -2 && cf.terms[j] < 2) throw AdjacencyViolation("terms after the first need |b_j| >= 2");
  EdgePath e;
  for (std::size_t len = cf.terms.size(); len >= 1; --len) {
    ContinuedFraction head = cf;
    head.terms.resize(len);
    e.vertices.push_back(FareyVertex::from(eval_cfe(head)));
  }
  e.vertices.push_back(FareyVertex::infinity());
  check_edgepath(e);
  return e;
}

/// Cuts the path after its first visit to `end`.
inline EdgePath truncate_at(const EdgePath& e, const FareyVertex& end, std::optional<FinalFraction> frac = {}) {
  auto it = std::find(e.vertices.begin(), e.vertices.end(), end);
  if (it == e.vertices.end()) throw UnsupportedEdgepathShape("vertex " + end.str() + " is not on the edge-path");
  EdgePath out;
  out.vertices.assign(e.vertices.begin(), it + 1);
  out.final_fraction = frac;
  check_edgepath(out);
  return out;
}

struct CurveCoords {
  Integer A, B, C;
};

/// Coordinates of the endpoint of a path on a surface with M sheets.
inline CurveCoords endpoint_coords(const EdgePath& e, std::int64_t M) {
  const std::size_t n = e.vertices.size();
  if (n == 1 || e.constant()) {
    const auto& v = e.vertices.back();
    if (v.is_infinity()) throw UnsupportedEdgepathShape("edge-path ends at infinity");
    Integer m(static_cast<long>(M));
    return {m, m * (v.q - 1), m * v.p};
  }
  const auto& a = e.vertices[n - 2];
  const auto& b = e.vertices[n - 1];
  if (a.is_infinity() || b.is_infinity()) throw UnsupportedEdgepathShape("final edge touches infinity");
  std::int64_t K = 0;
  if (e.final_fraction) {
    if (e.final_fraction->M != M) throw ConditionViolation("sheet count differs between edge-paths");
    K = e.final_fraction->K;
  }
  Integer k(static_cast<long>(K)), mk(static_cast<long>(M - K));
  if (a == b) return {mk, mk * (a.q - 1) + k * a.q, Integer(static_cast<long>(M)) * a.p};
  return {k + mk, k * (a.q - 1) + mk * (b.q - 1), k * a.p + mk * b.p};
}

/// r-value of the final edge: 0 for constant or vertical edges, |q - s| otherwise.
inline std::int64_t final_rvalue(const EdgePath& e) {
  if (e.vertices.size() < 2) return 0;
  const auto& a = e.vertices[e.vertices.size() - 2];
  const auto& b = e.vertices.back();
  if (a == b || a.is_infinity() || b.is_infinity()) return 0;
  return a.q > b.q ? a.q - b.q : b.q - a.q;
}

enum class SurfaceKind { SStar, Reference, Custom };

inline std::string kind_name(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::SStar: return "SStar";
    case SurfaceKind::Reference: return "Reference";
    case SurfaceKind::Custom: return "Custom";
  }
  return "?";
}

struct CandidateSurface {
  SurfaceKind kind = SurfaceKind::Custom;
  std::vector<EdgePath> edgepaths;
  std::int64_t M = 1;
  std::vector<std::int64_t> K;
  std::int64_t q_negative = 0;  // q of the K0 equation, 0 when unused
  std::vector<std::int64_t> rvalues;
  std::vector<CurveCoords> coords;
};

/// Fills coordinates and r-values, then checks A_i = A_j, B_i = B_j and sum C_i = 0.
inline void finish_surface(CandidateSurface& s) {
  s.coords.clear();
  s.rvalues.clear();
  Integer csum = 0;
  for (const auto& e : s.edgepaths) {
    check_edgepath(e);
    s.coords.push_back(endpoint_coords(e, s.M));
    s.rvalues.push_back(final_rvalue(e));
    csum += s.coords.back().C;
  }
  for (const auto& c : s.coords)
    if (c.A != s.coords[0].A || c.B != s.coords[0].B)
      throw ConditionViolation("A or B coordinates disagree between tangles");
  if (csum != 0) throw ConditionViolation("C coordinates do not sum to zero");
}

struct SStarVector {
  std::vector<Rational> x;
  std::int64_t M = 1;
  std::vector<std::int64_t> K;  // K_1..K_m
};

inline SStarVector sstar_vector(const IntVector& q) {
  if (q.size() < 2) throw std::invalid_argument("need at least one positive tangle");
  SStarVector out;
  Rational inv = 0;
  for (std::size_t i = 1; i < q.size(); ++i) {
    if (q[i] <= 1) throw HypothesisViolation("x* needs q_i > 1");
    inv += make_rational(1, q[i] - 1);
  }
  Integer M = 1;
  for (std::size_t i = 1; i < q.size(); ++i) {
    out.x.push_back(make_rational(1, q[i] - 1) / inv);
    M = lcm(M, out.x.back().get_den());
  }
  out.M = to_int64(M);
  for (const auto& xi : out.x) out.K.push_back(to_int64(Rational(xi * M).get_num()));
  return out;
}

namespace detail {

struct AssociatedData {
  IntVector q;
  std::vector<Rational> r;
};

inline AssociatedData associated_of(const KnotSpec& k) {
  if (auto p = std::get_if<PretzelKnot>(&k)) return {p->q, as_montesinos(*p).fractions};
  const auto& m = std::get<MontesinosKnot>(k);
  return {associated_pretzel(m).q, m.fractions};
}

}  // namespace detail

/// S(M, x*): gamma_0 descends the -1/j ladder to a fractional edge at -1/q,
/// gamma_i runs from r_i to a fractional edge <1/q_i> -> <0>.
inline CandidateSurface build_sstar_surface(const KnotSpec& k) {
  auto data = detail::associated_of(k);
  const IntVector& q = data.q;
  SAndS1 ss = s_and_s1(q);
  if (ss.s > 0) throw NoSolution("s(q) > 0: no surface S(M, x*)");
  if (q[0] >= -1) throw HypothesisViolation("need q0 < -1");
  SStarVector sv = sstar_vector(q);
  CandidateSurface s;
  s.kind = SurfaceKind::SStar;
  s.M = sv.M;
  const std::int64_t B = sv.K[0] * (q[1] - 1);
  std::int64_t K0 = -1, qq = 0;
  for (std::int64_t c = 2; c <= -q[0]; ++c) {
    std::int64_t k0 = B - sv.M * (c - 2);
    if (k0 >= 0 && k0 <= sv.M) {
      K0 = k0;
      qq = c;
      break;
    }
  }
  if (K0 < 0) throw NoSolution("no (q, K0) with 0 <= K0 <= M");
  s.q_negative = qq;
  s.K.push_back(K0);
  s.K.insert(s.K.end(), sv.K.begin(), sv.K.end());

  EdgePath g0 = edgepath_from_negative_cfe(negative_cfe_descending(data.r[0]));
  EdgePath path0 = truncate_at(g0, FareyVertex{-1, qq - 1}, FinalFraction{K0, s.M});
  if (path0.vertices[path0.vertices.size() - 2] != FareyVertex{-1, qq})
    throw UnsupportedEdgepathShape("gamma_0 does not pass through -1/q");
  s.edgepaths.push_back(path0);
  for (std::size_t i = 1; i < data.r.size(); ++i) {
    EdgePath gi = edgepath_from_negative_cfe(negative_cfe_descending(data.r[i]));
    EdgePath pi = truncate_at(gi, FareyVertex{0, 1}, FinalFraction{s.K[i], s.M});
    if (pi.vertices[pi.vertices.size() - 2] != FareyVertex{1, q[i]})
      throw UnsupportedEdgepathShape("gamma_i does not pass through 1/q_i");
    s.edgepaths.push_back(pi);
  }
  finish_surface(s);
  return s;
}

/// R: one sheet, every path ends at <0>.  gamma_0 climbs to 0 through 1/r0[1].
inline CandidateSurface build_reference_surface(const KnotSpec& k) {
  auto data = detail::associated_of(k);
  CandidateSurface s;
  s.kind = SurfaceKind::Reference;
  s.M = 1;
  s.K.assign(data.r.size(), 0);
  if (!(data.r[0] < 0 && data.r[0] > -1)) throw HypothesisViolation("need -1 < r0 < 0");
  EdgePath g0 = edgepath_from_negative_cfe(negative_cfe_through_zero(data.r[0]));
  s.edgepaths.push_back(truncate_at(g0, FareyVertex{0, 1}));
  for (std::size_t i = 1; i < data.r.size(); ++i) {
    if (!(data.r[i] > 0 && data.r[i] < 1)) throw HypothesisViolation("need 0 < r_i < 1");
    EdgePath gi = edgepath_from_negative_cfe(negative_cfe_descending(data.r[i]));
    s.edgepaths.push_back(truncate_at(gi, FareyVertex{0, 1}));
  }
  finish_surface(s);
  return s;
}

/// 2 * sum (e^- - e^+), a fractional final edge counting (M - K)/M.
inline Rational twist_number(const CandidateSurface& s) {
  Rational tw = 0;
  for (const auto& e : s.edgepaths) {
    const std::size_t n = e.vertices.size();
    for (std::size_t i = 1; i < n; ++i) {
      const auto& a = e.vertices[i - 1];
      const auto& b = e.vertices[i];
      if (a == b) continue;
      if (a.is_infinity() || b.is_infinity()) throw UnsupportedEdgepathShape("edge through infinity");
      Rational weight = 1;
      if (i == n - 1 && e.final_fraction) weight = make_rational(e.final_fraction->M - e.final_fraction->K, e.final_fraction->M);
      if (b.value() < a.value()) tw += weight;
      else tw -= weight;
    }
  }
  return 2 * tw;
}

inline Rational boundary_slope(const CandidateSurface& s, const CandidateSurface& seifert) {
  return twist_number(s) - twist_number(seifert);
}

/// Same as boundary_slope, but against a reference surface of known slope.
inline Rational boundary_slope(const CandidateSurface& s, const CandidateSurface& ref, const Rational& ref_slope) {
  return twist_number(s) - twist_number(ref) + ref_slope;
}

/// 2 chi / M by cutting the surface along the Conway spheres.
inline Rational euler_over_sheets(const CandidateSurface& s) {
  if (s.coords.size() != s.edgepaths.size()) throw std::logic_error("surface not finished");
  const std::int64_t m = std::int64_t(s.edgepaths.size()) - 1;
  Integer M(static_cast<long>(s.M));
  Integer chi = 2 * M * (m + 1);
  for (const auto& e : s.edgepaths) {
    if (e.constant()) throw UnsupportedEdgepathShape("constant edge-path");
    for (const auto& v : e.vertices)
      if (v.is_infinity()) throw UnsupportedEdgepathShape("edge-path through infinity");
    std::int64_t full = std::int64_t(e.edge_count());
    if (e.final_fraction) {
      --full;
      chi -= M - e.final_fraction->K;
    }
    chi -= M * full;
  }
  const Integer& B = s.coords[0].B;
  chi -= m * (2 * M + B);
  chi += B;
  return make_rational(Integer(2 * chi), M);
}

enum class Compressibility { Incompressible, Inconclusive };

inline std::string verdict_name(Compressibility c) {
  return c == Compressibility::Incompressible ? "Incompressible" : "Inconclusive";
}

namespace detail {

/// (1,...,1,x) or (1,...,1,2,x) read in one direction from some start.
inline bool excluded_linear(const std::vector<std::int64_t>& r) {
  const std::size_t n = r.size();
  bool ones = std::all_of(r.begin(), r.end() - 1, [](std::int64_t x) { return x == 1; });
  if (ones) return true;
  if (n >= 2 && r[n - 2] == 2 && std::all_of(r.begin(), r.end() - 2, [](std::int64_t x) { return x == 1; }))
    return true;
  return false;
}

}  // namespace detail

/// Excluded cycles are checked under every rotation and reversal.
inline Compressibility incompressibility_check(const std::vector<std::int64_t>& cycle) {
  if (cycle.empty()) throw std::invalid_argument("empty r-value cycle");
  if (std::find(cycle.begin(), cycle.end(), 0) != cycle.end()) return Compressibility::Inconclusive;
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<std::int64_t> c = cycle;
    if (dir) std::reverse(c.begin(), c.end());
    for (std::size_t rot = 0; rot < c.size(); ++rot) {
      if (detail::excluded_linear(c)) return Compressibility::Inconclusive;
      std::rotate(c.begin(), c.begin() + 1, c.end());
    }
  }
  return Compressibility::Incompressible;
}

inline Compressibility incompressibility_check(const CandidateSurface& s) { return incompressibility_check(s.rvalues); }

/// Kauffman state of the reference surface on the standard diagram: A on the
/// twist region of r0[1] (the whole first tangle when r0 = 1/q0), B elsewhere.
inline std::vector<bool> reference_state(const KnotSpec& k) {
  KnotProgram prog = standard_program(k);
  Diagram d = build_diagram(prog);
  bool whole = true;
  int region_op = -1;
  if (auto m = std::get_if<MontesinosKnot>(&k)) {
    AssociatedPretzelData ap = associated_pretzel(*m);
    whole = m->fractions[0] == make_rational(1, ap.q[0]);
    // ops run a_l, a_{l-1}, ..., a_1; a_1 is the last vertical op
    region_op = int(prog.tangles[0].ops.size()) - 1;
  }
  std::vector<bool> state(d.crossings.size(), false);
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const auto& x = d.crossings[c];
    if (x.tangle != 0) continue;
    state[c] = whole || x.op == region_op;
  }
  return state;
}

inline Rational reference_slope(const KnotSpec& k) {
  Diagram d = build_diagram(standard_program(k));
  return Rational(state_surface_slope(d, reference_state(k)));
}

}  // namespace slopelab
