/**
 * @file verify.hpp
 * @brief Per-knot verification reports: degree side, surface side and the
 * skein oracle, serialized as deterministic JSON.
 */
#pragma once

#include "slopelab/degree.hpp"
#include "slopelab/ho.hpp"
#include "slopelab/jones.hpp"
#include "slopelab/knot.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace slopelab {

inline constexpr const char* kReportSchema = "slopelab.verify/1";
inline constexpr const char* kScanSchema = "slopelab.scan/1";

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return to_string(r); }
inline Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

inline Json to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = to_json(c);
  return j;
}

/// Rotates a pretzel vector so its only negative entry comes first.
inline PretzelKnot normalize_pretzel(PretzelKnot p) {
  std::vector<Rational> r;
  for (auto x : p.q) r.push_back(make_rational(1, x));
  if (classify(r) != LinkType::Knot) throw NotAKnot("pretzel vector describes a link");
  auto neg = std::count_if(p.q.begin(), p.q.end(), [](std::int64_t x) { return x < 0; });
  if (neg == 0) throw NoNegativeTangle("pretzel vector has no negative entry");
  if (neg > 1) throw MoreThanOneNegativeTangle("pretzel vector has more than one negative entry");
  auto it = std::find_if(p.q.begin(), p.q.end(), [](std::int64_t x) { return x < 0; });
  std::rotate(p.q.begin(), it, p.q.end());
  return p;
}

inline KnotSpec normalize_spec(const KnotSpec& k) {
  if (auto p = std::get_if<PretzelKnot>(&k)) return normalize_pretzel(*p);
  return normalize_reduced(std::get<MontesinosKnot>(k).fractions);
}

struct VerifyOptions {
  int oracle_n = -1;  // largest n (color n + 1) for the oracle; -1 picks by crossing count
  bool force = false;
  JonesOptions jones;
};

struct OracleColor {
  int color = 0;
  bool computed = false;
  std::string skipped;
  std::int64_t measured = 0;   // deg J_{K,color}
  Integer predicted;           // exact degree from the tight-state maximum
  Rational constant;           // measured - js color^2 - jx color
  bool eval_at_one_ok = false; // J(1) = color
  bool exact_match = false;
};

struct SurfaceSide {
  bool built = false;
  std::string error;
  CandidateSurface surface;
  CandidateSurface reference;
  Rational tw, tw_reference, bs_reference, bs, two_chi_over_sheets;
  Compressibility verdict = Compressibility::Inconclusive;
};

struct VerificationReport {
  std::string input;
  std::string normalized;
  bool montesinos = false;
  bool strict_ok = false;
  bool forced = false;
  IntVector q;
  DegreeQuadratic degree;
  std::optional<DegreeQuadratic> pretzel_degree;  // associated pretzel, Montesinos only
  std::optional<MontesinosCorrections> corrections;
  SurfaceSide surface;
  std::vector<OracleColor> oracle;
  bool js_equals_bs = false;
  bool jx_equals_chi = false;
  bool oracle_match = true;
  bool constant_consistent = true;
  std::string verdict;  // PASS, FAIL or INCONCLUSIVE
};

inline int default_oracle_n(const KnotSpec& k) { return standard_program(k).crossing_count() <= 30 ? 2 : 1; }

inline VerificationReport verify(const std::string& spec_text, const VerifyOptions& opt = {}) {
  VerificationReport rep;
  rep.input = spec_text;
  rep.forced = opt.force;
  KnotSpec k = normalize_spec(parse_knot_spec(spec_text));
  rep.normalized = spec_string(k);
  rep.montesinos = std::holds_alternative<MontesinosKnot>(k);

  if (rep.montesinos) {
    MontesinosDegree md = montesinos_js_jx(std::get<MontesinosKnot>(k), !opt.force);
    rep.q = md.q;
    rep.degree = md.knot;
    rep.pretzel_degree = md.pretzel;
    rep.corrections = md.corr;
  } else {
    rep.q = std::get<PretzelKnot>(k).q;
    rep.degree = pretzel_js_jx(rep.q, !opt.force);
  }
  rep.strict_ok = rep.degree.strict_ok;

  auto& ss = rep.surface;
  try {
    ss.reference = build_reference_surface(k);
    ss.tw_reference = twist_number(ss.reference);
    ss.bs_reference = reference_slope(k);
    if (rep.degree.surface_hint == SurfaceHint::SStar) {
      ss.surface = build_sstar_surface(k);
      ss.tw = twist_number(ss.surface);
      ss.bs = boundary_slope(ss.surface, ss.reference, ss.bs_reference);
    } else {
      ss.surface = ss.reference;
      ss.tw = ss.tw_reference;
      ss.bs = ss.bs_reference;
    }
    ss.two_chi_over_sheets = euler_over_sheets(ss.surface);
    ss.verdict = incompressibility_check(ss.surface);
    ss.built = true;
  } catch (const std::exception& e) {
    ss.error = e.what();
  }
  rep.js_equals_bs = ss.built && ss.bs == rep.degree.js;
  rep.jx_equals_chi = ss.built && ss.two_chi_over_sheets == rep.degree.jx;

  const int top = opt.oracle_n >= 0 ? opt.oracle_n : default_oracle_n(k);
  JonesOptions jo = opt.jones;
  jo.max_color = std::max(jo.max_color, top + 1);
  std::optional<Rational> first_constant;
  for (int n = 1; n <= top; ++n) {
    OracleColor oc;
    oc.color = n + 1;
    try {
      oc.predicted = predicted_degree(k, n);
      LaurentPoly j = colored_jones(k, oc.color, jo);
      oc.computed = true;
      oc.measured = j.degree().value();
      oc.eval_at_one_ok = j.eval_at_one() == oc.color;
      oc.exact_match = oc.eval_at_one_ok && Integer(static_cast<long>(oc.measured)) == oc.predicted;
      Rational N(static_cast<long>(oc.color));
      oc.constant = Rational(static_cast<long>(oc.measured)) - rep.degree.js * N * N - rep.degree.jx * N;
      if (!first_constant) first_constant = oc.constant;
      else if (*first_constant != oc.constant) rep.constant_consistent = false;
      if (!oc.exact_match) rep.oracle_match = false;
    } catch (const BudgetExceeded& e) {
      oc.skipped = e.what();
    } catch (const ColorTooLarge& e) {
      oc.skipped = e.what();
    }
    rep.oracle.push_back(oc);
  }

  if (!rep.js_equals_bs || !rep.jx_equals_chi || !rep.oracle_match) rep.verdict = "FAIL";
  else if (ss.verdict == Compressibility::Inconclusive) rep.verdict = "INCONCLUSIVE";
  else rep.verdict = "PASS";
  return rep;
}

inline Json to_json(const EdgePath& e) {
  Json j;
  Json v = Json::array();
  for (const auto& x : e.vertices) v.push_back(x.str());
  j["vertices"] = v;
  if (e.final_fraction) j["final_fraction"] = {{"K", e.final_fraction->K}, {"M", e.final_fraction->M}};
  return j;
}

inline Json to_json(const CandidateSurface& s) {
  Json j;
  j["kind"] = kind_name(s.kind);
  j["M"] = s.M;
  j["K"] = s.K;
  j["q"] = s.q_negative;
  Json paths = Json::array();
  for (const auto& e : s.edgepaths) paths.push_back(to_json(e));
  j["edgepaths"] = paths;
  Json coords = Json::array();
  for (const auto& c : s.coords) coords.push_back({to_json(c.A), to_json(c.B), to_json(c.C)});
  j["coords"] = coords;
  j["rvalues"] = s.rvalues;
  return j;
}

inline Json degree_json(const DegreeQuadratic& d) {
  Json j;
  j["s"] = to_json(d.ss.s);
  j["s1"] = to_json(d.ss.s1);
  j["js"] = to_json(d.js);
  j["jx"] = to_json(d.jx);
  j["case"] = case_label(d.dcase);
  j["surface_hint"] = hint_name(d.surface_hint);
  j["strict_ok"] = d.strict_ok;
  j["flags"] = d.flags;
  return j;
}

inline Json to_json(const VerificationReport& r) {
  Json j;
  j["schema"] = kReportSchema;
  j["input"] = r.input;
  j["knot"] = r.normalized;
  j["type"] = r.montesinos ? "montesinos" : "pretzel";
  j["strict_ok"] = r.strict_ok;
  j["forced"] = r.forced;
  j["q"] = r.q;
  Json deg = degree_json(r.degree);
  if (r.pretzel_degree) deg["associated_pretzel"] = degree_json(*r.pretzel_degree);
  if (r.corrections) {
    const auto& c = *r.corrections;
    deg["corrections"] = {{"q0_prime", c.q0_prime},           {"r0_bracket", c.r0_bracket},
                          {"r0_odd", c.r0_odd},               {"r0_2", c.r0_2},
                          {"sum_ri2_minus1", c.sum_ri2_minus1}, {"sum_ri_bracket", c.sum_ri_bracket},
                          {"sum_ri_even", c.sum_ri_even},     {"omega_P", c.omega_P},
                          {"omega_K", c.omega_K}};
  }
  j["degree"] = deg;
  Json sj;
  const auto& s = r.surface;
  sj["built"] = s.built;
  if (!s.built) {
    sj["error"] = s.error;
  } else {
    sj["selected"] = to_json(s.surface);
    sj["tw"] = to_json(s.tw);
    sj["tw_reference"] = to_json(s.tw_reference);
    sj["bs_reference"] = to_json(s.bs_reference);
    sj["bs"] = to_json(s.bs);
    sj["two_chi_over_sheets"] = to_json(s.two_chi_over_sheets);
    sj["verdict"] = verdict_name(s.verdict);
  }
  j["surface"] = sj;
  Json oj = Json::array();
  for (const auto& o : r.oracle) {
    Json x;
    x["color"] = o.color;
    x["computed"] = o.computed;
    if (!o.computed) {
      x["skipped"] = o.skipped;
    } else {
      x["degree"] = o.measured;
      x["predicted_degree"] = to_json(o.predicted);
      x["constant"] = to_json(o.constant);
      x["value_at_one_ok"] = o.eval_at_one_ok;
      x["match"] = o.exact_match;
    }
    oj.push_back(x);
  }
  j["oracle"] = oj;
  j["checks"] = {{"js_equals_bs", r.js_equals_bs},
                 {"jx_equals_two_chi_over_sheets", r.jx_equals_chi},
                 {"oracle_match", r.oracle_match},
                 {"constant_consistent", r.constant_consistent}};
  j["verdict"] = r.verdict;
  return j;
}

/// Odd pretzel knots P(q0, q1, ..., qm) with -bound <= q0 <= -3 and 3 <= q1 <= ... <= qm <= bound.
inline std::vector<PretzelKnot> odd_pretzel_family(int m, std::int64_t bound) {
  std::vector<PretzelKnot> out;
  if (m < 2 || bound < 3) return out;
  IntVector q(std::size_t(m + 1));
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t lo) {
    if (i == q.size()) {
      std::vector<Rational> r;
      for (auto x : q) r.push_back(make_rational(1, x));
      if (classify(r) == LinkType::Knot) out.push_back(PretzelKnot{q});
      return;
    }
    for (std::int64_t v = lo; v <= bound; v += 2) {
      q[i] = v;
      rec(i + 1, v);
    }
  };
  std::int64_t q0_lo = -bound;
  if (q0_lo % 2 == 0) ++q0_lo;
  for (std::int64_t q0 = q0_lo; q0 <= -3; q0 += 2) {
    q[0] = q0;
    rec(1, 3);
  }
  return out;
}

struct ScanResult {
  std::vector<VerificationReport> reports;
  std::map<std::string, int> verdicts;
  std::map<std::string, int> cases;
};

inline ScanResult scan(const std::vector<std::string>& specs, const VerifyOptions& opt) {
  ScanResult out;
  for (const auto& s : specs) {
    out.reports.push_back(verify(s, opt));
    ++out.verdicts[out.reports.back().verdict];
    ++out.cases[case_label(out.reports.back().degree.dcase)];
  }
  return out;
}

inline Json to_json(const ScanResult& s) {
  Json j;
  j["schema"] = kScanSchema;
  j["count"] = s.reports.size();
  j["verdicts"] = s.verdicts;
  j["cases"] = s.cases;
  Json items = Json::array();
  for (const auto& r : s.reports) items.push_back(to_json(r));
  j["reports"] = items;
  return j;
}

}  // namespace slopelab
