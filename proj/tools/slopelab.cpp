// slopelab command line: verify, scan, qip, jones, diagram.
#include "slopelab/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace slopelab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

void write_json(const Json& j, const std::string& path) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

void print_summary(const VerificationReport& r) {
  std::cout << r.normalized << "  q=(";
  for (std::size_t i = 0; i < r.q.size(); ++i) std::cout << (i ? "," : "") << r.q[i];
  std::cout << ")  case " << case_label(r.degree.dcase) << (r.strict_ok ? "" : "  [outside hypotheses]") << "\n";
  std::cout << "  degree : s=" << r.degree.ss.s << " s1=" << r.degree.ss.s1 << " js=" << r.degree.js
            << " jx=" << r.degree.jx << "\n";
  if (r.surface.built) {
    const auto& s = r.surface;
    std::cout << "  surface: " << kind_name(s.surface.kind) << " M=" << s.surface.M << " bs=" << s.bs
              << " 2chi/M=" << s.two_chi_over_sheets << " " << verdict_name(s.verdict) << "\n";
  } else {
    std::cout << "  surface: not built (" << r.surface.error << ")\n";
  }
  for (const auto& o : r.oracle) {
    std::cout << "  oracle N=" << o.color << ": ";
    if (!o.computed) std::cout << "skipped (" << o.skipped << ")\n";
    else
      std::cout << "deg=" << o.measured << " predicted=" << o.predicted << " c=" << o.constant
                << (o.exact_match ? "" : "  MISMATCH") << "\n";
  }
  if (!r.constant_consistent) std::cout << "  note: fitted constant differs between colors\n";
  std::cout << "  verdict: " << r.verdict << "\n";
}

// jones and diagram accept any knot diagram; normalize only when the form allows it
KnotSpec oracle_spec(const std::string& text) {
  KnotSpec raw = parse_knot_spec(text);
  try {
    return normalize_spec(raw);
  } catch (const NoNegativeTangle&) {
  } catch (const MoreThanOneNegativeTangle&) {
  }
  std::vector<Rational> r;
  if (auto p = std::get_if<PretzelKnot>(&raw)) r = as_montesinos(*p).fractions;
  else r = std::get<MontesinosKnot>(raw).fractions;
  if (classify(r) != LinkType::Knot) throw NotAKnot("input describes a link, not a knot");
  return raw;
}

int exit_for(const std::string& verdict) { return verdict == "PASS" ? kExitOk : kExitFail; }

std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  return out;
}

std::string cache_key(const std::string& knot, int color, bool mirror) {
  // FNV-1a over the normalized description
  std::uint64_t h = 1469598103934665603ull;
  for (char c : knot + "|" + std::to_string(color) + "|" + (mirror ? "m" : "")) {
    h ^= std::uint8_t(c);
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jones slopes and Hatcher-Oertel surfaces of pretzel and Montesinos knots"};
  app.require_subcommand(1);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check js/jx against a candidate surface and the skein oracle");
  std::string v_spec, v_json;
  VerifyOptions v_opt;
  bool v_quiet = false;
  verify_cmd->add_option("knot", v_spec, "m:r0,r1,... or p:q0,q1,...")->required();
  verify_cmd->add_option("--oracle-n", v_opt.oracle_n, "largest n for J_{K,n+1}; 0 disables the oracle");
  verify_cmd->add_flag("--force", v_opt.force, "run outside the theorem hypotheses");
  verify_cmd->add_option("--json", v_json, "write the report ('-' for stdout)");
  verify_cmd->add_option("--max-work", v_opt.jones.max_work, "oracle work budget");
  verify_cmd->add_flag("--quiet", v_quiet, "no text summary");

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "verify a family of knots, or run the exceptional scan");
  std::string s_family = "odd-pretzel", s_json;
  int s_m = 2;
  std::int64_t s_bound = 9;
  std::vector<std::string> s_specs;
  bool s_exceptional = false;
  std::int64_t e_q0_min = -10, e_qi_min = 3, e_qi_max = 10;
  std::string e_ms = "2,3";
  VerifyOptions s_opt;
  s_opt.oracle_n = 0;
  scan_cmd->add_option("--family", s_family, "family name (odd-pretzel)");
  scan_cmd->add_option("--m", s_m, "number of positive tangles");
  scan_cmd->add_option("--bound", s_bound, "largest |q_i|");
  scan_cmd->add_option("--spec", s_specs, "explicit knot specs instead of a family");
  scan_cmd->add_option("--oracle-n", s_opt.oracle_n, "oracle depth per knot (default 0)");
  scan_cmd->add_flag("--force", s_opt.force, "allow knots outside the hypotheses");
  scan_cmd->add_option("--json", s_json, "write the scan ('-' for stdout)");
  scan_cmd->add_flag("--exceptional", s_exceptional, "list pretzel knots with s >= 0 and s1 = 0");
  scan_cmd->add_option("--q0-min", e_q0_min, "exceptional scan: smallest q0");
  scan_cmd->add_option("--qi-min", e_qi_min, "exceptional scan: smallest q_i");
  scan_cmd->add_option("--qi-max", e_qi_max, "exceptional scan: largest q_i");
  scan_cmd->add_option("--ms", e_ms, "exceptional scan: values of m, comma separated");

  // qip
  auto* qip_cmd = app.add_subcommand("qip", "minimize sum a_i x_i^2 + b_i x_i over x >= 0, sum x = t");
  std::string q_input;
  qip_cmd->add_option("input", q_input, "JSON {\"a\": [...], \"b\": [...], \"t\": n} or a file holding it")
      ->required();

  // jones
  auto* jones_cmd = app.add_subcommand("jones", "colored Jones polynomial J_{K,N} from the skein oracle");
  std::string j_spec, j_cache;
  int j_color = 2;
  JonesOptions j_opt;
  j_opt.max_color = 8;
  jones_cmd->add_option("knot", j_spec, "knot spec")->required();
  jones_cmd->add_option("--n", j_color, "color N (J_{K,1} = 1)");
  jones_cmd->add_flag("--mirror", j_opt.mirror, "use the mirror diagram");
  jones_cmd->add_option("--max-work", j_opt.max_work, "work budget");
  jones_cmd->add_option("--cache", j_cache, "cache directory");

  // diagram
  auto* diag_cmd = app.add_subcommand("diagram", "PD code of the standard diagram");
  std::string d_spec;
  diag_cmd->add_option("knot", d_spec, "knot spec")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*verify_cmd) {
      VerificationReport r = verify(v_spec, v_opt);
      if (!v_quiet) print_summary(r);
      write_json(to_json(r), v_json);
      return exit_for(r.verdict);
    }

    if (*scan_cmd) {
      if (s_exceptional) {
        std::vector<int> ms;
        for (auto x : parse_int_list(e_ms)) ms.push_back(int(x));
        auto found = exceptional_scan(e_q0_min, e_qi_min, e_qi_max, ms);
        Json j;
        j["schema"] = kScanSchema;
        j["mode"] = "exceptional";
        j["found"] = found;
        for (const auto& q : found) {
          std::cout << "P(";
          for (std::size_t i = 0; i < q.size(); ++i) std::cout << (i ? "," : "") << q[i];
          SAndS1 ss = s_and_s1(q);
          std::cout << ")  s=" << ss.s << "\n";
        }
        write_json(j, s_json);
        return kExitOk;
      }
      if (s_specs.empty()) {
        if (s_family != "odd-pretzel") throw KnotInputError("unknown family " + s_family);
        for (const auto& p : odd_pretzel_family(s_m, s_bound)) s_specs.push_back(spec_string(p));
      }
      ScanResult res = scan(s_specs, s_opt);
      for (const auto& r : res.reports) {
        std::cout << r.normalized << "  case " << case_label(r.degree.dcase) << "  js=" << r.degree.js
                  << "  jx=" << r.degree.jx << "  " << r.verdict << "\n";
      }
      std::cout << "total " << res.reports.size();
      for (const auto& [v, n] : res.verdicts) std::cout << "  " << v << "=" << n;
      std::cout << "\n";
      write_json(to_json(res), s_json);
      return res.verdicts.count("FAIL") ? kExitFail : kExitOk;
    }

    if (*qip_cmd) {
      std::string text = q_input;
      if (std::filesystem::exists(q_input)) {
        std::ifstream in(q_input);
        text.assign(std::istreambuf_iterator<char>(in), {});
      }
      Json in;
      try {
        in = Json::parse(text);
      } catch (const Json::exception& e) {
        throw KnotInputError(std::string("qip input is not valid JSON: ") + e.what());
      }
      SeparableQuadratic f(in.at("a").get<IntVector>(), in.at("b").get<IntVector>());
      std::int64_t t = in.at("t").get<std::int64_t>();
      LatticeOptimum opt = lattice_min(f, t);
      RealMinimum real = real_min_simplex(f, Rational(static_cast<long>(t)));
      Json out;
      out["minimizer"] = opt.minimizer;
      out["value"] = to_json(opt.value);
      Json rp = Json::array();
      for (const auto& x : real.point) rp.push_back(to_json(x));
      out["real_minimizer"] = rp;
      out["real_value"] = to_json(real.value);
      out["period"] = opt.period;
      out["descent_steps"] = opt.descent_steps;
      Json trace = Json::array();
      for (std::size_t i = 0; i < f.dim(); ++i)
        for (std::size_t j = 0; j < f.dim(); ++j) {
          if (i == j || opt.minimizer[i] == 0) continue;
          trace.push_back({{"from", i}, {"to", j}, {"delta", f.move_delta(opt.minimizer, i, j)}});
        }
      out["certificate"] = {{"checked", opt.certificate_checked}, {"moves", trace}};
      std::cout << out.dump(2) << "\n";
      return kExitOk;
    }

    if (*jones_cmd) {
      KnotSpec k = oracle_spec(j_spec);
      const std::string name = spec_string(k);
      std::filesystem::path cached;
      if (!j_cache.empty()) {
        std::filesystem::create_directories(j_cache);
        cached = std::filesystem::path(j_cache) / (cache_key(name, j_color, j_opt.mirror) + ".json");
        if (std::filesystem::exists(cached)) {
          std::ifstream in(cached);
          Json j = Json::parse(in);
          if (j.value("knot", "") == name && j.value("color", 0) == j_color && j.value("mirror", false) == j_opt.mirror) {
            std::cout << j.dump(2) << "\n";
            return kExitOk;
          }
        }
      }
      LaurentPoly p = colored_jones(k, j_color, j_opt);
      Json j;
      j["knot"] = name;
      j["color"] = j_color;
      j["mirror"] = j_opt.mirror;
      j["degree"] = p.degree().str();
      j["low_degree"] = p.low_degree().str();
      j["polynomial"] = to_json(p);
      j["pretty"] = p.str();
      if (!cached.empty()) write_json(j, cached.string());
      std::cout << j.dump(2) << "\n";
      return kExitOk;
    }

    if (*diag_cmd) {
      KnotSpec k = oracle_spec(d_spec);
      Diagram d = build_standard_diagram(k);
      Json j;
      j["knot"] = spec_string(k);
      Json pd = Json::array();
      auto code = pd_code(d);
      for (std::size_t c = 0; c < code.size(); ++c)
        pd.push_back({{"edges", code[c]}, {"sign", d.crossings[c].sign}});
      j["pd"] = pd;
      j["writhe"] = writhe(d);
      std::cout << j.dump(2) << "\n";
      return kExitOk;
    }
  } catch (const KnotInputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const HypothesisViolation& e) {
    std::cerr << "hypothesis violated: " << e.what() << " (use --force)\n";
    return kExitInput;
  } catch (const MultiComponent& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitOk;
}
