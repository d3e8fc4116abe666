// Command-line front end: reductions, certificates, identity checks, law
// suites, ring property scans, and the strict-descent example family.
//
// Exit codes: 0 success, 1 verification failure / counterexample, 2 usage
// or parse error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "persp/example_one.hpp"
#include "persp/text_io.hpp"

using namespace persp;

namespace {

struct OutputOpts {
  std::string format = "json";
  std::string out_path;
};

void add_output_opts(CLI::App* cmd, OutputOpts& opts) {
  cmd->add_option("--output", opts.format, "Output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", opts.out_path, "Write the report to this file");
}

int emit(const OutputOpts& opts, const OrderedJson& j, const std::string& text) {
  std::string payload = (opts.format == "json") ? j.dump(2) + "\n" : text;
  if (opts.out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(opts.out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open " << opts.out_path << "\n";
      return 2;
    }
    f << payload;
  }
  return 0;
}

bool ci_mode() { return std::getenv("PERSP_CI") != nullptr; }

uint64_t env_budget() {
  if (const char* v = std::getenv("PERSP_ENUM_BUDGET")) return std::strtoull(v, nullptr, 10);
  return 1ull << 24;
}

int run_reduce(const std::string& ring, const std::string& a_text,
               const std::string& b_text, const OutputOpts& opts) {
  RingSpec spec = parse_ring_spec(ring);
  RingElement a = parse_element(spec, a_text);
  RingElement b = b_text.empty() ? reflexive_inverse(a) : parse_element(spec, b_text);
  ReductionTrace trace = run_reduction(a, b);
  Certificate axis = axis_witness(a, b, trace);
  Certificate unit = unit_witness(a, b, trace);
  OrderedJson j = certificate_bundle_to_json(trace, axis, unit);
  std::ostringstream text;
  text << "ring " << ring << ": stabilized at " << trace.stabilized_at
       << ", axis " << (axis.ok() ? "verified" : "FAILED") << ", unit "
       << (unit.ok() ? "verified" : "FAILED") << "\n";
  int rc = emit(opts, j, text.str());
  if (rc != 0) return rc;
  return (axis.ok() && unit.ok() &&
          verify_certificate(a, b, axis) && verify_certificate(a, b, unit))
             ? 0
             : 1;
}

int run_certify(const std::string& path, const OutputOpts& opts) {
  std::ifstream f(path);
  if (!f) {
    std::cerr << "error: cannot read " << path << "\n";
    return 2;
  }
  OrderedJson j = OrderedJson::parse(f);
  RingSpec spec = parse_ring_spec(j.at("ring").get<std::string>());
  RingElement a = parse_element(spec, j.at("a").get<std::string>());
  RingElement b = parse_element(spec, j.at("b").get<std::string>());
  bool all_ok = true;
  OrderedJson result;
  if (j.contains("axis")) {
    Certificate cert{CertificateKind::Axis,
                     parse_element(spec, j.at("axis").get<std::string>()),
                     {}};
    bool ok = verify_certificate(a, b, cert);
    result["axis"] = ok;
    all_ok = all_ok && ok;
  }
  if (j.contains("unit")) {
    Certificate cert{CertificateKind::Unit,
                     parse_element(spec, j.at("unit").get<std::string>()),
                     {}};
    bool ok = verify_certificate(a, b, cert);
    result["unit"] = ok;
    all_ok = all_ok && ok;
  }
  result["verified"] = all_ok;
  int rc = emit(opts, result, std::string(all_ok ? "verified" : "FAILED") + "\n");
  if (rc != 0) return rc;
  return all_ok ? 0 : 1;
}

int run_identities(const std::string& ring, std::string lhs_text,
                   std::string rhs_text, const std::string& scheme, int d,
                   const std::string& mode, uint64_t budget, uint64_t seed,
                   const OutputOpts& opts) {
  RingSpec spec = parse_ring_spec(ring);
  if (!scheme.empty()) {
    if (d < 2) {
      std::cerr << "error: --scheme requires --d >= 2\n";
      return 2;
    }
    if (scheme == "thm23-7") {
      lhs_text = "s[" + std::to_string(d - 1) + "](x)*s[" + std::to_string(d - 2) + "](x)";
      rhs_text = "s[" + std::to_string(d - 2) + "](x)";
    } else if (scheme == "thm23-8a") {
      lhs_text = "x^" + std::to_string(d + 1) + "*plus(x^" + std::to_string(d + 1) +
                 ")*x^" + std::to_string(d);
      rhs_text = "x^" + std::to_string(d);
    } else if (scheme == "thm23-8b") {
      lhs_text = "x^" + std::to_string(d) + "*plus(x^" + std::to_string(d + 1) +
                 ")*x^" + std::to_string(d + 1);
      rhs_text = "x^" + std::to_string(d);
    } else if (scheme == "defining") {
      lhs_text = "x*x'*x";
      rhs_text = "x";
    } else {
      std::cerr << "error: unknown scheme " << scheme << "\n";
      return 2;
    }
  }
  TermPtr lhs = parse_term(lhs_text);
  TermPtr rhs = parse_term(rhs_text);
  CheckMode m = (mode == "sampled") ? CheckMode::Sampled : CheckMode::Exhaustive;
  Verdict v = check_identity(spec, lhs, rhs, m, budget, seed);
  OrderedJson j{{"ring", ring},
                {"lhs", lhs_text},
                {"rhs", rhs_text},
                {"mode", mode},
                {"holds", v.holds},
                {"cases_checked", v.cases_checked}};
  if (!v.holds) {
    OrderedJson cx;
    for (const auto& [name, val] : *v.counterexample) cx[name] = element_to_string(val);
    j["counterexample"] = cx;
  }
  std::ostringstream text;
  text << (v.holds ? "holds" : "FAILS") << " (" << v.cases_checked << " cases)\n";
  int rc = emit(opts, j, text.str());
  if (rc != 0) return rc;
  return v.holds ? 0 : 1;
}

int run_laws(const std::string& suite, int dim, int p, uint64_t trials,
             uint64_t seed, const std::string& mode, const std::string& ring,
             const OutputOpts& opts) {
  LawConfig cfg;
  cfg.dim = dim;
  cfg.p = static_cast<uint16_t>(p);
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.mode = (mode == "rejection") ? SampleMode::Rejection : SampleMode::Constructive;
  LawVerdict v;
  if (suite == "ringfacts" && !ring.empty())
    v = check_ring_facts(parse_ring_spec(ring), trials, seed);
  else
    v = run_suite(suite, cfg);
  OrderedJson j = law_verdict_to_json(v);
  std::ostringstream text;
  text << v.law << ": " << v.passed << " passed, " << v.failed << " failed\n";
  int rc = emit(opts, j, text.str());
  if (rc != 0) return rc;
  return v.ok() ? 0 : 1;
}

int run_props(const std::string& ring, const std::string& check, int d,
              const OutputOpts& opts) {
  RingSpec spec = parse_ring_spec(ring);
  PropReport rep;
  if (check == "theorem23") {
    rep = theorem23_check(d < 2 ? spec.length() : d, {spec});
  } else if (check == "handelman") {
    rep = handelman_scan(spec);
  } else if (check == "directfinite") {
    rep = is_directly_finite(spec);
  } else if (check == "strongpi") {
    rep = strong_pi_scan(spec);
  } else if (check == "ehrlich") {
    rep = ehrlich_check(spec);
  } else if (check == "explore7") {
    rep = explore_chain_identity_below(spec, d < 2 ? spec.length() : d);
  } else {
    std::cerr << "error: unknown check " << check << "\n";
    return 2;
  }
  OrderedJson j = prop_report_to_json(rep);
  std::ostringstream text;
  text << rep.property << " on " << rep.ring << ": "
       << (rep.holds ? "holds" : "FAILS") << " (" << rep.cases << " cases)\n";
  int rc = emit(opts, j, text.str());
  if (rc != 0) return rc;
  // the exploratory scan is informational and always exits 0
  if (check == "explore7") return 0;
  return rep.holds ? 0 : 1;
}

int run_example1(int n, int p, const OutputOpts& opts) {
  ExampleOneInstance inst = build_example1(n, static_cast<uint16_t>(p));
  PropReport rep = verify_example1(n, static_cast<uint16_t>(p));
  RingSpec spec = RingSpec::single(n + 3, static_cast<uint16_t>(p));
  RingElement a{spec, {inst.a}};
  RingElement b{spec, {inst.a_plus}};
  ReductionTrace trace = run_reduction(a, b);
  Certificate axis = axis_witness(a, b, trace);
  Certificate unit = unit_witness(a, b, trace);
  OrderedJson j{{"n", n},
                {"p", p},
                {"a", element_to_string(a)},
                {"a_plus", element_to_string(b)},
                {"holds", rep.holds},
                {"detail", rep.detail}};
  OrderedJson heights = OrderedJson::array();
  for (const auto& s : trace.steps) heights.push_back(s.mid_height);
  j["g_heights"] = heights;
  j["stabilized_at"] = trace.stabilized_at;
  j["axis"] = element_to_string(axis.payload);
  j["unit"] = element_to_string(unit.payload);
  j["verified"] = {{"axis", axis.ok()}, {"unit", unit.ok()}};
  std::ostringstream text;
  text << "example1 n=" << n << " p=" << p << ": "
       << (rep.holds ? "verified" : "FAILED") << " (" << rep.detail << ")\n";
  int rc = emit(opts, j, text.str());
  if (rc != 0) return rc;
  return (rep.holds && axis.ok() && unit.ok()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in finite regular rings: reduction chains, "
               "perspectivity and unit certificates, lattice law suites"};
  app.require_subcommand(1);

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Run the reduction chain and emit certificates");
  std::string r_ring, r_a, r_b;
  OutputOpts r_opts;
  reduce->add_option("--ring", r_ring, "Ring spec, e.g. M2(F2)xM1(F3)")->required();
  reduce->add_option("--a", r_a, "Element a (row-major entries, ';' between components)")->required();
  reduce->add_option("--b", r_b, "Element b (defaults to the canonical reflexive inverse)");
  add_output_opts(reduce, r_opts);

  // certify
  auto* certify = app.add_subcommand("certify", "Re-verify a certificate file");
  std::string c_path;
  OutputOpts c_opts;
  certify->add_option("--verify", c_path, "Certificate JSON file")->required();
  add_output_opts(certify, c_opts);

  // identities
  auto* ident = app.add_subcommand("identities", "Check a term identity over a ring");
  std::string i_ring, i_lhs, i_rhs, i_scheme, i_mode = "exhaustive";
  int i_d = 0;
  uint64_t i_budget = env_budget(), i_seed = 0;
  bool i_seed_set = false;
  OutputOpts i_opts;
  ident->add_option("--ring", i_ring)->required();
  ident->add_option("--lhs", i_lhs);
  ident->add_option("--rhs", i_rhs);
  ident->add_option("--scheme", i_scheme, "thm23-7 | thm23-8a | thm23-8b | defining");
  ident->add_option("--d", i_d, "Length parameter for schemes");
  ident->add_option("--mode", i_mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
  ident->add_option("--budget", i_budget);
  ident->add_option("--seed", i_seed)->each([&](const std::string&) { i_seed_set = true; });
  add_output_opts(ident, i_opts);

  // laws
  auto* laws = app.add_subcommand("laws", "Run a lattice/ring law suite");
  std::string l_suite, l_mode = "constructive", l_ring;
  int l_dim = 4, l_p = 2;
  uint64_t l_trials = 1000, l_seed = 0;
  bool l_seed_set = false;
  OutputOpts l_opts;
  laws->add_option("--suite", l_suite)->required()->check(CLI::IsMember(suite_names()));
  laws->add_option("--dim", l_dim, "Ambient dimension");
  laws->add_option("--p", l_p, "Prime field modulus");
  laws->add_option("--trials", l_trials);
  laws->add_option("--seed", l_seed)->each([&](const std::string&) { l_seed_set = true; });
  laws->add_option("--mode", l_mode)->check(CLI::IsMember({"constructive", "rejection"}));
  laws->add_option("--ring", l_ring, "Ring spec (ringfacts suite)");
  add_output_opts(laws, l_opts);

  // props
  auto* props = app.add_subcommand("props", "Ring-level property scans");
  std::string p_ring, p_check;
  int p_d = 0;
  OutputOpts p_opts;
  props->add_option("--ring", p_ring)->required();
  props->add_option("--check", p_check)->required();
  props->add_option("--d", p_d);
  add_output_opts(props, p_opts);

  // example1
  auto* ex1 = app.add_subcommand("example1", "Build and verify a strict-descent instance");
  int e_n = 0, e_p = 2;
  bool e_json = false;
  OutputOpts e_opts;
  ex1->add_option("--n", e_n, "Depth parameter (dimension n+3)")->required();
  ex1->add_option("--p", e_p, "Prime field modulus");
  ex1->add_flag("--emit-json", e_json, "Force JSON output");
  add_output_opts(ex1, e_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (reduce->parsed()) return run_reduce(r_ring, r_a, r_b, r_opts);
    if (certify->parsed()) return run_certify(c_path, c_opts);
    if (ident->parsed()) {
      if (ci_mode() && i_mode == "sampled" && !i_seed_set) {
        std::cerr << "error: CI mode requires --seed for sampled runs\n";
        return 2;
      }
      return run_identities(i_ring, i_lhs, i_rhs, i_scheme, i_d, i_mode, i_budget,
                            i_seed_set ? i_seed : 1, i_opts);
    }
    if (laws->parsed()) {
      if (ci_mode() && !l_seed_set) {
        std::cerr << "error: CI mode requires --seed for law suites\n";
        return 2;
      }
      return run_laws(l_suite, l_dim, l_p, l_trials, l_seed_set ? l_seed : 42,
                      l_mode, l_ring, l_opts);
    }
    if (props->parsed()) return run_props(p_ring, p_check, p_d, p_opts);
    if (ex1->parsed()) {
      if (e_json) e_opts.format = "json";
      return run_example1(e_n, e_p, e_opts);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
