#include "persp/props.hpp"

#include <sstream>

namespace persp {

namespace {

std::string spec_str(const RingSpec& spec) {
  std::ostringstream os;
  for (size_t i = 0; i < spec.components.size(); ++i) {
    if (i) os << "x";
    os << "M" << spec.components[i].n << "(F" << spec.components[i].p << ")";
  }
  return os.str();
}

}  // namespace

PropReport is_directly_finite(const RingSpec& spec, uint64_t pair_budget) {
  PropReport rep{spec_str(spec), "directly_finite", true, "", 0};
  const uint64_t n = element_count(spec);
  if (n <= pair_budget / n) {
    for (uint64_t i = 0; i < n && rep.holds; ++i) {
      RingElement a = element_at(spec, i);
      for (uint64_t j = 0; j < n; ++j) {
        RingElement b = element_at(spec, j);
        if (ring_mul(a, b) == ring_one(spec)) {
          ++rep.cases;
          if (ring_mul(b, a) != ring_one(spec)) {
            rep.holds = false;
            rep.detail = "ab=1 but ba!=1 at indices " + std::to_string(i) + "," +
                         std::to_string(j);
            break;
          }
        }
      }
    }
  } else {
    // solve a b = 1 componentwise instead of scanning pairs
    for (uint64_t i = 0; i < n && rep.holds; ++i) {
      RingElement a = element_at(spec, i);
      RingElement b = ring_zero(spec);
      bool solvable = true;
      for (size_t c = 0; c < a.parts.size(); ++c) {
        auto x = solve_right(a.parts[c], Mat::identity(a.parts[c].rows, a.parts[c].p));
        if (!x) { solvable = false; break; }
        b.parts[c] = *x;
      }
      if (!solvable) continue;
      ++rep.cases;
      if (ring_mul(b, a) != ring_one(spec)) {
        rep.holds = false;
        rep.detail = "right-invertible element not left-invertible, index " +
                     std::to_string(i);
      }
    }
  }
  return rep;
}

RingElement unit_quasi_inverse(const RingElement& a) {
  auto [x, b] = make_reflexive_pair(a);
  ReductionTrace trace = run_reduction(x, b);
  Certificate cert = unit_witness(x, b, trace);
  return cert.payload;
}

UnitRegularReport is_unit_regular_element(const RingElement& a) {
  UnitRegularReport out{{spec_str(a.spec), "unit_regular_element", false, "", 1},
                        unit_quasi_inverse(a)};
  out.report.holds =
      is_unit(out.witness) && ring_mul(ring_mul(a, out.witness), a) == a;
  out.report.detail = out.report.holds ? "verified unit quasi-inverse"
                                       : "witness failed verification";
  return out;
}

std::optional<RingElement> unit_quasi_inverse_brute(const RingElement& a,
                                                    uint64_t budget) {
  const uint64_t n = element_count(a.spec, budget);
  for (uint64_t i = 0; i < n; ++i) {
    RingElement u = element_at(a.spec, i);
    if (!is_unit(u)) continue;
    if (ring_mul(ring_mul(a, u), a) == a) return u;
  }
  return std::nullopt;
}

int strong_pi_index(const RingElement& a) {
  const int bound = a.spec.length() + 1;
  for (int n = 1; n <= bound; ++n) {
    RingElement an = ring_pow(a, static_cast<uint64_t>(n));
    RingElement an1 = ring_pow(a, static_cast<uint64_t>(n) + 1);
    bool right = true, left = true;
    for (size_t c = 0; c < an.parts.size() && (right || left); ++c) {
      if (!solve_right(an1.parts[c], an.parts[c])) right = false;
      if (!solve_right(transpose(an1.parts[c]), transpose(an.parts[c]))) left = false;
    }
    if (right && left) return n;
  }
  return -1;
}

PropReport handelman_scan(const RingSpec& spec) {
  PropReport rep{spec_str(spec), "handelman", true, "", 0};
  const uint64_t n = element_count(spec);
  std::vector<RingElement> idempotents;
  for (uint64_t i = 0; i < n; ++i) {
    RingElement x = element_at(spec, i);
    if (is_idempotent(x)) idempotents.push_back(std::move(x));
  }
  for (const auto& e : idempotents) {
    for (const auto& f : idempotents) {
      Ideal er = ideal_of(e), fr = ideal_of(f);
      if (!is_module_iso(er, fr)) continue;
      ++rep.cases;
      auto ax = common_complement(er, fr);
      if (!ax || !ax->checks.all()) {
        rep.holds = false;
        rep.detail = "isomorphic idempotent pair without common complement";
        return rep;
      }
    }
  }
  // perspectivity everywhere forces unit-regularity of every element
  for (uint64_t i = 0; i < n; ++i) {
    RingElement a = element_at(spec, i);
    RingElement u = unit_quasi_inverse(a);
    ++rep.cases;
    if (!is_unit(u) || ring_mul(ring_mul(a, u), a) != a) {
      rep.holds = false;
      rep.detail = "element without verified unit quasi-inverse, index " +
                   std::to_string(i);
      return rep;
    }
  }
  return rep;
}

PropReport theorem23_check(int d, const std::vector<RingSpec>& specs) {
  if (d < 2) throw std::invalid_argument("theorem23_check: d >= 2 required");
  for (const auto& s : specs)
    if (s.length() > d)
      throw std::invalid_argument("theorem23_check: ring length exceeds d");
  PropReport rep{"", "theorem23", true, "", 0};
  TermPtr x = t_var("x");
  TermPtr lhs7 = t_mul(self_descent_term(d - 1), self_descent_term(d - 2));
  TermPtr rhs7 = self_descent_term(d - 2);
  TermPtr xm1 = t_pow(x, static_cast<uint64_t>(d) + 1);
  TermPtr plus_xm1 = reflexive_term(xm1);
  TermPtr xm = t_pow(x, static_cast<uint64_t>(d));
  TermPtr lhs8a = t_mul(t_mul(xm1, plus_xm1), xm);
  TermPtr lhs8b = t_mul(t_mul(xm, plus_xm1), xm1);
  for (const auto& s : specs) {
    if (!rep.ring.empty()) rep.ring += ",";
    rep.ring += spec_str(s);
    for (const auto& [lhs, rhs, tag] :
         {std::tuple{lhs7, rhs7, "s-chain"}, std::tuple{lhs8a, xm, "power-a"},
          std::tuple{lhs8b, xm, "power-b"}}) {
      Verdict v = check_identity(s, lhs, rhs, CheckMode::Exhaustive);
      rep.cases += v.cases_checked;
      if (!v.holds) {
        rep.holds = false;
        rep.detail = std::string("identity ") + tag + " failed on " + spec_str(s);
        return rep;
      }
    }
  }
  return rep;
}

PropReport strong_pi_scan(const RingSpec& spec) {
  PropReport rep{spec_str(spec), "strong_pi", true, "", 0};
  const uint64_t n = element_count(spec);
  const int bound = spec.length();
  for (uint64_t i = 0; i < n; ++i) {
    RingElement a = element_at(spec, i);
    ++rep.cases;
    int idx = strong_pi_index(a);
    if (idx < 1 || idx > bound) {
      rep.holds = false;
      rep.detail = "strong pi index " + std::to_string(idx) + " out of bound at " +
                   std::to_string(i);
      return rep;
    }
    RingElement u = unit_quasi_inverse(a);
    if (!is_unit(u) || ring_mul(ring_mul(a, u), a) != a) {
      rep.holds = false;
      rep.detail = "unit quasi-inverse failed at " + std::to_string(i);
      return rep;
    }
  }
  return rep;
}

PropReport ehrlich_check(const RingSpec& spec) {
  PropReport rep{spec_str(spec), "ehrlich", true, "", 0};
  const uint64_t n = element_count(spec);
  std::vector<RingElement> idempotents;
  for (uint64_t i = 0; i < n; ++i) {
    RingElement x = element_at(spec, i);
    if (is_idempotent(x)) idempotents.push_back(std::move(x));
  }
  RingElement one = ring_one(spec);
  for (const auto& e : idempotents) {
    for (const auto& f : idempotents) {
      if (!is_module_iso(ideal_of(e), ideal_of(f))) continue;
      ++rep.cases;
      Ideal ce = ideal_of(ring_sub(one, e));
      Ideal cf = ideal_of(ring_sub(one, f));
      if (!is_module_iso(ce, cf)) {
        rep.holds = false;
        rep.detail = "complement ideals not isomorphic";
        return rep;
      }
    }
  }
  return rep;
}

PropReport explore_chain_identity_below(const RingSpec& spec, int d) {
  PropReport rep{spec_str(spec), "explore_s_below", true, "", 0};
  if (d < 3) {
    rep.detail = "no index below d-2 to explore";
    return rep;
  }
  TermPtr lhs = t_mul(self_descent_term(d - 2), self_descent_term(d - 3));
  TermPtr rhs = self_descent_term(d - 3);
  Verdict v = check_identity(spec, lhs, rhs, CheckMode::Exhaustive);
  rep.cases = v.cases_checked;
  rep.holds = v.holds;  // informational; both outcomes acceptable
  rep.detail = v.holds ? "identity held below the guaranteed index"
                       : "counterexample found below the guaranteed index";
  return rep;
}

}  // namespace persp
