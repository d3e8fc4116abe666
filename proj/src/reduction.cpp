#include "persp/reduction.hpp"

namespace persp {

Ideal ReductionTrace::mid_ideal(int n) const {
  const int last = static_cast<int>(steps.size()) - 1;
  return ideal_of(steps.at(static_cast<size_t>(std::min(n, last))).mid);
}

std::pair<RingElement, RingElement> make_reflexive_pair(const RingElement& a) {
  return {a, reflexive_inverse(a)};
}

static void require_mutually_reflexive(const RingElement& a, const RingElement& b) {
  if (ring_mul(ring_mul(a, b), a) != a || ring_mul(ring_mul(b, a), b) != b)
    throw NotMutuallyReflexive("run_reduction: pair is not mutually reflexive");
}

ReductionTrace run_reduction(const RingElement& a, const RingElement& b,
                             int max_steps) {
  require_mutually_reflexive(a, b);
  if (max_steps < 0) max_steps = a.spec.length() + 1;

  ReductionTrace trace;
  trace.a = a;
  trace.b = b;

  auto push_step = [&](int n, RingElement e, RingElement f) {
    // mid generates the ideal meet; realized through the meet term so the
    // whole step stays inside the quasi-inversion term language
    Env env{{"u", e}, {"v", f}};
    RingElement g = eval(meet_term(t_var("u"), t_var("v")), a.spec, env);
    ReductionStep s{n, std::move(e), std::move(f), std::move(g), 0, 0, 0};
    s.left_height = ideal_of(s.left).height();
    s.right_height = ideal_of(s.right).height();
    s.mid_height = ideal_of(s.mid).height();
    trace.steps.push_back(std::move(s));
  };

  push_step(0, ring_mul(b, a), ring_mul(a, b));

  for (int n = 0; n <= max_steps; ++n) {
    const RingElement& g = trace.steps.back().mid;
    const uint64_t e2n = 1ull << n;
    RingElement e_next = range_idempotent(ring_mul(ring_pow(b, e2n), g));
    RingElement f_next = range_idempotent(ring_mul(ring_pow(a, e2n), g));
    push_step(n + 1, std::move(e_next), std::move(f_next));

    const ReductionStep& prev = trace.steps[trace.steps.size() - 2];
    const ReductionStep& cur = trace.steps.back();
    // chain invariants: ideals descend and the squaring maps stay injective
    if (!leq(ideal_of(cur.left), ideal_of(prev.left)) ||
        !leq(ideal_of(cur.right), ideal_of(prev.right)) ||
        !leq(ideal_of(cur.mid), ideal_of(prev.mid)))
      throw std::logic_error("run_reduction: chain failed to descend");
    if (apply(ring_pow(a, e2n), ideal_of(prev.left)).height() != prev.left_height)
      throw std::logic_error("run_reduction: squaring map lost rank");

    if (ideal_of(cur.mid) == ideal_of(prev.mid)) {
      trace.status = ReductionStatus::Stabilized;
      trace.stabilized_at = n;
      return trace;
    }
  }
  trace.status = ReductionStatus::Exhausted;  // unreachable for finite rings
  return trace;
}

IndependentDecomposition independent_decomposition(const ReductionTrace& trace) {
  if (trace.status != ReductionStatus::Stabilized)
    throw NotStabilized("independent_decomposition: trace not stabilized");
  const int m = trace.stabilized_at;
  if (static_cast<int>(trace.steps.size()) < m + 2)
    throw NotStabilized("independent_decomposition: trace too short");

  IndependentDecomposition out;
  out.m = m;
  for (int n = 0; n <= m; ++n) {
    Ideal e_n = ideal_of(trace.step(n).left);
    Ideal g_n = ideal_of(trace.step(n).mid);
    Ideal e_next = ideal_of(trace.step(n + 1).left);
    Ideal rest = join(e_next, g_n);
    Ideal x_n = relative_complement(rest, Ideal::zero(e_n.spec), e_n);
    RingElement x = idempotent_of(x_n);
    RingElement y = range_idempotent(ring_mul(ring_pow(trace.a, 1ull << n), x));
    out.left.push_back(std::move(x));
    out.right.push_back(std::move(y));
  }
  return out;
}

bool Certificate::ok() const {
  for (const auto& [name, good] : verified)
    if (!good) return false;
  return !verified.empty();
}

Certificate axis_witness(const RingElement& a, const RingElement& b,
                         const ReductionTrace& trace) {
  if (trace.status != ReductionStatus::Stabilized)
    throw NotStabilized("axis_witness: trace not stabilized");
  auto axis = common_complement(ideal_of(b), ideal_of(a));
  if (!axis)
    throw std::logic_error("axis_witness: stabilized pair has no axis");
  Certificate cert;
  cert.kind = CertificateKind::Axis;
  cert.payload = axis->axis;
  const AxisChecks& ch = axis->checks;
  cert.verified = {{"join_ab_eq_ac", ch.join_ab_eq_ac},
                   {"join_ab_eq_bc", ch.join_ab_eq_bc},
                   {"meet_ab_eq_ac", ch.meet_ab_eq_ac},
                   {"meet_ab_eq_bc", ch.meet_ab_eq_bc},
                   {"chains_consistent", ch.chains_consistent}};
  return cert;
}

Certificate unit_witness(const RingElement& a, const RingElement& b,
                         const ReductionTrace& trace) {
  if (trace.status != ReductionStatus::Stabilized)
    throw NotStabilized("unit_witness: trace not stabilized");
  const RingSpec& spec = a.spec;

  RingElement e = ring_mul(b, a);
  RingElement f = ring_mul(a, b);
  Ideal er = ideal_of(e), fr = ideal_of(f);
  Ideal g = meet(er, fr);
  Ideal ep_ideal = relative_complement(g, Ideal::zero(spec), er);
  Ideal fp_ideal = relative_complement(g, Ideal::zero(spec), fr);
  RingElement ep = idempotent_of(ep_ideal);
  RingElement fp = idempotent_of(fp_ideal);
  RingElement h = idempotent_of(join(er, fr));
  RingElement one_minus_h = ring_sub(ring_one(spec), h);

  auto w = mvn_witness(ep, fp);
  if (!w) throw std::logic_error("unit_witness: summand witness failed");

  // Decompose 1 along fR (+) e'R (+) (1-h)R by solving
  // f r + e' s + (1-h) t = 1 with the canonical solution, then push the
  // summands through b*, the e'R -> f'R witness, and the identity.
  RingElement u = ring_zero(spec);
  for (size_t ci = 0; ci < spec.components.size(); ++ci) {
    const int n = spec.components[ci].n;
    const uint16_t p = spec.components[ci].p;
    Mat blocks = hstack(hstack(f.parts[ci], ep.parts[ci]), one_minus_h.parts[ci]);
    auto sol = solve_right(blocks, Mat::identity(n, p));
    if (!sol) throw std::logic_error("unit_witness: decomposition of 1 failed");
    Mat r = Mat::zero(n, n, p), s = Mat::zero(n, n, p), t = Mat::zero(n, n, p);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        r.at(i, j) = sol->at(i, j);
        s.at(i, j) = sol->at(n + i, j);
        t.at(i, j) = sol->at(2 * n + i, j);
      }
    Mat part = mul(b.parts[ci], mul(f.parts[ci], r));
    part = add(part, mul(w->x.parts[ci], mul(ep.parts[ci], s)));
    part = add(part, mul(one_minus_h.parts[ci], t));
    u.parts[ci] = std::move(part);
  }

  Certificate cert;
  cert.kind = CertificateKind::Unit;
  cert.payload = u;
  cert.verified = {{"unit_invertible", is_unit(u)},
                   {"aua_equals_a", ring_mul(ring_mul(a, u), a) == a}};
  if (!cert.ok()) throw std::logic_error("unit_witness: verification failed");
  return cert;
}

bool verify_certificate(const RingElement& a, const RingElement& b,
                        const Certificate& cert) {
  if (cert.kind == CertificateKind::Axis) {
    return axis_checks(ideal_of(b), ideal_of(a), ideal_of(cert.payload)).all();
  }
  return is_unit(cert.payload) &&
         ring_mul(ring_mul(a, cert.payload), a) == a;
}

}  // namespace persp
