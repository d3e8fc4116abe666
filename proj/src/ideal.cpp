#include "persp/ideal.hpp"


namespace persp {

Ideal Ideal::zero(const RingSpec& spec) {
  Ideal i{spec, {}};
  for (const auto& c : spec.components) i.spaces.push_back(Subspace::zero(c.n, c.p));
  return i;
}

Ideal Ideal::full(const RingSpec& spec) {
  Ideal i{spec, {}};
  for (const auto& c : spec.components) i.spaces.push_back(Subspace::full(c.n, c.p));
  return i;
}

int Ideal::height() const {
  int h = 0;
  for (const auto& s : spaces) h += s.dim();
  return h;
}

Ideal ideal_of(const RingElement& a) {
  Ideal i{a.spec, {}};
  for (const auto& m : a.parts) i.spaces.push_back(image_basis(m));
  return i;
}

static void require_same_spec(const Ideal& a, const Ideal& b) {
  if (a.spec != b.spec) throw SpecMismatch("ideal op: spec mismatch");
}

Ideal meet(const Ideal& a, const Ideal& b) {
  require_same_spec(a, b);
  Ideal r{a.spec, {}};
  for (size_t i = 0; i < a.spaces.size(); ++i)
    r.spaces.push_back(subspace_intersect(a.spaces[i], b.spaces[i]));
  return r;
}

Ideal join(const Ideal& a, const Ideal& b) {
  require_same_spec(a, b);
  Ideal r{a.spec, {}};
  for (size_t i = 0; i < a.spaces.size(); ++i)
    r.spaces.push_back(subspace_sum(a.spaces[i], b.spaces[i]));
  return r;
}

bool leq(const Ideal& a, const Ideal& b) {
  require_same_spec(a, b);
  for (size_t i = 0; i < a.spaces.size(); ++i)
    if (!subspace_leq(a.spaces[i], b.spaces[i])) return false;
  return true;
}

Ideal apply(const RingElement& a, const Ideal& x) {
  if (a.spec != x.spec) throw SpecMismatch("apply: spec mismatch");
  Ideal r{x.spec, {}};
  for (size_t i = 0; i < x.spaces.size(); ++i)
    r.spaces.push_back(map_image(a.parts[i], x.spaces[i]));
  return r;
}

Ideal complement(const Ideal& a) {
  return relative_complement(a, Ideal::zero(a.spec), Ideal::full(a.spec));
}

Ideal relative_complement(const Ideal& a, const Ideal& lo, const Ideal& hi) {
  require_same_spec(a, lo);
  require_same_spec(a, hi);
  if (!leq(lo, a) || !leq(a, hi))
    throw std::invalid_argument("relative_complement: need lo <= A <= hi");
  // X = lo + W with W a complement of A in [0, hi]; by modularity
  // A inter X = lo + (A inter W) = lo and A + X = A + W = hi.
  Ideal r{a.spec, {}};
  for (size_t i = 0; i < a.spaces.size(); ++i) {
    Subspace w = extend_to_complement(a.spaces[i], hi.spaces[i]);
    r.spaces.push_back(subspace_sum(lo.spaces[i], w));
  }
  return r;
}

// Projection with image S and kernel the canonical complement K of S:
// e = B [I|0] M^-1 where M = [B | B_K] with basis columns.
static Mat projector_onto(const Subspace& s) {
  const int n = s.ambient;
  const uint16_t p = s.p;
  if (s.dim() == 0) return Mat::zero(n, n, p);
  Subspace k = extend_to_complement(s, Subspace::full(n, p));
  Mat m = hstack(transpose(s.basis), transpose(k.basis));
  auto minv = inverse(m);
  if (!minv) throw std::logic_error("projector_onto: basis matrix singular");
  Mat coords = Mat::zero(s.dim(), n, p);  // [I | 0] M^-1
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < n; ++j) coords.at(i, j) = minv->at(i, j);
  return mul(transpose(s.basis), coords);
}

RingElement idempotent_of(const Ideal& a) {
  RingElement r{a.spec, {}};
  for (const auto& s : a.spaces) r.parts.push_back(projector_onto(s));
  return r;
}

bool MvnWitness::verify() const {
  if (!is_idempotent(e) || !is_idempotent(f)) return false;
  return ring_mul(y, x) == e && ring_mul(x, y) == f &&
         ring_mul(ring_mul(f, x), e) == x && ring_mul(ring_mul(e, y), f) == y;
}

// Per component: x = B_f C_e and y = B_e C_f where B_* are canonical image
// bases (as columns) and C_* are the coordinate maps that kill ker(*).
std::optional<MvnWitness> mvn_witness(const RingElement& e, const RingElement& f) {
  if (e.spec != f.spec) throw SpecMismatch("mvn_witness: spec mismatch");
  if (!is_idempotent(e) || !is_idempotent(f))
    throw std::invalid_argument("mvn_witness: inputs must be idempotent");
  MvnWitness w{ring_zero(e.spec), ring_zero(e.spec), e, f};
  for (size_t i = 0; i < e.parts.size(); ++i) {
    const Mat& em = e.parts[i];
    const Mat& fm = f.parts[i];
    const int n = em.rows;
    const uint16_t p = em.p;
    Subspace ime = image_basis(em), imf = image_basis(fm);
    if (ime.dim() != imf.dim()) return std::nullopt;
    if (ime.dim() == 0) continue;  // x = y = 0 in this component
    // coordinates relative to [im(g) | im(1-g)]
    auto coord_map = [&](const Mat& g, const Subspace& img) {
      Mat one_minus = sub(Mat::identity(n, p), g);
      Subspace ker = image_basis(one_minus);
      Mat m = hstack(transpose(img.basis), transpose(ker.basis));
      auto minv = inverse(m);
      if (!minv) throw std::logic_error("mvn_witness: basis matrix singular");
      Mat coords = Mat::zero(img.dim(), n, p);
      for (int r = 0; r < img.dim(); ++r)
        for (int c = 0; c < n; ++c) coords.at(r, c) = minv->at(r, c);
      return coords;
    };
    Mat ce = coord_map(em, ime);
    Mat cf = coord_map(fm, imf);
    w.x.parts[i] = mul(transpose(imf.basis), ce);
    w.y.parts[i] = mul(transpose(ime.basis), cf);
  }
  if (!w.verify())
    throw std::logic_error("mvn_witness: constructed witness failed verification");
  return w;
}

bool is_module_iso(const Ideal& a, const Ideal& b) {
  require_same_spec(a, b);
  for (size_t i = 0; i < a.spaces.size(); ++i)
    if (a.spaces[i].dim() != b.spaces[i].dim()) return false;
  // witness-backed: rank equality must be certified by an explicit
  // equivalence of the canonical generating idempotents
  auto w = mvn_witness(idempotent_of(a), idempotent_of(b));
  return w && w->verify();
}

AxisChecks axis_checks(const Ideal& a, const Ideal& b, const Ideal& c) {
  AxisChecks ch;
  Ideal jab = join(a, b), jac = join(a, c), jbc = join(b, c);
  Ideal mab = meet(a, b), mac = meet(a, c), mbc = meet(b, c);
  ch.join_ab_eq_ac = (jab == jac);
  ch.join_ab_eq_bc = (jab == jbc);
  ch.meet_ab_eq_ac = (mab == mac);
  ch.meet_ab_eq_bc = (mab == mbc);
  ch.chains_consistent = (jac == jbc) && (mac == mbc);
  return ch;
}

std::optional<PerspectivityAxis> common_complement(const Ideal& a, const Ideal& b) {
  require_same_spec(a, b);
  if (!is_module_iso(a, b)) return std::nullopt;

  if (a == b) {
    // degenerate case: c generating A satisfies every defining equality
    PerspectivityAxis out{idempotent_of(a), {}};
    out.checks = axis_checks(a, b, ideal_of(out.axis));
    if (!out.checks.all())
      throw std::logic_error("common_complement: degenerate axis failed verification");
    return out;
  }

  // Split off the common part: A = e'R (+) gR, B = f'R (+) gR.
  Ideal g = meet(a, b);
  Ideal ep_ideal = relative_complement(g, Ideal::zero(a.spec), a);
  Ideal fp_ideal = relative_complement(g, Ideal::zero(a.spec), b);
  RingElement ep = idempotent_of(ep_ideal);
  RingElement fp = idempotent_of(fp_ideal);

  // Diagonal of the module isomorphism e'R -> f'R is a common complement
  // of e'R and f'R inside e'R (+) f'R.
  auto w = mvn_witness(ep, fp);
  if (!w) throw std::logic_error("common_complement: witness construction failed");
  RingElement diag = ring_add(ep, ring_mul(w->x, ep));

  // Rejoin the common part: pairs (e'R, f'R) via the diagonal and (gR, gR)
  // via gR itself sum to A ~ B with axis diag + g.
  Ideal axis_ideal = join(ideal_of(diag), g);
  PerspectivityAxis out{idempotent_of(axis_ideal), {}};
  out.checks = axis_checks(a, b, ideal_of(out.axis));
  if (!out.checks.all())
    throw std::logic_error("common_complement: constructed axis failed verification");
  return out;
}

bool independent(const std::vector<Ideal>& seq) {
  if (seq.empty()) return true;
  for (size_t n = 0; n + 1 < seq.size(); ++n) {
    Ideal tail = Ideal::zero(seq[n].spec);
    for (size_t k = n + 1; k < seq.size(); ++k) tail = join(tail, seq[k]);
    if (meet(seq[n], tail).height() != 0) return false;
  }
  return true;
}

std::vector<Ideal> all_ideals(const RingSpec& spec, uint64_t budget) {
  uint64_t total = 1;
  for (const auto& c : spec.components) {
    total *= subspace_count(c.n, c.p);
    if (total > budget) throw BudgetExceeded("all_ideals: over budget");
  }
  std::vector<std::vector<Subspace>> per;
  for (const auto& c : spec.components) per.push_back(all_subspaces(c.n, c.p));
  std::vector<Ideal> out;
  std::vector<size_t> idx(per.size(), 0);
  while (true) {
    Ideal i{spec, {}};
    for (size_t c = 0; c < per.size(); ++c) i.spaces.push_back(per[c][idx[c]]);
    out.push_back(std::move(i));
    size_t c = per.size();
    while (c-- > 0) {
      if (++idx[c] < per[c].size()) break;
      idx[c] = 0;
      if (c == 0) return out;
    }
  }
}

bool is_neutral(const Ideal& u, const NeutralityOptions& opts) {
  auto law = [&](const Ideal& x, const Ideal& y) {
    return meet(join(u, x), join(u, y)) == join(u, meet(x, y));
  };
  if (opts.exhaustive) {
    auto ideals = all_ideals(u.spec, opts.budget);
    if (ideals.size() * ideals.size() > opts.budget)
      throw BudgetExceeded("is_neutral: pair count over budget");
    for (const auto& x : ideals)
      for (const auto& y : ideals)
        if (!law(x, y)) return false;
    return true;
  }
  std::mt19937_64 rng(opts.seed);
  for (uint64_t t = 0; t < opts.trials; ++t) {
    Ideal x = ideal_of(sample_element(u.spec, rng));
    Ideal y = ideal_of(sample_element(u.spec, rng));
    if (!law(x, y)) return false;
  }
  return true;
}

}  // namespace persp
