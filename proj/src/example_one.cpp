#include "persp/example_one.hpp"

#include <sstream>

#include "persp/reduction.hpp"

namespace persp {

namespace {

Mat row_of(const Subspace& s, int i) {
  Mat r = Mat::zero(1, s.ambient, s.p);
  for (int j = 0; j < s.ambient; ++j) r.at(0, j) = s.basis.at(i, j);
  return r;
}

/// All vectors of s in coefficient-lexicographic order (nonzero ones).
std::vector<Mat> vectors_of(const Subspace& s) {
  std::vector<Mat> out;
  uint64_t total = 1;
  for (int i = 0; i < s.dim(); ++i) total *= s.p;
  for (uint64_t idx = 1; idx < total; ++idx) {
    Mat coeff = Mat::zero(1, s.dim(), s.p);
    uint64_t t = idx;
    for (int k = s.dim(); k-- > 0;) {
      coeff.at(0, k) = static_cast<uint8_t>(t % s.p);
      t /= s.p;
    }
    out.push_back(mul(coeff, s.basis));
  }
  return out;
}

struct BuildState {
  uint16_t p;
  std::vector<ExampleOneInstance::Level> levels;
};

/// Linear map fixed by images on a basis: columns of t are the basis, the
/// matching columns of img their images.
Mat map_from_action(const Mat& t_cols, const Mat& img_cols) {
  auto tinv = inverse(t_cols);
  if (!tinv) throw std::logic_error("map_from_action: basis not invertible");
  return mul(img_cols, *tinv);
}

Mat col(const Mat& row) { return transpose(row); }

/// Dimension-3 seed for targets (b1, b2): v3 spans their meet, v1 and v2
/// canonical complements; a: v1 -> v2 -> 0, v3 -> v3 - v2 and
/// a+: v2 -> v1 -> 0, v3 -> v1 + v3.
std::pair<Mat, Mat> build_base(const Subspace& b1, const Subspace& b2,
                               BuildState& st) {
  Subspace inter = subspace_intersect(b1, b2);
  if (inter.dim() != 1)
    throw std::logic_error("build_base: targets must meet in a line");
  Mat v3 = row_of(inter, 0);
  Mat v1 = row_of(extend_to_complement(inter, b1), 0);
  Mat v2 = row_of(extend_to_complement(inter, b2), 0);
  st.levels.push_back({3, v1, v2, v3});

  Mat t = hstack(hstack(col(v1), col(v2)), col(v3));
  Mat zero_col = Mat::zero(b1.ambient, 1, st.p);
  Mat a = map_from_action(
      t, hstack(hstack(col(v2), zero_col), col(sub(v3, v2))));
  Mat ap = map_from_action(
      t, hstack(hstack(zero_col, col(v1)), col(add(v1, v3))));
  return {a, ap};
}

Mat delete_coordinate(const Mat& rows, int j) {
  Mat out = Mat::zero(rows.rows, rows.cols - 1, rows.p);
  for (int i = 0; i < rows.rows; ++i)
    for (int c = 0, w = 0; c < rows.cols; ++c)
      if (c != j) out.at(i, w++) = rows.at(i, c);
  return out;
}

Mat insert_coordinate(const Mat& rows, int j) {
  Mat out = Mat::zero(rows.rows, rows.cols + 1, rows.p);
  for (int i = 0; i < rows.rows; ++i)
    for (int c = 0, w = 0; c < rows.cols + 1; ++c)
      if (c != j) out.at(i, c) = rows.at(i, w++);
  return out;
}

/// Recursive construction for targets (v1sp, v2sp) in dimension d: pick the
/// canonical coordinate hyperplane W missing part of the meet, build on W,
/// then extend by v1 -> v2 -> 0 (and v2 -> v1 -> 0 for the inverse side).
std::pair<Mat, Mat> build_recursive(int d, const Subspace& v1sp,
                                    const Subspace& v2sp, BuildState& st) {
  if (d == 3) return build_base(v1sp, v2sp, st);
  const uint16_t p = st.p;
  Subspace inter = subspace_intersect(v1sp, v2sp);

  // W = coordinate hyperplane on the last coordinate where the meet has a
  // nonzero entry, so that the meet is not inside W
  int j = -1;
  for (int c = d - 1; c >= 0 && j < 0; --c)
    for (int i = 0; i < inter.dim(); ++i)
      if (inter.basis.at(i, c)) { j = c; break; }
  if (j < 0) throw std::logic_error("build_recursive: degenerate meet");
  Mat wrows = Mat::zero(d - 1, d, p);
  for (int i = 0, r = 0; i < d; ++i)
    if (i != j) { wrows.at(r, i) = 1; ++r; }
  Subspace w = Subspace::row_span(wrows);

  Subspace w1 = subspace_intersect(w, v1sp);
  Subspace w2 = subspace_intersect(w, v2sp);
  Subspace w1_sub = Subspace::row_span(delete_coordinate(w1.basis, j));
  Subspace w2_sub = Subspace::row_span(delete_coordinate(w2.basis, j));
  auto [a0, a0p] = build_recursive(d - 1, w1_sub, w2_sub, st);

  // v3: first meet basis vector outside W (bookkeeping)
  Mat v3 = Mat::zero(1, d, p);
  for (int i = 0; i < inter.dim(); ++i)
    if (inter.basis.at(i, j)) { v3 = row_of(inter, i); break; }

  // canonical v1 in V1 \ (W u V2), v2 in V2 \ (W u V1)
  auto pick = [&](const Subspace& from, const Subspace& avoid) {
    for (const Mat& v : vectors_of(from))
      if (!w.contains(v) && !avoid.contains(v)) return v;
    throw std::logic_error("build_recursive: no extension vector");
  };
  Mat v1 = pick(v1sp, v2sp);
  Mat v2 = pick(v2sp, v1sp);
  st.levels.push_back({d, v1, v2, v3});

  // images of the W1/W2 bases under the lifted sub-instance maps
  Mat w1_img = insert_coordinate(mul(delete_coordinate(w1.basis, j), transpose(a0)), j);
  Mat w2_img = insert_coordinate(mul(delete_coordinate(w2.basis, j), transpose(a0p)), j);

  Mat zero_col = Mat::zero(d, 1, p);
  Mat a = map_from_action(
      hstack(hstack(transpose(w1.basis), col(v1)), col(v2)),
      hstack(hstack(transpose(w1_img), col(v2)), zero_col));
  Mat ap = map_from_action(
      hstack(hstack(transpose(w2.basis), col(v2)), col(v1)),
      hstack(hstack(transpose(w2_img), col(v1)), zero_col));
  return {a, ap};
}

void verify_instance_invariants(const ExampleOneInstance& inst) {
  const Mat& a = inst.a;
  const Mat& ap = inst.a_plus;
  if (mul(mul(a, ap), a) != a || mul(mul(ap, a), ap) != ap)
    throw std::logic_error("example instance: pair is not mutually reflexive");
  if (image_basis(ap) != inst.v1_space || image_basis(a) != inst.v2_space)
    throw std::logic_error("example instance: image subspaces are off");
  // a restricts to an isomorphism V1 -> V2
  Subspace im_v1 = map_image(a, inst.v1_space);
  if (im_v1 != inst.v2_space || im_v1.dim() != inst.v1_space.dim())
    throw std::logic_error("example instance: restriction is not an isomorphism");
}

}  // namespace

ExampleOneInstance build_example1(int n, uint16_t p) {
  if (n < 0) throw std::invalid_argument("build_example1: n >= 0");
  PrimeField field(p);
  const int d = n + 3;
  // canonical targets: V1 = {x_1 = 0}, V2 = {x_0 = 0}
  Mat b1 = Mat::zero(d - 1, d, p), b2 = Mat::zero(d - 1, d, p);
  for (int i = 0, r = 0; i < d; ++i)
    if (i != 1) { b1.at(r, i) = 1; ++r; }
  for (int i = 0, r = 0; i < d; ++i)
    if (i != 0) { b2.at(r, i) = 1; ++r; }
  ExampleOneInstance inst;
  inst.n = n;
  inst.dim = d;
  inst.p = p;
  inst.v1_space = Subspace::row_span(b1);
  inst.v2_space = Subspace::row_span(b2);
  BuildState st{p, {}};
  auto [a, ap] = build_recursive(d, inst.v1_space, inst.v2_space, st);
  inst.a = std::move(a);
  inst.a_plus = std::move(ap);
  inst.levels = std::move(st.levels);
  verify_instance_invariants(inst);
  return inst;
}

ExampleOneInstance build_deep_descent(int n, uint16_t p) {
  if (n < 0) throw std::invalid_argument("build_deep_descent: n >= 0");
  PrimeField field(p);
  const int d = (1 << (n + 1)) + 1;
  ExampleOneInstance inst;
  inst.n = n;
  inst.dim = d;
  inst.p = p;
  inst.a = Mat::zero(d, d, p);
  for (int i = 0; i + 1 < d; ++i) inst.a.at(i + 1, i) = 1;
  inst.a_plus = transpose(inst.a);
  Mat b1 = Mat::zero(d - 1, d, p), b2 = Mat::zero(d - 1, d, p);
  for (int i = 0; i + 1 < d; ++i) b1.at(i, i) = 1;
  for (int i = 0; i + 1 < d; ++i) b2.at(i, i + 1) = 1;
  inst.v1_space = Subspace::row_span(b1);
  inst.v2_space = Subspace::row_span(b2);
  verify_instance_invariants(inst);
  return inst;
}

PropReport verify_descent_instance(const ExampleOneInstance& inst) {
  PropReport rep{"M" + std::to_string(inst.dim) + "(F" + std::to_string(inst.p) + ")",
                 "descent_instance", true, "", 0};
  RingSpec spec = RingSpec::single(inst.dim, inst.p);
  RingElement a{spec, {inst.a}};
  RingElement b{spec, {inst.a_plus}};
  ReductionTrace trace = run_reduction(a, b);
  rep.cases = trace.steps.size();

  std::ostringstream detail;
  detail << "heights";
  for (const auto& s : trace.steps) detail << " " << s.mid_height;

  bool strict = static_cast<int>(trace.steps.size()) > inst.n + 1;
  for (int k = 0; strict && k <= inst.n; ++k)
    strict = trace.steps[k].mid_height > trace.steps[k + 1].mid_height;
  if (!strict) {
    rep.holds = false;
    detail << "; chain fails to drop strictly through step " << inst.n + 1;
  }
  if (trace.status != ReductionStatus::Stabilized) {
    rep.holds = false;
    detail << "; no stabilization";
  } else {
    if (trace.stabilized_at > inst.dim) {
      rep.holds = false;
      detail << "; stabilized too late";
    }
    Certificate axis = axis_witness(a, b, trace);
    Certificate unit = unit_witness(a, b, trace);
    if (!verify_certificate(a, b, axis) || !verify_certificate(a, b, unit)) {
      rep.holds = false;
      detail << "; certificate failed";
    } else {
      detail << "; stabilized at " << trace.stabilized_at
             << ", certificates verified";
    }
  }
  rep.detail = detail.str();
  return rep;
}

PropReport verify_example1(int n, uint16_t p) {
  PropReport rep = verify_descent_instance(build_example1(n, p));
  rep.property = "example1";
  return rep;
}

PropReport verify_deep_descent(int n, uint16_t p) {
  PropReport rep = verify_descent_instance(build_deep_descent(n, p));
  rep.property = "deep_descent";
  return rep;
}

}  // namespace persp
