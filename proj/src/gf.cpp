#include "persp/gf.hpp"

#include <algorithm>
#include <cmath>

namespace persp {

bool is_prime(unsigned v) {
  if (v < 2) return false;
  for (unsigned d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

PrimeField::PrimeField(uint16_t modulus) : p(modulus) {
  if (p > 251 || !is_prime(p))
    throw std::invalid_argument("PrimeField: modulus must be prime and <= 251");
}

uint16_t inv_mod(uint16_t a, uint16_t p) {
  a = static_cast<uint16_t>(a % p);
  if (a == 0) throw std::invalid_argument("inv_mod: zero has no inverse");
  // extended Euclid on (a, p)
  int r0 = a, r1 = p, s0 = 1, s1 = 0;
  while (r1 != 0) {
    int q = r0 / r1;
    int r2 = r0 - q * r1;
    int s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  s0 %= p;
  if (s0 < 0) s0 += p;
  return static_cast<uint16_t>(s0);
}

Mat Mat::zero(int r, int c, uint16_t p) {
  Mat m;
  m.rows = r;
  m.cols = c;
  m.p = p;
  m.e.assign(static_cast<size_t>(r) * c, 0);
  return m;
}

Mat Mat::identity(int n, uint16_t p) {
  Mat m = zero(n, n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::unit(int r, int c, uint16_t p, int i, int j) {
  Mat m = zero(r, c, p);
  m.at(i, j) = 1;
  return m;
}

Mat Mat::from_entries(int r, int c, uint16_t p, const std::vector<int>& vals) {
  if (vals.size() != static_cast<size_t>(r) * c)
    throw DimensionMismatch("Mat::from_entries: entry count mismatch");
  Mat m = zero(r, c, p);
  for (size_t i = 0; i < vals.size(); ++i) {
    int v = vals[i] % p;
    if (v < 0) v += p;
    m.e[i] = static_cast<uint8_t>(v);
  }
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(e.begin(), e.end(), [](uint8_t v) { return v == 0; });
}

static void require_same_shape(const Mat& a, const Mat& b) {
  if (a.rows != b.rows || a.cols != b.cols || a.p != b.p)
    throw DimensionMismatch("matrix shape/field mismatch");
}

Mat add(const Mat& a, const Mat& b) {
  require_same_shape(a, b);
  Mat r = a;
  for (size_t i = 0; i < r.e.size(); ++i)
    r.e[i] = static_cast<uint8_t>((a.e[i] + b.e[i]) % a.p);
  return r;
}

Mat sub(const Mat& a, const Mat& b) {
  require_same_shape(a, b);
  Mat r = a;
  for (size_t i = 0; i < r.e.size(); ++i)
    r.e[i] = static_cast<uint8_t>((a.e[i] + a.p - b.e[i]) % a.p);
  return r;
}

Mat neg(const Mat& a) {
  Mat r = a;
  for (auto& v : r.e) v = static_cast<uint8_t>((a.p - v) % a.p);
  return r;
}

Mat mul(const Mat& a, const Mat& b) {
  if (a.cols != b.rows || a.p != b.p)
    throw DimensionMismatch("mul: inner dimension/field mismatch");
  Mat r = Mat::zero(a.rows, b.cols, a.p);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      uint32_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j) {
        uint32_t v = r.at(i, j) + aik * b.at(k, j);
        r.at(i, j) = static_cast<uint8_t>(v % a.p);
      }
    }
  return r;
}

Mat mul_scalar(uint16_t c, const Mat& a) {
  Mat r = a;
  uint32_t cc = c % a.p;
  for (auto& v : r.e) v = static_cast<uint8_t>((cc * v) % a.p);
  return r;
}

Mat transpose(const Mat& a) {
  Mat r = Mat::zero(a.cols, a.rows, a.p);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
  return r;
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows != b.rows || a.p != b.p) throw DimensionMismatch("hstack");
  Mat r = Mat::zero(a.rows, a.cols + b.cols, a.p);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols; ++j) r.at(i, a.cols + j) = b.at(i, j);
  }
  return r;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols != b.cols || a.p != b.p) throw DimensionMismatch("vstack");
  Mat r = Mat::zero(a.rows + b.rows, a.cols, a.p);
  std::copy(a.e.begin(), a.e.end(), r.e.begin());
  std::copy(b.e.begin(), b.e.end(), r.e.begin() + a.e.size());
  return r;
}

Mat mat_pow(const Mat& a, uint64_t k) {
  if (!a.is_square()) throw DimensionMismatch("mat_pow: square required");
  Mat acc = Mat::identity(a.rows, a.p);
  Mat base = a;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return acc;
}

RrefResult rref(const Mat& m) {
  RrefResult out;
  out.reduced = m;
  Mat& a = out.reduced;
  const uint16_t p = a.p;
  int pivot_row = 0;
  for (int col = 0; col < a.cols && pivot_row < a.rows; ++col) {
    int sel = -1;
    for (int i = pivot_row; i < a.rows; ++i)
      if (a.at(i, col) != 0) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != pivot_row)
      for (int j = 0; j < a.cols; ++j) std::swap(a.at(sel, j), a.at(pivot_row, j));
    const uint16_t inv = inv_mod(a.at(pivot_row, col), p);
    for (int j = col; j < a.cols; ++j)
      a.at(pivot_row, j) = static_cast<uint8_t>((a.at(pivot_row, j) * inv) % p);
    for (int i = 0; i < a.rows; ++i) {
      if (i == pivot_row) continue;
      const uint32_t f = a.at(i, col);
      if (f == 0) continue;
      const uint32_t neg_f = (p - f) % p;
      for (int j = col; j < a.cols; ++j) {
        uint32_t v = a.at(i, j) + neg_f * a.at(pivot_row, j);
        a.at(i, j) = static_cast<uint8_t>(v % p);
      }
    }
    out.pivots.push_back(col);
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

std::optional<Mat> solve_right(const Mat& a, const Mat& b) {
  if (a.rows != b.rows || a.p != b.p)
    throw DimensionMismatch("solve_right: row/field mismatch");
  RrefResult r = rref(hstack(a, b));
  // inconsistent if a pivot lands in the b block
  for (int c : r.pivots)
    if (c >= a.cols) return std::nullopt;
  Mat x = Mat::zero(a.cols, b.cols, a.p);
  for (size_t i = 0; i < r.pivots.size(); ++i) {
    const int pc = r.pivots[i];
    for (int j = 0; j < b.cols; ++j)
      x.at(pc, j) = r.reduced.at(static_cast<int>(i), a.cols + j);
  }
  return x;
}

std::optional<Mat> inverse(const Mat& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse: square required");
  RrefResult r = rref(hstack(a, Mat::identity(a.rows, a.p)));
  // invertible iff the pivots are exactly the columns of the a block
  for (int i = 0; i < a.rows; ++i)
    if (static_cast<int>(r.pivots.size()) <= i || r.pivots[i] != i)
      return std::nullopt;
  Mat inv = Mat::zero(a.rows, a.rows, a.p);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.rows; ++j) inv.at(i, j) = r.reduced.at(i, a.cols + j);
  return inv;
}

Subspace Subspace::zero(int ambient, uint16_t p) {
  Subspace s;
  s.ambient = ambient;
  s.p = p;
  s.basis = Mat::zero(0, ambient, p);
  return s;
}

Subspace Subspace::full(int ambient, uint16_t p) {
  Subspace s;
  s.ambient = ambient;
  s.p = p;
  s.basis = Mat::identity(ambient, p);
  return s;
}

Subspace Subspace::row_span(const Mat& rows) {
  RrefResult r = rref(rows);
  Subspace s;
  s.ambient = rows.cols;
  s.p = rows.p;
  s.basis = Mat::zero(r.rank, rows.cols, rows.p);
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < rows.cols; ++j) s.basis.at(i, j) = r.reduced.at(i, j);
  return s;
}

bool Subspace::contains(const Mat& v) const {
  if (v.rows != 1 || v.cols != ambient || v.p != p)
    throw DimensionMismatch("Subspace::contains: bad vector shape");
  if (v.is_zero()) return true;
  Subspace joined = row_span(vstack(basis, v));
  return joined.dim() == dim();
}

Subspace kernel_basis(const Mat& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : r.pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat rows = Mat::zero(static_cast<int>(free_cols.size()), m.cols, m.p);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    const int f = free_cols[k];
    rows.at(static_cast<int>(k), f) = 1;
    for (size_t i = 0; i < r.pivots.size(); ++i) {
      const uint16_t v = r.reduced.at(static_cast<int>(i), f);
      rows.at(static_cast<int>(k), r.pivots[i]) =
          static_cast<uint8_t>((m.p - v) % m.p);
    }
  }
  return Subspace::row_span(rows);
}

Subspace image_basis(const Mat& m) { return Subspace::row_span(transpose(m)); }

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient != v.ambient || u.p != v.p)
    throw DimensionMismatch("subspace_sum: ambient mismatch");
  return Subspace::row_span(vstack(u.basis, v.basis));
}

// Zassenhaus: row reduce [[U,U],[V,0]]; rows whose left half vanished carry
// an intersection basis in the right half.
Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient != v.ambient || u.p != v.p)
    throw DimensionMismatch("subspace_intersect: ambient mismatch");
  const int n = u.ambient;
  Mat top = hstack(u.basis, u.basis);
  Mat bot = hstack(v.basis, Mat::zero(v.dim(), n, v.p));
  RrefResult r = rref(vstack(top, bot));
  std::vector<int> inter_rows;
  for (int i = 0; i < r.rank; ++i)
    if (r.pivots[i] >= n) inter_rows.push_back(i);
  Mat rows = Mat::zero(static_cast<int>(inter_rows.size()), n, u.p);
  for (size_t k = 0; k < inter_rows.size(); ++k)
    for (int j = 0; j < n; ++j)
      rows.at(static_cast<int>(k), j) = r.reduced.at(inter_rows[k], n + j);
  return Subspace::row_span(rows);
}

bool subspace_leq(const Subspace& u, const Subspace& v) {
  if (u.ambient != v.ambient || u.p != v.p)
    throw DimensionMismatch("subspace_leq: ambient mismatch");
  if (u.dim() == 0) return true;
  return Subspace::row_span(vstack(v.basis, u.basis)).dim() == v.dim();
}

Subspace extend_to_complement(const Subspace& u, const Subspace& w) {
  if (!subspace_leq(u, w))
    throw std::invalid_argument("extend_to_complement: u not contained in w");
  Subspace cur = u;
  std::vector<int> picked;
  for (int i = 0; i < w.dim(); ++i) {
    Mat row = Mat::zero(1, w.ambient, w.p);
    for (int j = 0; j < w.ambient; ++j) row.at(0, j) = w.basis.at(i, j);
    if (!cur.contains(row)) {
      picked.push_back(i);
      cur = subspace_sum(cur, Subspace::row_span(row));
    }
  }
  Mat rows = Mat::zero(static_cast<int>(picked.size()), w.ambient, w.p);
  for (size_t k = 0; k < picked.size(); ++k)
    for (int j = 0; j < w.ambient; ++j)
      rows.at(static_cast<int>(k), j) = w.basis.at(picked[k], j);
  return Subspace::row_span(rows);
}

Subspace map_image(const Mat& m, const Subspace& s) {
  if (m.cols != s.ambient || m.p != s.p)
    throw DimensionMismatch("map_image: shape mismatch");
  return Subspace::row_span(mul(s.basis, transpose(m)));
}

Mat inner_inverse(const Mat& a) {
  if (!a.is_square()) throw DimensionMismatch("inner_inverse: square required");
  RrefResult r = rref(a);
  const int n = a.rows;
  const int rk = r.rank;
  if (rk == 0) return Mat::zero(n, n, a.p);
  Mat c = Mat::zero(n, rk, a.p);  // pivot columns of a
  for (int j = 0; j < rk; ++j)
    for (int i = 0; i < n; ++i) c.at(i, j) = a.at(i, r.pivots[j]);
  Mat f = Mat::zero(rk, n, a.p);  // nonzero rows of rref(a)
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < n; ++j) f.at(i, j) = r.reduced.at(i, j);
  auto f_right = solve_right(f, Mat::identity(rk, a.p));
  auto c_left_t = solve_right(transpose(c), Mat::identity(rk, a.p));
  if (!f_right || !c_left_t)
    throw std::logic_error("inner_inverse: rank factorization not invertible");
  return mul(*f_right, transpose(*c_left_t));
}

static void emit_subspaces_for_pivots(int ambient, uint16_t p,
                                      const std::vector<int>& pivots,
                                      std::vector<Subspace>& out) {
  const int r = static_cast<int>(pivots.size());
  std::vector<bool> is_pivot(ambient, false);
  for (int c : pivots) is_pivot[c] = true;
  // free positions: (row i, col j) with j > pivots[i] and j not a pivot
  std::vector<std::pair<int, int>> free_pos;
  for (int i = 0; i < r; ++i)
    for (int j = pivots[i] + 1; j < ambient; ++j)
      if (!is_pivot[j]) free_pos.emplace_back(i, j);
  const size_t nfree = free_pos.size();
  std::vector<uint8_t> assign(nfree, 0);
  while (true) {
    Mat basis = Mat::zero(r, ambient, p);
    for (int i = 0; i < r; ++i) basis.at(i, pivots[i]) = 1;
    for (size_t k = 0; k < nfree; ++k)
      basis.at(free_pos[k].first, free_pos[k].second) = assign[k];
    Subspace s;
    s.ambient = ambient;
    s.p = p;
    s.basis = basis;
    out.push_back(std::move(s));
    // next assignment
    size_t k = 0;
    while (k < nfree) {
      if (++assign[k] < p) break;
      assign[k] = 0;
      ++k;
    }
    if (k == nfree) break;
  }
}

std::vector<Subspace> all_subspaces(int ambient, uint16_t p) {
  std::vector<Subspace> out;
  for (int r = 0; r <= ambient; ++r) {
    // iterate r-subsets of columns in lexicographic order
    std::vector<int> pivots(r);
    for (int i = 0; i < r; ++i) pivots[i] = i;
    while (true) {
      emit_subspaces_for_pivots(ambient, p, pivots, out);
      if (r == 0) break;
      int i = r - 1;
      while (i >= 0 && pivots[i] == ambient - r + i) --i;
      if (i < 0) break;
      ++pivots[i];
      for (int j = i + 1; j < r; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    if (r == 0 && ambient == 0) break;
  }
  return out;
}

uint64_t subspace_count(int ambient, uint16_t p) {
  // Gaussian binomial sum, small sizes only
  uint64_t total = 0;
  for (int r = 0; r <= ambient; ++r) {
    // [ambient choose r]_p
    long double num = 1, den = 1;
    for (int i = 0; i < r; ++i) {
      num *= (powl(p, ambient - i) - 1);
      den *= (powl(p, i + 1) - 1);
    }
    total += static_cast<uint64_t>(num / den + 0.5L);
  }
  return total;
}

}  // namespace persp
