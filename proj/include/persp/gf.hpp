#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace persp {

/// Error raised when an exhaustive scan would exceed its configured budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

bool is_prime(unsigned v);

/// Prime field GF(p), p <= 251. Residues are stored as uint8_t.
struct PrimeField {
  uint16_t p;
  explicit PrimeField(uint16_t modulus);
  friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

/// Multiplicative inverse mod p (p prime, a != 0 mod p).
uint16_t inv_mod(uint16_t a, uint16_t p);

/// Dense matrix over GF(p), row-major entries, exact arithmetic.
struct Mat {
  int rows = 0;
  int cols = 0;
  uint16_t p = 2;
  std::vector<uint8_t> e;

  static Mat zero(int r, int c, uint16_t p);
  static Mat identity(int n, uint16_t p);
  /// Matrix unit with a single 1 at (i, j), zero-based.
  static Mat unit(int r, int c, uint16_t p, int i, int j);
  /// Builds from integer entries, reducing mod p (negatives allowed).
  static Mat from_entries(int r, int c, uint16_t p, const std::vector<int>& vals);

  uint8_t& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
  uint8_t at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }
  bool is_zero() const;
  bool is_square() const { return rows == cols; }

  friend bool operator==(const Mat&, const Mat&) = default;
};

Mat add(const Mat& a, const Mat& b);
Mat sub(const Mat& a, const Mat& b);
Mat neg(const Mat& a);
Mat mul(const Mat& a, const Mat& b);
Mat mul_scalar(uint16_t c, const Mat& a);
Mat transpose(const Mat& a);
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat mat_pow(const Mat& a, uint64_t k);

struct RrefResult {
  Mat reduced;
  int rank = 0;
  std::vector<int> pivots;  // pivot column per nonzero row
};

/// Unique reduced row echelon form.
RrefResult rref(const Mat& m);

/// Canonical solution x of a*x = b (free variables zero), or nullopt.
std::optional<Mat> solve_right(const Mat& a, const Mat& b);

std::optional<Mat> inverse(const Mat& a);

/// Subspace of GF(p)^ambient, stored as an RREF row basis. The RREF
/// basis is a canonical representative, so equality is structural.
struct Subspace {
  int ambient = 0;
  uint16_t p = 2;
  Mat basis;  // dim x ambient, reduced row echelon form, no zero rows

  static Subspace zero(int ambient, uint16_t p);
  static Subspace full(int ambient, uint16_t p);
  /// Canonicalizes an arbitrary spanning set of row vectors.
  static Subspace row_span(const Mat& rows);

  int dim() const { return basis.rows; }
  /// Membership test for a 1 x ambient row vector.
  bool contains(const Mat& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
};

/// Null space of m, as a subspace of GF(p)^cols.
Subspace kernel_basis(const Mat& m);
/// Column space of m, as a subspace of GF(p)^rows.
Subspace image_basis(const Mat& m);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
bool subspace_leq(const Subspace& u, const Subspace& v);

/// For u <= w, returns x with u + x = w and u inter x = 0, chosen greedily
/// over w's canonical basis order.
Subspace extend_to_complement(const Subspace& u, const Subspace& w);

/// Image {m v : v in s} of a subspace under left multiplication.
Subspace map_image(const Mat& m, const Subspace& s);

/// Canonical inner inverse: returns g with a*g*a = a, built from the rank
/// factorization a = C*F (C = pivot columns, F = nonzero rref rows) with
/// all free solver parameters zero. inner_inverse(0) = 0 and
/// inner_inverse(a) = a^-1 for invertible a.
Mat inner_inverse(const Mat& a);

/// Every subspace of GF(p)^ambient exactly once, enumerated by rank,
/// pivot set, then free entries; deterministic order.
std::vector<Subspace> all_subspaces(int ambient, uint16_t p);

/// Number of subspaces of GF(p)^ambient (sum of Gaussian binomials).
uint64_t subspace_count(int ambient, uint16_t p);

}  // namespace persp
