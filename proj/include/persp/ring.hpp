#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "persp/gf.hpp"

namespace persp {

struct SpecMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// One factor M_n(GF(p)) of a finite regular ring.
struct RingComponent {
  int n;
  uint16_t p;
  friend bool operator==(const RingComponent&, const RingComponent&) = default;
};

/// A finite product of full matrix rings over prime fields. Every finite
/// regular ring needed by the checks embeds in one of these, and its
/// lattice of principal right ideals is a product of subspace lattices.
struct RingSpec {
  std::vector<RingComponent> components;

  static RingSpec single(int n, uint16_t p) { return RingSpec{{{n, p}}}; }
  void validate() const;
  /// Length of the ring = height of its ideal lattice = sum of the n_i.
  int length() const;
  size_t count() const { return components.size(); }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Ring element: one matrix per product component.
struct RingElement {
  RingSpec spec;
  std::vector<Mat> parts;

  friend bool operator==(const RingElement&, const RingElement&) = default;
};

RingElement ring_zero(const RingSpec& spec);
RingElement ring_one(const RingSpec& spec);
RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_sub(const RingElement& a, const RingElement& b);
RingElement ring_neg(const RingElement& a);
RingElement ring_mul(const RingElement& a, const RingElement& b);
RingElement ring_pow(const RingElement& a, uint64_t k);

/// Canonical single-valued quasi-inversion: a * q * a = a componentwise.
RingElement quasi_inverse(const RingElement& a);

/// Reflexive (generalized) inverse b = q a q: a b a = a and b a b = b.
RingElement reflexive_inverse(const RingElement& a);

/// Idempotent generating the same principal right ideal as a.
RingElement range_idempotent(const RingElement& a);

bool is_idempotent(const RingElement& a);
bool is_unit(const RingElement& a);
std::optional<RingElement> unit_inverse(const RingElement& a);

/// Total number of ring elements; throws BudgetExceeded past the budget.
uint64_t element_count(const RingSpec& spec, uint64_t budget = (1ull << 24));

/// The index-th element in the deterministic enumeration order:
/// lexicographic on concatenated row-major entry tuples, component-major,
/// with the last entry varying fastest.
RingElement element_at(const RingSpec& spec, uint64_t index);

/// Uniform random element (componentwise uniform entries).
RingElement sample_element(const RingSpec& spec, std::mt19937_64& rng);
RingElement sample_element_seeded(const RingSpec& spec, uint64_t seed);

/// Corner ring eRe of an idempotent e: membership predicate plus the
/// induced unit e; arithmetic is inherited from the ambient ring.
struct CornerView {
  RingElement e;
  bool contains(const RingElement& x) const;
  const RingElement& unit() const { return e; }
};

CornerView corner_view(const RingElement& e);

}  // namespace persp
