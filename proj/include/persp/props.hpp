#pragma once

#include <string>
#include <vector>

#include "persp/reduction.hpp"

namespace persp {

struct PropReport {
  std::string ring;
  std::string property;
  bool holds = false;
  std::string detail;  // witness or counterexample, serialized
  uint64_t cases = 0;
};

/// Scans pairs with ab = 1 and asserts ba = 1. Exhaustive pair scan when
/// |R|^2 fits the budget, otherwise solves ab = 1 per element.
PropReport is_directly_finite(const RingSpec& spec, uint64_t pair_budget = (1ull << 26));

/// Unit quasi-inverse of a, produced through the reduction certificates.
RingElement unit_quasi_inverse(const RingElement& a);

/// Unit-regularity report for one element; the witness is returned
/// alongside and serialized into the detail field by the CLI layer.
struct UnitRegularReport {
  PropReport report;
  RingElement witness;
};
UnitRegularReport is_unit_regular_element(const RingElement& a);

/// Oracle-grade search: smallest-index unit u with a u a = a found by
/// exhaustive enumeration. Test use only (small rings).
std::optional<RingElement> unit_quasi_inverse_brute(const RingElement& a,
                                                    uint64_t budget = (1ull << 20));

/// Least n >= 1 with a^n in a^(n+1)R and a^n in R a^(n+1), searched up to
/// length(R) + 1 (power images and kernels stabilize by then).
int strong_pi_index(const RingElement& a);

/// Handelman scan: every module-isomorphic idempotent pair has a verified
/// common complement, and every element a verified unit quasi-inverse.
PropReport handelman_scan(const RingSpec& spec);

/// Identity schemes at the stated indices: s_{d-1} s_{d-2} = s_{d-2} and
/// the two power identities with exponent d+1 against d. Requires
/// length(spec) <= d and d >= 2.
PropReport theorem23_check(int d, const std::vector<RingSpec>& specs);

/// Every element has a strong-pi index within the length bound and a
/// verified unit quasi-inverse.
PropReport strong_pi_scan(const RingSpec& spec);

/// For idempotents with eR isomorphic to fR, the complements (1-e)R and
/// (1-f)R are isomorphic as well. Exhaustive.
PropReport ehrlich_check(const RingSpec& spec);

/// Report-only scan of the one-variable chain identity at an index below
/// the guaranteed one; never asserted.
PropReport explore_chain_identity_below(const RingSpec& spec, int d);

}  // namespace persp
