#pragma once

#include <map>
#include <string>
#include <vector>

#include "persp/ideal.hpp"
#include "persp/term.hpp"

namespace persp {

struct NotMutuallyReflexive : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotStabilized : std::logic_error {
  using std::logic_error::logic_error;
};

/// One step of the descending reduction chain. `left` and `right` are the
/// idempotents carrying the two chains, `mid` the idempotent generating
/// their ideal meet. JSON emits these under the keys "e", "f", "g".
struct ReductionStep {
  int n = 0;
  RingElement left, right, mid;
  int left_height = 0, right_height = 0, mid_height = 0;
};

enum class ReductionStatus { Stabilized, Exhausted };

/// The full reduction run for a mutually reflexive pair (a, b): step 0
/// starts from ba and ab; step n+1 multiplies the meet by b^(2^n) and
/// a^(2^n) and re-projects. The chain of meet ideals descends strictly
/// until it repeats, which in a finite ring happens within height(g_0)+1
/// steps; the trace always includes the confirming step.
struct ReductionTrace {
  RingElement a, b;
  std::vector<ReductionStep> steps;
  ReductionStatus status = ReductionStatus::Exhausted;
  int stabilized_at = -1;

  const ReductionStep& step(int n) const { return steps.at(static_cast<size_t>(n)); }
  /// Meet ideal at index n; constant after stabilization.
  Ideal mid_ideal(int n) const;
};

std::pair<RingElement, RingElement> make_reflexive_pair(const RingElement& a);

/// max_steps < 0 means length(R) + 1.
ReductionTrace run_reduction(const RingElement& a, const RingElement& b,
                             int max_steps = -1);

/// Complements x_n of (e_{n+1} + g_n) inside e_n and their images
/// y_n, for n <= m where m is the stabilization index.
struct IndependentDecomposition {
  int m = 0;
  std::vector<RingElement> left;   // x_n
  std::vector<RingElement> right;  // y_n
};

IndependentDecomposition independent_decomposition(const ReductionTrace& trace);

enum class CertificateKind { Axis, Unit };

/// A checkable witness: the axis element c with bR ~_c aR, or a unit u
/// with a u a = a. `verified` records the re-checked defining equalities.
struct Certificate {
  CertificateKind kind = CertificateKind::Axis;
  RingElement payload;
  std::map<std::string, bool> verified;
  bool ok() const;
};

/// Perspectivity axis for (bR, aR); requires a stabilized trace.
Certificate axis_witness(const RingElement& a, const RingElement& b,
                         const ReductionTrace& trace);

/// Unit quasi-inverse u with a u a = a, assembled from the module
/// automorphism that swaps the complementary summands of ba and ab and
/// fixes a complement of their join; requires a stabilized trace.
Certificate unit_witness(const RingElement& a, const RingElement& b,
                         const ReductionTrace& trace);

/// Recomputes every defining equality from scratch; certificates are
/// never trusted.
bool verify_certificate(const RingElement& a, const RingElement& b,
                        const Certificate& cert);

}  // namespace persp
