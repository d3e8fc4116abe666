#pragma once

#include <optional>
#include <string>
#include <vector>

#include "persp/ring.hpp"

namespace persp {

/// Principal right ideal of a product-of-matrix-rings element, stored as
/// one column space per component in canonical (RREF) form. Equality of
/// ideals is structural equality of the representation.
struct Ideal {
  RingSpec spec;
  std::vector<Subspace> spaces;

  static Ideal zero(const RingSpec& spec);
  static Ideal full(const RingSpec& spec);
  int height() const;

  friend bool operator==(const Ideal&, const Ideal&) = default;
};

/// The principal right ideal aR: per-component column space.
Ideal ideal_of(const RingElement& a);

Ideal meet(const Ideal& a, const Ideal& b);
Ideal join(const Ideal& a, const Ideal& b);
bool leq(const Ideal& a, const Ideal& b);

/// Image ideal a*X = { a x r }: per-component image of the column space.
Ideal apply(const RingElement& a, const Ideal& x);

/// Canonical complement: X with A + X = full, A inter X = 0.
Ideal complement(const Ideal& a);
/// For lo <= A <= hi: X with A inter X = lo and A + X = hi.
Ideal relative_complement(const Ideal& a, const Ideal& lo, const Ideal& hi);

/// Canonical idempotent with the given ideal: per component, the projection
/// onto the column space along its canonical complement.
RingElement idempotent_of(const Ideal& a);

/// Murray-von Neumann equivalence witness for idempotents e, f:
/// e = y x, f = x y, f x e = x, e y f = y.
struct MvnWitness {
  RingElement x, y, e, f;
  bool verify() const;
};

/// Basis-matching construction: maps a canonical basis of im(e) onto one of
/// im(f) and kills the canonical complement. Fails (nullopt) when component
/// ranks differ.
std::optional<MvnWitness> mvn_witness(const RingElement& e, const RingElement& f);

/// True iff eR and fR are isomorphic right modules. Rank equality is the
/// criterion, but the answer is backed by an explicit witness.
bool is_module_iso(const Ideal& a, const Ideal& b);

/// The recorded defining equalities of a common-complement axis c for
/// (A, B): the join chain A+B = A+C = B+C and meet chain AB = AC = BC.
struct AxisChecks {
  bool join_ab_eq_ac = false;
  bool join_ab_eq_bc = false;
  bool meet_ab_eq_ac = false;
  bool meet_ab_eq_bc = false;
  bool chains_consistent = false;  // A+C = B+C and AC = BC
  bool all() const {
    return join_ab_eq_ac && join_ab_eq_bc && meet_ab_eq_ac && meet_ab_eq_bc &&
           chains_consistent;
  }
};

struct PerspectivityAxis {
  RingElement axis;
  AxisChecks checks;
};

AxisChecks axis_checks(const Ideal& a, const Ideal& b, const Ideal& c);

/// Constructs an axis c with A ~_c B, or nullopt when heights differ in
/// some component. For A = B the canonical answer is c with cR = A. All
/// recorded equalities are verified before returning.
std::optional<PerspectivityAxis> common_complement(const Ideal& a, const Ideal& b);

/// Independence: every prefix element meets the join of its successors
/// trivially.
bool independent(const std::vector<Ideal>& seq);

struct NeutralityOptions {
  bool exhaustive = true;
  uint64_t budget = (1ull << 22);  // max ideal pairs in exhaustive mode
  uint64_t trials = 4096;          // sampled mode
  uint64_t seed = 1;
};

/// Neutrality of u: (u+x)(u+y) = u + xy over ideal pairs.
bool is_neutral(const Ideal& u, const NeutralityOptions& opts = {});

/// Every ideal of L(R), as the product of per-component subspace
/// enumerations. Throws BudgetExceeded when the count passes the budget.
std::vector<Ideal> all_ideals(const RingSpec& spec, uint64_t budget = (1ull << 22));

}  // namespace persp
