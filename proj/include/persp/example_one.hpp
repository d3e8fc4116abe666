#pragma once

#include <array>
#include <vector>

#include "persp/props.hpp"

namespace persp {

/// Endomorphism pair with prescribed codimension-1 images V1 = im a_plus,
/// V2 = im a, mutually reflexive, with a restricting to an isomorphism
/// V1 -> V2. Carrier of the delayed-stabilization witnesses.
struct ExampleOneInstance {
  int n = 0;          // depth parameter
  int dim = 3;        // ambient dimension
  uint16_t p = 2;
  Mat a, a_plus;
  Subspace v1_space;  // im a_plus
  Subspace v2_space;  // im a
  /// Per recursion level (dimension 3 upward): the chosen v1, v2, v3 row
  /// vectors embedded in the full ambient space. Empty for the shift family.
  struct Level {
    int dim;
    Mat v1, v2, v3;
  };
  std::vector<Level> levels;
};

/// The dimension-(n+3) recursive construction: a three-dimensional seed
/// (v1 -> v2 -> 0, v3 -> v3 - v2) extended one codimension-1 layer per
/// level with canonical vector choices. All structural invariants are
/// verified before returning.
///
/// Note: the meet chain of these instances drops once and then freezes
/// for n >= 1; in dimension 4 a one-dimensional chain meet is always
/// fixed by the section isomorphism (see verify_example1), so no
/// dimension-(n+3) pair can descend n+1 times. build_deep_descent gives
/// the family that genuinely reaches depth n.
ExampleOneInstance build_example1(int n, uint16_t p);

/// Shift pair on dimension 2^(n+1) + 1: a maps e_i to e_{i+1} (killing the
/// last basis vector), a_plus is its transpose. The squared section maps
/// shrink the chain meet window by 2^k per side, so the meet heights are
/// dim - 2^(k+1) clamped at zero: exactly n+1 strict drops, stabilizing at
/// step n+1 with verified certificates.
ExampleOneInstance build_deep_descent(int n, uint16_t p);

/// Reduction-level verdict for an instance: structural invariants, strict
/// drops g_0 > ... > g_{n+1}, stabilization and certificate checks.
PropReport verify_descent_instance(const ExampleOneInstance& inst);

/// verify for build_example1(n, p); holds only for n = 0 (see above).
PropReport verify_example1(int n, uint16_t p);

/// verify for build_deep_descent(n, p); holds for every n.
PropReport verify_deep_descent(int n, uint16_t p);

}  // namespace persp
