#pragma once

#include <optional>
#include <string>
#include <vector>

#include "persp/ideal.hpp"

namespace persp {

enum class SampleMode { Constructive, Rejection };

/// Configuration for a lattice-law suite run over the subspace lattice of
/// GF(p)^dim (the ideal lattice of M_dim(GF(p))).
struct LawConfig {
  int dim = 4;
  uint16_t p = 2;
  uint64_t trials = 1000;
  uint64_t seed = 1;
  SampleMode mode = SampleMode::Constructive;
};

struct LawVerdict {
  std::string law;
  uint64_t passed = 0;
  uint64_t failed = 0;
  std::string first_failure;  // serialized configuration, empty when clean
  bool ok() const { return failed == 0 && passed > 0; }
};

/// Interval product embedding: (x, y) -> x + y maps [ab,a] x [ab,b] into
/// [ab, a+b] with x + y = (x+b)(y+a), and the components are recoverable.
LawVerdict check_fact1(const LawConfig& cfg);

/// Summing perspectivities: a_i ~_{c_i} b_i with the pair spans meeting
/// inside all four elements gives a_1+a_2 ~_{c_1+c_2} b_1+b_2.
LawVerdict check_fact2(const LawConfig& cfg);

/// Complement transfer: with a = x (+) ab and b = y (+) ab one has
/// a ~ b iff x ~ y, and a (+) y = a + b = b (+) x.
LawVerdict check_fact3a(const LawConfig& cfg);

/// If z = x (+) y, w = u (+) v and zw = xu then yv = 0; when moreover
/// x ~ u and y ~ v, also z ~ w.
LawVerdict check_lemma4(const LawConfig& cfg);

/// a ~ b and d = (a+d)(b+d) jointly imply a+d ~ b+d.
LawVerdict check_lemma5(const LawConfig& cfg);

/// For section isomorphisms induced by a mutually reflexive pair:
/// inv(g) meet img(g) <= g, with equality iff img(g) = g.
LawVerdict check_observation(const LawConfig& cfg);

/// Section-isomorphism reduction: if the meet is fixed (or its two images
/// are perspective) then the endpoints are perspective.
LawVerdict check_lemma6(const LawConfig& cfg);

/// Independent sums of meet-zero perspective pairs are perspective with
/// meet zero.
LawVerdict check_fact5a(const LawConfig& cfg);

/// Reflexive-inverse facts: ab, ba idempotent; f a e = a, e b f = b; two
/// reflexive inverses generate perspective ideals connected by x -> cax.
/// trials = 0 scans the whole ring.
LawVerdict check_ring_facts(const RingSpec& spec, uint64_t trials, uint64_t seed);

/// Dispatch by suite name: fact1, fact2, fact3a, fact5a, lemma4, lemma5,
/// observation, lemma6, ringfacts.
LawVerdict run_suite(const std::string& name, const LawConfig& cfg);

std::vector<std::string> suite_names();

}  // namespace persp
