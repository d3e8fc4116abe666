#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "persp/ring.hpp"

namespace persp {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        position(pos) {}
};

struct UnboundVariable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class TermKind { Var, Zero, One, Add, Neg, Mul, QuasiInv };

/// Immutable syntax tree node for the language of rings with a basic
/// quasi-inversion operation. Subterms are shared, so repeated use of a
/// builder output forms a DAG and evaluation memoizes on node identity.
struct Term {
  TermKind kind;
  std::string var;  // Var only
  std::shared_ptr<const Term> lhs, rhs;
};

using TermPtr = std::shared_ptr<const Term>;

TermPtr t_var(const std::string& name);
TermPtr t_zero();
TermPtr t_one();
TermPtr t_add(TermPtr a, TermPtr b);
TermPtr t_sub(TermPtr a, TermPtr b);
TermPtr t_neg(TermPtr a);
TermPtr t_mul(TermPtr a, TermPtr b);
TermPtr t_quasi(TermPtr a);
/// x^k by repeated squaring; k = 0 gives 1.
TermPtr t_pow(TermPtr a, uint64_t k);

/// x+ = x' x x', a reflexive inverse of x.
TermPtr reflexive_term(TermPtr x);
/// gamma(x) = x x+, an idempotent generating the same right ideal as x.
TermPtr range_idempotent_term(TermPtr x);

/// Binary terms realizing the ideal-lattice operations: the results are
/// idempotent and generate xR + yR, xR inter yR, and a direct-summand
/// witness (x given as an idempotent e with gR <= eR for ominus).
TermPtr join_term(TermPtr x, TermPtr y);
TermPtr meet_term(TermPtr x, TermPtr y);
TermPtr ominus_term(TermPtr e, TermPtr g);

/// Descending-chain meet term in x, y. Index 0 is (yx) meet (xy); step
/// n+1 is (y^(2^n) t_n) meet (x^(2^n) t_n). At a mutually reflexive pair
/// its ideal equals the n-th meet of the reduction chain.
TermPtr descent_term(int n);
TermPtr descent_term_on(int n, TermPtr x, TermPtr y);
/// One-variable variant with y = x+.
TermPtr self_descent_term(int n);

std::vector<std::string> free_vars(const TermPtr& t);

using Env = std::map<std::string, RingElement>;

/// Structural evaluation; QuasiInv nodes use the canonical quasi-inverse.
RingElement eval(const TermPtr& t, const RingSpec& spec, const Env& env);
/// Convenience overload; the ring is taken from the first binding.
RingElement eval(const TermPtr& t, const Env& env);

/// Surface syntax: variables, 0, 1, binary + - *, postfix ' (quasi-inverse)
/// and ^k, macros plus(t), gamma(t), join(s,t), meet(s,t), ominus(s,t),
/// t[n](s,u), s[n](u).
TermPtr parse_term(const std::string& src);

enum class CheckMode { Exhaustive, Sampled };

struct Verdict {
  bool holds = true;
  std::optional<Env> counterexample;
  uint64_t cases_checked = 0;
  CheckMode mode = CheckMode::Exhaustive;
};

/// Checks lhs = rhs over every assignment (exhaustive; first failing
/// assignment in enumeration order is reported) or over `budget` seeded
/// random assignments.
Verdict check_identity(const RingSpec& spec, const TermPtr& lhs,
                       const TermPtr& rhs, CheckMode mode,
                       uint64_t budget = (1ull << 24), uint64_t seed = 1);

std::string term_to_string(const TermPtr& t);

}  // namespace persp
