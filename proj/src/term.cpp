#include "persp/term.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_map>

namespace persp {

static TermPtr make(TermKind k, std::string var, TermPtr l, TermPtr r) {
  auto t = std::make_shared<Term>();
  t->kind = k;
  t->var = std::move(var);
  t->lhs = std::move(l);
  t->rhs = std::move(r);
  return t;
}

TermPtr t_var(const std::string& name) { return make(TermKind::Var, name, nullptr, nullptr); }
TermPtr t_zero() { return make(TermKind::Zero, "", nullptr, nullptr); }
TermPtr t_one() { return make(TermKind::One, "", nullptr, nullptr); }
TermPtr t_add(TermPtr a, TermPtr b) { return make(TermKind::Add, "", std::move(a), std::move(b)); }
TermPtr t_neg(TermPtr a) { return make(TermKind::Neg, "", std::move(a), nullptr); }
TermPtr t_sub(TermPtr a, TermPtr b) { return t_add(std::move(a), t_neg(std::move(b))); }
TermPtr t_mul(TermPtr a, TermPtr b) { return make(TermKind::Mul, "", std::move(a), std::move(b)); }
TermPtr t_quasi(TermPtr a) { return make(TermKind::QuasiInv, "", std::move(a), nullptr); }

TermPtr t_pow(TermPtr a, uint64_t k) {
  if (k == 0) return t_one();
  TermPtr acc = nullptr;
  TermPtr base = std::move(a);
  while (k > 0) {
    if (k & 1) acc = acc ? t_mul(acc, base) : base;
    k >>= 1;
    if (k > 0) base = t_mul(base, base);
  }
  return acc;
}

TermPtr reflexive_term(TermPtr x) {
  TermPtr q = t_quasi(x);
  return t_mul(t_mul(q, x), q);
}

TermPtr range_idempotent_term(TermPtr x) { return t_mul(x, reflexive_term(x)); }

TermPtr join_term(TermPtr x, TermPtr y) {
  // f = gamma(x), g = gamma((1-f) y); join = f + g (1-f)
  TermPtr f = range_idempotent_term(std::move(x));
  TermPtr one_minus_f = t_sub(t_one(), f);
  TermPtr g = range_idempotent_term(t_mul(one_minus_f, std::move(y)));
  return t_add(f, t_mul(g, one_minus_f));
}

TermPtr meet_term(TermPtr x, TermPtr y) {
  // c = (1-gamma(x)) y; meet = gamma(y (1 - c+ c))
  TermPtr c = t_mul(t_sub(t_one(), range_idempotent_term(std::move(x))), y);
  TermPtr cpc = t_mul(reflexive_term(c), c);
  return range_idempotent_term(t_mul(y, t_sub(t_one(), cpc)));
}

TermPtr ominus_term(TermPtr e, TermPtr g) {
  return t_sub(e, t_mul(std::move(g), e));
}

TermPtr descent_term_on(int n, TermPtr x, TermPtr y) {
  TermPtr t = meet_term(t_mul(y, x), t_mul(x, y));
  for (int k = 0; k < n; ++k) {
    uint64_t e = 1ull << k;
    t = meet_term(t_mul(t_pow(y, e), t), t_mul(t_pow(x, e), t));
  }
  return t;
}

TermPtr descent_term(int n) { return descent_term_on(n, t_var("x"), t_var("y")); }

TermPtr self_descent_term(int n) {
  TermPtr x = t_var("x");
  return descent_term_on(n, x, reflexive_term(x));
}

static void collect_vars(const TermPtr& t, std::set<std::string>& out) {
  if (!t) return;
  if (t->kind == TermKind::Var) out.insert(t->var);
  collect_vars(t->lhs, out);
  collect_vars(t->rhs, out);
}

std::vector<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> s;
  collect_vars(t, s);
  return {s.begin(), s.end()};
}

namespace {

struct Evaluator {
  const Env& env;
  const RingSpec& spec;
  std::unordered_map<const Term*, RingElement> memo;

  const RingElement& run(const TermPtr& t) {
    auto it = memo.find(t.get());
    if (it != memo.end()) return it->second;
    RingElement v = compute(t);
    return memo.emplace(t.get(), std::move(v)).first->second;
  }

  RingElement compute(const TermPtr& t) {
    switch (t->kind) {
      case TermKind::Var: {
        auto it = env.find(t->var);
        if (it == env.end())
          throw UnboundVariable("eval: unbound variable " + t->var);
        return it->second;
      }
      case TermKind::Zero: return ring_zero(spec);
      case TermKind::One: return ring_one(spec);
      case TermKind::Add: return ring_add(run(t->lhs), run(t->rhs));
      case TermKind::Neg: return ring_neg(run(t->lhs));
      case TermKind::Mul: return ring_mul(run(t->lhs), run(t->rhs));
      case TermKind::QuasiInv: return quasi_inverse(run(t->lhs));
    }
    throw std::logic_error("eval: bad term kind");
  }
};

}  // namespace

RingElement eval(const TermPtr& t, const RingSpec& spec, const Env& env) {
  Evaluator ev{env, spec, {}};
  return ev.run(t);
}

RingElement eval(const TermPtr& t, const Env& env) {
  if (env.empty()) throw UnboundVariable("eval: empty environment (ring unknown)");
  return eval(t, env.begin()->second.spec, env);
}

// ----------------------------------------------------------------------
// parser

namespace {

struct Parser {
  const std::string& src;
  size_t pos = 0;

  explicit Parser(const std::string& s) : src(s) {}

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))
      throw ParseError(std::string("expected '") + c + "'", pos);
  }

  uint64_t parse_nat() {
    skip_ws();
    if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
      throw ParseError("expected a number", pos);
    uint64_t v = 0;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
      v = v * 10 + (src[pos++] - '0');
    return v;
  }

  std::string parse_ident() {
    skip_ws();
    size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
      ++pos;
    if (start == pos) throw ParseError("expected identifier", pos);
    return src.substr(start, pos - start);
  }

  TermPtr parse_expr() {
    TermPtr t = parse_factor();
    while (true) {
      skip_ws();
      if (eat('+')) t = t_add(t, parse_factor());
      else if (eat('-')) t = t_sub(t, parse_factor());
      else return t;
    }
  }

  TermPtr parse_factor() {
    TermPtr t = parse_unary();
    while (eat('*')) t = t_mul(t, parse_unary());
    return t;
  }

  TermPtr parse_unary() {
    skip_ws();
    if (eat('-')) return t_neg(parse_unary());
    return parse_postfix();
  }

  TermPtr parse_postfix() {
    TermPtr t = parse_primary();
    while (true) {
      skip_ws();
      if (eat('\'')) t = t_quasi(t);
      else if (eat('^')) t = t_pow(t, parse_nat());
      else return t;
    }
  }

  TermPtr parse_primary() {
    skip_ws();
    if (pos >= src.size()) throw ParseError("unexpected end of input", pos);
    if (eat('(')) {
      TermPtr t = parse_expr();
      expect(')');
      return t;
    }
    char c = src[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      uint64_t v = parse_nat();
      if (v == 0) return t_zero();
      TermPtr t = t_one();
      for (uint64_t i = 1; i < v; ++i) t = t_add(t, t_one());
      return t;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_')
      throw ParseError("unexpected character", pos);
    std::string name = parse_ident();
    skip_ws();
    // indexed macros t[n](x,y) and s[n](x)
    if ((name == "t" || name == "s") && pos < src.size() && src[pos] == '[') {
      expect('[');
      uint64_t n = parse_nat();
      expect(']');
      expect('(');
      TermPtr first = parse_expr();
      if (name == "t") {
        expect(',');
        TermPtr second = parse_expr();
        expect(')');
        return descent_term_on(static_cast<int>(n), first, second);
      }
      expect(')');
      return descent_term_on(static_cast<int>(n), first, reflexive_term(first));
    }
    if (pos < src.size() && src[pos] == '(') {
      expect('(');
      if (name == "plus") {
        TermPtr a = parse_expr();
        expect(')');
        return reflexive_term(a);
      }
      if (name == "gamma") {
        TermPtr a = parse_expr();
        expect(')');
        return range_idempotent_term(a);
      }
      if (name == "join" || name == "meet" || name == "ominus") {
        TermPtr a = parse_expr();
        expect(',');
        TermPtr b = parse_expr();
        expect(')');
        if (name == "join") return join_term(a, b);
        if (name == "meet") return meet_term(a, b);
        return ominus_term(a, b);
      }
      throw ParseError("unknown macro '" + name + "'", pos);
    }
    return t_var(name);
  }
};

}  // namespace

TermPtr parse_term(const std::string& src) {
  Parser p(src);
  TermPtr t = p.parse_expr();
  p.skip_ws();
  if (p.pos != src.size()) throw ParseError("trailing input", p.pos);
  return t;
}

// ----------------------------------------------------------------------
// identity checking

Verdict check_identity(const RingSpec& spec, const TermPtr& lhs,
                       const TermPtr& rhs, CheckMode mode, uint64_t budget,
                       uint64_t seed) {
  std::set<std::string> vars;
  collect_vars(lhs, vars);
  collect_vars(rhs, vars);
  std::vector<std::string> names(vars.begin(), vars.end());
  if (names.empty()) names.push_back("x");  // degenerate: constant identity

  Verdict v;
  v.mode = mode;

  auto try_env = [&](const Env& env) -> bool {
    ++v.cases_checked;
    if (eval(lhs, env) == eval(rhs, env)) return true;
    v.holds = false;
    v.counterexample = env;
    return false;
  };

  if (mode == CheckMode::Exhaustive) {
    const uint64_t n = element_count(spec, budget);
    uint64_t total = 1;
    for (size_t i = 0; i < names.size(); ++i) {
      if (total > budget / n)
        throw BudgetExceeded("check_identity: assignment space over budget");
      total *= n;
    }
    for (uint64_t idx = 0; idx < total; ++idx) {
      Env env;
      uint64_t t = idx;
      for (size_t i = names.size(); i-- > 0;) {
        env.emplace(names[i], element_at(spec, t % n));
        t /= n;
      }
      if (!try_env(env)) break;
    }
  } else {
    std::mt19937_64 rng(seed);
    for (uint64_t i = 0; i < budget; ++i) {
      Env env;
      for (const auto& name : names) env.emplace(name, sample_element(spec, rng));
      if (!try_env(env)) break;
    }
  }

  // a reported counterexample must re-evaluate to inequality
  if (!v.holds) {
    if (eval(lhs, *v.counterexample) == eval(rhs, *v.counterexample))
      throw std::logic_error("check_identity: counterexample does not reproduce");
  }
  return v;
}

std::string term_to_string(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var: return t->var;
    case TermKind::Zero: return "0";
    case TermKind::One: return "1";
    case TermKind::Add: return "(" + term_to_string(t->lhs) + " + " + term_to_string(t->rhs) + ")";
    case TermKind::Neg: return "(-" + term_to_string(t->lhs) + ")";
    case TermKind::Mul: return "(" + term_to_string(t->lhs) + " * " + term_to_string(t->rhs) + ")";
    case TermKind::QuasiInv: return term_to_string(t->lhs) + "'";
  }
  return "?";
}

}  // namespace persp
