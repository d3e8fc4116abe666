#include "persp/ring.hpp"

namespace persp {

void RingSpec::validate() const {
  if (components.empty())
    throw std::invalid_argument("RingSpec: at least one component required");
  for (const auto& c : components) {
    if (c.n < 1) throw std::invalid_argument("RingSpec: component size >= 1");
    PrimeField check(c.p);  // validates primality
  }
}

int RingSpec::length() const {
  int total = 0;
  for (const auto& c : components) total += c.n;
  return total;
}

static void require_same_spec(const RingElement& a, const RingElement& b) {
  if (a.spec != b.spec) throw SpecMismatch("ring op: spec mismatch");
}

RingElement ring_zero(const RingSpec& spec) {
  RingElement r{spec, {}};
  for (const auto& c : spec.components) r.parts.push_back(Mat::zero(c.n, c.n, c.p));
  return r;
}

RingElement ring_one(const RingSpec& spec) {
  RingElement r{spec, {}};
  for (const auto& c : spec.components) r.parts.push_back(Mat::identity(c.n, c.p));
  return r;
}

RingElement ring_add(const RingElement& a, const RingElement& b) {
  require_same_spec(a, b);
  RingElement r{a.spec, {}};
  for (size_t i = 0; i < a.parts.size(); ++i) r.parts.push_back(add(a.parts[i], b.parts[i]));
  return r;
}

RingElement ring_sub(const RingElement& a, const RingElement& b) {
  require_same_spec(a, b);
  RingElement r{a.spec, {}};
  for (size_t i = 0; i < a.parts.size(); ++i) r.parts.push_back(sub(a.parts[i], b.parts[i]));
  return r;
}

RingElement ring_neg(const RingElement& a) {
  RingElement r{a.spec, {}};
  for (const auto& m : a.parts) r.parts.push_back(neg(m));
  return r;
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
  require_same_spec(a, b);
  RingElement r{a.spec, {}};
  for (size_t i = 0; i < a.parts.size(); ++i) r.parts.push_back(mul(a.parts[i], b.parts[i]));
  return r;
}

RingElement ring_pow(const RingElement& a, uint64_t k) {
  RingElement r{a.spec, {}};
  for (const auto& m : a.parts) r.parts.push_back(mat_pow(m, k));
  return r;
}

RingElement quasi_inverse(const RingElement& a) {
  RingElement r{a.spec, {}};
  for (const auto& m : a.parts) r.parts.push_back(inner_inverse(m));
  return r;
}

RingElement reflexive_inverse(const RingElement& a) {
  RingElement q = quasi_inverse(a);
  return ring_mul(ring_mul(q, a), q);
}

RingElement range_idempotent(const RingElement& a) {
  // a * a+ collapses to a * a' since a (a' a a') = (a a' a) a' = a a'
  return ring_mul(a, quasi_inverse(a));
}

bool is_idempotent(const RingElement& a) { return ring_mul(a, a) == a; }

bool is_unit(const RingElement& a) {
  for (const auto& m : a.parts)
    if (rref(m).rank != m.rows) return false;
  return true;
}

std::optional<RingElement> unit_inverse(const RingElement& a) {
  RingElement r{a.spec, {}};
  for (const auto& m : a.parts) {
    auto inv = inverse(m);
    if (!inv) return std::nullopt;
    r.parts.push_back(*inv);
  }
  return r;
}

uint64_t element_count(const RingSpec& spec, uint64_t budget) {
  unsigned __int128 total = 1;
  for (const auto& c : spec.components) {
    for (int i = 0; i < c.n * c.n; ++i) {
      total *= c.p;
      if (total > budget)
        throw BudgetExceeded("element_count: enumeration budget exceeded");
    }
  }
  return static_cast<uint64_t>(total);
}

RingElement element_at(const RingSpec& spec, uint64_t index) {
  // decode little-endian in reverse entry order so that index order is
  // lexicographic on the concatenated entry tuple
  RingElement r = ring_zero(spec);
  for (size_t ci = spec.components.size(); ci-- > 0;) {
    Mat& m = r.parts[ci];
    const uint16_t p = spec.components[ci].p;
    for (size_t k = m.e.size(); k-- > 0;) {
      m.e[k] = static_cast<uint8_t>(index % p);
      index /= p;
    }
  }
  if (index != 0)
    throw std::out_of_range("element_at: index beyond ring size");
  return r;
}

RingElement sample_element(const RingSpec& spec, std::mt19937_64& rng) {
  RingElement r = ring_zero(spec);
  for (size_t ci = 0; ci < spec.components.size(); ++ci) {
    const uint16_t p = spec.components[ci].p;
    const uint64_t bound = (~0ull / p) * p;  // rejection threshold for uniformity
    for (auto& v : r.parts[ci].e) {
      uint64_t draw;
      do {
        draw = rng();
      } while (draw >= bound);
      v = static_cast<uint8_t>(draw % p);
    }
  }
  return r;
}

RingElement sample_element_seeded(const RingSpec& spec, uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_element(spec, rng);
}

bool CornerView::contains(const RingElement& x) const {
  return ring_mul(ring_mul(e, x), e) == x;
}

CornerView corner_view(const RingElement& e) {
  if (!is_idempotent(e))
    throw std::invalid_argument("corner_view: element is not idempotent");
  return CornerView{e};
}

}  // namespace persp
