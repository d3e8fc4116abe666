#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "persp/ring.hpp"

using namespace persp;

namespace {

RingElement single(const RingSpec& spec, const Mat& m) {
  return RingElement{spec, {m}};
}

}  // namespace

TEST_CASE("spec validation and length") {
  RingSpec s{{{2, 2}, {3, 3}}};
  CHECK_NOTHROW(s.validate());
  CHECK(s.length() == 5);
  CHECK_THROWS(RingSpec{{}}.validate());
  CHECK_THROWS((RingSpec{{{2, 4}}}).validate());
  CHECK_THROWS((RingSpec{{{0, 2}}}).validate());
}

TEST_CASE("ring arithmetic basics") {
  auto m2 = RingSpec::single(2, 2);
  auto a = single(m2, Mat::unit(2, 2, 2, 0, 1));  // E12
  CHECK(ring_add(a, ring_zero(m2)) == a);
  CHECK(ring_mul(ring_one(m2), a) == a);
  CHECK(ring_pow(a, 2) == ring_zero(m2));  // E12 is nilpotent
  CHECK(ring_pow(a, 0) == ring_one(m2));

  RingSpec prod{{{2, 2}, {1, 3}}};
  auto x = ring_one(prod);
  CHECK(ring_mul(x, x) == x);
  CHECK_THROWS_AS(ring_add(a, x), SpecMismatch);
}

TEST_CASE("quasi inverse is a total single-valued inner inverse") {
  auto m2 = RingSpec::single(2, 2);
  CHECK(quasi_inverse(ring_one(m2)) == ring_one(m2));
  CHECK(quasi_inverse(ring_zero(m2)) == ring_zero(m2));

  // exhaustive x x' x = x over M2(GF(2)) and a product ring
  for (uint64_t i = 0; i < element_count(m2); ++i) {
    auto x = element_at(m2, i);
    auto q = quasi_inverse(x);
    CHECK(ring_mul(ring_mul(x, q), x) == x);
  }
  RingSpec prod{{{2, 2}, {1, 3}}};
  CHECK(element_count(prod) == 48);
  for (uint64_t i = 0; i < 48; ++i) {
    auto x = element_at(prod, i);
    auto q = quasi_inverse(x);
    CHECK(ring_mul(ring_mul(x, q), x) == x);
    // componentwise agreement with the matrix-level construction
    for (size_t c = 0; c < x.parts.size(); ++c)
      CHECK(q.parts[c] == inner_inverse(x.parts[c]));
  }
}

TEST_CASE("reflexive inverse and range idempotent") {
  auto m2 = RingSpec::single(2, 2);
  auto e12 = single(m2, Mat::unit(2, 2, 2, 0, 1));
  CHECK(reflexive_inverse(ring_one(m2)) == ring_one(m2));
  CHECK(reflexive_inverse(ring_zero(m2)) == ring_zero(m2));

  for (uint64_t i = 0; i < 16; ++i) {
    auto a = element_at(m2, i);
    auto b = reflexive_inverse(a);
    CHECK(ring_mul(ring_mul(a, b), a) == a);
    CHECK(ring_mul(ring_mul(b, a), b) == b);
    // ab and ba are idempotents; f a e = a and e b f = b
    auto e = ring_mul(b, a);
    auto f = ring_mul(a, b);
    CHECK(is_idempotent(e));
    CHECK(is_idempotent(f));
    CHECK(ring_mul(ring_mul(f, a), e) == a);
    CHECK(ring_mul(ring_mul(e, b), f) == b);
    // gamma is idempotent with the same column space
    auto g = range_idempotent(a);
    CHECK(is_idempotent(g));
    for (size_t c = 0; c < a.parts.size(); ++c)
      CHECK(image_basis(g.parts[c]) == image_basis(a.parts[c]));
  }

  auto g12 = range_idempotent(e12);
  CHECK(is_idempotent(g12));
  CHECK(image_basis(g12.parts[0]) ==
        Subspace::row_span(Mat::from_entries(1, 2, 2, {1, 0})));
}

TEST_CASE("units") {
  auto m2 = RingSpec::single(2, 2);
  CHECK(is_unit(ring_one(m2)));
  CHECK(*unit_inverse(ring_one(m2)) == ring_one(m2));

  auto e11 = single(m2, Mat::unit(2, 2, 2, 0, 0));
  CHECK(is_idempotent(e11));
  CHECK(!is_unit(e11));
  CHECK(!unit_inverse(e11));

  auto swap = single(m2, Mat::from_entries(2, 2, 2, {0, 1, 1, 0}));
  CHECK(is_unit(swap));
  CHECK(ring_mul(swap, swap) == ring_one(m2));
  CHECK(*unit_inverse(swap) == swap);
}

TEST_CASE("enumeration order and count") {
  auto f2 = RingSpec::single(1, 2);
  CHECK(element_count(f2) == 2);
  CHECK(element_at(f2, 0) == ring_zero(f2));
  CHECK(element_at(f2, 1) == ring_one(f2));

  auto m2 = RingSpec::single(2, 2);
  CHECK(element_count(m2) == 16);
  std::vector<RingElement> seen;
  for (uint64_t i = 0; i < 16; ++i) {
    auto x = element_at(m2, i);
    for (const auto& prev : seen) CHECK(!(prev == x));
    seen.push_back(x);
  }
  // lexicographic: index 1 flips only the last entry
  CHECK(element_at(m2, 1).parts[0] == Mat::unit(2, 2, 2, 1, 1));

  RingSpec prod{{{2, 2}, {1, 3}}};
  CHECK(element_count(prod) == 48);
  CHECK_THROWS_AS(element_count(RingSpec::single(6, 5)), BudgetExceeded);
}

TEST_CASE("sampling is deterministic per seed") {
  RingSpec prod{{{3, 2}, {2, 3}}};
  auto a = sample_element_seeded(prod, 99);
  auto b = sample_element_seeded(prod, 99);
  CHECK(a == b);
  auto c = sample_element_seeded(prod, 100);
  CHECK(a.spec == c.spec);
}

TEST_CASE("corner ring of an idempotent") {
  auto m2 = RingSpec::single(2, 2);
  auto whole = corner_view(ring_one(m2));
  auto trivial = corner_view(ring_zero(m2));
  auto e11 = single(m2, Mat::unit(2, 2, 2, 0, 0));
  auto corner = corner_view(e11);

  int whole_n = 0, trivial_n = 0, corner_n = 0;
  for (uint64_t i = 0; i < 16; ++i) {
    auto x = element_at(m2, i);
    if (whole.contains(x)) ++whole_n;
    if (trivial.contains(x)) ++trivial_n;
    if (corner.contains(x)) ++corner_n;
  }
  CHECK(whole_n == 16);
  CHECK(trivial_n == 1);
  CHECK(corner_n == 2);  // {0, E11}
  CHECK(corner.contains(corner.unit()));

  auto e12 = single(m2, Mat::unit(2, 2, 2, 0, 1));
  CHECK_THROWS(corner_view(e12));
}
