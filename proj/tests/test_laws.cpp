#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "persp/laws.hpp"

using namespace persp;

namespace {

LawConfig cfg(int dim, uint16_t p, uint64_t trials, uint64_t seed) {
  LawConfig c;
  c.dim = dim;
  c.p = p;
  c.trials = trials;
  c.seed = seed;
  return c;
}

void expect_clean(const LawVerdict& v) {
  INFO(v.law, " first failure: ", v.first_failure);
  CHECK(v.failed == 0);
  CHECK(v.passed > 0);
}

}  // namespace

TEST_CASE("interval product embedding law") {
  expect_clean(check_fact1(cfg(4, 2, 400, 11)));
  expect_clean(check_fact1(cfg(6, 2, 200, 12)));
  expect_clean(check_fact1(cfg(3, 3, 200, 13)));
}

TEST_CASE("perspectivity sum law") {
  expect_clean(check_fact2(cfg(4, 2, 300, 21)));
  expect_clean(check_fact2(cfg(5, 2, 300, 22)));
  expect_clean(check_fact2(cfg(6, 2, 150, 23)));
}

TEST_CASE("complement transfer law") {
  expect_clean(check_fact3a(cfg(4, 2, 400, 31)));
  expect_clean(check_fact3a(cfg(5, 2, 200, 32)));
}

TEST_CASE("direct sum decomposition law") {
  expect_clean(check_lemma4(cfg(5, 2, 300, 41)));
  expect_clean(check_lemma4(cfg(6, 2, 150, 42)));
}

TEST_CASE("closure join law, constructive and rejection sampling") {
  expect_clean(check_lemma5(cfg(5, 2, 300, 51)));
  LawConfig rej = cfg(4, 2, 120, 52);
  rej.mode = SampleMode::Rejection;
  expect_clean(check_lemma5(rej));
}

TEST_CASE("section map observation") {
  expect_clean(check_observation(cfg(3, 2, 400, 61)));
  expect_clean(check_observation(cfg(4, 2, 200, 62)));
}

TEST_CASE("section reduction lemma") {
  expect_clean(check_lemma6(cfg(3, 2, 150, 71)));
  expect_clean(check_lemma6(cfg(3, 3, 80, 72)));
}

TEST_CASE("independent perspective sums") {
  expect_clean(check_fact5a(cfg(4, 2, 300, 81)));
  expect_clean(check_fact5a(cfg(6, 2, 150, 82)));
}

TEST_CASE("reflexive inverse ring facts") {
  // exhaustive over M2(F2)
  expect_clean(check_ring_facts(RingSpec::single(2, 2), 0, 91));
  // sampled on a product ring
  expect_clean(check_ring_facts(RingSpec{{{2, 2}, {1, 3}}}, 250, 92));
  expect_clean(check_ring_facts(RingSpec::single(3, 3), 150, 93));
}

TEST_CASE("suite dispatch") {
  for (const auto& name : suite_names()) {
    LawVerdict v = run_suite(name, cfg(3, 2, 30, 99));
    expect_clean(v);
    CHECK(v.law == name);
  }
  CHECK_THROWS(run_suite("nonsense", cfg(3, 2, 5, 1)));
}
