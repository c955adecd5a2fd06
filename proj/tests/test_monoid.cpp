#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "semigalois/error.hpp"

using namespace semigalois;
using fixtures::c2;
using fixtures::u2;

TEST_CASE("validate accepts the trivial monoid and C2") {
  auto t = finite_monoid::validate({{0}}, 0);
  CHECK(t.order() == 1);
  CHECK(t == finite_monoid());
  auto g = c2();
  CHECK(g.mul(1, 1) == 0);
  CHECK(g.mul(0, 1) == 1);
}

TEST_CASE("validate rejects bad tables") {
  // constant rows: (0*1)*... identity law fails first
  CHECK_THROWS_AS(finite_monoid::validate({{0, 0}, {0, 0}}, 0), identity_violation);
  // identity 0, but 1*1 = 2, 2*1 = 1, 1*2 = 0 breaks (1*1)*1 = 1*(1*1)
  std::vector<std::vector<std::size_t>> bad{{0, 1, 2}, {1, 2, 0}, {2, 1, 0}};
  CHECK_THROWS_AS(finite_monoid::validate(bad, 0), associativity_violation);
  CHECK_THROWS(finite_monoid::validate({{0, 1}}, 0));
  CHECK_THROWS(finite_monoid::validate({{0}}, 3));
}

TEST_CASE("submonoid closure on small generator sets") {
  state_map swap{1, 0};
  auto      a = submonoid_closure(2, std::span(&swap, 1));
  CHECK(a.size() == 2);
  CHECK(a.element(0) == state_map{0, 1});
  CHECK(is_group(a.monoid()));

  auto b = submonoid_closure(3, std::span<state_map const>());
  CHECK(b.size() == 1);

  state_map konst{0, 0};
  auto      c = submonoid_closure(2, std::span(&konst, 1));
  CHECK(c.size() == 2);
  CHECK(c.monoid().mul(1, 1) == 1);

  state_map big{1, 2, 3, 4, 0};
  CHECK_THROWS_AS(submonoid_closure(5, std::span(&big, 1), 3), size_cap_exceeded);
}

TEST_CASE("submonoid closure tables agree with recomputed composition") {
  std::vector<std::vector<state_map>> cases{
      {{1, 2, 0}, {0, 0, 2}},
      {{1, 0, 2, 3}, {1, 2, 3, 0}},
      {{0, 0, 1}, {2, 1, 1}, {1, 1, 1}},
  };
  for (auto order : {composition::sequential, composition::functional}) {
    for (auto const& gens : cases) {
      std::size_t const n  = gens.front().size();
      auto              tm = submonoid_closure(n, gens, default_closure_cap, order);
      CHECK(tm.size() == oracle::transition_maps(n, gens).size());
      for (std::size_t x = 0; x < tm.size(); ++x) {
        for (std::size_t y = 0; y < tm.size(); ++y) {
          auto xy = compose_maps(tm.element(x), tm.element(y), order);
          REQUIRE(tm.index_of(xy).has_value());
          CHECK(*tm.index_of(xy) == tm.monoid().mul(x, y));
        }
      }
      auto mask = generated_submonoid(tm.monoid(), tm.generators());
      CHECK(std::count(mask.begin(), mask.end(), true) == static_cast<long>(tm.size()));
    }
  }
}

TEST_CASE("congruence closure examples") {
  auto                                             g = c2();
  std::vector<std::pair<std::size_t, std::size_t>> none;
  CHECK(congruence_closure(g, none, congruence_side::right).block_count() == 2);
  std::vector<std::pair<std::size_t, std::size_t>> one{{0, 1}};
  CHECK(congruence_closure(g, one, congruence_side::right).block_count() == 1);

  auto k4 = direct_product(c2(), c2());
  // ((1,1),(g,1)) merges by first coordinate; blocks are keyed by the second
  std::size_t const                                one_one = k4.identity();
  std::size_t                                      g_one   = 0;
  for (std::size_t x = 0; x < 4; ++x) {
    if (x != one_one && k4.mul(x, x) == one_one) {
      auto ctest = congruence_closure(k4, std::vector<std::pair<std::size_t, std::size_t>>{{one_one, x}},
                                      congruence_side::two_sided);
      CHECK(ctest.block_count() == 2);
      g_one = x;
    }
  }
  auto c = congruence_closure(k4, std::vector<std::pair<std::size_t, std::size_t>>{{one_one, g_one}},
                              congruence_side::two_sided);
  auto [q, p] = quotient_monoid(c);
  CHECK(q.order() == 2);
  CHECK(monoid_iso_check(q, c2()).has_value());
  CHECK(p.is_surjective());
}

TEST_CASE("congruence closure is the least congruence (against all partitions)") {
  std::vector<finite_monoid> monoids;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& m : enumerate_monoids(n)) {
      monoids.push_back(m);
    }
  }
  for (auto const& m : monoids) {
    for (std::size_t x = 0; x < m.order(); ++x) {
      for (std::size_t y = x + 1; y < m.order(); ++y) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs{{x, y}};
        for (auto side : {congruence_side::right, congruence_side::two_sided}) {
          auto c        = congruence_closure(m, pairs, side);
          auto expected = oracle::least_congruence(m, pairs, side == congruence_side::two_sided);
          CHECK(c.partition() == expected);
        }
      }
    }
  }
}

TEST_CASE("quotient monoid") {
  auto g        = c2();
  auto discrete = congruence::validate(g, {0, 1}, congruence_side::two_sided);
  auto [q1, p1] = quotient_monoid(discrete);
  CHECK(q1.order() == 2);
  CHECK(p1.map() == std::vector<std::size_t>{0, 1});
  auto full     = congruence::validate(g, {0, 0}, congruence_side::two_sided);
  auto [q2, p2] = quotient_monoid(full);
  CHECK(q2.order() == 1);
  auto right = congruence::validate(g, {0, 0}, congruence_side::right);
  CHECK_THROWS_AS(quotient_monoid(right), side_mismatch);

  // kernel of the projection is the congruence
  for (auto const& m : enumerate_monoids(4)) {
    for (std::size_t x = 1; x < m.order(); ++x) {
      auto c      = congruence_closure(m, std::vector<std::pair<std::size_t, std::size_t>>{{0, x}},
                                       congruence_side::two_sided);
      auto [q, p] = quotient_monoid(c);
      CHECK(p.is_surjective());
      CHECK(normalize_partition(p.map()) == c.partition());
    }
  }
}

TEST_CASE("group and aperiodicity decisions") {
  CHECK(is_group(c2()));
  CHECK_FALSE(is_group(u2()));
  CHECK(is_group(finite_monoid()));
  CHECK(is_aperiodic(u2()));
  CHECK_FALSE(is_aperiodic(c2()));
  CHECK(aperiodicity_witness(c2()) == std::optional<std::size_t>(1));
  CHECK(is_aperiodic(finite_monoid()));

  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& m : enumerate_monoids(n)) {
      CHECK(is_aperiodic(m) == oracle::aperiodic(m));
      CHECK(is_group(m) == oracle::is_group(m));
    }
  }
}

TEST_CASE("isomorphism search") {
  auto id = monoid_iso_check(c2(), c2());
  REQUIRE(id.has_value());
  CHECK(id->map() == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(monoid_iso_check(c2(), u2()).has_value());
  CHECK_FALSE(monoid_iso_check(direct_product(c2(), c2()), cyclic_group(4)).has_value());
  CHECK(monoid_iso_check(direct_product(c2(), cyclic_group(3)), cyclic_group(6)).has_value());
}

TEST_CASE("enumeration agrees with brute-force table search") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto                 found = enumerate_monoids(n);
    std::set<oracle::table> ours;
    for (auto const& m : found) {
      ours.insert(oracle::canonical(oracle::table_of(m)));
    }
    CHECK(ours.size() == found.size());
    CHECK(ours == oracle::monoid_classes(n));
  }
  CHECK(enumerate_monoids(2).size() == 2);
  // pairwise non-isomorphic at order 4
  auto four = enumerate_monoids(4);
  for (std::size_t i = 0; i < four.size(); ++i) {
    for (std::size_t j = i + 1; j < four.size(); ++j) {
      CHECK_FALSE(monoid_iso_check(four[i], four[j]).has_value());
    }
  }
}

TEST_CASE("homomorphisms validate and compose") {
  auto const g = c2();
  CHECK_THROWS_AS(monoid_hom::validate(g, g, {1, 0}), not_homomorphism);
  auto to_trivial = monoid_hom::validate(g, finite_monoid(), {0, 0});
  CHECK(to_trivial.is_surjective());
  CHECK_FALSE(to_trivial.is_injective());
  CHECK(compose(to_trivial, monoid_hom::identity(g)) == to_trivial);
  auto ext = extend_to_hom(cyclic_group(4), std::vector<std::size_t>{1}, g, std::vector<std::size_t>{1});
  REQUIRE(ext.has_value());
  CHECK(ext->map() == std::vector<std::size_t>{0, 1, 0, 1});
  CHECK_FALSE(extend_to_hom(cyclic_group(3), std::vector<std::size_t>{1}, g, std::vector<std::size_t>{1}));
}
