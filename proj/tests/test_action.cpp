#include "doctest.h"

#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "semigalois/axioms.hpp"
#include "semigalois/error.hpp"

using namespace semigalois;
using namespace fixtures;

namespace {
  std::vector<state_map> maps_of(std::vector<morphism> const& homs) {
    std::vector<state_map> out;
    for (auto const& h : homs) {
      out.push_back(h.map());
    }
    return out;
  }

  action empty_over(signature const& sig) {
    return initial(sig);
  }
}  // namespace

TEST_CASE("action validation") {
  CHECK(d_par().states() == 2);
  auto reg = regular(c2());
  CHECK(reg.act(0, 1) == 1);
  CHECK(reg.act(1, 1) == 0);
  // s.(g g) = s.g.g must equal s.1
  std::vector<std::vector<std::size_t>> bad{{0, 0}, {1, 0}};
  CHECK_THROWS_AS(action::validate(signature::finite(c2()), {}, bad), action_law_violation);
  CHECK_THROWS_AS(action::validate(over_ab(), {{0}}), arity_mismatch);
  CHECK(action::validate(over_a(), {{}}).states() == 0);
}

TEST_CASE("fiber of initial, terminal and D_par") {
  CHECK(fiber(initial(over_a())).empty());
  CHECK(fiber(terminal(over_a())).size() == 1);
  CHECK(fiber(terminal(signature::finite(u2()))).size() == 1);
  CHECK(fiber(d_par()) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("hom sets") {
  CHECK(hom_set(terminal(over_a()), d_par()).empty());
  auto ends = hom_set(d_par(), d_par());
  CHECK(maps_of(ends) == std::vector<state_map>{{0, 1}, {1, 0}});
  CHECK(hom_set(empty_over(over_a()), d_par()).size() == 1);
  CHECK(hom_set(cycle(4), cycle(2)).size() == 2);
  CHECK_THROWS_AS(hom_set(d_par(), terminal(over_ab())), signature_mismatch);
  CHECK_THROWS_AS(hom_set(cycle(5), cycle(5), 2), size_cap_exceeded);
}

TEST_CASE("hom sets match exhaustive search") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 150; ++i) {
    auto x = random_free_action(rng, i % 2 ? "ab" : "a", 0, 4);
    auto y = random_free_action(rng, i % 2 ? "ab" : "a", 0, 4);
    CHECK(maps_of(hom_set(x, y)) == oracle::hom_maps(x, y));
  }
  std::vector<signature> sigs;
  for (auto const& m : enumerate_monoids(3)) {
    sigs.push_back(signature::finite(m));
  }
  for (int i = 0; i < 100; ++i) {
    auto const& sig = sigs[static_cast<std::size_t>(i) % sigs.size()];
    auto        x   = random_mset(rng, sig, 5);
    auto        y   = random_mset(rng, sig, 5);
    CHECK(maps_of(hom_set(x, y)) == oracle::hom_maps(x, y));
  }
}

TEST_CASE("epi and mono") {
  auto id = morphism::identity(d_par());
  CHECK(is_mono(id));
  CHECK(is_epi(id));
  auto bang = hom_set(d_par(), terminal(over_a())).front();
  CHECK(is_epi(bang));
  CHECK_FALSE(is_mono(bang));
  auto from_empty = hom_set(empty_over(over_a()), d_par()).front();
  CHECK(is_mono(from_empty));
  CHECK_FALSE(is_epi(from_empty));
  CHECK_THROWS_AS(morphism::validate(d_par(), d_par(), {0, 0}), not_equivariant);
}

TEST_CASE("image factorization") {
  auto f = image_factorize(morphism::identity(d_par()));
  CHECK(f.image.states() == 2);
  auto bang = hom_set(d_par(), terminal(over_a())).front();
  auto g    = image_factorize(bang);
  CHECK(g.image.states() == 1);
  // chain plus a fixed point, mapped constantly onto the fixed point
  auto three = action::validate(over_a(), {{1, 1, 2}});
  auto x   = action::validate(over_a(), {{0, 0}});
  auto h   = morphism::validate(x, three, {1, 1});
  auto fac = image_factorize(h);
  CHECK(fac.image.states() == 1);
  CHECK(compose(fac.mono, fac.epi) == h);
  CHECK(is_epi(fac.epi));
  CHECK(is_mono(fac.mono));
}

TEST_CASE("limits") {
  auto p = product(d_par(), d_par());
  CHECK(p.object.states() == 4);
  for (std::size_t s = 0; s < 4; ++s) {
    CHECK(p.first(p.object.step(s, 0)) != p.first(s));
    CHECK(p.second(p.object.step(s, 0)) != p.second(s));
  }
  auto e = equalizer(morphism::identity(d_par()), hom_set(d_par(), d_par())[1]);
  CHECK(e.object.states() == 0);

  auto x  = cycle(3);
  auto y  = d_par();
  auto one = terminal(over_a());
  auto pb = pullback(hom_set(x, one).front(), hom_set(y, one).front());
  CHECK(pb.object.states() == 6);
  CHECK(action_isomorphism(pb.object, product(x, y).object).has_value());
}

TEST_CASE("colimits") {
  auto one = terminal(over_a());
  auto s   = coproduct(one, one);
  CHECK(s.object.states() == 2);
  CHECK(roots(s.object).empty());

  auto zero = empty_over(over_a());
  auto bang = hom_set(zero, one).front();
  auto po   = pushout(bang, bang);
  CHECK(action_isomorphism(po.object, s.object).has_value());

  auto q = coequalizer(morphism::identity(d_par()), hom_set(d_par(), d_par())[1]);
  CHECK(q.object.states() == 1);
}

TEST_CASE("universal quotients") {
  std::vector<std::pair<morphism, morphism>> none;
  auto                                       q0 = universal_quotient(d_par(), none);
  CHECK(q0.projection.map() == state_map{0, 1});

  auto ends = hom_set(d_par(), d_par());
  std::vector<std::pair<morphism, morphism>> swap{{ends[0], ends[1]}};
  auto                                       q1 = universal_quotient(d_par(), swap);
  CHECK(q1.object.states() == 1);

  auto reg = regular(c2());
  auto re  = hom_set(reg, reg);
  REQUIRE(re.size() == 2);
  std::vector<std::pair<morphism, morphism>> left{{re[0], re[1]}};
  CHECK(universal_quotient(reg, left).object.states() == 1);

  std::vector<std::pair<morphism, morphism>> foreign{{morphism::identity(cycle(3)), ends[1]}};
  CHECK_THROWS_AS(universal_quotient(d_par(), foreign), not_endomorphism);

  // every coequalizing map out of X factors uniquely through p
  auto x  = cycle(4);
  auto ex = hom_set(x, x);
  std::vector<std::pair<morphism, morphism>> rel{{ex[0], ex[2]}};
  auto p = universal_quotient(x, rel);
  CHECK(p.object.states() == 2);
  for (auto const& y : {cycle(1), cycle(2), cycle(4)}) {
    for (auto const& q : hom_set(x, y)) {
      bool coequalizes = compose(q, ex[0]) == compose(q, ex[2]);
      auto f           = factor_through(p.projection, q);
      CHECK(f.has_value() == coequalizes);
      if (f) {
        CHECK(compose(*f, p.projection) == q);
      }
    }
  }
}

TEST_CASE("orbits and roots") {
  CHECK(orbit_subobject(d_par(), 0).object.states() == 2);
  auto one = terminal(over_a());
  auto two = coproduct(one, one).object;
  CHECK(orbit_subobject(two, 0).object.states() == 1);
  CHECK(orbit_subobject(chain(), 1).object.states() == 1);
  CHECK(roots(d_par()) == std::vector<std::size_t>{0, 1});
  CHECK(is_rooted(d_par()));
  CHECK_FALSE(is_rooted(two));
  CHECK_FALSE(is_rooted(empty_over(over_a())));
}

TEST_CASE("endomorphism monoids") {
  CHECK(end_monoid(terminal(over_a())).size() == 1);
  auto e = end_monoid(d_par());
  CHECK(e.size() == 2);
  CHECK(monoid_iso_check(e.monoid(), c2()).has_value());
  CHECK(end_monoid(empty_over(over_a())).size() == 1);
  auto not_rooted = coproduct(d_par(), terminal(over_a())).object;
  auto en         = end_monoid(not_rooted);
  CHECK(en.size() == oracle::hom_maps(not_rooted, not_rooted).size());
}

TEST_CASE("coverings") {
  std::vector<morphism> idc{morphism::identity(d_par())};
  CHECK(is_covering(d_par(), idc));
  auto one = terminal(over_a());
  auto two = coproduct(one, one);
  std::vector<morphism> halves{two.first, two.second};
  CHECK(is_covering(two.object, halves));
  std::vector<morphism> half{two.first};
  CHECK_FALSE(is_covering(two.object, half));
  std::vector<morphism> not_mono{hom_set(d_par(), one).front()};
  CHECK_THROWS_AS(is_covering(one, not_mono), semigalois::not_mono);

  CHECK(optimal_covering(d_par()).root_degree == 1);
  auto mixed = coproduct(d_par(), one).object;
  CHECK(optimal_covering(mixed).root_degree == 2);
  CHECK(optimal_covering(chain()).root_degree == 1);
  CHECK_THROWS_AS(optimal_covering(empty_over(over_a())), empty_action);
}

TEST_CASE("optimal covering is invariant under relabelling") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    auto x = random_free_action(rng, "ab", 1, 5);
    std::vector<std::size_t> perm(x.states());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto y  = relabel(x, perm);
    auto cx = optimal_covering(x);
    auto cy = optimal_covering(y);
    REQUIRE(cx.root_degree == cy.root_degree);
    std::set<std::set<std::size_t>> images_x, images_y;
    for (auto const& a : cx.cover.components) {
      std::set<std::size_t> img;
      for (std::size_t s = 0; s < a.dom().states(); ++s) {
        img.insert(perm[a(s)]);
      }
      images_x.insert(img);
    }
    for (auto const& b : cy.cover.components) {
      std::set<std::size_t> img;
      for (std::size_t s = 0; s < b.dom().states(); ++s) {
        img.insert(b(s));
      }
      images_y.insert(img);
    }
    CHECK(images_x == images_y);
  }
}

TEST_CASE("restriction of scalars") {
  auto reg = regular(c2());
  auto r   = restrict_scalars(monoid_hom::identity(c2()), reg);
  CHECK(r == reg);
  auto from_trivial = monoid_hom::validate(finite_monoid(), c2(), {0});
  auto t            = restrict_scalars(from_trivial, reg);
  CHECK(t.states() == 2);
  CHECK(t.act(1, 0) == 1);
  CHECK_THROWS_AS(restrict_scalars(from_trivial, d_par()), signature_mismatch);
}

TEST_CASE("morphisms between presentations with different generators") {
  auto wide   = signature::finite(c2(), {0, 1});
  auto narrow = signature::finite(c2());
  std::vector<std::vector<std::size_t>> table{{0, 1}, {1, 0}};
  auto x = action::validate(wide, {}, table);
  auto y = action::validate(narrow, {}, table);
  CHECK(morphism::validate(x, y, {0, 1}).map() == state_map{0, 1});
  CHECK(morphism::validate(y, x, {1, 0}).map() == state_map{1, 0});
  CHECK(maps_of(hom_set(x, y)) == oracle::hom_maps(x, y));
  CHECK(maps_of(hom_set(y, x)) == std::vector<state_map>{{0, 1}, {1, 0}});
}
