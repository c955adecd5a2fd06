#pragma once

#include "semigalois/action.hpp"
#include "semigalois/monoid.hpp"

namespace fixtures {

  using namespace semigalois;

  // {1, g}, identity 0
  inline finite_monoid c2() {
    return finite_monoid::validate({{0, 1}, {1, 0}}, 0);
  }

  // {1, 0} with 0 absorbing, identity 0
  inline finite_monoid u2() {
    return finite_monoid::validate({{0, 1}, {1, 1}}, 0);
  }

  inline signature over_a() {
    return signature::free_monoid("a");
  }

  inline signature over_ab() {
    return signature::free_monoid("ab");
  }

  // Two states swapped by a.
  inline action d_par() {
    return action::validate(over_a(), {{1, 0}});
  }

  // a: 0 -> 1, 1 -> 1
  inline action chain() {
    return action::validate(over_a(), {{1, 1}});
  }

  inline action cycle(std::size_t n) {
    state_map a(n);
    for (std::size_t s = 0; s < n; ++s) {
      a[s] = (s + 1) % n;
    }
    return action::validate(over_a(), {a});
  }

  // Regular right action of m on itself.
  inline action regular(finite_monoid const& m) {
    std::vector<std::vector<std::size_t>> full(m.order(), std::vector<std::size_t>(m.order()));
    for (std::size_t s = 0; s < m.order(); ++s) {
      for (std::size_t e = 0; e < m.order(); ++e) {
        full[s][e] = m.mul(s, e);
      }
    }
    return action::validate(signature::finite(m), {}, full);
  }

  // Every element of m acts as the identity on n points.
  inline action trivial_mset(finite_monoid const& m, std::size_t n) {
    std::vector<std::vector<std::size_t>> full(n, std::vector<std::size_t>(m.order()));
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t e = 0; e < m.order(); ++e) {
        full[s][e] = s;
      }
    }
    return action::validate(signature::finite(m), {}, full);
  }

}  // namespace fixtures
