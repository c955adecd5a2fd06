#pragma once

// Seeded random actions and the randomized check that finite actions,
// with the forgetful functor to finite sets, satisfy the semi-galois
// axioms: limits and colimits computed fiberwise, epi and mono detected on
// fibers, and fibers reflecting isomorphisms.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "semigalois/action.hpp"
#include "semigalois/report.hpp"

namespace semigalois {

  // Uniform in [0, n) by modulo reduction, so sequences are identical on
  // every standard library.
  std::size_t uniform_index(std::mt19937_64& rng, std::size_t n);

  action random_free_action(std::mt19937_64& rng, std::string const& alphabet, std::size_t min_states,
                            std::size_t max_states);

  // Random finite M-set over a finite signature with at most `max_states`
  // states, made from one or two copies of the regular action by merging
  // random pairs of states.
  action random_mset(std::mt19937_64& rng, signature const& sig, std::size_t max_states);

  // A uniformly chosen element of hom_set(x, y), if non-empty.
  std::optional<morphism> random_morphism(std::mt19937_64& rng, action const& x, action const& y);

  struct axiom_options {
    std::uint64_t seed       = 1;
    std::size_t   diagrams   = 200;
    std::size_t   max_states = 5;
  };

  // One entry per checked property with pass counts, plus one failing entry
  // per counterexample carrying the offending diagram.
  check_report check_semi_galois_axioms(axiom_options const& options = {});

  // Plain-text dump of an action, used in counterexamples.
  std::string describe(action const& x);

}  // namespace semigalois
