#pragma once

// Objects and arrows of the concrete categories of finite actions: DFAs
// (actions of a free monoid on letters) and finite right M-sets. Both are
// stored in one shape: a state count plus one state map per "column",
// where the columns are the letters for a free signature and all monoid
// elements for a finite one. Equivariance only ever needs the generators.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "semigalois/monoid.hpp"

namespace semigalois {

  inline constexpr std::size_t default_hom_cap = 1'000'000;

  class signature {
   public:
    // Actions of the free monoid on `alphabet` (one letter per char).
    static signature free_monoid(std::string alphabet);
    // Right actions of `m`; `generators` must generate `m`.
    static signature finite(finite_monoid m, std::vector<std::size_t> generators);
    // Right actions of `m`, generated by its greedy minimal generating set.
    static signature finite(finite_monoid m);

    bool is_free() const noexcept {
      return free_;
    }
    std::string const& alphabet() const;
    finite_monoid const& monoid() const;
    std::size_t generator_count() const noexcept {
      return free_ ? alphabet_.size() : generators_.size();
    }
    // Column acted by generator g.
    std::size_t generator_column(std::size_t g) const noexcept {
      return free_ ? g : generators_[g];
    }
    std::size_t column_count() const noexcept {
      return free_ ? alphabet_.size() : monoid_.order();
    }
    std::vector<std::size_t> const& generators() const noexcept {
      return generators_;
    }

    // Finite signatures compare by monoid only: the full table fixes the
    // action, generators just speed up the checks.
    friend bool operator==(signature const& a, signature const& b);

   private:
    signature() = default;

    bool                     free_ = true;
    std::string              alphabet_;
    finite_monoid            monoid_;
    std::vector<std::size_t> generators_;
  };

  class action {
   public:
    // Free: `trans` holds one map per letter. Finite: `full_table` is the
    // state x element table; `trans` (one map per generator) is optional and
    // checked against it. Both action laws are verified exhaustively.
    static action validate(signature                                            sig,
                           std::vector<state_map>                               trans,
                           std::optional<std::vector<std::vector<std::size_t>>> full_table = {});

    // `columns[c][s]` is s acted on by column c. The caller guarantees the
    // action laws (used by constructions that preserve them).
    static action trusted(signature sig, std::size_t states, std::vector<state_map> columns);

    signature const& sig() const noexcept {
      return data_->sig;
    }
    std::size_t states() const noexcept {
      return data_->states;
    }
    std::size_t act(std::size_t s, std::size_t column) const noexcept {
      return data_->columns[column][s];
    }
    std::size_t step(std::size_t s, std::size_t generator) const noexcept {
      return data_->columns[data_->sig.generator_column(generator)][s];
    }
    state_map const& column(std::size_t c) const noexcept {
      return data_->columns[c];
    }
    state_map const& trans(std::size_t generator) const noexcept {
      return data_->columns[data_->sig.generator_column(generator)];
    }
    std::vector<state_map> const& columns() const noexcept {
      return data_->columns;
    }
    // Runs a word of generator indices from s.
    std::size_t run(std::size_t s, std::span<std::size_t const> word) const noexcept;

    friend bool operator==(action const& a, action const& b);

   private:
    struct data {
      signature              sig;
      std::size_t            states;
      std::vector<state_map> columns;
    };
    explicit action(std::shared_ptr<data const> d) : data_(std::move(d)) {}

    std::shared_ptr<data const> data_;
  };

  class morphism {
   public:
    // Throws signature_mismatch or not_equivariant.
    static morphism validate(action dom, action cod, state_map map);
    static morphism trusted(action dom, action cod, state_map map);
    static morphism identity(action const& x);

    action const& dom() const noexcept {
      return dom_;
    }
    action const& cod() const noexcept {
      return cod_;
    }
    state_map const& map() const noexcept {
      return map_;
    }
    std::size_t operator()(std::size_t s) const noexcept {
      return map_[s];
    }

    friend bool operator==(morphism const&, morphism const&) = default;

   private:
    morphism(action d, action c, state_map m)
        : dom_(std::move(d)), cod_(std::move(c)), map_(std::move(m)) {}

    action    dom_;
    action    cod_;
    state_map map_;
  };

  // g after f.
  morphism compose(morphism const& g, morphism const& f);

  // First (state, generator) where `map` fails to commute, if any.
  std::optional<std::pair<std::size_t, std::size_t>>
  equivariance_defect(action const& dom, action const& cod, state_map const& map);

  std::vector<std::size_t> fiber(action const& x);

  struct cone {
    action   object;
    morphism first;
    morphism second;
  };

  struct cocone {
    action   object;
    morphism first;
    morphism second;
  };

  struct subobject {
    action   object;
    morphism inclusion;
  };

  struct quotient {
    morphism projection;
    action   object;
  };

  struct factorization {
    morphism epi;
    action   image;
    morphism mono;
  };

  struct covering {
    action                target;
    std::vector<morphism> components;
  };

  struct optimal_cover {
    covering    cover;
    std::size_t root_degree;
  };

  // All equivariant maps X -> Y in lexicographic order, by backtracking on
  // the least unassigned state with orbit propagation.
  std::vector<morphism> hom_set(action const& x, action const& y, std::size_t cap = default_hom_cap);

  bool is_mono(morphism const& f);
  bool is_epi(morphism const& f);
  bool is_iso(morphism const& f);
  // The inverse of a bijective morphism (always equivariant).
  std::optional<morphism> inverse(morphism const& f);

  factorization image_factorize(morphism const& f);

  action terminal(signature const& sig);
  action initial(signature const& sig);
  cone product(action const& x, action const& y);
  cone pullback(morphism const& f, morphism const& g);
  subobject equalizer(morphism const& f, morphism const& g);
  cocone coproduct(action const& x, action const& y);
  cocone pushout(morphism const& f, morphism const& g);
  quotient coequalizer(morphism const& f, morphism const& g);

  // Quotient by the smallest action-compatible equivalence containing
  // `pairs` of states.
  quotient saturated_quotient(action const& x, std::span<std::pair<std::size_t, std::size_t> const> pairs);

  // X/E for a relation E on End(X); throws not_endomorphism.
  quotient universal_quotient(action const& x, std::span<std::pair<morphism, morphism> const> relation);
  // The unique q' with q = q' o p, if q coequalizes what p does.
  std::optional<morphism> factor_through(morphism const& p, morphism const& q);

  // Minimal subobject containing `root`, states numbered breadth-first from
  // the root (so the root is state 0).
  subobject orbit_subobject(action const& x, std::size_t root);
  std::vector<std::size_t> orbit(action const& x, std::size_t root);

  std::vector<std::size_t> roots(action const& x);
  bool is_rooted(action const& x);

  // End(X) as a transformation monoid under functional composition,
  // elements in hom_set order.
  transformation_monoid end_monoid(action const& x, std::size_t cap = default_hom_cap);

  // Throws not_mono(i) if component i is not injective.
  bool is_covering(action const& target, std::span<morphism const> components);
  // Throws empty_action.
  optimal_cover optimal_covering(action const& x);

  // Pulls a finite M'-action back along f: M -> M'.
  action restrict_scalars(monoid_hom const& f, action const& x);

  std::optional<morphism> action_isomorphism(action const& x, action const& y, std::size_t cap = default_hom_cap);

  // Relabels states: new state perm[s] carries old state s.
  action relabel(action const& x, std::span<std::size_t const> perm);

}  // namespace semigalois
