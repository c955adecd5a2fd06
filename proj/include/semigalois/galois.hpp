#pragma once

// Galois objects, the cofinal stage of the inverse system of their
// endomorphism monoids, and the finite reconstruction / representation
// dictionary between finite monoids and their categories of finite actions.
//
// Order convention: (X, x) <= (X', x') iff there is a pointed arrow
// X' -> X. Arrows are stored, the order is derived; `pointed_arrow(a, b)`
// existing means b <= a.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "semigalois/action.hpp"
#include "semigalois/monoid.hpp"

namespace semigalois {

  class galois_object {
   public:
    // Empty unless `x` is generated by `root` and evaluation at the root
    // End(x) -> states is a bijection.
    static std::optional<galois_object> make(action x, std::size_t root);

    action const& object() const noexcept {
      return object_;
    }
    std::size_t root() const noexcept {
      return root_;
    }
    std::size_t states() const noexcept {
      return object_.states();
    }
    // End(x) under functional composition, indexed by the image of the
    // root: element k is the unique endomorphism sending the root to k.
    transformation_monoid const& end() const noexcept {
      return *end_;
    }
    morphism endomorphism(std::size_t k) const;

   private:
    galois_object(action x, std::size_t root, std::shared_ptr<transformation_monoid const> end)
        : object_(std::move(x)), root_(root), end_(std::move(end)) {}

    action                                       object_;
    std::size_t                                  root_;
    std::shared_ptr<transformation_monoid const> end_;
  };

  bool is_galois(action const& x, std::size_t root);

  // The unique morphism x -> y sending `root` to `target`, when x is
  // generated by `root` and such a morphism exists.
  std::optional<morphism> pointed_morphism(action const& x, std::size_t root, action const& y, std::size_t target);

  struct galois_closure_result {
    galois_object closure;
    // witness[i] is the morphism closure -> Y sending the root to state i
    std::vector<morphism> witness;
  };

  // Orbit of the tuple of all states of Y inside Y^n. Throws empty_action
  // and size_cap_exceeded.
  galois_closure_result galois_closure(action const& y, std::size_t cap = default_closure_cap);

  struct galois_arrow {
    galois_object from;
    galois_object to;
    morphism      arrow;
  };

  std::optional<galois_arrow> pointed_arrow(galois_object const& from, galois_object const& to);
  galois_arrow compose(galois_arrow const& second, galois_arrow const& first);

  // u |-> the unique u' with arrow o u = u' o arrow; always surjective.
  monoid_hom connecting_hom(galois_arrow const& a);

  struct galois_meet {
    galois_object object;
    galois_arrow  to_first;
    galois_arrow  to_second;
  };

  // A galois object above both: the orbit of the pair of roots in the
  // product.
  galois_meet meet_galois(galois_object const& a, galois_object const& b);

  // Finite-index congruence on the free monoid: u ~ v iff root.u = root.v.
  class word_kernel {
   public:
    explicit word_kernel(galois_object stage) : stage_(std::move(stage)) {}

    std::size_t class_count() const noexcept {
      return stage_.states();
    }
    // Word given as generator indices.
    std::size_t class_of(std::span<std::size_t const> word) const {
      return stage_.object().run(stage_.root(), word);
    }
    bool congruent(std::span<std::size_t const> u, std::span<std::size_t const> v) const {
      return class_of(u) == class_of(v);
    }
    galois_object const& stage() const noexcept {
      return stage_;
    }

   private:
    galois_object stage_;
  };

  using galois_kernel = std::variant<congruence, word_kernel>;

  // Finite signature: the two-sided congruence m ~ m' iff root.m = root.m'.
  // Free signature: the word kernel of the stage.
  galois_kernel galois_congruence(galois_object const& g);

  // Galois object of a finite quotient p: M -> H: states H, h.m = h p(m),
  // rooted at the identity. Throws not_surjective.
  galois_object stamp_to_galois(monoid_hom const& p);

  // h |-> left translation by h, into End(Gamma_H) enumerated by hom search.
  monoid_hom end_iso(galois_object const& gamma_h, finite_monoid const& h);

  struct stage_monoid {
    galois_object stage;
    // End(stage), indexed by root image; generators are the stamp images
    transformation_monoid monoid;
    // generator g |-> element agreeing with g at the root
    std::vector<std::size_t> stamp;
  };

  // The fundamental monoid truncated at the cofinal stage fixed by
  // `generators` (all over one signature).
  stage_monoid fundamental_monoid(std::span<action const> generators, std::size_t cap = default_closure_cap);

  // m |-> u_m into End(Gamma_M). Throws reconstruction_failure if the
  // result is not an isomorphism.
  monoid_hom reconstruct_check(finite_monoid const& m);

  struct fullness_entry {
    action                 other;
    std::vector<state_map> free_homs;
    std::vector<state_map> finite_homs;
    bool                   equal;
  };

  struct realization {
    action                      mset;
    std::vector<fullness_entry> fullness;
  };

  // The DFA x as a finite action of the stage monoid; each of `others` is
  // realized too and its hom-set from x compared on both sides. Throws
  // ill_defined if the stage does not act on x.
  realization realize_as_mset(action const& x, stage_monoid const& stage, std::span<action const> others = {});

  struct cyclic_component {
    std::size_t root;
    congruence  kernel;  // right congruence m ~ m' iff root.m = root.m'
    subobject   orbit;
    quotient    regular_quotient;  // Gamma_M / kernel
    morphism    iso;               // regular_quotient.object -> orbit.object
  };

  // One component per maximal orbit, rooted at its least state.
  std::vector<cyclic_component> cyclic_decomposition(action const& s);

  // Glues the per-orbit quotients back: coproduct, mapped into `s`.
  factorization reassemble(std::span<cyclic_component const> parts, action const& s);

}  // namespace semigalois
