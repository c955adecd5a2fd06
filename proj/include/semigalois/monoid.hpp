#pragma once

// Finite monoids given by multiplication tables, homomorphisms,
// congruences, transformation monoids, and the decision procedures used
// throughout the library. Elements are always the indices 0..order-1.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace semigalois {

  // A total map on the states {0, ..., n-1}.
  using state_map = std::vector<std::size_t>;

  inline constexpr std::size_t default_closure_cap = 1'000'000;

  class finite_monoid {
   public:
    // The trivial monoid.
    finite_monoid();

    // Checks the table is square with entries in range, that `identity` is
    // two-sided neutral and that the product is associative.
    static finite_monoid validate(std::vector<std::vector<std::size_t>> const& table,
                                  std::size_t identity);

    // For tables that are associative by construction (closures of maps,
    // submonoids of products). Only shape and the identity law are checked.
    static finite_monoid trusted(std::size_t order,
                                 std::vector<std::size_t> flat_table,
                                 std::size_t identity);

    std::size_t order() const noexcept {
      return order_;
    }
    std::size_t identity() const noexcept {
      return identity_;
    }
    std::size_t mul(std::size_t x, std::size_t y) const noexcept {
      return (*table_)[x * order_ + y];
    }
    std::vector<std::vector<std::size_t>> rows() const;

    friend bool operator==(finite_monoid const& a, finite_monoid const& b);

   private:
    finite_monoid(std::size_t order,
                  std::shared_ptr<std::vector<std::size_t> const> table,
                  std::size_t identity)
        : order_(order), identity_(identity), table_(std::move(table)) {}

    std::size_t                                   order_;
    std::size_t                                   identity_;
    std::shared_ptr<std::vector<std::size_t> const> table_;
  };

  class monoid_hom {
   public:
    // Checks map(identity) = identity and map(xy) = map(x)map(y).
    static monoid_hom validate(finite_monoid source,
                               finite_monoid target,
                               std::vector<std::size_t> map);
    static monoid_hom identity(finite_monoid const& m);

    finite_monoid const& source() const noexcept {
      return source_;
    }
    finite_monoid const& target() const noexcept {
      return target_;
    }
    std::vector<std::size_t> const& map() const noexcept {
      return map_;
    }
    std::size_t operator()(std::size_t x) const noexcept {
      return map_[x];
    }
    bool is_surjective() const;
    bool is_injective() const;

    friend bool operator==(monoid_hom const&, monoid_hom const&) = default;

   private:
    monoid_hom(finite_monoid s, finite_monoid t, std::vector<std::size_t> m)
        : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)) {}

    finite_monoid            source_;
    finite_monoid            target_;
    std::vector<std::size_t> map_;
  };

  // g after f.
  monoid_hom compose(monoid_hom const& g, monoid_hom const& f);

  enum class congruence_side { right, two_sided };

  class congruence {
   public:
    // `partition` maps elements to arbitrary block labels; blocks are
    // renumbered by first occurrence. Throws if the compatibility law of
    // `side` fails.
    static congruence validate(finite_monoid base,
                               std::vector<std::size_t> const& partition,
                               congruence_side side);

    finite_monoid const& base() const noexcept {
      return base_;
    }
    congruence_side side() const noexcept {
      return side_;
    }
    std::size_t block_of(std::size_t x) const noexcept {
      return block_[x];
    }
    std::size_t block_count() const noexcept {
      return blocks_;
    }
    std::vector<std::size_t> const& partition() const noexcept {
      return block_;
    }
    bool related(std::size_t x, std::size_t y) const noexcept {
      return block_[x] == block_[y];
    }

    friend bool operator==(congruence const&, congruence const&) = default;

   private:
    congruence(finite_monoid b, std::vector<std::size_t> blk, std::size_t n, congruence_side s)
        : base_(std::move(b)), block_(std::move(blk)), blocks_(n), side_(s) {}

    finite_monoid            base_;
    std::vector<std::size_t> block_;
    std::size_t              blocks_;
    congruence_side          side_;
  };

  // Renumbers labels by first occurrence.
  std::vector<std::size_t> normalize_partition(std::vector<std::size_t> const& labels);

  congruence congruence_closure(finite_monoid const&                                 m,
                                std::span<std::pair<std::size_t, std::size_t> const> pairs,
                                congruence_side                                      side);

  // Quotient by a two-sided congruence; throws side_mismatch otherwise.
  std::pair<finite_monoid, monoid_hom> quotient_monoid(congruence const& c);

  // How a transformation monoid multiplies: `sequential` means x*y applies
  // x first (transition monoids of right actions); `functional` means
  // x*y = x o y (endomorphism monoids).
  enum class composition { sequential, functional };

  class transformation_monoid {
   public:
    // Builds the table for a list of distinct maps that is already closed
    // under composition and contains the identity map.
    static transformation_monoid from_closed(std::size_t            degree,
                                             std::vector<state_map> elements,
                                             std::vector<std::size_t> generators,
                                             composition            order);

    // Same, with the multiplication table supplied by the caller.
    static transformation_monoid from_parts(std::size_t              degree,
                                            std::vector<state_map>   elements,
                                            finite_monoid            monoid,
                                            std::vector<std::size_t> generators,
                                            composition              order);

    std::size_t degree() const noexcept {
      return degree_;
    }
    std::size_t size() const noexcept {
      return elements_.size();
    }
    std::vector<state_map> const& elements() const noexcept {
      return elements_;
    }
    state_map const& element(std::size_t i) const {
      return elements_[i];
    }
    finite_monoid const& monoid() const noexcept {
      return monoid_;
    }
    std::vector<std::size_t> const& generators() const noexcept {
      return generators_;
    }
    composition order() const noexcept {
      return order_;
    }
    std::optional<std::size_t> index_of(state_map const& m) const;

   private:
    transformation_monoid() = default;

    std::size_t              degree_ = 0;
    std::vector<state_map>   elements_;
    finite_monoid            monoid_;
    std::vector<std::size_t> generators_;
    composition              order_ = composition::sequential;
  };

  state_map identity_map(std::size_t degree);
  // Composite of two maps under the given convention.
  state_map compose_maps(state_map const& x, state_map const& y, composition order);

  // Breadth-first closure: identity first, then products element*generator
  // in discovery order.
  transformation_monoid submonoid_closure(std::size_t                degree,
                                          std::span<state_map const> generators,
                                          std::size_t                cap   = default_closure_cap,
                                          composition order = composition::sequential);

  bool is_group(finite_monoid const& m);

  // The idempotent power x^w, found by iterating powers until they repeat.
  std::size_t idempotent_power(finite_monoid const& m, std::size_t x);
  // First x (in index order) with x^w != x^(w+1), if any.
  std::optional<std::size_t> aperiodicity_witness(finite_monoid const& m);
  bool is_aperiodic(finite_monoid const& m);

  // Greedy: scan elements in index order, keep those not yet generated.
  std::vector<std::size_t> minimal_generating_set(finite_monoid const& m);
  // Submonoid generated by `gens`, as a membership mask.
  std::vector<bool> generated_submonoid(finite_monoid const& m, std::span<std::size_t const> gens);

  // An isomorphism M -> N if one exists; the first found in lexicographic
  // order of generator images.
  std::optional<monoid_hom> monoid_iso_check(finite_monoid const& m, finite_monoid const& n);

  // The unique homomorphism h: M -> N with h(gens_m[i]) = gens_n[i], if it
  // exists. `gens_m` must generate M.
  std::optional<monoid_hom> extend_to_hom(finite_monoid const&         m,
                                          std::span<std::size_t const> gens_m,
                                          finite_monoid const&         n,
                                          std::span<std::size_t const> gens_n);

  finite_monoid cyclic_group(std::size_t n);
  finite_monoid direct_product(finite_monoid const& m, finite_monoid const& n);

  // All monoids of the given order up to isomorphism, identity at 0, each in
  // its lexicographically least labelling; sorted.
  std::vector<finite_monoid> enumerate_monoids(std::size_t order);

}  // namespace semigalois
