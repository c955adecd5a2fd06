#include "semigalois/monoid.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "detail.hpp"
#include "semigalois/error.hpp"

namespace semigalois {

  ////////////////////////////////////////////////////////////////////////
  // finite_monoid
  ////////////////////////////////////////////////////////////////////////

  finite_monoid::finite_monoid()
      : order_(1),
        identity_(0),
        table_(std::make_shared<std::vector<std::size_t> const>(1, 0)) {}

  finite_monoid finite_monoid::validate(std::vector<std::vector<std::size_t>> const& table,
                                        std::size_t identity) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw error("a monoid needs at least one element");
    }
    std::vector<std::size_t> flat;
    flat.reserve(n * n);
    for (auto const& row : table) {
      if (row.size() != n) {
        throw arity_mismatch("multiplication table is not square");
      }
      for (auto v : row) {
        if (v >= n) {
          throw error("table entry " + std::to_string(v) + " out of range");
        }
        flat.push_back(v);
      }
    }
    if (identity >= n) {
      throw identity_violation(identity);
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (flat[identity * n + x] != x || flat[x * n + identity] != x) {
        throw identity_violation(x);
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t const xy = flat[x * n + y];
        for (std::size_t z = 0; z < n; ++z) {
          if (flat[xy * n + z] != flat[x * n + flat[y * n + z]]) {
            throw associativity_violation(x, y, z);
          }
        }
      }
    }
    return finite_monoid(n, std::make_shared<std::vector<std::size_t> const>(std::move(flat)), identity);
  }

  finite_monoid finite_monoid::trusted(std::size_t              order,
                                       std::vector<std::size_t> flat,
                                       std::size_t              identity) {
    if (order == 0 || flat.size() != order * order || identity >= order) {
      throw arity_mismatch("malformed multiplication table");
    }
    for (std::size_t x = 0; x < order; ++x) {
      if (flat[identity * order + x] != x || flat[x * order + identity] != x) {
        throw identity_violation(x);
      }
    }
    return finite_monoid(order, std::make_shared<std::vector<std::size_t> const>(std::move(flat)), identity);
  }

  std::vector<std::vector<std::size_t>> finite_monoid::rows() const {
    std::vector<std::vector<std::size_t>> out(order_);
    for (std::size_t x = 0; x < order_; ++x) {
      out[x].assign(table_->begin() + x * order_, table_->begin() + (x + 1) * order_);
    }
    return out;
  }

  bool operator==(finite_monoid const& a, finite_monoid const& b) {
    return a.order_ == b.order_ && a.identity_ == b.identity_
           && (a.table_ == b.table_ || *a.table_ == *b.table_);
  }

  ////////////////////////////////////////////////////////////////////////
  // monoid_hom
  ////////////////////////////////////////////////////////////////////////

  monoid_hom monoid_hom::validate(finite_monoid            source,
                                  finite_monoid            target,
                                  std::vector<std::size_t> map) {
    if (map.size() != source.order()) {
      throw arity_mismatch("homomorphism table has the wrong length");
    }
    for (auto v : map) {
      if (v >= target.order()) {
        throw not_homomorphism("image " + std::to_string(v) + " out of range");
      }
    }
    if (map[source.identity()] != target.identity()) {
      throw not_homomorphism("identity is not preserved");
    }
    for (std::size_t x = 0; x < source.order(); ++x) {
      for (std::size_t y = 0; y < source.order(); ++y) {
        if (map[source.mul(x, y)] != target.mul(map[x], map[y])) {
          throw not_homomorphism("product " + std::to_string(x) + "*" + std::to_string(y)
                                 + " is not preserved");
        }
      }
    }
    return monoid_hom(std::move(source), std::move(target), std::move(map));
  }

  monoid_hom monoid_hom::identity(finite_monoid const& m) {
    std::vector<std::size_t> map(m.order());
    std::iota(map.begin(), map.end(), std::size_t{0});
    return monoid_hom(m, m, std::move(map));
  }

  bool monoid_hom::is_surjective() const {
    std::vector<bool> hit(target_.order(), false);
    for (auto v : map_) {
      hit[v] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  bool monoid_hom::is_injective() const {
    std::vector<bool> hit(target_.order(), false);
    for (auto v : map_) {
      if (hit[v]) {
        return false;
      }
      hit[v] = true;
    }
    return true;
  }

  monoid_hom compose(monoid_hom const& g, monoid_hom const& f) {
    if (!(f.target() == g.source())) {
      throw arity_mismatch("homomorphisms are not composable");
    }
    std::vector<std::size_t> map(f.source().order());
    for (std::size_t x = 0; x < map.size(); ++x) {
      map[x] = g(f(x));
    }
    return monoid_hom::validate(f.source(), g.target(), std::move(map));
  }

  ////////////////////////////////////////////////////////////////////////
  // congruences
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::size_t> normalize_partition(std::vector<std::size_t> const& labels) {
    std::unordered_map<std::size_t, std::size_t> seen;
    std::vector<std::size_t>                     out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto [it, fresh] = seen.try_emplace(labels[i], seen.size());
      out[i]           = it->second;
    }
    return out;
  }

  congruence congruence::validate(finite_monoid                   base,
                                  std::vector<std::size_t> const& partition,
                                  congruence_side                 side) {
    std::size_t const n = base.order();
    if (partition.size() != n) {
      throw arity_mismatch("partition length differs from the monoid order");
    }
    auto        block  = normalize_partition(partition);
    std::size_t blocks = 0;
    for (auto b : block) {
      blocks = std::max(blocks, b + 1);
    }
    std::vector<std::size_t> rep(blocks, n);
    for (std::size_t x = 0; x < n; ++x) {
      if (rep[block[x]] == n) {
        rep[block[x]] = x;
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t const r = rep[block[x]];
      for (std::size_t z = 0; z < n; ++z) {
        if (block[base.mul(x, z)] != block[base.mul(r, z)]) {
          throw error("partition is not a right congruence");
        }
        if (side == congruence_side::two_sided
            && block[base.mul(z, x)] != block[base.mul(z, r)]) {
          throw error("partition is not a left congruence");
        }
      }
    }
    return congruence(std::move(base), std::move(block), blocks, side);
  }

  congruence congruence_closure(finite_monoid const&                                 m,
                                std::span<std::pair<std::size_t, std::size_t> const> pairs,
                                congruence_side                                      side) {
    std::size_t const n = m.order();
    detail::union_find uf(n);
    std::deque<std::pair<std::size_t, std::size_t>> pending;
    for (auto [x, y] : pairs) {
      if (x >= n || y >= n) {
        throw error("congruence pair out of range");
      }
      pending.emplace_back(x, y);
    }
    while (!pending.empty()) {
      auto [x, y] = pending.front();
      pending.pop_front();
      if (!uf.unite(x, y)) {
        continue;
      }
      for (std::size_t z = 0; z < n; ++z) {
        pending.emplace_back(m.mul(x, z), m.mul(y, z));
        if (side == congruence_side::two_sided) {
          pending.emplace_back(m.mul(z, x), m.mul(z, y));
        }
      }
    }
    return congruence::validate(m, uf.labels(), side);
  }

  std::pair<finite_monoid, monoid_hom> quotient_monoid(congruence const& c) {
    if (c.side() != congruence_side::two_sided) {
      throw side_mismatch();
    }
    auto const&       m = c.base();
    std::size_t const k = c.block_count();
    std::vector<std::size_t> rep(k, m.order());
    for (std::size_t x = 0; x < m.order(); ++x) {
      if (rep[c.block_of(x)] == m.order()) {
        rep[c.block_of(x)] = x;
      }
    }
    std::vector<std::size_t> flat(k * k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        flat[a * k + b] = c.block_of(m.mul(rep[a], rep[b]));
      }
    }
    auto q = finite_monoid::trusted(k, std::move(flat), c.block_of(m.identity()));
    return {q, monoid_hom::validate(m, q, c.partition())};
  }

  ////////////////////////////////////////////////////////////////////////
  // transformation monoids
  ////////////////////////////////////////////////////////////////////////

  state_map identity_map(std::size_t degree) {
    state_map id(degree);
    std::iota(id.begin(), id.end(), std::size_t{0});
    return id;
  }

  state_map compose_maps(state_map const& x, state_map const& y, composition order) {
    state_map out(x.size());
    if (order == composition::sequential) {
      for (std::size_t s = 0; s < x.size(); ++s) {
        out[s] = y[x[s]];
      }
    } else {
      for (std::size_t s = 0; s < x.size(); ++s) {
        out[s] = x[y[s]];
      }
    }
    return out;
  }

  transformation_monoid transformation_monoid::from_closed(std::size_t              degree,
                                                           std::vector<state_map>   elements,
                                                           std::vector<std::size_t> generators,
                                                           composition              order) {
    std::unordered_map<state_map, std::size_t, detail::vector_hash> index;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i].size() != degree) {
        throw arity_mismatch("transformation has the wrong degree");
      }
      if (!index.emplace(elements[i], i).second) {
        throw error("transformations are not distinct");
      }
    }
    auto id = index.find(identity_map(degree));
    if (id == index.end()) {
      throw error("identity map missing from transformation monoid");
    }
    std::size_t const        n = elements.size();
    std::vector<std::size_t> flat(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto it = index.find(compose_maps(elements[i], elements[j], order));
        if (it == index.end()) {
          throw error("transformations are not closed under composition");
        }
        flat[i * n + j] = it->second;
      }
    }
    auto m = finite_monoid::trusted(n, std::move(flat), id->second);
    return from_parts(degree, std::move(elements), std::move(m), std::move(generators), order);
  }

  transformation_monoid transformation_monoid::from_parts(std::size_t              degree,
                                                          std::vector<state_map>   elements,
                                                          finite_monoid            monoid,
                                                          std::vector<std::size_t> generators,
                                                          composition              order) {
    transformation_monoid t;
    t.degree_     = degree;
    t.elements_   = std::move(elements);
    t.monoid_     = std::move(monoid);
    t.generators_ = std::move(generators);
    t.order_      = order;
    return t;
  }

  std::optional<std::size_t> transformation_monoid::index_of(state_map const& m) const {
    auto it = std::find(elements_.begin(), elements_.end(), m);
    if (it == elements_.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - elements_.begin());
  }

  transformation_monoid submonoid_closure(std::size_t                degree,
                                          std::span<state_map const> generators,
                                          std::size_t                cap,
                                          composition                order) {
    for (auto const& g : generators) {
      if (g.size() != degree
          || std::any_of(g.begin(), g.end(), [degree](std::size_t v) { return v >= degree; })) {
        throw arity_mismatch("generator is not a total map on " + std::to_string(degree)
                             + " states");
      }
    }
    // Seeding the generators first reproduces breadth-first order, since
    // identity * g = g.
    std::vector<state_map>                                          elements{identity_map(degree)};
    std::unordered_map<state_map, std::size_t, detail::vector_hash> index{{elements[0], 0}};
    std::vector<std::size_t>                                        gens;
    for (auto const& g : generators) {
      auto [it, fresh] = index.try_emplace(g, elements.size());
      if (fresh) {
        elements.push_back(g);
      }
      gens.push_back(it->second);
    }
    std::size_t const ng = generators.size();
    std::vector<std::size_t> right;  // right[k * ng + g] = index of elements[k] * g
    for (std::size_t k = 0; k < elements.size(); ++k) {
      for (std::size_t g = 0; g < ng; ++g) {
        auto y           = compose_maps(elements[k], generators[g], order);
        auto [it, fresh] = index.try_emplace(std::move(y), elements.size());
        if (fresh) {
          if (elements.size() >= cap) {
            throw size_cap_exceeded("submonoid closure", cap);
          }
          elements.push_back(it->first);
        }
        right.push_back(it->second);
      }
    }
    // x * y for y = y' * g is (x * y') * g; every non-identity element has
    // a breadth-first parent, so rows fill in discovery order.
    std::size_t const        n = elements.size();
    std::vector<std::size_t> flat(n * n);
    std::vector<std::size_t> parent(n, n), letter(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t g = 0; g < ng; ++g) {
        std::size_t const y = right[k * ng + g];
        if (y != 0 && parent[y] == n && y > k) {
          parent[y] = k;
          letter[y] = g;
        }
      }
    }
    if (order == composition::sequential) {
      for (std::size_t x = 0; x < n; ++x) {
        flat[x * n] = x;
        for (std::size_t y = 1; y < n; ++y) {
          flat[x * n + y] = right[flat[x * n + parent[y]] * ng + letter[y]];
        }
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          flat[i * n + j] = index.at(compose_maps(elements[i], elements[j], order));
        }
      }
    }
    auto m = finite_monoid::trusted(n, std::move(flat), 0);
    return transformation_monoid::from_parts(degree, std::move(elements), std::move(m), std::move(gens), order);
  }

  ////////////////////////////////////////////////////////////////////////
  // decision procedures
  ////////////////////////////////////////////////////////////////////////

  bool is_group(finite_monoid const& m) {
    for (std::size_t x = 0; x < m.order(); ++x) {
      bool found = false;
      for (std::size_t y = 0; y < m.order() && !found; ++y) {
        found = m.mul(x, y) == m.identity() && m.mul(y, x) == m.identity();
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  std::size_t idempotent_power(finite_monoid const& m, std::size_t x) {
    std::size_t p = x;
    // the idempotent of the cyclic subsemigroup appears among x^1..x^order
    for (std::size_t k = 0; k <= m.order(); ++k) {
      if (m.mul(p, p) == p) {
        return p;
      }
      p = m.mul(p, x);
    }
    throw std::logic_error("no idempotent power found");
  }

  std::optional<std::size_t> aperiodicity_witness(finite_monoid const& m) {
    for (std::size_t x = 0; x < m.order(); ++x) {
      std::size_t const w = idempotent_power(m, x);
      if (m.mul(w, x) != w) {
        return x;
      }
    }
    return std::nullopt;
  }

  bool is_aperiodic(finite_monoid const& m) {
    return !aperiodicity_witness(m).has_value();
  }

  std::vector<bool> generated_submonoid(finite_monoid const& m, std::span<std::size_t const> gens) {
    std::vector<bool>        mask(m.order(), false);
    std::vector<std::size_t> queue{m.identity()};
    mask[m.identity()] = true;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (auto g : gens) {
        std::size_t const y = m.mul(queue[k], g);
        if (!mask[y]) {
          mask[y] = true;
          queue.push_back(y);
        }
      }
    }
    return mask;
  }

  std::vector<std::size_t> minimal_generating_set(finite_monoid const& m) {
    std::vector<std::size_t> gens;
    std::vector<bool>        mask = generated_submonoid(m, gens);
    for (std::size_t x = 0; x < m.order(); ++x) {
      if (!mask[x]) {
        gens.push_back(x);
        mask = generated_submonoid(m, gens);
      }
    }
    return gens;
  }

  std::optional<monoid_hom> extend_to_hom(finite_monoid const&         m,
                                          std::span<std::size_t const> gens_m,
                                          finite_monoid const&         n,
                                          std::span<std::size_t const> gens_n) {
    if (gens_m.size() != gens_n.size()) {
      throw arity_mismatch("generator lists differ in length");
    }
    std::size_t const        unset = m.order();
    std::vector<std::size_t> h(m.order(), unset);
    std::vector<std::size_t> queue{m.identity()};
    h[m.identity()] = n.identity();
    for (std::size_t k = 0; k < queue.size(); ++k) {
      std::size_t const x = queue[k];
      for (std::size_t i = 0; i < gens_m.size(); ++i) {
        std::size_t const y  = m.mul(x, gens_m[i]);
        std::size_t const hy = n.mul(h[x], gens_n[i]);
        if (h[y] == unset) {
          h[y] = hy;
          queue.push_back(y);
        } else if (h[y] != hy) {
          return std::nullopt;
        }
      }
    }
    if (queue.size() != m.order()) {
      throw error("generators do not generate the source monoid");
    }
    try {
      return monoid_hom::validate(m, n, std::move(h));
    } catch (not_homomorphism const&) {
      return std::nullopt;
    }
  }

  namespace {
    // (index, period) of the cyclic subsemigroup generated by x.
    std::pair<std::size_t, std::size_t> cycle_type(finite_monoid const& m, std::size_t x) {
      std::vector<std::size_t> seen(m.order(), 0);
      std::size_t              p = x;
      for (std::size_t k = 1;; ++k) {
        if (seen[p] != 0) {
          return {seen[p], k - seen[p]};
        }
        seen[p] = k;
        p       = m.mul(p, x);
      }
    }
  }  // namespace

  std::optional<monoid_hom> monoid_iso_check(finite_monoid const& m, finite_monoid const& n) {
    if (m.order() != n.order()) {
      return std::nullopt;
    }
    std::vector<std::pair<std::size_t, std::size_t>> tm, tn;
    for (std::size_t x = 0; x < m.order(); ++x) {
      tm.push_back(cycle_type(m, x));
      tn.push_back(cycle_type(n, x));
    }
    {
      auto a = tm, b = tn;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) {
        return std::nullopt;
      }
    }
    auto const               gens = minimal_generating_set(m);
    std::vector<std::size_t> images(gens.size());
    std::optional<monoid_hom> found;

    auto search = [&](auto&& self, std::size_t i) -> bool {
      if (i == gens.size()) {
        auto h = extend_to_hom(m, gens, n, images);
        if (h && h->is_injective()) {
          found = std::move(h);
          return true;
        }
        return false;
      }
      for (std::size_t y = 0; y < n.order(); ++y) {
        if (tn[y] != tm[gens[i]]) {
          continue;
        }
        images[i] = y;
        if (self(self, i + 1)) {
          return true;
        }
      }
      return false;
    };
    search(search, 0);
    return found;
  }

  finite_monoid cyclic_group(std::size_t n) {
    std::vector<std::size_t> flat(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        flat[i * n + j] = (i + j) % n;
      }
    }
    return finite_monoid::trusted(n, std::move(flat), 0);
  }

  finite_monoid direct_product(finite_monoid const& m, finite_monoid const& n) {
    std::size_t const        k = m.order() * n.order();
    std::vector<std::size_t> flat(k * k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        flat[a * k + b] = m.mul(a / n.order(), b / n.order()) * n.order()
                          + n.mul(a % n.order(), b % n.order());
      }
    }
    return finite_monoid::trusted(k, std::move(flat), m.identity() * n.order() + n.identity());
  }

  ////////////////////////////////////////////////////////////////////////
  // enumeration up to isomorphism
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::size_t> least_relabelling(std::vector<std::size_t> const& flat, std::size_t n) {
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::vector<std::size_t> best = flat;
      std::vector<std::size_t> image(n * n);
      do {
        // perm[old] = new; identity stays at 0 because perm fixes 0
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            image[perm[x] * n + perm[y]] = perm[flat[x * n + y]];
          }
        }
        best = std::min(best, image);
      } while (std::next_permutation(perm.begin() + 1, perm.end()));
      return best;
    }
  }  // namespace

  std::vector<finite_monoid> enumerate_monoids(std::size_t order) {
    std::size_t const n = order;
    if (n == 0) {
      return {};
    }
    std::size_t const        unset = n;
    std::vector<std::size_t> t(n * n, unset);
    for (std::size_t x = 0; x < n; ++x) {
      t[x] = x;
      t[x * n] = x;
    }
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t x = 1; x < n; ++x) {
      for (std::size_t y = 1; y < n; ++y) {
        cells.emplace_back(x, y);
      }
    }
    auto consistent = [&]() {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          std::size_t const xy = t[x * n + y];
          if (xy == unset) {
            continue;
          }
          for (std::size_t z = 0; z < n; ++z) {
            std::size_t const yz = t[y * n + z];
            if (yz == unset) {
              continue;
            }
            std::size_t const l = t[xy * n + z];
            std::size_t const r = t[x * n + yz];
            if (l != unset && r != unset && l != r) {
              return false;
            }
          }
        }
      }
      return true;
    };
    std::set<std::vector<std::size_t>> found;
    auto fill = [&](auto&& self, std::size_t c) -> void {
      if (c == cells.size()) {
        found.insert(least_relabelling(t, n));
        return;
      }
      auto [x, y] = cells[c];
      for (std::size_t v = 0; v < n; ++v) {
        t[x * n + y] = v;
        if (consistent()) {
          self(self, c + 1);
        }
      }
      t[x * n + y] = unset;
    };
    fill(fill, 0);
    std::vector<finite_monoid> out;
    for (auto const& flat : found) {
      out.push_back(finite_monoid::trusted(n, flat, 0));
    }
    return out;
  }

}  // namespace semigalois
