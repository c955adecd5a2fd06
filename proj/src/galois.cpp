#include "semigalois/galois.hpp"

#include <stdexcept>
#include <unordered_map>

#include "detail.hpp"
#include "semigalois/error.hpp"

namespace semigalois {

  namespace {
    struct spanning_tree {
      std::vector<std::size_t> order;   // breadth-first from the root
      std::vector<std::size_t> parent;  // parent[root] = root
      std::vector<std::size_t> letter;  // generator leading from parent
    };

    spanning_tree tree_from(action const& x, std::size_t root) {
      std::size_t const n = x.states();
      spanning_tree     t{{root}, std::vector<std::size_t>(n, n), std::vector<std::size_t>(n, 0)};
      t.parent[root] = root;
      for (std::size_t k = 0; k < t.order.size(); ++k) {
        for (std::size_t g = 0; g < x.sig().generator_count(); ++g) {
          std::size_t const s = x.step(t.order[k], g);
          if (t.parent[s] == n) {
            t.parent[s] = t.order[k];
            t.letter[s] = g;
            t.order.push_back(s);
          }
        }
      }
      return t;
    }

    std::optional<state_map> propagate(action const&        x,
                                       spanning_tree const& tree,
                                       action const&        y,
                                       std::size_t          target) {
      if (tree.order.size() != x.states()) {
        return std::nullopt;
      }
      state_map map(x.states());
      map[tree.order.front()] = target;
      for (std::size_t k = 1; k < tree.order.size(); ++k) {
        std::size_t const s = tree.order[k];
        map[s]              = y.act(map[tree.parent[s]], x.sig().generator_column(tree.letter[s]));
      }
      if (equivariance_defect(x, y, map)) {
        return std::nullopt;
      }
      return map;
    }

    // All endomorphisms by root image, or empty if (x, root) is not galois.
    std::optional<std::vector<state_map>> galois_endomorphisms(action const& x, std::size_t root) {
      auto tree = tree_from(x, root);
      if (tree.order.size() != x.states()) {
        return std::nullopt;
      }
      std::vector<state_map> maps;
      maps.reserve(x.states());
      for (std::size_t k = 0; k < x.states(); ++k) {
        auto m = propagate(x, tree, x, k);
        if (!m) {
          return std::nullopt;
        }
        maps.push_back(std::move(*m));
      }
      return maps;
    }

    [[noreturn]] void defect(std::string const& what) {
      throw std::logic_error(what);
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // galois objects
  ////////////////////////////////////////////////////////////////////////

  std::optional<galois_object> galois_object::make(action x, std::size_t root) {
    if (root >= x.states()) {
      return std::nullopt;
    }
    auto maps = galois_endomorphisms(x, root);
    if (!maps) {
      return std::nullopt;
    }
    // (u_i o u_j)(root) = u_i(j)
    std::size_t const        n = x.states();
    std::vector<std::size_t> flat(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        flat[i * n + j] = (*maps)[i][j];
      }
    }
    auto m    = finite_monoid::trusted(n, std::move(flat), root);
    auto gens = minimal_generating_set(m);
    auto end  = std::make_shared<transformation_monoid const>(transformation_monoid::from_parts(
        n, std::move(*maps), std::move(m), std::move(gens), composition::functional));
    return galois_object(std::move(x), root, std::move(end));
  }

  morphism galois_object::endomorphism(std::size_t k) const {
    return morphism::trusted(object_, object_, end_->element(k));
  }

  bool is_galois(action const& x, std::size_t root) {
    return root < x.states() && galois_endomorphisms(x, root).has_value();
  }

  std::optional<morphism> pointed_morphism(action const& x, std::size_t root, action const& y, std::size_t target) {
    if (!(x.sig() == y.sig())) {
      throw signature_mismatch();
    }
    if (root >= x.states() || target >= y.states()) {
      return std::nullopt;
    }
    auto map = propagate(x, tree_from(x, root), y, target);
    if (!map) {
      return std::nullopt;
    }
    return morphism::trusted(x, y, std::move(*map));
  }

  galois_closure_result galois_closure(action const& y, std::size_t cap) {
    std::size_t const n = y.states();
    if (n == 0) {
      throw empty_action();
    }
    std::size_t const gens = y.sig().generator_count();
    std::vector<state_map> tuples{identity_map(n)};
    std::unordered_map<state_map, std::size_t, detail::vector_hash> index{{tuples[0], 0}};
    auto step = [&](state_map const& t, std::size_t column) {
      state_map out(n);
      for (std::size_t i = 0; i < n; ++i) {
        out[i] = y.act(t[i], column);
      }
      return out;
    };
    for (std::size_t k = 0; k < tuples.size(); ++k) {
      for (std::size_t g = 0; g < gens; ++g) {
        auto next        = step(tuples[k], y.sig().generator_column(g));
        auto [it, fresh] = index.try_emplace(std::move(next), tuples.size());
        if (fresh) {
          if (tuples.size() >= cap) {
            throw size_cap_exceeded("galois closure", cap);
          }
          tuples.push_back(it->first);
        }
      }
    }
    std::size_t const      size = tuples.size();
    std::vector<state_map> columns(y.sig().column_count(), state_map(size));
    for (std::size_t c = 0; c < columns.size(); ++c) {
      for (std::size_t k = 0; k < size; ++k) {
        columns[c][k] = index.at(step(tuples[k], c));
      }
    }
    auto gamma = action::trusted(y.sig(), size, std::move(columns));
    auto g     = galois_object::make(gamma, 0);
    if (!g) {
      defect("galois closure is not galois");
    }
    std::vector<morphism> witness;
    for (std::size_t i = 0; i < n; ++i) {
      state_map proj(size);
      for (std::size_t k = 0; k < size; ++k) {
        proj[k] = tuples[k][i];
      }
      witness.push_back(morphism::validate(gamma, y, std::move(proj)));
    }
    // Hom(closure, Y) -> F(Y), evaluation at the root, must be bijective.
    auto homs = hom_set(gamma, y);
    if (homs.size() != n) {
      defect("galois closure evaluation is not bijective");
    }
    for (auto const& h : homs) {
      if (!(h == witness[h(0)])) {
        defect("galois closure witness disagrees with hom search");
      }
    }
    return {std::move(*g), std::move(witness)};
  }

  ////////////////////////////////////////////////////////////////////////
  // the inverse system
  ////////////////////////////////////////////////////////////////////////

  std::optional<galois_arrow> pointed_arrow(galois_object const& from, galois_object const& to) {
    auto m = pointed_morphism(from.object(), from.root(), to.object(), to.root());
    if (!m) {
      return std::nullopt;
    }
    if (!is_epi(*m)) {
      defect("pointed arrow between galois objects is not epi");
    }
    return galois_arrow{from, to, std::move(*m)};
  }

  galois_arrow compose(galois_arrow const& second, galois_arrow const& first) {
    return {first.from, second.to, compose(second.arrow, first.arrow)};
  }

  monoid_hom connecting_hom(galois_arrow const& a) {
    // u'(root') = arrow(u(root)), and u is indexed by u(root)
    auto hom = monoid_hom::validate(a.from.end().monoid(), a.to.end().monoid(), a.arrow.map());
    if (!hom.is_surjective()) {
      defect("connecting homomorphism is not surjective");
    }
    return hom;
  }

  galois_meet meet_galois(galois_object const& a, galois_object const& b) {
    auto        p    = product(a.object(), b.object());
    std::size_t root = a.root() * b.states() + b.root();
    auto        sub  = orbit_subobject(p.object, root);
    auto        g    = galois_object::make(sub.object, 0);
    if (!g) {
      defect("orbit of the pair of roots is not galois");
    }
    auto first  = pointed_arrow(*g, a);
    auto second = pointed_arrow(*g, b);
    if (!first || !second) {
      defect("meet has no pointed arrows to its factors");
    }
    return {std::move(*g), std::move(*first), std::move(*second)};
  }

  ////////////////////////////////////////////////////////////////////////
  // finite quotients and galois objects
  ////////////////////////////////////////////////////////////////////////

  galois_kernel galois_congruence(galois_object const& g) {
    auto const& sig = g.object().sig();
    if (sig.is_free()) {
      return word_kernel(g);
    }
    std::vector<std::size_t> labels(sig.monoid().order());
    for (std::size_t m = 0; m < labels.size(); ++m) {
      labels[m] = g.object().act(g.root(), m);
    }
    return congruence::validate(sig.monoid(), labels, congruence_side::two_sided);
  }

  galois_object stamp_to_galois(monoid_hom const& p) {
    if (!p.is_surjective()) {
      throw not_surjective();
    }
    auto const&            h = p.target();
    auto const&            m = p.source();
    std::vector<state_map> columns(m.order(), state_map(h.order()));
    for (std::size_t e = 0; e < m.order(); ++e) {
      for (std::size_t k = 0; k < h.order(); ++k) {
        columns[e][k] = h.mul(k, p(e));
      }
    }
    auto x = action::trusted(signature::finite(m), h.order(), std::move(columns));
    auto g = galois_object::make(x, h.identity());
    if (!g) {
      defect("galois object of a finite quotient is not galois");
    }
    return std::move(*g);
  }

  monoid_hom end_iso(galois_object const& gamma_h, finite_monoid const& h) {
    if (gamma_h.states() != h.order() || gamma_h.root() != h.identity()) {
      throw error("object is not the galois object of this monoid");
    }
    auto                                                     end = end_monoid(gamma_h.object());
    std::unordered_map<state_map, std::size_t, detail::vector_hash> index;
    for (std::size_t i = 0; i < end.size(); ++i) {
      index.emplace(end.element(i), i);
    }
    std::vector<std::size_t> map(h.order());
    for (std::size_t x = 0; x < h.order(); ++x) {
      state_map left(h.order());
      for (std::size_t k = 0; k < h.order(); ++k) {
        left[k] = h.mul(x, k);
      }
      auto it = index.find(left);
      if (it == index.end()) {
        throw reconstruction_failure("left translation by " + std::to_string(x)
                                     + " is not an endomorphism");
      }
      map[x] = it->second;
    }
    monoid_hom hom = [&] {
      try {
        return monoid_hom::validate(h, end.monoid(), std::move(map));
      } catch (not_homomorphism const& e) {
        throw reconstruction_failure(std::string("left translations: ") + e.what());
      }
    }();
    if (!hom.is_injective() || !hom.is_surjective()) {
      throw reconstruction_failure("left translations do not exhaust End");
    }
    return hom;
  }

  monoid_hom reconstruct_check(finite_monoid const& m) {
    try {
      return end_iso(stamp_to_galois(monoid_hom::identity(m)), m);
    } catch (reconstruction_failure const&) {
      throw;
    } catch (std::exception const& e) {
      throw reconstruction_failure(e.what());
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // stages
  ////////////////////////////////////////////////////////////////////////

  stage_monoid fundamental_monoid(std::span<action const> generators, std::size_t cap) {
    if (generators.empty()) {
      throw error("fundamental monoid needs at least one generating action");
    }
    action p = generators.front();
    for (std::size_t i = 1; i < generators.size(); ++i) {
      p = product(p, generators[i]).object;
    }
    auto              closure = galois_closure(p, cap).closure;
    auto const&       gamma   = closure.object();
    std::size_t const root    = closure.root();
    std::vector<std::size_t> stamp;
    for (std::size_t g = 0; g < gamma.sig().generator_count(); ++g) {
      stamp.push_back(gamma.step(root, g));
    }
    auto const& end    = closure.end();
    auto        monoid = transformation_monoid::from_parts(end.degree(), end.elements(), end.monoid(),
                                                           stamp, composition::functional);
    return {std::move(closure), std::move(monoid), std::move(stamp)};
  }

  realization realize_as_mset(action const& x, stage_monoid const& stage, std::span<action const> others) {
    auto const& gamma = stage.stage.object();
    if (!x.sig().is_free() || !(x.sig() == gamma.sig())) {
      throw signature_mismatch("realization needs a DFA over the stage alphabet");
    }
    auto              tree = tree_from(gamma, stage.stage.root());
    std::size_t const n    = gamma.states();
    auto sig = signature::finite(stage.monoid.monoid(), stage.stamp);

    auto realize = [&](action const& y) {
      if (!(y.sig() == gamma.sig())) {
        throw signature_mismatch();
      }
      std::vector<state_map> columns(n, state_map(y.states()));
      columns[tree.order.front()] = identity_map(y.states());
      for (std::size_t k = 1; k < n; ++k) {
        std::size_t const e = tree.order[k];
        for (std::size_t s = 0; s < y.states(); ++s) {
          columns[e][s] = y.step(columns[tree.parent[e]][s], tree.letter[e]);
        }
      }
      // every word reaching e must act like the tree word of e
      for (std::size_t e = 0; e < n; ++e) {
        for (std::size_t g = 0; g < gamma.sig().generator_count(); ++g) {
          std::size_t const next = gamma.step(e, g);
          for (std::size_t s = 0; s < y.states(); ++s) {
            if (columns[next][s] != y.step(columns[e][s], g)) {
              throw ill_defined(next, s);
            }
          }
        }
      }
      return action::trusted(sig, y.states(), std::move(columns));
    };

    realization out{realize(x), {}};
    for (auto const& y : others) {
      auto           phi_y = realize(y);
      fullness_entry entry{y, {}, {}, false};
      for (auto const& h : hom_set(x, y)) {
        entry.free_homs.push_back(h.map());
      }
      for (auto const& h : hom_set(out.mset, phi_y)) {
        entry.finite_homs.push_back(h.map());
      }
      entry.equal = entry.free_homs == entry.finite_homs;
      out.fullness.push_back(std::move(entry));
    }
    return out;
  }

  std::vector<cyclic_component> cyclic_decomposition(action const& s) {
    if (s.sig().is_free()) {
      throw signature_mismatch("cyclic decomposition needs a finite monoid action");
    }
    std::vector<cyclic_component> out;
    if (s.states() == 0) {
      return out;
    }
    auto const& m       = s.sig().monoid();
    auto        regular = stamp_to_galois(monoid_hom::identity(m));
    auto const& gamma   = regular.object();
    // element e sits at state root.e
    auto        at      = [&](std::size_t e) { return gamma.act(regular.root(), e); };
    auto        left    = [&](std::size_t x) {
      state_map map(m.order());
      for (std::size_t k = 0; k < m.order(); ++k) {
        map[at(k)] = at(m.mul(x, k));
      }
      return morphism::validate(gamma, gamma, std::move(map));
    };

    for (auto const& component : optimal_covering(s).cover.components) {
      std::size_t const        a = component(0);  // orbit subobjects are rooted at 0
      std::vector<std::size_t> labels(m.order());
      for (std::size_t e = 0; e < m.order(); ++e) {
        labels[e] = s.act(a, e);
      }
      auto kernel = congruence::validate(m, labels, congruence_side::right);
      std::vector<std::size_t> rep(kernel.block_count(), m.order());
      std::vector<std::pair<morphism, morphism>> relation;
      for (std::size_t e = 0; e < m.order(); ++e) {
        std::size_t const b = kernel.block_of(e);
        if (rep[b] == m.order()) {
          rep[b] = e;
        } else {
          relation.emplace_back(left(rep[b]), left(e));
        }
      }
      auto q     = universal_quotient(gamma, relation);
      auto orbit = orbit_subobject(s, a);
      // class of e |-> a.e, read in the orbit's numbering
      std::vector<std::size_t> index(s.states(), 0);
      for (std::size_t i = 0; i < orbit.object.states(); ++i) {
        index[orbit.inclusion(i)] = i;
      }
      state_map iso(q.object.states());
      for (std::size_t e = 0; e < m.order(); ++e) {
        iso[q.projection(at(e))] = index[s.act(a, e)];
      }
      auto witness = morphism::validate(q.object, orbit.object, std::move(iso));
      if (!is_iso(witness)) {
        defect("orbit is not isomorphic to the quotient of the regular action");
      }
      out.push_back({a, std::move(kernel), std::move(orbit), std::move(q), std::move(witness)});
    }
    return out;
  }

  factorization reassemble(std::span<cyclic_component const> parts, action const& s) {
    action    sum = initial(s.sig());
    state_map glue;
    for (auto const& part : parts) {
      sum = coproduct(sum, part.regular_quotient.object).object;
      for (std::size_t k = 0; k < part.regular_quotient.object.states(); ++k) {
        glue.push_back(part.orbit.inclusion(part.iso(k)));
      }
    }
    return image_factorize(morphism::validate(sum, s, std::move(glue)));
  }

}  // namespace semigalois
