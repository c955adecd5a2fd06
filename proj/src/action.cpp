#include "semigalois/action.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "detail.hpp"
#include "semigalois/error.hpp"

namespace semigalois {

  ////////////////////////////////////////////////////////////////////////
  // signature
  ////////////////////////////////////////////////////////////////////////

  signature signature::free_monoid(std::string alphabet) {
    if (alphabet.empty()) {
      throw error("alphabet must be non-empty");
    }
    std::set<char> seen(alphabet.begin(), alphabet.end());
    if (seen.size() != alphabet.size()) {
      throw error("alphabet has repeated letters");
    }
    signature s;
    s.free_     = true;
    s.alphabet_ = std::move(alphabet);
    s.generators_.resize(s.alphabet_.size());
    std::iota(s.generators_.begin(), s.generators_.end(), std::size_t{0});
    return s;
  }

  signature signature::finite(finite_monoid m, std::vector<std::size_t> generators) {
    for (auto g : generators) {
      if (g >= m.order()) {
        throw error("generator index out of range");
      }
    }
    auto mask = generated_submonoid(m, generators);
    if (std::find(mask.begin(), mask.end(), false) != mask.end()) {
      throw error("generators do not generate the monoid");
    }
    signature s;
    s.free_       = false;
    s.monoid_     = std::move(m);
    s.generators_ = std::move(generators);
    return s;
  }

  signature signature::finite(finite_monoid m) {
    auto gens = minimal_generating_set(m);
    return finite(std::move(m), std::move(gens));
  }

  std::string const& signature::alphabet() const {
    if (!free_) {
      throw error("finite signatures have no alphabet");
    }
    return alphabet_;
  }

  finite_monoid const& signature::monoid() const {
    if (free_) {
      throw error("free signatures have no finite monoid");
    }
    return monoid_;
  }

  bool operator==(signature const& a, signature const& b) {
    if (a.free_ != b.free_) {
      return false;
    }
    return a.free_ ? a.alphabet_ == b.alphabet_ : a.monoid_ == b.monoid_;
  }

  ////////////////////////////////////////////////////////////////////////
  // action
  ////////////////////////////////////////////////////////////////////////

  action action::validate(signature                                            sig,
                          std::vector<state_map>                               trans,
                          std::optional<std::vector<std::vector<std::size_t>>> full_table) {
    auto check_map = [](state_map const& m, std::size_t n) {
      if (m.size() != n) {
        throw arity_mismatch("transition map has " + std::to_string(m.size())
                             + " entries, expected " + std::to_string(n));
      }
      for (auto v : m) {
        if (v >= n) {
          throw arity_mismatch("transition target " + std::to_string(v) + " out of range");
        }
      }
    };
    if (sig.is_free()) {
      if (full_table) {
        throw arity_mismatch("free actions take no full table");
      }
      if (trans.size() != sig.alphabet().size()) {
        throw arity_mismatch("expected one map per letter");
      }
      std::size_t const n = trans.front().size();
      for (auto const& m : trans) {
        check_map(m, n);
      }
      return trusted(std::move(sig), n, std::move(trans));
    }
    if (!full_table) {
      throw arity_mismatch("finite actions need the full state x element table");
    }
    auto const&       m = sig.monoid();
    std::size_t const n = full_table->size();
    std::vector<state_map> columns(m.order(), state_map(n));
    for (std::size_t s = 0; s < n; ++s) {
      auto const& row = (*full_table)[s];
      if (row.size() != m.order()) {
        throw arity_mismatch("full table row has the wrong length");
      }
      for (std::size_t e = 0; e < m.order(); ++e) {
        if (row[e] >= n) {
          throw arity_mismatch("full table entry out of range");
        }
        columns[e][s] = row[e];
      }
    }
    for (std::size_t s = 0; s < n; ++s) {
      if (columns[m.identity()][s] != s) {
        throw action_law_violation(s, m.identity(), m.identity());
      }
      for (std::size_t x = 0; x < m.order(); ++x) {
        for (std::size_t y = 0; y < m.order(); ++y) {
          if (columns[y][columns[x][s]] != columns[m.mul(x, y)][s]) {
            throw action_law_violation(s, x, y);
          }
        }
      }
    }
    if (!trans.empty()) {
      if (trans.size() != sig.generator_count()) {
        throw arity_mismatch("expected one map per generator");
      }
      for (std::size_t g = 0; g < trans.size(); ++g) {
        if (trans[g] != columns[sig.generator_column(g)]) {
          throw arity_mismatch("generator map " + std::to_string(g)
                               + " disagrees with the full table");
        }
      }
    }
    return trusted(std::move(sig), n, std::move(columns));
  }

  action action::trusted(signature sig, std::size_t states, std::vector<state_map> columns) {
    if (columns.size() != sig.column_count()) {
      throw arity_mismatch("wrong number of action columns");
    }
    return action(std::make_shared<data const>(data{std::move(sig), states, std::move(columns)}));
  }

  std::size_t action::run(std::size_t s, std::span<std::size_t const> word) const noexcept {
    for (auto g : word) {
      s = step(s, g);
    }
    return s;
  }

  bool operator==(action const& a, action const& b) {
    if (a.data_ == b.data_) {
      return true;
    }
    return a.states() == b.states() && a.sig() == b.sig() && a.columns() == b.columns();
  }

  ////////////////////////////////////////////////////////////////////////
  // morphism
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::pair<std::size_t, std::size_t>>
  equivariance_defect(action const& dom, action const& cod, state_map const& map) {
    std::size_t const gens = dom.sig().generator_count();
    for (std::size_t s = 0; s < dom.states(); ++s) {
      for (std::size_t g = 0; g < gens; ++g) {
        std::size_t const c = dom.sig().generator_column(g);
        if (map[dom.act(s, c)] != cod.act(map[s], c)) {
          return std::pair{s, g};
        }
      }
    }
    return std::nullopt;
  }

  morphism morphism::validate(action dom, action cod, state_map map) {
    if (!(dom.sig() == cod.sig())) {
      throw signature_mismatch();
    }
    if (map.size() != dom.states()) {
      throw arity_mismatch("morphism table has the wrong length");
    }
    for (auto v : map) {
      if (v >= cod.states()) {
        throw arity_mismatch("morphism target out of range");
      }
    }
    if (auto defect = equivariance_defect(dom, cod, map)) {
      throw not_equivariant(defect->first, defect->second);
    }
    return morphism(std::move(dom), std::move(cod), std::move(map));
  }

  morphism morphism::trusted(action dom, action cod, state_map map) {
    return morphism(std::move(dom), std::move(cod), std::move(map));
  }

  morphism morphism::identity(action const& x) {
    return morphism(x, x, identity_map(x.states()));
  }

  morphism compose(morphism const& g, morphism const& f) {
    if (!(f.cod() == g.dom())) {
      throw signature_mismatch("morphisms are not composable");
    }
    state_map map(f.dom().states());
    for (std::size_t s = 0; s < map.size(); ++s) {
      map[s] = g(f(s));
    }
    return morphism::trusted(f.dom(), g.cod(), std::move(map));
  }

  std::vector<std::size_t> fiber(action const& x) {
    return identity_map(x.states());
  }

  ////////////////////////////////////////////////////////////////////////
  // hom sets
  ////////////////////////////////////////////////////////////////////////

  std::vector<morphism> hom_set(action const& x, action const& y, std::size_t cap) {
    if (!(x.sig() == y.sig())) {
      throw signature_mismatch();
    }
    std::size_t const n     = x.states();
    std::size_t const m     = y.states();
    std::size_t const gens  = x.sig().generator_count();
    std::size_t const unset = m;
    std::vector<morphism> out;
    if (n == 0) {
      out.push_back(morphism::trusted(x, y, {}));
      return out;
    }
    if (m == 0) {
      return out;
    }
    state_map                assign(n, unset);
    std::vector<std::size_t> trail;
    std::size_t              visited = 0;

    auto propagate = [&](std::size_t s, std::size_t t) {
      std::size_t const mark = trail.size();
      assign[s]              = t;
      trail.push_back(s);
      for (std::size_t k = mark; k < trail.size(); ++k) {
        std::size_t const q = trail[k];
        for (std::size_t g = 0; g < gens; ++g) {
          std::size_t const c  = x.sig().generator_column(g);
          std::size_t const qn = x.act(q, c);
          std::size_t const tn = y.act(assign[q], c);
          if (assign[qn] == unset) {
            assign[qn] = tn;
            trail.push_back(qn);
          } else if (assign[qn] != tn) {
            return false;
          }
        }
      }
      return true;
    };
    auto undo = [&](std::size_t mark) {
      while (trail.size() > mark) {
        assign[trail.back()] = unset;
        trail.pop_back();
      }
    };
    auto search = [&](auto&& self, std::size_t from) -> void {
      while (from < n && assign[from] != unset) {
        ++from;
      }
      if (from == n) {
        out.push_back(morphism::trusted(x, y, assign));
        return;
      }
      for (std::size_t t = 0; t < m; ++t) {
        if (++visited > cap) {
          throw size_cap_exceeded("hom-set search", cap);
        }
        std::size_t const mark = trail.size();
        if (propagate(from, t)) {
          self(self, from + 1);
        }
        undo(mark);
      }
    };
    search(search, 0);
    return out;
  }

  bool is_mono(morphism const& f) {
    std::vector<bool> hit(f.cod().states(), false);
    for (auto v : f.map()) {
      if (hit[v]) {
        return false;
      }
      hit[v] = true;
    }
    return true;
  }

  bool is_epi(morphism const& f) {
    std::vector<bool> hit(f.cod().states(), false);
    for (auto v : f.map()) {
      hit[v] = true;
    }
    return std::find(hit.begin(), hit.end(), false) == hit.end();
  }

  bool is_iso(morphism const& f) {
    return is_mono(f) && is_epi(f);
  }

  std::optional<morphism> inverse(morphism const& f) {
    if (!is_iso(f)) {
      return std::nullopt;
    }
    state_map inv(f.cod().states());
    for (std::size_t s = 0; s < f.dom().states(); ++s) {
      inv[f(s)] = s;
    }
    if (equivariance_defect(f.cod(), f.dom(), inv)) {
      return std::nullopt;
    }
    return morphism::trusted(f.cod(), f.dom(), std::move(inv));
  }

  ////////////////////////////////////////////////////////////////////////
  // subobjects
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // The subaction on `states` (listed in the order they should be
    // numbered); throws if they are not closed under the action.
    subobject subaction(action const& x, std::vector<std::size_t> const& states) {
      std::size_t const        n = x.states();
      std::vector<std::size_t> index(n, n);
      for (std::size_t i = 0; i < states.size(); ++i) {
        index[states[i]] = i;
      }
      std::vector<state_map> columns(x.sig().column_count(), state_map(states.size()));
      for (std::size_t c = 0; c < columns.size(); ++c) {
        for (std::size_t i = 0; i < states.size(); ++i) {
          std::size_t const t = index[x.act(states[i], c)];
          if (t == n) {
            throw std::logic_error("state set is not closed under the action");
          }
          columns[c][i] = t;
        }
      }
      auto sub = action::trusted(x.sig(), states.size(), std::move(columns));
      return {sub, morphism::trusted(sub, x, states)};
    }
  }  // namespace

  factorization image_factorize(morphism const& f) {
    std::vector<bool> hit(f.cod().states(), false);
    for (auto v : f.map()) {
      hit[v] = true;
    }
    std::vector<std::size_t> image;
    std::vector<std::size_t> index(f.cod().states(), 0);
    for (std::size_t s = 0; s < hit.size(); ++s) {
      if (hit[s]) {
        index[s] = image.size();
        image.push_back(s);
      }
    }
    auto      sub = subaction(f.cod(), image);
    state_map epi(f.dom().states());
    for (std::size_t s = 0; s < epi.size(); ++s) {
      epi[s] = index[f(s)];
    }
    return {morphism::trusted(f.dom(), sub.object, std::move(epi)), sub.object, sub.inclusion};
  }

  std::vector<std::size_t> orbit(action const& x, std::size_t root) {
    if (root >= x.states()) {
      throw error("state " + std::to_string(root) + " out of range");
    }
    std::vector<bool>        seen(x.states(), false);
    std::vector<std::size_t> order{root};
    seen[root] = true;
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (std::size_t g = 0; g < x.sig().generator_count(); ++g) {
        std::size_t const t = x.step(order[k], g);
        if (!seen[t]) {
          seen[t] = true;
          order.push_back(t);
        }
      }
    }
    return order;
  }

  subobject orbit_subobject(action const& x, std::size_t root) {
    return subaction(x, orbit(x, root));
  }

  std::vector<std::size_t> roots(action const& x) {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < x.states(); ++s) {
      if (orbit(x, s).size() == x.states()) {
        out.push_back(s);
      }
    }
    return out;
  }

  bool is_rooted(action const& x) {
    return !roots(x).empty();
  }

  transformation_monoid end_monoid(action const& x, std::size_t cap) {
    auto                   homs = hom_set(x, x, cap);
    std::vector<state_map> elements;
    elements.reserve(homs.size());
    for (auto const& h : homs) {
      elements.push_back(h.map());
    }
    auto const rts = roots(x);
    if (rts.empty()) {
      auto t = transformation_monoid::from_closed(x.states(), std::move(elements), {},
                                                  composition::functional);
      auto gens = minimal_generating_set(t.monoid());
      return transformation_monoid::from_parts(t.degree(), t.elements(), t.monoid(),
                                               std::move(gens), composition::functional);
    }
    // An endomorphism of a rooted object is fixed by the image of a root.
    std::size_t const                            r = rts.front();
    std::unordered_map<std::size_t, std::size_t> by_image;
    std::size_t                                  id = elements.size();
    for (std::size_t i = 0; i < elements.size(); ++i) {
      by_image.emplace(elements[i][r], i);
      if (elements[i][r] == r) {
        id = i;
      }
    }
    std::size_t const        n = elements.size();
    std::vector<std::size_t> flat(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        flat[i * n + j] = by_image.at(elements[i][elements[j][r]]);
      }
    }
    auto m    = finite_monoid::trusted(n, std::move(flat), id);
    auto gens = minimal_generating_set(m);
    return transformation_monoid::from_parts(x.states(), std::move(elements), std::move(m),
                                             std::move(gens), composition::functional);
  }

  ////////////////////////////////////////////////////////////////////////
  // coverings
  ////////////////////////////////////////////////////////////////////////

  bool is_covering(action const& target, std::span<morphism const> components) {
    std::vector<bool> hit(target.states(), false);
    for (std::size_t i = 0; i < components.size(); ++i) {
      auto const& c = components[i];
      if (!(c.cod() == target)) {
        throw signature_mismatch("covering component does not land in the target");
      }
      if (!is_mono(c)) {
        throw not_mono(i);
      }
      for (auto v : c.map()) {
        hit[v] = true;
      }
    }
    return std::find(hit.begin(), hit.end(), false) == hit.end();
  }

  optimal_cover optimal_covering(action const& x) {
    if (x.states() == 0) {
      throw empty_action();
    }
    std::vector<std::size_t>              reps;
    std::vector<std::vector<std::size_t>> sets;
    for (std::size_t s = 0; s < x.states(); ++s) {
      auto o = orbit(x, s);
      std::sort(o.begin(), o.end());
      if (std::find(sets.begin(), sets.end(), o) == sets.end()) {
        reps.push_back(s);
        sets.push_back(std::move(o));
      }
    }
    covering cover{x, {}};
    for (std::size_t i = 0; i < sets.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < sets.size() && !dominated; ++j) {
        dominated = j != i && sets[j].size() > sets[i].size()
                    && std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end());
      }
      if (!dominated) {
        cover.components.push_back(orbit_subobject(x, reps[i]).inclusion);
      }
    }
    std::size_t const degree = cover.components.size();
    return {std::move(cover), degree};
  }

  ////////////////////////////////////////////////////////////////////////
  // misc
  ////////////////////////////////////////////////////////////////////////

  action restrict_scalars(monoid_hom const& f, action const& x) {
    if (x.sig().is_free() || !(x.sig().monoid() == f.target())) {
      throw signature_mismatch("action is not over the target of the homomorphism");
    }
    auto                   sig = signature::finite(f.source());
    std::vector<state_map> columns;
    columns.reserve(f.source().order());
    for (std::size_t e = 0; e < f.source().order(); ++e) {
      columns.push_back(x.column(f(e)));
    }
    return action::trusted(std::move(sig), x.states(), std::move(columns));
  }

  std::optional<morphism> action_isomorphism(action const& x, action const& y, std::size_t cap) {
    if (!(x.sig() == y.sig()) || x.states() != y.states()) {
      return std::nullopt;
    }
    for (auto& h : hom_set(x, y, cap)) {
      if (is_iso(h)) {
        return h;
      }
    }
    return std::nullopt;
  }

  action relabel(action const& x, std::span<std::size_t const> perm) {
    std::vector<state_map> columns(x.sig().column_count(), state_map(x.states()));
    for (std::size_t c = 0; c < columns.size(); ++c) {
      for (std::size_t s = 0; s < x.states(); ++s) {
        columns[c][perm[s]] = perm[x.act(s, c)];
      }
    }
    return action::trusted(x.sig(), x.states(), std::move(columns));
  }

}  // namespace semigalois
