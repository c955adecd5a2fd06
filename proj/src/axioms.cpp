#include "semigalois/axioms.hpp"

#include <map>
#include <set>
#include <sstream>

#include "semigalois/error.hpp"

namespace semigalois {

  std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
  }

  action random_free_action(std::mt19937_64& rng, std::string const& alphabet, std::size_t min_states,
                            std::size_t max_states) {
    std::size_t const n = min_states + uniform_index(rng, max_states - min_states + 1);
    std::vector<state_map> trans(alphabet.size(), state_map(n));
    for (auto& t : trans) {
      for (auto& s : t) {
        s = uniform_index(rng, n);
      }
    }
    return action::validate(signature::free_monoid(alphabet), std::move(trans));
  }

  action random_mset(std::mt19937_64& rng, signature const& sig, std::size_t max_states) {
    auto const&       m      = sig.monoid();
    std::size_t const copies = 1 + uniform_index(rng, 2);
    std::size_t const n      = copies * m.order();
    std::vector<state_map> columns(m.order(), state_map(n));
    for (std::size_t e = 0; e < m.order(); ++e) {
      for (std::size_t s = 0; s < n; ++s) {
        columns[e][s] = (s / m.order()) * m.order() + m.mul(s % m.order(), e);
      }
    }
    auto              x      = action::trusted(sig, n, std::move(columns));
    std::size_t const target = 1 + uniform_index(rng, max_states);
    while (x.states() > target) {
      std::pair<std::size_t, std::size_t> pair{uniform_index(rng, x.states()), uniform_index(rng, x.states())};
      x = saturated_quotient(x, std::span(&pair, 1)).object;
    }
    return x;
  }

  std::optional<morphism> random_morphism(std::mt19937_64& rng, action const& x, action const& y) {
    auto homs = hom_set(x, y);
    if (homs.empty()) {
      return std::nullopt;
    }
    return homs[uniform_index(rng, homs.size())];
  }

  std::string describe(action const& x) {
    std::ostringstream out;
    auto const&        sig = x.sig();
    if (sig.is_free()) {
      out << "free over '" << sig.alphabet() << "'";
    } else {
      out << "monoid of order " << sig.monoid().order() << " table [";
      for (std::size_t a = 0; a < sig.monoid().order(); ++a) {
        out << (a ? "; " : "");
        for (std::size_t b = 0; b < sig.monoid().order(); ++b) {
          out << (b ? " " : "") << sig.monoid().mul(a, b);
        }
      }
      out << "] identity " << sig.monoid().identity();
    }
    out << ", " << x.states() << " states";
    for (std::size_t g = 0; g < sig.generator_count(); ++g) {
      out << ", g" << g << " = [";
      for (std::size_t s = 0; s < x.states(); ++s) {
        out << (s ? " " : "") << x.step(s, g);
      }
      out << "]";
    }
    return out.str();
  }

  namespace {
    std::string describe(morphism const& f) {
      std::ostringstream out;
      out << "map [";
      for (std::size_t s = 0; s < f.map().size(); ++s) {
        out << (s ? " " : "") << f(s);
      }
      out << "] from {" << semigalois::describe(f.dom()) << "} to {" << semigalois::describe(f.cod()) << "}";
      return out.str();
    }

    // Connected components of an undirected graph on n vertices, by
    // depth-first search, labelled by discovery order.
    std::vector<std::size_t> components(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> const& edges) {
      std::vector<std::vector<std::size_t>> adj(n);
      for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
      std::size_t const        unset = n;
      std::vector<std::size_t> label(n, unset);
      std::size_t              next = 0;
      for (std::size_t s = 0; s < n; ++s) {
        if (label[s] != unset) {
          continue;
        }
        std::vector<std::size_t> stack{s};
        label[s] = next;
        while (!stack.empty()) {
          std::size_t const u = stack.back();
          stack.pop_back();
          for (auto v : adj[u]) {
            if (label[v] == unset) {
              label[v] = next;
              stack.push_back(v);
            }
          }
        }
        ++next;
      }
      return label;
    }

    bool same_partition(std::vector<std::size_t> const& a, std::vector<std::size_t> const& b) {
      if (a.size() != b.size()) {
        return false;
      }
      for (std::size_t u = 0; u < a.size(); ++u) {
        for (std::size_t v = 0; v < a.size(); ++v) {
          if ((a[u] == a[v]) != (b[u] == b[v])) {
            return false;
          }
        }
      }
      return true;
    }

    bool surjective(state_map const& map, std::size_t n) {
      std::set<std::size_t> image(map.begin(), map.end());
      return image.size() == n;
    }

    bool injective(state_map const& map) {
      return std::set<std::size_t>(map.begin(), map.end()).size() == map.size();
    }

    bool equivariant(morphism const& f) {
      return !equivariance_defect(f.dom(), f.cod(), f.map()).has_value();
    }

    class suite {
     public:
      void record(std::string const& property, bool ok, auto&& explain) {
        auto& [checked, failed] = tally_[property];
        ++checked;
        if (!ok) {
          ++failed;
          failures_.push_back({property, false, explain()});
        }
      }

      check_report finish() {
        check_report report;
        for (auto const& [property, counts] : tally_) {
          report.add(property, counts.second == 0,
                     std::to_string(counts.first) + " checked, " + std::to_string(counts.second) + " failed");
        }
        for (auto& f : failures_) {
          report.entries.push_back(std::move(f));
        }
        return report;
      }

     private:
      std::map<std::string, std::pair<std::size_t, std::size_t>> tally_;
      std::vector<check_entry>                                   failures_;
    };

    // Pairs (u, v) of states in u's and v's actions, as the legs see them.
    std::set<std::pair<std::size_t, std::size_t>> leg_pairs(cone const& c) {
      std::set<std::pair<std::size_t, std::size_t>> out;
      for (std::size_t p = 0; p < c.object.states(); ++p) {
        out.emplace(c.first(p), c.second(p));
      }
      return out;
    }

    void check_fiber_functor_on(suite& s, morphism const& h) {
      std::size_t const n_cod = h.cod().states();
      bool const        surj  = surjective(h.map(), n_cod);
      bool const        inj   = injective(h.map());

      auto const cokernel = pushout(h, h);
      bool const cat_epi  = cokernel.first.map() == cokernel.second.map();
      s.record("epi iff surjective", cat_epi == surj && is_epi(h) == surj, [&] { return describe(h); });

      auto const kernel  = pullback(h, h);
      bool const cat_mono = kernel.first.map() == kernel.second.map();
      s.record("mono iff injective", cat_mono == inj && is_mono(h) == inj, [&] { return describe(h); });

      if (surj && inj) {
        auto inv = inverse(h);
        bool ok  = inv.has_value() && equivariant(*inv) && is_iso(h);
        if (ok) {
          ok = compose(*inv, h) == morphism::identity(h.dom()) && compose(h, *inv) == morphism::identity(h.cod());
        }
        s.record("bijective morphisms are isomorphisms", ok, [&] { return describe(h); });
      } else {
        bool found = false;
        for (auto const& g : hom_set(h.cod(), h.dom())) {
          found = found
                  || (compose(g, h) == morphism::identity(h.dom())
                      && compose(h, g) == morphism::identity(h.cod()));
        }
        s.record("non-bijective morphisms are not isomorphisms", !found && !is_iso(h),
                 [&] { return describe(h); });
      }
    }

    void check_pullback(suite& s, morphism const& f, morphism const& g) {
      auto const c = pullback(f, g);
      std::set<std::pair<std::size_t, std::size_t>> expected;
      for (std::size_t x = 0; x < f.dom().states(); ++x) {
        for (std::size_t y = 0; y < g.dom().states(); ++y) {
          if (f(x) == g(y)) {
            expected.emplace(x, y);
          }
        }
      }
      bool const ok = c.object.states() == expected.size() && leg_pairs(c) == expected && equivariant(c.first)
                      && equivariant(c.second) && compose(f, c.first).map() == compose(g, c.second).map();
      s.record("pullback fibers", ok, [&] { return "f: " + describe(f) + "; g: " + describe(g); });
    }

    void check_product(suite& s, action const& x, action const& y) {
      auto const c = product(x, y);
      bool const ok = c.object.states() == x.states() * y.states()
                      && leg_pairs(c).size() == c.object.states() && equivariant(c.first) && equivariant(c.second);
      s.record("product fibers", ok, [&] { return "X: " + describe(x) + "; Y: " + describe(y); });
    }

    void check_equalizer(suite& s, morphism const& f, morphism const& g) {
      auto const            e = equalizer(f, g);
      std::set<std::size_t> expected;
      for (std::size_t x = 0; x < f.dom().states(); ++x) {
        if (f(x) == g(x)) {
          expected.insert(x);
        }
      }
      auto const& inc = e.inclusion.map();
      bool const  ok  = injective(inc) && std::set<std::size_t>(inc.begin(), inc.end()) == expected
                      && equivariant(e.inclusion);
      s.record("equalizer fibers", ok, [&] { return "f: " + describe(f) + "; g: " + describe(g); });
    }

    void check_pushout(suite& s, morphism const& f, morphism const& g) {
      auto const        c  = pushout(f, g);
      std::size_t const nx = f.cod().states();
      std::size_t const ny = g.cod().states();
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (std::size_t w = 0; w < f.dom().states(); ++w) {
        edges.emplace_back(f(w), nx + g(w));
      }
      auto                     expected = components(nx + ny, edges);
      std::vector<std::size_t> induced;
      for (std::size_t x = 0; x < nx; ++x) {
        induced.push_back(c.first(x));
      }
      for (std::size_t y = 0; y < ny; ++y) {
        induced.push_back(c.second(y));
      }
      bool const ok = same_partition(induced, expected) && surjective(induced, c.object.states())
                      && equivariant(c.first) && equivariant(c.second)
                      && compose(c.first, f).map() == compose(c.second, g).map();
      s.record("pushout fibers", ok, [&] { return "f: " + describe(f) + "; g: " + describe(g); });
    }

    void check_coequalizer(suite& s, morphism const& f, morphism const& g) {
      auto const                                       q = coequalizer(f, g);
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (std::size_t x = 0; x < f.dom().states(); ++x) {
        edges.emplace_back(f(x), g(x));
      }
      auto const expected = components(f.cod().states(), edges);
      bool const ok       = same_partition(q.projection.map(), expected)
                      && surjective(q.projection.map(), q.object.states()) && equivariant(q.projection);
      s.record("coequalizer fibers", ok, [&] { return "f: " + describe(f) + "; g: " + describe(g); });
    }

    void check_coproduct(suite& s, action const& x, action const& y) {
      auto const c   = coproduct(x, y);
      state_map  all = c.first.map();
      all.insert(all.end(), c.second.map().begin(), c.second.map().end());
      bool const ok = injective(all) && surjective(all, c.object.states()) && equivariant(c.first)
                      && equivariant(c.second);
      s.record("coproduct fibers", ok, [&] { return "X: " + describe(x) + "; Y: " + describe(y); });
    }

    struct diagram_source {
      std::mt19937_64& rng;
      signature        sig;
      std::size_t      max_states;

      action object(std::size_t cap) {
        if (sig.is_free()) {
          return random_free_action(rng, sig.alphabet(), 1, cap);
        }
        return random_mset(rng, sig, cap);
      }

      action object() {
        return object(max_states);
      }

      // A random arrow into z, from a random source, a subobject or a
      // product projection.
      morphism arrow_into(action const& z) {
        switch (uniform_index(rng, 3)) {
          case 0:
            for (int attempt = 0; attempt < 4; ++attempt) {
              if (auto h = random_morphism(rng, object(), z)) {
                return *h;
              }
            }
            break;
          case 1:
            break;
          default:
            if (z.states() * 2 <= max_states) {
              auto w = object(max_states / z.states());
              return product(z, w).first;
            }
            break;
        }
        return orbit_subobject(z, uniform_index(rng, z.states())).inclusion;
      }
    };
  }  // namespace

  check_report check_semi_galois_axioms(axiom_options const& options) {
    std::mt19937_64        rng(options.seed);
    std::vector<signature> signatures{signature::free_monoid("a"), signature::free_monoid("ab")};
    for (std::size_t order = 1; order <= 4; ++order) {
      for (auto const& m : enumerate_monoids(order)) {
        signatures.push_back(signature::finite(m));
      }
    }
    suite s;
    for (auto const& sig : {signatures[0], signatures[2]}) {
      s.record("terminal has one state, initial none",
               terminal(sig).states() == 1 && initial(sig).states() == 0, [] { return std::string(); });
    }

    for (std::size_t i = 0; i < options.diagrams; ++i) {
      // free and finite signatures alternate
      signature const& sig = i % 2 == 0 ? signatures[uniform_index(rng, 2)]
                                        : signatures[2 + uniform_index(rng, signatures.size() - 2)];
      diagram_source src{rng, sig, options.max_states};

      action const z = src.object();
      morphism     f = src.arrow_into(z);
      morphism     g = src.arrow_into(z);
      auto const&  x = f.dom();
      auto const&  y = g.dom();

      check_pullback(s, f, g);
      check_product(s, x, y);
      check_coproduct(s, x, y);

      auto const span = pullback(f, g);
      check_pushout(s, span.first, span.second);

      std::vector<morphism> sampled{f, g};
      if (auto f2 = random_morphism(rng, x, z)) {
        check_equalizer(s, f, *f2);
        auto q = coequalizer(f, *f2);
        check_coequalizer(s, f, *f2);
        sampled.push_back(q.projection);
      }
      action const w = src.object();
      auto         a = random_morphism(rng, w, x);
      auto         b = random_morphism(rng, w, y);
      if (a && b) {
        check_pushout(s, *a, *b);
        auto const c = pushout(*a, *b);
        sampled.push_back(c.first);
        sampled.push_back(c.second);
        sampled.push_back(*a);
      }
      sampled.push_back(span.first);
      sampled.push_back(span.second);
      sampled.push_back(image_factorize(f).epi);
      for (auto const& h : sampled) {
        check_fiber_functor_on(s, h);
      }
    }
    return s.finish();
  }

}  // namespace semigalois
