// Finite limits and colimits of actions, and universal quotients.

#include <stdexcept>

#include "detail.hpp"
#include "semigalois/action.hpp"
#include "semigalois/error.hpp"

namespace semigalois {

  namespace {
    void require_same(signature const& a, signature const& b) {
      if (!(a == b)) {
        throw signature_mismatch();
      }
    }

    action with_columns(signature const& sig, std::size_t states, auto&& column_of) {
      std::vector<state_map> columns(sig.column_count(), state_map(states));
      for (std::size_t c = 0; c < columns.size(); ++c) {
        for (std::size_t s = 0; s < states; ++s) {
          columns[c][s] = column_of(c, s);
        }
      }
      return action::trusted(sig, states, std::move(columns));
    }

    struct saturation {
      std::vector<std::size_t> classes;  // state -> class, numbered by least state
      std::size_t              count = 0;
      bool                     saturation_merged = false;
    };

    // Smallest equivalence containing `pairs` and stable under every
    // generator. Records whether stabilising had to merge anything beyond
    // the equivalence generated by `pairs` alone.
    saturation saturate(action const& x, std::span<std::pair<std::size_t, std::size_t> const> pairs) {
      detail::union_find                               uf(x.states());
      std::vector<std::pair<std::size_t, std::size_t>> merged;
      for (auto [a, b] : pairs) {
        if (uf.unite(a, b)) {
          merged.emplace_back(a, b);
        }
      }
      saturation out;
      for (std::size_t k = 0; k < merged.size(); ++k) {
        auto [a, b] = merged[k];
        for (std::size_t g = 0; g < x.sig().generator_count(); ++g) {
          std::size_t const an = x.step(a, g);
          std::size_t const bn = x.step(b, g);
          if (uf.unite(an, bn)) {
            out.saturation_merged = true;
            merged.emplace_back(an, bn);
          }
        }
      }
      out.classes = normalize_partition(uf.labels());
      for (auto c : out.classes) {
        out.count = std::max(out.count, c + 1);
      }
      return out;
    }

    quotient quotient_by(action const& x, saturation const& sat) {
      std::vector<std::size_t> rep(sat.count, 0);
      for (std::size_t s = x.states(); s-- > 0;) {
        rep[sat.classes[s]] = s;
      }
      auto q = with_columns(x.sig(), sat.count, [&](std::size_t c, std::size_t k) {
        return sat.classes[x.act(rep[k], c)];
      });
      return {morphism::trusted(x, q, sat.classes), q};
    }

    void require_stable(saturation const& sat, char const* what) {
      // pairs induced by equivariant maps are already action-stable
      if (sat.saturation_merged) {
        throw std::logic_error(std::string(what) + ": saturation merged extra classes");
      }
    }
  }  // namespace

  action terminal(signature const& sig) {
    return with_columns(sig, 1, [](std::size_t, std::size_t) { return std::size_t{0}; });
  }

  action initial(signature const& sig) {
    return with_columns(sig, 0, [](std::size_t, std::size_t) { return std::size_t{0}; });
  }

  cone product(action const& x, action const& y) {
    require_same(x.sig(), y.sig());
    std::size_t const ny = y.states();
    auto p = with_columns(x.sig(), x.states() * ny, [&](std::size_t c, std::size_t s) {
      return x.act(s / ny, c) * ny + y.act(s % ny, c);
    });
    state_map first(p.states()), second(p.states());
    for (std::size_t s = 0; s < p.states(); ++s) {
      first[s]  = s / ny;
      second[s] = s % ny;
    }
    return {p, morphism::trusted(p, x, std::move(first)), morphism::trusted(p, y, std::move(second))};
  }

  cone pullback(morphism const& f, morphism const& g) {
    require_same(f.dom().sig(), g.dom().sig());
    if (!(f.cod() == g.cod())) {
      throw signature_mismatch("pullback legs have different codomains");
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::size_t const                                ny = g.dom().states();
    std::vector<std::size_t>                         index(f.dom().states() * ny, 0);
    for (std::size_t a = 0; a < f.dom().states(); ++a) {
      for (std::size_t b = 0; b < ny; ++b) {
        if (f(a) == g(b)) {
          index[a * ny + b] = pairs.size();
          pairs.emplace_back(a, b);
        }
      }
    }
    auto p = with_columns(f.dom().sig(), pairs.size(), [&](std::size_t c, std::size_t s) {
      return index[f.dom().act(pairs[s].first, c) * ny + g.dom().act(pairs[s].second, c)];
    });
    state_map first(pairs.size()), second(pairs.size());
    for (std::size_t s = 0; s < pairs.size(); ++s) {
      first[s]  = pairs[s].first;
      second[s] = pairs[s].second;
    }
    return {p, morphism::trusted(p, f.dom(), std::move(first)),
            morphism::trusted(p, g.dom(), std::move(second))};
  }

  subobject equalizer(morphism const& f, morphism const& g) {
    if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) {
      throw signature_mismatch("equalizer needs a parallel pair");
    }
    std::size_t const        n = f.dom().states();
    std::vector<std::size_t> states, index(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
      if (f(s) == g(s)) {
        index[s] = states.size();
        states.push_back(s);
      }
    }
    auto e = with_columns(f.dom().sig(), states.size(), [&](std::size_t c, std::size_t s) {
      return index[f.dom().act(states[s], c)];
    });
    return {e, morphism::trusted(e, f.dom(), states)};
  }

  cocone coproduct(action const& x, action const& y) {
    require_same(x.sig(), y.sig());
    std::size_t const nx = x.states();
    auto s = with_columns(x.sig(), nx + y.states(), [&](std::size_t c, std::size_t q) {
      return q < nx ? x.act(q, c) : nx + y.act(q - nx, c);
    });
    state_map first(nx), second(y.states());
    for (std::size_t q = 0; q < nx; ++q) {
      first[q] = q;
    }
    for (std::size_t q = 0; q < y.states(); ++q) {
      second[q] = nx + q;
    }
    return {s, morphism::trusted(x, s, std::move(first)), morphism::trusted(y, s, std::move(second))};
  }

  cocone pushout(morphism const& f, morphism const& g) {
    if (!(f.dom() == g.dom())) {
      throw signature_mismatch("pushout legs have different domains");
    }
    auto              sum = coproduct(f.cod(), g.cod());
    std::size_t const nx  = f.cod().states();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t z = 0; z < f.dom().states(); ++z) {
      pairs.emplace_back(f(z), nx + g(z));
    }
    auto sat = saturate(sum.object, pairs);
    require_stable(sat, "pushout");
    auto q = quotient_by(sum.object, sat);
    return {q.object, compose(q.projection, sum.first), compose(q.projection, sum.second)};
  }

  quotient coequalizer(morphism const& f, morphism const& g) {
    if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) {
      throw signature_mismatch("coequalizer needs a parallel pair");
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t z = 0; z < f.dom().states(); ++z) {
      pairs.emplace_back(f(z), g(z));
    }
    auto sat = saturate(f.cod(), pairs);
    require_stable(sat, "coequalizer");
    return quotient_by(f.cod(), sat);
  }

  quotient saturated_quotient(action const& x, std::span<std::pair<std::size_t, std::size_t> const> pairs) {
    for (auto [a, b] : pairs) {
      if (a >= x.states() || b >= x.states()) {
        throw error("state pair out of range");
      }
    }
    return quotient_by(x, saturate(x, pairs));
  }

  quotient universal_quotient(action const& x, std::span<std::pair<morphism, morphism> const> relation) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < relation.size(); ++i) {
      auto const& [h, k] = relation[i];
      if (!(h.dom() == x) || !(h.cod() == x) || !(k.dom() == x) || !(k.cod() == x)) {
        throw not_endomorphism(i);
      }
      for (std::size_t s = 0; s < x.states(); ++s) {
        pairs.emplace_back(h(s), k(s));
      }
    }
    auto sat = saturate(x, pairs);
    require_stable(sat, "universal quotient");
    return quotient_by(x, sat);
  }

  std::optional<morphism> factor_through(morphism const& p, morphism const& q) {
    if (!(p.dom() == q.dom())) {
      throw signature_mismatch("factoring needs a common domain");
    }
    if (!is_epi(p)) {
      throw error("can only factor through an epimorphism");
    }
    std::size_t const unset = q.cod().states();
    state_map         map(p.cod().states(), unset);
    for (std::size_t s = 0; s < p.dom().states(); ++s) {
      if (map[p(s)] == unset) {
        map[p(s)] = q(s);
      } else if (map[p(s)] != q(s)) {
        return std::nullopt;
      }
    }
    return morphism::validate(p.cod(), q.cod(), std::move(map));
  }

}  // namespace semigalois
