#pragma once

// Independent reference computations used by the tests. Everything here is
// deliberately naive: exhaustive enumeration over all candidate maps,
// tables or partitions, with no shared code paths into the library beyond
// the value types.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "semigalois/action.hpp"
#include "semigalois/language.hpp"
#include "semigalois/monoid.hpp"

namespace oracle {

  using table = std::vector<std::vector<std::size_t>>;

  inline table table_of(semigalois::finite_monoid const& m) {
    table t(m.order(), std::vector<std::size_t>(m.order()));
    for (std::size_t x = 0; x < m.order(); ++x) {
      for (std::size_t y = 0; y < m.order(); ++y) {
        t[x][y] = m.mul(x, y);
      }
    }
    return t;
  }

  inline bool associative(table const& t) {
    std::size_t const n = t.size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (t[t[x][y]][z] != t[x][t[y][z]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // The least relabelling of `t` over all permutations of its elements.
  inline table canonical(table const& t) {
    std::size_t const        n = t.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    table best;
    do {
      table r(n, std::vector<std::size_t>(n));
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          r[perm[x]][perm[y]] = perm[t[x][y]];
        }
      }
      if (best.empty() || r < best) {
        best = std::move(r);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  // Isomorphism classes of monoids of order n, by scanning all n^(n*n)
  // tables.
  inline std::set<table> monoid_classes(std::size_t n) {
    std::set<table>          classes;
    std::size_t const        cells = n * n;
    std::vector<std::size_t> digits(cells, 0);
    while (true) {
      table t(n, std::vector<std::size_t>(n));
      for (std::size_t c = 0; c < cells; ++c) {
        t[c / n][c % n] = digits[c];
      }
      bool has_identity = false;
      for (std::size_t e = 0; e < n && !has_identity; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) {
          ok = t[e][x] == x && t[x][e] == x;
        }
        has_identity = ok;
      }
      if (has_identity && associative(t)) {
        classes.insert(canonical(t));
      }
      std::size_t c = 0;
      while (c < cells && ++digits[c] == n) {
        digits[c++] = 0;
      }
      if (c == cells) {
        break;
      }
    }
    return classes;
  }

  inline std::size_t factorial(std::size_t n) {
    return n <= 1 ? 1 : n * factorial(n - 1);
  }

  inline std::size_t power(semigalois::finite_monoid const& m, std::size_t x, std::size_t k) {
    std::size_t r = m.identity();
    for (std::size_t i = 0; i < k; ++i) {
      r = m.mul(r, x);
    }
    return r;
  }

  // x^(n!) = x^(n!+1) for every x.
  inline bool aperiodic(semigalois::finite_monoid const& m) {
    std::size_t const k = factorial(m.order());
    for (std::size_t x = 0; x < m.order(); ++x) {
      std::size_t const p = power(m, x, k);
      if (p != m.mul(p, x)) {
        return false;
      }
    }
    return true;
  }

  inline bool is_group(semigalois::finite_monoid const& m) {
    for (std::size_t x = 0; x < m.order(); ++x) {
      bool has_inverse = false;
      for (std::size_t y = 0; y < m.order(); ++y) {
        has_inverse = has_inverse || (m.mul(x, y) == m.identity() && m.mul(y, x) == m.identity());
      }
      if (!has_inverse) {
        return false;
      }
    }
    return true;
  }

  // All set partitions of {0..n-1} as restricted growth strings.
  inline std::vector<std::vector<std::size_t>> partitions(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              p(n, 0);
    auto rec = [&](auto&& self, std::size_t i, std::size_t blocks) -> void {
      if (i == n) {
        out.push_back(p);
        return;
      }
      for (std::size_t b = 0; b <= blocks; ++b) {
        p[i] = b;
        self(self, i + 1, std::max(blocks, b + 1));
      }
    };
    if (n == 0) {
      return {{}};
    }
    p[0] = 0;
    rec(rec, 1, 1);
    return out;
  }

  inline bool is_congruence(semigalois::finite_monoid const& m, std::vector<std::size_t> const& p, bool two_sided) {
    for (std::size_t x = 0; x < m.order(); ++x) {
      for (std::size_t y = 0; y < m.order(); ++y) {
        if (p[x] != p[y]) {
          continue;
        }
        for (std::size_t z = 0; z < m.order(); ++z) {
          if (p[m.mul(x, z)] != p[m.mul(y, z)]) {
            return false;
          }
          if (two_sided && p[m.mul(z, x)] != p[m.mul(z, y)]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Smallest congruence containing the pairs: the finest among all
  // congruences that contain them, found by scanning every partition.
  inline std::vector<std::size_t> least_congruence(semigalois::finite_monoid const&                 m,
                                                   std::vector<std::pair<std::size_t, std::size_t>> pairs,
                                                   bool                                             two_sided) {
    std::vector<std::size_t> best;
    std::size_t              best_blocks = 0;
    for (auto const& p : partitions(m.order())) {
      bool contains = std::all_of(pairs.begin(), pairs.end(), [&](auto const& pr) { return p[pr.first] == p[pr.second]; });
      if (!contains || !is_congruence(m, p, two_sided)) {
        continue;
      }
      std::size_t blocks = p.empty() ? 0 : *std::max_element(p.begin(), p.end()) + 1;
      if (blocks > best_blocks) {
        best        = p;
        best_blocks = blocks;
      }
    }
    return best;
  }

  // Every map F(X) -> F(Y) commuting with every column.
  inline std::vector<semigalois::state_map> hom_maps(semigalois::action const& x, semigalois::action const& y) {
    std::vector<semigalois::state_map> out;
    std::size_t const                  nx = x.states();
    std::size_t const                  ny = y.states();
    if (nx > 0 && ny == 0) {
      return out;
    }
    semigalois::state_map map(nx, 0);
    while (true) {
      bool ok = true;
      for (std::size_t c = 0; c < x.sig().column_count() && ok; ++c) {
        for (std::size_t s = 0; s < nx && ok; ++s) {
          ok = map[x.act(s, c)] == y.act(map[s], c);
        }
      }
      if (ok) {
        out.push_back(map);
      }
      std::size_t i = nx;
      while (i > 0 && ++map[i - 1] == ny) {
        map[--i] = 0;
      }
      if (i == 0) {
        break;
      }
    }
    return out;
  }

  // Composites of the generator maps, x*y = "x then y", as a set.
  inline std::set<semigalois::state_map> transition_maps(std::size_t                               degree,
                                                         std::vector<semigalois::state_map> const& gens) {
    std::set<semigalois::state_map> all{semigalois::identity_map(degree)};
    bool                            grew = true;
    while (grew) {
      grew = false;
      for (auto const& x : std::vector<semigalois::state_map>(all.begin(), all.end())) {
        for (auto const& g : gens) {
          semigalois::state_map y(degree);
          for (std::size_t s = 0; s < degree; ++s) {
            y[s] = g[x[s]];
          }
          grew = all.insert(y).second || grew;
        }
      }
    }
    return all;
  }

  // Language equality on all words up to length n.
  inline bool agree_up_to(semigalois::regular_language const& a, semigalois::regular_language const& b,
                          std::size_t n) {
    for (auto const& w : semigalois::words_up_to(a.alphabet(), n)) {
      if (a.contains(w) != b.contains(w)) {
        return false;
      }
    }
    return true;
  }

  // Membership through the standard library's regex engine.
  inline bool regex_accepts(std::string const& pattern, std::string const& word) {
    return std::regex_match(word, std::regex(pattern));
  }

}  // namespace oracle
