#include "semigalois/variety.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "semigalois/error.hpp"
#include "semigalois/galois.hpp"

namespace semigalois {

  ////////////////////////////////////////////////////////////////////////
  // stamps
  ////////////////////////////////////////////////////////////////////////

  stamp stamp::validate(std::string alphabet, finite_monoid target, std::vector<std::size_t> letter_images) {
    signature::free_monoid(alphabet);
    if (letter_images.size() != alphabet.size()) {
      throw arity_mismatch("expected one image per letter");
    }
    for (auto x : letter_images) {
      if (x >= target.order()) {
        throw error("letter image out of range");
      }
    }
    auto generated = generated_submonoid(target, letter_images);
    if (std::find(generated.begin(), generated.end(), false) != generated.end()) {
      throw not_surjective();
    }
    return stamp(std::move(alphabet), std::move(target), std::move(letter_images));
  }

  std::size_t stamp::operator()(std::string_view word) const {
    std::size_t x = target_.identity();
    for (char c : word) {
      auto pos = alphabet_.find(c);
      if (pos == std::string::npos) {
        throw unknown_letter(c);
      }
      x = target_.mul(x, images_[pos]);
    }
    return x;
  }

  stamp action_to_stamp(action const& x) {
    if (!x.sig().is_free()) {
      throw signature_mismatch("stamps come from free-monoid actions");
    }
    if (x.states() == 0) {
      throw empty_action();
    }
    auto tm = submonoid_closure(x.states(), x.columns());
    std::vector<std::size_t> images;
    for (auto const& column : x.columns()) {
      images.push_back(*tm.index_of(column));
    }
    return stamp::validate(x.sig().alphabet(), tm.monoid(), std::move(images));
  }

  action stamp_to_action(stamp const& s) {
    auto const&            m = s.target();
    std::vector<state_map> columns(s.alphabet().size(), state_map(m.order()));
    for (std::size_t a = 0; a < columns.size(); ++a) {
      for (std::size_t k = 0; k < m.order(); ++k) {
        columns[a][k] = m.mul(k, s.letter_images()[a]);
      }
    }
    return action::trusted(signature::free_monoid(s.alphabet()), m.order(), std::move(columns));
  }

  syntactic_data syntactic_stamp(regular_language const& l) {
    auto                     st = action_to_stamp(l.dfa());
    std::vector<std::size_t> accept_set;
    // recompute the maps to read off start.m
    auto tm = submonoid_closure(l.states(), l.dfa().columns());
    for (std::size_t m = 0; m < tm.size(); ++m) {
      if (l.is_accepting(tm.element(m)[l.start()])) {
        accept_set.push_back(m);
      }
    }
    auto recognized = regular_language::from_action(stamp_to_action(st), st.target().identity(), accept_set);
    if (!(recognized == l)) {
      throw std::logic_error("syntactic stamp does not recognize its language");
    }
    return {std::move(st), std::move(accept_set)};
  }

  stamp stamp_product(stamp const& s, stamp const& t) {
    if (s.alphabet() != t.alphabet()) {
      throw alphabet_mismatch();
    }
    auto const& m = s.target();
    auto const& n = t.target();
    using pair    = std::pair<std::size_t, std::size_t>;
    std::vector<pair>        elements{{m.identity(), n.identity()}};
    std::map<pair, std::size_t> index{{elements[0], 0}};
    for (std::size_t k = 0; k < elements.size(); ++k) {
      for (std::size_t a = 0; a < s.alphabet().size(); ++a) {
        pair next{m.mul(elements[k].first, s.letter_images()[a]),
                  n.mul(elements[k].second, t.letter_images()[a])};
        if (index.try_emplace(next, elements.size()).second) {
          elements.push_back(next);
        }
      }
    }
    std::size_t const        size = elements.size();
    std::vector<std::size_t> flat(size * size);
    for (std::size_t x = 0; x < size; ++x) {
      for (std::size_t y = 0; y < size; ++y) {
        flat[x * size + y] = index.at({m.mul(elements[x].first, elements[y].first),
                                       n.mul(elements[x].second, elements[y].second)});
      }
    }
    std::vector<std::size_t> images;
    for (std::size_t a = 0; a < s.alphabet().size(); ++a) {
      images.push_back(index.at({s.letter_images()[a], t.letter_images()[a]}));
    }
    return stamp::validate(s.alphabet(), finite_monoid::trusted(size, std::move(flat), 0), std::move(images));
  }

  stamp stamp_quotient(monoid_hom const& h, stamp const& s) {
    if (!(h.source() == s.target())) {
      throw error("homomorphism source is not the stamp target");
    }
    if (!h.is_surjective()) {
      throw not_surjective();
    }
    std::vector<std::size_t> images;
    for (auto x : s.letter_images()) {
      images.push_back(h(x));
    }
    return stamp::validate(s.alphabet(), h.target(), std::move(images));
  }

  stamp stamp_trivial(std::string alphabet) {
    std::vector<std::size_t> images(alphabet.size(), 0);
    return stamp::validate(std::move(alphabet), finite_monoid(), std::move(images));
  }

  std::optional<monoid_hom> stamp_factor(stamp const& s, stamp const& t) {
    if (s.alphabet() != t.alphabet()) {
      throw alphabet_mismatch();
    }
    return extend_to_hom(s.target(), s.letter_images(), t.target(), t.letter_images());
  }

  std::optional<monoid_hom> stamp_isomorphism(stamp const& s, stamp const& t) {
    if (s.target().order() != t.target().order()) {
      return std::nullopt;
    }
    auto h = stamp_factor(s, t);
    if (h && h->is_injective()) {
      return h;
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // language families
  ////////////////////////////////////////////////////////////////////////

  std::vector<regular_language> recognized_languages(stamp const& s, std::size_t cap) {
    std::size_t const n = s.target().order();
    if (n > cap) {
      throw size_cap_exceeded("stamp target order", cap);
    }
    auto                       dfa = stamp_to_action(s);
    std::set<regular_language> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::size_t> accepts;
      for (std::size_t k = 0; k < n; ++k) {
        if (mask >> k & 1) {
          accepts.push_back(k);
        }
      }
      out.insert(regular_language::from_action(dfa, s.target().identity(), accepts));
    }
    return {out.begin(), out.end()};
  }

  std::vector<regular_language> action_languages(action const& x, std::size_t cap) {
    if (x.states() == 0) {
      throw empty_action();
    }
    if (x.states() > cap) {
      throw size_cap_exceeded("action state count", cap);
    }
    std::set<regular_language> out;
    for (std::size_t q0 = 0; q0 < x.states(); ++q0) {
      auto const reach = orbit(x, q0);
      for (std::size_t mask = 0; mask < (std::size_t{1} << reach.size()); ++mask) {
        std::vector<std::size_t> accepts;
        for (std::size_t k = 0; k < reach.size(); ++k) {
          if (mask >> k & 1) {
            accepts.push_back(reach[k]);
          }
        }
        out.insert(regular_language::from_action(x, q0, accepts));
      }
    }
    return {out.begin(), out.end()};
  }

  ////////////////////////////////////////////////////////////////////////
  // local varieties
  ////////////////////////////////////////////////////////////////////////

  std::optional<monoid_hom> variety_membership(local_variety const& v, regular_language const& l) {
    return stamp_factor(v.recognizer, syntactic_stamp(l).syntactic);
  }

  local_variety local_variety_generate(std::span<regular_language const> languages) {
    if (languages.empty()) {
      throw error("a local variety needs at least one generating language");
    }
    stamp s = syntactic_stamp(languages.front()).syntactic;
    for (std::size_t i = 1; i < languages.size(); ++i) {
      if (languages[i].alphabet() != s.alphabet()) {
        throw alphabet_mismatch();
      }
      s = stamp_product(s, syntactic_stamp(languages[i]).syntactic);
    }
    local_variety v{std::move(s)};
    for (auto const& l : languages) {
      if (!variety_membership(v, l)) {
        throw std::logic_error("generated variety misses one of its generators");
      }
    }
    return v;
  }

  std::vector<regular_language> brute_closure_oracle(std::span<regular_language const> languages, std::size_t cap) {
    if (languages.empty()) {
      throw error("closure needs at least one language");
    }
    std::string const& alphabet = languages.front().alphabet();

    // quotient closure
    std::set<regular_language>    seen;
    std::vector<regular_language> family;
    auto                          visit = [&](regular_language l) {
      if (l.alphabet() != alphabet) {
        throw alphabet_mismatch();
      }
      if (seen.insert(l).second) {
        family.push_back(std::move(l));
      }
    };
    for (auto const& l : languages) {
      visit(l);
    }
    for (std::size_t k = 0; k < family.size(); ++k) {
      for (char c : alphabet) {
        std::string const w(1, c);
        visit(left_quotient(w, family[k]));
        visit(right_quotient(family[k], w));
      }
    }

    // atoms of the Boolean algebra generated by the family
    std::vector<regular_language> atoms{regular_language::full(alphabet)};
    for (auto const& l : family) {
      auto const                    co = complement(l);
      std::vector<regular_language> refined;
      for (auto const& a : atoms) {
        for (auto const* side : {&l, &co}) {
          auto piece = intersect(a, *side);
          if (!piece.is_empty()) {
            refined.push_back(std::move(piece));
          }
        }
      }
      atoms = std::move(refined);
      if (atoms.size() > cap) {
        throw size_cap_exceeded("closure atom count", cap);
      }
    }

    std::vector<regular_language> unions{regular_language::empty(alphabet)};
    for (std::size_t mask = 1; mask < (std::size_t{1} << atoms.size()); ++mask) {
      std::size_t const low = static_cast<std::size_t>(__builtin_ctzll(mask));
      unions.push_back(unite(unions[mask & (mask - 1)], atoms[low]));
    }
    std::set<regular_language> out(unions.begin(), unions.end());
    return {out.begin(), out.end()};
  }

  check_report variety_correspondence_check(std::span<regular_language const> languages,
                                            std::span<action const>           actions,
                                            correspondence_options            options) {
    check_report report;
    auto const   variety = local_variety_generate(languages);
    auto const&  lang_stamp = variety.recognizer;
    auto const   recognized = recognized_languages(lang_stamp, options.lang_cap);
    auto const   closure    = brute_closure_oracle(languages, options.lang_cap);
    report.add("languages -> stamp -> languages equals closure", recognized == closure,
               std::to_string(recognized.size()) + " recognized, " + std::to_string(closure.size())
                   + " in closure");

    if (actions.empty()) {
      report.add("actions -> stage stamp -> action round trip", true, "no actions supplied");
      report.add("action languages are recognized", true, "no actions supplied");
      report.add("language and action stamps agree", true, "no actions supplied");
      return report;
    }
    for (auto const& x : actions) {
      if (!x.sig().is_free() || x.sig().alphabet() != lang_stamp.alphabet()) {
        throw alphabet_mismatch();
      }
    }
    auto  stage = fundamental_monoid(actions, options.closure_cap);
    stamp action_stamp = stamp::validate(lang_stamp.alphabet(), stage.monoid.monoid(), stage.stamp);
    std::vector<action> regular{stamp_to_action(action_stamp)};
    auto  again       = fundamental_monoid(regular, options.closure_cap);
    stamp again_stamp = stamp::validate(lang_stamp.alphabet(), again.monoid.monoid(), again.stamp);
    report.add("actions -> stage stamp -> action round trip",
               stamp_isomorphism(action_stamp, again_stamp).has_value(),
               "stage order " + std::to_string(action_stamp.target().order()) + ", round trip order "
                   + std::to_string(again_stamp.target().order()));

    auto const action_recognized = recognized_languages(action_stamp, options.lang_cap);
    bool       contained         = true;
    std::size_t total            = 0;
    for (auto const& x : actions) {
      auto const langs = action_languages(x, options.lang_cap);
      total += langs.size();
      contained = contained
                  && std::includes(action_recognized.begin(), action_recognized.end(), langs.begin(), langs.end());
    }
    report.add("action languages are recognized", contained,
               std::to_string(total) + " action languages checked against "
                   + std::to_string(action_recognized.size()));

    report.add("language and action stamps agree", stamp_isomorphism(lang_stamp, action_stamp).has_value(),
               "orders " + std::to_string(lang_stamp.target().order()) + " and "
                   + std::to_string(action_stamp.target().order()));
    return report;
  }

  fo_verdict is_fo_definable(regular_language const& l) {
    auto syn     = syntactic_stamp(l).syntactic;
    auto witness = aperiodicity_witness(syn.target());
    return {!witness.has_value(), witness, std::move(syn)};
  }

  bool check_m4(stamp const& s, stamp const& t, free_hom const& f, monoid_hom const& j) {
    if (f.source != s.alphabet() || f.target != t.alphabet()) {
      throw alphabet_mismatch();
    }
    if (!(j.source() == s.target()) || !(j.target() == t.target()) || !j.is_injective()) {
      return false;
    }
    for (std::size_t a = 0; a < s.alphabet().size(); ++a) {
      if (j(s.letter_images()[a]) != t(f.images[a])) {
        return false;
      }
    }
    return true;
  }

  bool check_r4(local_variety const& vb, local_variety const& va, free_hom const& f, std::size_t cap) {
    if (f.source != va.recognizer.alphabet() || f.target != vb.recognizer.alphabet()) {
      throw alphabet_mismatch();
    }
    for (auto const& l : recognized_languages(vb.recognizer, cap)) {
      if (!variety_membership(va, inverse_hom_image(f, l))) {
        return false;
      }
    }
    return true;
  }

}  // namespace semigalois
