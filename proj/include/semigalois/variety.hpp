#pragma once

// Stamps A* ->> M, local varieties presented by a single recognizing stamp,
// and the checks that tie languages, actions and stamps together.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semigalois/action.hpp"
#include "semigalois/language.hpp"
#include "semigalois/monoid.hpp"
#include "semigalois/report.hpp"

namespace semigalois {

  inline constexpr std::size_t default_lang_cap = 12;

  class stamp {
   public:
    // Throws not_surjective unless the letter images generate `target`.
    static stamp validate(std::string alphabet, finite_monoid target, std::vector<std::size_t> letter_images);

    std::string const& alphabet() const noexcept {
      return alphabet_;
    }
    finite_monoid const& target() const noexcept {
      return target_;
    }
    std::vector<std::size_t> const& letter_images() const noexcept {
      return images_;
    }
    // Image of a word; throws unknown_letter.
    std::size_t operator()(std::string_view word) const;

   private:
    stamp(std::string a, finite_monoid m, std::vector<std::size_t> images)
        : alphabet_(std::move(a)), target_(std::move(m)), images_(std::move(images)) {}

    std::string              alphabet_;
    finite_monoid            target_;
    std::vector<std::size_t> images_;
  };

  struct syntactic_data {
    stamp                    syntactic;
    std::vector<std::size_t> accept_set;  // elements m with start.m accepting
  };

  syntactic_data syntactic_stamp(regular_language const& l);

  // Transition monoid of a DFA under "apply x, then y", stamped by letters.
  stamp action_to_stamp(action const& x);
  // States are the target elements, a-transition is right multiplication
  // by the image of a, start is the identity.
  action stamp_to_action(stamp const& s);

  // Throw alphabet_mismatch.
  stamp stamp_product(stamp const& s, stamp const& t);
  // h o s; throws not_surjective.
  stamp stamp_quotient(monoid_hom const& h, stamp const& s);
  stamp stamp_trivial(std::string alphabet);

  // The homomorphism h: s.target -> t.target with h o s = t, if one exists.
  std::optional<monoid_hom> stamp_factor(stamp const& s, stamp const& t);
  // An isomorphism of targets carrying letter images to letter images.
  std::optional<monoid_hom> stamp_isomorphism(stamp const& s, stamp const& t);

  // {s^{-1}(P) : P subset of the target}, sorted. Throws size_cap_exceeded.
  std::vector<regular_language> recognized_languages(stamp const& s, std::size_t cap = default_lang_cap);
  // Every L(q0, P) of a DFA, sorted and deduplicated.
  std::vector<regular_language> action_languages(action const& x, std::size_t cap = default_lang_cap);

  struct local_variety {
    stamp recognizer;
  };

  // Product of the syntactic stamps; checks that every input is recognized.
  local_variety local_variety_generate(std::span<regular_language const> languages);

  // The hom s_V.target ->> M(L) through which the syntactic stamp of L
  // factors, when L belongs to V.
  std::optional<monoid_hom> variety_membership(local_variety const& v, regular_language const& l);

  // Closure of `languages` under Booleans and one-letter quotients, built
  // as all unions of the atoms of the quotient-closed family. Throws
  // size_cap_exceeded past `cap` atoms.
  std::vector<regular_language> brute_closure_oracle(std::span<regular_language const> languages,
                                                     std::size_t                       cap = default_lang_cap);

  struct correspondence_options {
    std::size_t lang_cap    = default_lang_cap;
    std::size_t closure_cap = default_closure_cap;
  };

  // (i) recognized languages of the generated variety = brute closure;
  // (ii) actions -> stage stamp -> right-regular DFA -> stage stamp is the
  //      same stamp; (iii) action languages of the generating actions are
  //      recognized; (iv) both sides produce isomorphic stamps.
  check_report variety_correspondence_check(std::span<regular_language const> languages,
                                            std::span<action const>           actions,
                                            correspondence_options            options = {});

  struct fo_verdict {
    bool                       definable;
    std::optional<std::size_t> witness;  // x with x^w != x^{w+1}
    stamp                      syntactic;
  };

  fo_verdict is_fo_definable(regular_language const& l);

  // j o s = t o f with j an injective homomorphism s.target -> t.target.
  bool check_m4(stamp const& s, stamp const& t, free_hom const& f, monoid_hom const& j);
  // f^{-1} L lies in `va` for every L recognized by `vb`.
  bool check_r4(local_variety const& vb, local_variety const& va, free_hom const& f,
                std::size_t cap = default_lang_cap);

}  // namespace semigalois
