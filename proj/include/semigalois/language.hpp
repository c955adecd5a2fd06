#pragma once

// Regular languages as canonical minimal DFAs.
//
// Every regular_language value is canonical: all states reachable, no two
// states equivalent, and states numbered breadth-first from the start
// (state 0) with letters taken in alphabet order. Equal languages over the
// same alphabet therefore have identical data, and operator== is language
// equality.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semigalois/action.hpp"

namespace semigalois {

  class regular_language {
   public:
    // `trans[letter][state]`, total. Throws unknown_letter on a repeated
    // letter and error on out-of-range states.
    static regular_language from_components(std::string                     alphabet,
                                            std::vector<state_map> const&   trans,
                                            std::size_t                     start,
                                            std::vector<std::size_t> const& accepts);
    // The language of a free-signature action with the given start and
    // accepting states.
    static regular_language from_action(action const& x, std::size_t start, std::vector<std::size_t> const& accepts);

    static regular_language empty(std::string alphabet);
    static regular_language full(std::string alphabet);

    std::string const& alphabet() const noexcept {
      return dfa_.sig().alphabet();
    }
    action const& dfa() const noexcept {
      return dfa_;
    }
    std::size_t start() const noexcept {
      return 0;
    }
    std::size_t states() const noexcept {
      return dfa_.states();
    }
    std::vector<std::size_t> const& accepts() const noexcept {
      return accepts_;
    }
    bool is_accepting(std::size_t s) const noexcept {
      return accepting_[s];
    }
    bool is_empty() const noexcept {
      return accepts_.empty();
    }
    bool is_full() const noexcept {
      return accepts_.size() == states();
    }

    // State reached from the start; throws unknown_letter.
    std::size_t run(std::string_view word) const;
    bool contains(std::string_view word) const {
      return accepting_[run(word)];
    }
    // Letter index in the alphabet; throws unknown_letter.
    std::size_t letter_index(char c) const;

    friend bool operator==(regular_language const& a, regular_language const& b);
    // Deterministic order: state count, then transitions, then accepts.
    friend bool operator<(regular_language const& a, regular_language const& b);

   private:
    regular_language(action dfa, std::vector<std::size_t> accepts);

    action                   dfa_;
    std::vector<std::size_t> accepts_;
    std::vector<bool>        accepting_;
  };

  // Grammar: letters [A-Za-z0-9], concatenation, `|`, postfix `*`,
  // parentheses, `∅` or `{}` for the empty language, `ε` or `()` for the
  // empty word; spaces are ignored. Without an alphabet the letters used
  // are taken, sorted. Throws parse_error and unknown_letter.
  regular_language parse_regex(std::string_view text, std::optional<std::string> alphabet = {});

  regular_language complement(regular_language const& l);
  // Throw alphabet_mismatch.
  regular_language unite(regular_language const& l, regular_language const& r);
  regular_language intersect(regular_language const& l, regular_language const& r);

  // w^{-1} L and L w^{-1}.
  regular_language left_quotient(std::string_view w, regular_language const& l);
  regular_language right_quotient(regular_language const& l, std::string_view w);

  // A homomorphism of free monoids, one image word per source letter.
  struct free_hom {
    std::string              source;
    std::string              target;
    std::vector<std::string> images;

    // Throws arity_mismatch and unknown_letter.
    static free_hom validate(std::string source, std::string target, std::vector<std::string> images);
    std::string operator()(std::string_view word) const;
  };

  // f^{-1} L over f.source. Throws alphabet_mismatch.
  regular_language inverse_hom_image(free_hom const& f, regular_language const& l);

  // DFA over f.source whose a-transition runs f(a) in x (x over f.target).
  action pullback_action(free_hom const& f, action const& x);

  // All words of length <= n in length-lexicographic order.
  std::vector<std::string> words_up_to(std::string const& alphabet, std::size_t n);

}  // namespace semigalois
