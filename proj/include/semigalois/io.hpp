#pragma once

// Line-oriented text formats for DFAs and monoid tables.
//
// DFA files:
//
//   # comment
//   alphabet: a b
//   states: 2
//   trans: 0 a 1
//   trans: 1 a 0
//   start: 0
//   accept: 0
//
// Every (state, letter) pair needs exactly one `trans` line. `start`
// defaults to 0 and `accept` to the empty set.
//
// Monoid files:
//
//   order: 2
//   identity: 0
//   0 1
//   1 0
//
// Errors report 1-based line and column of the offending token.

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "semigalois/action.hpp"
#include "semigalois/language.hpp"
#include "semigalois/monoid.hpp"

namespace semigalois {

  struct dfa_file {
    action                   dfa;
    std::size_t              start = 0;
    std::vector<std::size_t> accepts;

    regular_language language() const {
      return regular_language::from_action(dfa, start, accepts);
    }
  };

  dfa_file      parse_dfa(std::string_view text);
  finite_monoid parse_monoid(std::string_view text);

  // The canonical DFA of `l` in the DFA file format.
  std::string format_dfa(regular_language const& l);

  std::string read_text_file(std::filesystem::path const& path);

}  // namespace semigalois
