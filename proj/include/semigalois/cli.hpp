#pragma once

// Command implementations behind the `semigalois` executable. Each command
// builds a report tree; `render` turns it into one of three formats.
//
// plain       keys in logical order, plus timing lines
// structured  indented `key: value` text, two spaces per level, keys sorted
//             lexicographically at every level, no timings
// json        the structured tree as JSON, keys sorted, no timings
//
// In the text formats, arrays of scalars are written inline as `[0, 1]`
// and other arrays as `- item` lines. Strings are written bare unless they
// could be misread, in which case they are JSON-quoted.

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "json.hpp"
#include "semigalois/action.hpp"
#include "semigalois/axioms.hpp"
#include "semigalois/language.hpp"
#include "semigalois/monoid.hpp"
#include "semigalois/variety.hpp"

namespace semigalois::cli {

  using report = nlohmann::ordered_json;

  enum class format { plain, structured, json };

  struct caps {
    std::size_t hom     = default_hom_cap;
    std::size_t closure = default_closure_cap;
    std::size_t lang    = default_lang_cap;
  };

  struct result {
    report body;
    // shown by the plain format only
    report timings = report::object();
    // false when a checked theorem failed
    bool ok = true;
  };

  result analyze(action const& x, caps const& c = {});

  result variety_generate(std::span<regular_language const> generators, caps const& c = {});
  result variety_member(std::span<regular_language const> generators, regular_language const& candidate,
                        caps const& c = {});
  result variety_correspond(std::span<regular_language const> languages, std::span<action const> actions,
                            caps const& c = {});
  result variety_fo(regular_language const& l);

  result reconstruct(finite_monoid const& m);
  result reconstruct_enumerate(std::size_t order);

  result axioms(axiom_options const& options);

  std::string render(result const& r, format f, std::optional<double> elapsed_ms = {});

  // Shared alphabet for a batch of regexes: the explicit one when given,
  // else the sorted letters the expressions use.
  std::string infer_alphabet(std::span<std::string const> regexes);

}  // namespace semigalois::cli
