#include "semigalois/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "semigalois/error.hpp"

namespace semigalois {

  namespace {

    struct token {
      std::string_view text;
      std::size_t      column;
    };

    struct line {
      std::size_t        number;
      std::vector<token> tokens;
    };

    // Splits into lines of whitespace separated tokens; `#` starts a
    // comment and blank lines are dropped.
    std::vector<line> tokenize(std::string_view text) {
      std::vector<line> out;
      std::size_t       number = 0;
      std::size_t       pos    = 0;
      while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        ++number;
        std::string_view body = text.substr(pos, end - pos);
        if (auto hash = body.find('#'); hash != std::string_view::npos) {
          body = body.substr(0, hash);
        }
        line        l{number, {}};
        std::size_t i = 0;
        while (i < body.size()) {
          if (std::isspace(static_cast<unsigned char>(body[i]))) {
            ++i;
            continue;
          }
          std::size_t j = i;
          while (j < body.size() && !std::isspace(static_cast<unsigned char>(body[j]))) {
            ++j;
          }
          l.tokens.push_back({body.substr(i, j - i), i + 1});
          i = j;
        }
        if (!l.tokens.empty()) {
          out.push_back(std::move(l));
        }
        pos = end + 1;
      }
      return out;
    }

    std::size_t to_index(token const& t, std::size_t line_no, std::size_t bound, char const* what) {
      std::size_t value = 0;
      auto [p, ec]      = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
      if (ec != std::errc() || p != t.text.data() + t.text.size()) {
        throw parse_error("expected a non-negative integer for " + std::string(what) + ", got '"
                              + std::string(t.text) + "'",
                          line_no, t.column);
      }
      if (value >= bound) {
        throw parse_error(std::string(what) + " " + std::to_string(value) + " is out of range", line_no, t.column);
      }
      return value;
    }

    // `key:` either as its own token or glued to the first value.
    std::string_view split_key(line& l) {
      auto&      first = l.tokens.front();
      auto const colon = first.text.find(':');
      if (colon == std::string_view::npos) {
        return {};
      }
      std::string_view key  = first.text.substr(0, colon);
      std::string_view rest = first.text.substr(colon + 1);
      if (rest.empty()) {
        l.tokens.erase(l.tokens.begin());
      } else {
        first = {rest, first.column + colon + 1};
      }
      return key;
    }

    void expect_count(line const& l, std::size_t n, std::size_t key_column, char const* what) {
      if (l.tokens.size() != n) {
        std::size_t const col = l.tokens.size() > n ? l.tokens[n].column : key_column;
        throw parse_error(std::string(what) + " takes " + std::to_string(n) + " value(s)", l.number, col);
      }
    }

  }  // namespace

  dfa_file parse_dfa(std::string_view text) {
    std::optional<std::string>                 alphabet;
    std::optional<std::size_t>                 states;
    std::optional<std::size_t>                 start;
    std::vector<std::size_t>                   accepts;
    std::vector<std::vector<std::size_t>>      trans;  // [letter][state], npos when unset
    std::size_t                                last_line = 0;
    constexpr std::size_t                      unset     = static_cast<std::size_t>(-1);

    for (auto l : tokenize(text)) {
      last_line                    = l.number;
      std::size_t const key_column = l.tokens.front().column;
      std::string_view  key        = split_key(l);
      if (key.empty()) {
        throw parse_error("expected 'key:'", l.number, key_column);
      }
      if (key == "alphabet") {
        if (alphabet) {
          throw parse_error("duplicate alphabet", l.number, key_column);
        }
        std::string a;
        for (auto const& t : l.tokens) {
          if (t.text.size() != 1 || !std::isalnum(static_cast<unsigned char>(t.text[0]))) {
            throw parse_error("letters are single alphanumeric characters", l.number, t.column);
          }
          if (a.find(t.text[0]) != std::string::npos) {
            throw parse_error("repeated letter", l.number, t.column);
          }
          a.push_back(t.text[0]);
        }
        if (a.empty()) {
          throw parse_error("alphabet is empty", l.number, key_column);
        }
        alphabet = a;
      } else if (key == "states") {
        if (states) {
          throw parse_error("duplicate states", l.number, key_column);
        }
        expect_count(l, 1, key_column, "states");
        states = to_index(l.tokens[0], l.number, unset, "state count");
        if (*states == 0) {
          throw parse_error("a DFA needs at least one state", l.number, l.tokens[0].column);
        }
      } else if (key == "trans") {
        if (!alphabet || !states) {
          throw parse_error("trans before alphabet and states", l.number, key_column);
        }
        expect_count(l, 3, key_column, "trans");
        if (trans.empty()) {
          trans.assign(alphabet->size(), std::vector<std::size_t>(*states, unset));
        }
        std::size_t const from   = to_index(l.tokens[0], l.number, *states, "state");
        auto const&       letter = l.tokens[1];
        auto const        k      = letter.text.size() == 1 ? alphabet->find(letter.text[0]) : std::string::npos;
        if (k == std::string::npos) {
          throw parse_error("unknown letter '" + std::string(letter.text) + "'", l.number, letter.column);
        }
        std::size_t const to = to_index(l.tokens[2], l.number, *states, "state");
        if (trans[k][from] != unset) {
          throw parse_error("duplicate transition", l.number, key_column);
        }
        trans[k][from] = to;
      } else if (key == "start") {
        if (!states) {
          throw parse_error("start before states", l.number, key_column);
        }
        if (start) {
          throw parse_error("duplicate start", l.number, key_column);
        }
        expect_count(l, 1, key_column, "start");
        start = to_index(l.tokens[0], l.number, *states, "state");
      } else if (key == "accept") {
        if (!states) {
          throw parse_error("accept before states", l.number, key_column);
        }
        for (auto const& t : l.tokens) {
          accepts.push_back(to_index(t, l.number, *states, "state"));
        }
      } else {
        throw parse_error("unknown key '" + std::string(key) + "'", l.number, key_column);
      }
    }
    if (!alphabet) {
      throw parse_error("missing alphabet", last_line + 1, 1);
    }
    if (!states) {
      throw parse_error("missing states", last_line + 1, 1);
    }
    if (trans.empty()) {
      trans.assign(alphabet->size(), std::vector<std::size_t>(*states, unset));
    }
    for (std::size_t k = 0; k < alphabet->size(); ++k) {
      for (std::size_t s = 0; s < *states; ++s) {
        if (trans[k][s] == unset) {
          throw parse_error("missing transition for state " + std::to_string(s) + " on '"
                                + std::string(1, (*alphabet)[k]) + "'",
                            last_line + 1, 1);
        }
      }
    }
    std::sort(accepts.begin(), accepts.end());
    accepts.erase(std::unique(accepts.begin(), accepts.end()), accepts.end());
    return {action::validate(signature::free_monoid(*alphabet), std::move(trans)), start.value_or(0),
            std::move(accepts)};
  }

  finite_monoid parse_monoid(std::string_view text) {
    std::optional<std::size_t>            order;
    std::optional<std::size_t>            identity;
    std::vector<std::vector<std::size_t>> rows;
    std::size_t                           last_line = 0;

    for (auto l : tokenize(text)) {
      last_line                    = l.number;
      std::size_t const key_column = l.tokens.front().column;
      bool const        keyed      = l.tokens.front().text.find(':') != std::string_view::npos;
      if (keyed) {
        std::string_view key = split_key(l);
        if (key == "order") {
          if (order) {
            throw parse_error("duplicate order", l.number, key_column);
          }
          expect_count(l, 1, key_column, "order");
          order = to_index(l.tokens[0], l.number, static_cast<std::size_t>(-1), "order");
          if (*order == 0) {
            throw parse_error("a monoid has at least one element", l.number, l.tokens[0].column);
          }
        } else if (key == "identity") {
          if (!order) {
            throw parse_error("identity before order", l.number, key_column);
          }
          if (identity) {
            throw parse_error("duplicate identity", l.number, key_column);
          }
          expect_count(l, 1, key_column, "identity");
          identity = to_index(l.tokens[0], l.number, *order, "element");
        } else {
          throw parse_error("unknown key '" + std::string(key) + "'", l.number, key_column);
        }
        continue;
      }
      if (!order || !identity) {
        throw parse_error("table row before order and identity", l.number, key_column);
      }
      if (rows.size() == *order) {
        throw parse_error("more than " + std::to_string(*order) + " table rows", l.number, key_column);
      }
      if (l.tokens.size() != *order) {
        std::size_t const col = l.tokens.size() > *order ? l.tokens[*order].column : l.tokens.back().column;
        throw parse_error("row needs " + std::to_string(*order) + " entries", l.number, col);
      }
      std::vector<std::size_t> row;
      for (auto const& t : l.tokens) {
        row.push_back(to_index(t, l.number, *order, "element"));
      }
      rows.push_back(std::move(row));
    }
    if (!order) {
      throw parse_error("missing order", last_line + 1, 1);
    }
    if (!identity) {
      throw parse_error("missing identity", last_line + 1, 1);
    }
    if (rows.size() != *order) {
      throw parse_error("expected " + std::to_string(*order) + " table rows", last_line + 1, 1);
    }
    return finite_monoid::validate(rows, *identity);
  }

  std::string format_dfa(regular_language const& l) {
    std::ostringstream out;
    out << "alphabet:";
    for (char c : l.alphabet()) {
      out << ' ' << c;
    }
    out << "\nstates: " << l.states() << '\n';
    for (std::size_t s = 0; s < l.states(); ++s) {
      for (std::size_t k = 0; k < l.alphabet().size(); ++k) {
        out << "trans: " << s << ' ' << l.alphabet()[k] << ' ' << l.dfa().step(s, k) << '\n';
      }
    }
    out << "start: " << l.start() << "\naccept:";
    for (auto s : l.accepts()) {
      out << ' ' << s;
    }
    out << '\n';
    return out.str();
  }

  std::string read_text_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw error("cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

}  // namespace semigalois
