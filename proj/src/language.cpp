#include "semigalois/language.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "semigalois/error.hpp"

namespace semigalois {

  namespace {
    std::size_t index_in(std::string const& alphabet, char c) {
      auto pos = alphabet.find(c);
      if (pos == std::string::npos) {
        throw unknown_letter(c);
      }
      return pos;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // canonical form
  ////////////////////////////////////////////////////////////////////////

  regular_language::regular_language(action dfa, std::vector<std::size_t> accepts)
      : dfa_(std::move(dfa)), accepts_(std::move(accepts)), accepting_(dfa_.states(), false) {
    for (auto s : accepts_) {
      accepting_[s] = true;
    }
  }

  regular_language regular_language::from_components(std::string                     alphabet,
                                                     std::vector<state_map> const&   trans,
                                                     std::size_t                     start,
                                                     std::vector<std::size_t> const& accepts) {
    if (std::set<char>(alphabet.begin(), alphabet.end()).size() != alphabet.size()) {
      throw error("alphabet has repeated letters");
    }
    if (trans.size() != alphabet.size()) {
      throw arity_mismatch("expected one transition map per letter");
    }
    std::size_t const n = trans.empty() ? start + 1 : trans.front().size();
    if (start >= n) {
      throw error("start state out of range");
    }
    for (auto const& t : trans) {
      if (t.size() != n || std::any_of(t.begin(), t.end(), [n](std::size_t s) { return s >= n; })) {
        throw error("transition map is not total on the state set");
      }
    }
    std::vector<bool> accepting(n, false);
    for (auto s : accepts) {
      if (s >= n) {
        throw error("accepting state out of range");
      }
      accepting[s] = true;
    }

    // reachable states, in breadth-first order
    std::vector<std::size_t> order{start};
    std::vector<bool>        seen(n, false);
    seen[start] = true;
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (auto const& t : trans) {
        if (!seen[t[order[k]]]) {
          seen[t[order[k]]] = true;
          order.push_back(t[order[k]]);
        }
      }
    }

    // Moore refinement on the reachable part
    std::vector<std::size_t> cls(n, 0);
    std::size_t              count = 0;
    {
      std::map<bool, std::size_t> first;
      for (auto s : order) {
        cls[s] = first.try_emplace(accepting[s], first.size()).first->second;
      }
      count = first.size();
    }
    while (true) {
      std::map<std::vector<std::size_t>, std::size_t> key_index;
      std::vector<std::size_t>                        next(n, 0);
      for (auto s : order) {
        std::vector<std::size_t> key{cls[s]};
        for (auto const& t : trans) {
          key.push_back(cls[t[s]]);
        }
        next[s] = key_index.try_emplace(std::move(key), key_index.size()).first->second;
      }
      bool const stable = key_index.size() == count;
      cls               = std::move(next);
      count             = key_index.size();
      if (stable) {
        break;
      }
    }

    // breadth-first renumbering of the classes
    std::vector<std::size_t> rep(count, n), number(count, count);
    for (auto s : order) {
      if (rep[cls[s]] == n) {
        rep[cls[s]] = s;
      }
    }
    std::vector<std::size_t> queue{cls[start]};
    number[cls[start]] = 0;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (auto const& t : trans) {
        std::size_t const c = cls[t[rep[queue[k]]]];
        if (number[c] == count) {
          number[c] = queue.size();
          queue.push_back(c);
        }
      }
    }
    std::vector<state_map>   columns(trans.size(), state_map(count));
    std::vector<std::size_t> acc;
    for (std::size_t k = 0; k < count; ++k) {
      std::size_t const s = rep[queue[k]];
      for (std::size_t a = 0; a < trans.size(); ++a) {
        columns[a][k] = number[cls[trans[a][s]]];
      }
      if (accepting[s]) {
        acc.push_back(k);
      }
    }
    auto dfa = action::trusted(signature::free_monoid(std::move(alphabet)), count, std::move(columns));
    return regular_language(std::move(dfa), std::move(acc));
  }

  regular_language regular_language::from_action(action const&                   x,
                                                 std::size_t                     start,
                                                 std::vector<std::size_t> const& accepts) {
    if (!x.sig().is_free()) {
      throw signature_mismatch("languages need a free-monoid action");
    }
    return from_components(x.sig().alphabet(), x.columns(), start, accepts);
  }

  regular_language regular_language::empty(std::string alphabet) {
    std::vector<state_map> trans(alphabet.size(), state_map{0});
    return from_components(std::move(alphabet), trans, 0, {});
  }

  regular_language regular_language::full(std::string alphabet) {
    std::vector<state_map> trans(alphabet.size(), state_map{0});
    return from_components(std::move(alphabet), trans, 0, {0});
  }

  std::size_t regular_language::letter_index(char c) const {
    return index_in(alphabet(), c);
  }

  std::size_t regular_language::run(std::string_view word) const {
    std::size_t s = 0;
    for (char c : word) {
      s = dfa_.step(s, letter_index(c));
    }
    return s;
  }

  bool operator==(regular_language const& a, regular_language const& b) {
    return a.dfa_ == b.dfa_ && a.accepts_ == b.accepts_;
  }

  bool operator<(regular_language const& a, regular_language const& b) {
    if (a.alphabet() != b.alphabet()) {
      return a.alphabet() < b.alphabet();
    }
    if (a.states() != b.states()) {
      return a.states() < b.states();
    }
    if (a.dfa_.columns() != b.dfa_.columns()) {
      return a.dfa_.columns() < b.dfa_.columns();
    }
    return a.accepts_ < b.accepts_;
  }

  ////////////////////////////////////////////////////////////////////////
  // regular expressions
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Thompson automaton: every state has at most one letter edge.
    struct nfa {
      static constexpr std::size_t none = static_cast<std::size_t>(-1);

      std::vector<std::vector<std::size_t>> eps;
      std::vector<char>                     letter;
      std::vector<std::size_t>              target;

      std::size_t add() {
        eps.emplace_back();
        letter.push_back(0);
        target.push_back(none);
        return eps.size() - 1;
      }
    };

    struct fragment {
      std::size_t in;
      std::size_t out;
    };

    class regex_parser {
     public:
      regex_parser(std::string_view text, nfa& a) : text_(text), nfa_(a) {}

      fragment parse() {
        auto f = alternation();
        skip_space();
        if (pos_ < text_.size()) {
          fail(text_[pos_] == ')' ? "unbalanced ')'" : "unexpected character");
        }
        return f;
      }

      std::set<char> const& letters() const noexcept {
        return letters_;
      }

     private:
      [[noreturn]] void fail(std::string const& msg) const {
        throw parse_error(msg, 1, pos_ + 1);
      }

      void skip_space() {
        while (pos_ < text_.size() && text_[pos_] == ' ') {
          ++pos_;
        }
      }

      bool eat(std::string_view token) {
        skip_space();
        if (text_.substr(pos_, token.size()) == token) {
          pos_ += token.size();
          return true;
        }
        return false;
      }

      bool at_atom() {
        skip_space();
        if (pos_ >= text_.size()) {
          return false;
        }
        char const c = text_[pos_];
        return c != '|' && c != ')' && c != '*';
      }

      fragment epsilon() {
        fragment f{nfa_.add(), nfa_.add()};
        nfa_.eps[f.in].push_back(f.out);
        return f;
      }

      fragment alternation() {
        auto f = concatenation();
        while (eat("|")) {
          auto      g = concatenation();
          fragment  h{nfa_.add(), nfa_.add()};
          nfa_.eps[h.in]  = {f.in, g.in};
          nfa_.eps[f.out].push_back(h.out);
          nfa_.eps[g.out].push_back(h.out);
          f = h;
        }
        return f;
      }

      fragment concatenation() {
        if (!at_atom()) {
          return epsilon();
        }
        auto f = repetition();
        while (at_atom()) {
          auto g = repetition();
          nfa_.eps[f.out].push_back(g.in);
          f.out = g.out;
        }
        return f;
      }

      fragment repetition() {
        auto f = atom();
        while (eat("*")) {
          fragment h{nfa_.add(), nfa_.add()};
          nfa_.eps[h.in]  = {f.in, h.out};
          nfa_.eps[f.out].push_back(f.in);
          nfa_.eps[f.out].push_back(h.out);
          f = h;
        }
        return f;
      }

      fragment atom() {
        skip_space();
        if (eat("(")) {
          if (eat(")")) {
            return epsilon();
          }
          auto f = alternation();
          if (!eat(")")) {
            fail("expected ')'");
          }
          return f;
        }
        if (eat("{}") || eat("\xE2\x88\x85")) {  // ∅
          return {nfa_.add(), nfa_.add()};
        }
        if (eat("\xCE\xB5")) {  // ε
          return epsilon();
        }
        char const c = text_[pos_];
        if (!std::isalnum(static_cast<unsigned char>(c))) {
          fail(std::string("unexpected character '") + c + "'");
        }
        ++pos_;
        letters_.insert(c);
        fragment f{nfa_.add(), nfa_.add()};
        nfa_.letter[f.in] = c;
        nfa_.target[f.in] = f.out;
        return f;
      }

      std::string_view text_;
      nfa&             nfa_;
      std::size_t      pos_ = 0;
      std::set<char>   letters_;
    };

    std::vector<std::size_t> eps_closure(nfa const& a, std::vector<std::size_t> states) {
      std::vector<bool> in(a.eps.size(), false);
      for (auto s : states) {
        in[s] = true;
      }
      for (std::size_t k = 0; k < states.size(); ++k) {
        for (auto t : a.eps[states[k]]) {
          if (!in[t]) {
            in[t] = true;
            states.push_back(t);
          }
        }
      }
      std::sort(states.begin(), states.end());
      return states;
    }
  }  // namespace

  regular_language parse_regex(std::string_view text, std::optional<std::string> alphabet) {
    nfa          a;
    regex_parser parser(text, a);
    auto         f = parser.parse();
    if (!alphabet) {
      alphabet.emplace(parser.letters().begin(), parser.letters().end());
      if (alphabet->empty()) {
        throw parse_error("expression uses no letters and no alphabet was given", 1, 1);
      }
    }
    for (char c : parser.letters()) {
      index_in(*alphabet, c);
    }

    // subset construction
    std::map<std::vector<std::size_t>, std::size_t> index;
    std::vector<std::vector<std::size_t>>           subsets{eps_closure(a, {f.in})};
    index.emplace(subsets[0], 0);
    std::vector<state_map> trans(alphabet->size());
    for (std::size_t k = 0; k < subsets.size(); ++k) {
      for (std::size_t l = 0; l < alphabet->size(); ++l) {
        std::vector<std::size_t> next;
        for (auto s : subsets[k]) {
          if (a.target[s] != nfa::none && a.letter[s] == (*alphabet)[l]) {
            next.push_back(a.target[s]);
          }
        }
        auto [it, fresh] = index.try_emplace(eps_closure(a, std::move(next)), subsets.size());
        if (fresh) {
          subsets.push_back(it->first);
        }
        trans[l].push_back(it->second);
      }
    }
    std::vector<std::size_t> accepts;
    for (std::size_t k = 0; k < subsets.size(); ++k) {
      if (std::binary_search(subsets[k].begin(), subsets[k].end(), f.out)) {
        accepts.push_back(k);
      }
    }
    return regular_language::from_components(std::move(*alphabet), trans, 0, accepts);
  }

  ////////////////////////////////////////////////////////////////////////
  // Boolean operations and quotients
  ////////////////////////////////////////////////////////////////////////

  namespace {
    regular_language with_accepts(regular_language const& l, std::size_t start, auto&& accept) {
      std::vector<std::size_t> acc;
      for (std::size_t s = 0; s < l.states(); ++s) {
        if (accept(s)) {
          acc.push_back(s);
        }
      }
      return regular_language::from_action(l.dfa(), start, acc);
    }

    regular_language product_language(regular_language const& l, regular_language const& r, auto&& accept) {
      if (l.alphabet() != r.alphabet()) {
        throw alphabet_mismatch();
      }
      auto                     p = product(l.dfa(), r.dfa());
      std::vector<std::size_t> acc;
      for (std::size_t s = 0; s < p.object.states(); ++s) {
        if (accept(l.is_accepting(p.first(s)), r.is_accepting(p.second(s)))) {
          acc.push_back(s);
        }
      }
      // the pair of starts is state 0 of the product
      return regular_language::from_action(p.object, 0, acc);
    }
  }  // namespace

  regular_language complement(regular_language const& l) {
    return with_accepts(l, 0, [&](std::size_t s) { return !l.is_accepting(s); });
  }

  regular_language unite(regular_language const& l, regular_language const& r) {
    return product_language(l, r, [](bool a, bool b) { return a || b; });
  }

  regular_language intersect(regular_language const& l, regular_language const& r) {
    return product_language(l, r, [](bool a, bool b) { return a && b; });
  }

  regular_language left_quotient(std::string_view w, regular_language const& l) {
    return with_accepts(l, l.run(w), [&](std::size_t s) { return l.is_accepting(s); });
  }

  regular_language right_quotient(regular_language const& l, std::string_view w) {
    std::vector<std::size_t> word;
    for (char c : w) {
      word.push_back(l.letter_index(c));
    }
    return with_accepts(l, 0, [&](std::size_t s) { return l.is_accepting(l.dfa().run(s, word)); });
  }

  ////////////////////////////////////////////////////////////////////////
  // free monoid homomorphisms
  ////////////////////////////////////////////////////////////////////////

  free_hom free_hom::validate(std::string source, std::string target, std::vector<std::string> images) {
    signature::free_monoid(source);
    signature::free_monoid(target);
    if (images.size() != source.size()) {
      throw arity_mismatch("expected one image word per source letter");
    }
    for (auto const& w : images) {
      for (char c : w) {
        index_in(target, c);
      }
    }
    return {std::move(source), std::move(target), std::move(images)};
  }

  std::string free_hom::operator()(std::string_view word) const {
    std::string out;
    for (char c : word) {
      out += images[index_in(source, c)];
    }
    return out;
  }

  action pullback_action(free_hom const& f, action const& x) {
    if (!x.sig().is_free() || x.sig().alphabet() != f.target) {
      throw alphabet_mismatch();
    }
    std::vector<state_map> columns(f.source.size(), state_map(x.states()));
    for (std::size_t a = 0; a < f.source.size(); ++a) {
      std::vector<std::size_t> word;
      for (char c : f.images[a]) {
        word.push_back(index_in(f.target, c));
      }
      for (std::size_t s = 0; s < x.states(); ++s) {
        columns[a][s] = x.run(s, word);
      }
    }
    return action::trusted(signature::free_monoid(f.source), x.states(), std::move(columns));
  }

  regular_language inverse_hom_image(free_hom const& f, regular_language const& l) {
    if (l.alphabet() != f.target) {
      throw alphabet_mismatch();
    }
    return regular_language::from_action(pullback_action(f, l.dfa()), 0, l.accepts());
  }

  std::vector<std::string> words_up_to(std::string const& alphabet, std::size_t n) {
    std::vector<std::string> out{""};
    std::size_t              begin = 0;
    for (std::size_t len = 0; len < n; ++len) {
      std::size_t const end = out.size();
      for (std::size_t k = begin; k < end; ++k) {
        for (char c : alphabet) {
          out.push_back(out[k] + c);
        }
      }
      begin = end;
    }
    return out;
  }

}  // namespace semigalois
