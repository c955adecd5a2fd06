#include "semigalois/cli.hpp"

#include <cctype>
#include <chrono>
#include <cstdio>
#include <deque>
#include <set>
#include <sstream>

#include "semigalois/error.hpp"
#include "semigalois/galois.hpp"

namespace semigalois::cli {

  namespace {

    using clock = std::chrono::steady_clock;

    double millis_since(clock::time_point t0) {
      return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    }

    report table_of(finite_monoid const& m) {
      report rows = report::array();
      for (auto const& row : m.rows()) {
        rows.push_back(row);
      }
      return rows;
    }

    std::optional<std::string> known_name(finite_monoid const& m) {
      if (m.order() == 1) {
        return "trivial";
      }
      if (monoid_iso_check(m, cyclic_group(m.order()))) {
        return "C" + std::to_string(m.order());
      }
      if (m.order() == 2) {
        return "U2";
      }
      return std::nullopt;
    }

    report monoid_report(finite_monoid const& m) {
      report r;
      r["order"]    = m.order();
      r["identity"] = m.identity();
      if (auto name = known_name(m)) {
        r["isomorphic_to"] = *name;
      }
      r["group"]     = is_group(m);
      r["aperiodic"] = is_aperiodic(m);
      r["table"]     = table_of(m);
      return r;
    }

    report stamp_report(stamp const& s) {
      report r      = monoid_report(s.target());
      report images = report::object();
      for (std::size_t k = 0; k < s.alphabet().size(); ++k) {
        images[std::string(1, s.alphabet()[k])] = s.letter_images()[k];
      }
      r["letters"] = images;
      return r;
    }

    report dfa_report(regular_language const& l) {
      report r;
      r["states"] = l.states();
      r["start"]  = l.start();
      r["accept"] = l.accepts();
      report t    = report::object();
      for (std::size_t k = 0; k < l.alphabet().size(); ++k) {
        t[std::string(1, l.alphabet()[k])] = l.dfa().trans(k);
      }
      r["trans"] = t;
      return r;
    }

    report check_list(check_report const& c) {
      report out = report::array();
      for (auto const& e : c.entries) {
        report item;
        item["name"] = e.name;
        item["pass"] = e.pass;
        if (!e.detail.empty()) {
          item["detail"] = e.detail;
        }
        out.push_back(item);
      }
      return out;
    }

    // Shortest word (shortlex) whose image under `s` is `x`.
    std::string word_for(stamp const& s, std::size_t x) {
      auto const&                            m = s.target();
      std::vector<std::optional<std::string>> words(m.order());
      std::deque<std::size_t>                queue{m.identity()};
      words[m.identity()] = std::string();
      while (!queue.empty()) {
        auto const e = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < s.alphabet().size(); ++k) {
          auto const f = m.mul(e, s.letter_images()[k]);
          if (!words[f]) {
            words[f] = *words[e] + s.alphabet()[k];
            queue.push_back(f);
          }
        }
      }
      return *words[x];
    }

    ////////////////////////////////////////////////////////////////////////
    // Text rendering
    ////////////////////////////////////////////////////////////////////////

    template <typename J>
    bool is_scalar_array(J const& v) {
      if (!v.is_array()) {
        return false;
      }
      for (auto const& e : v) {
        if (e.is_structured()) {
          return false;
        }
      }
      return true;
    }

    bool needs_quotes(std::string const& s) {
      if (s.empty() || s == "true" || s == "false" || s == "null" || std::isspace(static_cast<unsigned char>(s.front()))
          || std::isspace(static_cast<unsigned char>(s.back()))) {
        return true;
      }
      if (std::isdigit(static_cast<unsigned char>(s.front())) || s.front() == '-') {
        return true;
      }
      for (char c : s) {
        if (c == ':' || c == '#' || c == '[' || c == ']' || c == '{' || c == '}' || c == ',' || c == '"'
            || c == '\'' || c == '\n') {
          return true;
        }
      }
      return false;
    }

    template <typename J>
    std::string inline_value(J const& v) {
      if (v.is_string()) {
        auto const s = v.template get<std::string>();
        return needs_quotes(s) ? v.dump() : s;
      }
      if (v.is_array()) {
        std::string out = "[";
        bool        first = true;
        for (auto const& e : v) {
          out += (first ? "" : ", ") + inline_value(e);
          first = false;
        }
        return out + "]";
      }
      if (v.is_object()) {
        return "{}";
      }
      return v.dump();
    }

    template <typename J>
    void emit_object(std::ostream& out, J const& obj, std::size_t indent);

    template <typename J>
    void emit_array(std::ostream& out, J const& arr, std::size_t indent) {
      std::string const pad(indent, ' ');
      for (auto const& item : arr) {
        if (item.is_object() && !item.empty()) {
          out << pad << "-";
          std::ostringstream nested;
          emit_object(nested, item, indent + 2);
          // put the first key on the dash line
          auto text = nested.str();
          out << text.substr(indent + 1);
        } else if (item.is_array() && !item.empty() && !is_scalar_array(item)) {
          out << pad << "-\n";
          emit_array(out, item, indent + 2);
        } else {
          out << pad << "- " << inline_value(item) << '\n';
        }
      }
    }

    template <typename J>
    void emit_object(std::ostream& out, J const& obj, std::size_t indent) {
      std::string const pad(indent, ' ');
      for (auto it = obj.begin(); it != obj.end(); ++it) {
        auto const& v = it.value();
        if (v.is_object() && !v.empty()) {
          out << pad << it.key() << ":\n";
          emit_object(out, v, indent + 2);
        } else if (v.is_array() && !v.empty() && !is_scalar_array(v)) {
          out << pad << it.key() << ":\n";
          emit_array(out, v, indent + 2);
        } else {
          out << pad << it.key() << ": " << inline_value(v) << '\n';
        }
      }
    }

    std::string format_ms(double ms) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f ms", ms);
      return buf;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Commands
  ////////////////////////////////////////////////////////////////////////

  result analyze(action const& x, caps const& c) {
    result out;
    auto&  r    = out.body;
    r["alphabet"] = x.sig().alphabet();
    r["states"]   = x.states();
    auto rs       = roots(x);
    r["rooted"]   = !rs.empty();
    r["roots"]    = rs;

    auto   cover = optimal_covering(x);
    report comps = report::array();
    for (auto const& inc : cover.cover.components) {
      report comp;
      comp["root"] = inc(0);
      std::vector<std::size_t> states;
      for (std::size_t s = 0; s < inc.dom().states(); ++s) {
        states.push_back(inc(s));
      }
      std::sort(states.begin(), states.end());
      comp["states"] = states;
      comps.push_back(comp);
    }
    r["covering"] = {{"root_degree", cover.root_degree}, {"components", comps}};

    auto   end = end_monoid(x, c.hom);
    report elements = report::array();
    for (std::size_t k = 0; k < end.size(); ++k) {
      elements.push_back(end.element(k));
    }
    report end_r  = monoid_report(end.monoid());
    end_r["maps"] = elements;
    r["end"]      = end_r;

    std::vector<action> gens{x};
    auto                stage = fundamental_monoid(gens, c.closure);
    r["galois_closure"]       = {{"states", stage.stage.states()}};
    auto   st                 = stamp::validate(x.sig().alphabet(), stage.monoid.monoid(), stage.stamp);
    r["stage"]                = stamp_report(st);
    return out;
  }

  result variety_generate(std::span<regular_language const> generators, caps const& c) {
    result out;
    auto   v             = local_variety_generate(generators);
    out.body["alphabet"] = v.recognizer.alphabet();
    out.body["generators"] = generators.size();
    out.body["stamp"]      = stamp_report(v.recognizer);
    auto   langs           = recognized_languages(v.recognizer, c.lang);
    report dfas            = report::array();
    for (auto const& l : langs) {
      dfas.push_back(dfa_report(l));
    }
    out.body["languages"] = {{"count", langs.size()}, {"dfas", dfas}};
    return out;
  }

  result variety_member(std::span<regular_language const> generators, regular_language const& candidate,
                        caps const&) {
    result out;
    auto   v               = local_variety_generate(generators);
    auto   h               = variety_membership(v, candidate);
    out.body["alphabet"]   = v.recognizer.alphabet();
    out.body["recognizer"] = stamp_report(v.recognizer);
    out.body["candidate"]  = dfa_report(candidate);
    out.body["member"]     = h.has_value();
    if (h) {
      out.body["syntactic"] = stamp_report(syntactic_stamp(candidate).syntactic);
      out.body["factoring_hom"] = h->map();
    }
    return out;
  }

  result variety_correspond(std::span<regular_language const> languages, std::span<action const> actions,
                            caps const& c) {
    result out;
    auto   checks = variety_correspondence_check(languages, actions, {c.lang, c.closure});
    out.body["languages"] = languages.size();
    out.body["actions"]   = actions.size();
    out.body["checks"]    = check_list(checks);
    out.body["all_pass"]  = checks.all_pass();
    out.ok                = checks.all_pass();
    return out;
  }

  result variety_fo(regular_language const& l) {
    result out;
    auto   v                = is_fo_definable(l);
    auto const& m           = v.syntactic.target();
    out.body["language"]    = dfa_report(l);
    out.body["syntactic"]   = stamp_report(v.syntactic);
    out.body["fo_definable"] = v.definable;
    if (v.witness) {
      auto const   x = *v.witness;
      auto const   e = idempotent_power(m, x);
      report       wit;
      wit["element"]        = x;
      wit["word"]           = word_for(v.syntactic, x);
      wit["x_omega"]        = e;
      wit["x_omega_plus_1"] = m.mul(e, x);
      out.body["witness"] = wit;
    }
    return out;
  }

  namespace {
    report reconstruct_one(finite_monoid const& m, bool& ok) {
      auto   gamma = stamp_to_galois(monoid_hom::identity(m));
      auto   lam   = reconstruct_check(m);
      bool   iso   = lam.is_injective() && lam.is_surjective();
      report r;
      r["order"]        = m.order();
      r["gamma_states"] = gamma.states();
      r["end_order"]    = gamma.end().size();
      r["iso"]          = iso;
      ok                = ok && iso;
      return r;
    }
  }  // namespace

  result reconstruct(finite_monoid const& m) {
    result out;
    auto   t0           = clock::now();
    out.body["monoid"]  = monoid_report(m);
    out.body["reconstruction"] = reconstruct_one(m, out.ok);
    out.timings["reconstruction"] = format_ms(millis_since(t0));
    return out;
  }

  result reconstruct_enumerate(std::size_t order) {
    result out;
    auto   t0       = clock::now();
    auto   monoids  = enumerate_monoids(order);
    out.timings["enumeration"] = format_ms(millis_since(t0));
    out.body["order"] = order;
    out.body["count"] = monoids.size();
    report list       = report::array();
    report times      = report::array();
    for (std::size_t i = 0; i < monoids.size(); ++i) {
      auto   t1 = clock::now();
      report r  = reconstruct_one(monoids[i], out.ok);
      r["table"] = table_of(monoids[i]);
      list.push_back(r);
      times.push_back(format_ms(millis_since(t1)));
    }
    out.body["monoids"] = list;
    out.body["all_iso"] = out.ok;
    out.timings["per_monoid"] = times;
    return out;
  }

  result axioms(axiom_options const& options) {
    result out;
    auto   checks            = check_semi_galois_axioms(options);
    out.body["seed"]         = options.seed;
    out.body["diagrams"]     = options.diagrams;
    out.body["max_states"]   = options.max_states;
    out.body["checks"]       = check_list(checks);
    out.body["failures"]     = checks.failures();
    out.ok                   = checks.all_pass();
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rendering
  ////////////////////////////////////////////////////////////////////////

  std::string render(result const& r, format f, std::optional<double> elapsed_ms) {
    std::ostringstream out;
    switch (f) {
      case format::plain: {
        emit_object(out, r.body, 0);
        out << "status: " << (r.ok ? "ok" : "FAILED") << '\n';
        if (!r.timings.empty()) {
          out << "timings:\n";
          emit_object(out, r.timings, 2);
        }
        if (elapsed_ms) {
          out << "elapsed: " << format_ms(*elapsed_ms) << '\n';
        }
        break;
      }
      case format::structured: {
        nlohmann::json sorted = nlohmann::json::parse(r.body.dump());
        sorted["ok"]          = r.ok;
        emit_object(out, sorted, 0);
        break;
      }
      case format::json: {
        nlohmann::json sorted = nlohmann::json::parse(r.body.dump());
        sorted["ok"]          = r.ok;
        out << sorted.dump(2) << '\n';
        break;
      }
    }
    return out.str();
  }

  std::string infer_alphabet(std::span<std::string const> regexes) {
    std::set<char> letters;
    for (auto const& re : regexes) {
      for (char ch : re) {
        if (std::isalnum(static_cast<unsigned char>(ch))) {
          letters.insert(ch);
        }
      }
    }
    if (letters.empty()) {
      throw parse_error("expressions use no letters and no alphabet was given", 1, 1);
    }
    return {letters.begin(), letters.end()};
  }

}  // namespace semigalois::cli
