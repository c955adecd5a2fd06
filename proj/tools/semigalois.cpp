#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semigalois/cli.hpp"
#include "semigalois/error.hpp"
#include "semigalois/io.hpp"

namespace sg = semigalois;

namespace {

  struct language_inputs {
    std::vector<std::string> regexes;
    std::vector<std::string> files;
    std::string              alphabet;

    void attach(CLI::App* cmd) {
      cmd->add_option("--regex", regexes, "Language given as a regular expression (repeatable)");
      cmd->add_option("files", files, "Languages given as DFA files")->check(CLI::ExistingFile);
      cmd->add_option("--alphabet", alphabet, "Alphabet for the regular expressions, e.g. ab");
    }

    std::string resolve_alphabet(std::vector<std::string> const& extra_regexes,
                                 std::vector<sg::dfa_file> const& dfas) const {
      if (!alphabet.empty()) {
        return alphabet;
      }
      if (!dfas.empty()) {
        return dfas.front().dfa.sig().alphabet();
      }
      std::vector<std::string> all = regexes;
      all.insert(all.end(), extra_regexes.begin(), extra_regexes.end());
      return sg::cli::infer_alphabet(all);
    }
  };

  std::vector<sg::dfa_file> load_dfas(std::vector<std::string> const& paths) {
    std::vector<sg::dfa_file> out;
    for (auto const& p : paths) {
      try {
        out.push_back(sg::parse_dfa(sg::read_text_file(p)));
      } catch (sg::parse_error const& e) {
        throw sg::error(p + ": " + e.what());
      }
    }
    return out;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-galois categories of finite monoid actions"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "plain";
  sg::cli::caps caps;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"plain", "structured", "json"}));
  app.add_option("--hom-cap", caps.hom, "Cap on hom-set and End enumeration");
  app.add_option("--closure-cap", caps.closure, "Cap on closures and galois stages");
  app.add_option("--lang-cap", caps.lang, "Cap on stamp order when listing languages");

  std::string analyze_file;
  auto*       analyze = app.add_subcommand("analyze", "Categorical structure of a DFA");
  analyze->add_option("dfa", analyze_file, "DFA file")->required()->check(CLI::ExistingFile);

  auto* variety = app.add_subcommand("variety", "Local varieties of regular languages");
  variety->require_subcommand(1);
  language_inputs gen_in, mem_in, cor_in, fo_in;
  auto*           generate = variety->add_subcommand("generate", "Stamp and languages of a generated local variety");
  gen_in.attach(generate);
  auto* member = variety->add_subcommand("member", "Membership of a candidate language");
  mem_in.attach(member);
  std::string candidate_regex, candidate_file;
  auto* cand_re = member->add_option("--candidate", candidate_regex, "Candidate as a regular expression");
  member->add_option("--candidate-file", candidate_file, "Candidate as a DFA file")
      ->check(CLI::ExistingFile)
      ->excludes(cand_re);
  auto* correspond = variety->add_subcommand("correspond", "Language, stamp and action correspondence check");
  cor_in.attach(correspond);
  std::vector<std::string> action_files;
  correspond->add_option("--action", action_files, "Action as a DFA file (repeatable)")->check(CLI::ExistingFile);
  auto* fo = variety->add_subcommand("fo", "First-order definability via aperiodicity");
  fo_in.attach(fo);

  std::string monoid_file;
  std::size_t enumerate = 0;
  auto*       reconstruct = app.add_subcommand("reconstruct", "Reconstruct monoids from their galois objects");
  auto*       mfile       = reconstruct->add_option("monoid", monoid_file, "Monoid table file")->check(CLI::ExistingFile);
  reconstruct->add_option("--enumerate", enumerate, "Check every monoid of this order")
      ->check(CLI::Range(1, 4))
      ->excludes(mfile);

  sg::axiom_options axiom_opts;
  auto*             axioms = app.add_subcommand("axioms", "Property checks of the category axioms");
  axioms->add_option("--seed", axiom_opts.seed, "Random seed");
  axioms->add_option("--diagrams", axiom_opts.diagrams, "Number of random diagrams");
  axioms->add_option("--max-states", axiom_opts.max_states, "Largest sampled action");

  CLI11_PARSE(app, argc, argv);

  static std::map<std::string, sg::cli::format> const formats{
      {"plain", sg::cli::format::plain},
      {"structured", sg::cli::format::structured},
      {"json", sg::cli::format::json},
  };
  auto const fmt = formats.at(format_name);

  try {
    auto const       t0 = std::chrono::steady_clock::now();
    sg::cli::result  r;
    if (*analyze) {
      r = sg::cli::analyze(load_dfas({analyze_file}).front().dfa, caps);
    } else if (*variety) {
      auto languages = [](language_inputs const& in, std::vector<std::string> const& extra) {
        auto                             dfas     = load_dfas(in.files);
        auto const                       alphabet = in.resolve_alphabet(extra, dfas);
        std::vector<sg::regular_language> out;
        for (auto const& d : dfas) {
          out.push_back(d.language());
        }
        for (auto const& re : in.regexes) {
          out.push_back(sg::parse_regex(re, alphabet));
        }
        if (out.empty()) {
          throw sg::error("no languages given; use --regex or DFA files");
        }
        return std::pair{out, alphabet};
      };
      if (*generate) {
        r = sg::cli::variety_generate(languages(gen_in, {}).first, caps);
      } else if (*member) {
        std::vector<std::string> extra;
        if (!candidate_regex.empty()) {
          extra.push_back(candidate_regex);
        }
        auto [gens, alphabet] = languages(mem_in, extra);
        std::optional<sg::regular_language> cand;
        if (!candidate_file.empty()) {
          cand = load_dfas({candidate_file}).front().language();
        } else if (!candidate_regex.empty()) {
          cand = sg::parse_regex(candidate_regex, alphabet);
        } else {
          throw sg::error("member needs --candidate or --candidate-file");
        }
        r = sg::cli::variety_member(gens, *cand, caps);
      } else if (*correspond) {
        auto gens = languages(cor_in, {}).first;
        std::vector<sg::action> actions;
        for (auto const& d : load_dfas(action_files)) {
          actions.push_back(d.dfa);
        }
        if (actions.empty()) {
          for (auto const& l : gens) {
            actions.push_back(l.dfa());
          }
        }
        r = sg::cli::variety_correspond(gens, actions, caps);
      } else {
        auto langs = languages(fo_in, {}).first;
        if (langs.size() != 1) {
          throw sg::error("fo takes exactly one language");
        }
        r = sg::cli::variety_fo(langs.front());
      }
    } else if (*reconstruct) {
      if (enumerate != 0) {
        r = sg::cli::reconstruct_enumerate(enumerate);
      } else if (!monoid_file.empty()) {
        std::optional<sg::finite_monoid> m;
        try {
          m = sg::parse_monoid(sg::read_text_file(monoid_file));
        } catch (sg::parse_error const& e) {
          throw sg::error(monoid_file + ": " + e.what());
        }
        r = sg::cli::reconstruct(*m);
      } else {
        throw sg::error("reconstruct needs a monoid file or --enumerate");
      }
    } else {
      r = sg::cli::axioms(axiom_opts);
    }
    double const ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cout << sg::cli::render(r, fmt, ms);
    return r.ok ? 0 : 1;
  } catch (sg::reconstruction_failure const& e) {
    std::cerr << "reconstruction failure: " << e.what() << '\n';
    return 3;
  } catch (sg::error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
