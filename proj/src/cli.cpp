#include "doodlekit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "doodlekit/braid.hpp"
#include "doodlekit/error.hpp"
#include "doodlekit/free_group.hpp"
#include "doodlekit/gauss.hpp"
#include "doodlekit/moves.hpp"
#include "doodlekit/search.hpp"
#include "doodlekit/twin_word.hpp"

namespace doodlekit::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A word given inline with a strand count, or as a word file.
struct WordArg {
  int n = 0;
  std::string text;
  std::string file;

  TwinWord get(const std::string& n_flag) const {
    if (!file.empty()) return parse_word_file(read_file(file));
    if (n <= 0) throw UsageError(n_flag + " is required with an inline word");
    return parse_word(text, n);
  }
};

void add_word(CLI::App* cmd, WordArg& w) {
  cmd->add_option("--n", w.n, "strand count of the inline word");
  cmd->add_option("word", w.text, "word tokens, e.g. \"s1 r2\"");
  cmd->add_option("--file", w.file, "word file (n=<k> header, then the tokens)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"doodlekit: virtual twin words, Gauss data and Markov moves"};
  app.name("doodlekit");
  app.require_subcommand(1);

  WordArg word;
  auto* reduce = app.add_subcommand("reduce", "cancel adjacent equal letters");
  add_word(reduce, word);
  auto* pi_cmd = app.add_subcommand("pi", "permutation of the word, in cycle notation");
  add_word(pi_cmd, word);
  auto* components = app.add_subcommand("components", "number of components of the closure");
  add_word(components, word);
  auto* mu_cmd = app.add_subcommand("mu", "free-group automorphism of the word");
  add_word(mu_cmd, word);
  auto* closure = app.add_subcommand("closure-gauss", "Gauss data of the closure");
  add_word(closure, word);

  int relations_n = 0;
  std::string backend_text = "serial";
  auto* verify_rel = app.add_subcommand("verify-relations", "check every defining relation under mu");
  verify_rel->add_option("--n", relations_n, "strand count")->required();
  verify_rel->add_option("--backend", backend_text, "serial or openmp");

  int sep_n = 0;
  std::string sep_u, sep_v;
  auto* separates_cmd = app.add_subcommand("separates", "look for a mu witness that two words differ");
  separates_cmd->add_option("--n", sep_n, "strand count")->required();
  separates_cmd->add_option("u", sep_u, "first word")->required();
  separates_cmd->add_option("v", sep_v, "second word")->required();

  std::string gauss_a, gauss_b;
  auto* gauss_validate = app.add_subcommand("gauss-validate", "validate a Gauss data file");
  gauss_validate->add_option("file", gauss_a, "Gauss data file")->required();
  auto* gauss_iso = app.add_subcommand("gauss-iso", "find a crossing bijection between two Gauss data files");
  gauss_iso->add_option("first", gauss_a, "Gauss data file")->required();
  gauss_iso->add_option("second", gauss_b, "Gauss data file")->required();
  auto* braid_cmd = app.add_subcommand("braid", "braid Gauss data into a twin word file");
  braid_cmd->add_option("file", gauss_a, "Gauss data file")->required();

  WordArg left, right;
  SearchBudget budget;
  std::string cert_path;
  auto* equiv = app.add_subcommand("equiv", "search for a move trace between two words");
  equiv->add_option("--n1", left.n, "strand count of the first word");
  equiv->add_option("--n2", right.n, "strand count of the second word");
  equiv->add_option("u", left.text, "first word");
  equiv->add_option("v", right.text, "second word");
  equiv->add_option("--file1", left.file, "first word as a word file");
  equiv->add_option("--file2", right.file, "second word as a word file");
  equiv->add_option("--max-states", budget.max_states, "states explored before giving up")->capture_default_str();
  equiv->add_option("--max-len", budget.max_len, "longest word visited (0: inputs + 2, widened until the budget runs out)")->capture_default_str();
  equiv->add_option("--max-n", budget.max_n, "largest strand count visited (0: inputs + 1)")->capture_default_str();
  equiv->add_option("--backend", backend_text, "serial or openmp");
  equiv->add_option("--cert", cert_path, "also write the certificate to this file");

  std::string cert_file;
  auto* verify_cert = app.add_subcommand("verify-cert", "replay a certificate");
  verify_cert->add_option("file", cert_file, "certificate file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code::usage;
  }

  auto backend = [&] {
    const auto b = parse_backend(backend_text);
    if (!b) throw UsageError("unknown backend '" + backend_text + "'");
    return *b;
  };

  try {
    if (reduce->parsed()) {
      out << format_word(free_reduce(word.get("--n"))) << "\n";
    } else if (pi_cmd->parsed()) {
      out << format_cycles(pi(word.get("--n"))) << "\n";
    } else if (components->parsed()) {
      out << closure_components(word.get("--n")) << "\n";
    } else if (mu_cmd->parsed()) {
      out << format_endomorphism(mu(word.get("--n")));
    } else if (closure->parsed()) {
      out << format_gauss(closure_gauss(word.get("--n")));
    } else if (verify_rel->parsed()) {
      const auto report = verify_relations(relations_n, backend());
      for (const auto& c : report.checks) {
        if (!c.holds) {
          out << "fails: " << format_word(c.relation.lhs) << " = " << format_word(c.relation.rhs) << "\n";
        }
      }
      out << report.passed() << "/" << report.total() << " relations hold\n";
      return report.all_hold() ? exit_code::ok : exit_code::negative;
    } else if (separates_cmd->parsed()) {
      const auto w = separates(parse_word(sep_u, sep_n), parse_word(sep_v, sep_n));
      if (!w) {
        out << "not separated\n";
        return exit_code::negative;
      }
      out << "separated at x" << w->generator << ": " << format_free_word(w->left) << " vs "
          << format_free_word(w->right) << "\n";
    } else if (gauss_validate->parsed()) {
      const auto g = parse_gauss(read_file(gauss_a));
      out << "valid: " << g.crossings << " crossings, " << g.arcs.size() << " arcs, " << g.free_loops
          << " free loops\n";
    } else if (gauss_iso->parsed()) {
      const auto sigma = isomorphic(parse_gauss(read_file(gauss_a)), parse_gauss(read_file(gauss_b)));
      if (!sigma) {
        out << "not isomorphic\n";
        return exit_code::negative;
      }
      out << "isomorphic: " << format_bijection(*sigma) << "\n";
    } else if (braid_cmd->parsed()) {
      out << format_word_file(braid(parse_gauss(read_file(gauss_a))));
    } else if (equiv->parsed()) {
      const auto verdict = equivalent_closures(left.get("--n1"), right.get("--n2"), budget, backend());
      out << format_verdict(verdict);
      if (const auto* e = std::get_if<Equivalent>(&verdict)) {
        if (!cert_path.empty()) {
          std::ofstream f(cert_path, std::ios::binary);
          f << format_certificate(e->trace);
          if (!f) throw UsageError("cannot write " + cert_path);
        }
        return exit_code::ok;
      }
      return std::holds_alternative<Distinct>(verdict) ? exit_code::negative : exit_code::unknown;
    } else if (verify_cert->parsed()) {
      const auto trace = parse_certificate(read_file(cert_file));
      replay(trace);
      out << "certificate ok: " << trace.steps.size() << " steps from " << format_word_at(trace.start) << " to "
          << format_word_at(trace.end()) << "\n";
    }
  } catch (const UsageError& e) {
    err << "doodlekit: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const Error& e) {
    err << "doodlekit: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    return exit_code::data;
  }
  return exit_code::ok;
}

}  // namespace doodlekit::cli
