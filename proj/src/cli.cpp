#include "torelli/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <ostream>

#include "json_util.hpp"
#include "torelli/braid.hpp"
#include "torelli/burau.hpp"
#include "torelli/epsilon.hpp"
#include "torelli/homology.hpp"
#include "torelli/word.hpp"

namespace torelli::cli {

namespace {

using detail::json_quote;

// Display alias for the identity word in text mode; never valid as input.
std::string display(const Word& w) {
  return w.is_identity() ? "<id>" : w.str();
}

std::string display(const BraidWord& w) {
  return w.is_identity() ? "<id>" : w.str();
}

struct Config {
  int genus = 0;
  int strands = 0;
  bool json = false;
  int at = -1;
  int max_len = 0;
  int radius = 0;
  int beta = 0;
  std::string word_text;
  std::string braid_text;
};

int rank_of(const Config& cfg) { return 2 * cfg.genus + 1; }

int strands_of(const Config& cfg) {
  return cfg.strands > 0 ? cfg.strands : 2 * cfg.genus + 1;
}

void emit(std::ostream& out, const Config& cfg, const std::string& command,
          const std::string& inputs_json, const std::string& result_json,
          const std::string& text) {
  if (cfg.json) {
    out << "{\"inputs\":{\"command\":" << json_quote(command)
        << (inputs_json.empty() ? "" : ",") << inputs_json
        << "},\"result\":" << result_json << "}\n";
  } else {
    out << text << '\n';
  }
}

std::string word_inputs(const Config& cfg) {
  return "\"g\":" + std::to_string(cfg.genus) +
         ",\"rank\":" + std::to_string(rank_of(cfg)) +
         ",\"word\":" + json_quote(cfg.word_text);
}

std::string braid_inputs(const Config& cfg) {
  return "\"n\":" + std::to_string(strands_of(cfg)) +
         ",\"braid\":" + json_quote(cfg.braid_text);
}

std::string word_list_json(const std::vector<Word>& ws) {
  std::string out = "[";
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i > 0) out += ',';
    out += json_quote(ws[i].str());
  }
  out += ']';
  return out;
}

// --- word subcommands ----------------------------------------------------

void run_word_reduce(std::ostream& out, const Config& cfg) {
  Word w = Word::parse(cfg.word_text, rank_of(cfg));
  emit(out, cfg, "word reduce", word_inputs(cfg), json_quote(w.str()),
       display(w));
}

void run_word_eps(std::ostream& out, const Config& cfg) {
  Word w = Word::parse(cfg.word_text, rank_of(cfg));
  BalancedVector v = epsilon(w);
  emit(out, cfg, "word eps", word_inputs(cfg), v.json(), v.str());
}

void run_word_split(std::ostream& out, const Config& cfg) {
  Word w = Word::parse(cfg.word_text, rank_of(cfg));
  SplitResult s = split(w);
  emit(out, cfg, "word split", word_inputs(cfg),
       "{\"k\":" + json_quote(s.kernel_part.str()) +
           ",\"v\":" + s.image.json() + '}',
       "k = " + display(s.kernel_part) + "\nv = " + s.image.str());
}

void run_word_kernel(std::ostream& out, const Config& cfg) {
  Word w = Word::parse(cfg.word_text, rank_of(cfg));
  bool in = in_ker_epsilon(w);
  emit(out, cfg, "word kernel", word_inputs(cfg), in ? "true" : "false",
       in ? "true" : "false");
}

void run_word_factor(std::ostream& out, const Config& cfg) {
  Word w = Word::parse(cfg.word_text, rank_of(cfg));
  Factorization f = factor_kernel_word(w);
  bool ok = verify_factorization(w, f);
  std::string text;
  for (const FactorEntry& e : f) {
    text += "conj=" + display(e.conjugator) + " gen=" + e.generator.str() +
            " exp=" + (e.exponent > 0 ? std::string("+1") : std::string("-1")) +
            '\n';
  }
  text += "verified: ";
  text += ok ? "true" : "false";
  emit(out, cfg, "word factor", word_inputs(cfg),
       "{\"factorization\":" + factorization_json(f) +
           ",\"verified\":" + (ok ? "true" : "false") + '}',
       text);
}

void run_word_schreier(std::ostream& out, const Config& cfg) {
  std::vector<Word> gens = schreier_generators(cfg.genus, cfg.radius);
  std::string text;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) text += '\n';
    text += gens[i].str();
  }
  if (gens.empty()) text = "(none)";
  emit(out, cfg, "word schreier",
       "\"g\":" + std::to_string(cfg.genus) +
           ",\"radius\":" + std::to_string(cfg.radius),
       word_list_json(gens), text);
}

void run_word_enum(std::ostream& out, const Config& cfg) {
  std::vector<Word> words = enumerate_even_words(rank_of(cfg), cfg.max_len);
  std::string text;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) text += '\n';
    text += display(words[i]);
  }
  emit(out, cfg, "word enum",
       "\"g\":" + std::to_string(cfg.genus) +
           ",\"rank\":" + std::to_string(rank_of(cfg)) +
           ",\"max_len\":" + std::to_string(cfg.max_len),
       word_list_json(words), text);
}

// --- braid subcommands ---------------------------------------------------

void run_braid_burau(std::ostream& out, const Config& cfg) {
  BraidWord w = BraidWord::parse(cfg.braid_text, strands_of(cfg));
  LaurentMatrix m = burau(w);
  emit(out, cfg, "braid burau", braid_inputs(cfg), m.json(), m.str());
}

void run_braid_eval(std::ostream& out, const Config& cfg) {
  BraidWord w = BraidWord::parse(cfg.braid_text, strands_of(cfg));
  IntMatrix m = burau_at(w, cfg.at);
  emit(out, cfg, "braid eval",
       braid_inputs(cfg) + ",\"at\":" + std::to_string(cfg.at), m.json(),
       m.str());
}

void run_braid_perm(std::ostream& out, const Config& cfg) {
  BraidWord w = BraidWord::parse(cfg.braid_text, strands_of(cfg));
  Permutation p = permutation(w);
  std::string images = "[";
  for (int x = 1; x <= p.degree(); ++x) {
    if (x > 1) images += ',';
    images += std::to_string(p.image_of(x));
  }
  images += ']';
  emit(out, cfg, "braid perm", braid_inputs(cfg),
       "{\"images\":" + images +
           ",\"pure\":" + (p.is_identity() ? "true" : "false") + '}',
       p.str() + "\npure: " + (p.is_identity() ? "true" : "false"));
}

void run_braid_kernel(std::ostream& out, const Config& cfg) {
  BraidWord w = BraidWord::parse(cfg.braid_text, strands_of(cfg));
  bool pure = is_pure(w);
  std::string detail;
  bool in = false;
  if (!pure) {
    detail = "not pure";
  } else {
    IntMatrix m = burau_at(w, -1);
    if (m.is_identity()) {
      in = true;
    } else if (m == -IntMatrix::identity(m.dim())) {
      detail = "image = -I";
    } else {
      detail = "image != I";
    }
  }
  std::string text = in ? "true" : "false (" + detail + ')';
  emit(out, cfg, "braid kernel", braid_inputs(cfg),
       std::string("{\"in_kernel\":") + (in ? "true" : "false") +
           ",\"detail\":" + json_quote(detail) + '}',
       text);
}

void run_braid_center(std::ostream& out, const Config& cfg) {
  BraidWord w = center_word(strands_of(cfg));
  emit(out, cfg, "braid center", "\"n\":" + std::to_string(strands_of(cfg)),
       json_quote(w.str()), display(w));
}

// --- action subcommands --------------------------------------------------

void run_action_matrix(std::ostream& out, const Config& cfg) {
  Word w = Word::parse(cfg.word_text, rank_of(cfg));
  IntMatrix m = action_matrix(w);
  if (cfg.beta > 0) {
    BetaVector img = apply_action(m, BetaVector::basis(cfg.genus, cfg.beta));
    emit(out, cfg, "action matrix",
         word_inputs(cfg) + ",\"beta\":" + std::to_string(cfg.beta),
         img.json(), img.str());
  } else {
    emit(out, cfg, "action matrix", word_inputs(cfg), m.json(), m.str());
  }
}

void run_action_fix(std::ostream& out, const Config& cfg) {
  Word w = Word::parse(cfg.word_text, rank_of(cfg));
  bool fixes = in_torelli_kernel(w);
  emit(out, cfg, "action fix", word_inputs(cfg), fixes ? "true" : "false",
       fixes ? "true" : "false");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Config cfg;
  std::function<void(std::ostream&, const Config&)> action;

  CLI::App app{"Exact word-level algebra for hyperelliptic Torelli kernels"};
  app.require_subcommand(1);

  auto add_genus = [&](CLI::App* cmd) {
    cmd->add_option("-g,--genus", cfg.genus, "genus (rank = 2g+1)")
        ->required()
        ->check(CLI::PositiveNumber);
  };
  auto add_word_arg = [&](CLI::App* cmd) {
    cmd->add_option("word", cfg.word_text, "word in tokens z<k> / z<k>^-1")
        ->required();
  };
  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", cfg.json, "emit a single JSON object");
  };
  auto add_strands = [&](CLI::App* cmd) {
    cmd->add_option("-n,--strands", cfg.strands,
                    "strand count (overrides -g; default 2g+1)")
        ->check(CLI::Range(2, 1 << 20));
    cmd->add_option("-g,--genus", cfg.genus, "genus (n = 2g+1 unless -n)")
        ->check(CLI::PositiveNumber);
  };
  auto add_braid_arg = [&](CLI::App* cmd) {
    cmd->add_option("braid", cfg.braid_text,
                    "braid word in tokens s<k> / s<k>^-1")
        ->required();
  };
  auto set = [&](CLI::App* cmd, void (*fn)(std::ostream&, const Config&)) {
    cmd->callback([&action, fn]() { action = fn; });
  };

  CLI::App* word = app.add_subcommand("word", "free-group word operations");
  word->require_subcommand(1);
  for (auto [name, help, fn] :
       {std::tuple{"reduce", "freely reduce a word", &run_word_reduce},
        std::tuple{"eps", "epsilon image of an even word", &run_word_eps},
        std::tuple{"split", "kernel/section decomposition", &run_word_split},
        std::tuple{"kernel", "test membership in ker epsilon",
                   &run_word_kernel},
        std::tuple{"factor", "factor a kernel word into normal generators",
                   &run_word_factor}}) {
    CLI::App* cmd = word->add_subcommand(name, help);
    add_genus(cmd);
    add_word_arg(cmd);
    add_json(cmd);
    set(cmd, fn);
  }
  {
    CLI::App* cmd = word->add_subcommand(
        "schreier", "Schreier generators of ker epsilon up to a radius");
    add_genus(cmd);
    cmd->add_option("--radius", cfg.radius, "transversal height/2 bound")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_json(cmd);
    set(cmd, &run_word_schreier);
  }
  {
    CLI::App* cmd = word->add_subcommand(
        "enum", "enumerate even words in length-lexicographic order");
    add_genus(cmd);
    cmd->add_option("--max-len", cfg.max_len, "maximum word length")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_json(cmd);
    set(cmd, &run_word_enum);
  }

  CLI::App* braid = app.add_subcommand("braid", "braid word operations");
  braid->require_subcommand(1);
  for (auto [name, help, fn] :
       {std::tuple{"burau", "reduced Burau matrix", &run_braid_burau},
        std::tuple{"perm", "induced strand permutation", &run_braid_perm},
        std::tuple{"kernel", "membership in the Burau kernel K_n",
                   &run_braid_kernel}}) {
    CLI::App* cmd = braid->add_subcommand(name, help);
    add_strands(cmd);
    add_braid_arg(cmd);
    add_json(cmd);
    set(cmd, fn);
  }
  {
    CLI::App* cmd =
        braid->add_subcommand("eval", "Burau matrix specialized at t0");
    add_strands(cmd);
    add_braid_arg(cmd);
    cmd->add_option("--at", cfg.at, "specialization point (default -1)");
    add_json(cmd);
    set(cmd, &run_braid_eval);
  }
  {
    CLI::App* cmd = braid->add_subcommand("center", "full twist word");
    add_strands(cmd);
    add_json(cmd);
    set(cmd, &run_braid_center);
  }

  CLI::App* act =
      app.add_subcommand("action", "action on the relative arc classes");
  act->require_subcommand(1);
  {
    CLI::App* cmd = act->add_subcommand("matrix", "action matrix of a word");
    add_genus(cmd);
    add_word_arg(cmd);
    cmd->add_option("--beta", cfg.beta, "print only the image of b<k>")
        ->check(CLI::PositiveNumber);
    add_json(cmd);
    set(cmd, &run_action_matrix);
  }
  {
    CLI::App* cmd = act->add_subcommand("fix", "does the word fix b_1?");
    add_genus(cmd);
    add_word_arg(cmd);
    add_json(cmd);
    set(cmd, &run_action_fix);
  }

  std::vector<const char*> argv;
  argv.push_back("torelli");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help
    err << e.what() << '\n';
    return 2;
  }

  // Braid subcommands need a strand count from somewhere.
  const bool braid_used = braid->parsed();
  if (braid_used && cfg.strands == 0 && cfg.genus == 0) {
    err << "braid commands require -n or -g\n";
    return 2;
  }

  try {
    action(out, cfg);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace torelli::cli
