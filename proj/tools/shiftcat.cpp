// shiftcat command-line tool.
//
// Exit codes: 0 success, 1 a check suite failed, 2 empty shift,
// 3 non-integral zeta coefficient, 4 unreadable or malformed input,
// 5 any other error, 64 usage error. Reports go to stdout, diagnostics
// to stderr.

#include <cstdint>   // for uint64_t, int64_t
#include <cstdlib>   // for getenv
#include <iostream>  // for cout, cerr
#include <limits>    // for numeric_limits
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "CLI11.hpp"

#include "shiftcat/codes.hpp"
#include "shiftcat/flowops.hpp"
#include "shiftcat/io.hpp"
#include "shiftcat/karoubi.hpp"
#include "shiftcat/pseudowords.hpp"
#include "shiftcat/semigroups.hpp"
#include "shiftcat/shifts.hpp"
#include "shiftcat/suites.hpp"

#ifndef SHIFTCAT_DATA_DIR
#define SHIFTCAT_DATA_DIR "data"
#endif

namespace {
  using namespace shiftcat;

  enum Exit : int {
    ok             = 0,
    suite_failed   = 1,
    empty_shift    = 2,
    non_integral   = 3,
    bad_input      = 4,
    other_error    = 5,
    usage          = 64,
  };

  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  struct Options {
    std::string                  file, second, text, suite, manifest;
    std::string                  format = "json";
    std::string                  alpha  = "a";
    std::string                  diamond = "o";
    std::string                  data_dir;
    std::size_t                  order = 6;
    std::size_t                  bound = 3;
    std::size_t                  tests = 3;
    std::optional<std::uint64_t> seed;
    bool                         accept = false;
  };

  Json report(char const* command) {
    Json j;
    j["schema"]  = schema::report;
    j["command"] = command;
    return j;
  }

  Json big(BigInt const& x) {
    if (x >= std::numeric_limits<std::int64_t>::min()
        && x <= std::numeric_limits<std::int64_t>::max()) {
      return static_cast<std::int64_t>(x);
    }
    return x.str();
  }

  void require_format(Options const& o, std::vector<std::string> const& allowed) {
    for (auto const& f : allowed) {
      if (o.format == f) {
        return;
      }
    }
    throw UsageError("format '" + o.format + "' is not available here");
  }

  void emit(Json const& j) {
    std::cout << j.dump(2) << "\n";
  }

  Letter letter_of(Alphabet const& A, std::string const& name) {
    auto a = A.find(name);
    if (!a) {
      throw UsageError("'" + name + "' is not a letter of the shift");
    }
    return *a;
  }

  std::string data_dir(Options const& o) {
    if (!o.data_dir.empty()) {
      return o.data_dir;
    }
    if (char const* env = std::getenv("SHIFTCAT_DATA")) {
      return env;
    }
    return SHIFTCAT_DATA_DIR;
  }

  ////////////////////////////////////////////////////////////////////////

  int cmd_blocks(Options const& o) {
    require_format(o, {"json", "text"});
    auto const X = read_shift(o.file);
    auto const B = blocks(X, o.bound);
    if (o.format == "text") {
      for (auto const& w : B) {
        std::cout << X.alphabet().format(w) << "\n";
      }
      return ok;
    }
    Json j      = report("blocks");
    j["n"]      = o.bound;
    j["blocks"] = words_to_json(X.alphabet(), B);
    emit(j);
    return ok;
  }

  int cmd_member(Options const& o) {
    require_format(o, {"json"});
    auto const X = read_shift(o.file);
    auto const t = parse_term(X.alphabet(), o.text);
    Json       j = report("member");
    j["input"]   = format_term(X.alphabet(), t);
    if (t.is_word()) {
      j["block"] = is_block(X, t.as_word());
    } else {
      j["k"]       = o.bound;
      j["mirage"]  = mirage_membership(t, X, o.bound);
      j["closure"] = closure_membership(t, X);
    }
    emit(j);
    return ok;
  }

  int cmd_irreducible(Options const& o) {
    require_format(o, {"json"});
    Json j           = report("irreducible");
    j["irreducible"] = is_irreducible(read_shift(o.file));
    emit(j);
    return ok;
  }

  int cmd_periodic(Options const& o) {
    require_format(o, {"json"});
    auto const c = periodic_counts(read_shift(o.file), o.order);
    Json       j = report("periodic");
    j["order"]   = o.order;
    j["p"]       = c.p;
    j["q"]       = c.q;
    emit(j);
    return ok;
  }

  int cmd_zeta(Options const& o) {
    require_format(o, {"json", "text"});
    auto const z = zeta(read_shift(o.file), o.order);
    if (o.format == "text") {
      for (auto const& c : z.coefficients) {
        std::cout << c << "\n";
      }
      return ok;
    }
    Json j     = report("zeta");
    j["order"] = o.order;
    j["p"]     = z.p;
    j["q"]     = z.q;
    Json coeff = Json::array();
    for (auto const& c : z.coefficients) {
      coeff.push_back(big(c));
    }
    j["coefficients"] = coeff;
    emit(j);
    return ok;
  }

  int cmd_syntactic(Options const& o) {
    require_format(o, {"json", "gap"});
    auto const syn = syntactic_semigroup(read_shift(o.file));
    if (o.format == "gap") {
      std::cout << to_gap(syn.S);
      return ok;
    }
    Json j         = report("syntactic");
    j["semigroup"] = semigroup_to_json(syn.S, syn.accept);
    emit(j);
    return ok;
  }

  int cmd_green(Options const& o) {
    require_format(o, {"json"});
    Json j     = report("green");
    j["green"] = green_to_json(syntactic_semigroup(read_shift(o.file)).S);
    emit(j);
    return ok;
  }

  LabeledPoset lu_poset(Options const& o, SyntacticSemigroup const& syn) {
    return o.accept ? lu_labeled_poset(syn.S, syn.accept)
                    : lu_labeled_poset(syn.S);
  }

  int cmd_karoubi(Options const& o) {
    require_format(o, {"json", "dot"});
    auto const syn = syntactic_semigroup(read_shift(o.file));
    auto const P   = lu_poset(o, syn);
    if (o.format == "dot") {
      std::cout << to_dot(P);
      return ok;
    }
    KaroubiCategory const K(syn.S);
    auto const            census = iso_class_census(K);
    auto const            cmp    = karoubi_vs_lu_comparison(syn.S, {});
    Json                  j      = report("karoubi");
    j["semigroup"] = {{"size", syn.S.size()},
                      {"idempotents", syn.S.idempotents().size()},
                      {"accept", syn.accept}};
    j["green"]     = green_to_json(syn.S);
    j["objects"]   = K.objects().size();
    j["census"]    = census_to_json(census);
    j["karoubi_vs_lu"] = to_string(cmp.verdict);
    j["lu_poset"]  = poset_to_json(P, syn.S);
    j["lu_dot"]    = to_dot(P);
    emit(j);
    return ok;
  }

  int cmd_lu_poset(Options const& o) {
    require_format(o, {"json", "dot"});
    auto const syn = syntactic_semigroup(read_shift(o.file));
    auto const P   = lu_poset(o, syn);
    if (o.format == "dot") {
      std::cout << to_dot(P);
      return ok;
    }
    Json j      = report("lu-poset");
    j["accept"] = o.accept;
    j["poset"]  = poset_to_json(P, syn.S);
    emit(j);
    return ok;
  }

  int cmd_code_apply(Options const& o) {
    require_format(o, {"json", "text"});
    auto const Phi = read_block_map(o.file);
    auto const out = word_code(Phi, Phi.source().parse(o.text));
    if (o.format == "text") {
      std::cout << Phi.target().format(out) << "\n";
      return ok;
    }
    Json j      = report("code apply");
    j["input"]  = o.text;
    j["output"] = word_to_json(Phi.target(), out);
    emit(j);
    return ok;
  }

  int cmd_code_compose(Options const& o) {
    require_format(o, {"json"});
    auto const Phi = centralize(read_block_map(o.file));
    auto const Psi = centralize(read_block_map(o.second));
    emit(block_map_to_json(compose(Phi, Psi).inner()));
    return ok;
  }

  int cmd_code_centralize(Options const& o) {
    require_format(o, {"json"});
    emit(block_map_to_json(centralize(read_block_map(o.file)).inner()));
    return ok;
  }

  int cmd_term_eval(Options const& o) {
    require_format(o, {"json"});
    auto const syn = syntactic_semigroup(read_shift(o.file));
    auto const t   = parse_term(syn.S.alphabet(), o.text);
    auto const x   = eval(t, syn.S);
    Json       j   = report("term eval");
    j["term"]       = format_term(syn.S.alphabet(), canonical(t));
    j["element"]    = x;
    j["witness"]    = word_to_json(syn.S.alphabet(), syn.S.witness(x));
    j["idempotent"] = syn.S.is_idempotent(x);
    j["closure"]    = syn.accepts(x);
    emit(j);
    return ok;
  }

  int cmd_term_factors(Options const& o) {
    require_format(o, {"json", "text"});
    auto const X = read_shift(o.file);
    auto const F = term_factors(parse_term(X.alphabet(), o.text), o.bound);
    if (o.format == "text") {
      for (auto const& w : F) {
        std::cout << X.alphabet().format(w) << "\n";
      }
      return ok;
    }
    Json j       = report("term factors");
    j["k"]       = o.bound;
    j["factors"] = words_to_json(X.alphabet(), F);
    emit(j);
    return ok;
  }

  int cmd_term_code(Options const& o) {
    require_format(o, {"json", "text"});
    auto const Phi = read_block_map(o.file);
    auto const out
        = format_term(Phi.target(), term_block_code(Phi, parse_term(Phi.source(), o.text)));
    if (o.format == "text") {
      std::cout << out << "\n";
      return ok;
    }
    Json j      = report("term code");
    j["input"]  = o.text;
    j["output"] = out;
    emit(j);
    return ok;
  }

  ExpansionContext context(Options const& o) {
    auto const X = read_shift(o.file);
    return expand_shift(X, letter_of(X.alphabet(), o.alpha), o.diamond);
  }

  int cmd_expand(Options const& o) {
    require_format(o, {"json", "dot"});
    auto const cx = context(o);
    if (o.format == "dot") {
      std::cout << to_dot(cx.target);
      return ok;
    }
    Json j       = report("expand");
    j["alpha"]   = o.alpha;
    j["diamond"] = o.diamond;
    j["shift"]   = shift_to_json(cx.target);
    emit(j);
    return ok;
  }

  int cmd_classify(Options const& o) {
    require_format(o, {"json", "text"});
    auto const cx   = context(o);
    auto const type = classify_type(parse_term(cx.B(), o.text), cx);
    if (o.format == "text") {
      std::cout << to_string(type) << "\n";
      return ok;
    }
    Json j    = report("classify");
    j["term"] = o.text;
    j["type"] = to_string(type);
    emit(j);
    return ok;
  }

  int cmd_flowcheck(Options const& o) {
    require_format(o, {"json"});
    auto const cx    = context(o);
    auto const tests = default_tests(cx.target, *o.seed, o.tests);
    auto const arrows = suites::mirage_arrows(
        cx.target, suites::periodic_idempotents(cx.target, o.bound));
    Json log    = Json::array();
    bool all_ok = true;
    for (auto const& a : arrows) {
      auto const v = verify_naturality(a, cx, tests);
      all_ok       = all_ok && v.commutes;
      Json entry;
      entry["arrow"]    = suites::format_arrow(cx.B(), a);
      entry["case"]     = v.proof_case;
      entry["commutes"] = v.commutes;
      if (!v.commutes) {
        entry["distinguished_by"] = v.distinguished_by;
      }
      log.push_back(entry);
    }
    Json j      = report("flowcheck");
    j["seed"]   = *o.seed;
    j["tests"]  = tests.size();
    j["arrows"] = log;
    j["pass"]   = all_ok;
    emit(j);
    return all_ok ? ok : suite_failed;
  }

  int cmd_check(Options const& o) {
    require_format(o, {"json", "text"});
    std::string const dir      = data_dir(o);
    std::string const manifest = o.manifest.empty() ? dir + "/suites.json" : o.manifest;
    auto const        entries  = read_manifest(manifest);
    std::vector<SuiteEntry> chosen;
    for (auto const& e : entries) {
      if (o.suite == "all" || e.name == o.suite) {
        chosen.push_back(e);
      }
    }
    if (chosen.empty()) {
      throw UsageError("unknown suite '" + o.suite + "'");
    }
    for (auto const& e : chosen) {
      if (e.params.value("randomized", false) && !o.seed) {
        throw UsageError("suite '" + e.name + "' is randomized and needs --seed");
      }
    }
    bool all_ok  = true;
    Json results = Json::array();
    for (auto const& e : chosen) {
      auto const r = run_suite(e, dir, o.seed.value_or(0));
      all_ok       = all_ok && r.passed;
      if (o.format == "text") {
        std::cout << (r.passed ? "PASS " : "FAIL ") << e.name << " ("
                  << r.checks << " checks)\n";
        for (auto const& line : r.log) {
          std::cout << "  " << line << "\n";
        }
        if (!r.passed) {
          std::cout << "  counterexample: " << r.counterexample << "\n";
        }
        continue;
      }
      Json s;
      s["name"]      = e.name;
      s["criterion"] = e.criterion;
      s["pass"]      = r.passed;
      s["checks"]    = r.checks;
      s["log"]       = r.log;
      if (!r.passed) {
        s["counterexample"] = r.counterexample;
      }
      if (!r.archive.empty()) {
        s["archive"] = r.archive;
      }
      results.push_back(s);
    }
    if (o.format == "json") {
      Json j      = report("check");
      j["seed"]   = o.seed ? Json(*o.seed) : Json(nullptr);
      j["suites"] = results;
      j["pass"]   = all_ok;
      emit(j);
    }
    return all_ok ? ok : suite_failed;
  }

  int exit_code(ErrorKind kind) {
    switch (kind) {
      case ErrorKind::empty_shift:
        return empty_shift;
      case ErrorKind::non_integral_coefficient:
        return non_integral;
      case ErrorKind::parse:
      case ErrorKind::alphabet_mismatch:
        return bad_input;
      default:
        return other_error;
    }
  }
}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic dynamics, block codes and Karoubi envelopes"};
  app.require_subcommand(1);
  Options o;
  int (*action)(Options const&) = nullptr;

  auto shift_file = [&](CLI::App* c) {
    c->add_option("shift", o.file, "shift presentation (JSON)")->required();
  };
  auto format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json, text, dot or gap");
  };
  auto command = [&](CLI::App* parent, char const* name, char const* help,
                     int (*f)(Options const&)) {
    auto* c = parent->add_subcommand(name, help);
    c->callback([&action, f] { action = f; });
    format(c);
    return c;
  };

  auto* c = command(&app, "blocks", "blocks of a given length", cmd_blocks);
  shift_file(c);
  c->add_option("-n,--bound", o.bound, "block length");

  c = command(&app, "member", "block, mirage and closure membership", cmd_member);
  shift_file(c);
  c->add_option("term", o.text, "word or omega-term")->required();
  c->add_option("-k,--bound", o.bound, "factor length for the mirage");

  c = command(&app, "irreducible", "irreducibility", cmd_irreducible);
  shift_file(c);

  c = command(&app, "periodic", "periodic point counts p and q", cmd_periodic);
  shift_file(c);
  c->add_option("--order", o.order, "largest period");

  c = command(&app, "zeta", "zeta function coefficients", cmd_zeta);
  shift_file(c);
  c->add_option("--order", o.order, "truncation order");

  c = command(&app, "syntactic", "syntactic semigroup", cmd_syntactic);
  shift_file(c);

  c = command(&app, "green", "Green structure of the syntactic semigroup", cmd_green);
  shift_file(c);

  c = command(&app, "karoubi", "Karoubi envelope report", cmd_karoubi);
  shift_file(c);
  c->add_flag("--accept", o.accept, "local units over L(X) only");

  c = command(&app, "lu-poset", "labeled poset of local-unit J-classes", cmd_lu_poset);
  shift_file(c);
  c->add_flag("--accept", o.accept, "local units over L(X) only");

  auto* code = app.add_subcommand("code", "block maps");
  code->require_subcommand(1);
  c = command(code, "apply", "apply a block map to a word", cmd_code_apply);
  c->add_option("map", o.file, "block map (JSON)")->required();
  c->add_option("word", o.text, "word")->required();
  c = command(code, "compose", "central block map of the composite", cmd_code_compose);
  c->add_option("first", o.file, "block map applied first")->required();
  c->add_option("second", o.second, "block map applied second")->required();
  c = command(code, "centralize", "central block map of the same code", cmd_code_centralize);
  c->add_option("map", o.file, "block map (JSON)")->required();

  auto* term = app.add_subcommand("term", "omega-terms");
  term->require_subcommand(1);
  c = command(term, "eval", "value in the syntactic semigroup", cmd_term_eval);
  shift_file(c);
  c->add_option("term", o.text, "omega-term")->required();
  c = command(term, "factors", "finite factors of bounded length", cmd_term_factors);
  shift_file(c);
  c->add_option("term", o.text, "omega-term")->required();
  c->add_option("-k,--bound", o.bound, "factor length");
  c = command(term, "code", "image under a block map", cmd_term_code);
  c->add_option("map", o.file, "block map (JSON)")->required();
  c->add_option("term", o.text, "omega-term")->required();

  auto alpha = [&](CLI::App* s) {
    s->add_option("--alpha", o.alpha, "expanded letter");
    s->add_option("--diamond", o.diamond, "name of the new letter");
  };
  c = command(&app, "expand", "symbol expansion", cmd_expand);
  shift_file(c);
  alpha(c);
  c = command(&app, "classify", "type of a term of the expanded shift", cmd_classify);
  shift_file(c);
  c->add_option("term", o.text, "term over the expanded alphabet")->required();
  alpha(c);
  c = command(&app, "flowcheck", "naturality of eta on sampled arrows", cmd_flowcheck);
  shift_file(c);
  alpha(c);
  c->add_option("--seed", o.seed, "seed for the test semigroups")->required();
  c->add_option("--tests", o.tests, "number of random test semigroups");
  c->add_option("--bound", o.bound, "length of the primitive blocks");

  c = command(&app, "check", "run a named suite from the manifest", cmd_check);
  c->add_option("suite", o.suite, "suite name, or all")->required();
  c->add_option("--seed", o.seed, "seed (required by randomized suites)");
  c->add_option("--manifest", o.manifest, "suite manifest");
  c->add_option("--data", o.data_dir, "data directory");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return usage;
  }

  try {
    return action(o);
  } catch (UsageError const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return usage;
  } catch (Error const& e) {
    std::cerr << e.what() << "\n";
    return exit_code(e.kind());
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return other_error;
  }
}
