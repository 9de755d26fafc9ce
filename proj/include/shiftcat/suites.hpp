// shiftcat - symbolic dynamics, block codes and Karoubi envelopes
//
// Named property suites run by `shiftcat check`. The manifest
// (data/suites.json) lists each suite with its parameters; the runners
// here interpret them. Shift names in parameters refer to
// <data>/shifts/<name>.json.

#ifndef SHIFTCAT_SUITES_HPP_
#define SHIFTCAT_SUITES_HPP_

#include <cstddef>     // for size_t
#include <cstdint>     // for uint64_t
#include <functional>  // for function
#include <map>         // for map
#include <random>      // for mt19937_64
#include <set>         // for set
#include <string>      // for string
#include <vector>      // for vector

#include "codes.hpp"
#include "flowops.hpp"
#include "io.hpp"
#include "karoubi.hpp"
#include "pseudowords.hpp"
#include "semigroups.hpp"
#include "shifts.hpp"
#include "words.hpp"

namespace shiftcat {

  struct SuiteContext {
    std::string   data_dir;
    std::uint64_t seed = 0;
    Json          params = Json::object();

    [[nodiscard]] ShiftPresentation shift(std::string const& name) const {
      return read_shift(data_dir + "/shifts/" + name + ".json");
    }
    template <typename T>
    [[nodiscard]] T get(char const* key, T fallback) const {
      return params.contains(key) ? params.at(key).get<T>() : fallback;
    }
  };

  struct SuiteResult {
    bool                     passed = true;
    std::size_t              checks = 0;
    std::vector<std::string> log;
    std::string              counterexample;
    Json                     archive = Json::object();

    // Records one check; the first failure keeps its description.
    bool check(bool ok, std::string const& what) {
      ++checks;
      if (!ok && passed) {
        passed         = false;
        counterexample = what;
      }
      return ok;
    }
  };

  struct SuiteEntry {
    std::string name;
    std::string criterion;
    std::string description;
    Json        params = Json::object();
  };

  inline std::vector<SuiteEntry> read_manifest(std::string const& path) {
    auto const j = read_json_file(path);
    return detail::guard_json([&] {
      std::vector<SuiteEntry> result;
      for (auto const& s : detail::field(j, "suites")) {
        result.push_back({detail::field(s, "name").get<std::string>(),
                          s.value("criterion", ""),
                          s.value("description", ""),
                          s.value("params", Json::object())});
      }
      return result;
    });
  }

  namespace suites {

    inline TermArrow term_arrow(Alphabet const& A, Json const& triple) {
      return {parse_term(A, triple.at(0).get<std::string>()),
              parse_term(A, triple.at(1).get<std::string>()),
              parse_term(A, triple.at(2).get<std::string>())};
    }

    inline Word random_word(std::mt19937_64& rng,
                            std::size_t      alphabet_size,
                            std::size_t      min_len,
                            std::size_t      max_len) {
      std::uniform_int_distribution<std::size_t> len(min_len, max_len);
      std::uniform_int_distribution<std::size_t> letter(0, alphabet_size - 1);
      Word w(len(rng));
      for (auto& a : w) {
        a = static_cast<Letter>(letter(rng));
      }
      return w;
    }

    inline BlockMap random_map(std::mt19937_64& rng,
                               Alphabet const&  A,
                               Alphabet const&  B,
                               std::size_t      m,
                               std::size_t      n) {
      return BlockMap::from_function(A, B, m, n, [&](Word const&) {
        return static_cast<Letter>(rng() % B.size());
      });
    }

    // Idempotents u^omega for primitive periodic words u of length <= n.
    inline std::vector<OmegaTerm> periodic_idempotents(ShiftPresentation const& X,
                                                       std::size_t              n) {
      std::vector<OmegaTerm> result;
      for (auto const& u : blocks(X, n)) {
        if (is_primitive(u) && is_periodic_point(X, u)) {
          result.push_back(OmegaTerm::power(u));
        }
      }
      return result;
    }

    // Arrows (e, e x f, f) between the idempotents with x a block of
    // length <= 2 (or empty), kept when the middle lies in the mirage.
    inline std::vector<TermArrow> mirage_arrows(ShiftPresentation const&      X,
                                                std::vector<OmegaTerm> const& idem) {
      auto middles = blocks(X, 2);
      middles.insert(Word{});
      std::vector<TermArrow> arrows;
      for (auto const& e : idem) {
        for (auto const& f : idem) {
          for (auto const& x : middles) {
            OmegaTerm u = canonical(concat(concat(e, OmegaTerm(x)), f));
            if (mirage_membership(u, X, 8)) {
              arrows.push_back({e, u, f});
            }
          }
        }
      }
      return arrows;
    }

    inline std::string format_arrow(Alphabet const& A, TermArrow const& a) {
      return "(" + format_term(A, a.e) + ", " + format_term(A, a.u) + ", "
             + format_term(A, a.f) + ")";
    }

    ////////////////////////////////////////////////////////////////////////

    inline SuiteResult closure_example(SuiteContext const& ctx) {
      SuiteResult r;
      auto const  X   = ctx.shift(ctx.get<std::string>("shift", "four-letter"));
      auto const  syn = syntactic_semigroup(X);
      for (auto const& t : ctx.params.at("members")) {
        auto s = t.get<std::string>();
        r.check(closure_membership(parse_term(X.alphabet(), s), syn),
                s + " should lie in the closure");
        r.log.push_back("member " + s);
      }
      for (auto const& t : ctx.params.at("non_members")) {
        auto s = t.get<std::string>();
        r.check(!closure_membership(parse_term(X.alphabet(), s), syn),
                s + " should not lie in the closure");
        r.log.push_back("non-member " + s);
      }
      return r;
    }

    inline SuiteResult shadow_product(SuiteContext const& ctx) {
      SuiteResult r;
      auto const  X   = ctx.shift(ctx.get<std::string>("shift", "even"));
      auto const& A   = X.alphabet();
      auto const  syn = syntactic_semigroup(X);
      auto const  s   = term_arrow(A, ctx.params.at("s"));
      auto const  t   = term_arrow(A, ctx.params.at("t"));
      r.check(closure_membership(s.u, syn), "middle of s outside the closure");
      r.check(closure_membership(t.u, syn), "middle of t outside the closure");
      auto const st = canonical(compose(s, t));
      r.check(!closure_membership(st.u, syn),
              "middle of st " + format_term(A, st.u) + " inside the closure");
      r.log.push_back("st = " + format_arrow(A, st));
      return r;
    }

    inline SuiteResult higher_block_left_inverse(SuiteContext const& ctx) {
      SuiteResult     r;
      std::mt19937_64 rng(ctx.seed);
      Alphabet const  A = Alphabet::from_chars(ctx.get<std::string>("alphabet", "ab"));
      auto const samples = ctx.get<std::size_t>("samples", 10000);
      auto const max_len = ctx.get<std::size_t>("max_length", 20);
      for (auto N : ctx.params.at("orders").get<std::vector<std::size_t>>()) {
        auto const U = higher_block_map(A, N);
        auto const l = lambda_first_letter(A, N);
        for (std::size_t i = 0; i < samples && r.passed; ++i) {
          Word u = random_word(rng, A.size(), 0, max_len);
          Word v = random_word(rng, A.size(), N - 1, N - 1);
          r.check(word_code(l, word_code(U, concat(u, v))) == u,
                  "N = " + std::to_string(N) + ", u = " + A.format(u)
                      + ", v = " + A.format(v));
        }
        r.log.push_back("N = " + std::to_string(N) + ": "
                        + std::to_string(samples) + " pairs");
      }
      return r;
    }

    inline SuiteResult word_code_identities(SuiteContext const& ctx) {
      SuiteResult     r;
      std::mt19937_64 rng(ctx.seed);
      Alphabet const  A = Alphabet::from_chars("ab");
      Alphabet const  B = Alphabet::from_chars("abc");
      auto const pairs   = ctx.get<std::size_t>("pairs", 5);
      auto const samples = ctx.get<std::size_t>("samples", 10000);
      auto const max_len = ctx.get<std::size_t>("max_length", 16);
      std::uniform_int_distribution<std::size_t> wing(0, 2);
      for (std::size_t p = 0; p < pairs && r.passed; ++p) {
        std::size_t const k = wing(rng), l = wing(rng);
        auto const Phi = centralize(random_map(rng, A, B, k, k));
        auto const Psi = centralize(random_map(rng, B, A, l, l));
        auto const Lam = compose(Phi, Psi);
        r.check(Lam.wing() == k + l, "wing of the composite");
        std::string const tag = "pair " + std::to_string(p) + " (k = "
                                + std::to_string(k) + ", l = "
                                + std::to_string(l) + ")";
        for (std::size_t i = 0; i < samples && r.passed; ++i) {
          Word u  = random_word(rng, A.size(), 0, max_len);
          Word v  = random_word(rng, A.size(), 0, max_len);
          Word uv = concat(u, v);
          r.check(word_code(Lam, u) == word_code(Psi, word_code(Phi, u)),
                  tag + ": composition fails on " + A.format(u));
          for (auto const* F : {&Phi, &Lam}) {
            std::size_t const N = F->window(), w = F->wing();
            Word const        c = word_code(*F, uv);
            r.check(c == concat(word_code(*F, concat(u, prefix(v, N - 1))),
                                word_code(*F, v)),
                    tag + ": first product identity fails on " + A.format(u)
                        + " | " + A.format(v));
            r.check(c == concat(word_code(*F, concat(u, prefix(v, w))),
                                word_code(*F, concat(suffix(u, w), v))),
                    tag + ": second product identity fails on " + A.format(u)
                        + " | " + A.format(v));
          }
        }
        r.log.push_back(tag + ": " + std::to_string(samples) + " words");
      }
      return r;
    }

    inline SuiteResult term_functor(SuiteContext const& ctx) {
      SuiteResult r;
      auto const  N   = ctx.get<std::size_t>("order", 2);
      auto const  len = ctx.get<std::size_t>("block_length", 4);
      for (auto const& name :
           ctx.params.at("shifts").get<std::vector<std::string>>()) {
        auto const  X   = ctx.shift(name);
        auto const& A   = X.alphabet();
        auto const  Phi = centralize(higher_block_map(A, N));
        auto const  Y   = apply_to_presentation(Phi, X);
        // The same sliding code with one more letter of context each side.
        auto const Psi = CentralBlockMap(BlockMap::from_function(
            A, Phi.target(), Phi.wing() + 1, Phi.wing() + 1, [&](Word const& w) {
              return Phi(Word(w.begin() + 1, w.end() - 1));
            }));
        std::vector<TestSemigroup> const src{syntactic_test("S(X)", X)};
        std::vector<TestSemigroup> const dst{syntactic_test("S(Y)", Y)};
        auto const arrows = mirage_arrows(X, periodic_idempotents(X, len));
        std::size_t composed = 0;
        for (auto const& a : arrows) {
          if (!r.passed) {
            break;
          }
          auto const tag = name + " " + format_arrow(A, a);
          auto const Fa  = induced_functor_on_arrow(Phi, a, src);
          r.check(arrow_passes(Fa, dst), tag + ": image is not an arrow");
          r.check(arrows_quotient_equal(
                      induced_functor_on_arrow(Phi, identity_arrow(a.e), src),
                      identity_arrow(Fa.e),
                      dst),
                  tag + ": identity not preserved");
          r.check(arrows_quotient_equal(Fa, induced_functor_on_arrow(Psi, a, src), dst),
                  tag + ": depends on the block map");
          for (auto const& b : arrows) {
            if (b.e == a.f) {
              ++composed;
              r.check(arrows_quotient_equal(
                          induced_functor_on_arrow(Phi, compose(a, b), src),
                          compose(Fa, induced_functor_on_arrow(Phi, b, src)),
                          dst),
                      tag + ": composition with " + format_arrow(A, b));
            }
          }
        }
        r.log.push_back(name + ": " + std::to_string(arrows.size()) + " arrows, "
                        + std::to_string(composed) + " composable pairs");
      }
      return r;
    }

    // Power series n(t) / d(t) to the given order, d(0) = 1.
    inline std::vector<BigInt> series_quotient(std::vector<long long> const& n,
                                               std::vector<long long> const& d,
                                               std::size_t                   order) {
      std::vector<BigInt> c(order + 1, 0);
      for (std::size_t i = 0; i <= order; ++i) {
        BigInt s = i < n.size() ? BigInt(n[i]) : BigInt(0);
        for (std::size_t k = 1; k <= i && k < d.size(); ++k) {
          s -= BigInt(d[k]) * c[i - k];
        }
        c[i] = s;
      }
      return c;
    }

    inline SuiteResult zeta_integrality(SuiteContext const& ctx) {
      SuiteResult r;
      auto const  order = ctx.get<std::size_t>("order", 12);
      // Each expected entry is {"numerator": [...], "denominator": [...]}.
      for (auto const& [name, ratio] : ctx.params.at("expected").items()) {
        auto const z        = zeta(ctx.shift(name), order);
        auto const expected = series_quotient(
            ratio.value("numerator", std::vector<long long>{1}),
            ratio.at("denominator").get<std::vector<long long>>(),
            order);
        r.check(z.coefficients == expected,
                name + ": coefficients differ from the rational oracle");
        r.log.push_back(name + ": matches n(t)/d(t) to order "
                        + std::to_string(order));
      }
      for (auto const& name :
           ctx.params.at("integral").get<std::vector<std::string>>()) {
        try {
          zeta(ctx.shift(name), order);
          r.check(true, name);
          r.log.push_back(name + ": integral");
        } catch (Error const& e) {
          r.check(e.kind() != ErrorKind::non_integral_coefficient,
                  name + ": " + e.what());
          if (e.kind() != ErrorKind::non_integral_coefficient) {
            throw;
          }
        }
      }
      return r;
    }

    inline SuiteResult mobius_primitive(SuiteContext const& ctx) {
      SuiteResult r;
      auto const  order = ctx.get<std::size_t>("order", 12);
      for (auto const& name :
           ctx.params.at("shifts").get<std::vector<std::string>>()) {
        auto const X      = ctx.shift(name);
        auto const counts = periodic_counts(X, order);
        for (std::size_t n = 1; n <= order; ++n) {
          std::uint64_t direct = 0;
          detail::for_each_word(X.alphabet().size(), n, [&](Word const& w) {
            if (is_primitive(w) && is_periodic_point(X, w)) {
              ++direct;
            }
          });
          r.check(counts.q[n - 1] == direct,
                  name + ": q(" + std::to_string(n) + ") = "
                      + std::to_string(counts.q[n - 1]) + " but "
                      + std::to_string(direct) + " primitive words");
        }
        r.log.push_back(name + ": q agrees to n = " + std::to_string(order));
      }
      return r;
    }

    inline SuiteResult minimal_ideal_census(SuiteContext const& ctx) {
      SuiteResult r;
      auto const  X   = ctx.shift(ctx.get<std::string>("shift", "periodic-ab"));
      auto const  syn = syntactic_semigroup(X);
      auto const& S   = syn.S;
      auto const& g   = S.green();
      auto const  e = omega_power(S, S.evaluate(X.alphabet().parse(
                          ctx.get<std::string>("word", "ab"))));
      std::set<std::size_t> R, L, H;
      std::size_t           idem = 0;
      for (auto x : g.J_class(g.J[e])) {
        R.insert(g.R[x]);
        L.insert(g.L[x]);
        H.insert(g.H[x]);
        idem += S.is_idempotent(x) ? 1 : 0;
      }
      auto const& want = ctx.params.at("expected");
      r.check(R.size() == want.at("R").get<std::size_t>(), "R-classes");
      r.check(L.size() == want.at("L").get<std::size_t>(), "L-classes");
      r.check(H.size() == want.at("H").get<std::size_t>(), "H-classes");
      r.check(idem == want.at("idempotents").get<std::size_t>(), "idempotents");
      r.log.push_back("R " + std::to_string(R.size()) + ", L "
                      + std::to_string(L.size()) + ", H "
                      + std::to_string(H.size()) + ", idempotents "
                      + std::to_string(idem));
      return r;
    }

    inline SuiteResult census_coherence(SuiteContext const& ctx) {
      SuiteResult r;
      for (auto const& name :
           ctx.params.at("shifts").get<std::vector<std::string>>()) {
        auto const  syn    = syntactic_semigroup(ctx.shift(name));
        auto const  census = iso_class_census(KaroubiCategory(syn.S));
        std::size_t total  = 0;
        for (auto const& [n, count] : census.objects_by_class_size) {
          total += count;
          r.check(count % n == 0,
                  name + ": " + std::to_string(count)
                      + " objects in classes of size " + std::to_string(n));
        }
        r.check(total == syn.S.idempotents().size(),
                name + ": census does not count every idempotent");
        r.log.push_back(name + ": " + census_to_json(census).dump());
      }
      return r;
    }

    inline SuiteResult mirage_expansion(SuiteContext const& ctx) {
      SuiteResult r;
      auto const  X    = ctx.shift(ctx.get<std::string>("shift", "even"));
      auto const  cx   = expand_shift(X, X.alphabet().letter(
                                         ctx.get<std::string>("alpha", "a")));
      auto const  len  = ctx.get<std::size_t>("max_length", 10);
      auto const  kmax = ctx.get<std::size_t>("max_k", 4);
      std::size_t preserved = 0, reflected = 0, classified = 0;
      for (std::size_t n = 1; n <= len && r.passed; ++n) {
        detail::for_each_word(cx.A().size(), n, [&](Word const& w) {
          OmegaTerm const t(w);
          OmegaTerm const e = term_expand(t, cx.alpha, cx.diamond);
          for (std::size_t k = 1; k <= kmax; ++k) {
            if (mirage_membership(t, X, k)) {
              ++preserved;
              r.check(mirage_membership(e, cx.target, k),
                      "E(" + cx.A().format(w) + ") leaves the truncation k = "
                          + std::to_string(k));
            }
          }
        });
        detail::for_each_word(cx.B().size(), n, [&](Word const& w) {
          if (w == Word{cx.diamond}) {
            return;
          }
          OmegaTerm const t(w);
          if (mirage_membership(t, cx.target, 2)) {
            ++classified;
            try {
              classify_type(t, cx);
              r.check(true, "");
            } catch (Error const& err) {
              r.check(false, cx.B().format(w) + ": " + err.what());
            }
          }
          for (std::size_t k = 1; k <= kmax; ++k) {
            if (mirage_membership(t, cx.target, 2 * k)) {
              ++reflected;
              auto c = term_contract(t, cx.diamond);
              r.check(c && mirage_membership(*c, X, k),
                      "C(" + cx.B().format(w) + ") leaves the truncation k = "
                          + std::to_string(k));
            }
          }
        });
      }
      r.log.push_back("E-preservation: " + std::to_string(preserved) + " cases");
      r.log.push_back("C-reflection: " + std::to_string(reflected) + " cases");
      r.log.push_back("classification: " + std::to_string(classified) + " words");
      return r;
    }

    inline SuiteResult flow_naturality(SuiteContext const& ctx) {
      SuiteResult r;
      auto const  X  = ctx.shift(ctx.get<std::string>("shift", "even"));
      auto const  cx = expand_shift(
          X, X.alphabet().letter(ctx.get<std::string>("alpha", "a")));
      auto const tests = default_tests(cx.target, ctx.seed);
      auto const idem  = periodic_idempotents(cx.target,
                                             ctx.get<std::size_t>("block_length", 4));
      std::map<std::string, std::size_t> cases;
      for (auto const& a : mirage_arrows(cx.target, idem)) {
        auto const v   = verify_naturality(a, cx, tests);
        auto const tag = format_arrow(cx.B(), a);
        r.check(v.commutes, tag + " fails in " + v.distinguished_by);
        r.log.push_back(tag + " " + v.proof_case);
        ++cases[v.proof_case];
      }
      Json case_counts = Json::object();
      for (auto const& [c, n] : cases) {
        case_counts[c] = n;
      }
      r.archive["proof_cases"] = case_counts;

      auto const s1 = syntactic_semigroup(X);
      auto const s2 = syntactic_semigroup(cx.target);
      auto const P1 = lu_labeled_poset(s1.S);
      auto const P2 = lu_labeled_poset(s2.S);
      auto const v  = poset_isomorphic(P1, P2);
      r.check(v.verdict == GroupVerdict::isomorphic
                  || v.verdict == GroupVerdict::invariant_equal,
              std::string("LU posets: ") + to_string(v.verdict) + " " + v.reason);
      r.log.push_back(std::string("LU posets: ") + to_string(v.verdict));
      r.archive["lu_verdict"]  = to_string(v.verdict);
      r.archive["lu_source"]   = to_dot(P1, "source");
      r.archive["lu_expanded"] = to_dot(P2, "expanded");
      return r;
    }

    inline SuiteResult conjugacy_invariance(SuiteContext const& ctx) {
      SuiteResult r;
      auto const  X     = ctx.shift(ctx.get<std::string>("shift", "golden"));
      auto const  order = ctx.get<std::size_t>("order", 10);
      auto const  base  = periodic_counts(X, order);
      for (auto N : ctx.params.at("orders").get<std::vector<std::size_t>>()) {
        auto const Y = apply_to_presentation(higher_block_map(X.alphabet(), N), X);
        auto const c = periodic_counts(Y, order);
        r.check(c.p == base.p, "p differs for the " + std::to_string(N) + "-block recoding");
        r.check(c.q == base.q, "q differs for the " + std::to_string(N) + "-block recoding");
        r.log.push_back("N = " + std::to_string(N) + ": p and q agree to n = "
                        + std::to_string(order));
      }
      return r;
    }

    inline SuiteResult karoubi_lu(SuiteContext const& ctx) {
      SuiteResult r;
      auto        run = [&](std::string const&          name,
                     FiniteSemigroup const&      S,
                     std::vector<Element> const& K) {
        auto v = karoubi_vs_lu_comparison(S, K);
        r.check(v.verdict == GroupVerdict::isomorphic,
                name + ": " + to_string(v.verdict));
        r.log.push_back(name + " (" + std::to_string(S.size()) + " elements): "
                        + to_string(v.verdict));
      };
      auto const max_size = ctx.get<std::size_t>("max_size", 60);
      for (auto const& name :
           ctx.params.at("shifts").get<std::vector<std::string>>()) {
        auto const syn = syntactic_semigroup(ctx.shift(name));
        if (syn.S.size() <= max_size) {
          run("S(" + name + ")", syn.S, {});
          run("S(" + name + ") on L(X)", syn.S, syn.accept);
        }
      }
      for (auto n : ctx.params.at("cyclic_groups").get<std::vector<std::size_t>>()) {
        run("Z" + std::to_string(n), cyclic_group(n), {});
      }
      std::mt19937_64 rng(ctx.seed);
      auto const      count = ctx.get<std::size_t>("random", 10);
      Alphabet const  A     = Alphabet::from_chars("ab");
      for (std::size_t i = 0; i < count; ++i) {
        auto S = random_transformation_semigroup(rng, A, 3 + i % 3, max_size);
        run("random " + std::to_string(i), S, {});
      }
      return r;
    }

  }  // namespace suites

  using SuiteRunner = std::function<SuiteResult(SuiteContext const&)>;

  inline std::map<std::string, SuiteRunner> const& suite_registry() {
    static std::map<std::string, SuiteRunner> const registry{
        {"closure-example", suites::closure_example},
        {"shadow-product", suites::shadow_product},
        {"higher-block-left-inverse", suites::higher_block_left_inverse},
        {"word-code-identities", suites::word_code_identities},
        {"term-functor", suites::term_functor},
        {"zeta-integrality", suites::zeta_integrality},
        {"mobius-primitive", suites::mobius_primitive},
        {"minimal-ideal-census", suites::minimal_ideal_census},
        {"census-coherence", suites::census_coherence},
        {"mirage-expansion", suites::mirage_expansion},
        {"flow-naturality", suites::flow_naturality},
        {"conjugacy-invariance", suites::conjugacy_invariance},
        {"karoubi-lu", suites::karoubi_lu}};
    return registry;
  }

  // Runs a manifest entry; errors other than a failed check propagate.
  inline SuiteResult run_suite(SuiteEntry const&  entry,
                               std::string const& data_dir,
                               std::uint64_t      seed) {
    auto it = suite_registry().find(entry.name);
    detail::require(it != suite_registry().end(),
                    ErrorKind::invalid_argument,
                    "no runner for suite '" + entry.name + "'");
    return detail::guard_json(
        [&] { return it->second(SuiteContext{data_dir, seed, entry.params}); });
  }

}  // namespace shiftcat

#endif  // SHIFTCAT_SUITES_HPP_
