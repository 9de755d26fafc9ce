#include <cstddef>  // for size_t
#include <random>   // for mt19937_64
#include <set>      // for set
#include <vector>   // for vector

#include "catch_amalgamated.hpp"
#include "test_helpers.hpp"

#include "shiftcat/semigroups.hpp"

namespace shiftcat {
  using test::W;

  namespace {
    using ElementSet = std::set<Element>;

    ElementSet right_ideal(FiniteSemigroup const& S, Element x) {
      ElementSet I{x};
      for (Element s = 0; s < S.size(); ++s) {
        I.insert(S.product(x, s));
      }
      return I;
    }

    ElementSet left_ideal(FiniteSemigroup const& S, Element x) {
      ElementSet I{x};
      for (Element s = 0; s < S.size(); ++s) {
        I.insert(S.product(s, x));
      }
      return I;
    }

    ElementSet two_sided_ideal(FiniteSemigroup const& S, Element x) {
      ElementSet I;
      for (auto y : left_ideal(S, x)) {
        auto R = right_ideal(S, y);
        I.insert(R.begin(), R.end());
      }
      return I;
    }

    bool subset(ElementSet const& a, ElementSet const& b) {
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }

    // Definitional check of the Green data.
    void check_green(FiniteSemigroup const& S) {
      auto const&             g = S.green();
      std::vector<ElementSet> Rs, Ls, Js;
      for (Element x = 0; x < S.size(); ++x) {
        Rs.push_back(right_ideal(S, x));
        Ls.push_back(left_ideal(S, x));
        Js.push_back(two_sided_ideal(S, x));
      }
      for (Element x = 0; x < S.size(); ++x) {
        for (Element y = 0; y < S.size(); ++y) {
          REQUIRE((g.R[x] == g.R[y]) == (Rs[x] == Rs[y]));
          REQUIRE((g.L[x] == g.L[y]) == (Ls[x] == Ls[y]));
          REQUIRE((g.J[x] == g.J[y]) == (Js[x] == Js[y]));
          REQUIRE((g.H[x] == g.H[y])
                  == (g.R[x] == g.R[y] && g.L[x] == g.L[y]));
          REQUIRE(g.J_below(x, y) == subset(Js[x], Js[y]));
        }
      }
      for (std::size_t c = 0; c < g.nJ; ++c) {
        bool has_idempotent = false;
        for (auto x : g.J_class(c)) {
          has_idempotent = has_idempotent || S.is_idempotent(x);
        }
        REQUIRE(g.regular[c] == has_idempotent);
      }
    }

    FiniteSemigroup null_semigroup(std::size_t n) {
      return FiniteSemigroup::from_table(n, std::vector<Element>(n * n, 0));
    }

    // Moore's algorithm: number of classes of the coarsest congruence.
    std::size_t moore_classes(Dfa const& D) {
      std::vector<std::size_t> cls(D.size());
      for (std::size_t q = 0; q < D.size(); ++q) {
        cls[q] = D.accepting[q] ? 1 : 0;
      }
      std::size_t count = 0;
      while (true) {
        std::map<std::vector<std::size_t>, std::size_t> sig;
        std::vector<std::size_t>                        next(D.size());
        for (std::size_t q = 0; q < D.size(); ++q) {
          std::vector<std::size_t> s{cls[q]};
          for (auto p : D.delta[q]) {
            s.push_back(cls[p]);
          }
          next[q] = sig.emplace(s, sig.size()).first->second;
        }
        if (sig.size() == count) {
          return count;
        }
        count = sig.size();
        cls   = next;
      }
    }

    bool accepts(Dfa const& D, Word const& w) {
      std::size_t q = 0;
      for (auto a : w) {
        q = D.delta[q][a];
      }
      return D.accepting[q];
    }
  }  // namespace

  TEST_CASE("generation", "[semigroups]") {
    auto A  = test::ab();
    auto RZ = FiniteSemigroup::generate({{0, 0}, {1, 1}}, A);
    CHECK(RZ.size() == 2);
    for (Element x = 0; x < 2; ++x)
      for (Element y = 0; y < 2; ++y)
        CHECK(RZ.product(x, y) == y);
    CHECK(RZ.green().nR == 1);
    CHECK(RZ.green().nL == 2);
    check_green(RZ);

    auto Z3 = FiniteSemigroup::generate({{1, 2, 0}}, Alphabet({"g"}));
    CHECK(Z3.size() == 3);
    CHECK(Z3.green().nJ == 1);
    CHECK(Z3.green().regular[0]);
    CHECK(Z3.witness(2) == Word{0, 0, 0});

    CHECK_THROWS_AS(FiniteSemigroup::generate({{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}},
                                              A,
                                              50),
                    Error);
    CHECK_THROWS_AS(
        FiniteSemigroup::from_table(2, {1, 1, 0, 0}, {}, std::nullopt), Error);
  }

  TEST_CASE("Green's relations against the definitions", "[semigroups]") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 25; ++i) {
      auto S = random_transformation_semigroup(rng, test::ab(), 4, 40);
      check_green(S);
    }
    check_green(null_semigroup(3));
    check_green(cyclic_group(5));
    check_green(syntactic_semigroup(test::even_shift()).S);
    check_green(syntactic_semigroup(test::four_letter_shift()).S);
  }

  TEST_CASE("syntactic semigroups", "[semigroups]") {
    auto full_a = syntactic_semigroup(test::full_shift("a"));
    CHECK(full_a.S.size() == 1);
    CHECK(full_a.accept.size() == 1);

    auto P = syntactic_semigroup(test::periodic_ab());
    CHECK(P.S.size() == 5);
    CHECK(P.eta(W("ab")) != P.eta(W("ba")));
    CHECK(P.S.is_idempotent(P.eta(W("ab"))));
    CHECK(P.S.is_idempotent(P.eta(W("ba"))));

    auto E = syntactic_semigroup(test::even_shift());
    CHECK_FALSE(E.accepts(E.eta(W("aba"))));
    CHECK(E.accepts(E.eta(W("abba"))));
    CHECK(E.S.idempotents().size() >= 2);

    // Recognition, and the syntactic congruence on short words checked by
    // contexts.
    for (auto const& X : {test::even_shift(),
                          test::golden_mean(),
                          test::four_letter_shift(),
                          test::periodic_ab()}) {
      auto       syn   = syntactic_semigroup(X);
      auto const k     = X.alphabet().size();
      auto       words = test::all_words(k, k > 2 ? 4 : 6);
      auto       L     = blocks(X, 16);
      for (auto const& u : words) {
        if (!u.empty()) {
          REQUIRE((L.count(u) == 1) == syn.accepts(syn.eta(u)));
        }
      }
      auto contexts = test::all_words(k, 3);
      auto short_words = test::all_words(k, k > 2 ? 3 : 4);
      for (auto const& u : short_words) {
        for (auto const& v : short_words) {
          if (u.empty() || v.empty()) {
            continue;
          }
          bool same = true;
          for (auto const& x : contexts) {
            for (auto const& y : contexts) {
              same = same
                     && (L.count(concat(concat(x, u), y))
                         == L.count(concat(concat(x, v), y)));
            }
          }
          REQUIRE(same == (syn.eta(u) == syn.eta(v)));
        }
      }
    }

    // Independent of the presentation: a redundant cover of the even shift.
    auto cover = ShiftPresentation::sofic(
        test::ab(),
        {"0", "1", "2", "3"},
        {{0, 0, 0}, {0, 1, 1}, {1, 1, 0}, {2, 0, 2}, {2, 1, 3}, {3, 1, 2}, {0, 0, 2}});
    CHECK(syntactic_semigroup(cover).S.size() == E.S.size());
  }

  TEST_CASE("Hopcroft minimization", "[semigroups]") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
      Dfa         D;
      std::size_t n   = 1 + rng() % 12;
      D.alphabet_size = 2;
      for (std::size_t q = 0; q < n; ++q) {
        D.delta.push_back({rng() % n, rng() % n});
        D.accepting.push_back(rng() % 2 == 0);
      }
      // Keep only the states reachable from 0.
      auto reach = detail::reachable(D.delta, {0});
      Dfa  R;
      R.alphabet_size = 2;
      std::vector<std::size_t> id(n, n);
      std::size_t              count = 0;
      for (std::size_t q = 0; q < n; ++q) {
        if (reach[q]) {
          id[q] = count++;
        }
      }
      for (std::size_t q = 0; q < n; ++q) {
        if (reach[q]) {
          R.delta.push_back({id[D.delta[q][0]], id[D.delta[q][1]]});
          R.accepting.push_back(D.accepting[q]);
        }
      }
      auto M = minimize(R);
      REQUIRE(M.size() == moore_classes(R));
      for (auto const& w : test::all_words(2, 7)) {
        REQUIRE(accepts(M, w) == accepts(R, w));
      }
    }
  }

  TEST_CASE("omega powers", "[semigroups]") {
    auto Z3 = cyclic_group(3);
    CHECK(omega_power(Z3, 1) == 0);
    CHECK(omega_plus(Z3, 1, 0) == 0);
    CHECK(omega_plus(Z3, 1, 1) == 1);
    CHECK(omega_plus(Z3, 1, -1) == 2);
    CHECK(Z3.product(omega_plus(Z3, 1, -1), 1) == omega_power(Z3, 1));

    // a -> a^2 -> a^3 = a^2: index 2, period 1.
    auto T = FiniteSemigroup::generate({{1, 2, 2}}, Alphabet({"a"}));
    auto ip = index_period(T, 0);
    CHECK(ip.index == 2);
    CHECK(ip.period == 1);
    CHECK(omega_power(T, 0) == T.power(0, 2));

    std::mt19937_64 rng(37);
    for (int i = 0; i < 20; ++i) {
      auto S = random_transformation_semigroup(rng, test::ab(), 5, 300);
      for (Element s = 0; s < S.size(); ++s) {
        Element e = omega_power(S, s);
        REQUIRE(S.is_idempotent(e));
        REQUIRE(S.product(e, s) == S.product(s, e));
        for (long long q = -3; q <= 3; ++q) {
          REQUIRE(S.product(omega_plus(S, s, q), s) == omega_plus(S, s, q + 1));
        }
        if (S.is_idempotent(s)) {
          REQUIRE(e == s);
        }
      }
    }
  }

  TEST_CASE("groups", "[semigroups]") {
    auto c = [](std::size_t n) {
      std::vector<std::size_t> t(n * n);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          t[x * n + y] = (x + y) % n;
      return FiniteGroup(n, t);
    };
    // C2 x C3 as pairs.
    std::vector<std::size_t> t6(36), k4(16);
    for (std::size_t x = 0; x < 6; ++x)
      for (std::size_t y = 0; y < 6; ++y)
        t6[x * 6 + y] = ((x / 3 + y / 3) % 2) * 3 + (x % 3 + y % 3) % 3;
    for (std::size_t x = 0; x < 4; ++x)
      for (std::size_t y = 0; y < 4; ++y)
        k4[x * 4 + y] = x ^ y;
    FiniteGroup C2xC3(6, t6), K4(4, k4);
    CHECK(compare_groups(c(6), C2xC3) == GroupVerdict::isomorphic);
    CHECK(compare_groups(c(4), K4) == GroupVerdict::not_isomorphic);
    CHECK(compare_groups(c(65), c(65)) == GroupVerdict::invariant_equal);
    CHECK(c(6).descriptor() == "C6");
    CHECK(K4.descriptor() == "G4ab[1,2,2,2]");

    // S3 as permutations of 3 points; D3 from a triangle's symmetries.
    auto S3 = FiniteGroup::from_permutations(
        {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}});
    CHECK(S3.order() == 6);
    CHECK_FALSE(S3.is_abelian());
    CHECK(compare_groups(S3, c(6)) == GroupVerdict::not_isomorphic);
    auto T = FiniteSemigroup::generate({{1, 0, 2}, {1, 2, 0}}, test::ab());
    CHECK(compare_groups(maximal_subgroup(T, T.evaluate(W("aa"))), S3)
          == GroupVerdict::isomorphic);
  }

  TEST_CASE("Schutzenberger groups", "[semigroups]") {
    auto Z3 = cyclic_group(3);
    auto G  = schutzenberger_of(Z3, 0);
    CHECK(G.order() == 3);
    CHECK(G.group.descriptor() == "C3");

    auto N = null_semigroup(3);
    CHECK(schutzenberger_of(N, 1).order() == 1);

    auto P = syntactic_semigroup(test::periodic_ab());
    auto e = omega_power(P.S, P.eta(W("ab")));
    CHECK(schutzenberger_of(P.S, e).order() == 1);

    std::mt19937_64 rng(41);
    for (int i = 0; i < 20; ++i) {
      auto S = random_transformation_semigroup(rng, test::ab(), 4, 60);
      for (Element x = 0; x < S.size(); ++x) {
        auto SG = schutzenberger_of(S, x);
        if (S.is_idempotent(x)) {
          REQUIRE(compare_groups(SG.group, maximal_subgroup(S, x))
                  == GroupVerdict::isomorphic);
        }
        // Equal for all H-classes of a J-class.
        auto const& g = S.green();
        for (auto y : g.J_class(g.J[x])) {
          REQUIRE(compare_groups(SG.group, schutzenberger_of(S, y).group)
                  == GroupVerdict::isomorphic);
        }
      }
    }
  }

  TEST_CASE("local units", "[semigroups]") {
    auto M = adjoin_identity(cyclic_group(1));
    CHECK(local_units(M, all_elements(M)) == all_elements(M));
    CHECK(local_units(null_semigroup(3), {0, 1, 2}) == std::vector<Element>{0});

    auto syn = syntactic_semigroup(test::even_shift());
    auto LU  = local_units(syn.S, syn.accept);
    auto E   = syn.S.idempotents();
    for (auto s : syn.accept) {
      bool brute = false;
      for (auto e : E)
        for (auto f : E)
          brute = brute || syn.S.product(syn.S.product(e, s), f) == s;
      REQUIRE(brute == std::binary_search(LU.begin(), LU.end(), s));
      if (syn.S.green().regular[syn.S.green().J[s]]) {
        REQUIRE(brute);
      }
    }
    // A union of J-classes inside accept.
    auto const& g = syn.S.green();
    for (auto s : LU) {
      for (auto t : g.J_class(g.J[s])) {
        if (syn.accepts(t)) {
          REQUIRE(std::binary_search(LU.begin(), LU.end(), t));
        }
      }
    }
  }

  TEST_CASE("conjugate idempotents", "[semigroups]") {
    auto P   = syntactic_semigroup(test::periodic_ab());
    auto eab = P.eta(W("ab")), eba = P.eta(W("ba"));
    auto w   = conjugation_witness(P.S, eab, eba);
    REQUIRE(w.has_value());
    CHECK(P.S.product(w->first, w->second) == eab);
    CHECK(P.S.product(w->second, w->first) == eba);
    CHECK(conjugation_witness(P.S, eab, eab) == std::pair(eab, eab));
    auto zero = P.eta(W("aa"));
    CHECK_FALSE(conjugation_witness(P.S, eab, zero).has_value());
    CHECK_THROWS_AS(conjugation_witness(P.S, P.eta(W("a")), eab), Error);

    std::mt19937_64 rng(43);
    for (int i = 0; i < 20; ++i) {
      auto        S = random_transformation_semigroup(rng, test::ab(), 4, 40);
      auto const& g = S.green();
      for (Element x = 0; x < S.size(); ++x) {
        for (Element y = 0; y < S.size(); ++y) {
          Element xy = S.product(x, y);
          if (S.is_idempotent(xy)) {
            Element yx2 = S.power(S.product(y, x), 2);
            REQUIRE(S.is_idempotent(yx2));
            REQUIRE(g.J[yx2] == g.J[xy]);
          }
        }
      }
      for (auto e : S.idempotents()) {
        for (auto f : S.idempotents()) {
          auto c = conjugation_witness(S, e, f);
          REQUIRE(c.has_value() == (g.J[e] == g.J[f]));
        }
      }
      // Every R-class of a regular J-class holds an idempotent.
      std::vector<bool> r_has_idem(g.nR, false);
      for (auto e : S.idempotents()) {
        r_has_idem[g.R[e]] = true;
      }
      for (Element x = 0; x < S.size(); ++x) {
        if (g.regular[g.J[x]]) {
          REQUIRE(r_has_idem[g.R[x]]);
        }
      }
    }
  }

}  // namespace shiftcat
