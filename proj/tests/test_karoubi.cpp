#include <cstddef>  // for size_t
#include <random>   // for mt19937_64
#include <string>   // for string
#include <vector>   // for vector

#include "catch_amalgamated.hpp"
#include "test_helpers.hpp"

#include "shiftcat/karoubi.hpp"

namespace shiftcat {
  using test::chain;
  using test::null_semigroup;
  using test::symmetric3;
  using test::W;


  TEST_CASE("categories", "[karoubi]") {
    KaroubiCategory T(FiniteSemigroup::from_table(1, {0}));
    CHECK(T.objects().size() == 1);
    CHECK(T.arrows().size() == 1);

    KaroubiCategory Z(cyclic_group(3));
    CHECK(Z.objects() == std::vector<Element>{0});
    CHECK(Z.arrows().size() == 3);
    auto aut = automorphism_group(Z, 0);
    CHECK(aut.units.size() == 3);
    CHECK(aut.group.descriptor() == "C3");

    auto syn = syntactic_semigroup(test::even_shift()).S;
    KaroubiCategory E(syn);
    CHECK(E.objects() == syn.idempotents());
    for (auto const& a : E.arrows()) {
      REQUIRE(E.is_arrow(a));
      REQUIRE(E.compose(E.identity(a.e), a) == a);
      REQUIRE(E.compose(a, E.identity(a.f)) == a);
    }
    CHECK_THROWS_AS(E.compose({0, 0, 0}, {1, 1, 1}), Error);
    CHECK(KaroubiCategory::build(syn).arrows() == E.arrows());
  }

  TEST_CASE("retractions and isomorphism classes", "[karoubi]") {
    for (auto const& S : test::semigroup_corpus()) {
      KaroubiCategory K(S);
      auto const      leq = retraction_order(K);
      for (std::size_t i = 0; i < K.objects().size(); ++i) {
        Element const e = K.objects()[i];
        auto const    g = automorphism_group(K, e);
        REQUIRE(g.group.order() == S.green().H_class(S.green().H[e]).size());
        for (std::size_t j = 0; j < K.objects().size(); ++j) {
          // Mutual retracts are exactly the J-equivalent objects.
          REQUIRE((leq[i][j] && leq[j][i])
                  == (S.green().J[e] == S.green().J[K.objects()[j]]));
        }
      }
      auto const  census = iso_class_census(K);
      std::size_t total  = 0;
      for (auto [n, count] : census.objects_by_class_size) {
        REQUIRE(count % n == 0);
        total += count;
      }
      REQUIRE(total == K.objects().size());
      // Classes are the idempotents of each regular J-class.
      std::map<std::size_t, std::size_t> per_J;
      for (auto e : S.idempotents()) {
        ++per_J[S.green().J[e]];
      }
      std::map<std::size_t, std::size_t> expected;
      for (auto [j, n] : per_J) {
        expected[n] += n;
      }
      REQUIRE(census.objects_by_class_size == expected);
    }

    auto M = adjoin_identity(chain(2));
    KaroubiCategory KM(M);
    auto const      leq = retraction_order(KM);
    std::size_t     one = 0;
    while (KM.objects()[one] != M.size() - 1) {
      ++one;
    }
    for (std::size_t i = 0; i < KM.objects().size(); ++i) {
      CHECK(leq[i][one]);
    }

    CHECK(iso_class_census(KaroubiCategory(cyclic_group(3))).objects_by_class_size
          == std::map<std::size_t, std::size_t>{{1, 1}});
    CHECK(iso_class_census(KaroubiCategory(chain(3))).objects_by_class_size
          == std::map<std::size_t, std::size_t>{{1, 3}});

    auto P = syntactic_semigroup(test::periodic_ab()).S;
    KaroubiCategory KP(P);
    auto const      census = iso_class_census(KP);
    CHECK(census.objects_by_class_size.at(2) == 2);
    auto const e = P.evaluate(W("ab"));
    auto const f = P.evaluate(W("ba"));
    auto const l = retraction_order(KP);
    auto pos = [&](Element x) {
      return std::find(KP.objects().begin(), KP.objects().end(), x)
             - KP.objects().begin();
    };
    CHECK(l[pos(e)][pos(f)]);
    CHECK(l[pos(f)][pos(e)]);
    CHECK(automorphism_group(KP, e).group.order()
          == schutzenberger_of(P, e).order());
  }

  TEST_CASE("labeled posets", "[karoubi]") {
    auto G = lu_labeled_poset(symmetric3());
    REQUIRE(G.size() == 1);
    CHECK(G.label(0) == "(1, G6na[1,2,2,2,3,3])");

    auto N = lu_labeled_poset(null_semigroup(4));
    REQUIRE(N.size() == 1);
    CHECK(N.label(0) == "(1, C1)");

    auto syn = syntactic_semigroup(test::even_shift());
    auto P   = lu_labeled_poset(syn.S, syn.accept);
    bool has_minimum = false;
    for (std::size_t i = 0; i < P.size(); ++i) {
      bool below_all = true;
      for (std::size_t j = 0; j < P.size(); ++j) {
        below_all = below_all && P.leq[i][j];
      }
      has_minimum = has_minimum || (below_all && P.regular[i]);
    }
    CHECK(has_minimum);

    auto same = poset_isomorphic(P, P);
    CHECK(same.verdict == GroupVerdict::isomorphic);
    auto c3 = lu_labeled_poset(chain(3));
    auto c2 = lu_labeled_poset(chain(2));
    auto v  = poset_isomorphic(c3, c2);
    CHECK(v.verdict == GroupVerdict::not_isomorphic);
    CHECK(v.reason.find("cardinality") != std::string::npos);
    CHECK(poset_isomorphic(c3, lu_labeled_poset(chain(3))).witness
          == std::vector<std::size_t>{0, 1, 2});
    CHECK(poset_isomorphic(lu_labeled_poset(cyclic_group(2)),
                           lu_labeled_poset(chain(1)))
              .verdict
          == GroupVerdict::not_isomorphic);

    auto dot = to_dot(c3);
    CHECK(dot.find("J0 -> J1") != std::string::npos);
    CHECK(dot.find("J0 -> J2") == std::string::npos);
  }

  TEST_CASE("arrows against middles", "[karoubi]") {
    for (auto const& S : test::semigroup_corpus()) {
      auto v = karoubi_vs_lu_comparison(S, all_elements(S));
      REQUIRE(v.verdict == GroupVerdict::isomorphic);
      REQUIRE(poset_isomorphic(v.karoubi, v.lu).verdict
              == GroupVerdict::isomorphic);
      // An empty subset stands for all of S.
      auto w = karoubi_vs_lu_comparison(S, {});
      REQUIRE(w.map == v.map);
    }
    for (auto const& X : {test::even_shift(), test::golden_mean(), test::four_letter_shift()}) {
      auto syn = syntactic_semigroup(X);
      auto v   = karoubi_vs_lu_comparison(syn.S, syn.accept);
      CHECK(v.verdict == GroupVerdict::isomorphic);
    }
    auto z = karoubi_vs_lu_comparison(cyclic_group(3), all_elements(cyclic_group(3)));
    REQUIRE(z.karoubi.size() == 1);
    CHECK(z.karoubi.label(0) == "(1, C3)");
    CHECK(z.lu.label(0) == "(1, C3)");
  }

  TEST_CASE("functors on term arrows", "[karoubi]") {
    auto const X   = test::golden_mean();
    auto const Phi = centralize(higher_block_map(test::ab(), 2));
    auto const Y   = apply_to_presentation(Phi, X);
    auto       src = default_tests(X, 1);
    auto       dst = default_tests(Y, 2);

    auto e = parse_term(test::ab(), "(a)^w");
    CHECK(format_term(Phi.target(), induced_functor_on_idempotent(Phi, e))
          == "([aa])^w");
    auto swap = CentralBlockMap(letter_map(test::ab(), test::ab(), {1, 0}));
    CHECK(induced_functor_on_idempotent(swap, parse_term(test::ab(), "(ab)^w"))
          == parse_term(test::ab(), "(ba)^w"));

    // Idempotents u^w and arrows from primitive blocks of length <= 4.
    std::vector<OmegaTerm> idem;
    for (auto const& u : blocks(X, 4)) {
      if (is_primitive(u) && is_block(X, power(u, 3))) {
        idem.push_back(OmegaTerm::power(u));
      }
    }
    REQUIRE(idem.size() >= 4);
    std::vector<TermArrow> arrows;
    for (auto const& a : idem) {
      for (auto const& b : idem) {
        for (auto const& w : blocks(X, 2)) {
          OmegaTerm u = concat(concat(a, OmegaTerm(w)), b);
          if (mirage_membership(u, X, 6)) {
            arrows.push_back({a, u, b});
          }
        }
      }
    }
    REQUIRE(arrows.size() > 10);

    // Wing 2 version of the same code.
    auto const Psi = CentralBlockMap(BlockMap::from_function(
        test::ab(), Phi.target(), 2, 2, [&](Word const& w) {
          return Phi(Word(w.begin() + 1, w.end() - 1));
        }));

    for (auto const& a : arrows) {
      auto Fa = induced_functor_on_arrow(Phi, a, src);
      REQUIRE(arrow_passes(Fa, dst));
      REQUIRE(arrows_quotient_equal(
          induced_functor_on_arrow(Phi, identity_arrow(a.e), src),
          identity_arrow(Fa.e),
          dst));
      REQUIRE(arrows_quotient_equal(Fa, induced_functor_on_arrow(Psi, a, src), dst));
      for (auto const& b : arrows) {
        if (!(b.e == a.f)) {
          continue;
        }
        auto ab = compose(a, b);
        REQUIRE(mirage_membership(ab.u, X, 6));
        REQUIRE(arrows_quotient_equal(
            induced_functor_on_arrow(Phi, ab, src),
            compose(Fa, induced_functor_on_arrow(Phi, b, src)),
            dst));
      }
    }

    TermArrow bad{e, parse_term(test::ab(), "(a)^w b"), e};
    CHECK_THROWS_AS(induced_functor_on_arrow(Phi, bad, src), Error);
  }

  TEST_CASE("shadow arrows of the even shift", "[karoubi]") {
    auto const X = test::even_shift();
    auto const syn = syntactic_semigroup(X);
    TermArrow  s{parse_term(test::ab(), "(a)^w"),
                parse_term(test::ab(), "(a)^w (b)^w"),
                parse_term(test::ab(), "(b)^w")};
    TermArrow  t{parse_term(test::ab(), "(b)^w"),
                parse_term(test::ab(), "(b)^(w+1) (a)^w"),
                parse_term(test::ab(), "(a)^w")};
    CHECK(closure_membership(s.u, syn));
    CHECK(closure_membership(t.u, syn));
    auto st = compose(s, t);
    CHECK(canonical(st.u) == parse_term(test::ab(), "(a)^w (b)^(w+1) (a)^w"));
    CHECK_FALSE(closure_membership(st.u, syn));
    CHECK(mirage_membership(st.u, X, 8));
  }

}  // namespace shiftcat
