#include <cstddef>  // for size_t
#include <cstdint>  // for int64_t
#include <vector>   // for vector

#include "catch_amalgamated.hpp"
#include "test_helpers.hpp"

#include "shiftcat/shifts.hpp"

namespace shiftcat {
  using test::W;

  namespace {
    // Every maximal run of b's with an a on both sides has even length.
    bool even_rule(Word const& w) {
      std::size_t i = 0;
      while (i < w.size() && w[i] == 1) {
        ++i;
      }
      while (i < w.size()) {
        std::size_t j = i + 1;
        while (j < w.size() && w[j] == 1) {
          ++j;
        }
        if (j < w.size() && (j - i - 1) % 2 == 1) {
          return false;
        }
        i = j;
      }
      return true;
    }

    // w^infinity in the even shift: the cyclic word has only even b-runs.
    bool even_cyclic(Word const& w) {
      return std::count(w.begin(), w.end(), 0) == 0
             || even_rule(concat(concat(w, w), w));
    }

    bool golden_cyclic(Word const& w) {
      Word ww = concat(w, w);
      return !is_factor(W("bb"), ww);
    }

    using Poly = std::vector<std::int64_t>;

    // det(I - tA) by Faddeev-LeVerrier: the characteristic polynomial
    // x^n + c_1 x^(n-1) + ... + c_n reversed gives 1 + c_1 t + ... + c_n t^n.
    Poly det_one_minus_tA(std::vector<std::vector<std::int64_t>> const& A) {
      std::size_t const n = A.size();
      using Mat           = std::vector<std::vector<std::int64_t>>;
      auto mul            = [n](Mat const& X, Mat const& Y) {
        Mat Z(n, std::vector<std::int64_t>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
              Z[i][j] += X[i][k] * Y[k][j];
        return Z;
      };
      Poly c(n + 1, 0);
      c[0] = 1;
      Mat M(n, std::vector<std::int64_t>(n, 0));  // M_0 = 0
      for (std::size_t k = 1; k <= n; ++k) {
        Mat AM = mul(A, M);
        for (std::size_t i = 0; i < n; ++i) {
          AM[i][i] += c[k - 1];
        }
        M            = AM;  // M_k = A M_(k-1) + c_(k-1) I
        Mat          AMk = mul(A, M);
        std::int64_t tr  = 0;
        for (std::size_t i = 0; i < n; ++i) {
          tr += AMk[i][i];
        }
        c[k] = -tr / static_cast<std::int64_t>(k);
      }
      return c;
    }

    Poly invert_series(Poly const& d, std::size_t order) {
      Poly r(order + 1, 0);
      r[0] = 1;  // d[0] == 1
      for (std::size_t n = 1; n <= order; ++n) {
        std::int64_t s = 0;
        for (std::size_t k = 1; k <= n && k < d.size(); ++k) {
          s += d[k] * r[n - k];
        }
        r[n] = -s;
      }
      return r;
    }

    std::vector<std::int64_t> as_int(std::vector<BigInt> const& v) {
      std::vector<std::int64_t> r;
      for (auto const& x : v) {
        r.push_back(static_cast<std::int64_t>(x));
      }
      return r;
    }
  }  // namespace

  TEST_CASE("SFT de Bruijn graph", "[shifts]") {
    auto X = test::golden_mean();
    CHECK(X.number_of_vertices() == 2);  // a, b
    CHECK(X.edges().size() == 3);        // aa, ab, ba
    auto Y = ShiftPresentation::sft(test::ab(), {W("aba"), W("bb")});
    CHECK(Y.number_of_vertices() == 3);  // aa, ab, ba
  }

  TEST_CASE("trim", "[shifts]") {
    auto X = trim(test::even_shift());
    CHECK(X.number_of_vertices() == 2);
    CHECK(X.edges().size() == 3);

    auto D = ShiftPresentation::sofic(
        test::ab(), {"0", "1", "2"}, {{0, 0, 0}, {0, 1, 1}, {2, 1, 0}});
    auto T = trim(D);
    CHECK(T.number_of_vertices() == 1);
    CHECK(T.vertex_names() == std::vector<std::string>{"0"});

    auto E = ShiftPresentation::sft(Alphabet::from_chars("a"), {Word{0}});
    CHECK_THROWS_AS(trim(E), Error);
    try {
      trim(E);
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::empty_shift);
    }
  }

  TEST_CASE("blocks", "[shifts]") {
    auto X = test::even_shift();
    auto B = blocks(X, 3);
    CHECK(B.count(W("aba")) == 0);
    CHECK(blocks(X, 4).count(W("abba")) == 1);
    CHECK(blocks(test::full_shift(), 2)
          == WordSet{W("a"), W("b"), W("aa"), W("ab"), W("ba"), W("bb")});
    CHECK(blocks(test::golden_mean(), 2)
          == WordSet{W("a"), W("b"), W("aa"), W("ab"), W("ba")});

    CHECK(is_block(X, W("abba")));
    CHECK_FALSE(is_block(X, W("abbba")));
    Alphabet const abcd = Alphabet::from_chars("abcd");
    CHECK(is_block(test::four_letter_shift(), abcd.parse("aaaaabaacaaa")));
    CHECK_FALSE(is_block(test::four_letter_shift(), abcd.parse("cab")));

    // Oracle: the run-parity rule and the forbidden factor.
    auto even10   = blocks(X, 10);
    auto golden10 = blocks(test::golden_mean(), 10);
    for (auto const& w : test::all_words(2, 10)) {
      if (w.empty()) {
        continue;
      }
      REQUIRE((even10.count(w) == 1) == even_rule(w));
      REQUIRE((golden10.count(w) == 1) == !is_factor(W("bb"), w));
    }
  }

  TEST_CASE("block language is factorial and extendable", "[shifts]") {
    for (auto const& X : {test::even_shift(),
                          test::golden_mean(),
                          test::four_letter_shift(),
                          test::periodic_ab()}) {
      std::size_t const n = 7;
      auto              B = blocks(X, n);
      for (auto const& w : B) {
        for (auto const& f : factors_up_to(w, w.size())) {
          REQUIRE(B.count(f) == 1);
        }
        if (w.size() < n) {
          bool left = false, right = false;
          for (Letter a = 0; a < X.alphabet().size(); ++a) {
            left  = left || B.count(concat(Word{a}, w)) == 1;
            right = right || B.count(concat(w, Word{a})) == 1;
          }
          REQUIRE(left);
          REQUIRE(right);
        }
      }
    }
  }

  TEST_CASE("irreducibility", "[shifts]") {
    CHECK(is_irreducible(test::even_shift()));
    CHECK(is_irreducible(test::four_letter_shift()));
    CHECK(is_irreducible(test::golden_mean()));
    CHECK(is_irreducible(test::periodic_ab()));
    CHECK_FALSE(is_irreducible(test::disjoint_ab()));

    // Two components joined one way: a-loop -> b-loop.
    auto oneway = ShiftPresentation::sofic(
        test::ab(), {"0", "1"}, {{0, 0, 0}, {0, 1, 1}, {1, 1, 1}});
    CHECK_FALSE(is_irreducible(oneway));

    // A non-strongly-connected graph whose language is still irreducible:
    // the full shift plus a dangling a-loop feeding into it.
    auto extra = ShiftPresentation::sofic(
        test::ab(), {"0", "1"}, {{0, 0, 0}, {0, 0, 1}, {1, 0, 1}, {1, 1, 1}});
    CHECK(is_irreducible(extra));

    // Brute-force word criterion on blocks of length <= 4 with connecting
    // words of length <= 6.
    for (auto const& X : {test::even_shift(),
                          test::golden_mean(),
                          test::disjoint_ab(),
                          oneway,
                          extra}) {
      auto B      = blocks(X, 4);
      auto all    = blocks(X, 14);
      auto middle = test::all_words(2, 6);
      bool ok     = true;
      for (auto const& u : B) {
        for (auto const& v : B) {
          bool found = false;
          for (auto const& w : middle) {
            if (all.count(concat(concat(u, w), v)) == 1) {
              found = true;
              break;
            }
          }
          ok = ok && found;
        }
      }
      REQUIRE(ok == is_irreducible(X));
    }
  }

  TEST_CASE("periodic points", "[shifts]") {
    auto X = test::even_shift();
    CHECK(is_periodic_point(X, W("abb")));
    CHECK_FALSE(is_periodic_point(X, W("ab")));
    CHECK(is_periodic_point(test::full_shift(), W("abaab")));
    CHECK(periodic_point(X, W("abbabb")).representative == W("abb"));

    for (auto const& w : test::all_words(2, 9)) {
      if (w.empty()) {
        continue;
      }
      REQUIRE(is_periodic_point(X, w) == even_cyclic(w));
      REQUIRE(is_periodic_point(test::golden_mean(), w) == golden_cyclic(w));
    }
  }

  TEST_CASE("periodic counts", "[shifts]") {
    auto g = periodic_counts(test::golden_mean(), 4);
    CHECK(g.p == std::vector<std::uint64_t>{1, 3, 4, 7});

    auto f = periodic_counts(test::full_shift(), 3);
    CHECK(f.p[2] == 8);
    CHECK(f.q[2] == 6);

    auto c = periodic_counts(test::periodic_ab(), 2);
    CHECK(c.p[1] == 2);
    CHECK(c.q[1] == 2);
    CHECK(c.p[0] == 0);

    // Oracle: brute force over all words with the cyclic rule.
    auto e = periodic_counts(test::even_shift(), 12);
    std::vector<std::uint64_t> p(12, 0), q(12, 0);
    for (auto const& w : test::all_words(2, 12)) {
      if (!w.empty() && even_cyclic(w)) {
        ++p[w.size() - 1];
        q[w.size() - 1] += is_primitive(w) ? 1 : 0;
      }
    }
    CHECK(e.p == p);
    CHECK(e.q == q);

    // Orbits of primitive points have exactly d elements.
    for (std::size_t d = 1; d <= 12; ++d) {
      CHECK(e.q[d - 1] % d == 0);
    }
  }

  TEST_CASE("zeta function", "[shifts]") {
    auto g = zeta(test::golden_mean(), 12);
    auto oracle
        = invert_series(det_one_minus_tA({{1, 1}, {1, 0}}), 12);
    CHECK(as_int(g.coefficients) == oracle);
    CHECK(as_int(zeta(test::golden_mean(), 5).coefficients)
          == std::vector<std::int64_t>{1, 1, 2, 3, 5, 8});

    auto f = zeta(test::full_shift(), 3);
    CHECK(as_int(f.coefficients) == std::vector<std::int64_t>{1, 2, 4, 8});
    CHECK(as_int(f.coefficients) == invert_series(det_one_minus_tA({{2}}), 3));

    auto fixed = zeta(test::full_shift("a"), 8);
    for (auto const& c : fixed.coefficients) {
      CHECK(c == 1);
    }

    // The even shift has one more fixed point (b^infinity) than the golden
    // mean shift.
    CHECK(as_int(zeta(test::even_shift(), 4).coefficients)
          == std::vector<std::int64_t>{1, 2, 3, 5, 8});

    // A sequence p that is not the periodic data of any shift.
    CHECK_THROWS_AS(zeta_coefficients({1, 2}), Error);
  }

  TEST_CASE("mirage truncations of words", "[shifts]") {
    auto X = test::even_shift();
    CHECK_FALSE(mirage_membership_k(X, W("aba"), 3));
    CHECK(mirage_membership_k(X, W("aba"), 2));
    for (auto const& w : blocks(X, 6)) {
      REQUIRE(mirage_membership_k(X, w, 3));
    }
  }

}  // namespace shiftcat
