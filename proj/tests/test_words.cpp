#include <cstddef>  // for size_t
#include <random>   // for mt19937_64

#include "catch_amalgamated.hpp"
#include "test_helpers.hpp"

#include "shiftcat/words.hpp"

namespace shiftcat {
  using test::W;

  namespace {
    // A word is primitive iff it occurs in ww only at positions 0 and |w|.
    bool primitive_by_square(Word const& w) {
      Word ww = concat(w, w);
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (std::equal(w.begin(), w.end(), ww.begin() + i)) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  TEST_CASE("prefix and suffix", "[words]") {
    CHECK(prefix(W("abba"), 2) == W("ab"));
    CHECK(prefix(W("ab"), 5) == W("ab"));
    CHECK(prefix(W("abc", Alphabet::from_chars("abc")), 0).empty());
    CHECK(suffix(W("abba"), 2) == W("ba"));
    CHECK(suffix(W("ab"), 5) == W("ab"));
    CHECK(suffix(W("abc", Alphabet::from_chars("abc")), 0).empty());
    CHECK(prefix_k(W("abba"), 3) == W("abb"));
    CHECK(suffix_k(W("abba"), 3) == W("bba"));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
      Word        u = test::random_word(rng, 3, 0, 12);
      std::size_t k = rng() % (u.size() + 1);
      CHECK(concat(prefix(u, k), Word(u.begin() + k, u.end())) == u);
      CHECK(concat(Word(u.begin(), u.end() - k), suffix(u, k)) == u);
    }
  }

  TEST_CASE("factors_up_to", "[words]") {
    CHECK(factors_up_to(W("aba"), 2) == WordSet{W("a"), W("b"), W("ab"), W("ba")});
    CHECK(factors_up_to(W("aa"), 1) == WordSet{W("a")});
    CHECK(factors_up_to(Word{}, 3).empty());
  }

  TEST_CASE("primitivity and roots", "[words]") {
    CHECK_FALSE(is_primitive(W("abab")));
    CHECK(is_primitive(W("aba")));
    CHECK(is_primitive(W("bab")));
    CHECK_THROWS_AS(is_primitive(Word{}), Error);

    auto r = primitive_root(W("abab"));
    CHECK(r.root == W("ab"));
    CHECK(r.exponent == 2);
    r = primitive_root(W("aaa"));
    CHECK(r.root == W("a"));
    CHECK(r.exponent == 3);
    r = primitive_root(W("aba"));
    CHECK(r.root == W("aba"));
    CHECK(r.exponent == 1);

    for (auto const& w : test::all_words(2, 12)) {
      if (w.empty()) {
        continue;
      }
      REQUIRE(is_primitive(w) == primitive_by_square(w));
      auto root = primitive_root(w);
      REQUIRE(power(root.root, root.exponent) == w);
      REQUIRE(primitive_by_square(root.root));
    }
  }

  TEST_CASE("commuting words share a primitive root", "[words]") {
    auto words = test::all_words(2, 6);
    for (auto const& u : words) {
      for (auto const& v : words) {
        if (!u.empty() && !v.empty() && concat(u, v) == concat(v, u)) {
          REQUIRE(primitive_root(u).root == primitive_root(v).root);
        }
      }
    }
  }

  TEST_CASE("conjugates", "[words]") {
    CHECK(conjugates(W("ab")) == std::vector<Word>{W("ab"), W("ba")});
    CHECK(conjugates(W("aa")) == std::vector<Word>{W("aa")});
    CHECK(conjugates(W("bab"))
          == std::vector<Word>{W("bab"), W("abb"), W("bba")});
    CHECK(least_conjugate(W("bab")) == W("abb"));
    CHECK(rotate_left(W("bab"), least_rotation_index(W("bab"))) == W("abb"));

    for (auto const& w : test::all_words(3, 7)) {
      if (w.empty()) {
        continue;
      }
      // Oracle: all |w| rotations, deduplicated.
      WordSet rotations;
      for (std::size_t i = 0; i < w.size(); ++i) {
        rotations.insert(rotate_left(w, i));
      }
      auto c = conjugates(w);
      REQUIRE(c.size() == rotations.size());
      REQUIRE(WordSet(c.begin(), c.end()) == rotations);
      REQUIRE((c.size() == w.size()) == is_primitive(w));
      REQUIRE(c.size() == primitive_root(w).root.size());
    }
  }

  TEST_CASE("primitivity inclusion", "[words]") {
    CHECK(check_primitivity_inclusion(W("ab"), 10, 2).empty());
    CHECK(check_primitivity_inclusion(W("bab"), 12, 2).empty());
    CHECK_THROWS_AS(check_primitivity_inclusion(W("abab"), 10, 2), Error);

    auto weak = primitivity_inclusion_violations(W("bab"), 12, 2, 1);
    CHECK(std::find(weak.begin(), weak.end(), W("babab")) != weak.end());
  }

  TEST_CASE("primitivity inclusion, exhaustive oracle", "[words]") {
    // Brute force over every word of length <= 14: membership in
    // v^* v^2 A^(<n) and in A^* v^2 tested directly.
    auto const candidates = test::all_words(2, 14);
    for (auto const& v : test::all_words(2, 4)) {
      if (v.empty() || !is_primitive(v)) {
        continue;
      }
      Word const  v2 = power(v, 2);
      std::size_t n  = v.size();
      WordSet     expected;
      for (auto const& w : candidates) {
        if (!ends_with(w, v2)) {
          continue;
        }
        std::size_t j = 0;
        while ((j + 1) * n <= w.size() && starts_with(w, power(v, j + 1))) {
          ++j;
        }
        bool in_lhs = false;
        for (std::size_t i = 2; i <= j; ++i) {
          if (w.size() - i * n < n) {
            in_lhs = true;
          }
        }
        bool in_v_plus = w.size() % n == 0 && w == power(v, w.size() / n);
        if (in_lhs && !in_v_plus) {
          expected.insert(w);
        }
      }
      REQUIRE(expected.empty());
      REQUIRE(check_primitivity_inclusion(v, 14, 2).empty());
    }
  }

  TEST_CASE("alphabet parsing and formatting", "[words]") {
    Alphabet A({"[ab]", "[ba]", "[aa]"});
    CHECK(A.parse("[ab][ba]") == Word{0, 1});
    CHECK(A.format(Word{2, 0}) == "[aa][ab]");
    CHECK_THROWS_AS(A.parse("[ab]x"), Error);
    CHECK_THROWS_AS(Alphabet({"a", "a"}), Error);
    CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), Error);

    Alphabet B({"x", "yz"});
    CHECK(B.parse("yzx") == Word{1, 0});
    CHECK(B.format(Word{1, 0}) == "yz x");
    CHECK(B.parse(B.format(Word{1, 0, 1})) == Word{1, 0, 1});
  }

}  // namespace shiftcat
