// Shared fixtures for the test suites.

#ifndef SHIFTCAT_TESTS_TEST_HELPERS_HPP_
#define SHIFTCAT_TESTS_TEST_HELPERS_HPP_

#include <algorithm>  // for min
#include <cstddef>  // for size_t
#include <random>   // for mt19937_64
#include <string>   // for string
#include <vector>   // for vector

#include "shiftcat/semigroups.hpp"
#include "shiftcat/shifts.hpp"
#include "shiftcat/words.hpp"

namespace shiftcat::test {

  inline Alphabet const& ab() {
    static Alphabet const A = Alphabet::from_chars("ab");
    return A;
  }

  inline Word W(std::string const& s, Alphabet const& A = ab()) {
    return A.parse(s);
  }

  inline ShiftPresentation even_shift() {
    return ShiftPresentation::sofic(
        ab(), {"0", "1"}, {{0, 0, 0}, {0, 1, 1}, {1, 1, 0}});
  }

  inline ShiftPresentation golden_mean() {
    return ShiftPresentation::sft(ab(), {W("bb")});
  }

  inline ShiftPresentation full_shift(std::string const& letters = "ab") {
    return ShiftPresentation::sft(Alphabet::from_chars(letters), {});
  }

  inline ShiftPresentation periodic_ab() {
    return ShiftPresentation::sofic(ab(), {"0", "1"}, {{0, 0, 1}, {1, 1, 0}});
  }

  // Three vertices with an a-loop at each and a cycle 1 -b-> 2 -c-> 3 -d-> 1.
  inline ShiftPresentation four_letter_shift() {
    return ShiftPresentation::sofic(Alphabet::from_chars("abcd"),
                                    {"1", "2", "3"},
                                    {{0, 0, 0},
                                     {1, 0, 1},
                                     {2, 0, 2},
                                     {0, 1, 1},
                                     {1, 2, 2},
                                     {2, 3, 0}});
  }

  inline ShiftPresentation disjoint_ab() {
    return ShiftPresentation::sofic(ab(), {"0", "1"}, {{0, 0, 0}, {1, 1, 1}});
  }

  inline Word random_word(std::mt19937_64& rng,
                          std::size_t      alphabet_size,
                          std::size_t      min_len,
                          std::size_t      max_len) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<Letter>      letter(
        0, static_cast<Letter>(alphabet_size - 1));
    Word w(len(rng));
    for (auto& a : w) {
      a = letter(rng);
    }
    return w;
  }

  // All words over {0..k-1} of length at most n (including the empty word).
  inline std::vector<Word> all_words(std::size_t k, std::size_t n) {
    std::vector<Word> result;
    for (std::size_t len = 0; len <= n; ++len) {
      detail::for_each_word(k, len, [&](Word const& w) { result.push_back(w); });
    }
    return result;
  }

  inline FiniteSemigroup chain(std::size_t n) {
    std::vector<Element> table(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        table[x * n + y] = std::min(x, y);
    return FiniteSemigroup::from_table(n, table);
  }

  inline FiniteSemigroup null_semigroup(std::size_t n) {
    return FiniteSemigroup::from_table(n, std::vector<Element>(n * n, 0));
  }

  inline FiniteSemigroup left_zero(std::size_t n) {
    std::vector<Element> table(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        table[x * n + y] = x;
    return FiniteSemigroup::from_table(n, table);
  }

  inline FiniteSemigroup symmetric3() {
    return FiniteSemigroup::generate({{1, 0, 2}, {1, 2, 0}},
                                     Alphabet::from_chars("st"));
  }

  // Small semigroups of several shapes, syntactic semigroups and random
  // transformation semigroups.
  inline std::vector<FiniteSemigroup> semigroup_corpus() {
    std::vector<FiniteSemigroup> result{FiniteSemigroup::from_table(1, {0}),
                                        cyclic_group(3),
                                        chain(3),
                                        null_semigroup(4),
                                        left_zero(5),
                                        symmetric3(),
                                        adjoin_identity(chain(2))};
    for (auto const& X : {test::even_shift(),
                          test::golden_mean(),
                          test::full_shift(),
                          test::periodic_ab(),
                          test::four_letter_shift(),
                          test::disjoint_ab()}) {
      result.push_back(syntactic_semigroup(X).S);
    }
    std::mt19937_64 rng(41);
    while (result.size() < 25) {
      auto S = random_transformation_semigroup(
          rng, test::ab(), 3 + result.size() % 2, 40);
      if (S.size() <= 40) {
        result.push_back(std::move(S));
      }
    }
    return result;
  }

}  // namespace shiftcat::test

#endif  // SHIFTCAT_TESTS_TEST_HELPERS_HPP_
