// shiftcat - symbolic dynamics, block codes and Karoubi envelopes
//
// Rank-1 omega-terms w_0 u_1^(w+q_1) w_1 ... u_r^(w+q_r) w_r: parsing and
// printing, a canonical form, finite unfoldings, evaluation in finite
// semigroups, block codes, symbol expansion and contraction.

#ifndef SHIFTCAT_PSEUDOWORDS_HPP_
#define SHIFTCAT_PSEUDOWORDS_HPP_

#include <algorithm>  // for max, all_of
#include <cctype>     // for isdigit, isspace
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <cstdlib>    // for llabs
#include <optional>   // for optional
#include <random>     // for mt19937_64
#include <string>     // for string
#include <utility>    // for move
#include <vector>     // for vector

#include "codes.hpp"
#include "errors.hpp"
#include "semigroups.hpp"
#include "shifts.hpp"
#include "words.hpp"

namespace shiftcat {

  // base^(omega + shift)
  struct Power {
    Word      base;
    long long shift = 0;

    bool operator==(Power const&) const = default;
  };

  class OmegaTerm {
   public:
    OmegaTerm() : _words(1) {}

    explicit OmegaTerm(Word w) : _words{std::move(w)} {}

    static OmegaTerm power(Word base, long long shift = 0) {
      detail::require(!base.empty(),
                      ErrorKind::invalid_argument,
                      "power of the empty word");
      OmegaTerm t;
      t._powers.push_back({std::move(base), shift});
      t._words.emplace_back();
      return t;
    }

    [[nodiscard]] std::vector<Word> const& words() const noexcept {
      return _words;
    }
    [[nodiscard]] std::vector<Power> const& powers() const noexcept {
      return _powers;
    }
    [[nodiscard]] bool is_word() const noexcept {
      return _powers.empty();
    }
    [[nodiscard]] bool empty() const noexcept {
      return is_word() && _words[0].empty();
    }
    [[nodiscard]] Word const& as_word() const {
      detail::require(is_word(),
                      ErrorKind::invalid_argument,
                      "term is not a finite word");
      return _words[0];
    }

    OmegaTerm& append(Word const& w) {
      _words.back().insert(_words.back().end(), w.begin(), w.end());
      return *this;
    }

    OmegaTerm& append(OmegaTerm const& t) {
      append(t._words[0]);
      for (std::size_t i = 0; i < t._powers.size(); ++i) {
        _powers.push_back(t._powers[i]);
        _words.push_back(t._words[i + 1]);
      }
      return *this;
    }

    OmegaTerm& append_power(Word base, long long shift = 0) {
      return append(power(std::move(base), shift));
    }

    // Every letter occurring in the term.
    template <typename F>
    void for_each_letter(F&& f) const {
      for (auto const& w : _words)
        for (auto a : w)
          f(a);
      for (auto const& p : _powers)
        for (auto a : p.base)
          f(a);
    }

    [[nodiscard]] long long max_abs_shift() const {
      long long m = 0;
      for (auto const& p : _powers) {
        m = std::max(m, std::llabs(p.shift));
      }
      return m;
    }

    bool operator==(OmegaTerm const&) const = default;

   private:
    friend OmegaTerm canonical(OmegaTerm const&);
    std::vector<Word>  _words;   // r + 1 words
    std::vector<Power> _powers;  // r powers
  };

  inline OmegaTerm concat(OmegaTerm s, OmegaTerm const& t) {
    s.append(t);
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Canonical form
  ////////////////////////////////////////////////////////////////////////

  // Bases become primitive roots, (z^c)^(w+q) = z^(w+cq). Then, junction by
  // junction from the left, letters move right into the next power,
  // x a (y a)^(w+q) = x (a y)^(w+q) a, shedding copies of the previous base
  // u^(w+p) = u^(w+p-1) u when the word in between runs out; two powers of
  // one base with nothing in between merge, u^(w+p) u^(w+q) = u^(w+p+q).
  // Finally leading copies of a base after its power are absorbed. Pushing
  // stops after |u| + |v| letters unless the bases meet, by Fine and Wilf.
  inline OmegaTerm canonical(OmegaTerm const& t) {
    std::vector<Word>  words  = t._words;
    std::vector<Power> powers = t._powers;
    for (auto& p : powers) {
      auto root = primitive_root(p.base);
      p.base    = std::move(root.root);
      p.shift *= static_cast<long long>(root.exponent);
    }
    std::size_t i = 0;
    while (i < powers.size()) {
      Word& left = words[i];
      bool  merged = false;
      while (true) {
        Word& base = powers[i].base;
        if (left.empty()) {
          if (i == 0) {
            break;
          }
          Power& prev = powers[i - 1];
          if (prev.base == base) {
            prev.shift += powers[i].shift;
            powers.erase(powers.begin() + static_cast<std::ptrdiff_t>(i));
            Word after = std::move(words[i + 1]);
            words.erase(words.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            words[i] = std::move(after);
            merged   = true;
            break;
          }
          if (prev.base.back() != base.back()) {
            break;
          }
          prev.shift -= 1;
          left = prev.base;
        }
        if (left.back() != base.back()) {
          break;
        }
        Letter a = left.back();
        left.pop_back();
        base.pop_back();
        base.insert(base.begin(), a);
        words[i + 1].insert(words[i + 1].begin(), a);
      }
      if (merged) {
        // The merged power absorbs what follows and meets its next
        // junction again.
        --i;
      }
      Word& right = words[i + 1];
      while (starts_with(right, powers[i].base)) {
        right.erase(right.begin(),
                    right.begin()
                        + static_cast<std::ptrdiff_t>(powers[i].base.size()));
        ++powers[i].shift;
      }
      ++i;
    }
    OmegaTerm result;
    result._words  = std::move(words);
    result._powers = std::move(powers);
    return result;
  }

  inline bool canonical_equal(OmegaTerm const& s, OmegaTerm const& t) {
    return canonical(s) == canonical(t);
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing and printing
  ////////////////////////////////////////////////////////////////////////

  // A with a fresh symbol appended for the diamond.
  inline Alphabet with_diamond(Alphabet A, std::string const& token = "o") {
    A.add(token);
    return A;
  }

  namespace detail {
    inline long long parse_exponent_shift(std::string_view s,
                                          std::size_t&     pos,
                                          std::string_view text) {
      auto bad = [&]() {
        fail(ErrorKind::parse,
             "bad exponent at position " + std::to_string(pos) + " of '"
                 + std::string(text) + "'");
      };
      if (pos < s.size() && s[pos] == 'w') {
        ++pos;
        return 0;
      }
      if (pos >= s.size() || s[pos] != '(') {
        bad();
      }
      ++pos;
      if (pos >= s.size() || s[pos] != 'w') {
        bad();
      }
      ++pos;
      long long sign = 0;
      if (pos < s.size() && s[pos] == '+') {
        sign = 1;
      } else if (pos < s.size() && s[pos] == '-') {
        sign = -1;
      } else if (pos < s.size() && s[pos] == ')') {
        ++pos;
        return 0;
      } else {
        bad();
      }
      ++pos;
      long long value  = 0;
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        value = value * 10 + (s[pos] - '0');
        ++pos;
      }
      if (pos == start || pos >= s.size() || s[pos] != ')') {
        bad();
      }
      ++pos;
      return sign * value;
    }
  }  // namespace detail

  // Letters juxtaposed; powers written (body)^w, (body)^(w+q), (body)^(w-q);
  // a finite exponent (body)^n repeats the body.
  inline OmegaTerm parse_term(Alphabet const& A, std::string_view text) {
    OmegaTerm   t;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t open = text.find_first_of("()", pos);
      t.append(A.parse(text.substr(pos, open == std::string_view::npos
                                            ? std::string_view::npos
                                            : open - pos)));
      if (open == std::string_view::npos) {
        break;
      }
      detail::require(text[open] == '(',
                      ErrorKind::parse,
                      "unbalanced ')' in '" + std::string(text) + "'");
      std::size_t close = text.find_first_of("()", open + 1);
      detail::require(close != std::string_view::npos,
                      ErrorKind::parse,
                      "unbalanced '(' in '" + std::string(text) + "'");
      detail::require(text[close] == ')',
                      ErrorKind::parse,
                      "nested powers are not supported: '" + std::string(text)
                          + "'");
      Word body = A.parse(text.substr(open + 1, close - open - 1));
      pos       = close + 1;
      while (pos < text.size() && text[pos] == ' ') {
        ++pos;
      }
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        detail::require(!body.empty(),
                        ErrorKind::parse,
                        "power of the empty word in '" + std::string(text)
                            + "'");
        if (pos < text.size()
            && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          std::size_t n = 0;
          while (pos < text.size()
                 && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            n = n * 10 + static_cast<std::size_t>(text[pos] - '0');
            ++pos;
          }
          t.append(shiftcat::power(body, n));
        } else {
          long long q = detail::parse_exponent_shift(text, pos, text);
          t.append_power(std::move(body), q);
        }
      } else {
        t.append(body);
      }
    }
    return t;
  }

  inline std::string format_term(Alphabet const& A, OmegaTerm const& t) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < t.words().size(); ++i) {
      if (!t.words()[i].empty()) {
        parts.push_back(A.format(t.words()[i]));
      }
      if (i < t.powers().size()) {
        auto const& p = t.powers()[i];
        std::string s = "(" + A.format(p.base) + ")^";
        if (p.shift == 0) {
          s += "w";
        } else {
          s += "(w" + std::string(p.shift > 0 ? "+" : "-")
               + std::to_string(std::llabs(p.shift)) + ")";
        }
        parts.push_back(std::move(s));
      }
    }
    std::string result;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      result += (i ? " " : "") + parts[i];
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite unfoldings, prefixes, suffixes and factors
  ////////////////////////////////////////////////////////////////////////

  // Replace every u^(w+q) by u^(M+q).
  inline Word unfold(OmegaTerm const& t, long long M) {
    Word result = t.words()[0];
    for (std::size_t i = 0; i < t.powers().size(); ++i) {
      auto const& p = t.powers()[i];
      detail::require(M + p.shift >= 0,
                      ErrorKind::invalid_argument,
                      "unfolding exponent too small");
      result = concat(result, power(p.base, static_cast<std::size_t>(M + p.shift)));
      result = concat(result, t.words()[i + 1]);
    }
    return result;
  }

  // Unfolding exponent that exposes every factor of length at most k.
  inline long long unfolding_exponent(OmegaTerm const& t, std::size_t k) {
    return static_cast<long long>(k) + t.max_abs_shift() + 2;
  }

  inline Word term_prefix(OmegaTerm const& t, std::size_t k) {
    if (t.is_word()) {
      detail::require(t.as_word().size() >= k,
                      ErrorKind::too_short,
                      "word shorter than the requested prefix");
      return prefix(t.as_word(), k);
    }
    return prefix(unfold(t, unfolding_exponent(t, k)), k);
  }

  inline Word term_suffix(OmegaTerm const& t, std::size_t k) {
    if (t.is_word()) {
      detail::require(t.as_word().size() >= k,
                      ErrorKind::too_short,
                      "word shorter than the requested suffix");
      return suffix(t.as_word(), k);
    }
    return suffix(unfold(t, unfolding_exponent(t, k)), k);
  }

  inline Word term_prefix_k(OmegaTerm const& t, std::size_t k) {
    return term_prefix(t, k);
  }
  inline Word term_suffix_k(OmegaTerm const& t, std::size_t k) {
    return term_suffix(t, k);
  }

  inline WordSet term_factors(OmegaTerm const& t, std::size_t k) {
    return factors_up_to(unfold(t, unfolding_exponent(t, k)), k);
  }

  inline bool mirage_membership(OmegaTerm const&         t,
                                ShiftPresentation const& X,
                                std::size_t              k) {
    auto const Y = detail::essential(X);
    for (auto const& w : term_factors(t, k)) {
      if (Y.read(Y.all_vertices(), w).empty()) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  // assign[a] is the image of letter a; powers are read with omega_plus.
  inline Element eval(OmegaTerm const&            t,
                      FiniteSemigroup const&      S,
                      std::vector<Element> const& assign) {
    std::optional<Element> result;
    auto times = [&](Element x) {
      result = result ? S.product(*result, x) : x;
    };
    auto word_value = [&](Word const& w) {
      std::optional<Element> v;
      for (auto a : w) {
        detail::require(a < assign.size(),
                        ErrorKind::unassigned_letter,
                        "letter " + std::to_string(a) + " has no image");
        v = v ? S.product(*v, assign[a]) : assign[a];
      }
      return v;
    };
    for (std::size_t i = 0; i < t.words().size(); ++i) {
      if (auto v = word_value(t.words()[i])) {
        times(*v);
      }
      if (i < t.powers().size()) {
        auto const& p = t.powers()[i];
        times(omega_plus(S, *word_value(p.base), p.shift));
      }
    }
    detail::require(result.has_value(),
                    ErrorKind::invalid_argument,
                    "the empty term has no value in a semigroup");
    return *result;
  }

  inline Element eval(OmegaTerm const& t, FiniteSemigroup const& S) {
    return eval(t, S, S.generators());
  }

  // Membership of the image of t in eta(L(X)), in the syntactic semigroup.
  inline bool closure_membership(OmegaTerm const&          t,
                                 SyntacticSemigroup const& syn) {
    return syn.accepts(eval(t, syn.S));
  }

  inline bool closure_membership(OmegaTerm const& t, ShiftPresentation const& X) {
    return closure_membership(t, syntactic_semigroup(X));
  }

  struct TestSemigroup {
    std::string          name;
    FiniteSemigroup      S;
    std::vector<Element> assign;
  };

  struct QuotientVerdict {
    // Equality in every test is not a proof of equality.
    bool        equal_in_all = true;
    std::string distinguished_by;
  };

  inline QuotientVerdict quotient_equal(OmegaTerm const&                  s,
                                        OmegaTerm const&                  t,
                                        std::vector<TestSemigroup> const& tests) {
    for (auto const& T : tests) {
      if (eval(s, T.S, T.assign) != eval(t, T.S, T.assign)) {
        return {false, T.name};
      }
    }
    return {};
  }

  // count random transformation semigroups over A with at most max_size
  // elements, letters assigned to generators.
  inline std::vector<TestSemigroup> random_tests(std::mt19937_64& rng,
                                                 Alphabet const&  A,
                                                 std::size_t      count,
                                                 std::size_t      max_size = 50) {
    std::vector<TestSemigroup> tests;
    for (std::size_t i = 0; i < count; ++i) {
      auto S = random_transformation_semigroup(rng, A, 3 + i % 3, max_size);
      auto g = S.generators();
      tests.push_back({"random-" + std::to_string(i), std::move(S), std::move(g)});
    }
    return tests;
  }

  inline TestSemigroup syntactic_test(std::string const&       name,
                                      ShiftPresentation const& X) {
    auto syn = syntactic_semigroup(X);
    auto g   = syn.S.generators();
    return {name, std::move(syn.S), std::move(g)};
  }

  // The syntactic semigroup of X and count random transformation semigroups
  // over its alphabet.
  inline std::vector<TestSemigroup> default_tests(ShiftPresentation const& X,
                                                  std::uint64_t            seed,
                                                  std::size_t count = 3) {
    std::vector<TestSemigroup> tests{syntactic_test("S(X)", X)};
    std::mt19937_64            rng(seed);
    for (auto& T : random_tests(rng, X.alphabet(), count)) {
      tests.push_back(std::move(T));
    }
    return tests;
  }

  ////////////////////////////////////////////////////////////////////////
  // Block codes on terms
  ////////////////////////////////////////////////////////////////////////

  // u^(w+q) with |u| < c becomes (u^r)^(w+q') u^s where r = ceil(c / |u|)
  // and q = r q' + s, 0 <= s < r.
  inline OmegaTerm inflate_bases(OmegaTerm const& t, std::size_t c) {
    OmegaTerm result(t.words()[0]);
    for (std::size_t i = 0; i < t.powers().size(); ++i) {
      auto const& p = t.powers()[i];
      if (p.base.size() >= c || c == 0) {
        result.append_power(p.base, p.shift);
      } else {
        auto const r = static_cast<long long>((c + p.base.size() - 1)
                                              / p.base.size());
        long long q1 = p.shift / r;
        long long s  = p.shift % r;
        if (s < 0) {
          s += r;
          --q1;
        }
        result.append_power(power(p.base, static_cast<std::size_t>(r)), q1);
        result.append(power(p.base, static_cast<std::size_t>(s)));
      }
      result.append(t.words()[i + 1]);
    }
    return result;
  }

  // With c = N - 1 and ctx the last c letters of what was read so far, a
  // word w contributes code(ctx w) and a power u^(w+q) with |u| >= c
  // contributes code(ctx u) code(t_c(u) u)^(w+q-1), by the product
  // identity code(xy) = code(x) code(t_c(x) y).
  namespace detail {
    // Before canonicalization: unfolding the result with exponent M agrees
    // with the code of the unfolding of inflate_bases(t, N - 1).
    inline OmegaTerm term_block_code_raw(BlockMap const& Phi,
                                         OmegaTerm const& t) {
      std::size_t const c = Phi.window() - 1;
      if (t.is_word()) {
        detail::require(t.as_word().size() >= Phi.window(),
                        ErrorKind::too_short,
                        "word shorter than the window");
        return OmegaTerm(word_code(Phi, t.as_word()));
      }
      OmegaTerm const s = inflate_bases(t, c);
      OmegaTerm       result;
      Word            ctx;
      for (std::size_t i = 0; i < s.words().size(); ++i) {
        Word w = concat(ctx, s.words()[i]);
        result.append(word_code(Phi, w));
        ctx = suffix(w, c);
        if (i < s.powers().size()) {
          auto const& p = s.powers()[i];
          result.append(word_code(Phi, concat(ctx, p.base)));
          Word tail = suffix(p.base, c);
          result.append_power(word_code(Phi, concat(tail, p.base)), p.shift - 1);
          ctx = std::move(tail);
        }
      }
      return result;
    }
  }  // namespace detail

  inline OmegaTerm term_block_code(BlockMap const& Phi, OmegaTerm const& t) {
    return canonical(detail::term_block_code_raw(Phi, t));
  }

  ////////////////////////////////////////////////////////////////////////
  // Symbol expansion and contraction
  ////////////////////////////////////////////////////////////////////////

  // The letter alpha becomes alpha diamond; diamond is the letter |A| of
  // the alphabet B = A + {diamond}.
  inline Word expand_word(Word const& w, Letter alpha, Letter diamond) {
    Word result;
    for (auto a : w) {
      result.push_back(a);
      if (a == alpha) {
        result.push_back(diamond);
      }
    }
    return result;
  }

  inline Word contract_word(Word const& w, Letter diamond) {
    Word result;
    for (auto a : w) {
      if (a != diamond) {
        result.push_back(a);
      }
    }
    return result;
  }

  inline OmegaTerm term_expand(OmegaTerm const& t,
                               Letter           alpha,
                               Letter           diamond) {
    OmegaTerm result(expand_word(t.words()[0], alpha, diamond));
    for (std::size_t i = 0; i < t.powers().size(); ++i) {
      result.append_power(expand_word(t.powers()[i].base, alpha, diamond),
                          t.powers()[i].shift);
      result.append(expand_word(t.words()[i + 1], alpha, diamond));
    }
    return canonical(result);
  }

  // Deletes the diamond; nothing is returned for a term made of diamonds
  // only.
  inline std::optional<OmegaTerm> term_contract(OmegaTerm const& t,
                                                Letter           diamond) {
    OmegaTerm result(contract_word(t.words()[0], diamond));
    bool      infinite = false;
    for (std::size_t i = 0; i < t.powers().size(); ++i) {
      Word base = contract_word(t.powers()[i].base, diamond);
      if (!base.empty()) {
        result.append_power(std::move(base), t.powers()[i].shift);
        infinite = true;
      }
      result.append(contract_word(t.words()[i + 1], diamond));
    }
    if (!infinite && result.empty()) {
      return std::nullopt;
    }
    return canonical(result);
  }

  // w is in E(A^+) iff it does not start with diamond, does not end with
  // alpha, and has no factor alpha x with x != diamond nor x diamond with
  // x != alpha.
  inline bool image_E_membership(Word const& w, Letter alpha, Letter diamond) {
    detail::require(!w.empty(),
                    ErrorKind::invalid_argument,
                    "image membership needs a nonempty word");
    if (w.front() == diamond || w.back() == alpha) {
      return false;
    }
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if ((w[i] == alpha) != (w[i + 1] == diamond)) {
        return false;
      }
    }
    return true;
  }

  // The same local conditions read on the first letter, the last letter and
  // the factors of length 2 of the term.
  inline bool image_E_membership(OmegaTerm const& t,
                                 Letter           alpha,
                                 Letter           diamond) {
    if (t.is_word()) {
      return image_E_membership(t.as_word(), alpha, diamond);
    }
    if (term_prefix(t, 1)[0] == diamond || term_suffix(t, 1)[0] == alpha) {
      return false;
    }
    for (auto const& f : term_factors(t, 2)) {
      if (f.size() == 2 && (f[0] == alpha) != (f[1] == diamond)) {
        return false;
      }
    }
    return true;
  }

  // Removes the first letter. A leading power u^(w+q) with u = a v is
  // rewritten a (v a)^(w+q-1) v first.
  inline OmegaTerm strip_first(OmegaTerm const& t) {
    if (t.is_word()) {
      detail::require(!t.as_word().empty(),
                      ErrorKind::too_short,
                      "cannot strip the empty word");
      return OmegaTerm(Word(t.as_word().begin() + 1, t.as_word().end()));
    }
    if (!t.words().front().empty()) {
      OmegaTerm result(Word(t.words()[0].begin() + 1, t.words()[0].end()));
      for (std::size_t i = 0; i < t.powers().size(); ++i) {
        result.append_power(t.powers()[i].base, t.powers()[i].shift);
        result.append(t.words()[i + 1]);
      }
      return canonical(result);
    }
    Power const& p = t.powers().front();
    Word const   v(p.base.begin() + 1, p.base.end());
    OmegaTerm    result;
    result.append_power(concat(v, Word{p.base.front()}), p.shift - 1);
    result.append(v).append(t.words()[1]);
    for (std::size_t i = 1; i < t.powers().size(); ++i) {
      result.append_power(t.powers()[i].base, t.powers()[i].shift);
      result.append(t.words()[i + 1]);
    }
    return canonical(result);
  }

  // Removes the last letter; u^(w+q) with u = v b becomes v (b v)^(w+q-1) b.
  inline OmegaTerm strip_last(OmegaTerm const& t) {
    if (t.is_word()) {
      detail::require(!t.as_word().empty(),
                      ErrorKind::too_short,
                      "cannot strip the empty word");
      return OmegaTerm(Word(t.as_word().begin(), t.as_word().end() - 1));
    }
    std::size_t const r = t.powers().size();
    OmegaTerm         result(t.words()[0]);
    for (std::size_t i = 0; i + 1 < r; ++i) {
      result.append_power(t.powers()[i].base, t.powers()[i].shift);
      result.append(t.words()[i + 1]);
    }
    Power const& p = t.powers().back();
    Word const&  w = t.words().back();
    if (!w.empty()) {
      result.append_power(p.base, p.shift);
      result.append(Word(w.begin(), w.end() - 1));
    } else {
      Word const v(p.base.begin(), p.base.end() - 1);
      result.append(v).append_power(concat(Word{p.base.back()}, v), p.shift - 1);
    }
    return canonical(result);
  }

  // Removes the first and the last letter.
  inline OmegaTerm strip_boundary(OmegaTerm const& u) {
    detail::require(!u.is_word() || u.as_word().size() >= 2,
                    ErrorKind::too_short,
                    "cannot strip a word of length < 2");
    return strip_last(strip_first(u));
  }

  ////////////////////////////////////////////////////////////////////////
  // Random terms
  ////////////////////////////////////////////////////////////////////////

  inline OmegaTerm random_term(std::mt19937_64& rng,
                               std::size_t      alphabet_size,
                               std::size_t      max_powers = 3,
                               std::size_t      max_len    = 3,
                               long long        max_shift  = 2) {
    auto word = [&](std::size_t min_len) {
      Word w(min_len + rng() % (max_len - min_len + 1));
      for (auto& a : w) {
        a = static_cast<Letter>(rng() % alphabet_size);
      }
      return w;
    };
    OmegaTerm   t(word(0));
    std::size_t r = rng() % (max_powers + 1);
    for (std::size_t i = 0; i < r; ++i) {
      long long q = static_cast<long long>(rng() % (2 * max_shift + 1)) - max_shift;
      t.append_power(word(1), q);
      t.append(word(0));
    }
    return t;
  }

}  // namespace shiftcat

#endif  // SHIFTCAT_PSEUDOWORDS_HPP_
