// shiftcat - symbolic dynamics, block codes and Karoubi envelopes
//
// Alphabets, finite words, prefixes/suffixes, factors, primitivity and
// conjugacy of words.

#ifndef SHIFTCAT_WORDS_HPP_
#define SHIFTCAT_WORDS_HPP_

#include <algorithm>      // for equal, min, rotate
#include <cstddef>        // for size_t
#include <cstdint>        // for uint32_t
#include <optional>       // for optional
#include <set>            // for set
#include <string>         // for string
#include <string_view>    // for string_view
#include <unordered_map>  // for unordered_map
#include <utility>        // for move
#include <vector>         // for vector

#include "errors.hpp"

namespace shiftcat {

  using Letter = std::uint32_t;
  using Word   = std::vector<Letter>;

  // Shortlex order: shorter words first, then lexicographic by letter index
  // (which is the input order of the alphabet).
  struct ShortLex {
    bool operator()(Word const& x, Word const& y) const noexcept {
      if (x.size() != y.size()) {
        return x.size() < y.size();
      }
      return x < y;
    }
  };

  using WordSet = std::set<Word, ShortLex>;

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  class Alphabet {
   public:
    Alphabet() = default;

    explicit Alphabet(std::vector<std::string> symbols)
        : _symbols(std::move(symbols)) {
      detail::require(!_symbols.empty(),
                      ErrorKind::invalid_argument,
                      "an alphabet must be nonempty");
      for (Letter i = 0; i < _symbols.size(); ++i) {
        detail::require(!_symbols[i].empty(),
                        ErrorKind::invalid_argument,
                        "empty symbol name");
        auto [it, inserted] = _index.emplace(_symbols[i], i);
        detail::require(inserted,
                        ErrorKind::invalid_argument,
                        "duplicate symbol '" + _symbols[i] + "'");
      }
    }

    // One symbol per character, e.g. from_chars("ab").
    static Alphabet from_chars(std::string_view chars) {
      std::vector<std::string> symbols;
      for (char c : chars) {
        symbols.emplace_back(1, c);
      }
      return Alphabet(std::move(symbols));
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _symbols.size();
    }

    [[nodiscard]] std::string const& name(Letter a) const {
      detail::require(a < _symbols.size(),
                      ErrorKind::invalid_argument,
                      "letter index out of range");
      return _symbols[a];
    }

    [[nodiscard]] std::vector<std::string> const& symbols() const noexcept {
      return _symbols;
    }

    [[nodiscard]] std::optional<Letter> find(std::string_view sym) const {
      auto it = _index.find(std::string(sym));
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    [[nodiscard]] Letter letter(std::string_view sym) const {
      auto a = find(sym);
      detail::require(a.has_value(),
                      ErrorKind::parse,
                      "unknown symbol '" + std::string(sym) + "'");
      return *a;
    }

    [[nodiscard]] bool contains(Word const& w) const noexcept {
      return std::all_of(
          w.begin(), w.end(), [this](Letter a) { return a < size(); });
    }

    // Adds a fresh symbol and returns its letter.
    Letter add(std::string sym) {
      detail::require(!find(sym).has_value(),
                      ErrorKind::invalid_argument,
                      "symbol '" + sym + "' is not fresh");
      Letter a = static_cast<Letter>(_symbols.size());
      _index.emplace(sym, a);
      _symbols.push_back(std::move(sym));
      return a;
    }

    // Words are read by greedy longest match of symbol names; whitespace
    // between symbols is ignored.
    [[nodiscard]] Word parse(std::string_view text) const {
      std::size_t longest = 0;
      for (auto const& s : _symbols) {
        longest = std::max(longest, s.size());
      }
      Word        result;
      std::size_t pos = 0;
      while (pos < text.size()) {
        if (text[pos] == ' ' || text[pos] == '\t') {
          ++pos;
          continue;
        }
        bool found = false;
        for (std::size_t len = std::min(longest, text.size() - pos); len > 0;
             --len) {
          auto a = find(text.substr(pos, len));
          if (a) {
            result.push_back(*a);
            pos += len;
            found = true;
            break;
          }
        }
        detail::require(found,
                        ErrorKind::parse,
                        "cannot read a symbol at position "
                            + std::to_string(pos) + " of '"
                            + std::string(text) + "'");
      }
      return result;
    }

    [[nodiscard]] std::string format(Word const& w) const {
      bool spaced = !concatenation_is_unambiguous();
      std::string result;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (spaced && i > 0) {
          result += ' ';
        }
        result += name(w[i]);
      }
      return result;
    }

    [[nodiscard]] bool concatenation_is_unambiguous() const noexcept {
      bool single = std::all_of(_symbols.begin(),
                                _symbols.end(),
                                [](auto const& s) { return s.size() == 1; });
      bool bracketed
          = std::all_of(_symbols.begin(), _symbols.end(), [](auto const& s) {
              return s.size() >= 2 && s.front() == '['
                     && s.back() == ']';
            });
      return single || bracketed;
    }

    bool operator==(Alphabet const& that) const {
      return _symbols == that._symbols;
    }

   private:
    std::vector<std::string>                _symbols;
    std::unordered_map<std::string, Letter> _index;
  };

  ////////////////////////////////////////////////////////////////////////
  // Basic word operations
  ////////////////////////////////////////////////////////////////////////

  inline Word concat(Word x, Word const& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
  }

  inline Word power(Word const& w, std::size_t m) {
    Word result;
    result.reserve(w.size() * m);
    for (std::size_t i = 0; i < m; ++i) {
      result.insert(result.end(), w.begin(), w.end());
    }
    return result;
  }

  // The prefix of length k, or u itself when k exceeds |u|.
  inline Word prefix(Word const& u, std::size_t k) {
    return Word(u.begin(), u.begin() + std::min(k, u.size()));
  }

  inline Word suffix(Word const& u, std::size_t k) {
    return Word(u.end() - std::min(k, u.size()), u.end());
  }

  inline Word prefix_k(Word const& u, std::size_t k) {
    return prefix(u, k);
  }
  inline Word suffix_k(Word const& u, std::size_t k) {
    return suffix(u, k);
  }

  inline bool is_factor(Word const& v, Word const& w) {
    return std::search(w.begin(), w.end(), v.begin(), v.end()) != w.end()
           || v.empty();
  }

  inline bool starts_with(Word const& w, Word const& p) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
  }

  inline bool ends_with(Word const& w, Word const& s) {
    return s.size() <= w.size()
           && std::equal(s.begin(), s.end(), w.end() - s.size());
  }

  // Nonempty factors of u of length at most k.
  inline WordSet factors_up_to(Word const& u, std::size_t k) {
    WordSet result;
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (std::size_t len = 1; len <= k && i + len <= u.size(); ++len) {
        result.emplace(u.begin() + i, u.begin() + i + len);
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Primitivity and conjugacy
  ////////////////////////////////////////////////////////////////////////

  struct PrimitiveRoot {
    Word        root;
    std::size_t exponent;
  };

  inline PrimitiveRoot primitive_root(Word const& w) {
    detail::require(!w.empty(),
                    ErrorKind::invalid_argument,
                    "the empty word has no primitive root");
    std::size_t const n = w.size();
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d != 0) {
        continue;
      }
      bool periodic = true;
      for (std::size_t i = d; i < n && periodic; ++i) {
        periodic = w[i] == w[i - d];
      }
      if (periodic) {
        return {prefix(w, d), n / d};
      }
    }
    return {w, 1};  // unreachable, d = n always succeeds
  }

  inline bool is_primitive(Word const& v) {
    return primitive_root(v).exponent == 1;
  }

  inline Word rotate_left(Word w, std::size_t i) {
    if (!w.empty()) {
      std::rotate(w.begin(), w.begin() + (i % w.size()), w.end());
    }
    return w;
  }

  // All cyclic rotations v_[i+1..n] v_[1..i], i = 0, 1, ..., in order of
  // first appearance.
  inline std::vector<Word> conjugates(Word const& v) {
    detail::require(!v.empty(),
                    ErrorKind::invalid_argument,
                    "the empty word has no conjugates");
    // The rotations repeat with period |root|.
    std::size_t const  period = primitive_root(v).root.size();
    std::vector<Word> result;
    result.reserve(period);
    for (std::size_t i = 0; i < period; ++i) {
      result.push_back(rotate_left(v, i));
    }
    return result;
  }

  // Least conjugate of v: the necklace representative of its class.
  inline Word least_conjugate(Word const& v) {
    auto all = conjugates(v);
    return *std::min_element(all.begin(), all.end());
  }

  // Index i such that rotate_left(v, i) is the least conjugate.
  inline std::size_t least_rotation_index(Word const& v) {
    auto        all  = conjugates(v);
    std::size_t best = 0;
    for (std::size_t i = 1; i < all.size(); ++i) {
      if (all[i] < all[best]) {
        best = i;
      }
    }
    return best;
  }

  namespace detail {
    // Calls f on every word over {0, ..., k - 1} of length exactly n.
    template <typename F>
    void for_each_word(std::size_t k, std::size_t n, F&& f) {
      Word w(n, 0);
      while (true) {
        f(static_cast<Word const&>(w));
        std::size_t i = n;
        while (i > 0 && w[i - 1] + 1 == k) {
          w[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          return;
        }
        ++w[i - 1];
      }
    }

    inline bool is_positive_power_of(Word const& w, Word const& v) {
      if (w.empty() || w.size() % v.size() != 0) {
        return false;
      }
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != v[i % v.size()]) {
          return false;
        }
      }
      return true;
    }
  }  // namespace detail

  // Enumerates the words w = v^j q with j >= min_power, |q| < |v|,
  // |w| <= bound, that end with v^min_power, and returns those that are not
  // in v^+. With min_power = 2 the result is empty for every primitive v.
  // With min_power = 1 (the weaker statement) it need not be.
  inline std::vector<Word> primitivity_inclusion_violations(
      Word const& v,
      std::size_t bound,
      std::size_t alphabet_size,
      std::size_t min_power = 2) {
    detail::require(!v.empty() && is_primitive(v),
                    ErrorKind::invalid_argument,
                    "v must be a primitive word");
    detail::require(min_power >= 1,
                    ErrorKind::invalid_argument,
                    "min_power must be positive");
    WordSet     violations;
    Word const  tail = power(v, min_power);
    std::size_t n    = v.size();
    for (std::size_t j = min_power; j * n <= bound; ++j) {
      Word head = power(v, j);
      for (std::size_t len = 0; len < n && j * n + len <= bound; ++len) {
        detail::for_each_word(alphabet_size, len, [&](Word const& q) {
          Word w = concat(head, q);
          if (ends_with(w, tail) && !detail::is_positive_power_of(w, v)) {
            violations.insert(std::move(w));
          }
        });
      }
    }
    return {violations.begin(), violations.end()};
  }

  inline std::vector<Word> check_primitivity_inclusion(
      Word const& v,
      std::size_t bound,
      std::size_t alphabet_size) {
    return primitivity_inclusion_violations(v, bound, alphabet_size, 2);
  }

}  // namespace shiftcat

#endif  // SHIFTCAT_WORDS_HPP_
