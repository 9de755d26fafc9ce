// shiftcat - symbolic dynamics, block codes and Karoubi envelopes
//
// Block maps, central block maps, the word codes they induce, higher block
// codes with their first-letter inverse, composition, and images of
// presentations and periodic points.

#ifndef SHIFTCAT_CODES_HPP_
#define SHIFTCAT_CODES_HPP_

#include <cstddef>     // for size_t
#include <functional>  // for function
#include <map>         // for map
#include <string>      // for string
#include <utility>     // for move
#include <vector>      // for vector

#include "errors.hpp"
#include "shifts.hpp"
#include "words.hpp"

namespace shiftcat {

  namespace detail {
    constexpr std::size_t max_table_size = std::size_t(1) << 24;

    inline std::size_t checked_power(std::size_t base, std::size_t exp) {
      std::size_t result = 1;
      for (std::size_t i = 0; i < exp; ++i) {
        if (result > max_table_size / base) {
          fail(ErrorKind::size_limit, "block map table too large");
        }
        result *= base;
      }
      return result;
    }

    // Base-|A| encoding of a window, first letter most significant.
    template <typename It>
    std::size_t encode(It first, It last, std::size_t base) {
      std::size_t x = 0;
      for (; first != last; ++first) {
        x = x * base + *first;
      }
      return x;
    }

    inline Word decode(std::size_t x, std::size_t base, std::size_t length) {
      Word w(length);
      for (std::size_t i = length; i-- > 0;) {
        w[i] = static_cast<Letter>(x % base);
        x /= base;
      }
      return w;
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // BlockMap
  ////////////////////////////////////////////////////////////////////////

  // A map A^N -> B read on coordinates i - m, ..., i + n with m + n + 1 = N.
  class BlockMap {
   public:
    BlockMap() = default;

    BlockMap(Alphabet            source,
             Alphabet            target,
             std::size_t         memory,
             std::size_t         anticipation,
             std::vector<Letter> table)
        : _source(std::move(source)),
          _target(std::move(target)),
          _memory(memory),
          _anticipation(anticipation),
          _table(std::move(table)) {
      detail::require(_table.size()
                          == detail::checked_power(_source.size(), window()),
                      ErrorKind::invalid_argument,
                      "block map table must be defined on all of A^N");
      for (auto b : _table) {
        detail::require(b < _target.size(),
                        ErrorKind::alphabet_mismatch,
                        "block map value not in the target alphabet");
      }
    }

    template <typename F>
    static BlockMap from_function(Alphabet    source,
                                  Alphabet    target,
                                  std::size_t memory,
                                  std::size_t anticipation,
                                  F&&         f) {
      std::size_t const   N = memory + anticipation + 1;
      std::size_t const   size = detail::checked_power(source.size(), N);
      std::vector<Letter> table(size);
      for (std::size_t x = 0; x < size; ++x) {
        table[x] = f(detail::decode(x, source.size(), N));
      }
      return BlockMap(std::move(source),
                      std::move(target),
                      memory,
                      anticipation,
                      std::move(table));
    }

    [[nodiscard]] Alphabet const& source() const noexcept {
      return _source;
    }
    [[nodiscard]] Alphabet const& target() const noexcept {
      return _target;
    }
    [[nodiscard]] std::size_t window() const noexcept {
      return _memory + _anticipation + 1;
    }
    [[nodiscard]] std::size_t memory() const noexcept {
      return _memory;
    }
    [[nodiscard]] std::size_t anticipation() const noexcept {
      return _anticipation;
    }
    [[nodiscard]] std::vector<Letter> const& table() const noexcept {
      return _table;
    }
    [[nodiscard]] bool is_central() const noexcept {
      return _memory == _anticipation;
    }

    template <typename It>
    [[nodiscard]] Letter apply(It first) const {
      return _table[detail::encode(first, first + window(), _source.size())];
    }

    [[nodiscard]] Letter operator()(Word const& w) const {
      detail::require(w.size() == window(),
                      ErrorKind::invalid_argument,
                      "block map applied to a word of the wrong length");
      return apply(w.begin());
    }

    bool operator==(BlockMap const&) const = default;

   private:
    Alphabet            _source, _target;
    std::size_t         _memory = 0, _anticipation = 0;
    std::vector<Letter> _table;
  };

  // A block map with memory = anticipation = wing.
  class CentralBlockMap {
   public:
    CentralBlockMap() = default;

    explicit CentralBlockMap(BlockMap inner) : _inner(std::move(inner)) {
      detail::require(_inner.is_central(),
                      ErrorKind::invalid_argument,
                      "a central block map needs memory = anticipation");
    }

    [[nodiscard]] BlockMap const& inner() const noexcept {
      return _inner;
    }
    [[nodiscard]] std::size_t wing() const noexcept {
      return _inner.memory();
    }
    [[nodiscard]] std::size_t window() const noexcept {
      return _inner.window();
    }
    [[nodiscard]] Alphabet const& source() const noexcept {
      return _inner.source();
    }
    [[nodiscard]] Alphabet const& target() const noexcept {
      return _inner.target();
    }
    [[nodiscard]] Letter operator()(Word const& w) const {
      return _inner(w);
    }
    operator BlockMap const&() const noexcept {
      return _inner;
    }

    bool operator==(CentralBlockMap const&) const = default;

   private:
    BlockMap _inner;
  };

  inline CentralBlockMap identity_map(Alphabet const& A) {
    std::vector<Letter> table(A.size());
    for (Letter a = 0; a < A.size(); ++a) {
      table[a] = a;
    }
    return CentralBlockMap(BlockMap(A, A, 0, 0, std::move(table)));
  }

  inline CentralBlockMap letter_map(Alphabet const&     A,
                                    Alphabet const&     B,
                                    std::vector<Letter> images) {
    return CentralBlockMap(BlockMap(A, B, 0, 0, std::move(images)));
  }

  // Psi(a_-k ... a_k) = Phi(a_-m ... a_n) with k = max(m, n).
  inline CentralBlockMap centralize(BlockMap const& Phi) {
    std::size_t const m = Phi.memory(), n = Phi.anticipation();
    std::size_t const k = std::max(m, n);
    if (k == m && k == n) {
      return CentralBlockMap(Phi);
    }
    return CentralBlockMap(BlockMap::from_function(
        Phi.source(), Phi.target(), k, k, [&](Word const& w) {
          return Phi.apply(w.begin() + (k - m));
        }));
  }

  ////////////////////////////////////////////////////////////////////////
  // Word codes
  ////////////////////////////////////////////////////////////////////////

  // The windowed images of u, or the empty word if |u| < N.
  inline Word word_code(BlockMap const& Psi, Word const& u) {
    std::size_t const N = Psi.window();
    if (u.size() < N) {
      return {};
    }
    Word result(u.size() - N + 1);
    for (std::size_t i = 0; i < result.size(); ++i) {
      result[i] = Psi.apply(u.begin() + i);
    }
    return result;
  }

  inline Word word_code(CentralBlockMap const& Psi, Word const& u) {
    return word_code(Psi.inner(), u);
  }

  // The alphabet A_N of N-blocks, in base-|A| order. Symbols are the
  // bracketed concatenations of their letters, e.g. [ab].
  inline Alphabet block_alphabet(Alphabet const& A, std::size_t N) {
    std::size_t const size = detail::checked_power(A.size(), N);
    bool const spaced = !A.concatenation_is_unambiguous();
    std::vector<std::string> symbols;
    symbols.reserve(size);
    for (std::size_t x = 0; x < size; ++x) {
      Word        w = detail::decode(x, A.size(), N);
      std::string s = "[";
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (spaced && i > 0) {
          s += ' ';
        }
        s += A.name(w[i]);
      }
      symbols.push_back(s + "]");
    }
    return Alphabet(std::move(symbols));
  }

  // The identity block map A^N -> A_N with the given memory.
  inline BlockMap higher_block_map(Alphabet const& A,
                                   std::size_t     N,
                                   std::size_t     memory = 0) {
    detail::require(N >= 1 && memory < N,
                    ErrorKind::invalid_argument,
                    "higher block map needs N >= 1 and memory < N");
    std::size_t const   size = detail::checked_power(A.size(), N);
    std::vector<Letter> table(size);
    for (std::size_t x = 0; x < size; ++x) {
      table[x] = static_cast<Letter>(x);
    }
    return BlockMap(A, block_alphabet(A, N), memory, N - 1 - memory,
                    std::move(table));
  }

  // The 1-block map A_N -> A keeping the first letter of each block.
  inline CentralBlockMap lambda_first_letter(Alphabet const& A,
                                             std::size_t     N) {
    Alphabet const      AN = block_alphabet(A, N);
    std::size_t const   shift = detail::checked_power(A.size(), N - 1);
    std::vector<Letter> table(AN.size());
    for (std::size_t x = 0; x < table.size(); ++x) {
      table[x] = static_cast<Letter>(x / shift);
    }
    return letter_map(AN, A, std::move(table));
  }

  // Lambda(u) = Psi(word_code(Phi, u)), a central block map of wing k + l
  // for psi o phi.
  inline CentralBlockMap compose(CentralBlockMap const& Phi,
                                 CentralBlockMap const& Psi) {
    detail::require(Phi.target() == Psi.source(),
                    ErrorKind::alphabet_mismatch,
                    "target of the first map differs from source of the second");
    std::size_t const w = Phi.wing() + Psi.wing();
    return CentralBlockMap(BlockMap::from_function(
        Phi.source(), Psi.target(), w, w, [&](Word const& u) {
          return Psi(word_code(Phi, u));
        }));
  }

  ////////////////////////////////////////////////////////////////////////
  // Images of presentations and periodic points
  ////////////////////////////////////////////////////////////////////////

  // The image of X under the code of Phi: the higher edge graph of X whose
  // vertices are paths of length 2k and whose edges are paths of length
  // 2k + 1, each edge labelled by Phi of its path label.
  inline ShiftPresentation apply_to_presentation(BlockMap const&          Phi,
                                                 ShiftPresentation const& X) {
    CentralBlockMap const C = centralize(Phi);
    detail::require(C.source() == X.alphabet(),
                    ErrorKind::alphabet_mismatch,
                    "block map source differs from the shift alphabet");
    auto const        Y = detail::essential(X);
    std::size_t const k = C.wing();
    auto const&       E = Y.edges();

    std::vector<std::vector<std::size_t>> out(Y.number_of_vertices());
    for (std::size_t e = 0; e < E.size(); ++e) {
      out[E[e].src].push_back(e);
    }
    // All paths of a given length, as edge-index sequences.
    std::vector<std::vector<std::size_t>> paths;
    for (std::size_t e = 0; e < E.size(); ++e) {
      paths.push_back({e});
    }
    auto extend = [&](std::vector<std::vector<std::size_t>> const& ps) {
      std::vector<std::vector<std::size_t>> next;
      for (auto const& p : ps) {
        for (auto e : out[E[p.back()].dst]) {
          next.push_back(p);
          next.back().push_back(e);
        }
      }
      detail::require(next.size() <= detail::max_table_size,
                      ErrorKind::size_limit,
                      "too many paths in the higher edge graph");
      return next;
    };
    std::vector<std::string> names;
    std::map<std::vector<std::size_t>, std::size_t> vertex;
    std::vector<Edge> edges;

    if (k == 0) {
      names = Y.vertex_names();
      for (auto const& e : E) {
        edges.push_back({e.src, C(Word{e.label}), e.dst});
      }
    } else {
      for (std::size_t len = 1; len < 2 * k; ++len) {
        paths = extend(paths);
      }
      for (auto const& p : paths) {
        std::string name;
        for (auto e : p) {
          name += (name.empty() ? "e" : ".e") + std::to_string(e);
        }
        vertex.emplace(p, names.size());
        names.push_back(std::move(name));
      }
      for (auto const& p : extend(paths)) {
        Word label;
        for (auto e : p) {
          label.push_back(E[e].label);
        }
        std::vector<std::size_t> head(p.begin(), p.end() - 1);
        std::vector<std::size_t> tail(p.begin() + 1, p.end());
        edges.push_back({vertex.at(head), C(label), vertex.at(tail)});
      }
    }
    return trim(ShiftPresentation::sofic(
        C.target(), std::move(names), std::move(edges)));
  }

  // y_i = Phi(x_[i-m, i+n]) on the cyclic word of the point.
  inline PeriodicPoint apply_to_periodic(BlockMap const&      Phi,
                                         PeriodicPoint const& pt) {
    detail::require(!pt.representative.empty(),
                    ErrorKind::invalid_argument,
                    "periodic point with empty representative");
    std::size_t const p = pt.representative.size();
    Word const        x = rotate_left(pt.representative, pt.shift_phase);
    std::size_t const N = Phi.window();
    Word              window(N);
    Word              image(p);
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        // coordinate i - m + j modulo p
        std::size_t c = (i + j + p * (Phi.memory() / p + 1) - Phi.memory()) % p;
        window[j]     = x[c];
      }
      image[i] = Phi(window);
    }
    return {primitive_root(image).root, 0};
  }

}  // namespace shiftcat

#endif  // SHIFTCAT_CODES_HPP_
