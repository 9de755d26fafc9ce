// shiftcat - symbolic dynamics, block codes and Karoubi envelopes
//
// Subshift presentations (shifts of finite type and sofic shifts), block
// languages, irreducibility, periodic points and zeta functions.

#ifndef SHIFTCAT_SHIFTS_HPP_
#define SHIFTCAT_SHIFTS_HPP_

#include <algorithm>  // for sort, unique, all_of
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <map>        // for map
#include <sstream>    // for ostringstream
#include <string>     // for string
#include <utility>    // for move
#include <vector>     // for vector

#include <boost/multiprecision/cpp_int.hpp>  // for cpp_int, cpp_rational

#include "detail/graph.hpp"
#include "errors.hpp"
#include "words.hpp"

namespace shiftcat {

  using Subset = std::vector<std::size_t>;  // sorted vertex ids

  struct Edge {
    std::size_t src;
    Letter      label;
    std::size_t dst;

    auto operator<=>(Edge const&) const = default;
  };

  ////////////////////////////////////////////////////////////////////////
  // ShiftPresentation
  ////////////////////////////////////////////////////////////////////////

  // Every presentation carries a labelled graph. For a shift of finite type
  // the graph is the de Bruijn graph of allowed words: with m one less than
  // the longest forbidden word (at least 1), the vertices are the allowed
  // words of length m and there is an edge u -> v labelled by the last
  // letter of w for each allowed word w of length m + 1 with prefix u and
  // suffix v.
  class ShiftPresentation {
   public:
    enum class Kind { sft, sofic };

    static ShiftPresentation sft(Alphabet alphabet, std::vector<Word> forbidden) {
      ShiftPresentation X;
      X._alphabet = std::move(alphabet);
      X._kind     = Kind::sft;
      std::size_t longest = 0;
      for (auto const& w : forbidden) {
        detail::require(!w.empty(),
                        ErrorKind::invalid_argument,
                        "forbidden words must be nonempty");
        detail::require(X._alphabet.contains(w),
                        ErrorKind::alphabet_mismatch,
                        "forbidden word not over the alphabet");
        longest = std::max(longest, w.size());
      }
      std::sort(forbidden.begin(), forbidden.end(), ShortLex());
      forbidden.erase(std::unique(forbidden.begin(), forbidden.end()),
                      forbidden.end());
      X._forbidden = std::move(forbidden);

      std::size_t const m = std::max<std::size_t>(longest, 2) - 1;
      auto allowed = [&X](Word const& w) {
        return std::none_of(X._forbidden.begin(),
                            X._forbidden.end(),
                            [&w](Word const& f) { return is_factor(f, w); });
      };
      std::map<Word, std::size_t> vertex;
      detail::for_each_word(X._alphabet.size(), m, [&](Word const& u) {
        if (allowed(u)) {
          vertex.emplace(u, X._names.size());
          X._names.push_back(X._alphabet.format(u));
        }
      });
      std::vector<Edge> edges;
      detail::for_each_word(X._alphabet.size(), m + 1, [&](Word const& w) {
        if (allowed(w)) {
          edges.push_back(
              {vertex.at(prefix(w, m)), w.back(), vertex.at(suffix(w, m))});
        }
      });
      X.set_edges(std::move(edges));
      return X;
    }

    static ShiftPresentation sofic(Alphabet                 alphabet,
                                   std::vector<std::string> vertices,
                                   std::vector<Edge>        edges) {
      ShiftPresentation X;
      X._alphabet = std::move(alphabet);
      X._kind     = Kind::sofic;
      X._names    = std::move(vertices);
      for (auto const& e : edges) {
        detail::require(e.src < X._names.size() && e.dst < X._names.size(),
                        ErrorKind::invalid_argument,
                        "edge endpoint is not a vertex");
        detail::require(e.label < X._alphabet.size(),
                        ErrorKind::alphabet_mismatch,
                        "edge label not in the alphabet");
      }
      X.set_edges(std::move(edges));
      return X;
    }

    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] Kind kind() const noexcept {
      return _kind;
    }
    [[nodiscard]] std::vector<Word> const& forbidden() const noexcept {
      return _forbidden;
    }
    [[nodiscard]] std::vector<std::string> const& vertex_names() const noexcept {
      return _names;
    }
    [[nodiscard]] std::size_t number_of_vertices() const noexcept {
      return _names.size();
    }
    [[nodiscard]] std::vector<Edge> const& edges() const noexcept {
      return _edges;
    }
    [[nodiscard]] bool is_trimmed() const noexcept {
      return _trimmed;
    }

    [[nodiscard]] std::vector<std::size_t> const& successors(std::size_t v,
                                                             Letter a) const {
      return _out[v * _alphabet.size() + a];
    }
    [[nodiscard]] std::vector<std::size_t> const& predecessors(std::size_t v,
                                                               Letter a) const {
      return _in[v * _alphabet.size() + a];
    }

    // Unlabelled adjacency, deduplicated.
    [[nodiscard]] detail::Adjacency adjacency() const {
      detail::Adjacency adj(number_of_vertices());
      for (auto const& e : _edges) {
        adj[e.src].push_back(e.dst);
      }
      for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
      }
      return adj;
    }

    [[nodiscard]] Subset all_vertices() const {
      Subset all(number_of_vertices());
      for (std::size_t v = 0; v < all.size(); ++v) {
        all[v] = v;
      }
      return all;
    }

    // The vertices reached by reading a from some vertex of P.
    [[nodiscard]] Subset step(Subset const& P, Letter a) const {
      return step_impl(P, a, _out);
    }

    // The vertices from which reading a leads into P.
    [[nodiscard]] Subset step_back(Subset const& P, Letter a) const {
      return step_impl(P, a, _in);
    }

    [[nodiscard]] Subset read(Subset P, Word const& w) const {
      for (auto a : w) {
        if (P.empty()) {
          break;
        }
        P = step(P, a);
      }
      return P;
    }

    friend ShiftPresentation trim(ShiftPresentation const& X);

   private:
    ShiftPresentation() = default;

    void set_edges(std::vector<Edge> edges) {
      std::sort(edges.begin(), edges.end());
      edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
      _edges = std::move(edges);
      std::size_t const k = _alphabet.size();
      _out.assign(_names.size() * k, {});
      _in.assign(_names.size() * k, {});
      for (auto const& e : _edges) {
        _out[e.src * k + e.label].push_back(e.dst);
        _in[e.dst * k + e.label].push_back(e.src);
      }
      for (auto& row : _in) {
        std::sort(row.begin(), row.end());
      }
    }

    Subset step_impl(Subset const&                                P,
                     Letter                                       a,
                     std::vector<std::vector<std::size_t>> const& table) const {
      Subset result;
      for (auto v : P) {
        auto const& row = table[v * _alphabet.size() + a];
        result.insert(result.end(), row.begin(), row.end());
      }
      std::sort(result.begin(), result.end());
      result.erase(std::unique(result.begin(), result.end()), result.end());
      return result;
    }

    Alphabet                              _alphabet;
    Kind                                  _kind = Kind::sofic;
    std::vector<Word>                     _forbidden;
    std::vector<std::string>              _names;
    std::vector<Edge>                     _edges;
    std::vector<std::vector<std::size_t>> _out, _in;
    bool                                  _trimmed = false;
  };

  // Removes every vertex that does not lie on a bi-infinite path by
  // repeatedly deleting sources and sinks.
  inline ShiftPresentation trim(ShiftPresentation const& X) {
    std::size_t const n = X.number_of_vertices();
    std::vector<bool> alive(n, true);
    bool              changed = true;
    while (changed) {
      changed = false;
      std::vector<std::size_t> indeg(n, 0), outdeg(n, 0);
      for (auto const& e : X.edges()) {
        if (alive[e.src] && alive[e.dst]) {
          ++outdeg[e.src];
          ++indeg[e.dst];
        }
      }
      for (std::size_t v = 0; v < n; ++v) {
        if (alive[v] && (indeg[v] == 0 || outdeg[v] == 0)) {
          alive[v] = false;
          changed  = true;
        }
      }
    }
    std::vector<std::size_t> renumber(n, 0);
    std::vector<std::string> names;
    for (std::size_t v = 0; v < n; ++v) {
      if (alive[v]) {
        renumber[v] = names.size();
        names.push_back(X.vertex_names()[v]);
      }
    }
    detail::require(!names.empty(),
                    ErrorKind::empty_shift,
                    "the presentation has no bi-infinite path");
    std::vector<Edge> edges;
    for (auto const& e : X.edges()) {
      if (alive[e.src] && alive[e.dst]) {
        edges.push_back({renumber[e.src], e.label, renumber[e.dst]});
      }
    }
    ShiftPresentation Y;
    Y._alphabet  = X._alphabet;
    Y._kind      = X._kind;
    Y._forbidden = X._forbidden;
    Y._names     = std::move(names);
    Y.set_edges(std::move(edges));
    Y._trimmed = true;
    return Y;
  }

  namespace detail {
    inline ShiftPresentation essential(ShiftPresentation const& X) {
      return X.is_trimmed() ? X : trim(X);
    }

    // Depth-first enumeration of the blocks of length 1..n, calling
    // f(word, end-subset) for each in lexicographic order per length prefix.
    template <typename F>
    void for_each_block(ShiftPresentation const& X, std::size_t n, F&& f) {
      Word w;
      // Explicit stack of (subset, next letter to try).
      std::vector<std::pair<Subset, Letter>> stack;
      stack.emplace_back(X.all_vertices(), 0);
      while (!stack.empty()) {
        auto& [P, a] = stack.back();
        if (w.size() == n || a == X.alphabet().size()) {
          stack.pop_back();
          if (!w.empty()) {
            w.pop_back();
          }
          continue;
        }
        Letter b = a++;
        Subset Q = X.step(P, b);
        if (!Q.empty()) {
          w.push_back(b);
          f(static_cast<Word const&>(w), static_cast<Subset const&>(Q));
          stack.emplace_back(std::move(Q), 0);
        }
      }
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Block language
  ////////////////////////////////////////////////////////////////////////

  inline bool is_block(ShiftPresentation const& X, Word const& w) {
    auto const Y = detail::essential(X);
    detail::require(Y.alphabet().contains(w),
                    ErrorKind::alphabet_mismatch,
                    "word not over the alphabet of the shift");
    return !Y.read(Y.all_vertices(), w).empty();
  }

  // Nonempty blocks of length at most n.
  inline WordSet blocks(ShiftPresentation const& X, std::size_t n) {
    auto const Y = detail::essential(X);
    WordSet    result;
    detail::for_each_block(
        Y, n, [&result](Word const& w, Subset const&) { result.insert(w); });
    return result;
  }

  inline bool mirage_membership_k(ShiftPresentation const& X,
                                  Word const&              w,
                                  std::size_t              k) {
    detail::require(!w.empty(),
                    ErrorKind::invalid_argument,
                    "mirage membership needs a nonempty word");
    auto const Y = detail::essential(X);
    for (auto const& u : factors_up_to(w, k)) {
      if (Y.read(Y.all_vertices(), u).empty()) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Irreducibility
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // L(full) is contained in L(sub) where sub is the subgraph on the
    // vertices flagged in keep. Both languages are factorial, so it is
    // enough to run the two subset automata side by side from the sets of
    // all vertices.
    inline bool language_contained_in_subgraph(ShiftPresentation const& X,
                                               std::vector<bool> const& keep) {
      auto restrict_to = [&keep](Subset P) {
        P.erase(std::remove_if(
                    P.begin(), P.end(), [&keep](auto v) { return !keep[v]; }),
                P.end());
        return P;
      };
      using State = std::pair<Subset, Subset>;
      std::map<State, bool> seen;
      std::vector<State>    todo;
      State start{X.all_vertices(), restrict_to(X.all_vertices())};
      seen[start] = true;
      todo.push_back(start);
      while (!todo.empty()) {
        auto [P, Q] = todo.back();
        todo.pop_back();
        for (Letter a = 0; a < X.alphabet().size(); ++a) {
          Subset P2 = X.step(P, a);
          if (P2.empty()) {
            continue;
          }
          Subset Q2 = restrict_to(X.step(Q, a));
          if (Q2.empty()) {
            return false;
          }
          State next{std::move(P2), std::move(Q2)};
          if (seen.emplace(next, true).second) {
            todo.push_back(std::move(next));
          }
        }
      }
      return true;
    }

    inline std::vector<Subset> reachable_subsets(ShiftPresentation const& X,
                                                 bool forward) {
      std::map<Subset, bool> seen;
      std::vector<Subset>    todo{X.all_vertices()}, result;
      while (!todo.empty()) {
        Subset P = std::move(todo.back());
        todo.pop_back();
        for (Letter a = 0; a < X.alphabet().size(); ++a) {
          Subset Q = forward ? X.step(P, a) : X.step_back(P, a);
          if (!Q.empty() && seen.emplace(Q, true).second) {
            result.push_back(Q);
            todo.push_back(std::move(Q));
          }
        }
      }
      return result;
    }

    // Some strongly connected component carries the whole language.
    inline bool irreducible_by_components(ShiftPresentation const& X) {
      auto const        comps = strongly_connected_components(X.adjacency());
      std::vector<bool> keep(X.number_of_vertices());
      for (std::size_t c = 0; c < comps.count; ++c) {
        for (std::size_t v = 0; v < keep.size(); ++v) {
          keep[v] = comps.id[v] == c;
        }
        if (language_contained_in_subgraph(X, keep)) {
          return true;
        }
      }
      return false;
    }

    // For blocks u, v there is w with uwv a block. The set of vertices where
    // a path labelled u can end depends only on u's forward subset F; the
    // set where a path labelled v can start is its backward subset B; uwv is
    // a block for some w iff B is reachable from F.
    inline bool irreducible_by_words(ShiftPresentation const& X) {
      auto const adj      = X.adjacency();
      auto const forward  = reachable_subsets(X, true);
      auto const backward = reachable_subsets(X, false);
      for (auto const& F : forward) {
        auto const reach = reachable(adj, F);
        for (auto const& B : backward) {
          if (std::none_of(
                  B.begin(), B.end(), [&reach](auto v) { return reach[v]; })) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace detail

  inline bool is_irreducible(ShiftPresentation const& X) {
    auto const Y  = detail::essential(X);
    bool const by_components = detail::irreducible_by_components(Y);
    bool const by_words      = detail::irreducible_by_words(Y);
    detail::require(by_components == by_words,
                    ErrorKind::mismatch_bug,
                    "irreducibility tests disagree");
    return by_components;
  }

  ////////////////////////////////////////////////////////////////////////
  // Periodic points
  ////////////////////////////////////////////////////////////////////////

  // The point representative^infinity read from position shift_phase.
  struct PeriodicPoint {
    Word        representative;
    std::size_t shift_phase = 0;

    bool operator==(PeriodicPoint const&) const = default;
  };

  // w^infinity lies in X iff w^(V+1) is a block, V the number of vertices:
  // a path labelled w^(V+1) passes through V + 2 vertices at the
  // boundaries between copies of w, so two of them coincide and the path
  // between them is a cycle labelled by a power of w.
  inline bool is_periodic_point(ShiftPresentation const& X, Word const& w) {
    detail::require(!w.empty(),
                    ErrorKind::invalid_argument,
                    "a periodic point needs a nonempty word");
    auto const Y = detail::essential(X);
    detail::require(Y.alphabet().contains(w),
                    ErrorKind::alphabet_mismatch,
                    "word not over the alphabet of the shift");
    Subset P = Y.all_vertices();
    for (std::size_t i = 0; i <= Y.number_of_vertices() && !P.empty(); ++i) {
      P = Y.read(std::move(P), w);
    }
    return !P.empty();
  }

  inline PeriodicPoint periodic_point(ShiftPresentation const& X,
                                      Word const&              w) {
    detail::require(is_periodic_point(X, w),
                    ErrorKind::invalid_argument,
                    "w^infinity is not a point of the shift");
    return {primitive_root(w).root, 0};
  }

  // p[n - 1] = number of points of period n (w of length n with w^infinity
  // in X); q[n - 1] = number of those with least period n.
  struct PeriodicCounts {
    std::vector<std::uint64_t> p;
    std::vector<std::uint64_t> q;
  };

  inline int mobius(std::size_t n) {
    int result = 1;
    for (std::size_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        n /= d;
        if (n % d == 0) {
          return 0;
        }
        result = -result;
      }
    }
    if (n > 1) {
      result = -result;
    }
    return result;
  }

  // q from p by Moebius inversion, q(n) = sum over d | n of mu(n / d) p(d).
  inline std::vector<std::uint64_t>
  primitive_counts_from(std::vector<std::uint64_t> const& p) {
    std::vector<std::uint64_t> q(p.size());
    for (std::size_t n = 1; n <= p.size(); ++n) {
      std::int64_t sum = 0;
      for (std::size_t d = 1; d <= n; ++d) {
        if (n % d == 0) {
          sum += mobius(n / d) * static_cast<std::int64_t>(p[d - 1]);
        }
      }
      q[n - 1] = static_cast<std::uint64_t>(sum);
    }
    return q;
  }

  inline PeriodicCounts periodic_counts(ShiftPresentation const& X,
                                        std::size_t              n_max) {
    auto const     Y = detail::essential(X);
    PeriodicCounts result;
    result.p.assign(n_max, 0);
    result.q.assign(n_max, 0);
    // Only blocks can be periodic, so walk the block tree.
    detail::for_each_block(Y, n_max, [&](Word const& w, Subset const&) {
      if (is_periodic_point(Y, w)) {
        ++result.p[w.size() - 1];
        if (is_primitive(w)) {
          ++result.q[w.size() - 1];
        }
      }
    });
    detail::require(primitive_counts_from(result.p) == result.q,
                    ErrorKind::mismatch_bug,
                    "Moebius inversion of p disagrees with the primitive count");
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Zeta function
  ////////////////////////////////////////////////////////////////////////

  using BigInt   = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  struct ZetaSeries {
    std::size_t                order = 0;
    std::vector<BigInt>        coefficients;  // c_0, ..., c_order
    std::vector<std::uint64_t> p, q;
  };

  // exp(sum p(n) t^n / n) truncated at t^order. Writing Z = exp(P), Z' = P'Z
  // gives n c_n = sum_{k=1}^{n} p(k) c_{n-k}.
  inline std::vector<BigInt>
  zeta_coefficients(std::vector<std::uint64_t> const& p) {
    std::vector<Rational> c{Rational(1)};
    for (std::size_t n = 1; n <= p.size(); ++n) {
      Rational sum = 0;
      for (std::size_t k = 1; k <= n; ++k) {
        sum += Rational(BigInt(p[k - 1])) * c[n - k];
      }
      c.push_back(sum / Rational(BigInt(n)));
    }
    std::vector<BigInt> result;
    for (std::size_t n = 0; n < c.size(); ++n) {
      detail::require(denominator(c[n]) == 1,
                      ErrorKind::non_integral_coefficient,
                      "coefficient of t^" + std::to_string(n) + " is "
                          + c[n].str());
      result.push_back(numerator(c[n]));
    }
    return result;
  }

  inline ZetaSeries zeta(ShiftPresentation const& X, std::size_t order) {
    detail::require(order >= 1,
                    ErrorKind::invalid_argument,
                    "zeta order must be positive");
    auto       counts = periodic_counts(X, order);
    ZetaSeries result;
    result.order        = order;
    result.coefficients = zeta_coefficients(counts.p);
    result.p            = std::move(counts.p);
    result.q            = std::move(counts.q);
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // DOT
  ////////////////////////////////////////////////////////////////////////

  inline std::string to_dot(ShiftPresentation const& X) {
    std::ostringstream out;
    out << "digraph shift {\n";
    for (std::size_t v = 0; v < X.number_of_vertices(); ++v) {
      out << "  " << v << " [label=\"" << X.vertex_names()[v] << "\"];\n";
    }
    for (auto const& e : X.edges()) {
      out << "  " << e.src << " -> " << e.dst << " [label=\""
          << X.alphabet().name(e.label) << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace shiftcat

#endif  // SHIFTCAT_SHIFTS_HPP_
