// shiftcat - symbolic dynamics, block codes and Karoubi envelopes
//
// Finite semigroups given by Cayley tables or generated by
// transformations, Green's relations, omega-powers, Schutzenberger groups,
// local units, and syntactic semigroups of block languages.

#ifndef SHIFTCAT_SEMIGROUPS_HPP_
#define SHIFTCAT_SEMIGROUPS_HPP_

#include <algorithm>      // for sort, find
#include <cstddef>        // for size_t
#include <map>            // for map
#include <memory>         // for shared_ptr
#include <mutex>          // for once_flag, call_once
#include <numeric>        // for iota, gcd
#include <optional>       // for optional
#include <random>         // for mt19937_64
#include <sstream>        // for ostringstream
#include <string>         // for string
#include <unordered_map>  // for unordered_map
#include <utility>        // for pair, move
#include <vector>         // for vector

#include "detail/graph.hpp"
#include "errors.hpp"
#include "shifts.hpp"
#include "words.hpp"

namespace shiftcat {

  using Element        = std::size_t;
  using Transformation = std::vector<std::size_t>;

  ////////////////////////////////////////////////////////////////////////
  // Green's relations, computed from one-sided Cayley graphs
  ////////////////////////////////////////////////////////////////////////

  struct GreenData {
    // Class ids per element; classes numbered by least element.
    std::vector<std::size_t> R, L, J, H;
    std::size_t              nR = 0, nL = 0, nJ = 0, nH = 0;
    // J_leq[c][d] holds when J-class c lies below J-class d.
    std::vector<std::vector<bool>> J_leq;
    std::vector<bool>              regular;  // per J-class

    [[nodiscard]] std::vector<Element> J_class(std::size_t c) const {
      return members(J, c);
    }
    [[nodiscard]] std::vector<Element> H_class(std::size_t c) const {
      return members(H, c);
    }
    [[nodiscard]] bool J_below(Element x, Element y) const {
      return J_leq[J[x]][J[y]];
    }

   private:
    static std::vector<Element> members(std::vector<std::size_t> const& ids,
                                        std::size_t                     c) {
      std::vector<Element> result;
      for (Element x = 0; x < ids.size(); ++x) {
        if (ids[x] == c) {
          result.push_back(x);
        }
      }
      return result;
    }
  };

  namespace detail {
    inline std::vector<std::size_t> renumber_pairs(
        std::vector<std::size_t> const& a,
        std::vector<std::size_t> const& b,
        std::size_t&                    count) {
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> ids;
      std::vector<std::size_t>                                   result(a.size());
      for (std::size_t x = 0; x < a.size(); ++x) {
        auto [it, inserted] = ids.emplace(std::pair(a[x], b[x]), ids.size());
        result[x]           = it->second;
      }
      count = ids.size();
      return result;
    }

    // right[x] lists x * g and left[x] lists g * x over a generating set
    // (for a category, over all composable generators). R, L and J are the
    // strongly connected components of the right, left and combined graphs;
    // the J-order is reachability in the combined graph.
    inline GreenData green_from_cayley(Adjacency const&         right,
                                       Adjacency const&         left,
                                       std::vector<bool> const& idempotent) {
      std::size_t const n = right.size();
      GreenData         g;
      auto              rc = strongly_connected_components(right);
      auto              lc = strongly_connected_components(left);
      Adjacency         both(n);
      for (std::size_t x = 0; x < n; ++x) {
        both[x] = right[x];
        both[x].insert(both[x].end(), left[x].begin(), left[x].end());
      }
      auto jc = strongly_connected_components(both);
      g.R     = std::move(rc.id);
      g.nR    = rc.count;
      g.L     = std::move(lc.id);
      g.nL    = lc.count;
      g.J     = jc.id;
      g.nJ    = jc.count;
      g.H     = renumber_pairs(g.R, g.L, g.nH);

      // x <=_J y iff x is reachable from y.
      auto reach = component_reachability(both, jc);
      g.J_leq.assign(g.nJ, std::vector<bool>(g.nJ, false));
      for (std::size_t c = 0; c < g.nJ; ++c) {
        for (std::size_t d = 0; d < g.nJ; ++d) {
          g.J_leq[c][d] = reach[d][c];
        }
      }
      g.regular.assign(g.nJ, false);
      for (std::size_t x = 0; x < n; ++x) {
        if (idempotent[x]) {
          g.regular[g.J[x]] = true;
        }
      }

      // In a finite structure J = D = R o L: merging R- and L-classes must
      // give back the J-classes.
      std::vector<std::size_t> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&parent](std::size_t x) {
        while (parent[x] != x) {
          x = parent[x] = parent[parent[x]];
        }
        return x;
      };
      std::vector<std::size_t> firstR(g.nR, n), firstL(g.nL, n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t* first : {&firstR[g.R[x]], &firstL[g.L[x]]}) {
          if (*first == n) {
            *first = x;
          } else {
            parent[find(x)] = find(*first);
          }
        }
      }
      std::map<std::size_t, std::size_t> d_to_j;
      for (std::size_t x = 0; x < n; ++x) {
        auto [it, inserted] = d_to_j.emplace(find(x), g.J[x]);
        require(it->second == g.J[x],
                ErrorKind::mismatch_bug,
                "D-class meets two J-classes");
      }
      require(d_to_j.size() == g.nJ,
              ErrorKind::mismatch_bug,
              "J-class is not a D-class");
      return g;
    }

    struct GreenCache {
      std::once_flag once;
      GreenData      data;
    };
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemigroup
  ////////////////////////////////////////////////////////////////////////

  class FiniteSemigroup {
   public:
    FiniteSemigroup() = default;

    // table[x * size + y] = x * y. Without generators every element is a
    // generator and gets its own letter s0, s1, ...
    static FiniteSemigroup from_table(std::size_t          size,
                                      std::vector<Element> table,
                                      std::vector<Element> generators = {},
                                      std::optional<Alphabet> alphabet
                                      = std::nullopt) {
      detail::require(size >= 1,
                      ErrorKind::invalid_argument,
                      "a semigroup must be nonempty");
      detail::require(table.size() == size * size,
                      ErrorKind::invalid_argument,
                      "Cayley table has the wrong size");
      for (auto x : table) {
        detail::require(x < size,
                        ErrorKind::invalid_argument,
                        "Cayley table entry out of range");
      }
      FiniteSemigroup S;
      S._size  = size;
      S._table = std::move(table);
      if (generators.empty()) {
        generators.resize(size);
        std::iota(generators.begin(), generators.end(), 0);
      }
      for (auto g : generators) {
        detail::require(g < size,
                        ErrorKind::invalid_argument,
                        "generator out of range");
      }
      if (!alphabet) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < generators.size(); ++i) {
          names.push_back("s" + std::to_string(i));
        }
        alphabet = Alphabet(std::move(names));
      }
      detail::require(alphabet->size() == generators.size(),
                      ErrorKind::invalid_argument,
                      "one letter per generator expected");
      S._alphabet   = std::move(*alphabet);
      S._generators = std::move(generators);
      S.check_associative();
      S.compute_witnesses();
      return S;
    }

    // The semigroup generated by one transformation per letter, acting on
    // the right: the element of a word uv maps q to (q.u).v. Elements are
    // numbered in breadth-first order, so witnesses are shortlex-least.
    static FiniteSemigroup generate(std::vector<Transformation> const& gens,
                                    Alphabet                           alphabet,
                                    std::size_t size_limit = 100000) {
      detail::require(!gens.empty() && gens.size() == alphabet.size(),
                      ErrorKind::invalid_argument,
                      "one transformation per letter expected");
      std::size_t const degree = gens[0].size();
      for (auto const& t : gens) {
        detail::require(t.size() == degree,
                        ErrorKind::invalid_argument,
                        "transformations of different degrees");
        for (auto q : t) {
          detail::require(q < degree,
                          ErrorKind::invalid_argument,
                          "transformation image out of range");
        }
      }
      auto compose = [](Transformation const& x, Transformation const& y) {
        Transformation z(x.size());
        for (std::size_t q = 0; q < x.size(); ++q) {
          z[q] = y[x[q]];
        }
        return z;
      };

      std::map<Transformation, Element> index;
      std::vector<Transformation>       elements;
      std::vector<Word>                 witnesses;
      std::vector<Element>              generators;
      auto add = [&](Transformation t, Word w) -> Element {
        auto it = index.find(t);
        if (it != index.end()) {
          return it->second;
        }
        detail::require(elements.size() < size_limit,
                        ErrorKind::size_limit,
                        "semigroup exceeds " + std::to_string(size_limit)
                            + " elements");
        Element x = elements.size();
        index.emplace(t, x);
        elements.push_back(std::move(t));
        witnesses.push_back(std::move(w));
        return x;
      };
      for (Letter a = 0; a < gens.size(); ++a) {
        generators.push_back(add(gens[a], Word{a}));
      }
      for (std::size_t i = 0; i < elements.size(); ++i) {
        for (Letter a = 0; a < gens.size(); ++a) {
          add(compose(elements[i], gens[a]), concat(witnesses[i], Word{a}));
        }
      }

      std::size_t const    n = elements.size();
      std::vector<Element> table(n * n);
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          table[x * n + y] = index.at(compose(elements[x], elements[y]));
        }
      }
      FiniteSemigroup S;
      S._size        = n;
      S._table       = std::move(table);
      S._generators  = std::move(generators);
      S._alphabet    = std::move(alphabet);
      S._witnesses   = std::move(witnesses);
      S._elements    = std::move(elements);
      return S;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _size;
    }
    [[nodiscard]] Element product(Element x, Element y) const {
      return _table[x * _size + y];
    }
    [[nodiscard]] std::vector<Element> const& table() const noexcept {
      return _table;
    }
    [[nodiscard]] std::vector<Element> const& generators() const noexcept {
      return _generators;
    }
    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] Word const& witness(Element x) const {
      return _witnesses.at(x);
    }
    // The transformations, when the semigroup was generated from them.
    [[nodiscard]] std::vector<Transformation> const&
    transformations() const noexcept {
      return _elements;
    }

    // Image of a nonempty word under the generating morphism.
    [[nodiscard]] Element evaluate(Word const& w) const {
      detail::require(!w.empty(),
                      ErrorKind::invalid_argument,
                      "the empty word has no image in a semigroup");
      Element x = letter(w[0]);
      for (std::size_t i = 1; i < w.size(); ++i) {
        x = product(x, letter(w[i]));
      }
      return x;
    }

    [[nodiscard]] Element letter(Letter a) const {
      detail::require(a < _generators.size(),
                      ErrorKind::alphabet_mismatch,
                      "letter has no generator");
      return _generators[a];
    }

    [[nodiscard]] bool is_idempotent(Element x) const {
      return product(x, x) == x;
    }

    [[nodiscard]] std::vector<Element> idempotents() const {
      std::vector<Element> result;
      for (Element x = 0; x < _size; ++x) {
        if (is_idempotent(x)) {
          result.push_back(x);
        }
      }
      return result;
    }

    [[nodiscard]] Element power(Element x, std::size_t n) const {
      detail::require(n >= 1,
                      ErrorKind::invalid_argument,
                      "powers in a semigroup start at 1");
      Element result = x;
      for (std::size_t i = 1; i < n; ++i) {
        result = product(result, x);
      }
      return result;
    }

    // Green's relations are computed once, on first use, and shared by
    // copies.
    [[nodiscard]] GreenData const& green() const {
      std::call_once(_green->once, [this] {
        detail::Adjacency right(_size), left(_size);
        std::vector<bool> idem(_size);
        for (Element x = 0; x < _size; ++x) {
          for (auto g : _generators) {
            right[x].push_back(product(x, g));
            left[x].push_back(product(g, x));
          }
          idem[x] = is_idempotent(x);
        }
        _green->data = detail::green_from_cayley(right, left, idem);
      });
      return _green->data;
    }

   private:
    void check_associative() const {
      auto check = [this](Element x, Element y, Element z) {
        detail::require(product(product(x, y), z) == product(x, product(y, z)),
                        ErrorKind::invalid_argument,
                        "table is not associative");
      };
      if (_size <= 512) {
        for (Element x = 0; x < _size; ++x)
          for (Element y = 0; y < _size; ++y)
            for (Element z = 0; z < _size; ++z)
              check(x, y, z);
      } else {
        std::mt19937_64                        rng(0x5eed);
        std::uniform_int_distribution<Element> pick(0, _size - 1);
        for (int i = 0; i < 1000000; ++i) {
          check(pick(rng), pick(rng), pick(rng));
        }
      }
    }

    void compute_witnesses() {
      _witnesses.assign(_size, Word{});
      std::vector<bool>    seen(_size, false);
      std::vector<Element> order;
      for (Letter a = 0; a < _generators.size(); ++a) {
        Element g = _generators[a];
        if (!seen[g]) {
          seen[g]       = true;
          _witnesses[g] = Word{a};
          order.push_back(g);
        }
      }
      for (std::size_t i = 0; i < order.size(); ++i) {
        for (Letter a = 0; a < _generators.size(); ++a) {
          Element y = product(order[i], _generators[a]);
          if (!seen[y]) {
            seen[y]       = true;
            _witnesses[y] = concat(_witnesses[order[i]], Word{a});
            order.push_back(y);
          }
        }
      }
      detail::require(order.size() == _size,
                      ErrorKind::invalid_argument,
                      "the generators do not generate the semigroup");
    }

    std::size_t                                 _size = 0;
    std::vector<Element>                        _table;
    std::vector<Element>                        _generators;
    Alphabet                                    _alphabet;
    std::vector<Word>                           _witnesses;
    std::vector<Transformation>                 _elements;
    std::shared_ptr<detail::GreenCache>         _green
        = std::make_shared<detail::GreenCache>();
  };

  // S with an identity adjoined as the last element.
  inline FiniteSemigroup adjoin_identity(FiniteSemigroup const& S) {
    std::size_t const    n = S.size() + 1;
    std::vector<Element> table(n * n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        table[x * n + y] = x == n - 1   ? y
                           : y == n - 1 ? x
                                        : S.product(x, y);
      }
    }
    auto gens = S.generators();
    gens.push_back(n - 1);
    auto names = S.alphabet().symbols();
    names.push_back("1");
    return FiniteSemigroup::from_table(
        n, std::move(table), std::move(gens), Alphabet(std::move(names)));
  }

  inline FiniteSemigroup cyclic_group(std::size_t n) {
    std::vector<Element> table(n * n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        table[x * n + y] = (x + y) % n;
      }
    }
    // Generated by 1 (element 0 is the identity).
    return FiniteSemigroup::from_table(
        n, std::move(table), {Element(n == 1 ? 0 : 1)}, Alphabet({"g"}));
  }

  ////////////////////////////////////////////////////////////////////////
  // omega-powers
  ////////////////////////////////////////////////////////////////////////

  struct IndexPeriod {
    std::size_t index;
    std::size_t period;
  };

  // s^index = s^(index + period) with both minimal.
  inline IndexPeriod index_period(FiniteSemigroup const& S, Element s) {
    std::map<Element, std::size_t> first;
    Element                        x = s;
    for (std::size_t k = 1;; ++k) {
      auto [it, inserted] = first.emplace(x, k);
      if (!inserted) {
        return {it->second, k - it->second};
      }
      x = S.product(x, s);
    }
  }

  // The exponent e of s^omega: the multiple of the period in
  // [index, index + period).
  inline std::size_t omega_exponent(FiniteSemigroup const& S, Element s) {
    auto [i, p] = index_period(S, s);
    return ((i + p - 1) / p) * p;
  }

  inline Element omega_power(FiniteSemigroup const& S, Element s) {
    return S.power(s, omega_exponent(S, s));
  }

  // s^(omega + q), computed in the cyclic group of s.
  inline Element omega_plus(FiniteSemigroup const& S,
                            Element                s,
                            long long              q) {
    auto [i, p]       = index_period(S, s);
    std::size_t e     = ((i + p - 1) / p) * p;
    long long   r     = q % static_cast<long long>(p);
    if (r < 0) {
      r += static_cast<long long>(p);
    }
    return S.power(s, e + static_cast<std::size_t>(r));
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite groups
  ////////////////////////////////////////////////////////////////////////

  enum class GroupVerdict { isomorphic, not_isomorphic, invariant_equal };

  inline char const* to_string(GroupVerdict v) noexcept {
    switch (v) {
      case GroupVerdict::isomorphic:
        return "Iso";
      case GroupVerdict::not_isomorphic:
        return "NotIso";
      case GroupVerdict::invariant_equal:
        return "InvariantEqual";
    }
    return "Unknown";
  }

  class FiniteGroup {
   public:
    FiniteGroup() : FiniteGroup(1, {0}) {}

    FiniteGroup(std::size_t order, std::vector<std::size_t> table)
        : _order(order), _table(std::move(table)) {
      detail::require(_table.size() == _order * _order,
                      ErrorKind::invalid_argument,
                      "group table has the wrong size");
      _identity = _order;
      for (std::size_t e = 0; e < _order && _identity == _order; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < _order && ok; ++x) {
          ok = mul(e, x) == x && mul(x, e) == x;
        }
        if (ok) {
          _identity = e;
        }
      }
      detail::require(_identity < _order,
                      ErrorKind::invalid_argument,
                      "group table without identity");
      for (std::size_t x = 0; x < _order; ++x) {
        bool has_inverse = false;
        for (std::size_t y = 0; y < _order && !has_inverse; ++y) {
          has_inverse = mul(x, y) == _identity;
        }
        detail::require(has_inverse,
                        ErrorKind::invalid_argument,
                        "group table without inverses");
      }
    }

    // The group generated by permutations (as image vectors) under
    // composition, first the left factor then the right.
    static FiniteGroup from_permutations(std::vector<Transformation> perms) {
      std::sort(perms.begin(), perms.end());
      perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
      std::map<Transformation, std::size_t> index;
      for (std::size_t i = 0; i < perms.size(); ++i) {
        index.emplace(perms[i], i);
      }
      std::size_t const        n = perms.size();
      std::vector<std::size_t> table(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          Transformation z(perms[x].size());
          for (std::size_t q = 0; q < z.size(); ++q) {
            z[q] = perms[y][perms[x][q]];
          }
          auto it = index.find(z);
          detail::require(it != index.end(),
                          ErrorKind::mismatch_bug,
                          "permutations are not closed under composition");
          table[x * n + y] = it->second;
        }
      }
      return FiniteGroup(n, std::move(table));
    }

    [[nodiscard]] std::size_t order() const noexcept {
      return _order;
    }
    [[nodiscard]] std::size_t identity() const noexcept {
      return _identity;
    }
    [[nodiscard]] std::size_t mul(std::size_t x, std::size_t y) const {
      return _table[x * _order + y];
    }

    [[nodiscard]] std::size_t element_order(std::size_t x) const {
      std::size_t k = 1;
      for (std::size_t y = x; y != _identity; y = mul(y, x)) {
        ++k;
      }
      return k;
    }

    [[nodiscard]] bool is_abelian() const {
      for (std::size_t x = 0; x < _order; ++x)
        for (std::size_t y = 0; y < x; ++y)
          if (mul(x, y) != mul(y, x))
            return false;
      return true;
    }

    [[nodiscard]] std::vector<std::size_t> element_orders() const {
      std::vector<std::size_t> result;
      for (std::size_t x = 0; x < _order; ++x) {
        result.push_back(element_order(x));
      }
      std::sort(result.begin(), result.end());
      return result;
    }

    // Short name: C<n> for cyclic groups, otherwise order, commutativity
    // and the multiset of element orders.
    [[nodiscard]] std::string descriptor() const {
      auto orders = element_orders();
      if (orders.back() == _order) {
        return "C" + std::to_string(_order);
      }
      std::ostringstream out;
      out << "G" << _order << (is_abelian() ? "ab" : "na") << "[";
      for (std::size_t i = 0; i < orders.size(); ++i) {
        out << (i ? "," : "") << orders[i];
      }
      out << "]";
      return out.str();
    }

    // A small generating set, chosen greedily.
    [[nodiscard]] std::vector<std::size_t> generating_set() const {
      std::vector<std::size_t> gens;
      std::vector<bool>        in(_order, false);
      in[_identity]     = true;
      std::size_t count = 1;
      while (count < _order) {
        std::size_t g = 0;
        while (in[g]) {
          ++g;
        }
        gens.push_back(g);
        // Close under right multiplication by all generators.
        std::vector<std::size_t> todo;
        for (std::size_t x = 0; x < _order; ++x) {
          if (in[x]) {
            todo.push_back(x);
          }
        }
        while (!todo.empty()) {
          std::size_t x = todo.back();
          todo.pop_back();
          for (auto h : gens) {
            std::size_t y = mul(x, h);
            if (!in[y]) {
              in[y] = true;
              ++count;
              todo.push_back(y);
            }
          }
        }
      }
      return gens;
    }

   private:
    std::size_t              _order = 1;
    std::vector<std::size_t> _table;
    std::size_t              _identity = 0;
  };

  namespace detail {
    // Tries to extend gens[i] -> images[i] to an isomorphism G -> K.
    inline bool extends_to_isomorphism(FiniteGroup const&              G,
                                       FiniteGroup const&              K,
                                       std::vector<std::size_t> const& gens,
                                       std::vector<std::size_t> const& images) {
      std::size_t const        undefined = G.order();
      std::vector<std::size_t> phi(G.order(), undefined);
      std::vector<bool>        used(K.order(), false);
      phi[G.identity()]  = K.identity();
      used[K.identity()] = true;
      std::vector<std::size_t> todo{G.identity()};
      while (!todo.empty()) {
        std::size_t x = todo.back();
        todo.pop_back();
        for (std::size_t i = 0; i < gens.size(); ++i) {
          std::size_t y  = G.mul(x, gens[i]);
          std::size_t fy = K.mul(phi[x], images[i]);
          if (phi[y] == undefined) {
            if (used[fy]) {
              return false;
            }
            phi[y]   = fy;
            used[fy] = true;
            todo.push_back(y);
          } else if (phi[y] != fy) {
            return false;
          }
        }
      }
      // phi is now a bijection respecting right multiplication by
      // generators, hence a homomorphism.
      for (std::size_t x = 0; x < G.order(); ++x) {
        for (std::size_t y = 0; y < G.order(); ++y) {
          if (phi[G.mul(x, y)] != K.mul(phi[x], phi[y])) {
            return false;
          }
        }
      }
      return true;
    }

    inline bool search_images(FiniteGroup const&              G,
                              FiniteGroup const&              K,
                              std::vector<std::size_t> const& gens,
                              std::vector<std::size_t>&       images) {
      if (images.size() == gens.size()) {
        return extends_to_isomorphism(G, K, gens, images);
      }
      std::size_t const need = G.element_order(gens[images.size()]);
      for (std::size_t y = 0; y < K.order(); ++y) {
        if (K.element_order(y) == need) {
          images.push_back(y);
          if (search_images(G, K, gens, images)) {
            return true;
          }
          images.pop_back();
        }
      }
      return false;
    }
  }  // namespace detail

  // Exact for groups of order at most 64; above that only the invariant
  // vector (order, commutativity, element orders) is compared.
  inline GroupVerdict compare_groups(FiniteGroup const& G,
                                     FiniteGroup const& K) {
    if (G.order() != K.order() || G.is_abelian() != K.is_abelian()
        || G.element_orders() != K.element_orders()) {
      return GroupVerdict::not_isomorphic;
    }
    if (G.order() > 64) {
      return GroupVerdict::invariant_equal;
    }
    std::vector<std::size_t> images;
    return detail::search_images(G, K, G.generating_set(), images)
               ? GroupVerdict::isomorphic
               : GroupVerdict::not_isomorphic;
  }

  ////////////////////////////////////////////////////////////////////////
  // Schutzenberger groups and maximal subgroups
  ////////////////////////////////////////////////////////////////////////

  struct SchutzGroup {
    std::vector<Element>        H;          // the H-class, sorted
    std::vector<Transformation> carrier;    // permutations of positions in H
    FiniteGroup                 group;

    [[nodiscard]] std::size_t order() const noexcept {
      return group.order();
    }
  };

  // Right translations by s in S^1 that map the H-class into itself, as
  // permutations of H, with equal actions identified.
  inline SchutzGroup schutzenberger(FiniteSemigroup const& S, std::size_t h) {
    auto const&  g = S.green();
    SchutzGroup  result;
    result.H = g.H_class(h);
    detail::require(!result.H.empty(),
                    ErrorKind::invalid_argument,
                    "no such H-class");
    std::map<Element, std::size_t> pos;
    for (std::size_t i = 0; i < result.H.size(); ++i) {
      pos.emplace(result.H[i], i);
    }
    Transformation identity(result.H.size());
    std::iota(identity.begin(), identity.end(), 0);
    std::vector<Transformation> perms{identity};
    for (Element s = 0; s < S.size(); ++s) {
      Transformation t(result.H.size());
      bool           stable = true;
      for (std::size_t i = 0; i < result.H.size() && stable; ++i) {
        auto it = pos.find(S.product(result.H[i], s));
        stable  = it != pos.end();
        if (stable) {
          t[i] = it->second;
        }
      }
      if (stable) {
        perms.push_back(std::move(t));
      }
    }
    std::sort(perms.begin(), perms.end());
    perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
    result.group   = FiniteGroup::from_permutations(perms);
    result.carrier = std::move(perms);
    detail::require(result.group.order() == result.H.size(),
                    ErrorKind::mismatch_bug,
                    "Schutzenberger group does not act simply transitively");
    return result;
  }

  inline SchutzGroup schutzenberger_of(FiniteSemigroup const& S, Element x) {
    return schutzenberger(S, S.green().H[x]);
  }

  // The H-class of an idempotent as a group under the product of S.
  inline FiniteGroup maximal_subgroup(FiniteSemigroup const& S, Element e) {
    detail::require(S.is_idempotent(e),
                    ErrorKind::not_idempotent,
                    "maximal subgroups are taken at idempotents");
    auto                           H = S.green().H_class(S.green().H[e]);
    std::map<Element, std::size_t> pos;
    for (std::size_t i = 0; i < H.size(); ++i) {
      pos.emplace(H[i], i);
    }
    std::vector<std::size_t> table(H.size() * H.size());
    for (std::size_t i = 0; i < H.size(); ++i) {
      for (std::size_t j = 0; j < H.size(); ++j) {
        table[i * H.size() + j] = pos.at(S.product(H[i], H[j]));
      }
    }
    return FiniteGroup(H.size(), std::move(table));
  }

  ////////////////////////////////////////////////////////////////////////
  // Local units and conjugate idempotents
  ////////////////////////////////////////////////////////////////////////

  // Elements s of K with s = esf for idempotents e, f. It suffices to find
  // e with es = s and f with sf = s separately.
  inline std::vector<Element> local_units(FiniteSemigroup const&      S,
                                          std::vector<Element> const& K) {
    auto const           E = S.idempotents();
    std::vector<Element> result;
    for (auto s : K) {
      bool left = std::any_of(
          E.begin(), E.end(), [&](Element e) { return S.product(e, s) == s; });
      bool right = std::any_of(
          E.begin(), E.end(), [&](Element f) { return S.product(s, f) == s; });
      if (left && right) {
        result.push_back(s);
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  inline std::vector<Element> all_elements(FiniteSemigroup const& S) {
    std::vector<Element> all(S.size());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }

  // (x, y) with e = xy and f = yx, or nothing when e and f are not
  // J-equivalent.
  inline std::optional<std::pair<Element, Element>>
  conjugation_witness(FiniteSemigroup const& S, Element e, Element f) {
    detail::require(S.is_idempotent(e) && S.is_idempotent(f),
                    ErrorKind::not_idempotent,
                    "conjugation witnesses are for idempotents");
    if (e == f) {
      return std::pair(e, e);
    }
    if (S.green().J[e] != S.green().J[f]) {
      return std::nullopt;
    }
    for (Element x = 0; x < S.size(); ++x) {
      for (Element y = 0; y < S.size(); ++y) {
        if (S.product(x, y) == e && S.product(y, x) == f) {
          return std::pair(x, y);
        }
      }
    }
    detail::fail(ErrorKind::mismatch_bug,
                 "J-equivalent idempotents without a conjugation witness");
  }

  ////////////////////////////////////////////////////////////////////////
  // Deterministic automata and syntactic semigroups
  ////////////////////////////////////////////////////////////////////////

  // A complete deterministic automaton; state 0 is initial.
  struct Dfa {
    std::size_t                           alphabet_size = 0;
    std::vector<std::vector<std::size_t>> delta;  // delta[q][a]
    std::vector<bool>                     accepting;

    [[nodiscard]] std::size_t size() const noexcept {
      return delta.size();
    }
  };

  // Subset construction from the set of all vertices; the empty subset is
  // the (non-accepting) sink and every other reachable subset accepts.
  inline Dfa determinize(ShiftPresentation const& X) {
    auto const                Y = detail::essential(X);
    Dfa                       D;
    std::map<Subset, std::size_t> ids;
    std::vector<Subset>       states{Y.all_vertices()};
    ids.emplace(states[0], 0);
    D.alphabet_size = Y.alphabet().size();
    for (std::size_t i = 0; i < states.size(); ++i) {
      std::vector<std::size_t> row(D.alphabet_size);
      for (Letter a = 0; a < D.alphabet_size; ++a) {
        Subset next = Y.step(states[i], a);
        auto [it, inserted] = ids.emplace(next, states.size());
        if (inserted) {
          states.push_back(std::move(next));
        }
        row[a] = it->second;
      }
      D.delta.push_back(std::move(row));
    }
    for (auto const& P : states) {
      D.accepting.push_back(!P.empty());
    }
    return D;
  }

  // Hopcroft's partition refinement, followed by breadth-first renumbering
  // from the initial state. Assumes every state is reachable.
  inline Dfa minimize(Dfa const& D) {
    std::size_t const n = D.size();
    std::size_t const k = D.alphabet_size;
    // inverse[a][q] = states p with delta[p][a] = q
    std::vector<std::vector<std::vector<std::size_t>>> inverse(
        k, std::vector<std::vector<std::size_t>>(n));
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t a = 0; a < k; ++a) {
        inverse[a][D.delta[p][a]].push_back(p);
      }
    }
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::size_t>              block_of(n);
    {
      std::vector<std::size_t> acc, rej;
      for (std::size_t q = 0; q < n; ++q) {
        (D.accepting[q] ? acc : rej).push_back(q);
      }
      for (auto* B : {&acc, &rej}) {
        if (!B->empty()) {
          for (auto q : *B) {
            block_of[q] = blocks.size();
          }
          blocks.push_back(std::move(*B));
        }
      }
    }
    std::vector<bool>        in_work(blocks.size(), true);
    std::vector<std::size_t> work;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      work.push_back(b);
    }
    std::vector<std::size_t> mark_count;
    std::vector<bool>        marked(n, false);
    while (!work.empty()) {
      std::size_t A = work.back();
      work.pop_back();
      in_work[A]                            = false;
      std::vector<std::size_t> const splitter = blocks[A];
      for (std::size_t a = 0; a < k; ++a) {
        std::vector<std::size_t> X;
        for (auto q : splitter) {
          for (auto p : inverse[a][q]) {
            if (!marked[p]) {
              marked[p] = true;
              X.push_back(p);
            }
          }
        }
        // Group the marked states by block.
        std::map<std::size_t, std::vector<std::size_t>> touched;
        for (auto p : X) {
          touched[block_of[p]].push_back(p);
        }
        for (auto& [Y, inside] : touched) {
          if (inside.size() == blocks[Y].size()) {
            continue;
          }
          std::vector<std::size_t> outside;
          for (auto q : blocks[Y]) {
            if (!marked[q]) {
              outside.push_back(q);
            }
          }
          std::size_t const Z = blocks.size();
          blocks[Y]           = inside;
          for (auto q : outside) {
            block_of[q] = Z;
          }
          blocks.push_back(std::move(outside));
          in_work.push_back(false);
          if (in_work[Y]) {
            work.push_back(Z);
            in_work[Z] = true;
          } else {
            std::size_t smaller
                = blocks[Y].size() <= blocks[Z].size() ? Y : Z;
            work.push_back(smaller);
            in_work[smaller] = true;
          }
        }
        for (auto p : X) {
          marked[p] = false;
        }
      }
    }

    Dfa                      M;
    M.alphabet_size = k;
    std::vector<std::size_t> id(blocks.size(), n);
    std::vector<std::size_t> order{block_of[0]};
    id[block_of[0]] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      std::size_t rep = blocks[order[i]].front();
      std::vector<std::size_t> row(k);
      for (std::size_t a = 0; a < k; ++a) {
        std::size_t b = block_of[D.delta[rep][a]];
        if (id[b] == n) {
          id[b] = order.size();
          order.push_back(b);
        }
        row[a] = id[b];
      }
      M.delta.push_back(std::move(row));
      M.accepting.push_back(D.accepting[rep]);
    }
    return M;
  }

  struct SyntacticSemigroup {
    FiniteSemigroup      S;
    std::vector<Element> accept;  // eta(L(X)), sorted
    Dfa                  automaton;

    [[nodiscard]] bool accepts(Element x) const {
      return std::binary_search(accept.begin(), accept.end(), x);
    }
    [[nodiscard]] Element eta(Word const& w) const {
      return S.evaluate(w);
    }
  };

  // The transition semigroup of the minimal automaton of L(X). An element
  // is accepted when it does not send the initial state to the sink.
  inline SyntacticSemigroup syntactic_semigroup(ShiftPresentation const& X,
                                                std::size_t size_limit
                                                = 100000) {
    auto const         Y = detail::essential(X);
    SyntacticSemigroup result;
    result.automaton = minimize(determinize(Y));
    auto const&                 M = result.automaton;
    std::vector<Transformation> gens(M.alphabet_size,
                                     Transformation(M.size()));
    for (std::size_t q = 0; q < M.size(); ++q) {
      for (std::size_t a = 0; a < M.alphabet_size; ++a) {
        gens[a][q] = M.delta[q][a];
      }
    }
    result.S = FiniteSemigroup::generate(gens, Y.alphabet(), size_limit);
    for (Element x = 0; x < result.S.size(); ++x) {
      if (M.accepting[result.S.transformations()[x][0]]) {
        result.accept.push_back(x);
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Random transformation semigroups
  ////////////////////////////////////////////////////////////////////////

  // One random transformation of {0, ..., degree - 1} per letter; retries
  // until the generated semigroup has at most max_size elements.
  inline FiniteSemigroup random_transformation_semigroup(std::mt19937_64& rng,
                                                         Alphabet const& A,
                                                         std::size_t degree,
                                                         std::size_t max_size) {
    std::uniform_int_distribution<std::size_t> pick(0, degree - 1);
    for (int attempt = 0; attempt < 1000; ++attempt) {
      std::vector<Transformation> gens(A.size(), Transformation(degree));
      for (auto& t : gens) {
        for (auto& q : t) {
          q = pick(rng);
        }
      }
      try {
        return FiniteSemigroup::generate(gens, A, max_size);
      } catch (Error const& e) {
        if (e.kind() != ErrorKind::size_limit) {
          throw;
        }
      }
    }
    detail::fail(ErrorKind::size_limit,
                 "no random semigroup within the size bound");
  }

}  // namespace shiftcat

#endif  // SHIFTCAT_SEMIGROUPS_HPP_
