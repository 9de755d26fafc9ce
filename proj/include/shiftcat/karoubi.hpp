// shiftcat - symbolic dynamics, block codes and Karoubi envelopes
//
// The Karoubi envelope of a finite semigroup: objects are idempotents and
// arrows e -> f are triples (e, s, f) with s = esf. Retraction order,
// automorphism groups, isomorphism census, the labeled posets of J-classes
// of local units, and block-map functors on omega-term arrows.

#ifndef SHIFTCAT_KAROUBI_HPP_
#define SHIFTCAT_KAROUBI_HPP_

#include <algorithm>  // for sort, binary_search, find
#include <cstddef>    // for size_t
#include <map>        // for map
#include <optional>   // for optional
#include <sstream>    // for ostringstream
#include <string>     // for string
#include <utility>    // for move, pair
#include <vector>     // for vector

#include "codes.hpp"
#include "detail/graph.hpp"
#include "errors.hpp"
#include "pseudowords.hpp"
#include "semigroups.hpp"

namespace shiftcat {

  struct Arrow {
    Element e;  // domain idempotent
    Element s;
    Element f;  // codomain idempotent

    auto operator<=>(Arrow const&) const = default;
  };

  class KaroubiCategory {
   public:
    // Arrows with middle component in K; K = all of S when empty.
    explicit KaroubiCategory(FiniteSemigroup S, std::vector<Element> K = {})
        : _base(std::move(S)), _in_K(_base.size(), K.empty()) {
      for (auto s : K) {
        detail::require(s < _base.size(),
                        ErrorKind::invalid_argument,
                        "subset element out of range");
        _in_K[s] = true;
      }
      for (auto e : _base.idempotents()) {
        if (_in_K[e]) {
          _objects.push_back(e);
        }
      }
    }

    static KaroubiCategory build(FiniteSemigroup S, std::vector<Element> K = {}) {
      return KaroubiCategory(std::move(S), std::move(K));
    }

    [[nodiscard]] FiniteSemigroup const& base() const noexcept {
      return _base;
    }
    [[nodiscard]] std::vector<Element> const& objects() const noexcept {
      return _objects;
    }
    [[nodiscard]] bool in_K(Element s) const {
      return _in_K[s];
    }

    [[nodiscard]] bool is_arrow(Arrow const& a) const {
      return is_object(a.e) && is_object(a.f) && _in_K[a.s]
             && _base.product(_base.product(a.e, a.s), a.f) == a.s;
    }

    [[nodiscard]] bool is_object(Element e) const {
      return std::binary_search(_objects.begin(), _objects.end(), e);
    }

    // The hom-set from e to f, computed on demand.
    [[nodiscard]] std::vector<Arrow> hom(Element e, Element f) const {
      std::vector<Arrow> result;
      for (Element s = 0; s < _base.size(); ++s) {
        if (_in_K[s] && _base.product(_base.product(e, s), f) == s) {
          result.push_back({e, s, f});
        }
      }
      return result;
    }

    // Every arrow, ordered by (e, s, f); only for bases of size <= 200.
    [[nodiscard]] std::vector<Arrow> arrows() const {
      detail::require(_base.size() <= 200,
                      ErrorKind::size_limit,
                      "arrows are materialized only for |S| <= 200");
      std::vector<Arrow> result;
      for (auto e : _objects)
        for (Element s = 0; s < _base.size(); ++s)
          for (auto f : _objects)
            if (_in_K[s] && _base.product(_base.product(e, s), f) == s)
              result.push_back({e, s, f});
      return result;
    }

    [[nodiscard]] Arrow identity(Element e) const {
      detail::require(is_object(e), ErrorKind::invalid_arrow, "not an object");
      return {e, e, e};
    }

    [[nodiscard]] Arrow compose(Arrow const& a, Arrow const& b) const {
      detail::require(a.f == b.e,
                      ErrorKind::invalid_arrow,
                      "arrows are not composable");
      return {a.e, _base.product(a.s, b.s), b.f};
    }

   private:
    FiniteSemigroup      _base;
    std::vector<bool>    _in_K;
    std::vector<Element> _objects;
  };

  ////////////////////////////////////////////////////////////////////////
  // Retractions, automorphisms and isomorphism classes
  ////////////////////////////////////////////////////////////////////////

  // leq[i][j] holds when objects()[i] is a retract of objects()[j]: there
  // are s: e -> f and t: f -> e with st = e. Checked against the J-order.
  inline std::vector<std::vector<bool>> retraction_order(KaroubiCategory const& K) {
    auto const&       S    = K.base();
    auto const&       objs = K.objects();
    std::size_t const n    = objs.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto const to   = K.hom(objs[i], objs[j]);
        auto const from = K.hom(objs[j], objs[i]);
        for (std::size_t x = 0; x < to.size() && !leq[i][j]; ++x) {
          for (auto const& b : from) {
            if (S.product(to[x].s, b.s) == objs[i]) {
              leq[i][j] = true;
              break;
            }
          }
        }
        detail::require(leq[i][j] == S.green().J_below(objs[i], objs[j]),
                        ErrorKind::mismatch_bug,
                        "retraction order differs from the J-order");
      }
    }
    return leq;
  }

  struct ObjectGroup {
    Element              object;
    std::vector<Element> units;  // middles of the invertible arrows e -> e
    FiniteGroup          group;
  };

  // Invertible arrows e -> e; isomorphic to the maximal subgroup at e.
  inline ObjectGroup automorphism_group(KaroubiCategory const& K, Element e) {
    detail::require(K.is_object(e), ErrorKind::invalid_argument, "not an object");
    auto const& S = K.base();
    ObjectGroup result{e, {}, {}};
    auto const  loops = K.hom(e, e);
    for (auto const& a : loops) {
      for (auto const& b : loops) {
        if (S.product(a.s, b.s) == e && S.product(b.s, a.s) == e) {
          result.units.push_back(a.s);
          break;
        }
      }
    }
    std::size_t const        n = result.units.size();
    std::vector<std::size_t> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto it = std::lower_bound(result.units.begin(),
                                   result.units.end(),
                                   S.product(result.units[i], result.units[j]));
        table[i * n + j] = static_cast<std::size_t>(it - result.units.begin());
      }
    }
    result.group = FiniteGroup(n, std::move(table));
    detail::require(
        compare_groups(result.group, maximal_subgroup(S, e))
            != GroupVerdict::not_isomorphic,
        ErrorKind::mismatch_bug,
        "automorphism group differs from the maximal subgroup");
    return result;
  }

  struct Census {
    // class size n -> number of objects lying in classes of size n
    std::map<std::size_t, std::size_t> objects_by_class_size;
    std::vector<std::vector<Element>>  classes;
  };

  // Objects e, f are isomorphic when st = e and ts = f for some s: e -> f,
  // t: f -> e. The classes must be the J-classes of idempotents.
  inline Census iso_class_census(KaroubiCategory const& K) {
    auto const&                     S    = K.base();
    auto const&                     objs = K.objects();
    std::vector<bool>               done(objs.size(), false);
    Census                          census;
    auto isomorphic = [&](Element e, Element f) {
      auto const to   = K.hom(e, f);
      auto const from = K.hom(f, e);
      for (auto const& a : to)
        for (auto const& b : from)
          if (S.product(a.s, b.s) == e && S.product(b.s, a.s) == f)
            return true;
      return false;
    };
    for (std::size_t i = 0; i < objs.size(); ++i) {
      if (done[i]) {
        continue;
      }
      std::vector<Element> cls;
      for (std::size_t j = i; j < objs.size(); ++j) {
        bool const iso = !done[j] && isomorphic(objs[i], objs[j]);
        detail::require(
            done[j] || iso == (S.green().J[objs[i]] == S.green().J[objs[j]]),
            ErrorKind::mismatch_bug,
            "isomorphism of objects differs from J-equivalence");
        if (iso) {
          done[j] = true;
          cls.push_back(objs[j]);
        }
      }
      census.objects_by_class_size[cls.size()] += cls.size();
      census.classes.push_back(std::move(cls));
    }
    return census;
  }

  ////////////////////////////////////////////////////////////////////////
  // Labeled posets of J-classes
  ////////////////////////////////////////////////////////////////////////

  struct LabeledPoset {
    std::vector<Element>           representative;
    std::vector<std::vector<bool>> leq;
    std::vector<bool>              regular;
    std::vector<FiniteGroup>       group;

    [[nodiscard]] std::size_t size() const noexcept {
      return representative.size();
    }
    [[nodiscard]] std::string label(std::size_t i) const {
      return "(" + std::string(regular[i] ? "1" : "0") + ", "
             + group[i].descriptor() + ")";
    }
  };

  // J-classes of S contained in the local units of K, ordered by the
  // J-order and labeled by regularity and Schutzenberger group.
  inline LabeledPoset lu_labeled_poset(FiniteSemigroup const&      S,
                                       std::vector<Element> const& K) {
    auto const&              g = S.green();
    std::vector<std::size_t> classes;
    LabeledPoset             P;
    for (auto s : local_units(S, K)) {
      if (std::find(classes.begin(), classes.end(), g.J[s]) == classes.end()) {
        classes.push_back(g.J[s]);
        P.representative.push_back(s);
      }
    }
    std::size_t const n = classes.size();
    P.leq.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        P.leq[i][j] = g.J_leq[classes[i]][classes[j]];
      }
      P.regular.push_back(g.regular[classes[i]]);
      P.group.push_back(schutzenberger_of(S, P.representative[i]).group);
    }
    return P;
  }

  inline LabeledPoset lu_labeled_poset(FiniteSemigroup const& S) {
    return lu_labeled_poset(S, all_elements(S));
  }

  struct PosetVerdict {
    GroupVerdict             verdict = GroupVerdict::isomorphic;
    std::vector<std::size_t> witness;  // P element i -> Q element witness[i]
    std::string              reason;
  };

  namespace detail {
    inline bool poset_search(LabeledPoset const&                   P,
                             LabeledPoset const&                   Q,
                             std::vector<std::vector<GroupVerdict>> const& lab,
                             std::vector<std::size_t>&             map,
                             std::vector<bool>&                    used,
                             bool                                  exact) {
      std::size_t const i = map.size();
      if (i == P.size()) {
        return true;
      }
      for (std::size_t j = 0; j < Q.size(); ++j) {
        if (used[j] || lab[i][j] == GroupVerdict::not_isomorphic
            || (exact && lab[i][j] != GroupVerdict::isomorphic)) {
          continue;
        }
        bool ok = true;
        for (std::size_t k = 0; k < i && ok; ++k) {
          ok = P.leq[i][k] == Q.leq[j][map[k]] && P.leq[k][i] == Q.leq[map[k]][j];
        }
        if (!ok) {
          continue;
        }
        map.push_back(j);
        used[j] = true;
        if (poset_search(P, Q, lab, map, used, exact)) {
          return true;
        }
        map.pop_back();
        used[j] = false;
      }
      return false;
    }
  }  // namespace detail

  // Order- and label-preserving bijection search for at most 16 elements.
  inline PosetVerdict poset_isomorphic(LabeledPoset const& P,
                                       LabeledPoset const& Q) {
    PosetVerdict v;
    if (P.size() != Q.size()) {
      v.verdict = GroupVerdict::not_isomorphic;
      v.reason  = "cardinality " + std::to_string(P.size()) + " vs "
                 + std::to_string(Q.size());
      return v;
    }
    detail::require(P.size() <= 16,
                    ErrorKind::size_limit,
                    "poset isomorphism is searched for at most 16 elements");
    std::vector<std::vector<GroupVerdict>> lab(
        P.size(), std::vector<GroupVerdict>(Q.size()));
    for (std::size_t i = 0; i < P.size(); ++i) {
      for (std::size_t j = 0; j < Q.size(); ++j) {
        lab[i][j] = P.regular[i] != Q.regular[j]
                        ? GroupVerdict::not_isomorphic
                        : compare_groups(P.group[i], Q.group[j]);
      }
    }
    for (bool exact : {true, false}) {
      std::vector<std::size_t> map;
      std::vector<bool>        used(Q.size(), false);
      if (detail::poset_search(P, Q, lab, map, used, exact)) {
        v.verdict = exact ? GroupVerdict::isomorphic
                          : GroupVerdict::invariant_equal;
        v.witness = std::move(map);
        return v;
      }
    }
    v.verdict = GroupVerdict::not_isomorphic;
    v.reason  = "no order- and label-preserving bijection";
    return v;
  }

  // Hasse diagram, nodes labeled (regular bit, group).
  inline std::string to_dot(LabeledPoset const& P, std::string const& name = "LU") {
    std::ostringstream out;
    out << "digraph " << name << " {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < P.size(); ++i) {
      out << "  J" << i << " [label=\"" << P.label(i) << "\"];\n";
    }
    for (std::size_t i = 0; i < P.size(); ++i) {
      for (std::size_t j = 0; j < P.size(); ++j) {
        if (i == j || !P.leq[i][j] || P.leq[j][i]) {
          continue;
        }
        bool cover = true;
        for (std::size_t k = 0; k < P.size() && cover; ++k) {
          cover = k == i || k == j || !(P.leq[i][k] && P.leq[k][j]);
        }
        if (cover) {
          out << "  J" << i << " -> J" << j << ";\n";
        }
      }
    }
    out << "}\n";
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // The category side: Green's relations on arrows
  ////////////////////////////////////////////////////////////////////////

  struct ArrowGreen {
    std::vector<Arrow> arrows;
    GreenData          green;

    [[nodiscard]] std::optional<std::size_t> find(Arrow const& a) const {
      auto it = std::lower_bound(arrows.begin(), arrows.end(), a);
      if (it == arrows.end() || !(*it == a)) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - arrows.begin());
    }

    [[nodiscard]] std::size_t index(Arrow const& a) const {
      auto it = std::lower_bound(arrows.begin(), arrows.end(), a);
      detail::require(it != arrows.end() && *it == a,
                      ErrorKind::invalid_arrow,
                      "not an arrow of the category");
      return static_cast<std::size_t>(it - arrows.begin());
    }
  };

  // Green's relations of the arrows under composition. Products that are
  // not composable, or whose middle leaves K, are the zero of the
  // consolidation; K factorial makes that zero an ideal, so it is dropped.
  inline ArrowGreen arrow_green(KaroubiCategory const& K,
                                std::size_t size_limit = 200000) {
    ArrowGreen result;
    result.arrows = K.arrows();
    std::sort(result.arrows.begin(), result.arrows.end());
    auto const& arrows = result.arrows;
    detail::require(arrows.size() <= size_limit,
                    ErrorKind::size_limit,
                    "too many arrows: " + std::to_string(arrows.size()));
    std::map<Element, std::vector<std::size_t>> from, to;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      from[arrows[i].e].push_back(i);
      to[arrows[i].f].push_back(i);
    }
    detail::Adjacency right(arrows.size()), left(arrows.size());
    std::vector<bool> idempotent(arrows.size());
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      auto const& a = arrows[i];
      for (auto j : from[a.f]) {
        if (auto k = result.find(K.compose(a, arrows[j]))) {
          right[i].push_back(*k);
        }
      }
      for (auto j : to[a.e]) {
        if (auto k = result.find(K.compose(arrows[j], a))) {
          left[i].push_back(*k);
        }
      }
      idempotent[i] = a.e == a.f && K.base().product(a.s, a.s) == a.s;
    }
    result.green = detail::green_from_cayley(right, left, idempotent);
    return result;
  }

  // Right translations by loops at the codomain that keep the H-class of
  // arrows, acting as permutations of it.
  inline FiniteGroup arrow_schutzenberger(KaroubiCategory const& K,
                                          ArrowGreen const&      AG,
                                          std::size_t            i) {
    auto const&              g = AG.green;
    std::vector<std::size_t> H;
    for (std::size_t j = 0; j < AG.arrows.size(); ++j) {
      if (g.H[j] == g.H[i]) {
        H.push_back(j);
      }
    }
    Element const               f = AG.arrows[i].f;
    std::vector<Transformation> perms;
    for (auto const& alpha : K.hom(f, f)) {
      Transformation t(H.size());
      bool           stable = true;
      for (std::size_t x = 0; x < H.size() && stable; ++x) {
        auto img = AG.find(K.compose(AG.arrows[H[x]], alpha));
        auto it  = img ? std::lower_bound(H.begin(), H.end(), *img) : H.end();
        stable   = it != H.end() && *it == *img;
        if (stable) {
          t[x] = static_cast<std::size_t>(it - H.begin());
        }
      }
      if (stable) {
        perms.push_back(std::move(t));
      }
    }
    auto G = FiniteGroup::from_permutations(perms);
    detail::require(G.order() == H.size(),
                    ErrorKind::mismatch_bug,
                    "arrow Schutzenberger group does not act simply transitively");
    return G;
  }

  // J-classes of arrows with their order, regularity and groups.
  inline LabeledPoset karoubi_labeled_poset(KaroubiCategory const& K,
                                            ArrowGreen const&      AG) {
    auto const&  g = AG.green;
    LabeledPoset P;
    std::vector<std::size_t> first(g.nJ, AG.arrows.size());
    for (std::size_t i = 0; i < AG.arrows.size(); ++i) {
      if (first[g.J[i]] == AG.arrows.size()) {
        first[g.J[i]] = i;
      }
    }
    P.leq = g.J_leq;
    for (std::size_t c = 0; c < g.nJ; ++c) {
      P.representative.push_back(first[c]);
      P.regular.push_back(g.regular[c]);
      P.group.push_back(arrow_schutzenberger(K, AG, first[c]));
    }
    return P;
  }

  struct KaroubiLuVerdict {
    GroupVerdict verdict = GroupVerdict::isomorphic;
    LabeledPoset karoubi;  // representatives are arrow indices
    LabeledPoset lu;       // representatives are elements of S
    std::vector<std::size_t> map;  // karoubi class -> lu class
  };

  // The map sending the J-class of (e, u, f) to the J-class of u must be a
  // well-defined isomorphism of labeled posets.
  inline KaroubiLuVerdict karoubi_vs_lu_comparison(FiniteSemigroup const&      S,
                                                   std::vector<Element> const& K) {
    KaroubiCategory const C(S, K);
    auto const            AG = arrow_green(C);
    KaroubiLuVerdict      v;
    v.karoubi = karoubi_labeled_poset(C, AG);
    v.lu      = K.empty() ? lu_labeled_poset(S) : lu_labeled_poset(S, K);
    auto const& gS = S.green();

    std::vector<std::size_t> lu_index(gS.nJ, v.lu.size());
    for (std::size_t i = 0; i < v.lu.size(); ++i) {
      lu_index[gS.J[v.lu.representative[i]]] = i;
    }
    v.map.assign(AG.green.nJ, v.lu.size());
    for (std::size_t i = 0; i < AG.arrows.size(); ++i) {
      std::size_t const image = lu_index[gS.J[AG.arrows[i].s]];
      detail::require(image < v.lu.size(),
                      ErrorKind::mismatch_bug,
                      "arrow middle outside the local units");
      std::size_t& m = v.map[AG.green.J[i]];
      detail::require(m == v.lu.size() || m == image,
                      ErrorKind::mismatch_bug,
                      "arrow J-class maps to two J-classes");
      m = image;
    }
    std::vector<std::size_t> sorted = v.map;
    std::sort(sorted.begin(), sorted.end());
    detail::require(
        std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()
            && sorted.size() == v.lu.size(),
        ErrorKind::mismatch_bug,
        "arrow J-classes and local-unit J-classes are not in bijection");
    for (std::size_t c = 0; c < v.map.size(); ++c) {
      for (std::size_t d = 0; d < v.map.size(); ++d) {
        detail::require(v.karoubi.leq[c][d] == v.lu.leq[v.map[c]][v.map[d]],
                        ErrorKind::mismatch_bug,
                        "J-orders of arrows and middles differ");
      }
      detail::require(v.karoubi.regular[c] == v.lu.regular[v.map[c]],
                      ErrorKind::mismatch_bug,
                      "regularity of arrows and middles differs");
      auto const gv = compare_groups(v.karoubi.group[c], v.lu.group[v.map[c]]);
      detail::require(gv != GroupVerdict::not_isomorphic,
                      ErrorKind::mismatch_bug,
                      "Schutzenberger groups of arrows and middles differ");
      if (gv == GroupVerdict::invariant_equal) {
        v.verdict = GroupVerdict::invariant_equal;
      }
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Block-map functors on omega-term arrows
  ////////////////////////////////////////////////////////////////////////

  struct TermArrow {
    OmegaTerm e;
    OmegaTerm u;
    OmegaTerm f;

    bool operator==(TermArrow const&) const = default;
  };

  inline TermArrow compose(TermArrow const& a, TermArrow const& b) {
    return {a.e, concat(a.u, b.u), b.f};
  }

  inline TermArrow identity_arrow(OmegaTerm const& e) {
    return {e, e, e};
  }

  inline TermArrow canonical(TermArrow const& a) {
    return {canonical(a.e), canonical(a.u), canonical(a.f)};
  }

  // e and f idempotent and e u f = u in every test semigroup.
  inline bool arrow_passes(TermArrow const&                  a,
                           std::vector<TestSemigroup> const& tests) {
    return quotient_equal(concat(a.e, a.e), a.e, tests).equal_in_all
           && quotient_equal(concat(a.f, a.f), a.f, tests).equal_in_all
           && quotient_equal(concat(concat(a.e, a.u), a.f), a.u, tests)
                  .equal_in_all;
  }

  inline bool arrows_quotient_equal(TermArrow const&                  a,
                                    TermArrow const&                  b,
                                    std::vector<TestSemigroup> const& tests) {
    return quotient_equal(a.e, b.e, tests).equal_in_all
           && quotient_equal(a.u, b.u, tests).equal_in_all
           && quotient_equal(a.f, b.f, tests).equal_in_all;
  }

  // Phi_K(e) = Phi(t_k(e) e b_k(e)) for a central map of wing k.
  inline OmegaTerm induced_functor_on_idempotent(CentralBlockMap const& Phi,
                                                 OmegaTerm const&       e) {
    std::size_t const k = Phi.wing();
    OmegaTerm         t(term_suffix(e, k));
    t.append(e).append(term_prefix(e, k));
    return term_block_code(Phi, t);
  }

  // (Phi_K(e), Phi(t_k(e) u b_k(f)), Phi_K(f)); the arrow is first checked
  // in the test semigroups, which are over the source alphabet.
  inline TermArrow induced_functor_on_arrow(CentralBlockMap const&            Phi,
                                            TermArrow const&                  a,
                                            std::vector<TestSemigroup> const& tests) {
    detail::require(arrow_passes(a, tests),
                    ErrorKind::invalid_arrow,
                    "e u f = u fails in a test semigroup");
    std::size_t const k = Phi.wing();
    OmegaTerm         middle(term_suffix(a.e, k));
    middle.append(a.u).append(term_prefix(a.f, k));
    return {induced_functor_on_idempotent(Phi, a.e),
            term_block_code(Phi, middle),
            induced_functor_on_idempotent(Phi, a.f)};
  }

}  // namespace shiftcat

#endif  // SHIFTCAT_KAROUBI_HPP_
