// shiftcat - symbolic dynamics, block codes and Karoubi envelopes
//
// Symbol expansion of a presentation, the five types of words and terms
// of the expanded shift, the functors F (expansion) and G (contraction) on
// term arrows, and the natural isomorphism eta from the identity to FG.

#ifndef SHIFTCAT_FLOWOPS_HPP_
#define SHIFTCAT_FLOWOPS_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <utility>  // for move
#include <vector>   // for vector

#include "errors.hpp"
#include "karoubi.hpp"
#include "pseudowords.hpp"
#include "shifts.hpp"
#include "words.hpp"

namespace shiftcat {

  struct ExpansionContext {
    ShiftPresentation source;
    Letter            alpha;
    Letter            diamond;  // the letter |A| of the target alphabet
    ShiftPresentation target;

    [[nodiscard]] Alphabet const& A() const noexcept {
      return source.alphabet();
    }
    [[nodiscard]] Alphabet const& B() const noexcept {
      return target.alphabet();
    }
  };

  // Every edge labeled alpha is split into src -alpha-> mid -diamond-> dst
  // with a fresh middle vertex.
  inline ExpansionContext expand_shift(ShiftPresentation const& X,
                                       Letter                   alpha,
                                       std::string const&       diamond = "o") {
    detail::require(alpha < X.alphabet().size(),
                    ErrorKind::invalid_argument,
                    "the expanded letter is not in the alphabet");
    detail::require(!X.alphabet().find(diamond).has_value(),
                    ErrorKind::alphabet_mismatch,
                    "the diamond '" + diamond + "' is already a letter");
    auto const               Y = detail::essential(X);
    Alphabet const           B = with_diamond(Y.alphabet(), diamond);
    Letter const             d = static_cast<Letter>(Y.alphabet().size());
    std::vector<std::string> names(Y.vertex_names());
    std::vector<Edge>        edges;
    for (auto const& e : Y.edges()) {
      if (e.label != alpha) {
        edges.push_back(e);
        continue;
      }
      std::size_t const mid = names.size();
      names.push_back(names[e.src] + "." + B.name(alpha) + "." + names[e.dst]
                      + "#" + std::to_string(mid));
      edges.push_back({e.src, alpha, mid});
      edges.push_back({mid, d, e.dst});
    }
    return {Y, alpha, d, trim(ShiftPresentation::sofic(B, names, edges))};
  }

  ////////////////////////////////////////////////////////////////////////
  // The five types
  ////////////////////////////////////////////////////////////////////////

  enum class FlowType {
    letter,                // alpha or diamond
    image_E,               // E(v)
    diamond_image_E,       // diamond E(v)
    image_E_alpha,         // E(v) alpha
    diamond_image_E_alpha  // diamond E(v) alpha, v possibly empty
  };

  inline char const* to_string(FlowType t) noexcept {
    switch (t) {
      case FlowType::letter:
        return "Letter";
      case FlowType::image_E:
        return "ImageE";
      case FlowType::diamond_image_E:
        return "DiamondImageE";
      case FlowType::image_E_alpha:
        return "ImageEAlpha";
      case FlowType::diamond_image_E_alpha:
        return "DiamondImageEAlpha";
    }
    return "Unknown";
  }

  // The candidate types are tested independently and exactly one must hold.
  inline FlowType classify_type(OmegaTerm const&        t,
                                ExpansionContext const& ctx) {
    detail::require(!t.empty(), ErrorKind::invalid_argument, "empty term");
    detail::require(mirage_membership(t, ctx.target, 2),
                    ErrorKind::not_in_mirage2,
                    "a factor of length 2 is not a block");
    Letter const a = ctx.alpha, d = ctx.diamond;
    auto in_E = [&](OmegaTerm const& v) {
      return !v.empty() && image_E_membership(v, a, d);
    };
    bool const infinite = !t.is_word();
    std::size_t const n = infinite ? 0 : t.as_word().size();
    bool const starts_d = term_prefix(t, 1)[0] == d;
    bool const ends_a   = term_suffix(t, 1)[0] == a;

    std::vector<FlowType> found;
    if (!infinite && n == 1 && (t.as_word()[0] == a || t.as_word()[0] == d)) {
      found.push_back(FlowType::letter);
    }
    if (in_E(t)) {
      found.push_back(FlowType::image_E);
    }
    if (starts_d && (infinite || n >= 2) && in_E(strip_first(t))) {
      found.push_back(FlowType::diamond_image_E);
    }
    if (ends_a && (infinite || n >= 2) && in_E(strip_last(t))) {
      found.push_back(FlowType::image_E_alpha);
    }
    if (starts_d && ends_a && (infinite || n >= 2)) {
      OmegaTerm const v = strip_boundary(t);
      if (v.empty() || in_E(v)) {
        found.push_back(FlowType::diamond_image_E_alpha);
      }
    }
    detail::require(found.size() == 1,
                    ErrorKind::classification_failure,
                    std::to_string(found.size()) + " types match");
    return found.front();
  }

  inline FlowType classify_type(Word const& w, ExpansionContext const& ctx) {
    return classify_type(OmegaTerm(w), ctx);
  }

  ////////////////////////////////////////////////////////////////////////
  // The functors F and G and the isomorphism eta
  ////////////////////////////////////////////////////////////////////////

  // Componentwise expansion; when tests are given the arrow is first
  // checked in them.
  inline TermArrow functor_F(TermArrow const&                  a,
                             ExpansionContext const&           ctx,
                             std::vector<TestSemigroup> const& tests = {}) {
    detail::require(tests.empty() || arrow_passes(a, tests),
                    ErrorKind::invalid_arrow,
                    "e u f = u fails in a test semigroup");
    return {term_expand(a.e, ctx.alpha, ctx.diamond),
            term_expand(a.u, ctx.alpha, ctx.diamond),
            term_expand(a.f, ctx.alpha, ctx.diamond)};
  }

  inline OmegaTerm contract_component(OmegaTerm const&        t,
                                      ExpansionContext const& ctx) {
    auto c = term_contract(t, ctx.diamond);
    detail::require(c.has_value(),
                    ErrorKind::diamond_only,
                    "a component is made of diamonds only");
    return *c;
  }

  inline TermArrow functor_G(TermArrow const& a, ExpansionContext const& ctx) {
    return {contract_component(a.e, ctx),
            contract_component(a.u, ctx),
            contract_component(a.f, ctx)};
  }

  inline OmegaTerm FG(OmegaTerm const& t, ExpansionContext const& ctx) {
    return term_expand(contract_component(t, ctx), ctx.alpha, ctx.diamond);
  }

  inline TermArrow FG(TermArrow const& a, ExpansionContext const& ctx) {
    return functor_F(functor_G(a, ctx), ctx);
  }

  struct EtaComponent {
    TermArrow arrow;    // e -> FG(e)
    TermArrow inverse;  // FG(e) -> e
    bool      in_image;  // e is in the image of E and eta_e = (e, e, e)
  };

  // eta_e = (e, e, e) when e is in Im E; otherwise e = diamond e' alpha and
  // eta_e = (e, e diamond, e' alpha diamond) with inverse
  // (e' alpha diamond, e' alpha e, e).
  inline EtaComponent eta(OmegaTerm const&                  e,
                          ExpansionContext const&           ctx,
                          std::vector<TestSemigroup> const& tests) {
    detail::require(quotient_equal(concat(e, e), e, tests).equal_in_all,
                    ErrorKind::not_idempotent_witness,
                    "e e = e fails in a test semigroup");
    OmegaTerm const ce = canonical(e);
    if (!ce.empty() && image_E_membership(ce, ctx.alpha, ctx.diamond)) {
      return {identity_arrow(ce), identity_arrow(ce), true};
    }
    detail::require(classify_type(ce, ctx) == FlowType::diamond_image_E_alpha,
                    ErrorKind::classification_failure,
                    "an idempotent outside Im E must be diamond e' alpha");
    OmegaTerm const e1 = strip_boundary(ce);
    OmegaTerm       target(e1);
    target.append(Word{ctx.alpha, ctx.diamond});
    target = canonical(target);
    OmegaTerm back(e1);
    back.append(Word{ctx.alpha}).append(ce);
    return {{ce, canonical(concat(ce, OmegaTerm(Word{ctx.diamond}))), target},
            {target, canonical(back), ce},
            false};
  }

  struct NaturalityVerdict {
    bool        commutes = false;
    std::string proof_case;  // e and f: ImE or DiamondAlpha
    std::string distinguished_by;
    TermArrow   lhs;  // eta_e followed by FG(e, u, f)
    TermArrow   rhs;  // (e, u, f) followed by eta_f
  };

  // The square eta_e FG(e, u, f) = (e, u, f) eta_f in every test semigroup.
  inline NaturalityVerdict verify_naturality(TermArrow const&                  a,
                                             ExpansionContext const&           ctx,
                                             std::vector<TestSemigroup> const& tests) {
    detail::require(arrow_passes(a, tests),
                    ErrorKind::invalid_arrow,
                    "e u f = u fails in a test semigroup");
    auto const        eta_e = eta(a.e, ctx, tests);
    auto const        eta_f = eta(a.f, ctx, tests);
    NaturalityVerdict v;
    v.proof_case = std::string(eta_e.in_image ? "ImE" : "DiamondAlpha") + "/"
                   + (eta_f.in_image ? "ImE" : "DiamondAlpha");
    v.lhs = canonical(compose(eta_e.arrow, FG(a, ctx)));
    v.rhs = canonical(compose(a, eta_f.arrow));
    auto check = [&](OmegaTerm const& x, OmegaTerm const& y) {
      auto q = quotient_equal(x, y, tests);
      if (!q.equal_in_all && v.distinguished_by.empty()) {
        v.distinguished_by = q.distinguished_by;
      }
      return q.equal_in_all;
    };
    bool const e_ok = check(v.lhs.e, v.rhs.e);
    bool const u_ok = check(v.lhs.u, v.rhs.u);
    bool const f_ok = check(v.lhs.f, v.rhs.f);
    v.commutes = e_ok && u_ok && f_ok;
    return v;
  }

}  // namespace shiftcat

#endif  // SHIFTCAT_FLOWOPS_HPP_
