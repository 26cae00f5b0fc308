// F-convex hulls, the equivalence x ~F y and the quotient semigroup.
//
// For a multiplier set closed under multiplication the hull is the union
//
//   conv_F(A) = U_{n in F} n^-1([n]A)
//
// and it is also the least fixed point of H -> H u U_{n in F} n^-1([n]H).
// Both are computed here so each can be checked against the other. A
// GENERATED set is used through its multiplicative closure <G>; the hull
// for the raw generator list itself is only available as a fixed point and
// is bracketed by the two unions over G and over <G>.

#ifndef KONVEX_HULL_HPP_
#define KONVEX_HULL_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <span>      // for span
#include <vector>    // for vector

#include "konvex/element_set.hpp"
#include "konvex/multiplier.hpp"
#include "konvex/report.hpp"
#include "konvex/semigroup.hpp"
#include "konvex/subset.hpp"

namespace konvex {

  enum class HullMethod { fixed_point, formula };

  [[nodiscard]] char const* to_string(HullMethod m) noexcept;

  struct HullResult {
    ElementSet hull;
    HullMethod method = HullMethod::formula;
    // Fixed point: index of the first round whose output is the hull, so a
    // convex input takes one round. Always 1 for the formula.
    std::size_t rounds = 1;
    // Formula only: the n, in visiting order, whose n^-1([n]A) added
    // elements not seen before.
    std::vector<Multiplier> contributing_ns;
  };

  // Hulls relative to <F>; finite carriers only.
  HullResult hull_formula(Semigroup const& s, MultiplierSet const& f, ElementSet const& a);
  HullResult hull_fixedpoint(Semigroup const& s, MultiplierSet const& f, ElementSet const& a);

  struct RawHull {
    Subset      hull;
    std::size_t rounds = 1;
  };

  // Least superset that is g-convex for every listed g (no closure under
  // products). Any carrier: on the integer carriers n^-1([n]H) stays inside
  // [min H, max H], so the iteration terminates.
  RawHull hull_raw(Semigroup const& s, std::span<std::uint64_t const> gens, Subset const& a);

  struct Sandwich {
    ElementSet raw_union;     // U_{g in G} g^-1([g]A)
    ElementSet raw_hull;      // hull for G itself
    ElementSet closed_union;  // U_{n in <G>} n^-1([n]A)

    // A ⊆ raw_union ⊆ raw_hull ⊆ closed_union.
    [[nodiscard]] bool holds(ElementSet const& a) const {
      return a.is_subset_of(raw_union) && raw_union.is_subset_of(raw_hull)
             && raw_hull.is_subset_of(closed_union);
    }
  };

  Sandwich hull_sandwich(Semigroup const& s, MultiplierSet const& f, ElementSet const& a);

  struct UnionHull {
    ElementSet                hull;   // conv_F(A_1 u ... u A_k)
    ElementSet                lower;  // U conv_F({a_i}) over a_i in conv_F(A_i)
    std::optional<ElementSet> upper;  // U conv_F({b_i}) over b_i in conv_N(A_i) ∩ B_i
    // conv_N(A_1 u ... u A_k) = lower; checked for F = N with covers.
    std::optional<bool> equality_holds;

    [[nodiscard]] bool lower_holds() const {
      return lower.is_subset_of(hull);
    }
    [[nodiscard]] bool upper_holds() const {
      return !upper || hull.is_subset_of(*upper);
    }
    [[nodiscard]] bool ok() const {
      return lower_holds() && upper_holds() && equality_holds.value_or(true);
    }
  };

  // Empty A_i contribute nothing to the union and are skipped when the
  // tuples a_1..a_k are formed. Covers, when given, must be N-konvex
  // (CoverNotKonvex) and contain their set (CoverMissesSet).
  UnionHull hull_of_union(Semigroup const&                        s,
                          MultiplierSet const&                    f,
                          std::vector<ElementSet> const&          sets,
                          std::optional<std::vector<ElementSet>> const& covers = std::nullopt);

  // conv_F({x}) = {u : n·u = n·x for some n in <F>}.
  ElementSet singleton_class(Semigroup const& s, MultiplierSet const& f, Element x);

  // Some n in <F> has n·x = n·y.
  bool equiv(Semigroup const& s, MultiplierSet const& f, Element x, Element y);

  struct QuotientMap {
    std::vector<ElementSet>  classes;     // ordered by least member
    std::vector<std::size_t> projection;  // element -> class index
    Semigroup                quotient;    // class i labelled "[rep]"
    // n·x~ = n·y~ implies x~ = y~, over every state of n in <F> and
    // additionally n in <F> ∩ [1, 64].
    PropertyReport cancellation;
  };

  // Throws PartitionViolation if the singleton classes overlap without
  // being equal, WellDefinednessViolation if addition of classes depends
  // on the representatives. Either is a bug.
  QuotientMap quotient(Semigroup const& s, MultiplierSet const& f);

}  // namespace konvex

#endif  // KONVEX_HULL_HPP_
