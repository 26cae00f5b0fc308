// F-disjointness and the greedy separation of N-disjoint sets into two
// complementary convex sets.
//
// A and B are F-disjoint when [n]A ∩ [n]B is empty for every n in F. If
// (A, B) is N-disjoint, then for any s at least one of (A u {s}, B) and
// (A, B u {s}) is N-disjoint again; inserting every remaining element this
// way ends in a partition of S into two N-disjoint, hence convex, parts.

#ifndef KONVEX_SEPARATION_HPP_
#define KONVEX_SEPARATION_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <span>      // for span
#include <vector>    // for vector

#include "konvex/convexity.hpp"
#include "konvex/element_set.hpp"
#include "konvex/multiplier.hpp"
#include "konvex/report.hpp"
#include "konvex/semigroup.hpp"
#include "konvex/subset.hpp"

namespace konvex {

  struct DisjointnessEvidence {
    bool                   disjoint = true;
    Multiplier             collision_n = 0;      // collision only
    std::optional<Element> collision_element;    // least element of [n]A ∩ [n]B
    std::uint64_t          tail_length  = 0;     // F = N, disjoint only
    std::uint64_t          cycle_length = 0;
    std::size_t            states       = 0;
  };

  // Sound and complete for F = N or generated F; finite carriers only.
  DisjointnessEvidence are_F_disjoint(Semigroup const&     s,
                                      MultiplierSet const& f,
                                      ElementSet const&    a,
                                      ElementSet const&    b);

  struct ListedDisjointness {
    bool                         disjoint = true;
    std::optional<std::uint64_t> collision_n;
    std::optional<Subset>        collision;  // [n]A ∩ [n]B at collision_n
  };

  // Explicit finite list of n; any carrier.
  ListedDisjointness disjoint_for(Semigroup const&               s,
                                  std::span<std::uint64_t const> ns,
                                  Subset const&                  a,
                                  Subset const&                  b);

  enum class Side { a, b };

  [[nodiscard]] char const* to_string(Side side) noexcept;

  // Which side can take x while staying N-disjoint; tries A first.
  // Throws NotDisjointInput if (A, B) is not N-disjoint, LemmaViolation if
  // neither side works.
  Side extend_step(Semigroup const& s, ElementSet const& a, ElementSet const& b, Element x);

  struct Insertion {
    Element element;
    Side    side;
  };

  struct SeparationCertificate {
    ElementSet             a;
    ElementSet             b;
    std::vector<Insertion> insertion_log;
    DisjointnessEvidence   evidence;
    Decision               convex_a;
    Decision               convex_b;
    // Present when S itself is konvex.
    std::optional<Decision> konvex_a;
    std::optional<Decision> konvex_b;
  };

  // Greedy in ascending element order. Throws InputsNotDisjoint with the
  // collision when (A0, B0) is not N-disjoint.
  SeparationCertificate stone_separate(Semigroup const&  s,
                                       ElementSet const& a0,
                                       ElementSet const& b0);

  // Re-checks every field of a certificate by brute force: partition,
  // containment of the inputs, disjointness of [n]A and [n]B and
  // (kon)vexity of both parts for n up to tail + 2·cycle of the recorded
  // evidence (at least 2·|S|).
  PropertyReport verify_certificate(Semigroup const&             s,
                                    ElementSet const&            a0,
                                    ElementSet const&            b0,
                                    SeparationCertificate const& cert);

  // F-disjoint sets have disjoint hulls; with an F-konvex cover of A
  // (CoverNotKonvex otherwise), disjoint hulls force F-disjointness.
  PropertyReport check_disjoint_hulls(Semigroup const&                 s,
                                      MultiplierSet const&             f,
                                      ElementSet const&                a,
                                      ElementSet const&                b,
                                      std::optional<ElementSet> const& konvex_cover = std::nullopt);

  // For a partition (A, B) of S: F-disjoint parts are F-convex, and
  // F-konvex when S is. Throws NotComplementary if (A, B) is no partition.
  PropertyReport complementary_check(Semigroup const&     s,
                                     ElementSet const&    a,
                                     ElementSet const&    b,
                                     MultiplierSet const& f = MultiplierSet::all());

}  // namespace konvex

#endif  // KONVEX_SEPARATION_HPP_
