// n-convexity and n-konvexity of subsets, for fixed n and for all n in a
// multiplier set.
//
//   A is n-convex  iff  n^-1([n]A) ⊆ A
//   A is n-konvex  iff  [n]A ⊆ nA
//
// The empty set satisfies both for every n. Decisions over infinitely many
// n are available on finite carriers only and run on the state explorer in
// iteration.hpp; symbolic carriers get fixed-n checks and bounded sweeps.

#ifndef KONVEX_CONVEXITY_HPP_
#define KONVEX_CONVEXITY_HPP_

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

  enum class Property { convex, konvex };

  [[nodiscard]] char const* to_string(Property p) noexcept;

  bool is_n_convex(Semigroup const& s, std::uint64_t n, ElementSet const& a);
  bool is_n_konvex(Semigroup const& s, std::uint64_t n, ElementSet const& a);
  bool is_n_convex(Semigroup const& s, std::uint64_t n, Subset const& a);
  bool is_n_konvex(Semigroup const& s, std::uint64_t n, Subset const& a);

  // An element exhibiting failure at this n: for convex, the least
  // x in n^-1([n]A) \ A; for konvex, the least element of [n]A \ nA.
  std::optional<Element> fixed_n_witness(Semigroup const& s,
                                         Property         p,
                                         std::uint64_t    n,
                                         ElementSet const& a);

  enum class Verdict { holds_for_all_n, fails };

  struct Decision {
    Verdict                verdict = Verdict::holds_for_all_n;
    Multiplier             witness_n = 0;         // fails only
    std::optional<Element> witness_element;       // fails only
    // Tail and cycle of the state sequence; set for complete F = N runs.
    std::uint64_t tail_length  = 0;
    std::uint64_t cycle_length = 0;
    std::size_t   states       = 0;

    [[nodiscard]] bool holds() const noexcept {
      return verdict == Verdict::holds_for_all_n;
    }
  };

  // Sound and complete over every n in F (F = N or a generated set).
  // Throws SymbolicUnsupported on symbolic carriers.
  Decision decide(Semigroup const&     s,
                  Property             p,
                  MultiplierSet const& f,
                  ElementSet const&    a);

  Decision decide_convex_all_n(Semigroup const& s, ElementSet const& a);
  Decision decide_konvex_all_n(Semigroup const& s, ElementSet const& a);

  // Holds for each n in an explicit list; any carrier.
  bool holds_for_each(Semigroup const&                s,
                      Property                        p,
                      std::span<std::uint64_t const> ns,
                      Subset const&                   a);

  struct SpectrumReport {
    std::uint64_t              n_max = 0;
    std::vector<std::uint64_t> convex_ns;  // C_A ∩ [1, n_max]
    std::vector<std::uint64_t> konvex_ns;  // K_A ∩ [1, n_max]
  };

  // Fixed-n sweep; any carrier.
  SpectrumReport spectrum(Semigroup const& s, Subset const& a, std::uint64_t n_max);

  // Within [1, n_max]: K_A is closed under products and C_A under divisors.
  PropertyReport check_structure_props(Semigroup const& s,
                                       ElementSet const& a,
                                       std::uint64_t    n_max);

  struct ClosureSampling {
    std::size_t   samples = 32;
    std::uint64_t seed    = 0;
  };

  // Samples F-convex and F-konvex sets and checks that the operations
  // preserving each family do so: sums, kA and [k]A for F-konvex sets;
  // k^-1 A, intersections and chain unions for F-convex sets; chain unions
  // for F-konvex sets; convex ∩ konvex is konvex.
  PropertyReport check_closure_props(Semigroup const&     s,
                                     MultiplierSet const& f,
                                     ClosureSampling      sampling);

  // x -> n·x is a bijection of S.
  bool is_uniquely_divisible(Semigroup const& s, std::uint64_t n);

  // On uniquely n-divisible carriers n-convexity and n-konvexity agree;
  // records no checks elsewhere.
  PropertyReport check_divisible_coincidence(Semigroup const& s,
                                             std::uint64_t    n,
                                             ElementSet const& a);

}  // namespace konvex

#endif  // KONVEX_CONVEXITY_HPP_
