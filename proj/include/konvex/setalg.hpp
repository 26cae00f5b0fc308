// The set operations underlying both convexity notions:
//
//   nA     = {n·x : x in A}
//   n^-1 A = {x : n·x in A}
//   A + B  = {a + b : a in A, b in B}
//   [n]A   = {x_1 + ... + x_n : x_i in A}
//
// Each operation comes in two forms: a kernel over ElementSet for finite
// carriers, and a Subset form that also covers the symbolic integer
// carriers (finite explicit subsets only). n = 0 is rejected everywhere.

#ifndef KONVEX_SETALG_HPP_
#define KONVEX_SETALG_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <string>   // for string
#include <vector>   // for vector

#include "konvex/element_set.hpp"
#include "konvex/semigroup.hpp"
#include "konvex/subset.hpp"

namespace konvex {

  void require_n(std::uint64_t n);

  // Finite kernels. Preconditions (checked): A, B sized for s; n >= 1.
  ElementSet scale(Semigroup const& s, std::uint64_t n, ElementSet const& a);
  ElementSet preimage(Semigroup const& s, std::uint64_t n, ElementSet const& a);
  ElementSet sumset(Semigroup const& s, ElementSet const& a, ElementSet const& b);
  ElementSet sumset_power(Semigroup const& s, std::uint64_t n, ElementSet const& a);

  // [1]A, [2]A, ..., [n_max]A.
  std::vector<ElementSet> sumset_powers(Semigroup const&  s,
                                        std::uint64_t     n_max,
                                        ElementSet const& a);

  // Image and preimage under a precomputed map x -> n·x.
  ElementSet image_under(std::vector<Element> const& map, ElementSet const& a);
  ElementSet preimage_under(std::vector<Element> const& map, ElementSet const& a);

  // Subset forms; any carrier.
  Subset scale(Semigroup const& s, std::uint64_t n, Subset const& a);
  Subset preimage(Semigroup const& s, std::uint64_t n, Subset const& a);
  Subset sumset(Semigroup const& s, Subset const& a, Subset const& b);
  Subset sumset_power(Semigroup const& s, std::uint64_t n, Subset const& a);
  Subset unite(Semigroup const& s, Subset const& a, Subset const& b);
  Subset intersect(Semigroup const& s, Subset const& a, Subset const& b);

  enum class SetOp { scale, preimage, sumset, power };

  struct OpReport {
    Subset result;
    // Only on capped-add carriers: the computation reached the cap, where
    // sums stop behaving like integer sums.
    bool saturated = false;
  };

  // `b` is used by sumset only; `n` is ignored by sumset.
  OpReport apply(Semigroup const& s,
                 SetOp            op,
                 std::uint64_t    n,
                 Subset const&    a,
                 Subset const&    b);

  enum class RelationStatus { equal, proper_inclusion, violation };

  [[nodiscard]] char const* to_string(RelationStatus status) noexcept;

  struct RelationCheck {
    std::string    family;  // "identity", "monotonicity" or "family"
    std::string    relation;
    bool           equality = false;
    RelationStatus status   = RelationStatus::equal;
  };

  struct IdentityReport {
    std::vector<RelationCheck> relations;

    [[nodiscard]] std::size_t violations() const noexcept;
    [[nodiscard]] std::size_t proper_inclusions() const noexcept;
  };

  // Evaluates the twelve scale/preimage/sumset identities and inclusions
  // for (A, B, k, n), the monotonicity laws on A∩B ⊆ A ⊆ A∪B, and the
  // intersection/union laws on the family {A, B}. Every equality must come
  // out `equal`; every inclusion `equal` or `proper_inclusion`.
  IdentityReport check_set_identities(Semigroup const& s,
                                      Subset const&    a,
                                      Subset const&    b,
                                      std::uint64_t    k,
                                      std::uint64_t    n);

  // Intersection and union laws for an arbitrary nonempty finite family.
  IdentityReport check_family_laws(Semigroup const&           s,
                                   std::vector<Subset> const& family,
                                   std::uint64_t              n);

}  // namespace konvex

#endif  // KONVEX_SETALG_HPP_
