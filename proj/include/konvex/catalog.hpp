// Built-in carriers, subsemigroup closure and the deterministic sampler
// that feeds the property tests.

#ifndef KONVEX_CATALOG_HPP_
#define KONVEX_CATALOG_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t
#include <random>       // for mt19937_64
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "konvex/element_set.hpp"
#include "konvex/semigroup.hpp"

namespace konvex {

  // Z_m under addition mod m.
  Semigroup cyclic(std::size_t m);
  // {0..c} with x (+) y = min(x + y, c); the element c is flagged as cap().
  Semigroup capped_add(std::size_t c);
  // {1..k} under min.
  Semigroup chain_min(std::size_t k);
  // Subsets of {1..k} under union, indexed by bitmask.
  Semigroup powerset_union(std::size_t k);
  // The finite cyclic semigroup <a | (r+p)a = ra>, elements 1..r+p-1.
  Semigroup monogenic(std::size_t index, std::size_t period);
  // Z_top on top of Z_bottom: a top element acts as the identity on the
  // bottom group. Periods of both groups coexist, so n·(-) has period
  // lcm(top, bottom).
  Semigroup clifford(std::size_t top, std::size_t bottom);
  // Componentwise operation; (x1,x2) is indexed x1 * |S2| + x2.
  Semigroup product(Semigroup const& lhs, Semigroup const& rhs);

  // Parses a carrier spec: "cyclic:4", "capped-add:3", "chain-min:3",
  // "powerset-union:2", "monogenic:2:3", "clifford:3:5", "int-additive", "int-no-one-monoid",
  // and products joined by '*', e.g. "cyclic:2*chain-min:3".
  Semigroup builtin(std::string_view spec);

  // Smallest subset containing gens and closed under op.
  ElementSet subsemigroup_closure(Semigroup const& s, ElementSet const& gens);

  // Deterministic per seed; order <= max_order; always a valid carrier.
  Semigroup sample_carrier(std::uint64_t seed, std::size_t max_order);

  // Fixed corpus of small carriers with order <= order_cap: the built-ins,
  // a handful of products, and a few restricted subsemigroups.
  std::vector<Semigroup> catalog(std::size_t order_cap);

  // Each element included independently with probability 1/2.
  ElementSet random_subset(std::mt19937_64& rng, std::size_t universe);

  // A uniformly chosen element count in [1, max_size], then distinct members.
  ElementSet random_nonempty_subset(std::mt19937_64& rng,
                                    std::size_t      universe,
                                    std::size_t      max_size);

  // n·x = x for all x and n: every built-in semilattice.
  bool is_idempotent(Semigroup const& s);

}  // namespace konvex

#endif  // KONVEX_CATALOG_HPP_
