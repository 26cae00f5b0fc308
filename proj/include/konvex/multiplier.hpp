// The parameter set of multipliers n used by the "for all n in F" notions.

#ifndef KONVEX_MULTIPLIER_HPP_
#define KONVEX_MULTIPLIER_HPP_

#include <cstdint>      // for uint64_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include <boost/multiprecision/cpp_int.hpp>

namespace konvex {

  // Products of generators grow without bound while the reachable states
  // stay finite, so witnesses found by generator search can exceed 64 bits.
  using Multiplier = boost::multiprecision::cpp_int;

  class MultiplierSet {
   public:
    // F = N = {1, 2, 3, ...}.
    static MultiplierSet all();
    // F = the multiplicative closure of `generators` (all >= 1).
    static MultiplierSet generated(std::vector<std::uint64_t> generators);
    // "ALL" or a comma-separated generator list such as "2,3".
    static MultiplierSet parse(std::string_view text);

    [[nodiscard]] bool is_all() const noexcept {
      return all_;
    }
    // Sorted, without duplicates; empty for ALL.
    [[nodiscard]] std::vector<std::uint64_t> const& generators() const noexcept {
      return generators_;
    }
    // Whether the generator list is itself closed under multiplication,
    // which for a finite list means it is {1}.
    [[nodiscard]] bool generators_closed() const noexcept {
      return all_ || (generators_.size() == 1 && generators_[0] == 1);
    }
    // Members of F that are <= n_max, ascending.
    [[nodiscard]] std::vector<std::uint64_t> members_up_to(std::uint64_t n_max) const;
    [[nodiscard]] bool contains(std::uint64_t n) const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(MultiplierSet const&, MultiplierSet const&) = default;

   private:
    bool                       all_ = true;
    std::vector<std::uint64_t> generators_;
  };

}  // namespace konvex

#endif  // KONVEX_MULTIPLIER_HPP_
