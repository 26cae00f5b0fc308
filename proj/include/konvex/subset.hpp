#ifndef KONVEX_SUBSET_HPP_
#define KONVEX_SUBSET_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for int64_t, uint64_t
#include <set>      // for set
#include <string>   // for string
#include <utility>  // for move
#include <variant>  // for variant
#include <vector>   // for vector

#include "konvex/element_set.hpp"
#include "konvex/semigroup.hpp"

namespace konvex {

  using IntSet = std::set<std::int64_t>;

  // A subset of a particular carrier: an index bitset on finite carriers,
  // an explicit finite integer set on the symbolic ones.
  class Subset {
   public:
    static Subset of(Semigroup const& s, ElementSet members);
    static Subset of_integers(Semigroup const& s, IntSet members);
    static Subset none(Semigroup const& s);

    [[nodiscard]] std::uint64_t carrier_id() const noexcept {
      return carrier_id_;
    }
    [[nodiscard]] bool is_finite() const noexcept {
      return std::holds_alternative<ElementSet>(members_);
    }
    [[nodiscard]] ElementSet const& elements() const;
    [[nodiscard]] IntSet const&     integers() const;

    [[nodiscard]] std::size_t size() const noexcept;
    [[nodiscard]] bool        empty() const noexcept {
      return size() == 0;
    }
    [[nodiscard]] bool is_subset_of(Subset const& that) const;

    // Member labels in ascending element order.
    [[nodiscard]] std::vector<std::string> labels(Semigroup const& s) const;

    friend bool operator==(Subset const&, Subset const&) = default;

   private:
    Subset(std::uint64_t id, std::variant<ElementSet, IntSet> members)
        : carrier_id_(id), members_(std::move(members)) {}

    std::uint64_t                    carrier_id_;
    std::variant<ElementSet, IntSet> members_;
  };

  // Throws CarrierMismatch unless `a` was built over `s`.
  void require_carrier(Semigroup const& s, Subset const& a);
  void require_carrier(Semigroup const& s, ElementSet const& a);
  void require_finite(Semigroup const& s, char const* what);

}  // namespace konvex

#endif  // KONVEX_SUBSET_HPP_
