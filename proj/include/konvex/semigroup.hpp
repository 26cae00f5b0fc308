// Abelian semigroup carriers.
//
// A Semigroup is either a finite Cayley table over elements indexed
// 0..order-1 (in label order), or one of two symbolic integer carriers
// whose elements are never enumerated:
//
//   int-additive       the additive group of the integers
//   int-no-one-monoid  {0, 2, 3, 4, ...} under addition
//
// Finite tables are validated for closure, commutativity and associativity
// when constructed; a Semigroup value is immutable afterwards.

#ifndef KONVEX_SEMIGROUP_HPP_
#define KONVEX_SEMIGROUP_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t, int64_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <unordered_map>  // for unordered_map
#include <vector>       // for vector

#include "konvex/element_set.hpp"

namespace konvex {

  enum class CarrierKind { finite_table, int_additive, int_no_one_monoid };

  class Semigroup {
   public:
    // Validating constructor from a table of labels; table[i][j] is
    // labels[i] + labels[j]. Throws Error naming the first failing witness.
    static Semigroup from_labels(std::vector<std::string>              labels,
                                 std::vector<std::vector<std::string>> const& table,
                                 std::string name = "cayley");

    // Validating constructor from a row-major index table.
    static Semigroup from_indices(std::vector<std::string> labels,
                                  std::vector<Element>     table,
                                  std::string              name,
                                  std::optional<Element>   cap = std::nullopt);

    static Semigroup integers();
    static Semigroup integers_without_one();

    [[nodiscard]] CarrierKind kind() const noexcept {
      return kind_;
    }
    [[nodiscard]] bool is_finite() const noexcept {
      return kind_ == CarrierKind::finite_table;
    }
    [[nodiscard]] std::size_t order() const noexcept {
      return labels_.size();
    }
    [[nodiscard]] std::string const& name() const noexcept {
      return name_;
    }
    // Identity shared by copies; used to reject subsets of other carriers.
    [[nodiscard]] std::uint64_t id() const noexcept {
      return id_;
    }

    [[nodiscard]] std::string const& label(Element e) const {
      return labels_.at(e);
    }
    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return labels_;
    }
    [[nodiscard]] std::optional<Element> index_of(std::string_view label) const;

    [[nodiscard]] Element op(Element x, Element y) const noexcept {
      return table_[static_cast<std::size_t>(x) * labels_.size() + y];
    }

    // n·x = x + ... + x (n terms), n >= 1.
    [[nodiscard]] Element multiple(std::uint64_t n, Element x) const;

    // The map x -> n·x over all elements, n >= 1.
    [[nodiscard]] std::vector<Element> power_map(std::uint64_t n) const;

    // Saturation element of a capped-add carrier.
    [[nodiscard]] std::optional<Element> cap() const noexcept {
      return cap_;
    }

    // Membership for symbolic carriers.
    [[nodiscard]] bool contains_integer(std::int64_t v) const noexcept;

    [[nodiscard]] ElementSet all() const {
      return ElementSet::full(order());
    }

    // The semigroup obtained by restricting the operation to `closed`,
    // which must be nonempty and closed under op. Labels are preserved.
    [[nodiscard]] Semigroup restrict(ElementSet const& closed) const;

    [[nodiscard]] std::vector<std::vector<std::string>> label_table() const;

    friend bool operator==(Semigroup const& lhs, Semigroup const& rhs) {
      return lhs.kind_ == rhs.kind_ && lhs.labels_ == rhs.labels_
             && lhs.table_ == rhs.table_;
    }

   private:
    Semigroup() = default;

    CarrierKind              kind_ = CarrierKind::finite_table;
    std::string              name_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Element> index_;
    std::vector<Element>     table_;
    std::optional<Element>   cap_;
    std::uint64_t            id_ = 0;
  };

}  // namespace konvex

#endif  // KONVEX_SEMIGROUP_HPP_
