// Dense bitset over the element indices of a finite carrier.
//
// All finite-carrier set algebra runs on this type: elements are the
// canonical indices 0..universe-1 of a Semigroup, and a set is one bit per
// element packed into 64-bit words. The universe size is part of the value,
// so sets over different carriers never compare equal.

#ifndef KONVEX_ELEMENT_SET_HPP_
#define KONVEX_ELEMENT_SET_HPP_

#include <bit>               // for countr_zero, popcount
#include <compare>           // for strong_ordering
#include <cstddef>           // for size_t
#include <cstdint>           // for uint32_t, uint64_t
#include <initializer_list>  // for initializer_list
#include <vector>            // for vector

namespace konvex {

  using Element = std::uint32_t;

  class ElementSet {
   public:
    ElementSet() = default;

    explicit ElementSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    ElementSet(std::size_t universe, std::initializer_list<Element> members)
        : ElementSet(universe) {
      for (auto e : members) {
        insert(e);
      }
    }

    static ElementSet full(std::size_t universe) {
      ElementSet result(universe);
      for (auto& w : result.words_) {
        w = ~std::uint64_t{0};
      }
      result.trim();
      return result;
    }

    template <typename Range>
    static ElementSet from_range(std::size_t universe, Range const& members) {
      ElementSet result(universe);
      for (auto e : members) {
        result.insert(static_cast<Element>(e));
      }
      return result;
    }

    [[nodiscard]] std::size_t universe() const noexcept {
      return universe_;
    }

    [[nodiscard]] bool contains(Element e) const noexcept {
      return e < universe_ && ((words_[e >> 6] >> (e & 63)) & 1U) != 0;
    }

    // Precondition: e < universe().
    void insert(Element e) noexcept {
      words_[e >> 6] |= std::uint64_t{1} << (e & 63);
    }

    void erase(Element e) noexcept {
      if (e < universe_) {
        words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
      }
    }

    [[nodiscard]] std::size_t count() const noexcept {
      std::size_t n = 0;
      for (auto w : words_) {
        n += static_cast<std::size_t>(std::popcount(w));
      }
      return n;
    }

    [[nodiscard]] bool empty() const noexcept {
      for (auto w : words_) {
        if (w != 0) {
          return false;
        }
      }
      return true;
    }

    [[nodiscard]] bool is_subset_of(ElementSet const& that) const noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~that.word(i)) != 0) {
          return false;
        }
      }
      return true;
    }

    [[nodiscard]] bool intersects(ElementSet const& that) const noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & that.word(i)) != 0) {
          return true;
        }
      }
      return false;
    }

    // Smallest member not in `that`, or universe() if none.
    [[nodiscard]] Element first_not_in(ElementSet const& that) const noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i] & ~that.word(i);
        if (w != 0) {
          return static_cast<Element>(i * 64 + std::countr_zero(w));
        }
      }
      return static_cast<Element>(universe_);
    }

    ElementSet& operator|=(ElementSet const& that) noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] |= that.word(i);
      }
      return *this;
    }

    ElementSet& operator&=(ElementSet const& that) noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= that.word(i);
      }
      return *this;
    }

    ElementSet& operator-=(ElementSet const& that) noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= ~that.word(i);
      }
      return *this;
    }

    friend ElementSet operator|(ElementSet lhs, ElementSet const& rhs) {
      return lhs |= rhs;
    }
    friend ElementSet operator&(ElementSet lhs, ElementSet const& rhs) {
      return lhs &= rhs;
    }
    friend ElementSet operator-(ElementSet lhs, ElementSet const& rhs) {
      return lhs -= rhs;
    }

    [[nodiscard]] ElementSet complement() const {
      ElementSet result = full(universe_);
      result -= *this;
      return result;
    }

    // Calls f(e) for each member in ascending order.
    template <typename Func>
    void for_each(Func&& f) const {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w != 0) {
          f(static_cast<Element>(i * 64 + std::countr_zero(w)));
          w &= w - 1;
        }
      }
    }

    [[nodiscard]] std::vector<Element> elements() const {
      std::vector<Element> out;
      out.reserve(count());
      for_each([&out](Element e) { out.push_back(e); });
      return out;
    }

    [[nodiscard]] std::size_t hash() const noexcept {
      std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
      for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return static_cast<std::size_t>(h);
    }

    friend bool operator==(ElementSet const&, ElementSet const&) = default;

    // Total order used for deterministic containers; not inclusion.
    friend std::strong_ordering operator<=>(ElementSet const& lhs,
                                            ElementSet const& rhs) {
      if (auto c = lhs.universe_ <=> rhs.universe_; c != 0) {
        return c;
      }
      return lhs.words_ <=> rhs.words_;
    }

   private:
    [[nodiscard]] std::uint64_t word(std::size_t i) const noexcept {
      return i < words_.size() ? words_[i] : 0;
    }

    void trim() noexcept {
      if (universe_ % 64 != 0 && !words_.empty()) {
        words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
      }
    }

    std::size_t                universe_ = 0;
    std::vector<std::uint64_t> words_;
  };

  struct ElementSetHash {
    std::size_t operator()(ElementSet const& s) const noexcept {
      return s.hash();
    }
  };

}  // namespace konvex

#endif  // KONVEX_ELEMENT_SET_HPP_
