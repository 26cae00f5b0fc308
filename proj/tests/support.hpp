// Conversions between library values and the oracle's plain containers.

#ifndef KONVEX_TESTS_SUPPORT_HPP_
#define KONVEX_TESTS_SUPPORT_HPP_

#include <initializer_list>  // for initializer_list
#include <string>            // for string

#include "konvex/element_set.hpp"
#include "konvex/error.hpp"
#include "konvex/semigroup.hpp"
#include "oracle.hpp"

namespace konvex::test {

  inline oracle::Table table_of(Semigroup const& s) {
    oracle::Table t{static_cast<int>(s.order()), {}};
    for (Element x = 0; x < s.order(); ++x) {
      auto& row = t.op.emplace_back();
      for (Element y = 0; y < s.order(); ++y) {
        row.push_back(static_cast<int>(s.op(x, y)));
      }
    }
    return t;
  }

  inline oracle::Set to_oracle(ElementSet const& a) {
    oracle::Set out;
    a.for_each([&](Element e) { out.insert(static_cast<int>(e)); });
    return out;
  }

  inline ElementSet from_oracle(std::size_t universe, oracle::Set const& a) {
    return ElementSet::from_range(universe, a);
  }

  // The elements with these labels.
  inline ElementSet labelled(Semigroup const& s, std::initializer_list<std::string> labels) {
    ElementSet out(s.order());
    for (auto const& l : labels) {
      out.insert(s.index_of(l).value());
    }
    return out;
  }

  inline Element at(Semigroup const& s, std::string const& label) {
    return s.index_of(label).value();
  }

  // The kind of Error thrown by f, if any.
  template <typename F>
  std::optional<ErrorKind> error_kind(F&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    return std::nullopt;
  }

}  // namespace konvex::test

#endif  // KONVEX_TESTS_SUPPORT_HPP_
