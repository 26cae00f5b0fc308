#ifndef KONVEX_REPORT_HPP_
#define KONVEX_REPORT_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <utility>  // for move
#include <vector>   // for vector

#include "konvex/element_set.hpp"
#include "konvex/semigroup.hpp"

namespace konvex {

  // Outcome of a property sweep. Any violation of a property the theory
  // guarantees is a bug.
  struct PropertyReport {
    std::size_t              checks = 0;
    std::vector<std::string> violations;

    [[nodiscard]] bool ok() const noexcept {
      return violations.empty();
    }

    void expect(bool condition, std::string const& what) {
      ++checks;
      if (!condition) {
        violations.push_back(what);
      }
    }

    void merge(PropertyReport other) {
      checks += other.checks;
      for (auto& v : other.violations) {
        violations.push_back(std::move(v));
      }
    }
  };

  // "{a,b,c}" using the carrier's labels.
  inline std::string show(Semigroup const& s, ElementSet const& a) {
    std::string out = "{";
    bool        first = true;
    a.for_each([&](Element e) {
      out += (first ? "" : ",") + s.label(e);
      first = false;
    });
    return out + "}";
  }

}  // namespace konvex

#endif  // KONVEX_REPORT_HPP_
