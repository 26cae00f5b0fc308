// Deliberately naive re-implementations used to audit the fast paths:
// std::set instead of bitsets, n·x and [n]A by plain repeated addition,
// and explicit sweeps over n instead of cycle detection. Nothing here
// shares code with setalg.cpp or iteration.hpp beyond Semigroup::op.

#ifndef KONVEX_BRUTE_HPP_
#define KONVEX_BRUTE_HPP_

#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <set>       // for set

#include "konvex/element_set.hpp"
#include "konvex/semigroup.hpp"

namespace konvex::brute {

  using Set = std::set<Element>;

  inline Set to_set(ElementSet const& a) {
    Set out;
    a.for_each([&](Element e) { out.insert(e); });
    return out;
  }

  inline Element times(Semigroup const& s, std::uint64_t n, Element x) {
    Element acc = x;
    for (std::uint64_t i = 1; i < n; ++i) {
      acc = s.op(acc, x);
    }
    return acc;
  }

  inline Set plus(Semigroup const& s, Set const& a, Set const& b) {
    Set out;
    for (auto x : a) {
      for (auto y : b) {
        out.insert(s.op(x, y));
      }
    }
    return out;
  }

  // Calls f(n, [n]A) for n = 1..n_max; f returns false to stop.
  template <typename F>
  void sweep_sums(Semigroup const& s, Set const& a, std::uint64_t n_max, F&& f) {
    Set sum = a;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      if (n > 1) {
        sum = plus(s, sum, a);
      }
      if (!f(n, sum)) {
        return;
      }
    }
  }

  inline bool convex_at(Semigroup const& s, std::uint64_t n, Set const& a, Set const& sum) {
    for (Element x = 0; x < s.order(); ++x) {
      if (sum.count(times(s, n, x)) != 0 && a.count(x) == 0) {
        return false;
      }
    }
    return true;
  }

  inline bool konvex_at(Semigroup const& s, std::uint64_t n, Set const& a, Set const& sum) {
    Set scaled;
    for (auto x : a) {
      scaled.insert(times(s, n, x));
    }
    for (auto y : sum) {
      if (scaled.count(y) == 0) {
        return false;
      }
    }
    return true;
  }

  // Smallest n <= n_max at which the property fails.
  inline std::optional<std::uint64_t> first_convex_failure(Semigroup const& s,
                                                           ElementSet const& a,
                                                           std::uint64_t    n_max) {
    std::optional<std::uint64_t> out;
    Set const                    base = to_set(a);
    sweep_sums(s, base, n_max, [&](std::uint64_t n, Set const& sum) {
      if (!convex_at(s, n, base, sum)) {
        out = n;
      }
      return !out;
    });
    return out;
  }

  inline std::optional<std::uint64_t> first_konvex_failure(Semigroup const& s,
                                                           ElementSet const& a,
                                                           std::uint64_t    n_max) {
    std::optional<std::uint64_t> out;
    Set const                    base = to_set(a);
    sweep_sums(s, base, n_max, [&](std::uint64_t n, Set const& sum) {
      if (!konvex_at(s, n, base, sum)) {
        out = n;
      }
      return !out;
    });
    return out;
  }

  // Smallest n <= n_max with [n]A ∩ [n]B nonempty.
  inline std::optional<std::uint64_t> first_collision(Semigroup const& s,
                                                      ElementSet const& a,
                                                      ElementSet const& b,
                                                      std::uint64_t    n_max) {
    Set const sa = to_set(a);
    Set const sb = to_set(b);
    Set       suma = sa;
    Set       sumb = sb;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      if (n > 1) {
        suma = plus(s, suma, sa);
        sumb = plus(s, sumb, sb);
      }
      for (auto x : suma) {
        if (sumb.count(x) != 0) {
          return n;
        }
      }
    }
    return std::nullopt;
  }

}  // namespace konvex::brute

#endif  // KONVEX_BRUTE_HPP_
