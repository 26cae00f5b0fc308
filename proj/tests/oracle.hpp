// Naive reference implementations used only by the tests.
//
// Carriers are plain operation tables built from their arithmetic
// definitions, sets are std::set<int>, and every operation is a direct
// enumeration. Questions over all n are answered by walking n = 1, 2, ...
// and storing every full state in a map until one repeats, which shares no
// code with the library's cycle detection or generator search.

#ifndef KONVEX_TESTS_ORACLE_HPP_
#define KONVEX_TESTS_ORACLE_HPP_

#include <algorithm>  // for min, includes
#include <cstdint>    // for uint64_t
#include <functional> // for function
#include <map>        // for map
#include <optional>   // for optional
#include <set>        // for set
#include <tuple>      // for tie
#include <utility>    // for pair
#include <vector>     // for vector

namespace oracle {

  using Set = std::set<int>;

  struct Table {
    int                           order = 0;
    std::vector<std::vector<int>> op;

    [[nodiscard]] int add(int x, int y) const {
      return op[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
    }
  };

  inline Table make_table(int order, std::function<int(int, int)> const& f) {
    Table t{order, std::vector<std::vector<int>>(static_cast<std::size_t>(order))};
    for (int x = 0; x < order; ++x) {
      for (int y = 0; y < order; ++y) {
        t.op[static_cast<std::size_t>(x)].push_back(f(x, y));
      }
    }
    return t;
  }

  inline Table cyclic(int m) {
    return make_table(m, [m](int x, int y) { return (x + y) % m; });
  }

  // Elements 1..k stored at indices 0..k-1.
  inline Table chain_min(int k) {
    return make_table(k, [](int x, int y) { return std::min(x, y); });
  }

  inline Table capped_add(int c) {
    return make_table(c + 1, [c](int x, int y) { return std::min(x + y, c); });
  }

  // Subsets of {1..k} as bitmasks.
  inline Table powerset_union(int k) {
    return make_table(1 << k, [](int x, int y) { return x | y; });
  }

  inline Set everything(Table const& t) {
    Set out;
    for (int x = 0; x < t.order; ++x) {
      out.insert(x);
    }
    return out;
  }

  // Smallest set containing gens and closed under the operation.
  inline Set closure(Table const& t, Set const& gens) {
    Set out = gens;
    for (;;) {
      Set next = out;
      for (int x : out) {
        for (int y : out) {
          next.insert(t.add(x, y));
        }
      }
      if (next == out) {
        return out;
      }
      out = next;
    }
  }

  inline int times(Table const& t, std::uint64_t n, int x) {
    int acc = x;
    for (std::uint64_t i = 1; i < n; ++i) {
      acc = t.add(acc, x);
    }
    return acc;
  }

  inline Set scale(Table const& t, std::uint64_t n, Set const& a) {
    Set out;
    for (int x : a) {
      out.insert(times(t, n, x));
    }
    return out;
  }

  inline Set preimage(Table const& t, std::uint64_t n, Set const& a) {
    Set out;
    for (int x = 0; x < t.order; ++x) {
      if (a.count(times(t, n, x)) != 0) {
        out.insert(x);
      }
    }
    return out;
  }

  inline Set sum(Table const& t, Set const& a, Set const& b) {
    Set out;
    for (int x : a) {
      for (int y : b) {
        out.insert(t.add(x, y));
      }
    }
    return out;
  }

  inline Set power(Table const& t, std::uint64_t n, Set const& a) {
    Set acc = a;
    for (std::uint64_t i = 1; i < n; ++i) {
      acc = sum(t, acc, a);
    }
    return acc;
  }

  inline bool subset(Set const& a, Set const& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  }

  inline Set intersection(Set const& a, Set const& b) {
    Set out;
    for (int x : a) {
      if (b.count(x) != 0) {
        out.insert(x);
      }
    }
    return out;
  }

  inline Set difference(Set const& a, Set const& b) {
    Set out;
    for (int x : a) {
      if (b.count(x) == 0) {
        out.insert(x);
      }
    }
    return out;
  }

  inline bool convex_at(Table const& t, std::uint64_t n, Set const& a) {
    return subset(preimage(t, n, power(t, n, a)), a);
  }

  inline bool konvex_at(Table const& t, std::uint64_t n, Set const& a) {
    return subset(power(t, n, a), scale(t, n, a));
  }

  // Everything that n influences: the whole map x -> n·x and [n]A_i.
  struct State {
    std::vector<int> images;
    std::vector<Set> sums;

    friend bool operator<(State const& l, State const& r) {
      return std::tie(l.images, l.sums) < std::tie(r.images, r.sums);
    }
  };

  inline State state_at(Table const& t, std::uint64_t n, std::vector<Set> const& sets) {
    State st;
    for (int x = 0; x < t.order; ++x) {
      st.images.push_back(times(t, n, x));
    }
    for (auto const& a : sets) {
      st.sums.push_back(power(t, n, a));
    }
    return st;
  }

  // One representative n for every distinct state over all n >= 1: the
  // states for n = 1, 2, ... until the first repeat. Every later n repeats
  // one of these, so the list decides any question about all n.
  inline std::vector<std::uint64_t> distinct_ns(Table const& t, std::vector<Set> const& sets) {
    std::map<State, std::uint64_t> seen;
    std::vector<std::uint64_t>     ns;
    for (std::uint64_t n = 1;; ++n) {
      if (!seen.emplace(state_at(t, n, sets), n).second) {
        return ns;
      }
      ns.push_back(n);
    }
  }

  // Members of the multiplicative closure of gens up to bound, ascending.
  inline std::vector<std::uint64_t> generated_up_to(std::vector<std::uint64_t> const& gens,
                                                    std::uint64_t                     bound) {
    std::set<std::uint64_t> out;
    std::vector<std::uint64_t> frontier;
    for (auto g : gens) {
      if (g <= bound && out.insert(g).second) {
        frontier.push_back(g);
      }
    }
    while (!frontier.empty()) {
      std::vector<std::uint64_t> next;
      for (auto n : frontier) {
        for (auto g : gens) {
          if (n * g <= bound && out.insert(n * g).second) {
            next.push_back(n * g);
          }
        }
      }
      frontier = next;
    }
    return {out.begin(), out.end()};
  }

  // Least n in ns with the property failing, and the least failing element.
  struct Failure {
    std::uint64_t n;
    int           element;
  };

  inline std::optional<Failure> first_convex_failure(Table const&                      t,
                                                     std::vector<std::uint64_t> const& ns,
                                                     Set const&                        a) {
    for (auto n : ns) {
      Set bad = difference(preimage(t, n, power(t, n, a)), a);
      if (!bad.empty()) {
        return Failure{n, *bad.begin()};
      }
    }
    return std::nullopt;
  }

  inline std::optional<Failure> first_konvex_failure(Table const&                      t,
                                                     std::vector<std::uint64_t> const& ns,
                                                     Set const&                        a) {
    for (auto n : ns) {
      Set bad = difference(power(t, n, a), scale(t, n, a));
      if (!bad.empty()) {
        return Failure{n, *bad.begin()};
      }
    }
    return std::nullopt;
  }

  inline std::optional<Failure> first_collision(Table const&                      t,
                                                std::vector<std::uint64_t> const& ns,
                                                Set const&                        a,
                                                Set const&                        b) {
    for (auto n : ns) {
      Set both = intersection(power(t, n, a), power(t, n, b));
      if (!both.empty()) {
        return Failure{n, *both.begin()};
      }
    }
    return std::nullopt;
  }

  // Union of n^-1([n]A) over the given n.
  inline Set hull_union(Table const& t, std::vector<std::uint64_t> const& ns, Set const& a) {
    Set out = a;
    for (auto n : ns) {
      for (int x : preimage(t, n, power(t, n, a))) {
        out.insert(x);
      }
    }
    return out;
  }

  // Least superset closed under H -> n^-1([n]H) for every listed n.
  inline Set hull_fixpoint(Table const& t, std::vector<std::uint64_t> const& ns, Set const& a) {
    Set h = a;
    for (;;) {
      Set next = hull_union(t, ns, h);
      if (next == h) {
        return h;
      }
      h = next;
    }
  }

  // Integer sets for the additive integers.
  namespace z {

    inline Set scale(std::int64_t n, Set const& a) {
      Set out;
      for (int x : a) {
        out.insert(static_cast<int>(n * x));
      }
      return out;
    }

    inline Set preimage(std::int64_t n, Set const& a) {
      Set out;
      for (int x : a) {
        if (x % n == 0) {
          out.insert(static_cast<int>(x / n));
        }
      }
      return out;
    }

    inline Set sum(Set const& a, Set const& b) {
      Set out;
      for (int x : a) {
        for (int y : b) {
          out.insert(x + y);
        }
      }
      return out;
    }

    inline Set power(std::int64_t n, Set const& a) {
      Set acc = a;
      for (std::int64_t i = 1; i < n; ++i) {
        acc = sum(acc, a);
      }
      return acc;
    }

    inline bool convex_at(std::int64_t n, Set const& a) {
      return subset(preimage(n, power(n, a)), a);
    }

    inline bool konvex_at(std::int64_t n, Set const& a) {
      return subset(power(n, a), scale(n, a));
    }

  }  // namespace z

}  // namespace oracle

#endif  // KONVEX_TESTS_ORACLE_HPP_
