// Exhaustive exploration of the states (n·x, [n]A) over all n in a
// multiplier set F.
//
// On a finite carrier the map x -> n·x and the sumset [n]A take finitely
// many values, and both are determined by the previous state:
//
//   successor     n -> n+1 :  n·x + x,          [n]A + A
//   multiplication n -> ng :  g·(n·x),          [g]([n]A)
//
// so any predicate that depends on n only through the state is decided for
// every n in F by visiting each distinct reachable state once.
//
// For F = N the state sequence is eventually periodic and Brent's algorithm
// finds its tail and cycle lengths while holding two states. For F
// generated by a finite list G, states are searched smallest-n-first from
// {state(g) : g in G}, merging equal states, so each state is first reached
// at the smallest n in F that produces it.

#ifndef KONVEX_ITERATION_HPP_
#define KONVEX_ITERATION_HPP_

#include <cstddef>        // for size_t
#include <cstdint>        // for uint64_t
#include <queue>          // for priority_queue
#include <unordered_set>  // for unordered_set
#include <utility>        // for move
#include <vector>         // for vector

#include "konvex/element_set.hpp"
#include "konvex/multiplier.hpp"
#include "konvex/semigroup.hpp"

namespace konvex {

  struct IterationState {
    std::vector<Element>    images;  // n·x for each tracked element x
    std::vector<ElementSet> sums;    // [n]A for each tracked set A

    friend bool operator==(IterationState const&, IterationState const&) = default;

    [[nodiscard]] std::size_t hash() const noexcept {
      std::size_t h = images.size() * 0x9e3779b97f4a7c15ULL;
      for (auto e : images) {
        h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      for (auto const& s : sums) {
        h ^= s.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }
  };

  struct IterationStateHash {
    std::size_t operator()(IterationState const& s) const noexcept {
      return s.hash();
    }
  };

  class StateSpace {
   public:
    StateSpace(Semigroup const&        s,
               std::vector<Element>    tracked,
               std::vector<ElementSet> sets);

    // Tracks every element, so images is the whole map x -> n·x.
    static StateSpace with_power_map(Semigroup const&        s,
                                     std::vector<ElementSet> sets = {});
    // Tracks only sumsets.
    static StateSpace sums_only(Semigroup const& s, std::vector<ElementSet> sets);

    [[nodiscard]] IterationState initial() const;
    [[nodiscard]] IterationState next(IterationState const& st) const;
    [[nodiscard]] IterationState times(IterationState const& st,
                                       std::uint64_t         g) const;

    [[nodiscard]] Semigroup const& carrier() const noexcept {
      return *s_;
    }

   private:
    Semigroup const*        s_;
    std::vector<Element>    tracked_;
    std::vector<ElementSet> sets_;
  };

  struct Periodicity {
    std::uint64_t tail  = 0;  // states before the cycle is entered
    std::uint64_t cycle = 0;  // cycle length
  };

  struct ExploreResult {
    bool        complete = true;  // false when the visitor stopped early
    Multiplier  stopped_at = 0;   // the n at which the visitor stopped
    Periodicity period;           // F = N only, when complete
    std::size_t states = 0;       // distinct states (complete runs)
  };

  // Calls visit(n, state) for the states of n in F, in increasing n.
  // visit returns false to stop. For F = N every n in [1, tail + cycle]
  // is visited (possibly a few more, repeating earlier states).
  template <typename Visit>
  ExploreResult explore(MultiplierSet const& f,
                        StateSpace const&    space,
                        Visit&&              visit) {
    ExploreResult result;
    if (f.is_all()) {
      // Brent: the tortoise parks at power-of-two distances; the hare walks.
      IterationState tortoise = space.initial();
      std::uint64_t  n        = 1;
      if (!visit(Multiplier(n), tortoise)) {
        result.complete   = false;
        result.stopped_at = n;
        return result;
      }
      IterationState hare  = space.next(tortoise);
      std::uint64_t  power = 1;
      std::uint64_t  lam   = 1;
      ++n;
      if (!visit(Multiplier(n), hare)) {
        result.complete   = false;
        result.stopped_at = n;
        return result;
      }
      while (!(tortoise == hare)) {
        if (power == lam) {
          tortoise = hare;
          power *= 2;
          lam = 0;
        }
        hare = space.next(hare);
        ++lam;
        ++n;
        if (!visit(Multiplier(n), hare)) {
          result.complete   = false;
          result.stopped_at = n;
          return result;
        }
      }
      // Tail length: walk two states lam apart from the start until equal.
      IterationState slow = space.initial();
      IterationState fast = slow;
      for (std::uint64_t i = 0; i < lam; ++i) {
        fast = space.next(fast);
      }
      std::uint64_t mu = 0;
      while (!(slow == fast)) {
        slow = space.next(slow);
        fast = space.next(fast);
        ++mu;
      }
      result.period = {mu, lam};
      result.states = static_cast<std::size_t>(mu + lam);
      return result;
    }

    struct Entry {
      Multiplier     n;
      IterationState state;
    };
    auto later = [](Entry const& x, Entry const& y) { return x.n > y.n; };
    std::priority_queue<Entry, std::vector<Entry>, decltype(later)> queue(later);
    std::unordered_set<IterationState, IterationStateHash> seen;

    IterationState const one = space.initial();
    for (auto g : f.generators()) {
      queue.push({Multiplier(g), space.times(one, g)});
    }
    while (!queue.empty()) {
      Entry top = queue.top();
      queue.pop();
      if (seen.count(top.state) != 0) {
        continue;
      }
      if (!visit(top.n, top.state)) {
        result.complete   = false;
        result.stopped_at = top.n;
        return result;
      }
      for (auto g : f.generators()) {
        if (g == 1) {
          continue;
        }
        IterationState succ = space.times(top.state, g);
        if (seen.count(succ) == 0) {
          queue.push({top.n * g, std::move(succ)});
        }
      }
      seen.insert(std::move(top.state));
    }
    result.states = seen.size();
    return result;
  }

}  // namespace konvex

#endif  // KONVEX_ITERATION_HPP_
