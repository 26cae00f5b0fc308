#include "konvex/hull.hpp"

#include <map>      // for map

#include "konvex/convexity.hpp"
#include "konvex/error.hpp"
#include "konvex/iteration.hpp"
#include "konvex/setalg.hpp"

namespace konvex {

  char const* to_string(HullMethod m) noexcept {
    return m == HullMethod::fixed_point ? "fixpoint" : "formula";
  }

  namespace {

    // U_{n in <F>} n^-1([n]A) in one exploration.
    ElementSet closed_union(Semigroup const&         s,
                            MultiplierSet const&     f,
                            ElementSet const&        a,
                            std::vector<Multiplier>* contributing) {
      ElementSet acc = a;
      explore(f, StateSpace::with_power_map(s, {a}),
              [&](Multiplier const& n, IterationState const& st) {
                ElementSet pre = preimage_under(st.images, st.sums[0]);
                if (!pre.is_subset_of(acc)) {
                  acc |= pre;
                  if (contributing != nullptr) {
                    contributing->push_back(n);
                  }
                }
                return true;
              });
      return acc;
    }

  }  // namespace

  HullResult hull_formula(Semigroup const& s, MultiplierSet const& f, ElementSet const& a) {
    require_finite(s, "a hull");
    require_carrier(s, a);
    HullResult r;
    r.method = HullMethod::formula;
    r.hull   = closed_union(s, f, a, &r.contributing_ns);
    return r;
  }

  HullResult hull_fixedpoint(Semigroup const& s, MultiplierSet const& f, ElementSet const& a) {
    require_finite(s, "a hull");
    require_carrier(s, a);
    HullResult r;
    r.method   = HullMethod::fixed_point;
    ElementSet h = a;
    std::size_t round = 0;
    std::size_t last_change = 0;
    while (true) {
      ++round;
      ElementSet next = h | closed_union(s, f, h, nullptr);
      if (next == h) {
        break;
      }
      h           = std::move(next);
      last_change = round;
    }
    r.hull   = std::move(h);
    r.rounds = last_change == 0 ? 1 : last_change;
    return r;
  }

  RawHull hull_raw(Semigroup const& s, std::span<std::uint64_t const> gens, Subset const& a) {
    require_carrier(s, a);
    if (gens.empty()) {
      throw Error(ErrorKind::empty_generators, "empty multiplier list");
    }
    Subset      h           = a;
    std::size_t round       = 0;
    std::size_t last_change = 0;
    while (true) {
      ++round;
      Subset next = h;
      for (auto g : gens) {
        next = unite(s, next, preimage(s, g, sumset_power(s, g, h)));
      }
      if (next == h) {
        break;
      }
      h           = std::move(next);
      last_change = round;
    }
    return RawHull{std::move(h), last_change == 0 ? 1 : last_change};
  }

  Sandwich hull_sandwich(Semigroup const& s, MultiplierSet const& f, ElementSet const& a) {
    require_finite(s, "a hull");
    require_carrier(s, a);
    Sandwich out;
    out.closed_union = closed_union(s, f, a, nullptr);
    if (f.is_all()) {
      // N is already closed: all three coincide.
      out.raw_union = out.closed_union;
      out.raw_hull  = out.closed_union;
      return out;
    }
    out.raw_union = a;
    for (auto g : f.generators()) {
      out.raw_union |= preimage(s, g, sumset_power(s, g, a));
    }
    out.raw_hull = hull_raw(s, f.generators(), Subset::of(s, a)).hull.elements();
    return out;
  }

  namespace {

    // Union of conv_F({t_1..t_k}) over all tuples with t_i in pools[i].
    ElementSet tuple_union(Semigroup const&               s,
                           MultiplierSet const&           f,
                           std::vector<ElementSet> const& pools) {
      ElementSet out(s.order());
      if (pools.empty()) {
        return out;
      }
      std::vector<std::vector<Element>> members;
      for (auto const& p : pools) {
        members.push_back(p.elements());
        if (members.back().empty()) {
          return out;
        }
      }
      std::map<ElementSet, ElementSet> cache;
      std::vector<std::size_t>         idx(members.size(), 0);
      while (true) {
        ElementSet tuple(s.order());
        for (std::size_t i = 0; i < members.size(); ++i) {
          tuple.insert(members[i][idx[i]]);
        }
        auto it = cache.find(tuple);
        if (it == cache.end()) {
          it = cache.emplace(tuple, closed_union(s, f, tuple, nullptr)).first;
        }
        out |= it->second;
        std::size_t i = 0;
        while (i < members.size() && ++idx[i] == members[i].size()) {
          idx[i] = 0;
          ++i;
        }
        if (i == members.size()) {
          break;
        }
      }
      return out;
    }

  }  // namespace

  UnionHull hull_of_union(Semigroup const&                              s,
                          MultiplierSet const&                          f,
                          std::vector<ElementSet> const&                sets,
                          std::optional<std::vector<ElementSet>> const& covers) {
    require_finite(s, "a hull");
    if (covers && covers->size() != sets.size()) {
      throw Error(ErrorKind::bad_params, "need one cover per set");
    }
    ElementSet all_of(s.order());
    for (auto const& a : sets) {
      require_carrier(s, a);
      all_of |= a;
    }
    if (covers) {
      for (std::size_t i = 0; i < sets.size(); ++i) {
        auto const& b = (*covers)[i];
        require_carrier(s, b);
        if (!sets[i].is_subset_of(b)) {
          throw Error(ErrorKind::cover_misses_set,
                      "cover " + std::to_string(i + 1) + " does not contain its set",
                      {std::to_string(i + 1)});
        }
        if (!decide_konvex_all_n(s, b).holds()) {
          throw Error(ErrorKind::cover_not_konvex,
                      "cover " + std::to_string(i + 1) + " is not konvex",
                      {std::to_string(i + 1)});
        }
      }
    }

    UnionHull out;
    out.hull = closed_union(s, f, all_of, nullptr);

    std::vector<ElementSet> lower_pools;
    std::vector<ElementSet> upper_pools;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (sets[i].empty()) {
        continue;
      }
      lower_pools.push_back(closed_union(s, f, sets[i], nullptr));
      if (covers) {
        upper_pools.push_back(closed_union(s, MultiplierSet::all(), sets[i], nullptr)
                              & (*covers)[i]);
      }
    }
    out.lower = tuple_union(s, f, lower_pools);
    if (covers) {
      out.upper = tuple_union(s, f, upper_pools);
      if (f.is_all()) {
        out.equality_holds = out.hull == out.lower;
      }
    }
    return out;
  }

  ElementSet singleton_class(Semigroup const& s, MultiplierSet const& f, Element x) {
    require_finite(s, "a singleton class");
    if (x >= s.order()) {
      throw Error(ErrorKind::not_in_carrier, "element outside " + s.name());
    }
    ElementSet single(s.order());
    single.insert(x);
    return closed_union(s, f, single, nullptr);
  }

  bool equiv(Semigroup const& s, MultiplierSet const& f, Element x, Element y) {
    bool found = false;
    explore(f, StateSpace(s, {x, y}, {}),
            [&](Multiplier const&, IterationState const& st) {
              found = st.images[0] == st.images[1];
              return !found;
            });
    return found;
  }

  namespace {

    bool injective(std::vector<Element> const& map) {
      ElementSet seen(map.size());
      for (auto y : map) {
        if (seen.contains(y)) {
          return false;
        }
        seen.insert(y);
      }
      return true;
    }

  }  // namespace

  QuotientMap quotient(Semigroup const& s, MultiplierSet const& f) {
    require_finite(s, "a quotient");
    std::size_t const        order = s.order();
    std::vector<ElementSet>  classes;
    std::vector<std::size_t> projection(order, order);
    for (Element x = 0; x < order; ++x) {
      ElementSet c = singleton_class(s, f, x);
      if (projection[x] != order) {
        if (classes[projection[x]] != c) {
          throw Error(ErrorKind::partition_violation,
                      "classes of " + s.label(x) + " and "
                          + s.label(static_cast<Element>(
                              classes[projection[x]].elements().front()))
                          + " overlap but differ",
                      {s.label(x)});
        }
        continue;
      }
      c.for_each([&](Element u) {
        if (projection[u] != order) {
          throw Error(ErrorKind::partition_violation,
                      "element " + s.label(u) + " lies in two classes",
                      {s.label(u)});
        }
        projection[u] = classes.size();
      });
      classes.push_back(std::move(c));
    }

    std::size_t const    k = classes.size();
    std::vector<Element> reps(k);
    std::vector<std::string> labels(k);
    for (std::size_t i = 0; i < k; ++i) {
      reps[i]   = classes[i].elements().front();
      labels[i] = "[" + s.label(reps[i]) + "]";
    }
    std::vector<Element> table(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        table[i * k + j] = static_cast<Element>(projection[s.op(reps[i], reps[j])]);
      }
    }
    for (Element x = 0; x < order; ++x) {
      for (Element y = 0; y < order; ++y) {
        auto want = table[projection[x] * k + projection[y]];
        if (projection[s.op(x, y)] != want) {
          throw Error(ErrorKind::well_definedness_violation,
                      "class of " + s.label(x) + "+" + s.label(y)
                          + " depends on the representatives",
                      {s.label(x), s.label(y)});
        }
      }
    }

    std::optional<Semigroup> q;
    try {
      q = Semigroup::from_indices(labels, table, s.name() + "/~" + f.to_string());
    } catch (Error const& e) {
      throw Error(ErrorKind::well_definedness_violation,
                  std::string("quotient table invalid: ") + e.what(), e.witness());
    }

    PropertyReport cancel;
    explore(f, StateSpace::with_power_map(*q),
            [&](Multiplier const& n, IterationState const& st) {
              cancel.expect(injective(st.images),
                            "multiplication by " + n.str() + " not injective on the quotient");
              return true;
            });
    for (auto n : f.members_up_to(64)) {
      cancel.expect(injective(q->power_map(n)),
                    "multiplication by " + std::to_string(n)
                        + " not injective on the quotient");
    }
    return QuotientMap{std::move(classes), std::move(projection), std::move(*q),
                       std::move(cancel)};
  }

}  // namespace konvex
