#include "konvex/convexity.hpp"

#include <algorithm>  // for binary_search

#include "konvex/error.hpp"
#include "konvex/iteration.hpp"
#include "konvex/setalg.hpp"

namespace konvex {

  char const* to_string(Property p) noexcept {
    return p == Property::convex ? "convex" : "konvex";
  }

  namespace {

    // The predicates depend on n only through (x -> n·x, [n]A).
    std::optional<Element> state_witness(Property                    p,
                                         std::vector<Element> const& pow,
                                         ElementSet const&           sum,
                                         ElementSet const&           a) {
      if (p == Property::convex) {
        ElementSet pre = preimage_under(pow, sum);
        Element    x   = pre.first_not_in(a);
        if (x < a.universe()) {
          return x;
        }
        return std::nullopt;
      }
      ElementSet img = image_under(pow, a);
      Element    x   = sum.first_not_in(img);
      if (x < a.universe()) {
        return x;
      }
      return std::nullopt;
    }

  }  // namespace

  std::optional<Element> fixed_n_witness(Semigroup const&  s,
                                         Property          p,
                                         std::uint64_t     n,
                                         ElementSet const& a) {
    require_n(n);
    require_carrier(s, a);
    return state_witness(p, s.power_map(n), sumset_power(s, n, a), a);
  }

  bool is_n_convex(Semigroup const& s, std::uint64_t n, ElementSet const& a) {
    return !fixed_n_witness(s, Property::convex, n, a).has_value();
  }

  bool is_n_konvex(Semigroup const& s, std::uint64_t n, ElementSet const& a) {
    return !fixed_n_witness(s, Property::konvex, n, a).has_value();
  }

  bool is_n_convex(Semigroup const& s, std::uint64_t n, Subset const& a) {
    require_n(n);
    return preimage(s, n, sumset_power(s, n, a)).is_subset_of(a);
  }

  bool is_n_konvex(Semigroup const& s, std::uint64_t n, Subset const& a) {
    require_n(n);
    return sumset_power(s, n, a).is_subset_of(scale(s, n, a));
  }

  Decision decide(Semigroup const&     s,
                  Property             p,
                  MultiplierSet const& f,
                  ElementSet const&    a) {
    require_finite(s, "an all-n decision");
    require_carrier(s, a);
    Decision   d;
    StateSpace space = StateSpace::with_power_map(s, {a});
    auto       run   = explore(f, space, [&](Multiplier const& n,
                                     IterationState const& st) {
      if (auto w = state_witness(p, st.images, st.sums[0], a)) {
        d.verdict         = Verdict::fails;
        d.witness_n       = n;
        d.witness_element = w;
        return false;
      }
      return true;
    });
    if (run.complete) {
      d.tail_length  = run.period.tail;
      d.cycle_length = run.period.cycle;
      d.states       = run.states;
    }
    return d;
  }

  Decision decide_convex_all_n(Semigroup const& s, ElementSet const& a) {
    return decide(s, Property::convex, MultiplierSet::all(), a);
  }

  Decision decide_konvex_all_n(Semigroup const& s, ElementSet const& a) {
    return decide(s, Property::konvex, MultiplierSet::all(), a);
  }

  bool holds_for_each(Semigroup const&               s,
                      Property                       p,
                      std::span<std::uint64_t const> ns,
                      Subset const&                  a) {
    for (auto n : ns) {
      bool ok = p == Property::convex ? is_n_convex(s, n, a) : is_n_konvex(s, n, a);
      if (!ok) {
        return false;
      }
    }
    return true;
  }

  SpectrumReport spectrum(Semigroup const& s, Subset const& a, std::uint64_t n_max) {
    require_n(n_max);
    require_carrier(s, a);
    SpectrumReport report;
    report.n_max = n_max;
    if (s.is_finite()) {
      ElementSet const&    base = a.elements();
      std::vector<Element> pow(s.order());
      for (Element x = 0; x < s.order(); ++x) {
        pow[x] = x;
      }
      ElementSet sum = base;
      for (std::uint64_t n = 1; n <= n_max; ++n) {
        if (n > 1) {
          for (Element x = 0; x < s.order(); ++x) {
            pow[x] = s.op(pow[x], x);
          }
          sum = sumset(s, sum, base);
        }
        if (!state_witness(Property::convex, pow, sum, base)) {
          report.convex_ns.push_back(n);
        }
        if (!state_witness(Property::konvex, pow, sum, base)) {
          report.konvex_ns.push_back(n);
        }
      }
      return report;
    }
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      if (is_n_convex(s, n, a)) {
        report.convex_ns.push_back(n);
      }
      if (is_n_konvex(s, n, a)) {
        report.konvex_ns.push_back(n);
      }
    }
    return report;
  }

  PropertyReport check_structure_props(Semigroup const&  s,
                                       ElementSet const& a,
                                       std::uint64_t     n_max) {
    auto const sp = spectrum(s, Subset::of(s, a), n_max);
    auto in = [](std::vector<std::uint64_t> const& v, std::uint64_t n) {
      return std::binary_search(v.begin(), v.end(), n);
    };
    PropertyReport report;
    std::string const where = " for A=" + show(s, a) + " in " + s.name();
    report.expect(in(sp.convex_ns, 1) && in(sp.konvex_ns, 1),
                  "1 missing from C_A or K_A" + where);
    for (auto n : sp.konvex_ns) {
      for (auto k : sp.konvex_ns) {
        if (n * k <= n_max) {
          report.expect(in(sp.konvex_ns, n * k),
                        std::to_string(n) + "," + std::to_string(k)
                            + " in K_A but not their product" + where);
        }
      }
    }
    for (auto n : sp.convex_ns) {
      for (std::uint64_t k = 1; k <= n; ++k) {
        if (n % k == 0) {
          report.expect(in(sp.convex_ns, k),
                        std::to_string(n) + " in C_A but divisor "
                            + std::to_string(k) + " is not" + where);
        }
      }
    }
    return report;
  }

  bool is_uniquely_divisible(Semigroup const& s, std::uint64_t n) {
    require_finite(s, "unique divisibility");
    auto const pow = s.power_map(n);
    ElementSet image(s.order());
    for (auto y : pow) {
      image.insert(y);
    }
    return image.count() == s.order();
  }

  PropertyReport check_divisible_coincidence(Semigroup const&  s,
                                             std::uint64_t     n,
                                             ElementSet const& a) {
    PropertyReport report;
    if (!is_uniquely_divisible(s, n)) {
      return report;
    }
    report.expect(is_n_convex(s, n, a) == is_n_konvex(s, n, a),
                  "uniquely " + std::to_string(n) + "-divisible " + s.name()
                      + ": convexity and konvexity differ on " + show(s, a));
    return report;
  }

}  // namespace konvex
