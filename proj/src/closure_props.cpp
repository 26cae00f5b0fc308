#include <random>  // for mt19937_64

#include "konvex/catalog.hpp"
#include "konvex/convexity.hpp"
#include "konvex/hull.hpp"
#include "konvex/setalg.hpp"

namespace konvex {

  PropertyReport check_closure_props(Semigroup const&     s,
                                     MultiplierSet const& f,
                                     ClosureSampling      sampling) {
    require_finite(s, "closure sampling");
    std::mt19937_64 rng(sampling.seed);
    std::size_t const order = s.order();

    auto convex = [&](ElementSet const& x) {
      return decide(s, Property::convex, f, x).holds();
    };
    auto konvex = [&](ElementSet const& x) {
      return decide(s, Property::konvex, f, x).holds();
    };
    auto pick = [&](std::vector<ElementSet> const& pool) -> ElementSet const& {
      return pool[rng() % pool.size()];
    };
    std::string const in = " in " + s.name() + " for F=" + f.to_string();

    PropertyReport report;
    std::vector<ElementSet> convex_pool{ElementSet(order), s.all()};
    std::vector<ElementSet> konvex_pool{ElementSet(order)};
    for (Element x = 0; x < order; ++x) {
      konvex_pool.push_back(ElementSet(order, {x}));
    }
    for (std::size_t i = 0; i < sampling.samples; ++i) {
      ElementSet r = random_subset(rng, order);
      if (convex(r)) {
        convex_pool.push_back(r);
      }
      if (konvex(r)) {
        konvex_pool.push_back(r);
      }
      ElementSet h = hull_formula(s, f, r).hull;
      report.expect(convex(h), "hull " + show(s, h) + " not convex" + in);
      convex_pool.push_back(std::move(h));
    }

    for (std::size_t i = 0; i < sampling.samples; ++i) {
      ElementSet const& a = pick(konvex_pool);
      ElementSet const& b = pick(konvex_pool);
      std::uint64_t     k = 1 + rng() % 4;
      std::string const ab = show(s, a) + "," + show(s, b);
      report.expect(konvex(sumset(s, a, b)), "konvex " + ab + " with non-konvex sum" + in);
      report.expect(konvex(scale(s, k, a)),
                    std::to_string(k) + show(s, a) + " not konvex" + in);
      report.expect(konvex(sumset_power(s, k, a)),
                    "[" + std::to_string(k) + "]" + show(s, a) + " not konvex" + in);
      if (a.is_subset_of(b)) {
        report.expect(konvex(a | b), "konvex chain " + ab + " with non-konvex union" + in);
      }
    }

    for (std::size_t i = 0; i < sampling.samples; ++i) {
      ElementSet const& a = pick(convex_pool);
      ElementSet const& b = pick(convex_pool);
      ElementSet const& c = pick(convex_pool);
      ElementSet const& kx = pick(konvex_pool);
      std::uint64_t     k = 1 + rng() % 4;
      report.expect(convex(preimage(s, k, a)),
                    std::to_string(k) + "^-1" + show(s, a) + " not convex" + in);
      report.expect(convex(a & b & c), "intersection of convex " + show(s, a) + ","
                                           + show(s, b) + "," + show(s, c)
                                           + " not convex" + in);
      report.expect(konvex(a & kx), "convex " + show(s, a) + " ∩ konvex " + show(s, kx)
                                        + " not konvex" + in);
    }

    // Ascending chains of hulls of growing random sets.
    for (std::size_t i = 0; i < sampling.samples / 4 + 1; ++i) {
      ElementSet              r = random_subset(rng, order);
      std::vector<ElementSet> chain;
      for (int step = 0; step < 3; ++step) {
        chain.push_back(hull_formula(s, f, r).hull);
        r |= random_subset(rng, order);
      }
      ElementSet u(order);
      for (auto const& link : chain) {
        report.expect(u.is_subset_of(link), "hull not monotone" + in);
        u |= link;
      }
      report.expect(convex(u), "union of convex chain " + show(s, u) + " not convex" + in);
    }

    if (konvex(s.all())) {
      for (auto const& c : convex_pool) {
        report.expect(konvex(c), "S konvex but convex " + show(s, c) + " is not" + in);
      }
    }
    return report;
  }

}  // namespace konvex
