#include "konvex/suite.hpp"

#include <algorithm>  // for min
#include <chrono>     // for steady_clock
#include <functional> // for function
#include <map>        // for map
#include <random>     // for mt19937_64, seed_seq

#include "konvex/brute.hpp"
#include "konvex/catalog.hpp"
#include "konvex/convexity.hpp"
#include "konvex/error.hpp"
#include "konvex/hull.hpp"
#include "konvex/separation.hpp"
#include "konvex/setalg.hpp"

namespace konvex {

  namespace {

    std::size_t const kFailuresKept = 5;

    // Collects checks for one criterion.
    struct Tally {
      PropertyReport           report;
      std::vector<std::string> notes;

      void expect(bool ok, std::string const& what) {
        report.expect(ok, what);
      }
      void merge(PropertyReport other) {
        report.merge(std::move(other));
      }
      void note(std::string text) {
        notes.push_back(std::move(text));
      }
    };

    std::mt19937_64 rng_for(SuiteOptions const& o, int id) {
      std::seed_seq seq{static_cast<std::uint32_t>(o.seed),
                        static_cast<std::uint32_t>(o.seed >> 32),
                        static_cast<std::uint32_t>(id)};
      return std::mt19937_64(seq);
    }

    Semigroup const& pick(std::mt19937_64& rng, std::vector<Semigroup> const& from) {
      return from[rng() % from.size()];
    }

    // A catalog carrier or a freshly sampled one, alternately.
    Semigroup mixed_carrier(std::mt19937_64&              rng,
                            std::vector<Semigroup> const& carriers,
                            std::size_t                   i,
                            std::size_t                   order_cap) {
      if (i % 2 == 0) {
        return pick(rng, carriers);
      }
      return sample_carrier(rng(), order_cap);
    }

    std::string where(Semigroup const& s, ElementSet const& a) {
      return show(s, a) + " in " + s.name();
    }

    // ---------------------------------------------------------------------

    void set_identities(SuiteOptions const& o, std::mt19937_64& rng, Tally& t) {
      auto const carriers = catalog(o.order_cap);
      if (o.order_cap >= 8) {
        t.expect(carriers.size() >= 20,
                 "catalog holds only " + std::to_string(carriers.size()) + " carriers");
      }
      t.note(std::to_string(carriers.size()) + " carriers x 200 instances");
      for (auto const& s : carriers) {
        for (int i = 0; i < 200; ++i) {
          ElementSet    a = random_subset(rng, s.order());
          ElementSet    b = random_subset(rng, s.order());
          std::uint64_t k = 1 + rng() % 4;
          std::uint64_t n = 1 + rng() % 4;
          auto rep = check_set_identities(s, Subset::of(s, a), Subset::of(s, b), k, n);
          for (auto const& rel : rep.relations) {
            t.expect(rel.status != RelationStatus::violation,
                     rel.relation + " fails for A=" + show(s, a) + " B=" + show(s, b)
                         + " k=" + std::to_string(k) + " n=" + std::to_string(n) + " in "
                         + s.name());
          }
        }
      }
    }

    void strict_inclusions(SuiteOptions const&, std::mt19937_64&, Tally& t) {
      Semigroup const z = Semigroup::integers();
      Subset const    a = Subset::of_integers(z, {1, 3});
      auto const      rep = check_set_identities(z, a, a, 2, 2);
      std::size_t     inclusions = 0;
      for (auto const& rel : rep.relations) {
        t.expect(rel.status != RelationStatus::violation, rel.relation + " fails");
        if (rel.family == "identity" && !rel.equality) {
          ++inclusions;
          t.expect(rel.status == RelationStatus::proper_inclusion,
                   rel.relation + " holds with equality on A=B={1,3}, k=n=2");
        }
      }
      t.expect(inclusions == 5, std::to_string(inclusions) + " inclusion-only relations, expected 5");
    }

    void counterexamples(SuiteOptions const& o, std::mt19937_64&, Tally& t) {
      Semigroup const z = Semigroup::integers();
      auto ints = [&](Semigroup const& s, IntSet v) { return Subset::of_integers(s, std::move(v)); };

      // {0,1} is n-convex in Z; {0,2} is not 2-convex, 1 witnessing.
      for (std::uint64_t n = 1; n <= 10; ++n) {
        t.expect(is_n_convex(z, n, ints(z, {0, 1})), "{0,1} not " + std::to_string(n) + "-convex in Z");
      }
      Subset const zero_two = ints(z, {0, 2});
      if (o.inject_fault) {
        t.expect(is_n_convex(z, 2, zero_two), "corrupted fixture: {0,2} expected 2-convex in Z");
      } else {
        t.expect(!is_n_convex(z, 2, zero_two), "{0,2} is 2-convex in Z");
      }
      t.expect(preimage(z, 2, sumset_power(z, 2, zero_two)).integers() == IntSet{0, 1, 2},
               "2^-1([2]{0,2}) != {0,1,2} in Z");
      auto const sp = spectrum(z, zero_two, 4);
      t.expect(sp.convex_ns == std::vector<std::uint64_t>{1, 3}, "C_{0,2} ∩ [1,4] != {1,3} in Z");

      // A={0,n-1}, B={0,2n-1} are n-convex, A+B is not.
      for (std::int64_t n = 2; n <= 5; ++n) {
        auto const   nu = static_cast<std::uint64_t>(n);
        Subset const a  = ints(z, {0, n - 1});
        Subset const b  = ints(z, {0, 2 * n - 1});
        Subset const ab = sumset(z, a, b);
        std::string const tag = " for n=" + std::to_string(n);
        t.expect(is_n_convex(z, nu, a), "A={0,n-1} not n-convex" + tag);
        t.expect(is_n_convex(z, nu, b), "B={0,2n-1} not n-convex" + tag);
        t.expect(ab.integers() == IntSet{0, n - 1, 2 * n - 1, 3 * n - 2}, "A+B mismatch" + tag);
        t.expect(!is_n_convex(z, nu, ab), "A+B is n-convex" + tag);
        std::int64_t const w   = n - 1 + n / 2;
        IntSet const       pre = preimage(z, nu, sumset_power(z, nu, ab)).integers();
        t.expect(pre.count(w) == 1 && ab.integers().count(w) == 0,
                 std::to_string(w) + " does not witness A+B failing" + tag);
      }

      // {0,2} in the monoid without 1: n-convex, but [2]{0,2} is not 2-convex.
      Semigroup const m  = Semigroup::integers_without_one();
      Subset const    a2 = ints(m, {0, 2});
      for (std::uint64_t n = 1; n <= 6; ++n) {
        t.expect(is_n_convex(m, n, a2), "{0,2} not " + std::to_string(n) + "-convex in N\\{1}");
      }
      Subset const twice = sumset_power(m, 2, a2);
      t.expect(twice.integers() == IntSet{0, 2, 4}, "[2]{0,2} != {0,2,4} in N\\{1}");
      t.expect(!is_n_convex(m, 2, twice), "[2]{0,2} is 2-convex in N\\{1}");
      t.expect(preimage(m, 2, sumset_power(m, 2, twice)).integers() == IntSet{0, 2, 3, 4},
               "2^-1([2][2]{0,2}) != {0,2,3,4} in N\\{1}");

      // 4^-1{0} in Z_12 is not 2-konvex although {0} is.
      Semigroup const z12 = cyclic(12);
      ElementSet const zero(12, {0});
      ElementSet const h = preimage(z12, 4, zero);
      t.expect(h == ElementSet(12, {0, 3, 6, 9}), "4^-1{0} != {0,3,6,9} in Z_12");
      t.expect(is_n_konvex(z12, 2, zero), "{0} not 2-konvex in Z_12");
      t.expect(sumset_power(z12, 2, h) == h, "[2]H != H in Z_12");
      t.expect(scale(z12, 2, h).count() == 2, "|2H| != 2 in Z_12");
      t.expect(!is_n_konvex(z12, 2, h), "4^-1{0} is 2-konvex in Z_12");

      // Two n-konvex sets with non-konvex intersection, by exhaustive search
      // over cyclic groups and then cyclic (monogenic) semigroups.
      struct Found {
        std::string   carrier;
        std::uint64_t n;
        std::string   a, b;
      };
      auto search = [&](Semigroup const& s) -> std::optional<Found> {
        if (s.order() > 12) {
          return std::nullopt;
        }
        for (std::uint64_t n = 2; n <= 4; ++n) {
          std::vector<ElementSet> konvex;
          for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s.order()); ++mask) {
            ElementSet x(s.order());
            for (Element e = 0; e < s.order(); ++e) {
              if (((mask >> e) & 1U) != 0) {
                x.insert(e);
              }
            }
            if (is_n_konvex(s, n, x)) {
              konvex.push_back(std::move(x));
            }
          }
          for (std::size_t i = 0; i < konvex.size(); ++i) {
            for (std::size_t j = i + 1; j < konvex.size(); ++j) {
              ElementSet meet = konvex[i] & konvex[j];
              if (!is_n_konvex(s, n, meet)) {
                // Confirm by the naive sweep before reporting.
                auto naive = [&](ElementSet const& x) {
                  auto const base = brute::to_set(x);
                  brute::Set sum  = base;
                  for (std::uint64_t r = 1; r < n; ++r) {
                    sum = brute::plus(s, sum, base);
                  }
                  return brute::konvex_at(s, n, base, sum);
                };
                bool ok = naive(konvex[i]) && naive(konvex[j]) && !naive(meet);
                t.expect(ok, "naive check rejects the konvex-intersection pair in " + s.name());
                return Found{s.name(), n, show(s, konvex[i]), show(s, konvex[j])};
              }
            }
          }
        }
        return std::nullopt;
      };
      std::optional<Found> found;
      for (std::size_t mod = 1; mod <= 12 && !found; ++mod) {
        found = search(cyclic(mod));
      }
      if (!found) {
        t.note("no n-konvex pair with non-konvex intersection in Z_m, m <= 12, n <= 4");
        for (std::size_t order = 2; order <= 8 && !found; ++order) {
          for (std::size_t r = 2; r <= order && !found; ++r) {
            found = search(monogenic(r, order - r + 1));
          }
        }
      }
      t.expect(found.has_value(), "no konvex-intersection failure found");
      if (found) {
        t.note("konvex-intersection failure in " + found->carrier + " at n="
               + std::to_string(found->n) + ": " + found->a + " ∩ " + found->b);
      }
    }

    void multiplier_spectra(SuiteOptions const& o, std::mt19937_64& rng, Tally& t) {
      for (auto const& s : catalog(o.order_cap)) {
        for (int i = 0; i < 100; ++i) {
          t.merge(check_structure_props(s, random_subset(rng, s.order()), 12));
        }
      }
    }

    void hull_formula_agrees(SuiteOptions const& o, std::mt19937_64& rng, Tally& t) {
      auto const          carriers = catalog(o.order_cap);
      MultiplierSet const all      = MultiplierSet::all();
      for (std::size_t i = 0; i < 10000; ++i) {
        Semigroup const& s  = carriers[i % carriers.size()];
        ElementSet const a  = random_subset(rng, s.order());
        HullResult const fo = hull_formula(s, all, a);
        HullResult const fp = hull_fixedpoint(s, all, a);
        t.expect(fo.hull == fp.hull, "formula " + show(s, fo.hull) + " != fixed point "
                                         + show(s, fp.hull) + " for " + where(s, a));
        t.expect(fp.rounds == 1, "fixed point took " + std::to_string(fp.rounds)
                                     + " rounds for " + where(s, a));
        t.expect(a.is_subset_of(fo.hull), "hull misses A for " + where(s, a));
      }
    }

    MultiplierSet random_generated(std::mt19937_64& rng) {
      std::vector<std::uint64_t> gens;
      std::size_t const          count = 1 + rng() % 2;
      for (std::size_t i = 0; i < count; ++i) {
        gens.push_back(1 + rng() % 6);
      }
      return MultiplierSet::generated(std::move(gens));
    }

    void hull_bounds(SuiteOptions const& o, std::mt19937_64& rng, Tally& t) {
      auto const carriers = catalog(o.order_cap);
      for (std::size_t i = 0; i < 1000; ++i) {
        Semigroup const&    s = carriers[i % carriers.size()];
        MultiplierSet const f = random_generated(rng);
        ElementSet const    a = random_subset(rng, s.order());
        Sandwich const      w = hull_sandwich(s, f, a);
        std::string const   in = " for F=" + f.to_string() + ", " + where(s, a);
        t.expect(w.holds(a), "raw union ⊆ raw hull ⊆ closed union fails" + in);
        for (auto g : f.generators()) {
          t.expect(is_n_convex(s, g, w.raw_hull), "raw hull not " + std::to_string(g) + "-convex" + in);
        }
        t.expect(w.closed_union == hull_fixedpoint(s, f, a).hull, "closed union is not the <F>-hull" + in);
      }

      // Konvex covers per carrier: singletons, S when konvex, filtered randoms.
      std::map<std::size_t, std::vector<ElementSet>> pools;
      auto pool_for = [&](std::size_t index) -> std::vector<ElementSet> const& {
        auto it = pools.find(index);
        if (it != pools.end()) {
          return it->second;
        }
        Semigroup const&        s = carriers[index];
        std::vector<ElementSet> pool;
        for (Element x = 0; x < s.order(); ++x) {
          pool.push_back(ElementSet(s.order(), {x}));
        }
        for (int tries = 0; tries < 24; ++tries) {
          ElementSet r = random_subset(rng, s.order());
          if (!r.empty() && decide_konvex_all_n(s, r).holds()) {
            pool.push_back(std::move(r));
          }
        }
        if (decide_konvex_all_n(s, s.all()).holds()) {
          pool.push_back(s.all());
        }
        return pools.emplace(index, std::move(pool)).first->second;
      };
      for (std::size_t i = 0; i < 500; ++i) {
        std::size_t const       index = i % carriers.size();
        Semigroup const&        s     = carriers[index];
        auto const&             pool  = pool_for(index);
        std::size_t const       k     = 1 + rng() % 3;
        std::vector<ElementSet> sets;
        std::vector<ElementSet> covers;
        for (std::size_t j = 0; j < k; ++j) {
          ElementSet const& b = pool[rng() % pool.size()];
          ElementSet        a = random_subset(rng, s.order()) & b;
          if (a.empty()) {
            a.insert(b.elements()[rng() % b.count()]);
          }
          sets.push_back(std::move(a));
          covers.push_back(b);
        }
        MultiplierSet const f = i % 2 == 0 ? MultiplierSet::all() : random_generated(rng);
        UnionHull const     u = hull_of_union(s, f, sets, covers);
        std::string         what = " for F=" + f.to_string() + " in " + s.name() + ":";
        for (auto const& a : sets) {
          what += " " + show(s, a);
        }
        t.expect(u.lower_holds(), "lower bound exceeds the hull" + what);
        t.expect(u.upper_holds(), "hull exceeds the upper bound" + what);
        if (f.is_all()) {
          t.expect(u.equality_holds.value_or(false), "hull of union != lower bound" + what);
        }
      }
    }

    void quotients(SuiteOptions const& o, std::mt19937_64&, Tally& t) {
      std::vector<MultiplierSet> const fs{
          MultiplierSet::all(), MultiplierSet::generated({1}), MultiplierSet::generated({2}),
          MultiplierSet::generated({3}), MultiplierSet::generated({2, 3})};
      for (auto const& s : catalog(o.order_cap)) {
        std::size_t const order = s.order();
        for (auto const& f : fs) {
          std::string const in = " in " + s.name() + " for F=" + f.to_string();
          std::optional<QuotientMap> q;
          try {
            q = quotient(s, f);
          } catch (Error const& e) {
            t.expect(false, std::string(e.what()) + in);
            continue;
          }
          ElementSet seen(order);
          for (auto const& c : q->classes) {
            t.expect(!c.intersects(seen), "classes overlap" + in);
            seen |= c;
          }
          t.expect(seen == s.all(), "classes do not cover S" + in);

          std::vector<std::vector<bool>> rel(order, std::vector<bool>(order));
          for (Element x = 0; x < order; ++x) {
            t.expect(singleton_class(s, f, x) == q->classes[q->projection[x]],
                     "class of " + s.label(x) + " differs from its hull" + in);
            for (Element y = 0; y < order; ++y) {
              rel[x][y] = equiv(s, f, x, y);
              t.expect(rel[x][y] == (q->projection[x] == q->projection[y]),
                       "equivalence of " + s.label(x) + "," + s.label(y) + " disagrees with classes" + in);
              t.expect(q->projection[s.op(x, y)]
                           == q->quotient.op(static_cast<Element>(q->projection[x]),
                                             static_cast<Element>(q->projection[y])),
                       "projection not additive at " + s.label(x) + "," + s.label(y) + in);
            }
          }
          for (Element x = 0; x < order; ++x) {
            t.expect(rel[x][x], "not reflexive at " + s.label(x) + in);
            for (Element y = 0; y < order; ++y) {
              t.expect(rel[x][y] == rel[y][x], "not symmetric" + in);
              for (Element z = 0; z < order; ++z) {
                if (rel[x][y] && rel[y][z]) {
                  t.expect(rel[x][z], "not transitive" + in);
                }
              }
            }
          }
          t.merge(q->cancellation);
          if (f.is_all()) {
            // Naive: some n <= 1000 with n·x = n·y, by repeated addition.
            for (Element x = 0; x < order; ++x) {
              for (Element y = x + 1; y < order; ++y) {
                Element px = x;
                Element py = y;
                bool    hit = px == py;
                for (int n = 2; n <= 1000 && !hit; ++n) {
                  px  = s.op(px, x);
                  py  = s.op(py, y);
                  hit = px == py;
                }
                t.expect(hit == rel[x][y], "naive equivalence disagrees at " + s.label(x)
                                               + "," + s.label(y) + in);
              }
            }
          }
          if (f.generators_closed() && !f.is_all()) {
            t.expect(q->classes.size() == order, "F={1} merges elements" + in);
          }
        }
      }
    }

    void extension_step(SuiteOptions const& o, std::mt19937_64& rng, Tally& t) {
      std::size_t exhaustive_pairs = 0;
      std::size_t sampled_pairs    = 0;
      auto try_all = [&](Semigroup const& s, ElementSet const& a, ElementSet const& b) {
        for (Element x = 0; x < s.order(); ++x) {
          try {
            Side side = extend_step(s, a, b, x);
            ElementSet grown = side == Side::a ? a : b;
            grown.insert(x);
            bool ok = side == Side::a ? are_F_disjoint(s, MultiplierSet::all(), grown, b).disjoint
                                      : are_F_disjoint(s, MultiplierSet::all(), a, grown).disjoint;
            t.expect(ok, "chosen side breaks disjointness at " + s.label(x) + " in " + s.name());
          } catch (Error const& e) {
            t.expect(false, e.what());
          }
        }
      };
      for (auto const& s : catalog(std::min<std::size_t>(o.order_cap, 6))) {
        std::size_t const order = s.order();
        if (order <= 4) {
          std::uint64_t total = 1;
          for (std::size_t i = 0; i < order; ++i) {
            total *= 3;
          }
          for (std::uint64_t code = 0; code < total; ++code) {
            ElementSet    a(order);
            ElementSet    b(order);
            std::uint64_t c = code;
            for (Element e = 0; e < order; ++e, c /= 3) {
              if (c % 3 == 1) {
                a.insert(e);
              } else if (c % 3 == 2) {
                b.insert(e);
              }
            }
            if (are_F_disjoint(s, MultiplierSet::all(), a, b).disjoint) {
              ++exhaustive_pairs;
              try_all(s, a, b);
            }
          }
          continue;
        }
        std::size_t found = 0;
        for (std::size_t attempt = 0; found < 10000 && attempt < 400000; ++attempt) {
          ElementSet a(order);
          ElementSet b(order);
          for (Element e = 0; e < order; ++e) {
            switch (rng() % 3) {
              case 1: a.insert(e); break;
              case 2: b.insert(e); break;
              default: break;
            }
          }
          if (are_F_disjoint(s, MultiplierSet::all(), a, b).disjoint) {
            ++found;
            try_all(s, a, b);
          }
        }
        t.expect(found == 10000, "only " + std::to_string(found) + " disjoint pairs sampled in " + s.name());
        sampled_pairs += found;
      }
      t.note(std::to_string(exhaustive_pairs) + " pairs enumerated, "
             + std::to_string(sampled_pairs) + " sampled");
    }

    void separation(SuiteOptions const& o, std::mt19937_64& rng, Tally& t) {
      auto const carriers = catalog(o.order_cap);
      for (std::size_t i = 0; i < 200; ++i) {
        Semigroup const s = mixed_carrier(rng, carriers, i, o.order_cap);
        ElementSet      a0(s.order());
        ElementSet      b0(s.order());
        for (int tries = 0; tries < 20; ++tries) {
          ElementSet a(s.order());
          ElementSet b(s.order());
          for (Element e = 0; e < s.order(); ++e) {
            switch (rng() % 4) {
              case 0: a.insert(e); break;
              case 1: b.insert(e); break;
              default: break;
            }
          }
          if (are_F_disjoint(s, MultiplierSet::all(), a, b).disjoint) {
            a0 = std::move(a);
            b0 = std::move(b);
            break;
          }
        }
        std::string const in = " for A0=" + show(s, a0) + " B0=" + show(s, b0) + " in " + s.name();
        try {
          auto const cert = stone_separate(s, a0, b0);
          auto       rep  = verify_certificate(s, a0, b0, cert);
          for (auto& v : rep.violations) {
            v += in;
          }
          t.merge(std::move(rep));
          t.merge(complementary_check(s, cert.a, cert.b));
          auto const again = stone_separate(s, a0, b0);
          t.expect(again.a == cert.a && again.b == cert.b
                       && again.insertion_log.size() == cert.insertion_log.size(),
                   "separation not deterministic" + in);
        } catch (Error const& e) {
          t.expect(false, e.what() + in);
        }
      }
    }

    void decision_soundness(SuiteOptions const& o, std::mt19937_64& rng, Tally& t) {
      auto const          carriers = catalog(o.order_cap);
      std::uint64_t const n_max    = 50;
      for (std::size_t i = 0; i < 5000; ++i) {
        Semigroup const  s = mixed_carrier(rng, carriers, i, o.order_cap);
        ElementSet const a = random_subset(rng, s.order());
        ElementSet const b = random_subset(rng, s.order());

        for (Property p : {Property::convex, Property::konvex}) {
          Decision const d     = decide(s, p, MultiplierSet::all(), a);
          auto const     naive = p == Property::convex ? brute::first_convex_failure(s, a, n_max)
                                                       : brute::first_konvex_failure(s, a, n_max);
          std::string const what = std::string(to_string(p)) + " " + where(s, a);
          t.expect(d.holds() == !naive.has_value(), "verdict disagrees with sweep: " + what);
          if (!d.holds() && naive) {
            t.expect(d.witness_n == *naive, "witness n=" + d.witness_n.str() + " but sweep fails first at "
                                                + std::to_string(*naive) + ": " + what);
            t.expect(fixed_n_witness(s, p, *naive, a) == d.witness_element,
                     "witness element does not re-fail: " + what);
          }
        }

        auto const ev    = are_F_disjoint(s, MultiplierSet::all(), a, b);
        auto const naive = brute::first_collision(s, a, b, n_max);
        std::string const what = show(s, a) + "," + show(s, b) + " in " + s.name();
        t.expect(ev.disjoint == !naive.has_value(), "disjointness disagrees with sweep: " + what);
        if (ev.disjoint) {
          t.expect(!a.intersects(b), "N-disjoint sets intersect: " + what);
        } else if (naive) {
          t.expect(ev.collision_n == *naive, "collision n disagrees: " + what);
          auto const n = *naive;
          t.expect(sumset_power(s, n, a).contains(*ev.collision_element)
                       && sumset_power(s, n, b).contains(*ev.collision_element),
                   "collision element not in both sumsets: " + what);
        }
      }
    }

    struct Spec {
      char const* name;
      char const* checks;
      void (*run)(SuiteOptions const&, std::mt19937_64&, Tally&);
      std::optional<double> limit;
    };

    Spec const kSpecs[criterion_count] = {
        {"set identities",
         "12 scale/preimage/sumset relations, monotonicity and family laws on 200 random "
         "(A,B,k,n) per catalog carrier",
         set_identities, 60.0},
        {"strict inclusions",
         "each inclusion-only relation is strict for A=B={1,3}, k=n=2 in Z", strict_inclusions,
         std::nullopt},
        {"counterexamples",
         "{0,1}/{0,2} in Z; sums of n-convex sets; [2]{0,2} in N\\{1}; 4^-1{0} in Z_12; "
         "konvex intersections",
         counterexamples, std::nullopt},
        {"multiplier spectra",
         "K_A closed under products and C_A under divisors in [1,12], 100 sets per carrier",
         multiplier_spectra, std::nullopt},
        {"hull formula",
         "union formula equals the fixed point for F=N on 10000 instances, one round",
         hull_formula_agrees, 120.0},
        {"hull bounds",
         "raw/closed hull sandwich on 1000 generated F; union hull bounds with konvex covers "
         "on 500 instances",
         hull_bounds, std::nullopt},
        {"quotient",
         "singleton classes partition S, equivalence laws, additive projection, cancellation",
         quotients, std::nullopt},
        {"extension step",
         "one side of every N-disjoint pair accepts each element; exhaustive to order 4, "
         "10000 samples at orders 5-6",
         extension_step, std::nullopt},
        {"separation",
         "200 greedy separations re-verified field by field by naive sweeps", separation,
         120.0},
        {"decision soundness",
         "all-n convex/konvex/disjoint verdicts match naive sweeps to n=50 on 5000 instances",
         decision_soundness, std::nullopt},
    };

  }  // namespace

  CriterionResult run_criterion(int id, SuiteOptions const& options) {
    if (id < 1 || id > criterion_count) {
      throw Error(ErrorKind::bad_params, "no criterion " + std::to_string(id));
    }
    Spec const&     spec = kSpecs[id - 1];
    CriterionResult out;
    out.id         = id;
    out.name       = spec.name;
    out.checks     = spec.checks;
    out.time_limit = spec.limit;

    Tally      t;
    auto       rng   = rng_for(options, id);
    auto const start = std::chrono::steady_clock::now();
    try {
      spec.run(options, rng, t);
    } catch (Error const& e) {
      t.expect(false, std::string("unexpected error: ") + e.what());
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    out.checks_run    = t.report.checks;
    out.failure_count = t.report.violations.size();
    for (std::size_t i = 0; i < std::min(kFailuresKept, out.failure_count); ++i) {
      out.failures.push_back(t.report.violations[i]);
    }
    out.notes  = std::move(t.notes);
    out.passed = t.report.ok() && (!out.time_limit || out.seconds <= *out.time_limit);
    if (out.time_limit && out.seconds > *out.time_limit) {
      out.notes.push_back("exceeded the time limit");
    }
    return out;
  }

  SuiteResult run_suite(SuiteOptions const& options) {
    SuiteResult out;
    for (int id = 1; id <= criterion_count; ++id) {
      out.criteria.push_back(run_criterion(id, options));
    }
    return out;
  }

}  // namespace konvex
