#include <doctest.h>

#include <random>  // for mt19937_64

#include "konvex/catalog.hpp"
#include "konvex/convexity.hpp"
#include "konvex/hull.hpp"
#include "support.hpp"

using namespace konvex;
using konvex::test::at;
using konvex::test::error_kind;
using konvex::test::labelled;
using konvex::test::table_of;
using konvex::test::to_oracle;

namespace {

  std::vector<std::uint64_t> oracle_ns(oracle::Table const& t, MultiplierSet const& f,
                                       oracle::Set const& a) {
    if (f.is_all()) {
      return oracle::distinct_ns(t, {a});
    }
    return oracle::generated_up_to(f.generators(), 5000);
  }

}  // namespace

TEST_SUITE("hull") {
  TEST_CASE("hull of {0} in Z_4") {
    auto c4 = cyclic(4);
    auto a  = labelled(c4, {"0"});
    for (auto const& f : {MultiplierSet::generated({2}), MultiplierSet::all()}) {
      CHECK(hull_formula(c4, f, a).hull == c4.all());
      CHECK(hull_fixedpoint(c4, f, a).hull == c4.all());
    }
    auto t = oracle::cyclic(4);
    CHECK(oracle::hull_union(t, oracle::generated_up_to({2}, 64), {0}) == oracle::everything(t));
    CHECK(to_oracle(labelled(c4, {"0", "2"})) == oracle::preimage(t, 2, {0}));
  }

  TEST_CASE("a convex set is its own hull") {
    auto ch = chain_min(4);
    auto a  = labelled(ch, {"2", "3"});
    REQUIRE(decide_convex_all_n(ch, a).holds());
    auto fp = hull_fixedpoint(ch, MultiplierSet::all(), a);
    CHECK(fp.hull == a);
    CHECK(fp.rounds == 1);
    CHECK(hull_formula(ch, MultiplierSet::all(), a).hull == a);
  }

  TEST_CASE("formula and fixed point agree with the oracle") {
    std::mt19937_64 rng(31);
    std::vector<MultiplierSet> fs{MultiplierSet::all(), MultiplierSet::generated({2}),
                                  MultiplierSet::generated({3}), MultiplierSet::generated({2, 3})};
    for (auto const& s : catalog(6)) {
      auto t = table_of(s);
      for (int i = 0; i < 10; ++i) {
        auto a  = random_subset(rng, s.order());
        auto oa = to_oracle(a);
        for (auto const& f : fs) {
          auto expected = oracle::hull_union(t, oracle_ns(t, f, oa), oa);
          auto fo       = hull_formula(s, f, a);
          auto fp       = hull_fixedpoint(s, f, a);
          INFO(s.name(), " ", show(s, a), " ", f.to_string());
          CHECK(to_oracle(fo.hull) == expected);
          CHECK(to_oracle(fp.hull) == expected);
          if (f.is_all()) {
            CHECK(fp.rounds == 1);
            CHECK(decide_convex_all_n(s, fo.hull).holds());
          }
        }
      }
    }
  }

  TEST_CASE("raw generator hulls and the sandwich") {
    std::mt19937_64 rng(37);
    for (auto const& s : catalog(6)) {
      auto t = table_of(s);
      for (int i = 0; i < 10; ++i) {
        auto a    = random_subset(rng, s.order());
        auto gens = std::vector<std::uint64_t>{2 + rng() % 3};
        if (rng() % 2 == 0) {
          gens.push_back(gens[0] + 1);
        }
        auto f   = MultiplierSet::generated(gens);
        auto raw = hull_raw(s, f.generators(), Subset::of(s, a));
        CHECK(to_oracle(raw.hull.elements()) == oracle::hull_fixpoint(t, f.generators(), to_oracle(a)));
        auto w = hull_sandwich(s, f, a);
        CHECK(w.holds(a));
        CHECK(w.raw_hull == raw.hull.elements());
        CHECK(to_oracle(w.raw_union) == oracle::hull_union(t, f.generators(), to_oracle(a)));
      }
    }
  }

  TEST_CASE("raw hulls on the integers") {
    auto z = Semigroup::integers();
    std::vector<std::uint64_t> two{2};
    auto h = hull_raw(z, two, Subset::of_integers(z, {0, 2}));
    CHECK(h.hull.integers() == IntSet{0, 1, 2});
    CHECK(oracle::z::convex_at(2, {0, 1, 2}));
    CHECK(oracle::z::preimage(2, oracle::z::power(2, {0, 2})) == oracle::Set{0, 1, 2});
  }

  TEST_CASE("hull of a union between its bounds") {
    auto ch = chain_min(4);
    auto a1 = labelled(ch, {"1"});
    auto a2 = labelled(ch, {"4"});
    auto u  = hull_of_union(ch, MultiplierSet::all(), {a1, a2}, std::vector<ElementSet>{a1, a2});
    CHECK(u.ok());
    REQUIRE(u.equality_holds.has_value());
    CHECK(*u.equality_holds);
    CHECK(u.hull == (a1 | a2));

    auto c4 = cyclic(4);
    auto s0 = labelled(c4, {"0"});
    CHECK(error_kind([&] {
            (void)hull_of_union(c4, MultiplierSet::all(), {s0}, std::vector<ElementSet>{c4.all()});
          })
          == ErrorKind::cover_not_konvex);
    CHECK(error_kind([&] {
            (void)hull_of_union(ch, MultiplierSet::all(), {a1}, std::vector<ElementSet>{a2});
          })
          == ErrorKind::cover_misses_set);
    CHECK(error_kind([&] {
            (void)hull_of_union(ch, MultiplierSet::all(), {a1, a2}, std::vector<ElementSet>{a1});
          })
          == ErrorKind::bad_params);

    std::mt19937_64 rng(41);
    for (auto const& s : catalog(6)) {
      auto sets = std::vector<ElementSet>{random_subset(rng, s.order()), random_subset(rng, s.order())};
      for (auto const& f : {MultiplierSet::all(), MultiplierSet::generated({2})}) {
        auto r = hull_of_union(s, f, sets);
        CHECK(r.lower_holds());
        CHECK(r.hull == hull_formula(s, f, sets[0] | sets[1]).hull);
      }
    }
  }

  TEST_CASE("singleton classes and the equivalence") {
    auto c6 = cyclic(6);
    CHECK(equiv(c6, MultiplierSet::all(), at(c6, "1"), at(c6, "3")));
    for (std::size_t m = 1; m <= 8; ++m) {
      auto c = cyclic(m);
      for (Element x = 0; x < m; ++x) {
        CHECK(singleton_class(c, MultiplierSet::all(), x) == c.all());
      }
    }
    std::mt19937_64 rng(43);
    for (auto const& s : catalog(6)) {
      auto t  = table_of(s);
      auto ns = oracle::distinct_ns(t, {});
      for (Element x = 0; x < s.order(); ++x) {
        oracle::Set cls;
        for (int u = 0; u < t.order; ++u) {
          for (auto n : ns) {
            if (oracle::times(t, n, u) == oracle::times(t, n, static_cast<int>(x))) {
              cls.insert(u);
              break;
            }
          }
        }
        CHECK(to_oracle(singleton_class(s, MultiplierSet::all(), x)) == cls);
        CHECK(singleton_class(s, MultiplierSet::all(), x)
              == hull_formula(s, MultiplierSet::all(), ElementSet(s.order(), {x})).hull);
      }
    }
  }

  TEST_CASE("quotients") {
    for (std::size_t m = 1; m <= 8; ++m) {
      auto q = quotient(cyclic(m), MultiplierSet::all());
      CHECK(q.classes.size() == 1);
      CHECK(q.quotient.order() == 1);
      CHECK(q.cancellation.ok());
    }
    auto c5 = cyclic(5);
    auto q1 = quotient(c5, MultiplierSet::generated({1}));
    CHECK(q1.classes.size() == 5);

    auto p  = builtin("cyclic:2*chain-min:2");
    auto q2 = quotient(p, MultiplierSet::all());
    CHECK(q2.classes.size() == 2);
    CHECK(q2.quotient.labels() == std::vector<std::string>{"[(0,1)]", "[(0,2)]"});

    for (auto const& s : catalog(6)) {
      for (auto const& f : {MultiplierSet::all(), MultiplierSet::generated({2}),
                            MultiplierSet::generated({2, 3})}) {
        auto q = quotient(s, f);
        ElementSet covered(s.order());
        for (auto const& c : q.classes) {
          CHECK_FALSE(c.intersects(covered));
          covered |= c;
        }
        CHECK(covered == s.all());
        for (Element x = 0; x < s.order(); ++x) {
          CHECK(q.classes[q.projection[x]].contains(x));
          for (Element y = 0; y < s.order(); ++y) {
            CHECK(q.projection[s.op(x, y)]
                  == q.quotient.op(static_cast<Element>(q.projection[x]),
                                   static_cast<Element>(q.projection[y])));
            CHECK((q.projection[x] == q.projection[y]) == equiv(s, f, x, y));
          }
        }
        CHECK(q.cancellation.ok());
      }
    }
  }
}
