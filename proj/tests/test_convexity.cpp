#include <doctest.h>

#include <random>  // for mt19937_64

#include "konvex/catalog.hpp"
#include "konvex/convexity.hpp"
#include "konvex/setalg.hpp"
#include "support.hpp"

using namespace konvex;
using konvex::test::at;
using konvex::test::error_kind;
using konvex::test::labelled;
using konvex::test::table_of;
using konvex::test::to_oracle;

namespace {

  std::vector<MultiplierSet> multiplier_sets() {
    return {MultiplierSet::all(), MultiplierSet::generated({2}), MultiplierSet::generated({3}),
            MultiplierSet::generated({2, 3}), MultiplierSet::generated({1})};
  }

  // Every n in F that the oracle needs to see to decide questions over F.
  std::vector<std::uint64_t> oracle_ns(oracle::Table const& t, MultiplierSet const& f,
                                       oracle::Set const& a) {
    if (f.is_all()) {
      return oracle::distinct_ns(t, {a});
    }
    return oracle::generated_up_to(f.generators(), 5000);
  }

}  // namespace

TEST_SUITE("convexity") {
  TEST_CASE("fixed-n convexity and konvexity on the integers") {
    auto z = Semigroup::integers();
    auto a = Subset::of_integers(z, {0, 1});
    CHECK(is_n_convex(z, 2, a));
    CHECK_FALSE(is_n_konvex(z, 2, a));
    CHECK(oracle::z::convex_at(2, {0, 1}));
    CHECK_FALSE(oracle::z::konvex_at(2, {0, 1}));

    auto b = Subset::of_integers(z, {0, 2});
    CHECK_FALSE(is_n_convex(z, 2, b));
    CHECK(is_n_convex(z, 3, b));
  }

  TEST_CASE("a subgroup can be n-konvex-free") {
    auto c6 = cyclic(6);
    auto a  = labelled(c6, {"0", "2", "4"});
    CHECK_FALSE(is_n_konvex(c6, 3, a));
    CHECK_FALSE(oracle::konvex_at(oracle::cyclic(6), 3, {0, 2, 4}));
    CHECK(fixed_n_witness(c6, Property::konvex, 3, a) == at(c6, "2"));
  }

  TEST_CASE("the empty set is convex and konvex for every n") {
    for (auto const& s : catalog(6)) {
      for (std::uint64_t n = 1; n <= 6; ++n) {
        CHECK(is_n_convex(s, n, ElementSet(s.order())));
        CHECK(is_n_konvex(s, n, ElementSet(s.order())));
      }
      for (auto const& f : multiplier_sets()) {
        CHECK(decide(s, Property::convex, f, ElementSet(s.order())).holds());
        CHECK(decide(s, Property::konvex, f, ElementSet(s.order())).holds());
      }
    }
  }

  TEST_CASE("all-n decisions on fixed examples") {
    auto c4 = cyclic(4);
    auto d  = decide_convex_all_n(c4, labelled(c4, {"0"}));
    CHECK_FALSE(d.holds());
    CHECK(d.witness_n == 2);
    CHECK(d.witness_element == at(c4, "2"));
    auto o = oracle::first_convex_failure(oracle::cyclic(4),
                                          oracle::distinct_ns(oracle::cyclic(4), {{0}}), {0});
    REQUIRE(o);
    CHECK(o->n == 2);
    CHECK(o->element == 2);

    auto p = powerset_union(2);
    CHECK(decide_convex_all_n(p, labelled(p, {"{1}", "{1,2}"})).holds());
    CHECK(decide_convex_all_n(p, p.all()).holds());

    auto k = decide_konvex_all_n(c4, c4.all());
    CHECK_FALSE(k.holds());
    CHECK(k.witness_n == 2);

    auto ch = chain_min(3);
    CHECK(decide_konvex_all_n(ch, labelled(ch, {"1", "3"})).holds());
    CHECK_FALSE(oracle::first_konvex_failure(oracle::chain_min(3),
                                             oracle::distinct_ns(oracle::chain_min(3), {{0, 2}}),
                                             {0, 2}));
  }

  TEST_CASE("k^-1{0} in Z_12 is not 2-konvex") {
    auto c12 = cyclic(12);
    auto h   = preimage(c12, 4, labelled(c12, {"0"}));
    CHECK(h == labelled(c12, {"0", "3", "6", "9"}));
    CHECK_FALSE(is_n_konvex(c12, 2, h));
    CHECK_FALSE(oracle::konvex_at(oracle::cyclic(12), 2, {0, 3, 6, 9}));
  }

  TEST_CASE("decisions over F agree with the oracle") {
    std::mt19937_64 rng(17);
    for (auto const& s : catalog(6)) {
      auto t = table_of(s);
      for (int i = 0; i < 12; ++i) {
        auto a  = random_subset(rng, s.order());
        auto oa = to_oracle(a);
        for (auto const& f : multiplier_sets()) {
          auto ns = oracle_ns(t, f, oa);
          for (auto p : {Property::convex, Property::konvex}) {
            auto d    = decide(s, p, f, a);
            auto fail = p == Property::convex ? oracle::first_convex_failure(t, ns, oa)
                                              : oracle::first_konvex_failure(t, ns, oa);
            INFO(s.name(), " ", show(s, a), " ", f.to_string(), " ", to_string(p));
            REQUIRE(d.holds() == !fail.has_value());
            if (fail) {
              CHECK(d.witness_n == fail->n);
              CHECK(static_cast<int>(*d.witness_element) == fail->element);
            }
          }
        }
      }
    }
  }

  TEST_CASE("fixed-n witnesses are the least failing elements") {
    std::mt19937_64 rng(23);
    for (auto const& s : catalog(8)) {
      auto t = table_of(s);
      for (int i = 0; i < 10; ++i) {
        auto a  = random_subset(rng, s.order());
        auto oa = to_oracle(a);
        for (std::uint64_t n = 1; n <= 6; ++n) {
          auto c = oracle::first_convex_failure(t, {n}, oa);
          auto k = oracle::first_konvex_failure(t, {n}, oa);
          CHECK(is_n_convex(s, n, a) == !c);
          CHECK(is_n_konvex(s, n, a) == !k);
          auto wc = fixed_n_witness(s, Property::convex, n, a);
          auto wk = fixed_n_witness(s, Property::konvex, n, a);
          CHECK(wc.has_value() == c.has_value());
          CHECK(wk.has_value() == k.has_value());
          if (c && wc) {
            CHECK(static_cast<int>(*wc) == c->element);
          }
          if (k && wk) {
            CHECK(static_cast<int>(*wk) == k->element);
          }
        }
      }
    }
  }

  TEST_CASE("symbolic carriers refuse all-n decisions") {
    auto z = Semigroup::integers();
    CHECK(error_kind([&] {
            (void)decide(z, Property::convex, MultiplierSet::all(), ElementSet(0));
          })
          == ErrorKind::symbolic_unsupported);
  }

  TEST_CASE("spectra") {
    auto z  = Semigroup::integers();
    auto sp = spectrum(z, Subset::of_integers(z, {0, 2}), 4);
    CHECK(sp.convex_ns == std::vector<std::uint64_t>{1, 3});
    for (std::uint64_t n = 1; n <= 4; ++n) {
      bool listed = std::find(sp.convex_ns.begin(), sp.convex_ns.end(), n) != sp.convex_ns.end();
      CHECK(listed == oracle::z::convex_at(static_cast<std::int64_t>(n), {0, 2}));
    }

    std::mt19937_64 rng(29);
    for (auto const& s : catalog(6)) {
      auto t = table_of(s);
      for (int i = 0; i < 5; ++i) {
        auto a  = random_subset(rng, s.order());
        auto sp2 = spectrum(s, Subset::of(s, a), 10);
        std::vector<std::uint64_t> c;
        std::vector<std::uint64_t> k;
        for (std::uint64_t n = 1; n <= 10; ++n) {
          if (oracle::convex_at(t, n, to_oracle(a))) {
            c.push_back(n);
          }
          if (oracle::konvex_at(t, n, to_oracle(a))) {
            k.push_back(n);
          }
        }
        CHECK(sp2.convex_ns == c);
        CHECK(sp2.konvex_ns == k);
        CHECK(check_structure_props(s, a, 12).ok());
      }
    }
  }

  TEST_CASE("unique divisibility makes both notions agree") {
    auto c5 = cyclic(5);
    CHECK(is_uniquely_divisible(c5, 2));
    CHECK_FALSE(is_uniquely_divisible(cyclic(4), 2));
    auto rep = check_divisible_coincidence(c5, 2, labelled(c5, {"1", "2"}));
    CHECK(rep.ok());
    CHECK(rep.checks > 0);
    CHECK(check_divisible_coincidence(cyclic(4), 2, ElementSet(4)).checks == 0);
  }

  TEST_CASE("closure properties of the convex and konvex families") {
    std::uint64_t seed = 0;
    for (auto const& s : catalog(6)) {
      for (auto const& f : {MultiplierSet::all(), MultiplierSet::generated({2})}) {
        auto rep = check_closure_props(s, f, {8, seed++});
        INFO(s.name(), " ", f.to_string(), " ", rep.violations.empty() ? "" : rep.violations[0]);
        CHECK(rep.ok());
      }
    }
  }
}
