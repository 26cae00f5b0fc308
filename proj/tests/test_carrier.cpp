#include <doctest.h>

#include <random>  // for mt19937_64

#include "konvex/catalog.hpp"
#include "konvex/error.hpp"
#include "support.hpp"

using namespace konvex;
using konvex::test::at;
using konvex::test::error_kind;
using konvex::test::labelled;
using konvex::test::table_of;

namespace {

  bool same_table(Semigroup const& s, oracle::Table const& t) {
    return static_cast<int>(s.order()) == t.order && table_of(s).op == t.op;
  }

  bool is_commutative_and_associative(oracle::Table const& t) {
    for (int x = 0; x < t.order; ++x) {
      for (int y = 0; y < t.order; ++y) {
        if (t.add(x, y) != t.add(y, x)) {
          return false;
        }
        for (int z = 0; z < t.order; ++z) {
          if (t.add(t.add(x, y), z) != t.add(x, t.add(y, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

}  // namespace

TEST_SUITE("carrier") {
  TEST_CASE("cyclic groups add modulo m") {
    auto s = cyclic(4);
    CHECK(s.order() == 4);
    CHECK(s.label(s.op(at(s, "2"), at(s, "3"))) == "1");
    for (int m = 1; m <= 8; ++m) {
      CHECK(same_table(cyclic(static_cast<std::size_t>(m)), oracle::cyclic(m)));
    }
  }

  TEST_CASE("capped addition saturates at the cap") {
    auto s = capped_add(3);
    CHECK(s.label(s.op(at(s, "2"), at(s, "2"))) == "3");
    CHECK(s.cap() == at(s, "3"));
    for (int c = 1; c <= 6; ++c) {
      CHECK(same_table(capped_add(static_cast<std::size_t>(c)), oracle::capped_add(c)));
    }
  }

  TEST_CASE("chains under min and powersets under union") {
    for (int k = 1; k <= 5; ++k) {
      CHECK(same_table(chain_min(static_cast<std::size_t>(k)), oracle::chain_min(k)));
      CHECK(same_table(powerset_union(static_cast<std::size_t>(k)), oracle::powerset_union(k)));
    }
    auto p = powerset_union(2);
    CHECK(p.order() == 4);
    CHECK(p.label(p.op(at(p, "{1}"), at(p, "{2}"))) == "{1,2}");
    CHECK(chain_min(3).labels() == std::vector<std::string>{"1", "2", "3"});
  }

  TEST_CASE("zero-sized parameters are rejected") {
    CHECK(error_kind([] { (void)cyclic(0); }) == ErrorKind::bad_params);
    CHECK(error_kind([] { (void)capped_add(0); }) == ErrorKind::bad_params);
    CHECK(error_kind([] { (void)chain_min(0); }) == ErrorKind::bad_params);
    CHECK(error_kind([] { (void)powerset_union(0); }) == ErrorKind::bad_params);
  }

  TEST_CASE("monogenic and clifford carriers are valid semigroups") {
    for (std::size_t r = 1; r <= 4; ++r) {
      for (std::size_t p = 1; p <= 4; ++p) {
        auto s = monogenic(r, p);
        CHECK(s.order() == r + p - 1);
        CHECK(is_commutative_and_associative(table_of(s)));
        // The generator is the element labelled 1; (r+p)·a = r·a.
        Element a = at(s, "1");
        CHECK(s.multiple(r + p, a) == s.multiple(r, a));
      }
    }
    auto c = clifford(2, 3);
    CHECK(c.order() == 5);
    CHECK(is_commutative_and_associative(table_of(c)));
  }

  TEST_CASE("built-in specs and products") {
    auto s = builtin("cyclic:2*chain-min:3");
    CHECK(s.order() == 6);
    CHECK(is_commutative_and_associative(table_of(s)));
    CHECK(builtin("capped-add:3") == capped_add(3));
    CHECK_FALSE(builtin("int-additive").is_finite());
    CHECK(builtin("int-no-one-monoid").kind() == CarrierKind::int_no_one_monoid);
    CHECK(error_kind([] { (void)builtin("nonsense:3"); }).has_value());
    CHECK(error_kind([] { (void)builtin("cyclic:x"); }).has_value());
  }

  TEST_CASE("tables are validated when built") {
    std::vector<std::string> labels{"a", "b"};
    // a+b = a but b+a = b.
    CHECK(error_kind([&] {
            (void)Semigroup::from_labels(labels, {{"a", "a"}, {"b", "b"}});
          })
          == ErrorKind::not_commutative);
    // Winner of rock-paper-scissors: commutative, (r+p)+s = s but r+(p+s) = r.
    std::vector<std::string> rps{"r", "p", "s"};
    CHECK(error_kind([&] {
            (void)Semigroup::from_labels(rps, {{"r", "p", "r"}, {"p", "p", "s"}, {"r", "s", "s"}});
          })
          == ErrorKind::not_associative);
    CHECK(error_kind([&] {
            (void)Semigroup::from_labels(labels, {{"a", "zz"}, {"zz", "a"}});
          })
          == ErrorKind::unknown_label);
    CHECK(error_kind([&] { (void)Semigroup::from_labels(labels, {{"a", "b"}}); })
          == ErrorKind::bad_shape);
    auto ok = Semigroup::from_labels(labels, {{"a", "b"}, {"b", "a"}});
    CHECK(ok.order() == 2);
    CHECK(ok.label(ok.op(1, 1)) == "a");
  }

  TEST_CASE("multiples agree with repeated addition") {
    for (auto const& s : catalog(6)) {
      auto t = table_of(s);
      for (std::uint64_t n = 1; n <= 40; ++n) {
        for (Element x = 0; x < s.order(); ++x) {
          REQUIRE(static_cast<int>(s.multiple(n, x)) == oracle::times(t, n, static_cast<int>(x)));
        }
      }
    }
  }

  TEST_CASE("subsemigroup closure") {
    auto c6 = cyclic(6);
    CHECK(subsemigroup_closure(c6, labelled(c6, {"2"})) == labelled(c6, {"0", "2", "4"}));
    auto c5 = cyclic(5);
    CHECK(subsemigroup_closure(c5, labelled(c5, {"1"})) == c5.all());
    auto p = powerset_union(2);
    CHECK(subsemigroup_closure(p, labelled(p, {"{1}", "{2}"}))
          == labelled(p, {"{1}", "{2}", "{1,2}"}));
    CHECK(error_kind([&] { (void)subsemigroup_closure(c6, ElementSet(6)); })
          == ErrorKind::empty_generators);

    std::mt19937_64 rng(7);
    for (auto const& s : catalog(8)) {
      auto t = table_of(s);
      for (int i = 0; i < 10; ++i) {
        auto gens = random_nonempty_subset(rng, s.order(), 3);
        CHECK(test::to_oracle(subsemigroup_closure(s, gens))
              == oracle::closure(t, test::to_oracle(gens)));
      }
    }
  }

  TEST_CASE("restriction keeps labels and the operation") {
    auto c6  = cyclic(6);
    auto sub = c6.restrict(labelled(c6, {"0", "2", "4"}));
    CHECK(sub.labels() == std::vector<std::string>{"0", "2", "4"});
    CHECK(sub.label(sub.op(at(sub, "4"), at(sub, "4"))) == "2");
  }

  TEST_CASE("sampled carriers are deterministic and valid") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      auto s = sample_carrier(seed, 8);
      CHECK(s == sample_carrier(seed, 8));
      CHECK(s.order() >= 1);
      CHECK(s.order() <= 8);
      CHECK(is_commutative_and_associative(table_of(s)));
    }
  }

  TEST_CASE("the catalog respects its order cap") {
    auto all = catalog(8);
    CHECK(all.size() >= 20);
    for (auto const& s : all) {
      CHECK(s.order() <= 8);
      CHECK(is_commutative_and_associative(table_of(s)));
    }
    for (auto const& s : catalog(1)) {
      CHECK(s.order() == 1);
    }
  }
}
