#include <doctest.h>

#include <cstdio>   // for remove
#include <fstream>  // for ofstream

#include "konvex/catalog.hpp"
#include "konvex/io.hpp"
#include "support.hpp"

using namespace konvex;
using konvex::test::error_kind;
using konvex::test::labelled;

namespace {

  std::string write_temp(std::string const& name, std::string const& text) {
    std::string path = std::string("konvex_test_") + name;
    std::ofstream(path) << text;
    return path;
  }

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("list splitting respects brackets") {
    CHECK(split_list("a, {1,2} ,b") == std::vector<std::string>{"a", "{1,2}", "b"});
    CHECK(split_list("(0,1),(1,2)") == std::vector<std::string>{"(0,1)", "(1,2)"});
    CHECK(split_list("  ").empty());
    CHECK(error_kind([] { (void)split_list("{1,2"); }) == ErrorKind::parse);
  }

  TEST_CASE("subsets from text") {
    auto c6 = cyclic(6);
    CHECK(parse_subset(c6, "1, 4").elements() == labelled(c6, {"1", "4"}));
    CHECK(parse_subset(c6, "").empty());
    CHECK(error_kind([&] { (void)parse_subset(c6, "7"); }) == ErrorKind::unknown_label);
    auto z = Semigroup::integers();
    CHECK(parse_subset(z, "1,-3").integers() == IntSet{-3, 1});
    CHECK(error_kind([&] { (void)parse_subset(z, "x"); }) == ErrorKind::parse);
    auto p = powerset_union(2);
    CHECK(parse_subset(p, "{},{1,2}").elements() == labelled(p, {"{}", "{1,2}"}));
  }

  TEST_CASE("Cayley tables from files") {
    auto path = write_temp("z3.json",
                           R"({"elements":["0","1","2"],"table":[["0","1","2"],["1","2","0"],["2","0","1"]]})");
    auto s = load_cayley(path);
    CHECK(s.order() == 3);
    CHECK(s.label_table() == cyclic(3).label_table());
    std::remove(path.c_str());

    auto nums = write_temp("nums.json", R"({"elements":[0,1],"table":[[0,1],[1,1]]})");
    CHECK(load_cayley(nums).label(1) == "1");
    std::remove(nums.c_str());

    auto bad = write_temp("bad.json", "{not json");
    CHECK(error_kind([&] { (void)load_cayley(bad); }) == ErrorKind::parse);
    std::remove(bad.c_str());

    auto shape = write_temp("shape.json", R"({"elements":["a"]})");
    CHECK(error_kind([&] { (void)load_cayley(shape); }) == ErrorKind::bad_shape);
    std::remove(shape.c_str());

    CHECK(error_kind([] { (void)load_cayley("/nonexistent/konvex.json"); }) == ErrorKind::io);
  }

  TEST_CASE("tables round-trip through JSON") {
    for (auto const& s : catalog(6)) {
      auto back = cayley_from_json(cayley_to_json(s), s.name());
      CHECK(back.labels() == s.labels());
      CHECK(back.label_table() == s.label_table());
    }
  }
}
