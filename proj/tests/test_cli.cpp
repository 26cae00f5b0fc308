#include <doctest.h>

#include <cstdio>   // for remove
#include <fstream>  // for ifstream
#include <sstream>  // for ostringstream

#include <json.hpp>

#include "cli.hpp"

namespace {

  struct Outcome {
    int            code = 0;
    nlohmann::json report;
    std::string    err;
  };

  Outcome run_json(std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    std::ostringstream out;
    std::ostringstream err;
    Outcome            o;
    o.code = konvex::cli::run(args, out, err);
    o.err  = err.str();
    if (!out.str().empty() && out.str().front() == '{') {
      o.report = nlohmann::json::parse(out.str());
    }
    return o;
  }

  using Labels = std::vector<std::string>;

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("set operations") {
    auto p = run_json({"op", "power", "--carrier", "int-additive", "--n", "3", "--a", "0,1"});
    CHECK(p.code == 0);
    CHECK(p.report["outcome"]["result"] == nlohmann::json({0, 1, 2, 3}));

    auto s = run_json({"op", "scale", "--carrier", "cyclic:5", "--n", "1", "--a", "3,4"});
    CHECK(s.report["outcome"]["result"] == nlohmann::json(Labels{"3", "4"}));

    auto q = run_json({"op", "preimage", "--carrier", "cyclic:4", "--n", "2", "--a", "0"});
    CHECK(q.report["outcome"]["result"] == nlohmann::json(Labels{"0", "2"}));

    auto c = run_json({"op", "power", "--carrier", "capped-add:3", "--n", "2", "--a", "2"});
    CHECK(c.report["outcome"]["saturated"] == true);
  }

  TEST_CASE("report layout") {
    auto r = run_json({"op", "sumset", "--carrier", "cyclic:6", "--a", "1,2", "--b", "3"});
    Labels keys;
    for (auto const& [k, v] : r.report.items()) {
      keys.push_back(k);
    }
    std::sort(keys.begin(), keys.end());
    CHECK(keys == Labels{"checks", "command", "exit_code", "inputs", "outcome"});
    CHECK(r.report["exit_code"] == 0);
  }

  TEST_CASE("text output carries the same report") {
    std::ostringstream out;
    std::ostringstream err;
    int code = konvex::cli::run({"hull", "--carrier", "cyclic:4", "--a", "0"}, out, err);
    CHECK(code == 0);
    CHECK(out.str().find("hull: {0,1,2,3}") != std::string::npos);
    CHECK(out.str().find("exit_code: 0") != std::string::npos);
  }

  TEST_CASE("convexity checks") {
    auto n = run_json({"check", "--carrier", "cyclic:4", "--a", "0", "--all-n"});
    CHECK(n.code == 0);
    CHECK(n.report["outcome"]["verdict"] == "fails");
    CHECK(n.report["outcome"]["witness_n"] == "2");
    CHECK(n.report["outcome"]["witness_element"] == "2");

    auto b = run_json({"check", "--carrier", "int-additive", "--a", "0,2", "--n-max", "4"});
    CHECK(b.report["outcome"]["holding_ns"] == nlohmann::json({1, 3}));
    CHECK(b.report["outcome"]["evidence"] == "bounded evidence only");

    auto k = run_json({"check", "--carrier", "int-additive", "--a", "0,1", "--n", "2", "--mode",
                       "konvex"});
    CHECK(k.report["outcome"]["verdict"] == "fails");

    CHECK(run_json({"check", "--carrier", "int-additive", "--a", "0", "--all-n"}).code == 2);
    CHECK(run_json({"check", "--carrier", "cyclic:4", "--a", "0"}).code == 2);
  }

  TEST_CASE("hulls") {
    auto h = run_json({"hull", "--carrier", "cyclic:4", "--a", "0", "--multipliers", "ALL"});
    CHECK(h.code == 0);
    CHECK(h.report["outcome"]["hull"] == nlohmann::json(Labels{"0", "1", "2", "3"}));
    CHECK(h.report["outcome"]["agree"] == true);

    auto same = run_json({"hull", "--carrier", "chain-min:4", "--a", "2,3"});
    CHECK(same.report["outcome"]["hull"] == nlohmann::json(Labels{"2", "3"}));

    auto g = run_json({"hull", "--carrier", "cyclic:8", "--a", "1", "--multipliers", "2"});
    CHECK(g.report["outcome"]["sandwich_holds"] == true);

    CHECK(run_json({"hull", "--carrier", "cyclic:4", "--a", "0", "--inject-fault"}).code == 3);
    CHECK(run_json({"hull", "--carrier", "int-additive", "--a", "0"}).code == 2);

    auto r = run_json({"hull", "--carrier", "int-additive", "--a", "0,2", "--multipliers", "2",
                       "--method", "fixpoint"});
    CHECK(r.code == 0);
    CHECK(r.report["outcome"]["hull"] == nlohmann::json({0, 1, 2}));
  }

  TEST_CASE("separation") {
    std::string path = "konvex_test_certificate.json";
    auto ok = run_json({"separate", "--carrier", "capped-add:3", "--a", "0", "--b", "3", "--out",
                        path});
    CHECK(ok.code == 0);
    CHECK(ok.report["outcome"]["verified"] == true);
    nlohmann::json cert;
    std::ifstream(path) >> cert;
    std::remove(path.c_str());
    for (auto key : {"A", "B", "insertion_log", "evidence", "convex"}) {
      CHECK(cert.contains(key));
    }

    auto bad = run_json({"separate", "--carrier", "cyclic:5", "--a", "1", "--b", "2"});
    CHECK(bad.code == 2);
    CHECK(bad.report["outcome"]["error"]["kind"] == "InputsNotDisjoint");
    auto w = bad.report["outcome"]["error"]["witness"].get<Labels>();
    CHECK(std::find(w.begin(), w.end(), "5") != w.end());

    CHECK(run_json({"separate", "--carrier", "cyclic:5"}).code == 0);
  }

  TEST_CASE("quotients") {
    auto q = run_json({"quotient", "--carrier", "cyclic:6"});
    CHECK(q.code == 0);
    CHECK(q.report["outcome"]["classes"].size() == 1);
    CHECK(q.report["outcome"]["cancellation"] == true);
  }

  TEST_CASE("table validation") {
    std::string path = "konvex_test_table.json";
    std::ofstream(path) << R"({"elements":["e","a"],"table":[["e","a"],["a","e"]]})";
    auto v = run_json({"validate", path});
    std::remove(path.c_str());
    CHECK(v.code == 0);
    CHECK(v.report["outcome"]["order"] == 2);
    CHECK(run_json({"validate", "/nonexistent/table.json"}).code == 2);
  }

  TEST_CASE("usage errors") {
    std::ostringstream out;
    std::ostringstream err;
    CHECK(konvex::cli::run({}, out, err) == 2);
    CHECK(konvex::cli::run({"bogus"}, out, err) == 2);
    CHECK(konvex::cli::run({"--help"}, out, err) == 0);
    CHECK(run_json({"op", "scale", "--carrier", "cyclic:0", "--a", ""}).code == 2);
    CHECK(run_json({"op", "scale", "--carrier", "cyclic:4", "--a", "9"}).code == 2);
    CHECK(run_json({"op", "scale", "--carrier", "cyclic:4", "--a", "1", "--n", "0"}).code == 2);
  }

  TEST_CASE("verify") {
    auto small = run_json({"verify", "--order-cap", "1", "--criterion", "2"});
    CHECK(small.code == 0);
    CHECK(small.report["outcome"]["passed"] == true);
    auto broken = run_json({"verify", "--criterion", "3", "--inject-fault"});
    CHECK(broken.code == 3);
    CHECK(broken.report["outcome"]["passed"] == false);
  }
}
