#include "cli.hpp"

#include <cstdlib>   // for getenv
#include <fstream>   // for ofstream
#include <optional>  // for optional
#include <ostream>   // for ostream
#include <string>    // for string

#include <CLI11.hpp>
#include <json.hpp>

#include "konvex/catalog.hpp"
#include "konvex/convexity.hpp"
#include "konvex/error.hpp"
#include "konvex/hull.hpp"
#include "konvex/io.hpp"
#include "konvex/separation.hpp"
#include "konvex/setalg.hpp"
#include "konvex/suite.hpp"

namespace konvex::cli {

  namespace {

    using Json = nlohmann::ordered_json;

    // ---- rendering --------------------------------------------------------
    // Text output is the JSON report laid out as indented "key: value" lines,
    // so both forms carry the same content.

    bool is_inline(Json const& v) {
      if (!v.is_array()) {
        return !v.is_object() || v.empty();
      }
      for (auto const& e : v) {
        if (e.is_structured()
            || (e.is_string() && e.get<std::string>().find(' ') != std::string::npos)) {
          return false;
        }
      }
      return true;
    }

    std::string inline_text(Json const& v) {
      if (v.is_string()) {
        return v.get<std::string>();
      }
      if (v.is_null()) {
        return "-";
      }
      if (v.is_array()) {
        std::string out = "{";
        for (std::size_t i = 0; i < v.size(); ++i) {
          out += (i == 0 ? "" : ",") + inline_text(v[i]);
        }
        return out + "}";
      }
      if (v.is_object()) {
        return "{}";
      }
      return v.dump();
    }

    void render_block(Json const& v, std::size_t indent, std::ostream& out);

    void render_object(Json const& obj, std::size_t indent, bool dash, std::ostream& out) {
      bool first = true;
      for (auto const& [key, value] : obj.items()) {
        std::string pad = first && dash ? std::string(indent - 2, ' ') + "- "
                                        : std::string(indent, ' ');
        first = false;
        if (is_inline(value)) {
          out << pad << key << ": " << inline_text(value) << '\n';
        } else {
          out << pad << key << ":\n";
          render_block(value, indent + 2, out);
        }
      }
    }

    void render_block(Json const& v, std::size_t indent, std::ostream& out) {
      if (v.is_object()) {
        render_object(v, indent, false, out);
        return;
      }
      std::string const pad(indent, ' ');
      for (auto const& e : v) {
        if (e.is_object() && !e.empty()) {
          render_object(e, indent + 2, true, out);
        } else if (is_inline(e)) {
          out << pad << "- " << inline_text(e) << '\n';
        } else {
          out << pad << "-\n";
          render_block(e, indent + 2, out);
        }
      }
    }

    // ---- shared inputs ----------------------------------------------------

    struct CarrierArgs {
      std::string spec;
      std::string table;
    };

    void add_carrier_options(CLI::App* sub, CarrierArgs& c) {
      sub->add_option("--carrier", c.spec,
                      "built-in carrier, e.g. cyclic:4, capped-add:3, chain-min:3, "
                      "powerset-union:2, monogenic:2:3, clifford:2:3, int-additive, "
                      "int-no-one-monoid, or a product such as cyclic:2*chain-min:3");
      sub->add_option("--table", c.table, "Cayley table JSON file");
    }

    Semigroup load_carrier(CarrierArgs const& c) {
      if (!c.table.empty() && !c.spec.empty()) {
        throw Error(ErrorKind::bad_params, "give either --carrier or --table, not both");
      }
      if (!c.table.empty()) {
        return load_cayley(c.table);
      }
      if (c.spec.empty()) {
        throw Error(ErrorKind::bad_params, "a carrier is required (--carrier or --table)");
      }
      return builtin(c.spec);
    }

    template <typename Set>
    Json set_json(Semigroup const& s, Set const& a) {
      return Json(subset_to_json(s, a));
    }

    void write_file(std::string const& path, nlohmann::json const& doc) {
      std::ofstream file(path);
      if (!file) {
        throw Error(ErrorKind::io, "cannot write " + path, {path});
      }
      file << doc.dump(2) << '\n';
    }

    // Everything a subcommand produces.
    struct Run {
      Json inputs  = Json::object();
      Json outcome = Json::object();
      Json checks  = Json::array();
      int  code    = exit_ok;
    };

    std::string verdict_text(bool holds) {
      return holds ? "holds" : "fails";
    }

    // Least element of `lhs` outside `rhs` on any carrier, as text.
    std::optional<std::string> least_outside(Semigroup const& s, Subset const& lhs,
                                             Subset const& rhs) {
      if (lhs.is_finite()) {
        Element x = lhs.elements().first_not_in(rhs.elements());
        if (x < s.order()) {
          return s.label(x);
        }
        return std::nullopt;
      }
      for (auto v : lhs.integers()) {
        if (rhs.integers().count(v) == 0) {
          return std::to_string(v);
        }
      }
      return std::nullopt;
    }

    // ---- subcommands ------------------------------------------------------

    void cmd_validate(Run& r, std::string const& path) {
      r.inputs["file"] = path;
      Semigroup s      = load_cayley(path);
      r.outcome["valid"]    = true;
      r.outcome["order"]    = s.order();
      r.outcome["elements"] = s.labels();
      r.checks = {"table is square over the element labels", "operation is commutative",
                  "operation is associative"};
    }

    struct OpArgs {
      std::string   kind;
      std::uint64_t n = 1;
      std::string   a;
      std::string   b;
    };

    void cmd_op(Run& r, CarrierArgs const& c, OpArgs const& o) {
      Semigroup s = load_carrier(c);
      r.inputs["carrier"] = s.name();
      r.inputs["op"]      = o.kind;
      SetOp op            = SetOp::scale;
      if (o.kind == "preimage") {
        op = SetOp::preimage;
      } else if (o.kind == "sumset") {
        op = SetOp::sumset;
      } else if (o.kind == "power") {
        op = SetOp::power;
      }
      if (op != SetOp::sumset) {
        r.inputs["n"] = o.n;
      }
      Subset a = parse_subset(s, o.a);
      Subset b = parse_subset(s, o.b);
      r.inputs["A"] = set_json(s, a);
      if (op == SetOp::sumset) {
        r.inputs["B"] = set_json(s, b);
      }
      OpReport rep      = apply(s, op, o.n, a, b);
      r.outcome["result"] = set_json(s, rep.result);
      if (s.cap()) {
        r.outcome["saturated"] = rep.saturated;
      }
      switch (op) {
        case SetOp::scale: r.checks = {"nA = {n·x : x in A}"}; break;
        case SetOp::preimage: r.checks = {"n^-1 A = {x : n·x in A}"}; break;
        case SetOp::sumset: r.checks = {"A + B = {a + b : a in A, b in B}"}; break;
        case SetOp::power: r.checks = {"[n]A = A + ... + A (n terms)"}; break;
      }
    }

    struct CheckArgs {
      std::string                  a;
      std::string                  mode = "convex";
      std::optional<std::uint64_t> n;
      bool                         all_n = false;
      std::optional<std::uint64_t> n_max;
      std::string                  multipliers = "ALL";
    };

    void cmd_check(Run& r, CarrierArgs const& c, CheckArgs const& o) {
      Semigroup s = load_carrier(c);
      Property  p = o.mode == "konvex" ? Property::konvex : Property::convex;
      Subset    a = parse_subset(s, o.a);
      r.inputs["carrier"] = s.name();
      r.inputs["A"]       = set_json(s, a);
      r.inputs["mode"]    = o.mode;
      int modes = (o.n ? 1 : 0) + (o.all_n ? 1 : 0) + (o.n_max ? 1 : 0);
      if (modes != 1) {
        throw Error(ErrorKind::bad_params, "give exactly one of --n, --all-n, --n-max");
      }
      r.checks.push_back(p == Property::convex ? "n^-1([n]A) ⊆ A" : "[n]A ⊆ nA");

      if (o.n) {
        r.inputs["n"] = *o.n;
        bool holds    = p == Property::convex ? is_n_convex(s, *o.n, a) : is_n_konvex(s, *o.n, a);
        r.outcome["verdict"] = verdict_text(holds);
        if (!holds) {
          Subset sum = sumset_power(s, *o.n, a);
          auto   w   = p == Property::convex ? least_outside(s, preimage(s, *o.n, sum), a)
                                             : least_outside(s, sum, scale(s, *o.n, a));
          r.outcome["witness_element"] = *w;
        }
        return;
      }

      MultiplierSet const f = MultiplierSet::parse(o.multipliers);
      r.inputs["multipliers"] = f.to_string();
      if (o.all_n) {
        require_finite(s, "--all-n");
        Decision d = decide(s, p, f, a.elements());
        r.outcome["verdict"] = d.holds() ? "holds-for-all-n" : "fails";
        if (!d.holds()) {
          r.outcome["witness_n"]       = d.witness_n.str();
          r.outcome["witness_element"] = s.label(*d.witness_element);
        } else {
          r.outcome["tail"]   = d.tail_length;
          r.outcome["cycle"]  = d.cycle_length;
          r.outcome["states"] = d.states;
        }
        r.checks.push_back("every n in F, by exhausting the reachable states (n·x, [n]A)");
        return;
      }

      r.inputs["n_max"] = *o.n_max;
      Json holding      = Json::array();
      Json failing      = Json::array();
      for (auto n : f.members_up_to(*o.n_max)) {
        bool holds = p == Property::convex ? is_n_convex(s, n, a) : is_n_konvex(s, n, a);
        (holds ? holding : failing).push_back(n);
      }
      r.outcome["verdict"]     = verdict_text(failing.empty());
      r.outcome["holding_ns"]  = holding;
      r.outcome["failing_ns"]  = failing;
      r.outcome["evidence"]    = "bounded evidence only";
      r.checks.push_back("each n in F up to n_max");
    }

    struct HullArgs {
      std::string a;
      std::string multipliers = "ALL";
      std::string method      = "both";
      bool        inject_fault = false;
    };

    void cmd_hull(Run& r, CarrierArgs const& c, HullArgs const& o) {
      Semigroup           s = load_carrier(c);
      MultiplierSet const f = MultiplierSet::parse(o.multipliers);
      Subset              a = parse_subset(s, o.a);
      r.inputs["carrier"]     = s.name();
      r.inputs["A"]           = set_json(s, a);
      r.inputs["multipliers"] = f.to_string();
      r.inputs["method"]      = o.method;

      if (!s.is_finite()) {
        if (f.is_all() || o.method != "fixpoint") {
          throw Error(ErrorKind::symbolic_unsupported,
                      s.name() + " supports only --method fixpoint over a generator list");
        }
        RawHull h = hull_raw(s, f.generators(), a);
        r.outcome["relative_to"] = "the listed generators";
        r.outcome["hull"]        = set_json(s, h.hull);
        r.outcome["rounds"]      = h.rounds;
        r.checks = {"least superset with g^-1([g]H) ⊆ H for each listed g"};
        return;
      }

      ElementSet const& base = a.elements();
      r.outcome["relative_to"] = f.is_all() ? "N" : "multiplicative closure of F";
      std::optional<HullResult> fp;
      std::optional<HullResult> fo;
      if (o.method != "formula") {
        fp = hull_fixedpoint(s, f, base);
      }
      if (o.method != "fixpoint") {
        fo = hull_formula(s, f, base);
        if (o.inject_fault) {
          Element const e = 0;
          if (fo->hull.contains(e)) {
            fo->hull.erase(e);
          } else {
            fo->hull.insert(e);
          }
        }
      }
      r.outcome["hull"] = set_json(s, fo ? fo->hull : fp->hull);
      if (fp) {
        r.outcome["rounds"] = fp->rounds;
        r.checks.push_back("least fixed point of H -> H u U n^-1([n]H)");
      }
      if (fo) {
        Json ns = Json::array();
        for (auto const& n : fo->contributing_ns) {
          ns.push_back(n.str());
        }
        r.outcome["contributing_ns"] = ns;
        r.checks.push_back("union of n^-1([n]A) over n in F");
      }
      if (fp && fo) {
        bool agree = fp->hull == fo->hull;
        r.outcome["agree"] = agree;
        if (!agree) {
          r.outcome["fixpoint_hull"] = set_json(s, fp->hull);
          r.code = exit_violation;
        }
      }
      if (!f.generators_closed()) {
        Sandwich w = hull_sandwich(s, f, base);
        r.outcome["raw_union"]      = set_json(s, w.raw_union);
        r.outcome["raw_hull"]       = set_json(s, w.raw_hull);
        r.outcome["sandwich_holds"] = w.holds(base);
        r.checks.push_back("A ⊆ union over F ⊆ hull for F ⊆ union over the closure of F");
        if (!w.holds(base)) {
          r.code = exit_violation;
        }
      }
    }

    struct SeparateArgs {
      std::string a;
      std::string b;
      std::string out;
    };

    void cmd_separate(Run& r, CarrierArgs const& c, SeparateArgs const& o) {
      Semigroup s = load_carrier(c);
      require_finite(s, "separation");
      Subset a0 = parse_subset(s, o.a);
      Subset b0 = parse_subset(s, o.b);
      r.inputs["carrier"] = s.name();
      r.inputs["A0"]      = set_json(s, a0);
      r.inputs["B0"]      = set_json(s, b0);
      r.checks = {"[n]A0 ∩ [n]B0 empty for every n", "greedy insertion in ascending order, A side first",
                  "certificate re-verified by naive sweeps"};
      auto cert = stone_separate(s, a0.elements(), b0.elements());
      auto rep  = verify_certificate(s, a0.elements(), b0.elements(), cert);

      auto doc = certificate_to_json(s, cert);
      r.outcome["A"] = set_json(s, cert.a);
      r.outcome["B"] = set_json(s, cert.b);
      Json log       = Json::array();
      for (auto const& step : cert.insertion_log) {
        log.push_back(s.label(step.element) + "->" + to_string(step.side));
      }
      r.outcome["insertion_log"] = log;
      r.outcome["evidence"]      = {{"tail", cert.evidence.tail_length},
                                    {"cycle", cert.evidence.cycle_length}};
      r.outcome["convex"] = {{"A", cert.convex_a.holds()}, {"B", cert.convex_b.holds()}};
      if (cert.konvex_a && cert.konvex_b) {
        r.outcome["konvex"] = {{"A", cert.konvex_a->holds()}, {"B", cert.konvex_b->holds()}};
      }
      r.outcome["verified"] = rep.ok();
      if (!rep.ok()) {
        r.outcome["verification_failures"] = rep.violations;
        r.code = exit_violation;
      }
      if (!o.out.empty()) {
        write_file(o.out, doc);
        r.outcome["written"] = o.out;
      }
    }

    struct QuotientArgs {
      std::string multipliers = "ALL";
      std::string out;
    };

    void cmd_quotient(Run& r, CarrierArgs const& c, QuotientArgs const& o) {
      Semigroup           s = load_carrier(c);
      MultiplierSet const f = MultiplierSet::parse(o.multipliers);
      r.inputs["carrier"]     = s.name();
      r.inputs["multipliers"] = f.to_string();
      QuotientMap q = quotient(s, f);
      Json classes  = Json::array();
      for (auto const& cl : q.classes) {
        classes.push_back(set_json(s, cl));
      }
      r.outcome["classes"] = classes;
      r.outcome["quotient"] = {{"elements", q.quotient.labels()},
                               {"table", q.quotient.label_table()}};
      r.outcome["cancellation"] = q.cancellation.ok();
      if (!q.cancellation.ok()) {
        r.outcome["cancellation_failures"] = q.cancellation.violations;
        r.code = exit_violation;
      }
      r.checks = {"x ~ y iff n·x = n·y for some n in F", "class addition independent of representatives",
                  "n·x~ = n·y~ implies x~ = y~"};
      if (!o.out.empty()) {
        write_file(o.out, quotient_to_json(s, q));
        r.outcome["written"] = o.out;
      }
    }

    struct VerifyArgs {
      std::size_t                  order_cap = 8;
      std::optional<std::uint64_t> seed;
      int                          criterion = 0;
      bool                         inject_fault = false;
    };

    void cmd_verify(Run& r, VerifyArgs const& o) {
      SuiteOptions opts;
      opts.order_cap    = o.order_cap;
      opts.inject_fault = o.inject_fault;
      if (o.seed) {
        opts.seed = *o.seed;
      } else if (char const* env = std::getenv("KONVEX_SEED")) {
        try {
          std::size_t used = 0;
          opts.seed        = std::stoull(env, &used);
          if (env[used] != '\0') {
            throw std::invalid_argument(env);
          }
        } catch (std::exception const&) {
          throw Error(ErrorKind::parse, std::string("KONVEX_SEED is not an integer: ") + env);
        }
      }
      if (opts.order_cap < 1) {
        throw Error(ErrorKind::bad_params, "--order-cap must be at least 1");
      }
      r.inputs["order_cap"] = opts.order_cap;
      r.inputs["seed"]      = opts.seed;

      std::vector<CriterionResult> results;
      if (o.criterion != 0) {
        r.inputs["criterion"] = o.criterion;
        results.push_back(run_criterion(o.criterion, opts));
      } else {
        results = run_suite(opts).criteria;
      }
      Json rows   = Json::array();
      bool passed = true;
      for (auto const& c : results) {
        Json row{{"id", c.id},
                 {"name", c.name},
                 {"result", c.passed ? "pass" : "FAIL"},
                 {"checks_run", c.checks_run},
                 {"seconds", std::round(c.seconds * 100) / 100}};
        if (c.time_limit) {
          row["time_limit"] = *c.time_limit;
        }
        if (c.failure_count != 0) {
          row["failure_count"] = c.failure_count;
          row["failures"]      = c.failures;
        }
        if (!c.notes.empty()) {
          row["notes"] = c.notes;
        }
        rows.push_back(row);
        r.checks.push_back(std::to_string(c.id) + ". " + c.checks);
        passed = passed && c.passed;
      }
      r.outcome["criteria"] = rows;
      r.outcome["passed"]   = passed;
      r.code                = passed ? exit_ok : exit_violation;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Convexity and konvexity of subsets of abelian semigroups", "konvex"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "emit the report as JSON");

    CarrierArgs carrier;

    std::string path;
    auto*       validate = app.add_subcommand("validate", "load and validate a Cayley table");
    validate->add_option("file", path, "Cayley table JSON")->required();

    OpArgs op_args;
    auto*  op = app.add_subcommand("op", "apply nA, n^-1 A, A+B or [n]A");
    add_carrier_options(op, carrier);
    op->add_option("kind", op_args.kind, "scale | preimage | sumset | power")
        ->required()
        ->check(CLI::IsMember({"scale", "preimage", "sumset", "power"}));
    op->add_option("--n", op_args.n, "multiplier n >= 1");
    op->add_option("--a", op_args.a, "comma-separated elements of A");
    op->add_option("--b", op_args.b, "comma-separated elements of B (sumset)");

    CheckArgs check_args;
    auto*     check = app.add_subcommand("check", "decide n-convexity or n-konvexity");
    add_carrier_options(check, carrier);
    check->add_option("--a", check_args.a, "comma-separated elements of A");
    check->add_option("--mode", check_args.mode, "convex | konvex")
        ->check(CLI::IsMember({"convex", "konvex"}));
    check->add_option("--n", check_args.n, "a single n");
    check->add_flag("--all-n", check_args.all_n, "every n in --multipliers (finite carriers)");
    check->add_option("--n-max", check_args.n_max, "every n in --multipliers up to this bound");
    check->add_option("--multipliers", check_args.multipliers, "ALL or generators such as 2,3");

    HullArgs hull_args;
    auto*    hull = app.add_subcommand("hull", "F-convex hull of A");
    add_carrier_options(hull, carrier);
    hull->add_option("--a", hull_args.a, "comma-separated elements of A");
    hull->add_option("--multipliers", hull_args.multipliers, "ALL or generators such as 2,3");
    hull->add_option("--method", hull_args.method, "fixpoint | formula | both")
        ->check(CLI::IsMember({"fixpoint", "formula", "both"}));
    hull->add_flag("--inject-fault", hull_args.inject_fault)->group("");

    SeparateArgs sep_args;
    auto* separate = app.add_subcommand("separate", "extend N-disjoint A0, B0 to a convex partition");
    add_carrier_options(separate, carrier);
    separate->add_option("--a", sep_args.a, "comma-separated elements of A0");
    separate->add_option("--b", sep_args.b, "comma-separated elements of B0");
    separate->add_option("--out", sep_args.out, "write the certificate JSON here");

    QuotientArgs quo_args;
    auto*        quo = app.add_subcommand("quotient", "quotient by n·x = n·y for some n in F");
    add_carrier_options(quo, carrier);
    quo->add_option("--multipliers", quo_args.multipliers, "ALL or generators such as 2,3");
    quo->add_option("--out", quo_args.out, "write classes and quotient table JSON here");

    VerifyArgs ver_args;
    auto*      verify = app.add_subcommand("verify", "run the full property suite");
    verify->add_option("--order-cap", ver_args.order_cap, "largest carrier order swept");
    verify->add_option("--seed", ver_args.seed, "sampling seed (default: KONVEX_SEED or 0)");
    verify->add_option("--criterion", ver_args.criterion, "run only this criterion (1-10)")
        ->check(CLI::Range(0, criterion_count));
    verify->add_flag("--inject-fault", ver_args.inject_fault)->group("");

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_usage;
    }

    std::string command = app.get_subcommands().front()->get_name();
    Run         r;
    try {
      if (command == "validate") {
        cmd_validate(r, path);
      } else if (command == "op") {
        cmd_op(r, carrier, op_args);
      } else if (command == "check") {
        cmd_check(r, carrier, check_args);
      } else if (command == "hull") {
        cmd_hull(r, carrier, hull_args);
      } else if (command == "separate") {
        cmd_separate(r, carrier, sep_args);
      } else if (command == "quotient") {
        cmd_quotient(r, carrier, quo_args);
      } else {
        cmd_verify(r, ver_args);
      }
    } catch (Error const& e) {
      r.code = e.is_violation() ? exit_violation : exit_usage;
      r.outcome["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
      if (!e.witness().empty()) {
        r.outcome["error"]["witness"] = e.witness();
      }
      if (!json) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
      }
    }

    Json report{{"command", command},
                {"inputs", r.inputs},
                {"outcome", r.outcome},
                {"checks", r.checks},
                {"exit_code", r.code}};
    if (json) {
      out << report.dump(2) << '\n';
    } else {
      render_block(report, 0, out);
    }
    return r.code;
  }

}  // namespace konvex::cli
