#include "konvex/separation.hpp"

#include <algorithm>  // for max

#include "konvex/brute.hpp"
#include "konvex/error.hpp"
#include "konvex/hull.hpp"
#include "konvex/iteration.hpp"
#include "konvex/setalg.hpp"

namespace konvex {

  char const* to_string(Side side) noexcept {
    return side == Side::a ? "A" : "B";
  }

  DisjointnessEvidence are_F_disjoint(Semigroup const&     s,
                                      MultiplierSet const& f,
                                      ElementSet const&    a,
                                      ElementSet const&    b) {
    require_finite(s, "an all-n disjointness decision");
    require_carrier(s, a);
    require_carrier(s, b);
    DisjointnessEvidence ev;
    auto run = explore(f, StateSpace::sums_only(s, {a, b}),
                       [&](Multiplier const& n, IterationState const& st) {
                         ElementSet meet = st.sums[0] & st.sums[1];
                         if (meet.empty()) {
                           return true;
                         }
                         ev.disjoint          = false;
                         ev.collision_n       = n;
                         ev.collision_element = meet.elements().front();
                         return false;
                       });
    if (run.complete) {
      ev.tail_length  = run.period.tail;
      ev.cycle_length = run.period.cycle;
      ev.states       = run.states;
    }
    return ev;
  }

  ListedDisjointness disjoint_for(Semigroup const&               s,
                                  std::span<std::uint64_t const> ns,
                                  Subset const&                  a,
                                  Subset const&                  b) {
    ListedDisjointness out;
    for (auto n : ns) {
      Subset meet = intersect(s, sumset_power(s, n, a), sumset_power(s, n, b));
      if (!meet.empty()) {
        out.disjoint    = false;
        out.collision_n = n;
        out.collision   = std::move(meet);
        return out;
      }
    }
    return out;
  }

  namespace {

    bool all_n_disjoint(Semigroup const& s, ElementSet const& a, ElementSet const& b) {
      return are_F_disjoint(s, MultiplierSet::all(), a, b).disjoint;
    }

    // Assumes (a, b) is N-disjoint.
    Side extend_unchecked(Semigroup const& s, ElementSet const& a, ElementSet const& b,
                          Element x) {
      if (a.contains(x)) {
        return Side::a;
      }
      if (b.contains(x)) {
        return Side::b;
      }
      ElementSet grown = a;
      grown.insert(x);
      if (all_n_disjoint(s, grown, b)) {
        return Side::a;
      }
      grown = b;
      grown.insert(x);
      if (all_n_disjoint(s, a, grown)) {
        return Side::b;
      }
      throw Error(ErrorKind::lemma_violation,
                  "neither side of an N-disjoint pair accepts " + s.label(x) + " in "
                      + s.name() + ": A=" + show(s, a) + " B=" + show(s, b),
                  {s.label(x)});
    }

    Error collision_error(Semigroup const& s, ErrorKind kind, DisjointnessEvidence const& ev) {
      std::string const label = s.label(*ev.collision_element);
      return Error(kind,
                   "[n]A and [n]B share " + label + " at n=" + ev.collision_n.str(),
                   {ev.collision_n.str(), label});
    }

  }  // namespace

  Side extend_step(Semigroup const& s, ElementSet const& a, ElementSet const& b, Element x) {
    if (x >= s.order()) {
      throw Error(ErrorKind::not_in_carrier, "element outside " + s.name());
    }
    auto ev = are_F_disjoint(s, MultiplierSet::all(), a, b);
    if (!ev.disjoint) {
      throw collision_error(s, ErrorKind::not_disjoint_input, ev);
    }
    return extend_unchecked(s, a, b, x);
  }

  SeparationCertificate stone_separate(Semigroup const&  s,
                                       ElementSet const& a0,
                                       ElementSet const& b0) {
    auto ev = are_F_disjoint(s, MultiplierSet::all(), a0, b0);
    if (!ev.disjoint) {
      throw collision_error(s, ErrorKind::inputs_not_disjoint, ev);
    }
    SeparationCertificate cert;
    cert.a = a0;
    cert.b = b0;
    ElementSet rest = (a0 | b0).complement();
    rest.for_each([&](Element x) {
      Side side = extend_unchecked(s, cert.a, cert.b, x);
      (side == Side::a ? cert.a : cert.b).insert(x);
      cert.insertion_log.push_back({x, side});
    });
    cert.evidence = are_F_disjoint(s, MultiplierSet::all(), cert.a, cert.b);
    cert.convex_a = decide_convex_all_n(s, cert.a);
    cert.convex_b = decide_convex_all_n(s, cert.b);
    if (decide_konvex_all_n(s, s.all()).holds()) {
      cert.konvex_a = decide_konvex_all_n(s, cert.a);
      cert.konvex_b = decide_konvex_all_n(s, cert.b);
    }
    return cert;
  }

  PropertyReport verify_certificate(Semigroup const&             s,
                                    ElementSet const&            a0,
                                    ElementSet const&            b0,
                                    SeparationCertificate const& cert) {
    PropertyReport r;
    std::string const in = " in " + s.name();
    r.expect(cert.a.universe() == s.order() && cert.b.universe() == s.order(),
             "certificate sets sized for another carrier" + in);
    if (!r.ok()) {
      return r;
    }
    r.expect(!cert.a.intersects(cert.b), "parts overlap" + in);
    r.expect((cert.a | cert.b) == s.all(), "parts do not cover S" + in);
    r.expect(a0.is_subset_of(cert.a), "A does not contain A0" + in);
    r.expect(b0.is_subset_of(cert.b), "B does not contain B0" + in);

    // Replay the log from the inputs.
    ElementSet a = a0;
    ElementSet b = b0;
    for (auto const& step : cert.insertion_log) {
      r.expect(!a.contains(step.element) && !b.contains(step.element),
               "log inserts " + s.label(step.element) + " twice" + in);
      (step.side == Side::a ? a : b).insert(step.element);
    }
    r.expect(a == cert.a && b == cert.b, "insertion log does not replay" + in);

    auto bound = [](std::uint64_t tail, std::uint64_t cycle) { return tail + 2 * cycle; };
    std::uint64_t n_max = std::max<std::uint64_t>(2 * s.order(), 50);
    n_max = std::max(n_max, bound(cert.evidence.tail_length, cert.evidence.cycle_length));
    n_max = std::max(n_max, bound(cert.convex_a.tail_length, cert.convex_a.cycle_length));
    n_max = std::max(n_max, bound(cert.convex_b.tail_length, cert.convex_b.cycle_length));

    r.expect(cert.evidence.disjoint, "evidence records a collision" + in);
    r.expect(cert.evidence.cycle_length > 0, "evidence has no cycle" + in);
    r.expect(!brute::first_collision(s, cert.a, cert.b, n_max),
             "[n]A and [n]B meet for some n <= " + std::to_string(n_max) + in);
    r.expect(cert.convex_a.holds() && cert.convex_b.holds(),
             "certificate records a non-convex part" + in);
    r.expect(!brute::first_convex_failure(s, cert.a, n_max), "A not convex" + in);
    r.expect(!brute::first_convex_failure(s, cert.b, n_max), "B not convex" + in);

    Decision const whole = decide_konvex_all_n(s, s.all());
    std::uint64_t  s_max = std::max(n_max, bound(whole.tail_length, whole.cycle_length));
    bool const     s_konvex = !brute::first_konvex_failure(s, s.all(), s_max);
    r.expect(cert.konvex_a.has_value() == s_konvex,
             std::string("konvexity of the parts ") + (s_konvex ? "missing" : "claimed")
                 + " though S is" + (s_konvex ? "" : " not") + " konvex" + in);
    if (cert.konvex_a && cert.konvex_b) {
      n_max = std::max(n_max, bound(cert.konvex_a->tail_length, cert.konvex_a->cycle_length));
      n_max = std::max(n_max, bound(cert.konvex_b->tail_length, cert.konvex_b->cycle_length));
      r.expect(cert.konvex_a->holds() && cert.konvex_b->holds(),
               "certificate records a non-konvex part" + in);
      r.expect(!brute::first_konvex_failure(s, cert.a, n_max), "A not konvex" + in);
      r.expect(!brute::first_konvex_failure(s, cert.b, n_max), "B not konvex" + in);
    }
    return r;
  }

  PropertyReport check_disjoint_hulls(Semigroup const&                 s,
                                      MultiplierSet const&             f,
                                      ElementSet const&                a,
                                      ElementSet const&                b,
                                      std::optional<ElementSet> const& konvex_cover) {
    if (konvex_cover) {
      require_carrier(s, *konvex_cover);
      if (!a.is_subset_of(*konvex_cover)) {
        throw Error(ErrorKind::cover_misses_set, "cover does not contain A");
      }
      if (!decide(s, Property::konvex, f, *konvex_cover).holds()) {
        throw Error(ErrorKind::cover_not_konvex,
                    "cover " + show(s, *konvex_cover) + " is not " + f.to_string() + "-konvex");
      }
    }
    PropertyReport   r;
    bool const       disjoint = are_F_disjoint(s, f, a, b).disjoint;
    ElementSet const ha       = hull_formula(s, f, a).hull;
    ElementSet const hb       = hull_formula(s, f, b).hull;
    std::string const what =
        show(s, a) + "," + show(s, b) + " in " + s.name() + " for F=" + f.to_string();
    if (disjoint) {
      r.expect(!ha.intersects(hb), "F-disjoint but hulls meet: " + what);
    }
    if (konvex_cover && !ha.intersects(hb)) {
      r.expect(disjoint, "hulls disjoint with konvex cover but not F-disjoint: " + what);
    }
    return r;
  }

  PropertyReport complementary_check(Semigroup const&     s,
                                     ElementSet const&    a,
                                     ElementSet const&    b,
                                     MultiplierSet const& f) {
    require_finite(s, "a partition check");
    require_carrier(s, a);
    require_carrier(s, b);
    if (a.intersects(b) || (a | b) != s.all()) {
      throw Error(ErrorKind::not_complementary,
                  show(s, a) + " and " + show(s, b) + " do not partition " + s.name());
    }
    PropertyReport r;
    if (!are_F_disjoint(s, f, a, b).disjoint) {
      return r;
    }
    std::string const what = show(s, a) + "|" + show(s, b) + " in " + s.name();
    r.expect(decide(s, Property::convex, f, a).holds(), "disjoint part A not convex: " + what);
    r.expect(decide(s, Property::convex, f, b).holds(), "disjoint part B not convex: " + what);
    if (decide(s, Property::konvex, f, s.all()).holds()) {
      r.expect(decide(s, Property::konvex, f, a).holds(), "A not konvex though S is: " + what);
      r.expect(decide(s, Property::konvex, f, b).holds(), "B not konvex though S is: " + what);
    }
    return r;
  }

}  // namespace konvex
