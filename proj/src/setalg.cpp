#include "konvex/setalg.hpp"

#include <unordered_map>  // for unordered_map
#include <utility>        // for move

#include "konvex/error.hpp"

namespace konvex {

  void require_n(std::uint64_t n) {
    if (n < 1) {
      throw Error(ErrorKind::bad_n, "n must be at least 1 (got 0)");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite kernels
  ////////////////////////////////////////////////////////////////////////

  ElementSet image_under(std::vector<Element> const& map, ElementSet const& a) {
    ElementSet out(a.universe());
    a.for_each([&](Element x) { out.insert(map[x]); });
    return out;
  }

  ElementSet preimage_under(std::vector<Element> const& map,
                            ElementSet const&           a) {
    ElementSet out(a.universe());
    for (Element x = 0; x < map.size(); ++x) {
      if (a.contains(map[x])) {
        out.insert(x);
      }
    }
    return out;
  }

  ElementSet scale(Semigroup const& s, std::uint64_t n, ElementSet const& a) {
    require_n(n);
    require_carrier(s, a);
    ElementSet out(a.universe());
    a.for_each([&](Element x) { out.insert(s.multiple(n, x)); });
    return out;
  }

  ElementSet preimage(Semigroup const& s, std::uint64_t n, ElementSet const& a) {
    require_n(n);
    require_carrier(s, a);
    return preimage_under(s.power_map(n), a);
  }

  ElementSet sumset(Semigroup const& s, ElementSet const& a, ElementSet const& b) {
    require_carrier(s, a);
    require_carrier(s, b);
    ElementSet out(a.universe());
    auto const bs = b.elements();
    a.for_each([&](Element x) {
      for (auto y : bs) {
        out.insert(s.op(x, y));
      }
    });
    return out;
  }

  ElementSet sumset_power(Semigroup const& s, std::uint64_t n, ElementSet const& a) {
    require_n(n);
    require_carrier(s, a);
    // [k+1]A = [k]A + A; the sequence is eventually periodic, so large n
    // is reduced once a repeated set is seen.
    std::vector<ElementSet>                             history{a};
    std::unordered_map<ElementSet, std::uint64_t, ElementSetHash> seen{{a, 1}};
    for (std::uint64_t k = 1; k < n; ++k) {
      ElementSet next = sumset(s, history.back(), a);
      auto [it, fresh] = seen.emplace(next, k + 1);
      if (!fresh) {
        std::uint64_t const first  = it->second;
        std::uint64_t const period = k + 1 - first;
        return history[first - 1 + (n - first) % period];
      }
      history.push_back(std::move(next));
    }
    return history.back();
  }

  std::vector<ElementSet> sumset_powers(Semigroup const&  s,
                                        std::uint64_t     n_max,
                                        ElementSet const& a) {
    require_n(n_max);
    require_carrier(s, a);
    std::vector<ElementSet> out{a};
    for (std::uint64_t k = 1; k < n_max; ++k) {
      out.push_back(sumset(s, out.back(), a));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Symbolic integer kernels
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::int64_t checked_add(std::int64_t x, std::int64_t y) {
      std::int64_t r = 0;
      if (__builtin_add_overflow(x, y, &r)) {
        throw Error(ErrorKind::overflow, "integer sum overflows 64 bits");
      }
      return r;
    }

    std::int64_t checked_mul(std::uint64_t n, std::int64_t x) {
      std::int64_t r = 0;
      if (n > static_cast<std::uint64_t>(INT64_MAX)
          || __builtin_mul_overflow(static_cast<std::int64_t>(n), x, &r)) {
        throw Error(ErrorKind::overflow, "integer product overflows 64 bits");
      }
      return r;
    }

    IntSet int_sumset(IntSet const& a, IntSet const& b) {
      IntSet out;
      for (auto x : a) {
        for (auto y : b) {
          out.insert(checked_add(x, y));
        }
      }
      return out;
    }

    // The only operations on symbolic carriers act on finite explicit
    // subsets, and both carriers are closed under these formulas.
    IntSet int_scale(std::uint64_t n, IntSet const& a) {
      IntSet out;
      for (auto x : a) {
        out.insert(checked_mul(n, x));
      }
      return out;
    }

    IntSet int_preimage(Semigroup const& s, std::uint64_t n, IntSet const& a) {
      IntSet out;
      if (n > static_cast<std::uint64_t>(INT64_MAX)) {
        if (a.count(0) != 0) {
          out.insert(0);
        }
        return out;
      }
      auto const d = static_cast<std::int64_t>(n);
      for (auto m : a) {
        if (m % d == 0 && s.contains_integer(m / d)) {
          out.insert(m / d);
        }
      }
      return out;
    }

    IntSet int_power(std::uint64_t n, IntSet const& a) {
      IntSet out = a;
      for (std::uint64_t k = 1; k < n; ++k) {
        out = int_sumset(out, a);
      }
      return out;
    }

    void require_pair(Semigroup const& s, Subset const& a, Subset const& b) {
      require_carrier(s, a);
      require_carrier(s, b);
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Subset forms
  ////////////////////////////////////////////////////////////////////////

  Subset scale(Semigroup const& s, std::uint64_t n, Subset const& a) {
    require_n(n);
    require_carrier(s, a);
    if (s.is_finite()) {
      return Subset::of(s, scale(s, n, a.elements()));
    }
    return Subset::of_integers(s, int_scale(n, a.integers()));
  }

  Subset preimage(Semigroup const& s, std::uint64_t n, Subset const& a) {
    require_n(n);
    require_carrier(s, a);
    if (s.is_finite()) {
      return Subset::of(s, preimage(s, n, a.elements()));
    }
    return Subset::of_integers(s, int_preimage(s, n, a.integers()));
  }

  Subset sumset(Semigroup const& s, Subset const& a, Subset const& b) {
    require_pair(s, a, b);
    if (s.is_finite()) {
      return Subset::of(s, sumset(s, a.elements(), b.elements()));
    }
    return Subset::of_integers(s, int_sumset(a.integers(), b.integers()));
  }

  Subset sumset_power(Semigroup const& s, std::uint64_t n, Subset const& a) {
    require_n(n);
    require_carrier(s, a);
    if (s.is_finite()) {
      return Subset::of(s, sumset_power(s, n, a.elements()));
    }
    return Subset::of_integers(s, int_power(n, a.integers()));
  }

  Subset unite(Semigroup const& s, Subset const& a, Subset const& b) {
    require_pair(s, a, b);
    if (s.is_finite()) {
      return Subset::of(s, a.elements() | b.elements());
    }
    IntSet out = a.integers();
    out.insert(b.integers().begin(), b.integers().end());
    return Subset::of_integers(s, std::move(out));
  }

  Subset intersect(Semigroup const& s, Subset const& a, Subset const& b) {
    require_pair(s, a, b);
    if (s.is_finite()) {
      return Subset::of(s, a.elements() & b.elements());
    }
    IntSet out;
    for (auto v : a.integers()) {
      if (b.integers().count(v) != 0) {
        out.insert(v);
      }
    }
    return Subset::of_integers(s, std::move(out));
  }

  OpReport apply(Semigroup const& s,
                 SetOp            op,
                 std::uint64_t    n,
                 Subset const&    a,
                 Subset const&    b) {
    OpReport report{Subset::none(s), false};
    switch (op) {
      case SetOp::scale:
        report.result = scale(s, n, a);
        break;
      case SetOp::preimage:
        report.result = preimage(s, n, a);
        break;
      case SetOp::sumset:
        report.result = sumset(s, a, b);
        break;
      case SetOp::power:
        report.result = sumset_power(s, n, a);
        break;
    }
    if (auto cap = s.cap()) {
      switch (op) {
        case SetOp::scale:
        case SetOp::power:
          report.saturated = n >= 2 && report.result.elements().contains(*cap);
          break;
        case SetOp::sumset:
          report.saturated = report.result.elements().contains(*cap);
          break;
        case SetOp::preimage:
          report.saturated = n >= 2 && a.elements().contains(*cap);
          break;
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Identity checks
  ////////////////////////////////////////////////////////////////////////

  char const* to_string(RelationStatus status) noexcept {
    switch (status) {
      case RelationStatus::equal:
        return "equal";
      case RelationStatus::proper_inclusion:
        return "proper-inclusion";
      case RelationStatus::violation:
        return "VIOLATION";
    }
    return "?";
  }

  std::size_t IdentityReport::violations() const noexcept {
    std::size_t n = 0;
    for (auto const& r : relations) {
      n += r.status == RelationStatus::violation ? 1 : 0;
    }
    return n;
  }

  std::size_t IdentityReport::proper_inclusions() const noexcept {
    std::size_t n = 0;
    for (auto const& r : relations) {
      n += r.status == RelationStatus::proper_inclusion ? 1 : 0;
    }
    return n;
  }

  namespace {

    class RelationRecorder {
     public:
      RelationRecorder(IdentityReport& report, std::string family)
          : report_(report), family_(std::move(family)) {}

      void equality(std::string relation, Subset const& lhs, Subset const& rhs) {
        push(std::move(relation), true,
             lhs == rhs ? RelationStatus::equal : RelationStatus::violation);
      }

      // Records lhs ⊆ rhs.
      void inclusion(std::string relation, Subset const& lhs, Subset const& rhs) {
        RelationStatus status = RelationStatus::violation;
        if (lhs == rhs) {
          status = RelationStatus::equal;
        } else if (lhs.is_subset_of(rhs)) {
          status = RelationStatus::proper_inclusion;
        }
        push(std::move(relation), false, status);
      }

     private:
      void push(std::string relation, bool eq, RelationStatus status) {
        report_.relations.push_back({family_, std::move(relation), eq, status});
      }

      IdentityReport& report_;
      std::string     family_;
    };

    void monotonicity(Semigroup const& s,
                      RelationRecorder& rec,
                      std::uint64_t     n,
                      Subset const&     small,
                      Subset const&     big,
                      std::string const& sm,
                      std::string const& bg) {
      rec.inclusion("n" + sm + " ⊆ n" + bg, scale(s, n, small), scale(s, n, big));
      rec.inclusion("n⁻¹" + sm + " ⊆ n⁻¹" + bg, preimage(s, n, small),
                    preimage(s, n, big));
      rec.inclusion("[n]" + sm + " ⊆ [n]" + bg, sumset_power(s, n, small),
                    sumset_power(s, n, big));
    }

    void family_laws(Semigroup const&           s,
                     RelationRecorder&          rec,
                     std::uint64_t              n,
                     std::vector<Subset> const& family) {
      Subset meet = family.front();
      Subset join = family.front();
      for (auto const& x : family) {
        meet = intersect(s, meet, x);
        join = unite(s, join, x);
      }
      auto meet_of = [&](auto&& f) {
        Subset out = f(family.front());
        for (auto const& x : family) {
          out = intersect(s, out, f(x));
        }
        return out;
      };
      auto join_of = [&](auto&& f) {
        Subset out = f(family.front());
        for (auto const& x : family) {
          out = unite(s, out, f(x));
        }
        return out;
      };
      auto sc = [&](Subset const& x) { return scale(s, n, x); };
      auto pr = [&](Subset const& x) { return preimage(s, n, x); };
      auto pw = [&](Subset const& x) { return sumset_power(s, n, x); };
      rec.inclusion("n(⋂A) ⊆ ⋂nA", sc(meet), meet_of(sc));
      rec.inclusion("⋃nA ⊆ n(⋃A)", join_of(sc), sc(join));
      rec.inclusion("n⁻¹(⋂A) ⊆ ⋂n⁻¹A", pr(meet), meet_of(pr));
      rec.inclusion("⋃n⁻¹A ⊆ n⁻¹(⋃A)", join_of(pr), pr(join));
      rec.inclusion("[n](⋂A) ⊆ ⋂[n]A", pw(meet), meet_of(pw));
      rec.inclusion("⋃[n]A ⊆ [n](⋃A)", join_of(pw), pw(join));
    }

  }  // namespace

  IdentityReport check_family_laws(Semigroup const&           s,
                                   std::vector<Subset> const& family,
                                   std::uint64_t              n) {
    require_n(n);
    if (family.empty()) {
      throw Error(ErrorKind::bad_params, "family must be nonempty");
    }
    IdentityReport   report;
    RelationRecorder rec(report, "family");
    family_laws(s, rec, n, family);
    return report;
  }

  IdentityReport check_set_identities(Semigroup const& s,
                                      Subset const&    a,
                                      Subset const&    b,
                                      std::uint64_t    k,
                                      std::uint64_t    n) {
    require_n(k);
    require_n(n);
    require_pair(s, a, b);
    IdentityReport report;

    RelationRecorder id(report, "identity");
    auto sc = [&](std::uint64_t m, Subset const& x) { return scale(s, m, x); };
    auto pr = [&](std::uint64_t m, Subset const& x) { return preimage(s, m, x); };
    auto pw = [&](std::uint64_t m, Subset const& x) {
      return sumset_power(s, m, x);
    };
    auto add = [&](Subset const& x, Subset const& y) { return sumset(s, x, y); };

    id.inclusion("(k+n)A ⊆ kA+nA", sc(k + n, a), add(sc(k, a), sc(n, a)));
    id.equality("(kn)A = k(nA)", sc(k * n, a), sc(k, sc(n, a)));
    id.equality("n(A+B) = nA+nB", sc(n, add(a, b)), add(sc(n, a), sc(n, b)));
    id.equality("[k+n]A = [k]A+[n]A", pw(k + n, a), add(pw(k, a), pw(n, a)));
    id.equality("[kn]A = [k]([n]A)", pw(k * n, a), pw(k, pw(n, a)));
    id.equality("[n](A+B) = [n]A+[n]B", pw(n, add(a, b)), add(pw(n, a), pw(n, b)));
    id.inclusion("(kn)(k⁻¹A+n⁻¹A) ⊆ kA+nA", sc(k * n, add(pr(k, a), pr(n, a))),
                 add(sc(k, a), sc(n, a)));
    id.equality("(kn)⁻¹A = k⁻¹(n⁻¹A)", pr(k * n, a), pr(k, pr(n, a)));
    id.inclusion("n⁻¹A+n⁻¹B ⊆ n⁻¹(A+B)", add(pr(n, a), pr(n, b)), pr(n, add(a, b)));
    id.inclusion("[k](n⁻¹A) ⊆ n⁻¹([k]A)", pw(k, pr(n, a)), pr(n, pw(k, a)));
    id.equality("[k](nA) = n([k]A)", pw(k, sc(n, a)), sc(n, pw(k, a)));
    id.inclusion("k(n⁻¹A) ⊆ n⁻¹(kA)", sc(k, pr(n, a)), pr(n, sc(k, a)));

    RelationRecorder mono(report, "monotonicity");
    Subset const     meet = intersect(s, a, b);
    Subset const     join = unite(s, a, b);
    monotonicity(s, mono, n, meet, a, "(A∩B)", "A");
    monotonicity(s, mono, n, a, join, "A", "(A∪B)");

    RelationRecorder fam(report, "family");
    family_laws(s, fam, n, {a, b});
    return report;
  }

}  // namespace konvex
