#include "konvex/subset.hpp"

#include <algorithm>  // for includes, sort, unique
#include <charconv>   // for from_chars
#include <utility>    // for move

#include "konvex/error.hpp"
#include "konvex/multiplier.hpp"

namespace konvex {

  Subset Subset::of(Semigroup const& s, ElementSet members) {
    if (!s.is_finite()) {
      throw Error(ErrorKind::symbolic_unsupported,
                  s.name() + " has no indexed elements");
    }
    if (members.universe() != s.order()) {
      throw Error(ErrorKind::carrier_mismatch,
                  "bitset over " + std::to_string(members.universe())
                      + " elements does not fit " + s.name());
    }
    return Subset(s.id(), std::move(members));
  }

  Subset Subset::of_integers(Semigroup const& s, IntSet members) {
    if (s.is_finite()) {
      throw Error(ErrorKind::carrier_mismatch,
                  s.name() + " is finite; use element indices");
    }
    for (auto v : members) {
      if (!s.contains_integer(v)) {
        throw Error(ErrorKind::not_in_carrier,
                    std::to_string(v) + " is not an element of " + s.name(),
                    {std::to_string(v)});
      }
    }
    return Subset(s.id(), std::move(members));
  }

  Subset Subset::none(Semigroup const& s) {
    if (s.is_finite()) {
      return Subset(s.id(), ElementSet(s.order()));
    }
    return Subset(s.id(), IntSet{});
  }

  ElementSet const& Subset::elements() const {
    if (auto const* p = std::get_if<ElementSet>(&members_)) {
      return *p;
    }
    throw Error(ErrorKind::symbolic_unsupported,
                "subset of a symbolic carrier has no bitset form");
  }

  IntSet const& Subset::integers() const {
    if (auto const* p = std::get_if<IntSet>(&members_)) {
      return *p;
    }
    throw Error(ErrorKind::carrier_mismatch,
                "subset of a finite carrier has no integer form");
  }

  std::size_t Subset::size() const noexcept {
    if (auto const* p = std::get_if<ElementSet>(&members_)) {
      return p->count();
    }
    return std::get<IntSet>(members_).size();
  }

  bool Subset::is_subset_of(Subset const& that) const {
    if (carrier_id_ != that.carrier_id_) {
      throw Error(ErrorKind::carrier_mismatch,
                  "subsets belong to different carriers");
    }
    if (is_finite()) {
      return elements().is_subset_of(that.elements());
    }
    auto const& a = integers();
    auto const& b = that.integers();
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  }

  std::vector<std::string> Subset::labels(Semigroup const& s) const {
    require_carrier(s, *this);
    std::vector<std::string> out;
    if (is_finite()) {
      elements().for_each([&](Element e) { out.push_back(s.label(e)); });
    } else {
      for (auto v : integers()) {
        out.push_back(std::to_string(v));
      }
    }
    return out;
  }

  void require_carrier(Semigroup const& s, Subset const& a) {
    if (a.carrier_id() != s.id()) {
      throw Error(ErrorKind::carrier_mismatch,
                  "subset does not belong to carrier " + s.name());
    }
  }

  void require_carrier(Semigroup const& s, ElementSet const& a) {
    if (!s.is_finite() || a.universe() != s.order()) {
      throw Error(ErrorKind::carrier_mismatch,
                  "subset does not belong to carrier " + s.name());
    }
  }

  void require_finite(Semigroup const& s, char const* what) {
    if (!s.is_finite()) {
      throw Error(ErrorKind::symbolic_unsupported,
                  std::string(what) + " needs a finite carrier; " + s.name()
                      + " supports fixed-n operations and bounded sweeps only");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // MultiplierSet
  ////////////////////////////////////////////////////////////////////////

  MultiplierSet MultiplierSet::all() {
    return MultiplierSet{};
  }

  MultiplierSet MultiplierSet::generated(std::vector<std::uint64_t> generators) {
    if (generators.empty()) {
      throw Error(ErrorKind::empty_generators, "multiplier list is empty");
    }
    for (auto g : generators) {
      if (g == 0) {
        throw Error(ErrorKind::bad_n, "multipliers must be at least 1");
      }
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()),
                     generators.end());
    MultiplierSet f;
    f.all_        = false;
    f.generators_ = std::move(generators);
    return f;
  }

  MultiplierSet MultiplierSet::parse(std::string_view text) {
    if (text == "ALL" || text == "all") {
      return all();
    }
    std::vector<std::uint64_t> gens;
    std::size_t                start = 0;
    while (start <= text.size()) {
      auto pos = text.find(',', start);
      auto tok = text.substr(start, pos == std::string_view::npos
                                        ? std::string_view::npos
                                        : pos - start);
      std::uint64_t v   = 0;
      auto const*   end = tok.data() + tok.size();
      auto [ptr, ec]    = std::from_chars(tok.data(), end, v);
      if (tok.empty() || ec != std::errc() || ptr != end) {
        throw Error(ErrorKind::parse,
                    "bad multiplier '" + std::string(tok)
                        + "'; expected ALL or a list like 2,3");
      }
      gens.push_back(v);
      if (pos == std::string_view::npos) {
        break;
      }
      start = pos + 1;
    }
    return generated(std::move(gens));
  }

  std::vector<std::uint64_t> MultiplierSet::members_up_to(std::uint64_t n_max) const {
    std::vector<std::uint64_t> out;
    if (all_) {
      for (std::uint64_t n = 1; n <= n_max; ++n) {
        out.push_back(n);
      }
      return out;
    }
    std::vector<bool>          seen(n_max + 1, false);
    std::vector<std::uint64_t> stack;
    for (auto g : generators_) {
      if (g <= n_max && !seen[g]) {
        seen[g] = true;
        stack.push_back(g);
      }
    }
    while (!stack.empty()) {
      auto n = stack.back();
      stack.pop_back();
      for (auto g : generators_) {
        if (g != 0 && n <= n_max / g && !seen[n * g]) {
          seen[n * g] = true;
          stack.push_back(n * g);
        }
      }
    }
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      if (seen[n]) {
        out.push_back(n);
      }
    }
    return out;
  }

  bool MultiplierSet::contains(std::uint64_t n) const {
    if (n == 0) {
      return false;
    }
    if (all_) {
      return true;
    }
    if (n == 1) {
      return generators_.front() == 1;
    }
    // n is in the closure iff it factors over generators >= 2.
    std::vector<std::uint64_t> stack{n};
    while (!stack.empty()) {
      auto m = stack.back();
      stack.pop_back();
      for (auto g : generators_) {
        if (g >= 2 && m % g == 0) {
          if (m == g) {
            return true;
          }
          stack.push_back(m / g);
        }
      }
    }
    return false;
  }

  std::string MultiplierSet::to_string() const {
    if (all_) {
      return "ALL";
    }
    std::string out;
    for (auto g : generators_) {
      out += (out.empty() ? "" : ",") + std::to_string(g);
    }
    return out;
  }

}  // namespace konvex
