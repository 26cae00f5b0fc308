#include "konvex/iteration.hpp"

#include "konvex/error.hpp"
#include "konvex/setalg.hpp"
#include "konvex/subset.hpp"

namespace konvex {

  StateSpace::StateSpace(Semigroup const&        s,
                         std::vector<Element>    tracked,
                         std::vector<ElementSet> sets)
      : s_(&s), tracked_(std::move(tracked)), sets_(std::move(sets)) {
    require_finite(s, "iterating over all multipliers");
    for (auto e : tracked_) {
      if (e >= s.order()) {
        throw Error(ErrorKind::carrier_mismatch,
                    "tracked element outside " + s.name());
      }
    }
    for (auto const& a : sets_) {
      require_carrier(s, a);
    }
  }

  StateSpace StateSpace::with_power_map(Semigroup const&        s,
                                        std::vector<ElementSet> sets) {
    require_finite(s, "iterating over all multipliers");
    std::vector<Element> all(s.order());
    for (Element x = 0; x < s.order(); ++x) {
      all[x] = x;
    }
    return StateSpace(s, std::move(all), std::move(sets));
  }

  StateSpace StateSpace::sums_only(Semigroup const&        s,
                                   std::vector<ElementSet> sets) {
    return StateSpace(s, {}, std::move(sets));
  }

  IterationState StateSpace::initial() const {
    return IterationState{tracked_, sets_};
  }

  IterationState StateSpace::next(IterationState const& st) const {
    IterationState out;
    out.images.reserve(tracked_.size());
    for (std::size_t i = 0; i < tracked_.size(); ++i) {
      out.images.push_back(s_->op(st.images[i], tracked_[i]));
    }
    out.sums.reserve(sets_.size());
    for (std::size_t j = 0; j < sets_.size(); ++j) {
      out.sums.push_back(sumset(*s_, st.sums[j], sets_[j]));
    }
    return out;
  }

  IterationState StateSpace::times(IterationState const& st,
                                   std::uint64_t         g) const {
    IterationState out;
    out.images.reserve(st.images.size());
    for (auto x : st.images) {
      out.images.push_back(s_->multiple(g, x));
    }
    out.sums.reserve(st.sums.size());
    for (auto const& a : st.sums) {
      out.sums.push_back(sumset_power(*s_, g, a));
    }
    return out;
  }

}  // namespace konvex
