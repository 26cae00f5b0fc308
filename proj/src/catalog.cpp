#include "konvex/catalog.hpp"

#include <algorithm>  // for min, shuffle
#include <charconv>   // for from_chars
#include <string>     // for string
#include <utility>    // for move

#include "konvex/error.hpp"

namespace konvex {

  namespace {

    void require_positive(std::size_t v, char const* what) {
      if (v < 1) {
        throw Error(ErrorKind::bad_params,
                    std::string(what) + " must be at least 1");
      }
    }

    std::vector<std::string> numeric_labels(std::size_t first,
                                            std::size_t count) {
      std::vector<std::string> out;
      out.reserve(count);
      for (std::size_t i = 0; i < count; ++i) {
        out.push_back(std::to_string(first + i));
      }
      return out;
    }

    std::size_t parse_size(std::string_view text, std::string_view spec) {
      std::size_t value = 0;
      auto const* end   = text.data() + text.size();
      auto [ptr, ec]    = std::from_chars(text.data(), end, value);
      if (ec != std::errc() || ptr != end || text.empty()) {
        throw Error(ErrorKind::bad_params,
                    "bad parameter '" + std::string(text) + "' in carrier '"
                        + std::string(spec) + "'");
      }
      return value;
    }

    std::vector<std::string_view> split(std::string_view text, char sep) {
      std::vector<std::string_view> out;
      std::size_t                   start = 0;
      while (true) {
        auto pos = text.find(sep, start);
        out.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) {
          break;
        }
        start = pos + 1;
      }
      return out;
    }

    Semigroup single_builtin(std::string_view spec) {
      auto parts = split(spec, ':');
      auto kind  = parts.front();
      auto want  = [&](std::size_t count) {
        if (parts.size() != count + 1) {
          throw Error(ErrorKind::bad_params,
                      "carrier '" + std::string(spec) + "' expects "
                          + std::to_string(count) + " parameter(s)");
        }
      };
      if (kind == "int-additive") {
        want(0);
        return Semigroup::integers();
      }
      if (kind == "int-no-one-monoid") {
        want(0);
        return Semigroup::integers_without_one();
      }
      if (kind == "cyclic") {
        want(1);
        return cyclic(parse_size(parts[1], spec));
      }
      if (kind == "capped-add") {
        want(1);
        return capped_add(parse_size(parts[1], spec));
      }
      if (kind == "chain-min") {
        want(1);
        return chain_min(parse_size(parts[1], spec));
      }
      if (kind == "powerset-union") {
        want(1);
        return powerset_union(parse_size(parts[1], spec));
      }
      if (kind == "clifford") {
        want(2);
        return clifford(parse_size(parts[1], spec),
                        parse_size(parts[2], spec));
      }
      if (kind == "monogenic") {
        want(2);
        return monogenic(parse_size(parts[1], spec),
                         parse_size(parts[2], spec));
      }
      throw Error(ErrorKind::bad_params,
                  "unknown carrier kind '" + std::string(kind) + "'");
    }

  }  // namespace

  Semigroup cyclic(std::size_t m) {
    require_positive(m, "cyclic order m");
    std::vector<Element> table(m * m);
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        table[x * m + y] = static_cast<Element>((x + y) % m);
      }
    }
    return Semigroup::from_indices(numeric_labels(0, m), std::move(table),
                                   "cyclic:" + std::to_string(m));
  }

  Semigroup capped_add(std::size_t c) {
    require_positive(c, "cap c");
    std::size_t const    n = c + 1;
    std::vector<Element> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        table[x * n + y] = static_cast<Element>(std::min(x + y, c));
      }
    }
    return Semigroup::from_indices(numeric_labels(0, n), std::move(table),
                                   "capped-add:" + std::to_string(c),
                                   static_cast<Element>(c));
  }

  Semigroup chain_min(std::size_t k) {
    require_positive(k, "chain length k");
    std::vector<Element> table(k * k);
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        table[x * k + y] = static_cast<Element>(std::min(x, y));
      }
    }
    return Semigroup::from_indices(numeric_labels(1, k), std::move(table),
                                   "chain-min:" + std::to_string(k));
  }

  Semigroup powerset_union(std::size_t k) {
    require_positive(k, "ground set size k");
    if (k > 12) {
      throw Error(ErrorKind::bad_params, "powerset-union supports k <= 12");
    }
    std::size_t const        n = std::size_t{1} << k;
    std::vector<std::string> labels;
    for (std::size_t mask = 0; mask < n; ++mask) {
      std::string label = "{";
      bool        first = true;
      for (std::size_t bit = 0; bit < k; ++bit) {
        if ((mask >> bit) & 1U) {
          label += (first ? "" : ",") + std::to_string(bit + 1);
          first = false;
        }
      }
      labels.push_back(label + "}");
    }
    std::vector<Element> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        table[x * n + y] = static_cast<Element>(x | y);
      }
    }
    return Semigroup::from_indices(std::move(labels), std::move(table),
                                   "powerset-union:" + std::to_string(k));
  }

  Semigroup monogenic(std::size_t index, std::size_t period) {
    require_positive(index, "index r");
    require_positive(period, "period p");
    std::size_t const n      = index + period - 1;
    auto              reduce = [&](std::size_t k) {
      return k < index ? k : index + (k - index) % period;
    };
    std::vector<Element> table(n * n);
    for (std::size_t x = 1; x <= n; ++x) {
      for (std::size_t y = 1; y <= n; ++y) {
        table[(x - 1) * n + (y - 1)] = static_cast<Element>(reduce(x + y) - 1);
      }
    }
    return Semigroup::from_indices(
        numeric_labels(1, n), std::move(table),
        "monogenic:" + std::to_string(index) + ":" + std::to_string(period));
  }

  Semigroup clifford(std::size_t top, std::size_t bottom) {
    require_positive(top, "top group order");
    require_positive(bottom, "bottom group order");
    std::size_t const        n = top + bottom;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < top; ++i) {
      labels.push_back("t" + std::to_string(i));
    }
    for (std::size_t i = 0; i < bottom; ++i) {
      labels.push_back("b" + std::to_string(i));
    }
    std::vector<Element> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t z = 0;
        if (x < top && y < top) {
          z = (x + y) % top;
        } else if (x < top) {
          z = y;
        } else if (y < top) {
          z = x;
        } else {
          z = top + ((x - top) + (y - top)) % bottom;
        }
        table[x * n + y] = static_cast<Element>(z);
      }
    }
    return Semigroup::from_indices(
        std::move(labels), std::move(table),
        "clifford:" + std::to_string(top) + ":" + std::to_string(bottom));
  }

  Semigroup product(Semigroup const& lhs, Semigroup const& rhs) {
    if (!lhs.is_finite() || !rhs.is_finite()) {
      throw Error(ErrorKind::symbolic_unsupported,
                  "products of symbolic carriers are not supported");
    }
    std::size_t const        n1 = lhs.order(), n2 = rhs.order(), n = n1 * n2;
    std::vector<std::string> labels;
    labels.reserve(n);
    for (Element a = 0; a < n1; ++a) {
      for (Element b = 0; b < n2; ++b) {
        labels.push_back("(" + lhs.label(a) + "," + rhs.label(b) + ")");
      }
    }
    std::vector<Element> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        auto a = lhs.op(static_cast<Element>(x / n2), static_cast<Element>(y / n2));
        auto b = rhs.op(static_cast<Element>(x % n2), static_cast<Element>(y % n2));
        table[x * n + y] = static_cast<Element>(a * n2 + b);
      }
    }
    return Semigroup::from_indices(std::move(labels), std::move(table),
                                   lhs.name() + "*" + rhs.name());
  }

  Semigroup builtin(std::string_view spec) {
    auto factors = split(spec, '*');
    if (factors.size() == 1) {
      return single_builtin(spec);
    }
    Semigroup result = single_builtin(factors.front());
    for (std::size_t i = 1; i < factors.size(); ++i) {
      result = product(result, single_builtin(factors[i]));
    }
    return result;
  }

  ElementSet subsemigroup_closure(Semigroup const& s, ElementSet const& gens) {
    if (!s.is_finite()) {
      throw Error(ErrorKind::symbolic_unsupported,
                  "closure needs a finite carrier");
    }
    if (gens.universe() != s.order()) {
      throw Error(ErrorKind::carrier_mismatch,
                  "generators do not belong to " + s.name());
    }
    if (gens.empty()) {
      throw Error(ErrorKind::empty_generators, "generator set is empty");
    }
    ElementSet           closed = gens;
    std::vector<Element> frontier = gens.elements();
    auto const           g        = gens.elements();
    // Every element of the closure is a sum of generators, so extending
    // the frontier by generators alone reaches all of it.
    while (!frontier.empty()) {
      std::vector<Element> next;
      for (auto x : frontier) {
        for (auto y : g) {
          Element z = s.op(x, y);
          if (!closed.contains(z)) {
            closed.insert(z);
            next.push_back(z);
          }
        }
      }
      frontier = std::move(next);
    }
    return closed;
  }

  ElementSet random_subset(std::mt19937_64& rng, std::size_t universe) {
    ElementSet out(universe);
    for (Element e = 0; e < universe; ++e) {
      if ((rng() & 1U) != 0) {
        out.insert(e);
      }
    }
    return out;
  }

  ElementSet random_nonempty_subset(std::mt19937_64& rng,
                                    std::size_t      universe,
                                    std::size_t      max_size) {
    std::vector<Element> pool(universe);
    for (Element e = 0; e < universe; ++e) {
      pool[e] = e;
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    std::size_t const cap  = std::max<std::size_t>(1, std::min(max_size, universe));
    std::size_t const size = 1 + static_cast<std::size_t>(rng() % cap);
    ElementSet        out(universe);
    for (std::size_t i = 0; i < size; ++i) {
      out.insert(pool[i]);
    }
    return out;
  }

  bool is_idempotent(Semigroup const& s) {
    if (!s.is_finite()) {
      return false;
    }
    for (Element x = 0; x < s.order(); ++x) {
      if (s.op(x, x) != x) {
        return false;
      }
    }
    return true;
  }

  namespace {

    std::vector<Semigroup> base_builtins(std::size_t max_order) {
      std::vector<Semigroup> out;
      for (std::size_t m = 1; m <= max_order; ++m) {
        out.push_back(cyclic(m));
      }
      for (std::size_t k = 2; k <= max_order; ++k) {
        out.push_back(chain_min(k));
      }
      for (std::size_t c = 1; c + 1 <= max_order; ++c) {
        out.push_back(capped_add(c));
      }
      for (std::size_t k = 1; (std::size_t{1} << k) <= max_order && k <= 12;
           ++k) {
        out.push_back(powerset_union(k));
      }
      for (std::size_t r = 1; r <= max_order; ++r) {
        for (std::size_t p = 1; r + p - 1 <= max_order; ++p) {
          if (r >= 2) {
            out.push_back(monogenic(r, p));
          }
        }
      }
      return out;
    }

  }  // namespace

  Semigroup sample_carrier(std::uint64_t seed, std::size_t max_order) {
    if (max_order < 1) {
      throw Error(ErrorKind::bad_params, "max_order must be at least 1");
    }
    std::mt19937_64 rng(seed);
    auto const      pool = base_builtins(max_order);
    auto            pick = [&](std::vector<Semigroup> const& from) {
      return from[rng() % from.size()];
    };
    switch (rng() % 3) {
      case 0:
        return pick(pool);
      case 1: {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < pool.size(); ++i) {
          for (std::size_t j = 0; j < pool.size(); ++j) {
            if (pool[i].order() >= 2 && pool[j].order() >= 2
                && pool[i].order() * pool[j].order() <= max_order) {
              pairs.emplace_back(i, j);
            }
          }
        }
        if (pairs.empty()) {
          return pick(pool);
        }
        auto [i, j] = pairs[rng() % pairs.size()];
        return product(pool[i], pool[j]);
      }
      default: {
        // Closure of a random subset of a product of two built-ins, retried
        // until the closure fits.
        auto const wide = base_builtins(std::min<std::size_t>(max_order, 6));
        for (int attempt = 0; attempt < 16; ++attempt) {
          auto const& a    = wide[rng() % wide.size()];
          auto const& b    = wide[rng() % wide.size()];
          Semigroup   ab   = product(a, b);
          ElementSet  gens = random_nonempty_subset(rng, ab.order(), 3);
          ElementSet  cl   = subsemigroup_closure(ab, gens);
          if (cl.count() <= max_order) {
            return ab.restrict(cl);
          }
        }
        return pick(pool);
      }
    }
  }

  std::vector<Semigroup> catalog(std::size_t order_cap) {
    std::vector<Semigroup> out;
    auto                   add = [&](Semigroup s) {
      if (s.order() <= order_cap) {
        out.push_back(std::move(s));
      }
    };
    for (std::size_t m = 1; m <= 8; ++m) {
      add(cyclic(m));
    }
    for (std::size_t k = 2; k <= 8; ++k) {
      add(chain_min(k));
    }
    for (std::size_t c = 1; c <= 7; ++c) {
      add(capped_add(c));
    }
    for (std::size_t k = 1; k <= 3; ++k) {
      add(powerset_union(k));
    }
    for (auto [r, p] : {std::pair{2, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3},
                        {2, 5}, {4, 3}, {5, 3}}) {
      add(monogenic(static_cast<std::size_t>(r), static_cast<std::size_t>(p)));
    }
    for (auto const* spec :
         {"cyclic:2*cyclic:2", "cyclic:2*cyclic:3", "cyclic:2*cyclic:4",
          "cyclic:2*chain-min:2", "chain-min:2*capped-add:2",
          "capped-add:1*cyclic:3", "cyclic:2*monogenic:2:2",
          "chain-min:2*chain-min:3", "capped-add:1*capped-add:2",
          "cyclic:2*cyclic:2*cyclic:2"}) {
      if (order_cap >= 4) {
        add(builtin(spec));
      }
    }
    add(clifford(2, 3));
    add(clifford(3, 5));
    if (order_cap >= 6) {
      // {0,2,3,...,7} and {2,...,7} inside capped-add(7): saturated
      // analogues of the integers without one.
      Semigroup c7 = capped_add(7);
      add(c7.restrict(subsemigroup_closure(c7, ElementSet(8, {0, 2, 3}))));
      add(c7.restrict(subsemigroup_closure(c7, ElementSet(8, {2, 3}))));
    }
    return out;
  }

}  // namespace konvex
