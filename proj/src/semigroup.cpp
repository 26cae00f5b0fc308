#include "konvex/semigroup.hpp"

#include <atomic>   // for atomic
#include <utility>  // for move

#include "konvex/error.hpp"

namespace konvex {

  namespace {
    std::uint64_t next_id() {
      static std::atomic<std::uint64_t> counter{1};
      return counter.fetch_add(1, std::memory_order_relaxed);
    }
  }  // namespace

  char const* to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::bad_shape:
        return "BadShape";
      case ErrorKind::unknown_label:
        return "UnknownLabel";
      case ErrorKind::not_commutative:
        return "NotCommutative";
      case ErrorKind::not_associative:
        return "NotAssociative";
      case ErrorKind::bad_params:
        return "BadParams";
      case ErrorKind::bad_n:
        return "BadN";
      case ErrorKind::empty_generators:
        return "EmptyGenerators";
      case ErrorKind::carrier_mismatch:
        return "CarrierMismatch";
      case ErrorKind::not_in_carrier:
        return "NotInCarrier";
      case ErrorKind::symbolic_unsupported:
        return "SymbolicUnsupported";
      case ErrorKind::overflow:
        return "Overflow";
      case ErrorKind::cover_not_konvex:
        return "CoverNotKonvex";
      case ErrorKind::cover_misses_set:
        return "CoverMissesSet";
      case ErrorKind::not_disjoint_input:
        return "NotDisjointInput";
      case ErrorKind::inputs_not_disjoint:
        return "InputsNotDisjoint";
      case ErrorKind::not_complementary:
        return "NotComplementary";
      case ErrorKind::parse:
        return "ParseError";
      case ErrorKind::io:
        return "IOError";
      case ErrorKind::lemma_violation:
        return "LemmaViolation";
      case ErrorKind::well_definedness_violation:
        return "WellDefinednessViolation";
      case ErrorKind::partition_violation:
        return "PartitionViolation";
    }
    return "Unknown";
  }

  Semigroup Semigroup::from_labels(
      std::vector<std::string>                     labels,
      std::vector<std::vector<std::string>> const& table,
      std::string                                  name) {
    std::size_t const n = labels.size();
    if (n == 0) {
      throw Error(ErrorKind::bad_shape, "carrier has no elements");
    }
    if (table.size() != n) {
      throw Error(ErrorKind::bad_shape,
                  "table has " + std::to_string(table.size())
                      + " rows, expected " + std::to_string(n));
    }
    std::unordered_map<std::string, Element> index;
    for (std::size_t i = 0; i < n; ++i) {
      if (!index.emplace(labels[i], static_cast<Element>(i)).second) {
        throw Error(ErrorKind::bad_shape, "duplicate label " + labels[i],
                    {labels[i]});
      }
    }
    std::vector<Element> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        throw Error(ErrorKind::bad_shape,
                    "table row " + std::to_string(i) + " has "
                        + std::to_string(table[i].size())
                        + " entries, expected " + std::to_string(n));
      }
      for (auto const& entry : table[i]) {
        auto it = index.find(entry);
        if (it == index.end()) {
          throw Error(ErrorKind::unknown_label,
                      "table entry '" + entry + "' is not an element label",
                      {entry});
        }
        flat.push_back(it->second);
      }
    }
    return from_indices(std::move(labels), std::move(flat), std::move(name));
  }

  Semigroup Semigroup::from_indices(std::vector<std::string> labels,
                                    std::vector<Element>     table,
                                    std::string              name,
                                    std::optional<Element>   cap) {
    std::size_t const n = labels.size();
    if (n == 0) {
      throw Error(ErrorKind::bad_shape, "carrier has no elements");
    }
    if (table.size() != n * n) {
      throw Error(ErrorKind::bad_shape, "table is not square");
    }
    Semigroup s;
    s.kind_   = CarrierKind::finite_table;
    s.name_   = std::move(name);
    s.labels_ = std::move(labels);
    s.table_  = std::move(table);
    s.cap_    = cap;
    for (std::size_t i = 0; i < n; ++i) {
      if (!s.index_.emplace(s.labels_[i], static_cast<Element>(i)).second) {
        throw Error(ErrorKind::bad_shape, "duplicate label " + s.labels_[i],
                    {s.labels_[i]});
      }
    }
    for (auto e : s.table_) {
      if (e >= n) {
        throw Error(ErrorKind::unknown_label,
                    "table entry " + std::to_string(e) + " is out of range");
      }
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = x + 1; y < n; ++y) {
        if (s.op(x, y) != s.op(y, x)) {
          throw Error(ErrorKind::not_commutative,
                      "not commutative: " + s.label(x) + "+" + s.label(y)
                          + " = " + s.label(s.op(x, y)) + " but "
                          + s.label(y) + "+" + s.label(x) + " = "
                          + s.label(s.op(y, x)),
                      {s.label(x), s.label(y)});
        }
      }
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        Element const xy = s.op(x, y);
        for (Element z = 0; z < n; ++z) {
          if (s.op(xy, z) != s.op(x, s.op(y, z))) {
            throw Error(ErrorKind::not_associative,
                        "not associative: (" + s.label(x) + "+" + s.label(y)
                            + ")+" + s.label(z) + " != " + s.label(x) + "+("
                            + s.label(y) + "+" + s.label(z) + ")",
                        {s.label(x), s.label(y), s.label(z)});
          }
        }
      }
    }
    s.id_ = next_id();
    return s;
  }

  Semigroup Semigroup::integers() {
    Semigroup s;
    s.kind_ = CarrierKind::int_additive;
    s.name_ = "int-additive";
    s.id_   = next_id();
    return s;
  }

  Semigroup Semigroup::integers_without_one() {
    Semigroup s;
    s.kind_ = CarrierKind::int_no_one_monoid;
    s.name_ = "int-no-one-monoid";
    s.id_   = next_id();
    return s;
  }

  std::optional<Element> Semigroup::index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Element Semigroup::multiple(std::uint64_t n, Element x) const {
    if (n == 0) {
      throw Error(ErrorKind::bad_n, "multiplier must be at least 1");
    }
    // Double-and-add; agrees with n-1 repeated additions by associativity.
    Element result = x;
    Element base   = x;
    --n;
    while (n != 0) {
      if ((n & 1U) != 0) {
        result = op(result, base);
      }
      n >>= 1;
      if (n != 0) {
        base = op(base, base);
      }
    }
    return result;
  }

  std::vector<Element> Semigroup::power_map(std::uint64_t n) const {
    std::vector<Element> out(order());
    for (Element x = 0; x < order(); ++x) {
      out[x] = multiple(n, x);
    }
    return out;
  }

  bool Semigroup::contains_integer(std::int64_t v) const noexcept {
    switch (kind_) {
      case CarrierKind::int_additive:
        return true;
      case CarrierKind::int_no_one_monoid:
        return v == 0 || v >= 2;
      case CarrierKind::finite_table:
        return false;
    }
    return false;
  }

  Semigroup Semigroup::restrict(ElementSet const& closed) const {
    if (!is_finite()) {
      throw Error(ErrorKind::symbolic_unsupported,
                  "cannot restrict a symbolic carrier");
    }
    if (closed.universe() != order()) {
      throw Error(ErrorKind::carrier_mismatch,
                  "subset does not belong to " + name_);
    }
    if (closed.empty()) {
      throw Error(ErrorKind::bad_params, "cannot restrict to the empty set");
    }
    auto const                members = closed.elements();
    std::vector<Element>      position(order(), 0);
    std::vector<std::string>  labels;
    for (std::size_t i = 0; i < members.size(); ++i) {
      position[members[i]] = static_cast<Element>(i);
      labels.push_back(labels_[members[i]]);
    }
    std::vector<Element> table;
    table.reserve(members.size() * members.size());
    for (auto x : members) {
      for (auto y : members) {
        Element const z = op(x, y);
        if (!closed.contains(z)) {
          throw Error(ErrorKind::bad_params,
                      "subset is not closed: " + label(x) + "+" + label(y)
                          + " = " + label(z),
                      {label(x), label(y)});
        }
        table.push_back(position[z]);
      }
    }
    std::optional<Element> cap;
    if (cap_ && closed.contains(*cap_)) {
      cap = position[*cap_];
    }
    return from_indices(std::move(labels), std::move(table),
                        name_ + "|restricted", cap);
  }

  std::vector<std::vector<std::string>> Semigroup::label_table() const {
    std::vector<std::vector<std::string>> out(order());
    for (Element x = 0; x < order(); ++x) {
      for (Element y = 0; y < order(); ++y) {
        out[x].push_back(label(op(x, y)));
      }
    }
    return out;
  }

}  // namespace konvex
