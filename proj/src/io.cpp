#include "konvex/io.hpp"

#include <cctype>        // for isspace
#include <charconv>      // for from_chars
#include <fstream>       // for ifstream

#include "konvex/error.hpp"

namespace konvex {

  using nlohmann::json;

  Semigroup cayley_from_json(json const& doc, std::string name) {
    if (!doc.is_object() || !doc.contains("elements") || !doc.contains("table")) {
      throw Error(ErrorKind::bad_shape, "expected an object with \"elements\" and \"table\"");
    }
    json const& elements = doc["elements"];
    json const& table    = doc["table"];
    if (!elements.is_array() || !table.is_array()) {
      throw Error(ErrorKind::bad_shape, "\"elements\" and \"table\" must be arrays");
    }
    // Labels may be given as numbers; they are compared as text.
    auto text = [](json const& v) -> std::string {
      if (v.is_string()) {
        return v.get<std::string>();
      }
      if (v.is_number_integer()) {
        return v.dump();
      }
      throw Error(ErrorKind::bad_shape, "label " + v.dump() + " is neither string nor integer");
    };
    std::vector<std::string> labels;
    for (auto const& e : elements) {
      labels.push_back(text(e));
    }
    std::vector<std::vector<std::string>> rows;
    for (auto const& row : table) {
      if (!row.is_array()) {
        throw Error(ErrorKind::bad_shape, "table row " + row.dump() + " is not an array");
      }
      auto& out = rows.emplace_back();
      for (auto const& v : row) {
        out.push_back(text(v));
      }
    }
    return Semigroup::from_labels(std::move(labels), rows, std::move(name));
  }

  Semigroup load_cayley(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorKind::io, "cannot read " + path, {path});
    }
    json doc;
    try {
      in >> doc;
    } catch (json::parse_error const& e) {
      throw Error(ErrorKind::parse, path + ": " + e.what(), {path});
    }
    return cayley_from_json(doc, path);
  }

  json cayley_to_json(Semigroup const& s) {
    require_finite(s, "a Cayley table");
    return json{{"elements", s.labels()}, {"table", s.label_table()}};
  }

  std::vector<std::string> split_list(std::string_view text) {
    std::vector<std::string> out;
    auto trim = [](std::string_view t) {
      while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) {
        t.remove_prefix(1);
      }
      while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) {
        t.remove_suffix(1);
      }
      return std::string(t);
    };
    if (trim(text).empty()) {
      return out;
    }
    int         depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c == '{' || c == '(' || c == '[') {
        ++depth;
      } else if (c == '}' || c == ')' || c == ']') {
        --depth;
      } else if (c == ',' && depth == 0) {
        out.push_back(trim(text.substr(start, i - start)));
        start = i + 1;
      }
    }
    if (depth != 0) {
      throw Error(ErrorKind::parse, "unbalanced brackets in '" + std::string(text) + "'");
    }
    out.push_back(trim(text.substr(start)));
    return out;
  }

  Subset parse_subset(Semigroup const& s, std::string_view text) {
    auto const items = split_list(text);
    if (s.is_finite()) {
      ElementSet members(s.order());
      for (auto const& item : items) {
        auto e = s.index_of(item);
        if (!e) {
          throw Error(ErrorKind::unknown_label,
                      "'" + item + "' is not an element of " + s.name(), {item});
        }
        members.insert(*e);
      }
      return Subset::of(s, std::move(members));
    }
    IntSet members;
    for (auto const& item : items) {
      std::int64_t v   = 0;
      auto const*  end = item.data() + item.size();
      auto [ptr, ec]   = std::from_chars(item.data(), end, v);
      if (ec != std::errc() || ptr != end) {
        throw Error(ErrorKind::parse, "'" + item + "' is not an integer", {item});
      }
      members.insert(v);
    }
    return Subset::of_integers(s, std::move(members));
  }

  json subset_to_json(Semigroup const& s, Subset const& a) {
    if (a.is_finite()) {
      return subset_to_json(s, a.elements());
    }
    json out = json::array();
    for (auto v : a.integers()) {
      out.push_back(v);
    }
    return out;
  }

  json subset_to_json(Semigroup const& s, ElementSet const& a) {
    json out = json::array();
    a.for_each([&](Element e) { out.push_back(s.label(e)); });
    return out;
  }

  json quotient_to_json(Semigroup const& s, QuotientMap const& q) {
    json classes = json::array();
    for (auto const& c : q.classes) {
      classes.push_back(subset_to_json(s, c));
    }
    return json{{"classes", classes}, {"quotient", cayley_to_json(q.quotient)}};
  }

  json certificate_to_json(Semigroup const& s, SeparationCertificate const& cert) {
    json log = json::array();
    for (auto const& step : cert.insertion_log) {
      log.push_back(json{{"element", s.label(step.element)}, {"side", to_string(step.side)}});
    }
    json out{
        {"A", subset_to_json(s, cert.a)},
        {"B", subset_to_json(s, cert.b)},
        {"insertion_log", log},
        {"evidence",
         {{"tail", cert.evidence.tail_length}, {"cycle", cert.evidence.cycle_length}}},
        {"convex", {{"A", cert.convex_a.holds()}, {"B", cert.convex_b.holds()}}},
    };
    if (cert.konvex_a && cert.konvex_b) {
      out["konvex"] = {{"A", cert.konvex_a->holds()}, {"B", cert.konvex_b->holds()}};
    }
    return out;
  }

}  // namespace konvex
