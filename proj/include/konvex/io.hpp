// Cayley-table JSON, subset parsing, and the JSON exports.
//
// Carrier format: {"elements": ["a","b"], "table": [["a","b"],["b","a"]]}
// where table[i][j] is elements[i] + elements[j].

#ifndef KONVEX_IO_HPP_
#define KONVEX_IO_HPP_

#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include <json.hpp>

#include "konvex/hull.hpp"
#include "konvex/semigroup.hpp"
#include "konvex/separation.hpp"
#include "konvex/subset.hpp"

namespace konvex {

  // Throws Io for unreadable files, Parse for malformed JSON, and the
  // validation errors of Semigroup::from_labels otherwise.
  Semigroup load_cayley(std::string const& path);
  Semigroup cayley_from_json(nlohmann::json const& doc, std::string name = "cayley");
  nlohmann::json cayley_to_json(Semigroup const& s);

  // Splits on top-level commas, so labels such as "{1,2}" or "(0,1)" stay
  // whole. Surrounding whitespace is dropped; an empty text is an empty list.
  std::vector<std::string> split_list(std::string_view text);

  // Labels on finite carriers, integers on the symbolic ones.
  Subset parse_subset(Semigroup const& s, std::string_view text);

  // Element labels, or integers in ascending order on symbolic carriers.
  nlohmann::json subset_to_json(Semigroup const& s, Subset const& a);
  nlohmann::json subset_to_json(Semigroup const& s, ElementSet const& a);

  nlohmann::json quotient_to_json(Semigroup const& s, QuotientMap const& q);
  nlohmann::json certificate_to_json(Semigroup const& s, SeparationCertificate const& cert);

}  // namespace konvex

#endif  // KONVEX_IO_HPP_
