#ifndef KONVEX_ERROR_HPP_
#define KONVEX_ERROR_HPP_

#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <utility>    // for move
#include <vector>     // for vector

namespace konvex {

  enum class ErrorKind {
    // Malformed input or unsupported request.
    bad_shape,
    unknown_label,
    not_commutative,
    not_associative,
    bad_params,
    bad_n,
    empty_generators,
    carrier_mismatch,
    not_in_carrier,
    symbolic_unsupported,
    overflow,
    cover_not_konvex,
    cover_misses_set,
    not_disjoint_input,
    inputs_not_disjoint,
    not_complementary,
    parse,
    io,
    // A guaranteed property failed: always a bug in this library.
    lemma_violation,
    well_definedness_violation,
    partition_violation,
  };

  [[nodiscard]] char const* to_string(ErrorKind kind) noexcept;

  // Thrown by every operation in the library. `witness` holds the element
  // labels (or integers) that exhibit the failure, when there are any.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what,
          std::vector<std::string> witness = {})
        : std::runtime_error(what), kind_(kind), witness_(std::move(witness)) {}

    [[nodiscard]] ErrorKind kind() const noexcept {
      return kind_;
    }

    [[nodiscard]] std::vector<std::string> const& witness() const noexcept {
      return witness_;
    }

    [[nodiscard]] bool is_violation() const noexcept {
      return kind_ == ErrorKind::lemma_violation
             || kind_ == ErrorKind::well_definedness_violation
             || kind_ == ErrorKind::partition_violation;
    }

   private:
    ErrorKind                kind_;
    std::vector<std::string> witness_;
  };

}  // namespace konvex

#endif  // KONVEX_ERROR_HPP_
