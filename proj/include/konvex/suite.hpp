// The acceptance suite: ten property sweeps over the catalog, sampled
// carriers and fixed integer fixtures. Shared by `konvex verify` and the
// acceptance test binary.

#ifndef KONVEX_SUITE_HPP_
#define KONVEX_SUITE_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

namespace konvex {

  struct SuiteOptions {
    std::size_t   order_cap = 8;
    std::uint64_t seed      = 0;
    // Corrupts one counterexample fixture so the run must fail.
    bool inject_fault = false;
  };

  struct CriterionResult {
    int                      id = 0;
    std::string              name;
    std::string              checks;  // what is exercised, in words
    bool                     passed = false;
    std::size_t              checks_run = 0;
    std::size_t              failure_count = 0;
    std::vector<std::string> failures;  // the first few
    std::vector<std::string> notes;     // informational findings
    double                   seconds = 0;
    std::optional<double>    time_limit;
  };

  struct SuiteResult {
    std::vector<CriterionResult> criteria;

    [[nodiscard]] bool passed() const {
      for (auto const& c : criteria) {
        if (!c.passed) {
          return false;
        }
      }
      return true;
    }
  };

  inline constexpr int criterion_count = 10;

  CriterionResult run_criterion(int id, SuiteOptions const& options);
  SuiteResult     run_suite(SuiteOptions const& options);

}  // namespace konvex

#endif  // KONVEX_SUITE_HPP_
