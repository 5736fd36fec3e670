#ifndef HOLO_ERRORS_HPP
#define HOLO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace holo {

/// An enumeration would exceed the configured element budget. Always a hard
/// error, never silent truncation.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed user input: unknown group descriptor, bad CSV line, bad CLI usage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A closed-form count was requested on a group where its hypotheses fail.
struct FormulaInapplicableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Signals a bug (typically a composition
/// convention mismatch), not bad input.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Resource limits for enumerations. max_elements caps any enumerated element
/// collection (closures, Cayley tables, search nodes); aut_order_cap is the
/// largest group order fed to the automorphism backtracking search.
struct Budget {
  std::size_t max_elements = 1'000'000;
  std::size_t aut_order_cap = 720;

  void charge(std::size_t n, const char* what) const {
    if (n > max_elements)
      throw BudgetError(std::string(what) + ": " + std::to_string(n) +
                        " elements exceeds budget of " +
                        std::to_string(max_elements));
  }
};

}  // namespace holo

#endif
