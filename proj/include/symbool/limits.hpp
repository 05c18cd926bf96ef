#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symbool {

/// Size caps for everything that enumerates exponentially many objects.
/// Every enumerating operation takes a Limits and refuses work beyond it.
struct Limits {
  /// Largest ground set k for power sets P[k].
  unsigned ground_cap = 16;
  /// Largest permutation group that will be enumerated element by element.
  std::uint64_t group_order_cap = 3628800;  // 10!
  /// Largest number of tensor tuples dim^m an orbit table may index.
  std::uint64_t tuple_cap = std::uint64_t{1} << 22;
  /// Largest number of summands in a brute-force sum (group tuples, IE terms).
  std::uint64_t term_cap = 400'000'000;
  /// Largest ambient k accepted by the closed-form oracle comparison.
  unsigned closed_form_cap = 8;
};

/// Raised when an operation would exceed a Limits cap.  Carries the amount of
/// work the request needs so callers can raise the cap deliberately.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required,
                 std::uint64_t allowed)
      : std::runtime_error(what + ": requires " + std::to_string(required) +
                           ", allowed " + std::to_string(allowed)),
        required_(required),
        allowed_(allowed) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t allowed() const noexcept { return allowed_; }

 private:
  std::uint64_t required_;
  std::uint64_t allowed_;
};

/// Internal consistency failure: an object passed validation but violates a
/// structural identity that validation should have implied.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Saturating product used for budget arithmetic.
inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

}  // namespace symbool
