#pragma once

#include <cstdint>
#include <string>

namespace sumrank {

/// Sum-rank code ambient parameters: vectors in F_{q^m}^n split into ell
/// blocks of length eta.
struct CodeParams {
  std::int64_t q = 2;
  int m = 1;
  int eta = 1;
  int ell = 1;

  /// Validates q (prime power >= 2) and m, eta, ell >= 1.
  static CodeParams make(std::int64_t q, int m, int eta, int ell);

  int n() const { return ell * eta; }
  int mu() const { return m < eta ? m : eta; }
  /// Largest possible sum-rank weight, ell * mu.
  int max_weight() const { return ell * mu(); }

  std::string to_string() const;
  bool operator==(const CodeParams&) const = default;
};

}  // namespace sumrank
