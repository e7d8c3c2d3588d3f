#ifndef HURWITZ_WORK_CAP_HPP
#define HURWITZ_WORK_CAP_HPP

#include <cstdint>
#include <string>

#include "hurwitz/errors.hpp"

namespace hurwitz {

/// Budget for brute-force enumerations, in elementary steps.
struct WorkCap {
  std::uint64_t limit = 100'000'000;

  /// Throws if `estimate` exceeds the budget. Saturating products are the
  /// caller's job; see saturating_mul.
  void require(std::uint64_t estimate, const std::string& what) const {
    if (estimate > limit) {
      throw WorkCapExceeded(what + " needs ~" + std::to_string(estimate) + " steps, cap is " +
                            std::to_string(limit));
    }
  }
};

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace hurwitz

#endif  // HURWITZ_WORK_CAP_HPP
