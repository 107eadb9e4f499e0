#pragma once

#include <cmath>
#include <mpfr.h>

#include "cmperiods/errors.hpp"

namespace cmperiods {

/// Target accuracy of a computation plus the extra digits carried
/// internally. Immutable once built.
class PrecisionContext {
 public:
  static constexpr int kMinTarget = 30;
  static constexpr int kMinGuard = 10;

  explicit PrecisionContext(int target_digits, int guard_digits = 20)
      : target_(target_digits), guard_(guard_digits) {
    if (target_ < kMinTarget) {
      throw DomainError("target_digits must be >= 30");
    }
    if (guard_ < kMinGuard) {
      throw DomainError("guard_digits must be >= 10");
    }
  }

  int target_digits() const noexcept { return target_; }
  int guard_digits() const noexcept { return guard_; }
  int working_digits() const noexcept { return target_ + guard_; }

  /// Binary precision for working_digits() decimal digits.
  mpfr_prec_t bits() const noexcept {
    return static_cast<mpfr_prec_t>(
               std::ceil(working_digits() * 3.3219280948873623)) +
           8;
  }

  /// Same guard, scaled target; used for doubled-precision reruns.
  PrecisionContext scaled(int factor) const {
    return PrecisionContext(target_ * factor, guard_);
  }

  PrecisionContext with_target(int target_digits) const {
    return PrecisionContext(target_digits, guard_);
  }

  friend bool operator==(const PrecisionContext&,
                         const PrecisionContext&) = default;

 private:
  int target_;
  int guard_;
};

}  // namespace cmperiods
