#ifndef XYSEL_EXTENDED_VALUE_HPP
#define XYSEL_EXTENDED_VALUE_HPP

#include <cassert>
#include <cmath>
#include <limits>

namespace xysel {

/// A real number extended with positive infinity.
///
/// Finite values come from the input arrays; positive infinity is the
/// padding sentinel that ranks above every finite sum. Negative infinity
/// and NaN are rejected at construction, so the usual IEEE comparisons
/// give a total order and addition never produces NaN.
class ExtValue {
 public:
  constexpr ExtValue() = default;  // Finite(0)

  static constexpr ExtValue finite(double v) {
    assert(v == v && v != std::numeric_limits<double>::infinity() &&
           v != -std::numeric_limits<double>::infinity());
    return ExtValue(v);
  }

  static constexpr ExtValue pos_inf() {
    return ExtValue(std::numeric_limits<double>::infinity());
  }

  constexpr bool is_finite() const {
    return v_ != std::numeric_limits<double>::infinity();
  }

  /// Raw value; +inf when not finite.
  constexpr double raw() const { return v_; }

  constexpr double finite_value() const {
    assert(is_finite());
    return v_;
  }

  friend constexpr ExtValue operator+(ExtValue a, ExtValue b) {
    return ExtValue(a.v_ + b.v_);  // inf absorbs
  }

  friend constexpr bool operator==(ExtValue a, ExtValue b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(ExtValue a, ExtValue b) { return a.v_ != b.v_; }
  friend constexpr bool operator<(ExtValue a, ExtValue b) { return a.v_ < b.v_; }
  friend constexpr bool operator<=(ExtValue a, ExtValue b) { return a.v_ <= b.v_; }
  friend constexpr bool operator>(ExtValue a, ExtValue b) { return a.v_ > b.v_; }
  friend constexpr bool operator>=(ExtValue a, ExtValue b) { return a.v_ >= b.v_; }

 private:
  constexpr explicit ExtValue(double v) : v_(v) {}
  double v_ = 0.0;
};

}  // namespace xysel

#endif  // XYSEL_EXTENDED_VALUE_HPP
