#pragma once

#include <ostream>

namespace mct {

/// Element of the max-plus semiring: a finite real or the bottom element
/// (the additive identity, -inf). Bottom is a tag, never a sentinel double.
class MaxPlusValue {
 public:
  constexpr MaxPlusValue() = default;  // bottom
  constexpr MaxPlusValue(double v) : finite_(true), value_(v) {}  // NOLINT: implicit by intent

  static constexpr MaxPlusValue bottom() { return MaxPlusValue{}; }

  constexpr bool is_bottom() const { return !finite_; }
  constexpr bool is_finite() const { return finite_; }

  /// Finite value. Precondition: !is_bottom().
  constexpr double value() const { return value_; }

  friend constexpr bool operator==(const MaxPlusValue& a, const MaxPlusValue& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }

 private:
  bool finite_ = false;
  double value_ = 0.0;
};

/// Semiring addition: max, with bottom as the least element.
constexpr MaxPlusValue mp_add(MaxPlusValue a, MaxPlusValue b) {
  if (a.is_bottom()) return b;
  if (b.is_bottom()) return a;
  return a.value() >= b.value() ? a : b;
}

/// Semiring multiplication: ordinary addition, bottom is absorbing.
constexpr MaxPlusValue mp_mul(MaxPlusValue a, MaxPlusValue b) {
  if (a.is_bottom() || b.is_bottom()) return MaxPlusValue::bottom();
  return MaxPlusValue(a.value() + b.value());
}

struct MaxPlusVector2 {
  MaxPlusValue x;
  MaxPlusValue y;

  friend constexpr bool operator==(const MaxPlusVector2&, const MaxPlusVector2&) = default;
};

/// Row-major 2x2 matrix [[a11, a12], [a21, a22]] = [[alpha, beta], [gamma, delta]].
struct MaxPlusMatrix2 {
  MaxPlusValue a11;
  MaxPlusValue a12;
  MaxPlusValue a21;
  MaxPlusValue a22;

  static constexpr MaxPlusMatrix2 identity() {
    return {0.0, MaxPlusValue::bottom(), MaxPlusValue::bottom(), 0.0};
  }

  friend constexpr bool operator==(const MaxPlusMatrix2&, const MaxPlusMatrix2&) = default;
};

constexpr MaxPlusVector2 mat_vec(const MaxPlusMatrix2& a, const MaxPlusVector2& z) {
  return {mp_add(mp_mul(a.a11, z.x), mp_mul(a.a12, z.y)),
          mp_add(mp_mul(a.a21, z.x), mp_mul(a.a22, z.y))};
}

/// Maximum entry of the vector.
constexpr MaxPlusValue norm(const MaxPlusVector2& z) { return mp_add(z.x, z.y); }

std::ostream& operator<<(std::ostream& os, const MaxPlusValue& v);
std::ostream& operator<<(std::ostream& os, const MaxPlusVector2& z);

}  // namespace mct
