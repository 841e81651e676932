#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace maxplus {

/// Absolute tolerance for equality tests on non-integer data. Integer-valued
/// instances never come close to it, so they are compared exactly in effect.
inline constexpr double kTolerance = 1e-9;

/// Scalar of the completed max-plus semiring: a real number, -inf, or +inf.
///
/// The infinities are tags rather than IEEE infinities, so ordering and
/// equality are total and exact. -inf is absorbing for otimes, including
/// against +inf. +inf only shows up transiently (e.g. a divergent star).
class Value {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  /// The semiring zero, -inf.
  constexpr Value() noexcept = default;

  /// Finite value. IEEE infinities map onto the tags; NaN maps to -inf.
  constexpr Value(double v) noexcept {  // NOLINT(google-explicit-constructor)
    if (v != v) {
      kind_ = Kind::NegInf;
    } else if (v == std::numeric_limits<double>::infinity()) {
      kind_ = Kind::PosInf;
    } else if (v == -std::numeric_limits<double>::infinity()) {
      kind_ = Kind::NegInf;
    } else {
      kind_ = Kind::Finite;
      v_ = v;
    }
  }

  static constexpr Value neg_inf() noexcept { return Value{}; }
  static constexpr Value pos_inf() noexcept {
    Value r;
    r.kind_ = Kind::PosInf;
    return r;
  }
  /// The semiring unit, 0.
  static constexpr Value unit() noexcept { return Value{0.0}; }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  constexpr bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }
  constexpr bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }

  /// Finite payload; 0 for the infinities.
  constexpr double finite() const noexcept { return v_; }

  /// IEEE view, used at I/O boundaries and in floating-point code.
  constexpr double to_double() const noexcept {
    switch (kind_) {
      case Kind::NegInf: return -std::numeric_limits<double>::infinity();
      case Kind::PosInf: return std::numeric_limits<double>::infinity();
      case Kind::Finite: break;
    }
    return v_;
  }

  friend constexpr bool operator==(Value a, Value b) noexcept {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.v_ == b.v_);
  }

  friend constexpr std::strong_ordering operator<=>(Value a, Value b) noexcept {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ != Kind::Finite || a.v_ == b.v_) return std::strong_ordering::equal;
    return a.v_ < b.v_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  Kind kind_ = Kind::NegInf;
  double v_ = 0.0;
};

inline constexpr Value kNegInf = Value::neg_inf();
inline constexpr Value kPosInf = Value::pos_inf();

/// max(a, b).
constexpr Value oplus(Value a, Value b) noexcept { return a < b ? b : a; }

/// a + b, with -inf absorbing.
constexpr Value otimes(Value a, Value b) noexcept {
  if (a.is_neg_inf() || b.is_neg_inf()) return kNegInf;
  if (a.is_pos_inf() || b.is_pos_inf()) return kPosInf;
  return Value{a.finite() + b.finite()};
}

/// Equality up to `tol` on finite values; infinities must match exactly.
constexpr bool approx_equal(Value a, Value b, double tol = kTolerance) noexcept {
  if (a.kind() != b.kind()) return false;
  if (!a.is_finite()) return true;
  const double d = a.finite() - b.finite();
  return d <= tol && -d <= tol;
}

/// a <= b + tol.
constexpr bool approx_less_equal(Value a, Value b, double tol = kTolerance) noexcept {
  if (a <= b) return true;
  return a.is_finite() && b.is_finite() && a.finite() - b.finite() <= tol;
}

/// Decimal literal, or "-inf" / "+inf" / "inf" (case-insensitive).
/// Throws Error{ParseError} on anything else.
Value parse_value(std::string_view text);

/// "-inf" / "+inf" for the infinities; integers print without a fractional
/// part, other values use the shortest representation that round-trips.
std::string format_value(Value v);

}  // namespace maxplus
