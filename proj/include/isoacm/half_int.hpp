#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <ostream>
#include <string>

#include "isoacm/errors.hpp"

namespace isoacm {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("half-integer addition overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("half-integer subtraction overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("half-integer multiplication overflow");
  return r;
}

}  // namespace detail

/// Exact scalar in (1/2)*Z, stored as a doubled integer so that addition,
/// subtraction and comparison never round. Products must land back in
/// (1/2)*Z (at least one factor integral), otherwise the operation throws.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  HalfInt(std::int64_t whole) : doubled_(detail::checked_mul(whole, 2)) {}

  static HalfInt from_doubled(std::int64_t d) {
    HalfInt h;
    h.doubled_ = d;
    return h;
  }

  std::int64_t doubled() const { return doubled_; }
  bool is_integer() const { return doubled_ % 2 == 0; }

  std::int64_t integer_value() const {
    if (!is_integer()) throw invariant_error("half-integer " + str() + " used where an integer is required");
    return doubled_ / 2;
  }

  HalfInt operator-() const { return from_doubled(detail::checked_sub(0, doubled_)); }

  HalfInt& operator+=(const HalfInt& o) {
    doubled_ = detail::checked_add(doubled_, o.doubled_);
    return *this;
  }
  HalfInt& operator-=(const HalfInt& o) {
    doubled_ = detail::checked_sub(doubled_, o.doubled_);
    return *this;
  }
  HalfInt& operator*=(const HalfInt& o) {
    const std::int64_t p = detail::checked_mul(doubled_, o.doubled_);
    if (p % 2 != 0) throw error("product of two half-odd values leaves (1/2)*Z");
    doubled_ = p / 2;
    return *this;
  }

  friend HalfInt operator+(HalfInt a, const HalfInt& b) { return a += b; }
  friend HalfInt operator-(HalfInt a, const HalfInt& b) { return a -= b; }
  friend HalfInt operator*(HalfInt a, const HalfInt& b) { return a *= b; }

  friend bool operator==(const HalfInt&, const HalfInt&) = default;
  friend auto operator<=>(const HalfInt&, const HalfInt&) = default;

  std::string str() const {
    if (is_integer()) return std::to_string(doubled_ / 2);
    return std::to_string(doubled_) + "/2";
  }

  friend std::ostream& operator<<(std::ostream& os, const HalfInt& h) { return os << h.str(); }

 private:
  std::int64_t doubled_ = 0;
};

inline HalfInt abs(const HalfInt& h) { return h.doubled() < 0 ? -h : h; }

inline std::string to_string(const HalfInt& h) { return h.str(); }

}  // namespace isoacm

namespace Eigen {

template <>
struct NumTraits<isoacm::HalfInt> : GenericNumTraits<isoacm::HalfInt> {
  using Real = isoacm::HalfInt;
  using NonInteger = isoacm::HalfInt;
  using Nested = isoacm::HalfInt;
  using Literal = std::int64_t;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 2,
  };
  static Real epsilon() { return {}; }
  static Real dummy_precision() { return {}; }
  static int digits10() { return 0; }
};

}  // namespace Eigen
