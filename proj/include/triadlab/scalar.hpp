#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace triadlab {

/// Base field k: the rationals (p == 0) or F_p.
struct Field {
  std::uint32_t p = 0;

  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;
  std::string name() const;

  static Field rationals() { return Field{}; }
  static Field prime(std::uint32_t p) { return Field{p}; }
};

/// Exact element of k. Rationals are kept reduced; F_p values live in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field f, long v);
  Scalar(Field f, const mpq_class& v);

  Field field() const { return Field{p_}; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Sign used when printing ("-" prefixes); F_p values are never negative.
  bool is_negative() const;
  std::string str() const;

 private:
  std::uint32_t p_ = 0;
  std::int64_t r_ = 0;  // value when p_ != 0
  mpq_class q_;         // value when p_ == 0

  static std::int64_t mod_inverse(std::int64_t v, std::int64_t p);
};

}  // namespace triadlab
