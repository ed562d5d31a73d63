#pragma once

#include <string>
#include <vector>

#include "triadlab/scalar.hpp"

namespace triadlab {

/// Univariate polynomial in a over k; coefficient i multiplies a^i.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(const Scalar& c);
  explicit UPoly(std::vector<Scalar> coeffs);
  static UPoly monomial(const Scalar& c, int exponent);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Order of vanishing at a = 0; -1 for the zero polynomial.
  int valuation() const;
  Scalar coeff(int i) const;
  Scalar lead() const { return c_.back(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  /// Unit of the localization k[a]_(a): nonzero constant term.
  bool is_local_unit() const { return !c_.empty() && !c_[0].is_zero(); }
  Field field() const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator-() const;
  UPoly scaled(const Scalar& s) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  /// Euclidean division; throws on a zero divisor.
  void divmod(const UPoly& d, UPoly& q, UPoly& r) const;
  UPoly monic() const;
  /// Drop the factor a^valuation().
  UPoly unit_part() const;
  /// Exact division by a^k (k <= valuation()).
  UPoly shift_down(int k) const;
  UPoly truncated(int n) const;  // reduce modulo a^n
  Scalar eval(const Scalar& x) const;

  static UPoly gcd(UPoly x, UPoly y);
  std::string str() const;

 private:
  std::vector<Scalar> c_;
  void trim();
};

/// Element of A = k[a] localized at (a): num/den with den(0) != 0.
class CoefElem {
 public:
  CoefElem() = default;
  explicit CoefElem(UPoly num);
  CoefElem(UPoly num, UPoly den);
  static CoefElem scalar(const Scalar& s) { return CoefElem(UPoly(s)); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_unit() const { return num_.is_local_unit(); }
  /// a-adic valuation; -1 for zero.
  int valuation() const { return num_.valuation(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  CoefElem operator+(const CoefElem& o) const;
  CoefElem operator-(const CoefElem& o) const;
  CoefElem operator*(const CoefElem& o) const;
  CoefElem operator-() const;
  /// Division inside A: requires valuation(o) <= valuation(*this).
  CoefElem operator/(const CoefElem& o) const;
  bool operator==(const CoefElem& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const CoefElem& o) const { return !(*this == o); }

  /// Image in A/(a^n) as a polynomial of degree < n.
  UPoly truncated(int n) const;
  std::string str() const;

 private:
  UPoly num_;
  UPoly den_;
  void normalize();
};

}  // namespace triadlab
