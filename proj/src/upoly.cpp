#include "triadlab/upoly.hpp"

#include <stdexcept>

namespace triadlab {

UPoly::UPoly(const Scalar& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UPoly::UPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Scalar& c, int exponent) {
  UPoly u;
  if (c.is_zero()) return u;
  u.c_.assign(exponent + 1, -(c - c));
  u.c_[exponent] = c;
  return u;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int UPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

Scalar UPoly::coeff(int i) const {
  if (i >= 0 && i < static_cast<int>(c_.size())) return c_[i];
  return c_.empty() ? Scalar() : c_[0] - c_[0];
}

Field UPoly::field() const { return c_.empty() ? Field{} : c_[0].field(); }

UPoly UPoly::operator+(const UPoly& o) const {
  UPoly r;
  std::size_t n = std::max(c_.size(), o.c_.size());
  r.c_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < c_.size() && i < o.c_.size()) {
      r.c_[i] = c_[i] + o.c_[i];
    } else {
      r.c_[i] = i < c_.size() ? c_[i] : o.c_[i];
    }
  }
  r.trim();
  return r;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  UPoly r;
  Scalar zero = c_[0] - c_[0];
  r.c_.assign(c_.size() + o.c_.size() - 1, zero);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

UPoly UPoly::scaled(const Scalar& s) const {
  UPoly r = *this;
  for (auto& c : r.c_) c *= s;
  r.trim();
  return r;
}

void UPoly::divmod(const UPoly& d, UPoly& q, UPoly& r) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  r = *this;
  q = UPoly();
  Scalar inv = d.lead().inverse();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int shift = r.degree() - d.degree();
    UPoly t = monomial(r.lead() * inv, shift);
    q = q + t;
    r = r - t * d;
  }
}

UPoly UPoly::monic() const { return is_zero() ? *this : scaled(lead().inverse()); }

UPoly UPoly::shift_down(int k) const {
  if (k <= 0 || is_zero()) return *this;
  if (k > valuation()) throw std::domain_error("shift_down beyond valuation");
  UPoly r;
  r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

UPoly UPoly::unit_part() const { return shift_down(valuation()); }

UPoly UPoly::truncated(int n) const {
  if (static_cast<int>(c_.size()) <= n) return *this;
  UPoly r;
  r.c_.assign(c_.begin(), c_.begin() + std::max(n, 0));
  r.trim();
  return r;
}

Scalar UPoly::eval(const Scalar& x) const {
  if (c_.empty()) return x - x;
  Scalar acc = c_.back();
  for (int i = static_cast<int>(c_.size()) - 2; i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

UPoly UPoly::gcd(UPoly x, UPoly y) {
  while (!y.is_zero()) {
    UPoly q, r;
    x.divmod(y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::string UPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    const Scalar& c = c_[i];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool neg = c.is_negative();
    if (neg) cs = cs.substr(1);
    if (!out.empty()) out += neg ? "-" : "+";
    else if (neg) out += "-";
    if (i == 0) {
      out += cs;
      continue;
    }
    if (cs != "1") out += cs;
    out += "a";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

CoefElem::CoefElem(UPoly num) : num_(std::move(num)) { normalize(); }

CoefElem::CoefElem(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void CoefElem::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly();
    return;
  }
  Field f = num_.field();
  if (den_.is_zero()) {
    den_ = UPoly(Scalar(f, 1));
    return;
  }
  if (!den_.is_local_unit()) throw std::domain_error("denominator vanishes at a = 0");
  UPoly g = UPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    UPoly q, r;
    num_.divmod(g, q, r);
    num_ = q;
    den_.divmod(g, q, r);
    den_ = q;
  }
  Scalar l = den_.lead().inverse();
  num_ = num_.scaled(l);
  den_ = den_.scaled(l);
}

namespace {
UPoly den_or_one(const UPoly& den, const UPoly& other) {
  if (!den.is_zero()) return den;
  Field f = other.field();
  return UPoly(Scalar(f, 1));
}
}  // namespace

CoefElem CoefElem::operator+(const CoefElem& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return CoefElem(num_ + o.num_, den_);
  return CoefElem(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

CoefElem CoefElem::operator-() const {
  CoefElem r = *this;
  r.num_ = -r.num_;
  return r;
}

CoefElem CoefElem::operator-(const CoefElem& o) const { return *this + (-o); }

CoefElem CoefElem::operator*(const CoefElem& o) const {
  if (is_zero() || o.is_zero()) return CoefElem();
  return CoefElem(num_ * o.num_, den_or_one(den_, num_) * den_or_one(o.den_, o.num_));
}

CoefElem CoefElem::operator/(const CoefElem& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero in A");
  if (is_zero()) return CoefElem();
  int v = o.num_.valuation();
  if (num_.valuation() < v) throw std::domain_error("quotient leaves A");
  // num/den / (a^v u / d) = (num / a^v) * d / (den * u)
  return CoefElem(num_.shift_down(v) * o.den_, den_ * o.num_.unit_part());
}

UPoly CoefElem::truncated(int n) const {
  if (is_zero() || n <= 0) return UPoly();
  // power-series inverse of den modulo a^n
  Field f = num_.field();
  Scalar inv0 = den_.coeff(0).inverse();
  std::vector<Scalar> inv(n, Scalar(f, 0));
  inv[0] = inv0;
  for (int k = 1; k < n; ++k) {
    Scalar acc(f, 0);
    for (int j = 1; j <= k; ++j) acc += den_.coeff(j) * inv[k - j];
    inv[k] = -(acc * inv0);
  }
  return (num_ * UPoly(inv)).truncated(n);
}

std::string CoefElem::str() const {
  if (is_zero()) return "0";
  if (is_polynomial() && den_.lead().is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace triadlab
