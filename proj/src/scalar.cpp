#include "triadlab/scalar.hpp"

#include <stdexcept>

namespace triadlab {

std::string Field::name() const {
  return p == 0 ? std::string("QQ") : "Fp:" + std::to_string(p);
}

Scalar::Scalar(Field f, long v) : p_(f.p) {
  if (p_ == 0) {
    q_ = v;
  } else {
    std::int64_t m = static_cast<std::int64_t>(v) % static_cast<std::int64_t>(p_);
    r_ = m < 0 ? m + p_ : m;
  }
}

Scalar::Scalar(Field f, const mpq_class& v) : p_(f.p) {
  if (p_ == 0) {
    q_ = v;
    q_.canonicalize();
    return;
  }
  mpz_class num = v.get_num() % p_;
  mpz_class den = v.get_den() % p_;
  if (den == 0) throw std::domain_error("denominator vanishes modulo p");
  std::int64_t n = num.get_si();
  if (n < 0) n += p_;
  r_ = (n * mod_inverse(den.get_si(), p_)) % p_;
}

std::int64_t Scalar::mod_inverse(std::int64_t v, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = ((v % p) + p) % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible modulo p");
  return t < 0 ? t + p : t;
}

bool Scalar::is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }
bool Scalar::is_one() const { return p_ ? r_ == 1 : q_ == 1; }

// A default-constructed Scalar is the zero of any field, so mixed operations
// take the nonzero characteristic.
Scalar Scalar::operator+(const Scalar& o) const {
  Scalar s;
  s.p_ = p_ ? p_ : o.p_;
  if (s.p_) {
    s.r_ = (r_ + o.r_) % s.p_;
  } else {
    s.q_ = q_ + o.q_;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_) {
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  } else {
    s.q_ = -q_;
  }
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar s;
  s.p_ = p_ ? p_ : o.p_;
  if (s.p_) {
    s.r_ = (r_ * o.r_) % s.p_;
  } else {
    s.q_ = q_ * o.q_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  Scalar s = *this;
  if (p_) {
    s.r_ = mod_inverse(r_, p_);
  } else {
    s.q_ = 1 / q_;
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (p_ || o.p_) return r_ == o.r_;
  return q_ == o.q_;
}

bool Scalar::is_negative() const { return p_ == 0 && sgn(q_) < 0; }

std::string Scalar::str() const { return p_ ? std::to_string(r_) : q_.get_str(); }

}  // namespace triadlab
