#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "triadlab/scalar.hpp"
#include "triadlab/upoly.hpp"

namespace triadlab {

/// Variable indices inside a Monomial.
enum Var : int { kA = 0, kX = 1, kY = 2, kZ = 3, kT = 4 };
inline constexpr int kNumVars = 5;

/// Exponent vector on (a, X, Y, Z, T). The weighted degree ignores a.
struct Monomial {
  std::array<std::uint16_t, kNumVars> e{};

  static Monomial var(int v, int power = 1) {
    Monomial m;
    m.e[v] = static_cast<std::uint16_t>(power);
    return m;
  }
  int degree() const { return e[1] + e[2] + e[3] + e[4]; }
  bool is_one() const { return e == std::array<std::uint16_t, kNumVars>{}; }
  bool divides(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  /// Requires divides(o) on the argument: returns *this / o.
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;
  Monomial without_a() const {
    Monomial m = *this;
    m.e[0] = 0;
    return m;
  }
  bool operator==(const Monomial&) const = default;
  std::string str() const;
};

/// Term order: grevlex on (X,Y,Z,T), ties broken by the power of a (1 < a).
/// Returns >0 if x > y, <0 if x < y, 0 if equal.
int compare(const Monomial& x, const Monomial& y);

struct Term {
  Monomial m;
  Scalar c;
};

/// Sparse polynomial in B = k[a,X,Y,Z,T]; terms strictly decreasing.
class Poly {
 public:
  Poly() = default;
  Poly(const Scalar& c, const Monomial& m = {});
  static Poly from_terms(std::vector<Term> terms);  // any order, merges duplicates
  static Poly from_upoly(const UPoly& u);

  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }
  const Term& lead() const { return t_.front(); }

  bool is_homogeneous() const;
  /// Weighted degree of the lead term (meaningful for homogeneous polys).
  int degree() const { return t_.empty() ? 0 : t_.front().m.degree(); }
  /// True if no X,Y,Z,T appear.
  bool is_a_only() const;
  /// Coefficient polynomial in a of a pure-a polynomial.
  UPoly as_upoly() const;
  /// Constant term (coefficient of the monomial 1), zero if absent.
  Scalar constant_term() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly scaled(const Scalar& s) const;
  Poly mul_term(const Scalar& c, const Monomial& m) const;
  /// this + c*m*o, the inner loop of reduction.
  void add_mul_term(const Scalar& c, const Monomial& m, const Poly& o);
  Poly mul_upoly(const UPoly& u) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly homogeneous_part(int d) const;
  Poly specialize_a(const Scalar& alpha) const;
  /// Drop the leading term.
  void pop_lead() { t_.erase(t_.begin()); }
  /// Append a term smaller than every present term.
  void append_term(const Term& t) { t_.push_back(t); }

  std::string str() const;

 private:
  std::vector<Term> t_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Parse `expr := term (('+'|'-') term)*`, `term := factor ('*'? factor | '/' int)*`,
/// `factor := var | int | '(' expr ')' | factor '^' int`.
Poly parse_poly(std::string_view text, Field field);

}  // namespace triadlab
