#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "triadlab/triads.hpp"

namespace triadlab {

/// Polynomial of degree <= 3 in n with rational coefficients; c[i] multiplies n^i.
struct NumericPolynomial {
  std::array<mpq_class, 4> c{};

  mpq_class operator()(long n) const;
  NumericPolynomial operator+(const NumericPolynomial& o) const;
  NumericPolynomial operator-(const NumericPolynomial& o) const;
  NumericPolynomial scaled(long k) const;
  bool operator==(const NumericPolynomial& o) const { return c == o.c; }
  std::string str() const;
};

/// (n+1)(n+2)(n+3)/6 at every integer n, so B(-1) = B(-2) = B(-3) = 0 and B(-4) = -1.
long euler_B(long n);
/// n -> sum of multiplicity * B(n - twist).
NumericPolynomial euler_poly(const Chiffres& c);

/// Terms L1, L0, L-1 as chiffres.
using TriadTerms = std::array<Chiffres, 3>;

TriadTerms terms_of(const Complex3& c);
/// c1(L1) - c1(L0) + c1(L-1).
long triad_c1(const TriadTerms& t);

/// n -> q(n), finitely supported, values >= 0.
using QFunction = std::map<int, int>;

/// "2:1,3:3"; "" is the zero function. Throws ParseError.
QFunction parse_q(std::string_view text);
std::string format_q(const QFunction& q);
/// The dissocie sum of O(-n)^{q(n)}.
Chiffres q_module(const QFunction& q);
/// sum n q(n) + triad_c1(terms).
long shift_h0(const QFunction& q, const TriadTerms& terms);

struct FamilyShape {
  Chiffres P;
  TriadTerms terms;
  long h = 0;
};

struct DegreeGenus {
  long d = 0, g = 0;
  bool operator==(const DegreeGenus&) const = default;
};

/// chi(J_C(n + h)) = E(L1) - E(L0) + E(L-1) - E(P), then d n + 1 - g = B(n) - chi(J_C(n)).
/// RANK_MISMATCH unless the ranks balance to 1; NON_INTEGER when the result is
/// not of that form at five test points.
DegreeGenus degree_genus(const FamilyShape& s);
/// B(n) - chi(J_C(n)) as a polynomial in n.
NumericPolynomial curve_polynomial(const FamilyShape& s);

/// q_sharp(n) = 0, 1, 2, 3 on the steps [n1+n2, n1+n3, mu) with mu = max(n1+n4, n2+n3).
struct KoszulQ {
  std::array<int, 4> n{};
  int sharp(int m) const;
  QFunction q() const;
};

/// Requires 1 <= n1 <= n2 <= n3 <= n4.
KoszulQ koszul_q_sharp(int n1, int n2, int n3, int n4);

/// result[p-1] maps the exterior power of rank C(r,p) onto the one below, with
/// d(e_I) = sum_k (-1)^(p-k) f_{i_k} e_{I - i_k}; subsets are in lexicographic order.
std::vector<GradedMatrix> koszul_complex(const std::vector<Poly>& f, const Context& ctx);

struct FamilyReport {
  Chiffres P;
  TriadTerms terms;
  long h0 = 0;
  DegreeGenus dg;
  DegreeList n_generators;
  std::vector<int> special, generic;
  DegreeRange window;

  /// "P → [L1 → L0 → L-1]".
  std::string bracket() const;
};

FamilyReport family_report(const Triad& t, const QFunction& q, const Context& ctx);

}  // namespace triadlab
