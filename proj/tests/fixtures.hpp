#pragma once

#include <random>
#include <string>

#include "triadlab/chiffres.hpp"
#include "triadlab/context.hpp"
#include "triadlab/graded_matrix.hpp"
#include "triadlab/poly.hpp"
#include "triadlab/presented_module.hpp"
#include "triadlab/triads.hpp"

namespace testing {

using namespace triadlab;

/// Random homogeneous polynomial of the given degree with small integer coefficients.
inline Poly random_poly(std::mt19937& rng, Field field, int degree, int max_terms) {
  std::vector<Term> terms;
  int n = 1 + static_cast<int>(rng() % max_terms);
  for (int k = 0; k < n; ++k) {
    Monomial m;
    for (int d = 0; d < degree; ++d) m.e[1 + rng() % 4]++;
    m.e[kA] = static_cast<std::uint16_t>(rng() % 3);
    long c = static_cast<long>(rng() % 7) - 3;
    if (c == 0) c = 1;
    terms.push_back({m, Scalar(field, c)});
  }
  return Poly::from_terms(std::move(terms));
}

inline GradedMatrix matrix(const std::string& source, const std::string& target, const std::string& rows,
                           const Context& ctx) {
  return parse_matrix(parse_degree_list(source), parse_degree_list(target), rows, ctx.field);
}

/// d'_1 of the (4,0) triad: "1^3,2^6" -> "0,1^4".
inline GradedMatrix d1_prime(const Context& ctx) {
  return matrix("1^3,2^6", "0,1^4",
                "X, Y, Z, 0, 0, 0, 0, 0, T^2;"
                "-a, 0, 0, Z, T, 0, 0, 0, Y;"
                "0, -a, 0, 0, 0, Z, T, 0, -X;"
                "0, 0, -a, -X, 0, -Y, 0, T, 0;"
                "0, 0, 0, 0, -X, 0, -Y, -Z, -a*T",
                ctx);
}

inline GradedMatrix d0_koszul(const Context& ctx) { return matrix("0,1^4", "0", "a, X, Y, Z, T", ctx); }

/// Koszul syzygies of (X,Y,Z,T): "2^6" -> "1^4".
inline GradedMatrix koszul_v(const Context& ctx) {
  return matrix("2^6", "1^4",
                "Y, Z, T, 0, 0, 0;"
                "-X, 0, 0, Z, T, 0;"
                "0, -X, 0, -Y, 0, T;"
                "0, 0, -X, 0, -Y, -Z",
                ctx);
}

/// A majeure of the trivial triad attached to (R/(X,Y,Z,T^3), <t>, <t^2>).
inline GradedMatrix d1_trivial(const Context& ctx) {
  return matrix("1^3,2^6,2,3", "0,1^4",
                "X, Y, Z, 0, 0, 0, 0, 0, 0, a*T^2, T^3;"
                "-a, 0, 0, Z, T, 0, 0, 0, Y, 0, 0;"
                "0, -a, 0, 0, 0, Z, T, 0, -X, 0, 0;"
                "0, 0, -a, -X, 0, -Y, 0, T, 0, 0, 0;"
                "0, 0, 0, 0, -X, 0, -Y, -Z, 0, -a^2*T, -a*T^2",
                ctx);
}

}  // namespace testing

namespace testing {

/// Majeure of 0 -> A --a--> A: "1^4,2^6" -> "0,1^4".
inline GradedMatrix d1_representable(const Context& ctx) {
  return matrix("1^4,2^6", "0,1^4",
                "X, Y, Z, T, 0, 0, 0, 0, 0, 0;"
                "-a, 0, 0, 0, Y, Z, T, 0, 0, 0;"
                "0, -a, 0, 0, -X, 0, 0, Z, T, 0;"
                "0, 0, -a, 0, 0, -X, 0, -Y, 0, T;"
                "0, 0, 0, -a, 0, 0, -X, 0, -Y, -Z",
                ctx);
}

inline std::string degrees_of(const GradedMatrix& m) { return Chiffres(m.source()).str(); }

/// Cyclic module B(twist)/(rels).
inline PresentedModule cyclic(int twist, std::vector<const char*> rels, const Context& ctx) {
  std::vector<Poly> ps;
  for (auto r : rels) ps.push_back(parse_poly(r, ctx.field));
  return PresentedModule::quotient(twist, ps);
}

/// B(-1)/(X,Y,Z,aT,T^2).
inline PresentedModule heart_lprime(const Context& ctx) { return cyclic(-1, {"X", "Y", "Z", "a*T", "T^2"}, ctx); }

/// k = B/(a,X,Y,Z,T).
inline PresentedModule residue_field(const Context& ctx) { return cyclic(0, {"a", "X", "Y", "Z", "T"}, ctx); }

/// M0 = R/(X,Y,Z,T^3), no a in the relations.
inline PresentedModule m0_cubic(const Context& ctx) { return cyclic(0, {"X", "Y", "Z", "T^3"}, ctx); }

/// "L1 -> L0 -> L-1" in chiffres notation.
inline std::string shape(const Complex3& c) {
  return Chiffres(c.L1.generators()).str() + " -> " + Chiffres(c.L0.generators()).str() + " -> " +
         Chiffres(c.Lm1.generators()).str();
}

/// The (4,0) triad L'.
inline Complex3 lprime(const Context& ctx) { return Complex3::free(d1_prime(ctx), d0_koszul(ctx)); }

/// Majeure of the modular triad of H = A/(a): 1^4,0 -> 0 -> 0.
inline Complex3 modular_residue(const Context& ctx) {
  return Complex3::free(matrix("1^4,0", "0", "X, Y, Z, T, a", ctx), GradedMatrix({0}, {}));
}

/// Mineure 0 -> A --a--> A.
inline Complex3 representable_mineure(const Context& ctx) {
  Complex3 c;
  c.L1 = PresentedModule::free({});
  c.L0 = cyclic(0, {"X", "Y", "Z", "T"}, ctx);
  c.Lm1 = cyclic(0, {"X", "Y", "Z", "T"}, ctx);
  c.d1 = GradedMatrix({}, {0});
  c.d0 = matrix("0", "0", "a", ctx);
  return c;
}

/// (R/(X,Y,Z,T^3), <t>, <t^2>).
inline SubquotientDatum datum_cubic(const Context& ctx) {
  return SubquotientDatum{m0_cubic(ctx), matrix("1", "0", "T", ctx), matrix("2", "0", "T^2", ctx)};
}

/// P2 -> H for the Koszul resolution of k: e1..e4 in degree 1, eps1..eps6 in degree 2.
inline GradedMatrix u_hat(const std::string& target, const std::string& row, const Context& ctx) {
  return matrix("1^4,2^6", target, row, ctx);
}

inline ExtCocycle koszul_cocycle(PresentedModule h, GradedMatrix u, const Context& ctx) {
  return ExtCocycle::from_resolution(d0_koszul(ctx), d1_representable(ctx), std::move(h), std::move(u), ctx);
}

}  // namespace testing
