#pragma once

#include <array>
#include <vector>

#include "triadlab/local.hpp"
#include "triadlab/resolution.hpp"

namespace triadlab {

/// L1 --d1--> L0 --d0--> L-1. Each term is a presented module and the
/// differentials act on generators. Terms without relations are free.
struct Complex3 {
  PresentedModule L1, L0, Lm1;
  GradedMatrix d1, d0;

  static Complex3 free(GradedMatrix d1, GradedMatrix d0);
  /// i in {1, 0, -1}.
  const PresentedModule& term(int i) const;
  bool has_free_terms() const;
};

/// Checks shapes, homogeneity, that d1 and d0 respect the relations and that
/// d0 d1 vanishes in L-1. Throws DomainError.
void validate_complex(const Complex3& c, const Context& ctx);

/// Over A: every column of v lies in the span of the columns of span.
bool in_span(const GradedMatrix& v, const GradedMatrix& span, const Context& ctx);

/// Generators of {x : m x in span(rel)}, zero columns dropped.
GradedMatrix preimage_generators(const GradedMatrix& m, const GradedMatrix& rel, const Context& ctx);

/// Presentation of the submodule of coker(rel) generated by every column of
/// gens (no generator is dropped).
PresentedModule submodule_presentation(const GradedMatrix& gens, const GradedMatrix& rel, const Context& ctx);

/// Columns of `generators` are vectors in the generator module of the term;
/// `module` presents the homology on them.
struct Homology {
  GradedMatrix generators;
  PresentedModule module;
};

/// h_i for i in {1, 0, -1}: N, H and C.
Homology homology(const Complex3& c, int i, const Context& ctx);
/// E = coker d1.
PresentedModule cokernel_d1(const Complex3& c);
/// Every term tensored with k = A/(a).
Complex3 special_fiber(const Complex3& c, const Context& ctx);

/// Free chain complex: d[i] maps terms[i+1] to terms[i].
struct Chain {
  std::vector<DegreeList> terms;
  std::vector<GradedMatrix> d;

  static Chain from_matrices(const std::vector<GradedMatrix>& d);
  bool is_complex() const;
};

/// cone_k = X_{k-1} + Y_k with differential [[-dX, 0], [f, dY]]; f[k] maps
/// X_k to Y_k and must commute with the differentials.
Chain mapping_cone(const Chain& x, const Chain& y, const std::vector<GradedMatrix>& f);

/// Finite degree-wise data of a graded module over A.
struct DegreewiseModule {
  int lo = 0, hi = -1;
  /// Per degree: 0 for a free basis element, m for A/(a^m). Free ones come first.
  std::vector<std::vector<int>> exponents;
  /// action[v][n - lo] maps piece n to piece n + 1 (v = X, Y, Z, T; n < hi).
  std::array<std::vector<LocalMatrix>, 4> action;

  std::size_t dim(int n) const;
  InvariantFactors factors(int n) const;
  bool is_free() const;
  /// Empty matrix for degrees outside the window.
  LocalMatrix act(int v, int n) const;
};

bool actions_commute(const DegreewiseModule& m);

/// Three degree-wise terms (L1, L0, L-1) on a common window.
struct DegreewiseComplex {
  std::array<DegreewiseModule, 3> terms;
  /// d[0][n - lo]: L1_n -> L0_n, d[1][n - lo]: L0_n -> L-1_n.
  std::array<std::vector<LocalMatrix>, 2> d;

  int lo() const { return terms[0].lo; }
  int hi() const { return terms[0].hi; }
  bool composite_vanishes() const;
};

/// Pieces in degrees [lo, hi] of m, everything above hi discarded (the quotient m_{<=hi}).
DegreewiseModule degreewise_window(const PresentedModule& m, int lo, int hi, const Context& ctx);
/// Requires m finite over A with every nonzero piece inside [lo, hi].
DegreewiseModule degreewise_from_presented(const PresentedModule& m, int lo, int hi, const Context& ctx);
/// One generator per basis element, relations from the actions and torsion, then minimalized.
PresentedModule presented_from_degreewise(const DegreewiseModule& m, const Context& ctx);

/// Hom_A(-, A) degree by degree; the pieces must be free.
DegreewiseModule dual(const DegreewiseModule& m);
DegreewiseComplex dual(const DegreewiseComplex& c);

/// The quotient complex c_{<=hi} seen degree-wise on [lo, hi].
DegreewiseComplex degreewise_complex(const Complex3& c, int lo, int hi, const Context& ctx);
/// Back to presented terms, one generator per basis element.
Complex3 complex_from_degreewise(const DegreewiseComplex& c, const Context& ctx);

/// c_{<=r} degree-wise, starting at the lowest generator degree.
DegreewiseComplex truncate_at_most(const Complex3& c, int r, const Context& ctx);
/// c_{<=r} on the generators of c: each term modulo everything of degree > r.
/// The identity on generators is the projection c -> c_{<=r}.
Complex3 quotient_at_most(const Complex3& c, int r, const Context& ctx);
/// c_{>r}: c itself when every generator has degree > r, otherwise the
/// submodules spanned in degrees > r as presented terms.
Complex3 truncate_above(const Complex3& c, int r, const Context& ctx);

/// (c^*)_{>r} for a complex with free terms.
DegreewiseComplex dual_truncated(const Complex3& c, int r, const Context& ctx);

/// Lowest generator degree over all terms (0 when there is none).
int lowest_generator_degree(const Complex3& c);

}  // namespace triadlab
