#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triadlab/complexes.hpp"

namespace triadlab {

/// A certified triad: H and C are finite over A. Free terms make it majeure.
struct Triad {
  Complex3 complex;
  std::string note;

  bool is_majeure() const { return complex.has_free_terms(); }
};

/// NOT_A_COMPLEX, HEART_NOT_FINITE, COKERNEL_NOT_FINITE or INCONCLUSIVE on failure.
Triad triad_validate(Complex3 c, const Context& ctx, std::string note = "");

/// Degree range holding every nonzero piece of H and C (lo > hi when both vanish).
struct DegreeRange {
  int lo = 0, hi = -1;
  bool empty() const { return lo > hi; }
};

DegreeRange support_window(const Triad& t, const Context& ctx);

struct TriadReport {
  std::array<DegreeList, 3> terms;  // L1, L0, L-1
  DegreeList n_generators;
  DegreeRange window;
  std::vector<InvariantFactors> heart, cokernel;  // per degree of the window
  bool modular = false, representable = false, exact = false, elementary = false;
  long c1_n = 0;
  std::vector<int> special, generic;  // dim V(k)_n and dim V(K)_n
};

TriadReport triad_invariants(const Triad& t, const Context& ctx);

/// c1 = -sum (-1)^i (twists of F_i) over a free resolution.
long module_c1(const PresentedModule& m, const Context& ctx);

enum class FiberPoint { Special, Generic, Base };

struct FiberValue {
  FiberPoint point = FiberPoint::Special;
  PresentedModule module;  // h0(L tensor k), H, or H (generic values are ranks of H)
  DegreeRange window;
  std::vector<int> hilbert;  // dims over k or K; for Base, the special dims of H
  std::vector<InvariantFactors> pieces;  // Base only
};

FiberValue fiber_functor(const Triad& t, FiberPoint point, const Context& ctx);

/// f_i maps the generators of the source term i to those of the target term i.
struct Morphism {
  GradedMatrix f1, f0, fm1;

  static Morphism identity(const Complex3& c, const Context& ctx);
};

/// g after f.
Morphism compose(const Morphism& g, const Morphism& f);

struct PsiReport {
  bool heart_injective = false, heart_surjective = false;
  bool cokernel_injective = false, quotient_flat = false;
  /// Epimorphism on h1(L tensor Q) for Q = A and Q = k.
  bool kernel_surjective = false, special_kernel_surjective = false;

  bool is_psi() const { return heart_injective && heart_surjective && cokernel_injective && quotient_flat; }
  bool is_strong() const { return is_psi() && kernel_surjective && special_kernel_surjective; }
};

/// f : s -> t. Throws NOT_A_MORPHISM if f is not a morphism of complexes.
PsiReport psi_check(const Complex3& s, const Complex3& t, const Morphism& f, const Context& ctx);

struct TriadMap {
  Triad triad;
  Morphism map;  // from triad to the input
};

/// A majeure triad with a psi onto the input; identity when the input is majeure.
TriadMap resolution_majeure(const Triad& t, const Context& ctx);
/// Cokernel replaced by its a-torsion, with a psi into the input.
TriadMap elementary_reduction(const Triad& t, const Context& ctx);

/// Mineure input with free pieces: the full dual. Otherwise (L^*)_{>r} of a
/// majeure form with r = -max(top H, top C) - 1.
Triad dual_triad(const Triad& t, const Context& ctx);

/// M1 in J in M0. M0 is presented over k[X,Y,Z,T] (no a); J and M1 are
/// generators given as vectors on the generators of M0.
struct SubquotientDatum {
  PresentedModule M0;
  GradedMatrix J, M1;
};

/// M1 tensor A --a j--> M0 tensor A --a p--> M_{-1} tensor A. INVALID_DRAPEAU on bad data.
Triad trivial_triad(const SubquotientDatum& d, const Context& ctx);

/// An element of Ext^2(C, H) as u_hat : P2 -> H with u_hat delta2 = 0 in H.
struct ExtCocycle {
  GradedMatrix delta0, delta1, delta2;  // P1 -> P0, P2 -> P1, P3 -> P2
  PresentedModule H;
  GradedMatrix u_hat;  // generators of P2 -> generators of H

  /// delta2 computed as the syzygies of delta1.
  static ExtCocycle from_resolution(GradedMatrix delta0, GradedMatrix delta1, PresentedModule H,
                                    GradedMatrix u_hat, const Context& ctx);
  /// The minimal resolution of C in the order free_resolution produces.
  static ExtCocycle from_module(const PresentedModule& C, PresentedModule H, GradedMatrix u_hat,
                                const Context& ctx);
  PresentedModule C() const { return PresentedModule(delta0); }
};

/// SHAPE_MISMATCH on bad shapes; true iff every column of u_hat delta2 vanishes in H.
bool cocycle_check(const ExtCocycle& e, const Context& ctx);
bool is_surjective(const ExtCocycle& e, const Context& ctx);

/// L-1 = P0, L0 = P1 + Q0, L1 = a minimal cover of the image of P2 + Q1.
Triad cone_triad(const ExtCocycle& e, const Context& ctx);
/// L-1 = P0, L0 = P1, L1 = a minimal cover of delta1(ker u_hat). NOT_SURJECTIVE unless u_hat is onto H.
Triad compact_cone_triad(const ExtCocycle& e, const Context& ctx);

struct Subquotient {
  SubquotientDatum datum;
  PresentedModule J, M1, M, Mm1, MA;
  /// M_A tensor k and J / M1 have the same Hilbert function; M_{-1} matches
  /// the number of torsion factors of C in every degree.
  bool consistent = false;
};

Subquotient subquotient_of(const Triad& t, const Context& ctx);

}  // namespace triadlab
