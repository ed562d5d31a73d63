#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triadlab/groebner.hpp"
#include "triadlab/upoly.hpp"

namespace triadlab {

/// Dense matrix over A, row-major.
using LocalMatrix = std::vector<std::vector<CoefElem>>;

LocalMatrix local_identity(std::size_t n, const Context& ctx);
LocalMatrix local_zero(std::size_t rows, std::size_t cols);
LocalMatrix local_mul(const LocalMatrix& x, const LocalMatrix& y, std::size_t inner);
LocalMatrix local_transpose(const LocalMatrix& m, std::size_t rows, std::size_t cols);

/// The A-module A^rank + sum A/(a^torsion[i]); torsion is nondecreasing.
struct InvariantFactors {
  int rank = 0;
  std::vector<int> torsion;

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  /// dim over k after tensoring with k = A/(a).
  int special_dim() const { return rank + static_cast<int>(torsion.size()); }
  bool operator==(const InvariantFactors&) const = default;
  std::string str() const;
};

/// U * M * V = D with D diagonal, U and V invertible over A. The columns of M
/// are relations, so the factors describe coker M (rows - units - torsion is free).
struct SmithForm {
  InvariantFactors factors;
  std::vector<CoefElem> diagonal;  // nondecreasing valuation
  int unit_factors = 0;
  LocalMatrix U, Uinv, V;
};

SmithForm smith_normal_form(LocalMatrix m, std::size_t rows, std::size_t cols, const Context& ctx);

/// Degree-n piece of a presented module as an A-module, with an explicit basis.
struct DegreePiece {
  int degree = 0;
  InvariantFactors factors;
  /// Monomial basis of F_n: (generator index, monomial in X,Y,Z,T).
  std::vector<std::pair<std::size_t, Monomial>> monomials;
  /// Coordinates in the piece basis: row i of U for each kept position.
  LocalMatrix U, Uinv;
  /// SNF positions forming the basis: free ones first, then torsion.
  std::vector<std::size_t> basis_rows;
  std::vector<int> exponents;  // 0 for free, m for A/(a^m)

  std::size_t dim() const { return basis_rows.size(); }
  /// Monomial-basis index of (gen, mon), or npos.
  std::size_t index_of(std::size_t gen, const Monomial& mon) const;
  /// Piece coordinates of a homogeneous vector of degree n (torsion coordinates truncated).
  std::vector<CoefElem> coordinates(const Vec& v) const;
  /// The vector in F_n for basis element i, cleared of denominators (up to an A-unit).
  Vec basis_vector(std::size_t i, const Context& ctx) const;
};

std::vector<Monomial> monomials_of_degree(int d);

DegreePiece degree_piece_full(const PresentedModule& m, int n, const Context& ctx);
InvariantFactors degree_piece(const PresentedModule& m, int n, const Context& ctx);

struct Finiteness {
  enum class Verdict { Finite, NotFinite, Inconclusive };
  Verdict verdict = Verdict::Finite;
  std::optional<int> bottom;  // lowest degree with a nonzero piece
  std::optional<int> top;     // highest degree with a nonzero piece
  std::string str() const;
};

/// Exact over A via the Groebner basis of [Rel | a]: each X,Y,Z,T needs a pure
/// power in the leading module of every component. INCONCLUSIVE when the
/// nilpotency index would exceed the bound.
Finiteness is_finite_over_A(const PresentedModule& m, int bound, const Context& ctx);

/// Hilbert data over [lo, hi].
std::vector<InvariantFactors> hilbert_data(const PresentedModule& m, int lo, int hi, const Context& ctx);
/// dim_k of (m tensor k)_n and rank over K = Frac(A) for n in [lo, hi].
std::vector<int> special_hilbert(const PresentedModule& m, int lo, int hi, const Context& ctx);
std::vector<int> generic_hilbert(const PresentedModule& m, int lo, int hi, const Context& ctx);

struct TorsionPart {
  GradedMatrix inclusion;   // generators of the a-power torsion, as vectors of the ambient
  PresentedModule torsion;  // presentation on those generators
  PresentedModule quotient; // m / torsion
};

/// The submodule (0 :_m a^infinity), via the chain of colons (Rel : a^i).
TorsionPart torsion_saturation(const PresentedModule& m, const Context& ctx);

/// {x : a x in span(s)} for a submodule of a free module.
GradedMatrix colon_a(const GradedMatrix& s, const Context& ctx);
/// Generators of ann(m), an ideal of B.
std::vector<Poly> annihilator(const PresentedModule& m, const Context& ctx);
/// Equality of ideals of B, certified by Groebner bases.
bool same_ideal(const std::vector<Poly>& x, const std::vector<Poly>& y, const Context& ctx);
/// m tensor k: relations plus a times every generator.
PresentedModule special_fiber(const PresentedModule& m, const Context& ctx);

}  // namespace triadlab
