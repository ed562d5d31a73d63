#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "triadlab/context.hpp"
#include "triadlab/graded_matrix.hpp"
#include "triadlab/presented_module.hpp"

namespace triadlab {

/// Module monomial order. Components with index < priority_block dominate all
/// others (elimination); inside each block either term-over-position or
/// position-over-term, with lower component index ranking higher.
struct ModuleOrder {
  enum class Position { TermOverPosition, PositionOverTerm };
  Position position = Position::TermOverPosition;
  std::size_t priority_block = 0;
};

/// >0 if (ci, mi) > (cj, mj).
int compare_terms(std::size_t ci, const Monomial& mi, std::size_t cj, const Monomial& mj,
                  const ModuleOrder& order);

struct LeadTerm {
  std::size_t comp = 0;
  Monomial mon;
  Scalar coef;
};

bool lead_term(const Vec& v, const ModuleOrder& order, LeadTerm& out);

class GroebnerBasis {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  GroebnerBasis() = default;
  GroebnerBasis(DegreeList ambient, ModuleOrder order) : ambient_(std::move(ambient)), order_(order) {
    by_comp_.resize(ambient_.size());
  }

  const DegreeList& ambient() const { return ambient_; }
  const ModuleOrder& order() const { return order_; }
  const std::vector<Vec>& elements() const { return elems_; }
  const std::vector<LeadTerm>& leads() const { return leads_; }
  std::size_t size() const { return elems_.size(); }

  std::size_t find_divisor(std::size_t comp, const Monomial& m) const;
  /// Reduce the lead term until it is irreducible (or v vanishes).
  void top_reduce(Vec& v) const;
  /// Top-reduce while the lead lies in the first `block` components.
  void top_reduce_block(Vec& v, std::size_t block) const;
  /// Fully reduced remainder.
  Vec normal_form(const Vec& v) const;
  bool contains(const Vec& v) const;
  /// Every S-vector of the basis reduces to zero.
  bool buchberger_criterion_holds() const;

  void push(Vec v);  // v must be nonzero; made monic
  void interreduce();

 private:
  DegreeList ambient_;
  ModuleOrder order_;
  std::vector<Vec> elems_;
  std::vector<LeadTerm> leads_;
  std::vector<std::vector<std::size_t>> by_comp_;
};

/// S-vector of two basis elements with leads in the same component.
Vec s_vector(const Vec& f, const LeadTerm& lf, const Vec& g, const LeadTerm& lg);

/// Reduced Groebner basis of the submodule generated by gens (Buchberger, normal strategy).
GroebnerBasis groebner_basis(const DegreeList& ambient, const std::vector<Vec>& gens,
                             const ModuleOrder& order, const Context& ctx);

Vec normal_form(const Vec& v, const GroebnerBasis& gb);

/// Columns generate all syzygies of the columns of gens (not minimalized).
GradedMatrix syzygies(const GradedMatrix& gens, const Context& ctx);

/// Groebner basis of the relation module of m, computed once per module value.
const GroebnerBasis& relation_gb(const PresentedModule& m, const Context& ctx);

/// Expresses vectors as combinations gens * c modulo rel. When only an A-unit
/// multiple u*v is reachable, reports that u.
class Lifter {
 public:
  Lifter(const GradedMatrix& gens, const GradedMatrix& rel, const Context& ctx);
  Lifter(const GradedMatrix& gens, const Context& ctx)
      : Lifter(gens, GradedMatrix({}, gens.target()), ctx) {}

  /// Coefficients c (one per gens column) with gens*c = u*v mod rel; u is
  /// 1 except when a nonconstant A-unit is needed. Returns false if v is not
  /// in the span over A.
  bool lift(const Vec& v, Vec& c, Poly& u) const;
  bool contains(const Vec& v) const;

 private:
  GradedMatrix gens_;
  GradedMatrix rel_;
  Context ctx_;
  GroebnerBasis gb_;
};

}  // namespace triadlab
