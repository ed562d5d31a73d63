#pragma once

#include <string>
#include <vector>

#include "triadlab/chiffres.hpp"
#include "triadlab/context.hpp"
#include "triadlab/poly.hpp"

namespace triadlab {

/// Element of a free module: one Poly per basis vector.
using Vec = std::vector<Poly>;

Vec vec_zero(std::size_t rank);
Vec vec_unit(std::size_t rank, std::size_t i, const Scalar& one);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& x, const Vec& y);
Vec vec_sub(const Vec& x, const Vec& y);
Vec vec_scale(const Vec& v, const Poly& p);
/// Degree of a homogeneous vector in a free module with the given generator degrees;
/// returns false through `ok` if v is zero or not homogeneous.
int vec_degree(const Vec& v, const DegreeList& degrees, bool* ok = nullptr);
std::string vec_str(const Vec& v);

/// Homogeneous matrix between free modules; column j is the image of source basis vector j.
class GradedMatrix {
 public:
  GradedMatrix() = default;
  GradedMatrix(DegreeList source, DegreeList target);
  GradedMatrix(DegreeList source, DegreeList target, std::vector<Vec> columns);
  static GradedMatrix identity(const DegreeList& degrees, const Context& ctx);
  static GradedMatrix zero(const DegreeList& source, const DegreeList& target) {
    return GradedMatrix(source, target);
  }

  std::size_t rows() const { return target_.size(); }
  std::size_t cols() const { return source_.size(); }
  const DegreeList& source() const { return source_; }
  const DegreeList& target() const { return target_; }
  Chiffres source_chiffres() const { return Chiffres(source_); }
  Chiffres target_chiffres() const { return Chiffres(target_); }

  const Vec& column(std::size_t j) const { return cols_[j]; }
  const std::vector<Vec>& columns() const { return cols_; }
  const Poly& at(std::size_t i, std::size_t j) const { return cols_[j][i]; }
  void set(std::size_t i, std::size_t j, Poly p) { cols_[j][i] = std::move(p); }
  /// Required degree of entry (i, j).
  int slot_degree(std::size_t i, std::size_t j) const { return source_[j] - target_[i]; }

  bool is_zero() const;
  Vec apply(const Vec& v) const;
  /// Composition: (*this) after o.
  GradedMatrix operator*(const GradedMatrix& o) const;
  GradedMatrix operator-() const;
  GradedMatrix operator+(const GradedMatrix& o) const;
  bool operator==(const GradedMatrix& o) const;

  GradedMatrix select_columns(const std::vector<std::size_t>& idx) const;
  GradedMatrix select_rows(const std::vector<std::size_t>& idx) const;
  /// [this | o]: same target.
  GradedMatrix hconcat(const GradedMatrix& o) const;
  /// Rows of this stacked above rows of o: same source.
  GradedMatrix vconcat(const GradedMatrix& o) const;
  GradedMatrix direct_sum(const GradedMatrix& o) const;
  GradedMatrix specialize_a(const Scalar& alpha) const;
  GradedMatrix scaled(const Poly& p) const;

  std::string str() const;

 private:
  DegreeList source_;
  DegreeList target_;
  std::vector<Vec> cols_;
};

struct Violation {
  std::size_t row;
  std::size_t col;
  int required_degree;
  std::string message;
};

/// Every entry violating the degree rule; empty means valid.
std::vector<Violation> graded_matrix_check(const GradedMatrix& m);

/// Row-major entries "e11, e12; e21, e22" (optional surrounding brackets).
/// Parse errors carry offsets into `text`.
GradedMatrix parse_matrix(const DegreeList& source, const DegreeList& target, std::string_view text,
                          Field field);

/// Throws DomainError(NotHomogeneous) if graded_matrix_check reports anything.
void require_graded(const GradedMatrix& m, const std::string& what);

}  // namespace triadlab
