#include "triadlab/graded_matrix.hpp"

#include <cctype>
#include <sstream>

namespace triadlab {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotAComplex: return "NOT_A_COMPLEX";
    case ErrorCode::HeartNotFinite: return "HEART_NOT_FINITE";
    case ErrorCode::CokernelNotFinite: return "COKERNEL_NOT_FINITE";
    case ErrorCode::Inconclusive: return "INCONCLUSIVE";
    case ErrorCode::RankMismatch: return "RANK_MISMATCH";
    case ErrorCode::NonInteger: return "NON_INTEGER";
    case ErrorCode::NotAMorphism: return "NOT_A_MORPHISM";
    case ErrorCode::InvalidDrapeau: return "INVALID_DRAPEAU";
    case ErrorCode::NotSurjective: return "NOT_SURJECTIVE";
    case ErrorCode::ShapeMismatch: return "SHAPE_MISMATCH";
    case ErrorCode::NotHomogeneous: return "NOT_HOMOGENEOUS";
    case ErrorCode::NotFinite: return "NOT_FINITE";
    case ErrorCode::NotAdequate: return "NOT_ADEQUATE";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

Vec vec_zero(std::size_t rank) { return Vec(rank); }

Vec vec_unit(std::size_t rank, std::size_t i, const Scalar& one) {
  Vec v(rank);
  v[i] = Poly(one);
  return v;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

Vec vec_add(const Vec& x, const Vec& y) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

Vec vec_sub(const Vec& x, const Vec& y) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

Vec vec_scale(const Vec& v, const Poly& p) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * p;
  return r;
}

int vec_degree(const Vec& v, const DegreeList& degrees, bool* ok) {
  bool found = false;
  bool good = true;
  int deg = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (const auto& t : v[i].terms()) {
      int d = t.m.degree() + degrees[i];
      if (!found) {
        deg = d;
        found = true;
      } else if (d != deg) {
        good = false;
      }
    }
  }
  if (ok) *ok = found && good;
  return deg;
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

GradedMatrix::GradedMatrix(DegreeList source, DegreeList target)
    : source_(std::move(source)), target_(std::move(target)) {
  cols_.assign(source_.size(), Vec(target_.size()));
}

GradedMatrix::GradedMatrix(DegreeList source, DegreeList target, std::vector<Vec> columns)
    : source_(std::move(source)), target_(std::move(target)), cols_(std::move(columns)) {
  if (cols_.size() != source_.size())
    throw DomainError(ErrorCode::ShapeMismatch, "column count differs from source rank");
  for (const auto& c : cols_)
    if (c.size() != target_.size())
      throw DomainError(ErrorCode::ShapeMismatch, "column length differs from target rank");
}

GradedMatrix GradedMatrix::identity(const DegreeList& degrees, const Context& ctx) {
  GradedMatrix m(degrees, degrees);
  for (std::size_t i = 0; i < degrees.size(); ++i) m.cols_[i][i] = Poly(ctx.one());
  return m;
}

bool GradedMatrix::is_zero() const {
  for (const auto& c : cols_)
    if (!vec_is_zero(c)) return false;
  return true;
}

Vec GradedMatrix::apply(const Vec& v) const {
  Vec r(rows());
  for (std::size_t j = 0; j < cols(); ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows(); ++i)
      if (!cols_[j][i].is_zero()) r[i] += cols_[j][i] * v[j];
  }
  return r;
}

GradedMatrix GradedMatrix::operator*(const GradedMatrix& o) const {
  if (o.rows() != cols())
    throw DomainError(ErrorCode::ShapeMismatch, "composition of incompatible matrices");
  GradedMatrix r(o.source_, target_);
  for (std::size_t j = 0; j < o.cols(); ++j) r.cols_[j] = apply(o.cols_[j]);
  return r;
}

GradedMatrix GradedMatrix::operator-() const {
  GradedMatrix r = *this;
  for (auto& c : r.cols_)
    for (auto& p : c) p = -p;
  return r;
}

GradedMatrix GradedMatrix::operator+(const GradedMatrix& o) const {
  if (o.rows() != rows() || o.cols() != cols())
    throw DomainError(ErrorCode::ShapeMismatch, "sum of matrices of different shapes");
  GradedMatrix r = *this;
  for (std::size_t j = 0; j < cols(); ++j) r.cols_[j] = vec_add(cols_[j], o.cols_[j]);
  return r;
}

bool GradedMatrix::operator==(const GradedMatrix& o) const {
  return source_ == o.source_ && target_ == o.target_ && cols_ == o.cols_;
}

GradedMatrix GradedMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  DegreeList src;
  std::vector<Vec> cs;
  for (auto j : idx) {
    src.push_back(source_[j]);
    cs.push_back(cols_[j]);
  }
  return GradedMatrix(src, target_, cs);
}

GradedMatrix GradedMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  DegreeList tgt;
  for (auto i : idx) tgt.push_back(target_[i]);
  std::vector<Vec> cs;
  for (const auto& c : cols_) {
    Vec v;
    for (auto i : idx) v.push_back(c[i]);
    cs.push_back(std::move(v));
  }
  return GradedMatrix(source_, tgt, cs);
}

GradedMatrix GradedMatrix::hconcat(const GradedMatrix& o) const {
  if (o.target_ != target_) throw DomainError(ErrorCode::ShapeMismatch, "hconcat targets differ");
  DegreeList src = source_;
  src.insert(src.end(), o.source_.begin(), o.source_.end());
  std::vector<Vec> cs = cols_;
  cs.insert(cs.end(), o.cols_.begin(), o.cols_.end());
  return GradedMatrix(src, target_, cs);
}

GradedMatrix GradedMatrix::vconcat(const GradedMatrix& o) const {
  if (o.source_ != source_) throw DomainError(ErrorCode::ShapeMismatch, "vconcat sources differ");
  DegreeList tgt = target_;
  tgt.insert(tgt.end(), o.target_.begin(), o.target_.end());
  std::vector<Vec> cs;
  for (std::size_t j = 0; j < cols(); ++j) {
    Vec v = cols_[j];
    v.insert(v.end(), o.cols_[j].begin(), o.cols_[j].end());
    cs.push_back(std::move(v));
  }
  return GradedMatrix(source_, tgt, cs);
}

GradedMatrix GradedMatrix::direct_sum(const GradedMatrix& o) const {
  DegreeList src = source_, tgt = target_;
  src.insert(src.end(), o.source_.begin(), o.source_.end());
  tgt.insert(tgt.end(), o.target_.begin(), o.target_.end());
  GradedMatrix r(src, tgt);
  for (std::size_t j = 0; j < cols(); ++j)
    for (std::size_t i = 0; i < rows(); ++i) r.cols_[j][i] = cols_[j][i];
  for (std::size_t j = 0; j < o.cols(); ++j)
    for (std::size_t i = 0; i < o.rows(); ++i) r.cols_[cols() + j][rows() + i] = o.cols_[j][i];
  return r;
}

GradedMatrix GradedMatrix::specialize_a(const Scalar& alpha) const {
  GradedMatrix r = *this;
  for (auto& c : r.cols_)
    for (auto& p : c) p = p.specialize_a(alpha);
  return r;
}

GradedMatrix GradedMatrix::scaled(const Poly& p) const {
  GradedMatrix r = *this;
  for (auto& c : r.cols_) c = vec_scale(c, p);
  return r;
}

std::string GradedMatrix::str() const {
  std::ostringstream os;
  os << Chiffres(source_).str() << " -> " << Chiffres(target_).str() << " [";
  for (std::size_t i = 0; i < rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols(); ++j) {
      if (j) os << ", ";
      os << cols_[j][i].str();
    }
  }
  os << "]";
  return os.str();
}

std::vector<Violation> graded_matrix_check(const GradedMatrix& m) {
  std::vector<Violation> out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const Poly& p = m.at(i, j);
      if (p.is_zero()) continue;
      int req = m.slot_degree(i, j);
      if (req < 0) {
        out.push_back({i, j, req, "nonzero entry in a slot of negative degree"});
        continue;
      }
      for (const auto& t : p.terms()) {
        if (t.m.degree() != req) {
          out.push_back({i, j, req,
                         "entry " + p.str() + " is not homogeneous of degree " + std::to_string(req)});
          break;
        }
      }
    }
  }
  return out;
}

GradedMatrix parse_matrix(const DegreeList& source, const DegreeList& target, std::string_view text,
                          Field field) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (begin < end && text[begin] == '[') {
    if (text[end - 1] != ']') throw ParseError("expected ']'", end);
    ++begin;
    --end;
  }
  GradedMatrix m(source, target);
  std::size_t row = 0, col = 0;
  std::size_t start = begin;
  bool blank = true;
  for (std::size_t i = begin; i <= end; ++i) {
    char c = i < end ? text[i] : ';';
    if (c != ',' && c != ';') {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      continue;
    }
    bool empty_matrix = blank && i == end && row == 0 && col == 0;
    if (!empty_matrix) {
      if (row >= target.size()) throw ParseError("too many rows", start);
      if (col >= source.size()) throw ParseError("too many entries in row", start);
      Poly p;
      try {
        p = parse_poly(text.substr(start, i - start), field);
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at position")),
                         start + e.position());
      }
      m.set(row, col, std::move(p));
      ++col;
    }
    if (c == ';' && !empty_matrix) {
      if (col != source.size()) throw ParseError("row has " + std::to_string(col) + " entries, expected " +
                                                     std::to_string(source.size()), start);
      ++row;
      col = 0;
    }
    start = i + 1;
    blank = true;
  }
  if (row != target.size())
    throw ParseError("matrix has " + std::to_string(row) + " rows, expected " +
                         std::to_string(target.size()), end);
  return m;
}

void require_graded(const GradedMatrix& m, const std::string& what) {
  auto v = graded_matrix_check(m);
  if (v.empty()) return;
  const auto& f = v.front();
  throw DomainError(ErrorCode::NotHomogeneous, what + " entry (" + std::to_string(f.row + 1) + "," +
                                                   std::to_string(f.col + 1) + "): " + f.message);
}

}  // namespace triadlab
