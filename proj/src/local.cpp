#include "triadlab/local.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "triadlab/resolution.hpp"

namespace triadlab {

LocalMatrix local_identity(std::size_t n, const Context& ctx) {
  LocalMatrix m = local_zero(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = CoefElem::scalar(ctx.one());
  return m;
}

LocalMatrix local_zero(std::size_t rows, std::size_t cols) {
  return LocalMatrix(rows, std::vector<CoefElem>(cols));
}

LocalMatrix local_mul(const LocalMatrix& x, const LocalMatrix& y, std::size_t inner) {
  std::size_t rows = x.size(), cols = y.empty() ? 0 : y[0].size();
  LocalMatrix r = local_zero(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (x[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (!y[k][j].is_zero()) r[i][j] = r[i][j] + x[i][k] * y[k][j];
    }
  return r;
}

LocalMatrix local_transpose(const LocalMatrix& m, std::size_t rows, std::size_t cols) {
  LocalMatrix t = local_zero(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

std::string InvariantFactors::str() const {
  std::ostringstream os;
  os << "rank " << rank;
  if (!torsion.empty()) {
    os << ", torsion (";
    for (std::size_t i = 0; i < torsion.size(); ++i) os << (i ? "," : "") << "a^" << torsion[i];
    os << ")";
  }
  return os.str();
}

SmithForm smith_normal_form(LocalMatrix m, std::size_t rows, std::size_t cols, const Context& ctx) {
  SmithForm sf;
  sf.U = local_identity(rows, ctx);
  sf.Uinv = local_identity(rows, ctx);
  sf.V = local_identity(cols, ctx);
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    int best = -1;
    std::size_t pi = 0, pj = 0;
    for (std::size_t j = t; j < cols && best != 0; ++j)
      for (std::size_t i = t; i < rows; ++i) {
        if (m[i][j].is_zero()) continue;
        int v = m[i][j].valuation();
        if (best < 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
          if (v == 0) break;
        }
      }
    if (best < 0) break;
    if (pi != t) {
      std::swap(m[pi], m[t]);
      std::swap(sf.U[pi], sf.U[t]);
      for (auto& row : sf.Uinv) std::swap(row[pi], row[t]);
    }
    if (pj != t) {
      for (auto& row : m) std::swap(row[pj], row[t]);
      for (auto& row : sf.V) std::swap(row[pj], row[t]);
    }
    const CoefElem p = m[t][t];
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (m[i][t].is_zero()) continue;
      CoefElem f = m[i][t] / p;
      for (std::size_t j = t; j < cols; ++j)
        if (!m[t][j].is_zero()) m[i][j] = m[i][j] - f * m[t][j];
      for (std::size_t j = 0; j < rows; ++j)
        if (!sf.U[t][j].is_zero()) sf.U[i][j] = sf.U[i][j] - f * sf.U[t][j];
      for (std::size_t k = 0; k < rows; ++k)
        if (!sf.Uinv[k][i].is_zero()) sf.Uinv[k][t] = sf.Uinv[k][t] + f * sf.Uinv[k][i];
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (m[t][j].is_zero()) continue;
      CoefElem f = m[t][j] / p;
      m[t][j] = CoefElem();
      for (std::size_t k = 0; k < cols; ++k)
        if (!sf.V[k][t].is_zero()) sf.V[k][j] = sf.V[k][j] - f * sf.V[k][t];
    }
    sf.diagonal.push_back(p);
  }
  int nonzero = static_cast<int>(sf.diagonal.size());
  for (const auto& d : sf.diagonal) {
    if (d.valuation() == 0)
      ++sf.unit_factors;
    else
      sf.factors.torsion.push_back(d.valuation());
  }
  sf.factors.rank = static_cast<int>(rows) - nonzero;
  return sf;
}

std::vector<Monomial> monomials_of_degree(int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  for (int x = d; x >= 0; --x)
    for (int y = d - x; y >= 0; --y)
      for (int z = d - x - y; z >= 0; --z) {
        Monomial m;
        m.e[kX] = static_cast<std::uint16_t>(x);
        m.e[kY] = static_cast<std::uint16_t>(y);
        m.e[kZ] = static_cast<std::uint16_t>(z);
        m.e[kT] = static_cast<std::uint16_t>(d - x - y - z);
        out.push_back(m);
      }
  return out;
}

std::size_t DegreePiece::index_of(std::size_t gen, const Monomial& mon) const {
  for (std::size_t i = 0; i < monomials.size(); ++i)
    if (monomials[i].first == gen && monomials[i].second == mon) return i;
  return static_cast<std::size_t>(-1);
}

namespace {

using MonKey = std::pair<std::size_t, std::array<std::uint16_t, kNumVars>>;

std::vector<CoefElem> monomial_coordinates(const Vec& v, const std::map<MonKey, std::size_t>& index,
                                           std::size_t size, const Context& ctx) {
  std::vector<UPoly> acc(size);
  for (std::size_t g = 0; g < v.size(); ++g) {
    for (const auto& t : v[g].terms()) {
      auto it = index.find({g, t.m.without_a().e});
      if (it == index.end())
        throw DomainError(ErrorCode::Internal, "vector outside the degree piece");
      acc[it->second] = acc[it->second] + UPoly::monomial(t.c, t.m.e[kA]);
    }
  }
  (void)ctx;
  std::vector<CoefElem> out(size);
  for (std::size_t i = 0; i < size; ++i)
    if (!acc[i].is_zero()) out[i] = CoefElem(acc[i]);
  return out;
}

std::map<MonKey, std::size_t> monomial_index(const DegreePiece& p) {
  std::map<MonKey, std::size_t> idx;
  for (std::size_t i = 0; i < p.monomials.size(); ++i) idx[{p.monomials[i].first, p.monomials[i].second.e}] = i;
  return idx;
}

}  // namespace

std::vector<CoefElem> DegreePiece::coordinates(const Vec& v) const {
  Context ctx;
  auto idx = monomial_index(*this);
  std::vector<CoefElem> x = monomial_coordinates(v, idx, monomials.size(), ctx);
  std::vector<CoefElem> out(basis_rows.size());
  for (std::size_t b = 0; b < basis_rows.size(); ++b) {
    CoefElem s;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (!x[k].is_zero() && !U[basis_rows[b]][k].is_zero()) s = s + U[basis_rows[b]][k] * x[k];
    if (exponents[b] > 0 && !s.is_zero()) s = CoefElem(s.truncated(exponents[b]));
    out[b] = s;
  }
  return out;
}

Vec DegreePiece::basis_vector(std::size_t i, const Context& ctx) const {
  std::size_t col = basis_rows[i];
  UPoly den(ctx.one());
  for (std::size_t k = 0; k < monomials.size(); ++k)
    if (!Uinv[k][col].is_zero() && !Uinv[k][col].is_polynomial()) {
      UPoly q, r, g = UPoly::gcd(den, Uinv[k][col].den());
      (den * Uinv[k][col].den()).divmod(g, q, r);
      den = q;
    }
  std::size_t rank = 0;
  for (const auto& m : monomials) rank = std::max(rank, m.first + 1);
  Vec v(rank);
  for (std::size_t k = 0; k < monomials.size(); ++k) {
    const CoefElem& e = Uinv[k][col];
    if (e.is_zero()) continue;
    UPoly q, r;
    (e.num() * den).divmod(e.den().is_zero() ? UPoly(ctx.one()) : e.den(), q, r);
    Poly c = Poly::from_upoly(q);
    v[monomials[k].first] += c * Poly(ctx.one(), monomials[k].second);
  }
  return v;
}

DegreePiece degree_piece_full(const PresentedModule& m, int n, const Context& ctx) {
  DegreePiece p;
  p.degree = n;
  const DegreeList& g = m.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (const auto& mon : monomials_of_degree(n - g[i])) p.monomials.push_back({i, mon});
  auto idx = monomial_index(p);
  const GradedMatrix& rel = m.relations();
  std::vector<std::vector<CoefElem>> cols;
  for (std::size_t j = 0; j < rel.cols(); ++j) {
    if (vec_is_zero(rel.column(j))) continue;
    for (const auto& mu : monomials_of_degree(n - rel.source()[j])) {
      Vec v = vec_scale(rel.column(j), Poly(ctx.one(), mu));
      cols.push_back(monomial_coordinates(v, idx, p.monomials.size(), ctx));
    }
  }
  const std::size_t rows = p.monomials.size(), ncols = cols.size();
  LocalMatrix mat = local_zero(rows, ncols);
  for (std::size_t j = 0; j < ncols; ++j)
    for (std::size_t i = 0; i < rows; ++i) mat[i][j] = cols[j][i];
  SmithForm sf = smith_normal_form(std::move(mat), rows, ncols, ctx);
  p.factors = sf.factors;
  p.U = std::move(sf.U);
  p.Uinv = std::move(sf.Uinv);
  for (std::size_t i = sf.diagonal.size(); i < rows; ++i) {
    p.basis_rows.push_back(i);
    p.exponents.push_back(0);
  }
  for (std::size_t i = 0; i < sf.diagonal.size(); ++i) {
    int v = sf.diagonal[i].valuation();
    if (v > 0) {
      p.basis_rows.push_back(i);
      p.exponents.push_back(v);
    }
  }
  return p;
}

InvariantFactors degree_piece(const PresentedModule& m, int n, const Context& ctx) {
  return degree_piece_full(m, n, ctx).factors;
}

std::string Finiteness::str() const {
  switch (verdict) {
    case Verdict::NotFinite: return "not finite";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::Finite:
      if (!top) return "finite (zero)";
      return "finite, degrees " + std::to_string(*bottom) + ".." + std::to_string(*top);
  }
  return "";
}

namespace {

GroebnerBasis special_gb(const PresentedModule& m, const Context& ctx) {
  std::vector<Vec> gens = m.relations().columns();
  Poly a(ctx.one(), Monomial::var(kA));
  for (std::size_t i = 0; i < m.num_generators(); ++i) {
    Vec v(m.num_generators());
    v[i] = a;
    gens.push_back(std::move(v));
  }
  return groebner_basis(m.generators(), gens, ModuleOrder{}, ctx);
}

// Standard monomials of component `comp` (a-free), grouped by degree, up to max_deg.
void standard_monomials(const GroebnerBasis& gb, std::size_t comp, int max_deg,
                        const std::function<void(const Monomial&)>& visit) {
  for (int d = 0; d <= max_deg; ++d)
    for (const auto& mon : monomials_of_degree(d))
      if (gb.find_divisor(comp, mon) == GroebnerBasis::npos) visit(mon);
}

}  // namespace

Finiteness is_finite_over_A(const PresentedModule& m, int bound, const Context& ctx) {
  Finiteness f;
  GroebnerBasis gb = special_gb(m, ctx);
  const DegreeList& g = m.generators();
  for (std::size_t c = 0; c < g.size(); ++c) {
    if (gb.find_divisor(c, Monomial{}) != GroebnerBasis::npos) continue;
    int power[5] = {0, 0, 0, 0, 0};
    for (std::size_t k = 0; k < gb.size(); ++k) {
      const LeadTerm& lt = gb.leads()[k];
      if (lt.comp != c || lt.mon.e[kA] != 0) continue;
      int nz = 0, var = 0;
      for (int v = 1; v < kNumVars; ++v)
        if (lt.mon.e[v]) {
          ++nz;
          var = v;
        }
      if (nz == 1 && (power[var] == 0 || lt.mon.e[var] < power[var])) power[var] = lt.mon.e[var];
    }
    for (int v = 1; v < kNumVars; ++v)
      if (power[v] == 0) {
        f.verdict = Finiteness::Verdict::NotFinite;
        f.top.reset();
        f.bottom.reset();
        return f;
      }
    int max_deg = power[1] + power[2] + power[3] + power[4] - 4;
    int top_here = 0;
    standard_monomials(gb, c, max_deg, [&](const Monomial& mon) { top_here = std::max(top_here, mon.degree()); });
    int lo = g[c], hi = g[c] + top_here;
    f.bottom = f.bottom ? std::min(*f.bottom, lo) : lo;
    f.top = f.top ? std::max(*f.top, hi) : hi;
  }
  if (f.top && *f.top - *f.bottom + 1 > bound) f.verdict = Finiteness::Verdict::Inconclusive;
  return f;
}

std::vector<InvariantFactors> hilbert_data(const PresentedModule& m, int lo, int hi, const Context& ctx) {
  std::vector<InvariantFactors> out;
  for (int n = lo; n <= hi; ++n) out.push_back(degree_piece(m, n, ctx));
  return out;
}

std::vector<int> special_hilbert(const PresentedModule& m, int lo, int hi, const Context& ctx) {
  GroebnerBasis gb = special_gb(m, ctx);
  const DegreeList& g = m.generators();
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) {
    int count = 0;
    for (std::size_t c = 0; c < g.size(); ++c)
      for (const auto& mon : monomials_of_degree(n - g[c]))
        if (gb.find_divisor(c, mon) == GroebnerBasis::npos) ++count;
    out.push_back(count);
  }
  return out;
}

std::vector<int> generic_hilbert(const PresentedModule& m, int lo, int hi, const Context& ctx) {
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) out.push_back(degree_piece(m, n, ctx).rank);
  return out;
}

GradedMatrix colon_a(const GradedMatrix& s, const Context& ctx) {
  const DegreeList& amb = s.target();
  GradedMatrix ai(amb, amb);
  Poly a(ctx.one(), Monomial::var(kA));
  for (std::size_t i = 0; i < amb.size(); ++i) ai.set(i, i, a);
  GradedMatrix syz = syzygies(ai.hconcat(s), ctx);
  std::vector<std::size_t> head;
  for (std::size_t i = 0; i < amb.size(); ++i) head.push_back(i);
  GradedMatrix x = syz.select_rows(head);
  // columns of x are vectors of the ambient; relabel as a matrix into amb
  std::vector<Vec> cols;
  DegreeList src;
  for (std::size_t j = 0; j < x.cols(); ++j) {
    if (vec_is_zero(x.column(j))) continue;
    cols.push_back(x.column(j));
    src.push_back(vec_degree(x.column(j), amb));
  }
  return GradedMatrix(src, amb, cols);
}

TorsionPart torsion_saturation(const PresentedModule& m, const Context& ctx) {
  GradedMatrix s = m.relations();
  for (int iter = 0;; ++iter) {
    if (iter > ctx.limits.max_degree) throw ResourceAbort("torsion saturation did not stabilize");
    GroebnerBasis gb = groebner_basis(s.target(), s.columns(), ModuleOrder{}, ctx);
    GradedMatrix t = colon_a(s, ctx);
    bool stable = true;
    for (const auto& c : t.columns())
      if (!gb.contains(c)) {
        stable = false;
        break;
      }
    if (stable) break;
    s = t;
  }
  TorsionPart out;
  ImagePresentation ip = image_presentation(s, m.relations(), ctx);
  out.inclusion = ip.generators;
  out.torsion = ip.module();
  out.quotient = PresentedModule(s);
  return out;
}

std::vector<Poly> annihilator(const PresentedModule& m, const Context& ctx) {
  std::vector<Poly> ideal{Poly(ctx.one())};
  const DegreeList& g = m.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    GradedMatrix e({g[i]}, g, {vec_unit(g.size(), i, ctx.one())});
    GradedMatrix syz = syzygies(e.hconcat(m.relations()), ctx);
    std::vector<Poly> ann;
    for (const auto& c : syz.columns())
      if (!c[0].is_zero()) ann.push_back(c[0]);
    // intersect
    DegreeList src;
    std::vector<Vec> cols;
    for (const auto& p : ideal) {
      src.push_back(p.degree());
      cols.push_back({p});
    }
    std::size_t k = cols.size();
    for (const auto& p : ann) {
      src.push_back(p.degree());
      cols.push_back({p});
    }
    GradedMatrix row(src, {0}, cols);
    GradedMatrix z = syzygies(row, ctx);
    std::vector<Poly> next;
    for (const auto& c : z.columns()) {
      Poly s;
      for (std::size_t j = 0; j < k; ++j) s += c[j] * ideal[j];
      if (!s.is_zero()) next.push_back(s);
    }
    if (ann.empty()) next.clear();
    ideal = next;
  }
  std::vector<Vec> vs;
  for (const auto& p : ideal) vs.push_back({p});
  GroebnerBasis gb = groebner_basis({0}, vs, ModuleOrder{}, ctx);
  std::vector<Poly> out;
  for (const auto& v : gb.elements()) out.push_back(v[0]);
  return out;
}

bool same_ideal(const std::vector<Poly>& x, const std::vector<Poly>& y, const Context& ctx) {
  auto gb_of = [&](const std::vector<Poly>& ps) {
    std::vector<Vec> vs;
    for (const auto& p : ps) vs.push_back({p});
    return groebner_basis({0}, vs, ModuleOrder{}, ctx);
  };
  GroebnerBasis gx = gb_of(x), gy = gb_of(y);
  for (const auto& p : x)
    if (!gy.contains({p})) return false;
  for (const auto& p : y)
    if (!gx.contains({p})) return false;
  return true;
}

PresentedModule special_fiber(const PresentedModule& m, const Context& ctx) {
  const DegreeList& g = m.generators();
  GradedMatrix ai(g, g);
  Poly a(ctx.one(), Monomial::var(kA));
  for (std::size_t i = 0; i < g.size(); ++i) ai.set(i, i, a);
  return PresentedModule(m.relations().hconcat(ai));
}

}  // namespace triadlab
