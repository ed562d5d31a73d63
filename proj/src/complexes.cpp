#include "triadlab/complexes.hpp"

#include <algorithm>
#include <map>

namespace triadlab {

Complex3 Complex3::free(GradedMatrix d1, GradedMatrix d0) {
  Complex3 c;
  c.L1 = PresentedModule::free(d1.source());
  c.L0 = PresentedModule::free(d1.target());
  c.Lm1 = PresentedModule::free(d0.target());
  c.d1 = std::move(d1);
  c.d0 = std::move(d0);
  return c;
}

const PresentedModule& Complex3::term(int i) const {
  if (i == 1) return L1;
  if (i == 0) return L0;
  return Lm1;
}

bool Complex3::has_free_terms() const { return L1.is_free() && L0.is_free() && Lm1.is_free(); }

bool in_span(const GradedMatrix& v, const GradedMatrix& span, const Context& ctx) {
  if (v.cols() == 0) return true;
  if (span.cols() == 0) return v.is_zero();
  Lifter lifter(span, ctx);
  for (const auto& c : v.columns())
    if (!vec_is_zero(c) && !lifter.contains(c)) return false;
  return true;
}

void validate_complex(const Complex3& c, const Context& ctx) {
  if (c.d1.source() != c.L1.generators() || c.d1.target() != c.L0.generators())
    throw DomainError(ErrorCode::ShapeMismatch, "d1 does not map L1 to L0");
  if (c.d0.source() != c.L0.generators() || c.d0.target() != c.Lm1.generators())
    throw DomainError(ErrorCode::ShapeMismatch, "d0 does not map L0 to L-1");
  require_graded(c.d1, "d1");
  require_graded(c.d0, "d0");
  for (int i : {1, 0, -1}) require_graded(c.term(i).relations(), "relation of L" + std::to_string(i));
  if (!in_span(c.d1 * c.L1.relations(), c.L0.relations(), ctx))
    throw DomainError(ErrorCode::NotAComplex, "d1 does not respect the relations of L1");
  if (!in_span(c.d0 * c.L0.relations(), c.Lm1.relations(), ctx))
    throw DomainError(ErrorCode::NotAComplex, "d0 does not respect the relations of L0");
  if (!in_span(c.d0 * c.d1, c.Lm1.relations(), ctx))
    throw DomainError(ErrorCode::NotAComplex, "d0 d1 is not zero");
}

GradedMatrix preimage_generators(const GradedMatrix& m, const GradedMatrix& rel, const Context& ctx) {
  GradedMatrix syz = syzygies(m.hconcat(rel), ctx);
  std::vector<std::size_t> head;
  for (std::size_t j = 0; j < m.cols(); ++j) head.push_back(j);
  GradedMatrix k = syz.select_rows(head);
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < k.cols(); ++j)
    if (!vec_is_zero(k.column(j))) nz.push_back(j);
  return k.select_columns(nz);
}

PresentedModule submodule_presentation(const GradedMatrix& gens, const GradedMatrix& rel, const Context& ctx) {
  if (gens.cols() == 0) return PresentedModule(GradedMatrix({}, {}));
  return PresentedModule(preimage_generators(gens, rel, ctx));
}

namespace {

GradedMatrix columns_of_identity(const DegreeList& degrees, const std::vector<std::size_t>& idx,
                                 const Context& ctx) {
  return GradedMatrix::identity(degrees, ctx).select_columns(idx);
}

}  // namespace

Homology homology(const Complex3& c, int i, const Context& ctx) {
  Homology h;
  if (i == -1) {
    std::vector<std::size_t> kept;
    h.module = minimal_presentation(PresentedModule(c.d0.hconcat(c.Lm1.relations())), ctx, &kept);
    h.generators = columns_of_identity(c.Lm1.generators(), kept, ctx);
    return h;
  }
  if (i == 0) {
    GradedMatrix k = preimage_generators(c.d0, c.Lm1.relations(), ctx);
    ImagePresentation ip = image_presentation(k, c.d1.hconcat(c.L0.relations()), ctx);
    h.generators = ip.generators;
    h.module = ip.module();
    return h;
  }
  if (c.L1.is_free() && c.L0.is_free()) {
    KernelPresentation kp = kernel_presentation(c.d1, ctx);
    h.generators = kp.generators;
    h.module = PresentedModule(kp.relations);
    return h;
  }
  GradedMatrix k = preimage_generators(c.d1, c.L0.relations(), ctx);
  ImagePresentation ip = image_presentation(k, c.L1.relations(), ctx, true);
  h.generators = ip.generators;
  h.module = ip.module();
  return h;
}

PresentedModule cokernel_d1(const Complex3& c) { return PresentedModule(c.d1.hconcat(c.L0.relations())); }

Complex3 special_fiber(const Complex3& c, const Context& ctx) {
  Complex3 s = c;
  s.L1 = special_fiber(c.L1, ctx);
  s.L0 = special_fiber(c.L0, ctx);
  s.Lm1 = special_fiber(c.Lm1, ctx);
  return s;
}

Chain Chain::from_matrices(const std::vector<GradedMatrix>& d) {
  Chain c;
  c.d = d;
  for (const auto& m : d) c.terms.push_back(m.target());
  if (!d.empty()) c.terms.push_back(d.back().source());
  return c;
}

bool Chain::is_complex() const {
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    if (!(d[i] * d[i + 1]).is_zero()) return false;
  return true;
}

Chain mapping_cone(const Chain& x, const Chain& y, const std::vector<GradedMatrix>& f) {
  const std::size_t nx = x.terms.size(), ny = y.terms.size();
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k >= nx || k >= ny || f[k].source() != x.terms[k] || f[k].target() != y.terms[k])
      throw DomainError(ErrorCode::ShapeMismatch, "cone map " + std::to_string(k) + " has the wrong shape");
  }
  auto xt = [&](long k) { return k >= 0 && k < static_cast<long>(nx) ? x.terms[k] : DegreeList{}; };
  auto yt = [&](long k) { return k >= 0 && k < static_cast<long>(ny) ? y.terms[k] : DegreeList{}; };
  const long n = static_cast<long>(std::max(nx + 1, ny));
  Chain c;
  for (long k = 0; k < n; ++k) {
    DegreeList t = xt(k - 1), yk = yt(k);
    t.insert(t.end(), yk.begin(), yk.end());
    c.terms.push_back(t);
  }
  for (long k = 0; k + 1 < n; ++k) {
    const DegreeList rx = xt(k - 1), ry = yt(k), cx = xt(k), cy = yt(k + 1);
    GradedMatrix m(c.terms[k + 1], c.terms[k]);
    auto put = [&](const GradedMatrix& b, std::size_t r0, std::size_t c0, bool negate) {
      for (std::size_t j = 0; j < b.cols(); ++j)
        for (std::size_t i = 0; i < b.rows(); ++i)
          if (!b.at(i, j).is_zero()) m.set(r0 + i, c0 + j, negate ? -b.at(i, j) : b.at(i, j));
    };
    if (k >= 1 && static_cast<std::size_t>(k - 1) < x.d.size() && !rx.empty() && !cx.empty())
      put(x.d[k - 1], 0, 0, true);
    if (static_cast<std::size_t>(k) < f.size() && !cx.empty() && !ry.empty()) put(f[k], rx.size(), 0, false);
    if (static_cast<std::size_t>(k) < y.d.size() && !ry.empty() && !cy.empty())
      put(y.d[k], rx.size(), cx.size(), false);
    c.d.push_back(std::move(m));
  }
  return c;
}

std::size_t DegreewiseModule::dim(int n) const {
  if (n < lo || n > hi) return 0;
  return exponents[n - lo].size();
}

InvariantFactors DegreewiseModule::factors(int n) const {
  InvariantFactors f;
  if (n < lo || n > hi) return f;
  for (int e : exponents[n - lo]) {
    if (e == 0)
      ++f.rank;
    else
      f.torsion.push_back(e);
  }
  std::sort(f.torsion.begin(), f.torsion.end());
  return f;
}

bool DegreewiseModule::is_free() const {
  for (const auto& ex : exponents)
    for (int e : ex)
      if (e != 0) return false;
  return true;
}

LocalMatrix DegreewiseModule::act(int v, int n) const {
  if (n < lo || n >= hi) return local_zero(dim(n + 1), dim(n));
  return action[v][n - lo];
}

namespace {

bool equal_mod(const CoefElem& x, const CoefElem& y, int exponent) {
  if (exponent == 0) return x == y;
  return (x - y).is_zero() || (x - y).valuation() >= exponent;
}

LocalMatrix mul(const LocalMatrix& x, const LocalMatrix& y, std::size_t rows, std::size_t inner,
                std::size_t cols) {
  LocalMatrix out = local_zero(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (x[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (!y[k][j].is_zero()) out[i][j] = out[i][j] + x[i][k] * y[k][j];
    }
  return out;
}

}  // namespace

bool actions_commute(const DegreewiseModule& m) {
  for (int n = m.lo; n + 1 < m.hi; ++n) {
    const std::size_t d0 = m.dim(n), d1 = m.dim(n + 1), d2 = m.dim(n + 2);
    for (int v = 0; v < 4; ++v)
      for (int w = v + 1; w < 4; ++w) {
        LocalMatrix x = mul(m.act(v, n + 1), m.act(w, n), d2, d1, d0);
        LocalMatrix y = mul(m.act(w, n + 1), m.act(v, n), d2, d1, d0);
        for (std::size_t i = 0; i < d2; ++i)
          for (std::size_t j = 0; j < d0; ++j)
            if (!equal_mod(x[i][j], y[i][j], m.exponents[n + 2 - m.lo][i])) return false;
      }
  }
  return true;
}

bool DegreewiseComplex::composite_vanishes() const {
  for (int n = lo(); n <= hi(); ++n) {
    const std::size_t a = terms[0].dim(n), b = terms[1].dim(n), c = terms[2].dim(n);
    LocalMatrix x = mul(d[1][n - lo()], d[0][n - lo()], c, b, a);
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < a; ++j)
        if (!equal_mod(x[i][j], CoefElem(), terms[2].exponents[n - lo()][i])) return false;
  }
  return true;
}

namespace {

using MonKey = std::pair<std::size_t, std::array<std::uint16_t, kNumVars>>;
using Sparse = std::map<std::size_t, CoefElem>;  // monomial index -> coefficient

/// Degree pieces of one presented module on a window, with monomial lookup.
struct Window {
  int lo = 0, hi = -1;
  std::vector<DegreePiece> pieces;
  std::vector<std::map<MonKey, std::size_t>> index;

  Window(const PresentedModule& m, int l, int h, const Context& ctx) : lo(l), hi(h) {
    for (int n = lo; n <= hi; ++n) {
      pieces.push_back(degree_piece_full(m, n, ctx));
      std::map<MonKey, std::size_t> idx;
      const auto& mons = pieces.back().monomials;
      for (std::size_t i = 0; i < mons.size(); ++i) idx[{mons[i].first, mons[i].second.e}] = i;
      index.push_back(std::move(idx));
    }
  }

  const DegreePiece& piece(int n) const { return pieces[n - lo]; }

  Sparse basis(int n, std::size_t b) const {
    const DegreePiece& p = piece(n);
    Sparse x;
    for (std::size_t k = 0; k < p.monomials.size(); ++k)
      if (!p.Uinv[k][p.basis_rows[b]].is_zero()) x[k] = p.Uinv[k][p.basis_rows[b]];
    return x;
  }

  std::vector<CoefElem> coordinates(int n, const Sparse& x) const {
    const DegreePiece& p = piece(n);
    std::vector<CoefElem> out(p.dim());
    for (std::size_t b = 0; b < p.dim(); ++b) {
      CoefElem s;
      for (const auto& [k, c] : x)
        if (!p.U[p.basis_rows[b]][k].is_zero()) s = s + p.U[p.basis_rows[b]][k] * c;
      if (p.exponents[b] > 0 && !s.is_zero()) s = CoefElem(s.truncated(p.exponents[b]));
      out[b] = s;
    }
    return out;
  }

  /// Monomial index of (gen, mon) in piece n; throws if absent.
  std::size_t lookup(int n, std::size_t gen, const Monomial& mon) const {
    auto it = index[n - lo].find({gen, mon.e});
    if (it == index[n - lo].end()) throw DomainError(ErrorCode::Internal, "monomial outside the degree piece");
    return it->second;
  }
};

CoefElem coef_of_term(const Term& t) { return CoefElem(UPoly::monomial(t.c, t.m.e[kA])); }

/// d applied to a vector of piece n of the source window, as a vector of piece n of the target.
Sparse apply_map(const GradedMatrix& d, const Window& src, const Window& tgt, int n, const Sparse& x) {
  const DegreePiece& p = src.piece(n);
  Sparse out;
  for (const auto& [k, c] : x) {
    const auto& [g, mon] = p.monomials[k];
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (const auto& t : d.at(i, g).terms()) {
        std::size_t idx = tgt.lookup(n, i, mon * t.m.without_a());
        out[idx] = out[idx] + c * coef_of_term(t);
      }
  }
  return out;
}

LocalMatrix map_matrix(const GradedMatrix& d, const Window& src, const Window& tgt, int n) {
  const std::size_t cols = src.piece(n).dim(), rows = tgt.piece(n).dim();
  LocalMatrix out = local_zero(rows, cols);
  for (std::size_t b = 0; b < cols; ++b) {
    std::vector<CoefElem> y = tgt.coordinates(n, apply_map(d, src, tgt, n, src.basis(n, b)));
    for (std::size_t i = 0; i < rows; ++i) out[i][b] = y[i];
  }
  return out;
}

DegreewiseModule module_of(const Window& w) {
  DegreewiseModule m;
  m.lo = w.lo;
  m.hi = w.hi;
  for (int n = w.lo; n <= w.hi; ++n) m.exponents.push_back(w.piece(n).exponents);
  for (int v = 0; v < 4; ++v) {
    Monomial var = Monomial::var(kX + v);
    for (int n = w.lo; n < w.hi; ++n) {
      const DegreePiece& p = w.piece(n);
      const std::size_t rows = w.piece(n + 1).dim();
      LocalMatrix a = local_zero(rows, p.dim());
      for (std::size_t b = 0; b < p.dim(); ++b) {
        Sparse y;
        for (const auto& [k, c] : w.basis(n, b)) {
          std::size_t idx = w.lookup(n + 1, p.monomials[k].first, p.monomials[k].second * var);
          y[idx] = y[idx] + c;
        }
        std::vector<CoefElem> coords = w.coordinates(n + 1, y);
        for (std::size_t i = 0; i < rows; ++i) a[i][b] = coords[i];
      }
      m.action[v].push_back(std::move(a));
    }
  }
  return m;
}

UPoly lcm(const UPoly& x, const UPoly& y) {
  UPoly g = UPoly::gcd(x, y), q, r;
  (x * y).divmod(g, q, r);
  return q.monic();
}

/// a-polynomial entries of den * e, den a common denominator.
Poly cleared(const CoefElem& e, const UPoly& den) {
  if (e.is_zero()) return Poly();
  UPoly q, r;
  (e.num() * den).divmod(e.den(), q, r);
  return Poly::from_upoly(q);
}

UPoly common_denominator(const LocalMatrix& m, const Context& ctx) {
  UPoly den(ctx.one());
  for (const auto& row : m)
    for (const auto& e : row)
      if (!e.is_zero() && !e.is_polynomial()) den = lcm(den, e.den());
  return den;
}

struct GeneratorIndex {
  DegreeList degrees;
  std::vector<std::size_t> first;  // first generator of each degree
};

GeneratorIndex generator_index(const DegreewiseModule& m) {
  GeneratorIndex g;
  for (int n = m.lo; n <= m.hi; ++n) {
    g.first.push_back(g.degrees.size());
    for (std::size_t b = 0; b < m.dim(n); ++b) g.degrees.push_back(n);
  }
  return g;
}

PresentedModule all_generators(const DegreewiseModule& m, const Context& ctx) {
  GeneratorIndex gi = generator_index(m);
  const std::size_t total = gi.degrees.size();
  DegreeList src;
  std::vector<Vec> cols;
  for (int n = m.lo; n <= m.hi; ++n) {
    const std::size_t base = gi.first[n - m.lo];
    for (std::size_t b = 0; b < m.dim(n); ++b) {
      int e = m.exponents[n - m.lo][b];
      if (e > 0) {
        Vec v(total);
        v[base + b] = Poly(ctx.one(), Monomial::var(kA, e));
        src.push_back(n);
        cols.push_back(std::move(v));
      }
      for (int var = 0; var < 4; ++var) {
        Vec v(total);
        if (n < m.hi) {
          LocalMatrix a = m.act(var, n);
          UPoly den(ctx.one());
          for (std::size_t i = 0; i < a.size(); ++i)
            if (!a[i][b].is_zero() && !a[i][b].is_polynomial()) den = lcm(den, a[i][b].den());
          v[base + b] = Poly(ctx.one(), Monomial::var(kX + var)).mul_upoly(den);
          const std::size_t next = gi.first[n + 1 - m.lo];
          for (std::size_t i = 0; i < a.size(); ++i) v[next + i] = -cleared(a[i][b], den);
        } else {
          v[base + b] = Poly(ctx.one(), Monomial::var(kX + var));
        }
        src.push_back(n + 1);
        cols.push_back(std::move(v));
      }
    }
  }
  return PresentedModule(GradedMatrix(src, gi.degrees, cols));
}

GradedMatrix matrix_from_pieces(const std::vector<LocalMatrix>& pieces, const DegreewiseModule& src,
                                const DegreewiseModule& tgt, const Context& ctx) {
  GeneratorIndex gs = generator_index(src), gt = generator_index(tgt);
  UPoly den(ctx.one());
  for (const auto& p : pieces) den = lcm(den, common_denominator(p, ctx));
  GradedMatrix out(gs.degrees, gt.degrees);
  for (int n = src.lo; n <= src.hi; ++n) {
    const LocalMatrix& p = pieces[n - src.lo];
    for (std::size_t b = 0; b < src.dim(n); ++b)
      for (std::size_t i = 0; i < tgt.dim(n); ++i)
        if (!p[i][b].is_zero()) out.set(gt.first[n - tgt.lo] + i, gs.first[n - src.lo] + b, cleared(p[i][b], den));
  }
  return out;
}

}  // namespace

DegreewiseModule degreewise_window(const PresentedModule& m, int lo, int hi, const Context& ctx) {
  return module_of(Window(m, lo, hi, ctx));
}

DegreewiseModule degreewise_from_presented(const PresentedModule& m, int lo, int hi, const Context& ctx) {
  Finiteness f = is_finite_over_A(m, ctx.limits.finiteness_bound, ctx);
  if (f.verdict == Finiteness::Verdict::NotFinite) throw DomainError(ErrorCode::NotFinite, "module is not finite over A");
  if (f.verdict == Finiteness::Verdict::Inconclusive)
    throw DomainError(ErrorCode::Inconclusive, "finiteness bound exhausted");
  if (f.top && (*f.bottom < lo || *f.top > hi))
    throw DomainError(ErrorCode::ShapeMismatch, "module has pieces outside [" + std::to_string(lo) + ", " +
                                                    std::to_string(hi) + "]");
  return degreewise_window(m, lo, hi, ctx);
}

PresentedModule presented_from_degreewise(const DegreewiseModule& m, const Context& ctx) {
  return minimal_presentation(all_generators(m, ctx), ctx);
}

DegreewiseModule dual(const DegreewiseModule& m) {
  if (!m.is_free()) throw DomainError(ErrorCode::NotAdequate, "dual needs A-free degree pieces");
  DegreewiseModule d;
  d.lo = -m.hi;
  d.hi = -m.lo;
  for (int n = d.lo; n <= d.hi; ++n) d.exponents.push_back(std::vector<int>(m.dim(-n), 0));
  for (int v = 0; v < 4; ++v)
    for (int n = d.lo; n < d.hi; ++n) d.action[v].push_back(local_transpose(m.act(v, -n - 1), m.dim(-n), m.dim(-n - 1)));
  return d;
}

DegreewiseComplex dual(const DegreewiseComplex& c) {
  DegreewiseComplex d;
  d.terms = {dual(c.terms[2]), dual(c.terms[1]), dual(c.terms[0])};
  for (int n = d.lo(); n <= d.hi(); ++n) {
    const int m = -n - c.lo();
    d.d[0].push_back(local_transpose(c.d[1][m], c.terms[2].dim(-n), c.terms[1].dim(-n)));
    d.d[1].push_back(local_transpose(c.d[0][m], c.terms[1].dim(-n), c.terms[0].dim(-n)));
  }
  return d;
}

DegreewiseComplex degreewise_complex(const Complex3& c, int lo, int hi, const Context& ctx) {
  Window w1(c.L1, lo, hi, ctx), w0(c.L0, lo, hi, ctx), wm(c.Lm1, lo, hi, ctx);
  DegreewiseComplex out;
  out.terms = {module_of(w1), module_of(w0), module_of(wm)};
  for (int n = lo; n <= hi; ++n) {
    out.d[0].push_back(map_matrix(c.d1, w1, w0, n));
    out.d[1].push_back(map_matrix(c.d0, w0, wm, n));
  }
  return out;
}

Complex3 complex_from_degreewise(const DegreewiseComplex& c, const Context& ctx) {
  Complex3 out;
  out.L1 = all_generators(c.terms[0], ctx);
  out.L0 = all_generators(c.terms[1], ctx);
  out.Lm1 = all_generators(c.terms[2], ctx);
  out.d1 = matrix_from_pieces(c.d[0], c.terms[0], c.terms[1], ctx);
  out.d0 = matrix_from_pieces(c.d[1], c.terms[1], c.terms[2], ctx);
  return out;
}

int lowest_generator_degree(const Complex3& c) {
  bool any = false;
  int lo = 0;
  for (int i : {1, 0, -1})
    for (int g : c.term(i).generators()) {
      lo = any ? std::min(lo, g) : g;
      any = true;
    }
  return lo;
}

DegreewiseComplex truncate_at_most(const Complex3& c, int r, const Context& ctx) {
  return degreewise_complex(c, lowest_generator_degree(c), r, ctx);
}

namespace {

struct Truncated {
  GradedMatrix gens;  // generators of the degree > r part, as vectors
  std::vector<std::pair<std::size_t, Monomial>> labels;
};

Truncated above(const DegreeList& g, int r, const Context& ctx) {
  Truncated t;
  DegreeList src;
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] > r) {
      t.labels.push_back({i, Monomial{}});
      src.push_back(g[i]);
      cols.push_back(vec_unit(g.size(), i, ctx.one()));
      continue;
    }
    for (const auto& mon : monomials_of_degree(r + 1 - g[i])) {
      t.labels.push_back({i, mon});
      Vec v(g.size());
      v[i] = Poly(ctx.one(), mon);
      src.push_back(r + 1);
      cols.push_back(std::move(v));
    }
  }
  t.gens = GradedMatrix(src, g, cols);
  return t;
}

/// Coordinates of a vector of degree > r on the generators of `above`.
Vec decompose(const Vec& v, const Truncated& t, const Context& ctx) {
  Vec out(t.labels.size());
  for (std::size_t comp = 0; comp < v.size(); ++comp)
    for (const auto& term : v[comp].terms()) {
      bool placed = false;
      for (std::size_t k = 0; k < t.labels.size() && !placed; ++k) {
        const auto& [gen, mon] = t.labels[k];
        if (gen != comp || !mon.divides(term.m)) continue;
        out[k] += Poly(term.c, term.m / mon);
        placed = true;
      }
      if (!placed) throw DomainError(ErrorCode::Internal, "term below the truncation degree");
    }
  (void)ctx;
  return out;
}

GradedMatrix map_above(const GradedMatrix& d, const Truncated& src, const Truncated& tgt, const Context& ctx) {
  std::vector<Vec> cols;
  for (const auto& c : src.gens.columns()) cols.push_back(decompose(d.apply(c), tgt, ctx));
  return GradedMatrix(src.gens.source(), tgt.gens.source(), cols);
}

}  // namespace

Complex3 quotient_at_most(const Complex3& c, int r, const Context& ctx) {
  auto cut = [&](const PresentedModule& m) {
    const DegreeList& g = m.generators();
    DegreeList src = m.relations().source();
    std::vector<Vec> cols = m.relations().columns();
    for (std::size_t i = 0; i < g.size(); ++i)
      for (const auto& mon : monomials_of_degree(std::max(r + 1 - g[i], 0))) {
        Vec v(g.size());
        v[i] = Poly(ctx.one(), mon);
        src.push_back(g[i] + mon.degree());
        cols.push_back(std::move(v));
      }
    return PresentedModule(GradedMatrix(src, g, cols));
  };
  Complex3 out = c;
  out.L1 = cut(c.L1);
  out.L0 = cut(c.L0);
  out.Lm1 = cut(c.Lm1);
  return out;
}

Complex3 truncate_above(const Complex3& c, int r, const Context& ctx) {
  if (c.has_free_terms() && lowest_generator_degree(c) > r) return c;
  Truncated t1 = above(c.L1.generators(), r, ctx), t0 = above(c.L0.generators(), r, ctx),
            tm = above(c.Lm1.generators(), r, ctx);
  Complex3 out;
  out.L1 = submodule_presentation(t1.gens, c.L1.relations(), ctx);
  out.L0 = submodule_presentation(t0.gens, c.L0.relations(), ctx);
  out.Lm1 = submodule_presentation(tm.gens, c.Lm1.relations(), ctx);
  out.d1 = map_above(c.d1, t1, t0, ctx);
  out.d0 = map_above(c.d0, t0, tm, ctx);
  return out;
}

DegreewiseComplex dual_truncated(const Complex3& c, int r, const Context& ctx) {
  if (!c.has_free_terms()) throw DomainError(ErrorCode::NotAdequate, "dual_truncated needs free terms");
  return dual(degreewise_complex(c, lowest_generator_degree(c), -r - 1, ctx));
}

}  // namespace triadlab
