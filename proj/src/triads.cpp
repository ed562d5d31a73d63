#include "triadlab/triads.hpp"

#include <algorithm>

namespace triadlab {

namespace {

Poly a_poly(const Context& ctx) { return Poly(ctx.one(), Monomial::var(kA)); }

GradedMatrix zero_matrix(const DegreeList& src, const DegreeList& tgt) { return GradedMatrix(src, tgt); }

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(i);
  return out;
}

GradedMatrix drop_zero_columns(const GradedMatrix& m) {
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!vec_is_zero(m.column(j))) nz.push_back(j);
  return m.select_columns(nz);
}

bool has_a(const GradedMatrix& m) {
  for (const auto& c : m.columns())
    for (const auto& p : c)
      for (const auto& t : p.terms())
        if (t.m.e[kA] > 0) return true;
  return false;
}

bool has_torsion(const PresentedModule& m, const Context& ctx) {
  return !is_zero_module(torsion_saturation(m, ctx).torsion, ctx);
}

PresentedModule cokernel_d0(const Complex3& c) { return PresentedModule(c.d0.hconcat(c.Lm1.relations())); }

void require_finite(const PresentedModule& m, ErrorCode code, const std::string& what, const Context& ctx) {
  Finiteness f = is_finite_over_A(m, ctx.limits.finiteness_bound, ctx);
  if (f.verdict == Finiteness::Verdict::NotFinite) throw DomainError(code, what + " is not finite over A");
  if (f.verdict == Finiteness::Verdict::Inconclusive)
    throw DomainError(ErrorCode::Inconclusive, what + ": finiteness bound exhausted");
}

void extend(DegreeRange& w, const PresentedModule& m, const Context& ctx) {
  Finiteness f = is_finite_over_A(m, ctx.limits.finiteness_bound, ctx);
  if (f.verdict != Finiteness::Verdict::Finite) throw DomainError(ErrorCode::Inconclusive, "module is not finite over A");
  if (!f.top) return;
  if (w.empty()) {
    w.lo = *f.bottom;
    w.hi = *f.top;
  } else {
    w.lo = std::min(w.lo, *f.bottom);
    w.hi = std::max(w.hi, *f.top);
  }
}

}  // namespace

Triad triad_validate(Complex3 c, const Context& ctx, std::string note) {
  validate_complex(c, ctx);
  require_finite(homology(c, 0, ctx).module, ErrorCode::HeartNotFinite, "the heart", ctx);
  require_finite(cokernel_d0(c), ErrorCode::CokernelNotFinite, "the cokernel", ctx);
  return Triad{std::move(c), std::move(note)};
}

DegreeRange support_window(const Triad& t, const Context& ctx) {
  DegreeRange w;
  extend(w, homology(t.complex, 0, ctx).module, ctx);
  extend(w, cokernel_d0(t.complex), ctx);
  return w;
}

long module_c1(const PresentedModule& m, const Context& ctx) {
  std::vector<GradedMatrix> res = free_resolution(m, 6, ctx);
  if (res.empty()) return 0;
  long c1 = Chiffres(res[0].target()).c1();
  for (std::size_t i = 0; i < res.size(); ++i) c1 += (i % 2 == 0 ? -1 : 1) * Chiffres(res[i].source()).c1();
  return c1;
}

TriadReport triad_invariants(const Triad& t, const Context& ctx) {
  const Complex3& c = t.complex;
  TriadReport r;
  r.terms = {c.L1.generators(), c.L0.generators(), c.Lm1.generators()};
  Homology n = homology(c, 1, ctx);
  r.n_generators = n.generators.source();
  r.c1_n = module_c1(n.module, ctx);
  PresentedModule h = homology(c, 0, ctx).module;
  PresentedModule cok = cokernel_d0(c);
  r.window = support_window(t, ctx);
  if (!r.window.empty()) {
    r.heart = hilbert_data(h, r.window.lo, r.window.hi, ctx);
    r.cokernel = hilbert_data(cok, r.window.lo, r.window.hi, ctx);
  }
  r.modular = !has_torsion(cok, ctx);
  r.representable = !has_torsion(cokernel_d1(c), ctx);
  r.exact = r.modular && r.representable;
  r.elementary = is_zero_module(torsion_saturation(cok, ctx).quotient, ctx);
  r.special = fiber_functor(t, FiberPoint::Special, ctx).hilbert;
  r.generic = fiber_functor(t, FiberPoint::Generic, ctx).hilbert;
  return r;
}

FiberValue fiber_functor(const Triad& t, FiberPoint point, const Context& ctx) {
  FiberValue v;
  v.point = point;
  v.window = support_window(t, ctx);
  const int lo = v.window.lo, hi = v.window.hi;
  if (point == FiberPoint::Special) {
    v.module = homology(special_fiber(t.complex, ctx), 0, ctx).module;
    if (!v.window.empty()) v.hilbert = special_hilbert(v.module, lo, hi, ctx);
    return v;
  }
  v.module = homology(t.complex, 0, ctx).module;
  if (v.window.empty()) return v;
  if (point == FiberPoint::Generic) {
    v.hilbert = generic_hilbert(v.module, lo, hi, ctx);
  } else {
    v.pieces = hilbert_data(v.module, lo, hi, ctx);
    v.hilbert = special_hilbert(v.module, lo, hi, ctx);
  }
  return v;
}

Morphism Morphism::identity(const Complex3& c, const Context& ctx) {
  return Morphism{GradedMatrix::identity(c.L1.generators(), ctx), GradedMatrix::identity(c.L0.generators(), ctx),
                  GradedMatrix::identity(c.Lm1.generators(), ctx)};
}

Morphism compose(const Morphism& g, const Morphism& f) { return Morphism{g.f1 * f.f1, g.f0 * f.f0, g.fm1 * f.fm1}; }

PsiReport psi_check(const Complex3& s, const Complex3& t, const Morphism& f, const Context& ctx) {
  auto shape = [&](const GradedMatrix& m, const PresentedModule& x, const PresentedModule& y, int i) {
    if (m.source() != x.generators() || m.target() != y.generators())
      throw DomainError(ErrorCode::NotAMorphism, "f" + std::to_string(i) + " has the wrong shape");
    if (!in_span(m * x.relations(), y.relations(), ctx))
      throw DomainError(ErrorCode::NotAMorphism, "f" + std::to_string(i) + " does not respect the relations");
  };
  shape(f.f1, s.L1, t.L1, 1);
  shape(f.f0, s.L0, t.L0, 0);
  shape(f.fm1, s.Lm1, t.Lm1, -1);
  if (!in_span(t.d1 * f.f1 + -(f.f0 * s.d1), t.L0.relations(), ctx))
    throw DomainError(ErrorCode::NotAMorphism, "f does not commute with d1");
  if (!in_span(t.d0 * f.f0 + -(f.fm1 * s.d0), t.Lm1.relations(), ctx))
    throw DomainError(ErrorCode::NotAMorphism, "f does not commute with d0");

  PsiReport r;
  Homology hs = homology(s, 0, ctx), ht = homology(t, 0, ctx);
  GradedMatrix image = f.f0 * hs.generators;
  if (ht.generators.cols() == 0) {
    r.heart_surjective = true;
    r.heart_injective = is_zero_module(hs.module, ctx);
  } else {
    Lifter lifter(ht.generators, t.d1.hconcat(t.L0.relations()), ctx);
    std::vector<Vec> cols;
    for (const auto& v : image.columns()) {
      Vec c;
      Poly u;
      if (!lifter.lift(v, c, u)) throw DomainError(ErrorCode::Internal, "heart map does not lift");
      cols.push_back(std::move(c));
    }
    // a column scaled by an A-unit has the same kernel and image
    GradedMatrix phi(hs.generators.source(), ht.generators.source(), cols);
    r.heart_surjective = is_zero_module(PresentedModule(phi.hconcat(ht.module.relations())), ctx);
    GradedMatrix k = preimage_generators(phi, ht.module.relations(), ctx);
    r.heart_injective = k.cols() == 0 || is_zero_module(submodule_presentation(k, hs.module.relations(), ctx), ctx);
  }

  GradedMatrix rel_cs = s.d0.hconcat(s.Lm1.relations()), rel_ct = t.d0.hconcat(t.Lm1.relations());
  r.cokernel_injective = in_span(preimage_generators(f.fm1, rel_ct, ctx), rel_cs, ctx);
  r.quotient_flat = !has_torsion(PresentedModule(f.fm1.hconcat(rel_ct)), ctx);

  auto kernel_onto = [&](const Complex3& x, const Complex3& y) {
    Homology nx = homology(x, 1, ctx), ny = homology(y, 1, ctx);
    return in_span(ny.generators, (f.f1 * nx.generators).hconcat(y.L1.relations()), ctx);
  };
  r.kernel_surjective = kernel_onto(s, t);
  r.special_kernel_surjective = kernel_onto(special_fiber(s, ctx), special_fiber(t, ctx));
  return r;
}

TriadMap resolution_majeure(const Triad& t, const Context& ctx) {
  const Complex3& c = t.complex;
  if (c.has_free_terms()) return TriadMap{t, Morphism::identity(c, ctx)};
  const DegreeList& g1 = c.L1.generators();
  const DegreeList& g0 = c.L0.generators();
  const DegreeList& gm = c.Lm1.generators();
  const GradedMatrix& rel1 = c.L1.relations();
  const GradedMatrix& rel0 = c.L0.relations();
  const GradedMatrix& relm = c.Lm1.relations();

  // F0 covers the fibre product of F-1 and L0 over L-1
  GradedMatrix top = c.d0.hconcat(relm);
  GradedMatrix bottom = GradedMatrix::identity(g0, ctx).hconcat(zero_matrix(relm.source(), g0));
  ImagePresentation p0 =
      image_presentation(top.vconcat(bottom), zero_matrix(rel0.source(), gm).vconcat(rel0), ctx);
  GradedMatrix delta0 = p0.generators.select_rows(range(0, gm.size()));
  GradedMatrix u0 = p0.generators.select_rows(range(gm.size(), gm.size() + g0.size()));

  // F1 covers {(z, l1) : delta0 z = 0, u0 z = d1 l1 in L0}
  GradedMatrix z = drop_zero_columns(syzygies(delta0, ctx));
  GradedMatrix syz = drop_zero_columns(syzygies((u0 * z).hconcat(-c.d1).hconcat(-rel0), ctx));
  GradedMatrix alpha = syz.select_rows(range(0, z.cols()));
  GradedMatrix beta = syz.select_rows(range(z.cols(), z.cols() + g1.size()));
  ImagePresentation p1 = image_presentation((z * alpha).vconcat(beta),
                                            zero_matrix(rel1.source(), delta0.source()).vconcat(rel1), ctx);
  GradedMatrix delta1 = p1.generators.select_rows(range(0, delta0.cols()));
  GradedMatrix u1 = p1.generators.select_rows(range(delta0.cols(), delta0.cols() + g1.size()));

  std::vector<GradedMatrix> chain{delta0, delta1};
  ChainIds ids = minimalize(chain, {true, true}, ctx, true);
  TriadMap out;
  out.triad = Triad{Complex3::free(chain[1], chain[0]), t.note.empty() ? "" : "majeure of " + t.note};
  out.map = Morphism{u1 * ids.inclusion[2], u0 * ids.inclusion[1], ids.inclusion[0]};
  return out;
}

TriadMap elementary_reduction(const Triad& t, const Context& ctx) {
  if (!t.is_majeure()) {
    TriadMap m = resolution_majeure(t, ctx);
    TriadMap e = elementary_reduction(m.triad, ctx);
    return TriadMap{e.triad, compose(m.map, e.map)};
  }
  const Complex3& c = t.complex;
  TorsionPart tp = torsion_saturation(PresentedModule(c.d0), ctx);
  GradedMatrix gens = c.d0.hconcat(tp.inclusion);
  GradedMatrix rel = drop_zero_columns(syzygies(gens, ctx));
  Complex3 s;
  s.L1 = c.L1;
  s.L0 = c.L0;
  s.Lm1 = PresentedModule(rel);
  s.d1 = c.d1;
  s.d0 = GradedMatrix::identity(gens.source(), ctx).select_columns(range(0, c.d0.cols()));
  Morphism f{GradedMatrix::identity(c.L1.generators(), ctx), GradedMatrix::identity(c.L0.generators(), ctx), gens};
  TriadMap m = resolution_majeure(Triad{s, ""}, ctx);
  m.triad.note = t.note.empty() ? "" : "elementary reduction of " + t.note;
  return TriadMap{m.triad, compose(f, m.map)};
}

Triad dual_triad(const Triad& t, const Context& ctx) {
  const Complex3& c = t.complex;
  std::string note = t.note.empty() ? "" : "dual of " + t.note;
  if (!c.has_free_terms()) {
    DegreeRange w;
    bool finite = true;
    for (int i : {1, 0, -1}) {
      Finiteness f = is_finite_over_A(c.term(i), ctx.limits.finiteness_bound, ctx);
      if (f.verdict != Finiteness::Verdict::Finite) {
        finite = false;
        break;
      }
      extend(w, c.term(i), ctx);
    }
    if (finite) {
      DegreewiseComplex d = degreewise_complex(c, w.lo, w.hi, ctx);
      bool free_pieces = d.terms[0].is_free() && d.terms[1].is_free() && d.terms[2].is_free();
      if (free_pieces) return Triad{complex_from_degreewise(dual(d), ctx), note};
    }
  }
  Triad m = c.has_free_terms() ? t : resolution_majeure(t, ctx).triad;
  DegreeRange w = support_window(m, ctx);
  int lowest = lowest_generator_degree(m.complex);
  int top = w.empty() ? lowest - 1 : w.hi;
  return Triad{complex_from_degreewise(dual_truncated(m.complex, -top - 1, ctx), ctx), note};
}

Triad trivial_triad(const SubquotientDatum& d, const Context& ctx) {
  const DegreeList& g = d.M0.generators();
  if (d.J.target() != g || d.M1.target() != g)
    throw DomainError(ErrorCode::InvalidDrapeau, "J and M1 must be vectors on the generators of M0");
  require_graded(d.J, "J");
  require_graded(d.M1, "M1");
  if (has_a(d.M0.relations()) || has_a(d.J) || has_a(d.M1))
    throw DomainError(ErrorCode::InvalidDrapeau, "the drapeau lives over k: a may not appear");
  const GradedMatrix& rel = d.M0.relations();
  if (!in_span(d.M1, d.J.hconcat(rel), ctx)) throw DomainError(ErrorCode::InvalidDrapeau, "M1 is not inside J");
  ImagePresentation m1 = image_presentation(d.M1, rel, ctx);
  Complex3 c;
  c.L1 = m1.module();
  c.L0 = d.M0;
  c.Lm1 = PresentedModule(rel.hconcat(d.J));
  c.d1 = m1.generators.scaled(a_poly(ctx));
  c.d0 = GradedMatrix::identity(g, ctx).scaled(a_poly(ctx));
  return triad_validate(std::move(c), ctx, "trivial triad");
}

ExtCocycle ExtCocycle::from_resolution(GradedMatrix delta0, GradedMatrix delta1, PresentedModule H,
                                       GradedMatrix u_hat, const Context& ctx) {
  ExtCocycle e;
  e.delta2 = kernel_presentation(delta1, ctx).generators;
  e.delta0 = std::move(delta0);
  e.delta1 = std::move(delta1);
  e.H = std::move(H);
  e.u_hat = std::move(u_hat);
  return e;
}

ExtCocycle ExtCocycle::from_module(const PresentedModule& C, PresentedModule H, GradedMatrix u_hat,
                                   const Context& ctx) {
  std::vector<GradedMatrix> res = free_resolution(C, 3, ctx);
  GradedMatrix d0 = res.empty() ? GradedMatrix({}, C.generators()) : res[0];
  GradedMatrix d1 = res.size() > 1 ? res[1] : GradedMatrix({}, d0.source());
  ExtCocycle e;
  e.delta2 = res.size() > 2 ? res[2] : GradedMatrix({}, d1.source());
  e.delta0 = d0;
  e.delta1 = d1;
  e.H = std::move(H);
  e.u_hat = std::move(u_hat);
  return e;
}

namespace {

void check_shapes(const ExtCocycle& e) {
  if (e.delta1.target() != e.delta0.source() || e.delta2.target() != e.delta1.source())
    throw DomainError(ErrorCode::ShapeMismatch, "the resolution matrices do not compose");
  if (e.u_hat.source() != e.delta1.source() || e.u_hat.target() != e.H.generators())
    throw DomainError(ErrorCode::ShapeMismatch, "u_hat must map P2 to the generators of H");
  require_graded(e.u_hat, "u_hat");
}

}  // namespace

bool cocycle_check(const ExtCocycle& e, const Context& ctx) {
  check_shapes(e);
  return in_span(e.u_hat * e.delta2, e.H.relations(), ctx);
}

bool is_surjective(const ExtCocycle& e, const Context& ctx) {
  check_shapes(e);
  return in_span(GradedMatrix::identity(e.H.generators(), ctx), e.u_hat.hconcat(e.H.relations()), ctx);
}

Triad cone_triad(const ExtCocycle& e, const Context& ctx) {
  if (!cocycle_check(e, ctx)) throw DomainError(ErrorCode::NotAComplex, "u_hat delta2 does not vanish in H");
  const GradedMatrix& gamma = e.H.relations();
  GradedMatrix d1 = e.delta1.hconcat(zero_matrix(gamma.source(), e.delta1.target()))
                        .vconcat(e.u_hat.hconcat(gamma));
  GradedMatrix d0 = e.delta0.hconcat(zero_matrix(gamma.target(), e.delta0.target()));
  std::vector<GradedMatrix> chain{d0, d1};
  minimalize(chain, {true, true}, ctx);
  GradedMatrix cover = image_presentation(chain[1], zero_matrix({}, chain[1].target()), ctx).generators;
  return triad_validate(Complex3::free(cover, chain[0]), ctx, "cone triad");
}

Triad compact_cone_triad(const ExtCocycle& e, const Context& ctx) {
  if (!cocycle_check(e, ctx)) throw DomainError(ErrorCode::NotAComplex, "u_hat delta2 does not vanish in H");
  if (!is_surjective(e, ctx)) throw DomainError(ErrorCode::NotSurjective, "u_hat does not map onto H");
  GradedMatrix syz = syzygies(e.u_hat.hconcat(e.H.relations()), ctx);
  GradedMatrix ker = drop_zero_columns(syz.select_rows(range(0, e.u_hat.cols())));
  GradedMatrix gens = drop_zero_columns(e.delta1 * ker);
  GradedMatrix cover = image_presentation(gens, zero_matrix({}, gens.target()), ctx).generators;
  return triad_validate(Complex3::free(cover, e.delta0), ctx, "compact cone triad");
}

Subquotient subquotient_of(const Triad& t, const Context& ctx) {
  const Complex3& c = t.complex;
  Complex3 s = special_fiber(c, ctx);
  Homology hs = homology(s, 0, ctx);
  Homology hh = homology(c, 0, ctx);
  GradedMatrix rel = s.d1.hconcat(s.L0.relations());
  TorsionPart tp = torsion_saturation(hh.module, ctx);
  GradedMatrix tors = hh.generators * tp.inclusion;

  Subquotient q;
  const Scalar zero = ctx.zero();
  {
    std::vector<Vec> cols;
    for (const auto& col : hs.module.relations().columns()) {
      Vec v;
      for (const auto& p : col) v.push_back(p.specialize_a(zero));
      if (!vec_is_zero(v)) cols.push_back(std::move(v));
    }
    DegreeList src;
    for (const auto& v : cols) src.push_back(vec_degree(v, hs.generators.source()));
    q.datum.M0 = PresentedModule(GradedMatrix(src, hs.generators.source(), cols));
  }
  auto coordinates = [&](const GradedMatrix& vs) {
    std::vector<Vec> cols;
    if (hs.generators.cols() == 0) return GradedMatrix(vs.source(), {});
    Lifter lifter(hs.generators, rel, ctx);
    for (const auto& v : vs.columns()) {
      Vec x;
      Poly u;
      if (!lifter.lift(v, x, u)) throw DomainError(ErrorCode::Internal, "heart class outside the special fiber");
      Scalar inv = u.is_zero() ? ctx.one() : u.constant_term().inverse();
      for (auto& p : x) p = p.specialize_a(zero).scaled(inv);
      cols.push_back(std::move(x));
    }
    return GradedMatrix(vs.source(), hs.generators.source(), cols);
  };
  q.datum.J = coordinates(hh.generators);
  q.datum.M1 = coordinates(tors);
  q.J = image_presentation(hh.generators, rel, ctx).module();
  q.M1 = image_presentation(tors, rel, ctx).module();
  q.M = image_presentation(hh.generators, tors.hconcat(rel), ctx).module();
  q.Mm1 = image_presentation(hs.generators, hh.generators.hconcat(rel), ctx).module();
  q.MA = tp.quotient;

  DegreeRange w = support_window(t, ctx);
  q.consistent = true;
  if (!w.empty()) {
    q.consistent = special_hilbert(q.MA, w.lo, w.hi, ctx) == special_hilbert(q.M, w.lo, w.hi, ctx);
    std::vector<int> m1 = special_hilbert(q.Mm1, w.lo, w.hi, ctx);
    std::vector<InvariantFactors> cok = hilbert_data(cokernel_d0(c), w.lo, w.hi, ctx);
    for (std::size_t i = 0; i < cok.size(); ++i)
      if (m1[i] != static_cast<int>(cok[i].torsion.size())) q.consistent = false;
  }
  return q;
}

}  // namespace triadlab
