#include <functional>

#include "doctest.h"
#include "fixtures.hpp"
#include "triadlab/triads.hpp"

using namespace triadlab;
using testing::cyclic;
using testing::shape;

namespace {

Context ctx;

Poly P(const char* s) { return parse_poly(s, ctx.field); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const DomainError& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

Triad T(Complex3 c) { return triad_validate(std::move(c), ctx); }

int torsion_count(const InvariantFactors& f) { return static_cast<int>(f.torsion.size()); }

PresentedModule k_twisted(int d) { return cyclic(-d, {"a", "X", "Y", "Z", "T"}, ctx); }

}  // namespace

TEST_CASE("triad_validate") {
  CHECK_NOTHROW(T(testing::lprime(ctx)));
  CHECK_NOTHROW(T(testing::representable_mineure(ctx)));
  Complex3 bad = Complex3::free(testing::d1_prime(ctx), testing::matrix("0,1^4", "0", "a, X, Y, Z, 0", ctx));
  CHECK(code_of([&] { T(bad); }) == ErrorCode::NotAComplex);
  CHECK(code_of([&] { T(Complex3::free(GradedMatrix({}, {0}), GradedMatrix({0}, {}))); }) ==
        ErrorCode::HeartNotFinite);
  CHECK(code_of([&] { T(Complex3::free(GradedMatrix({}, {}), GradedMatrix({}, {0}))); }) ==
        ErrorCode::CokernelNotFinite);
}

TEST_CASE("invariants and flags of the worked triads") {
  TriadReport m = triad_invariants(T(testing::modular_residue(ctx)), ctx);
  CHECK(m.modular);
  CHECK_FALSE(m.representable);
  CHECK(m.elementary);
  CHECK(Chiffres(m.n_generators).str() == "1^4,2^6");

  TriadReport r = triad_invariants(T(testing::representable_mineure(ctx)), ctx);
  CHECK(r.representable);
  CHECK_FALSE(r.modular);
  CHECK(r.elementary);

  TriadReport l = triad_invariants(T(testing::lprime(ctx)), ctx);
  CHECK(l.elementary);
  CHECK_FALSE(l.modular);
  CHECK_FALSE(l.representable);
  CHECK(Chiffres(l.n_generators).str() == "2^2,3^6,4^2");
  CHECK(l.window.lo == 0);
  CHECK(l.window.hi == 2);
  CHECK(l.heart[1] == InvariantFactors{1, {}});
  CHECK(l.heart[2] == InvariantFactors{0, {1}});
  CHECK(l.cokernel[0] == InvariantFactors{0, {1}});
  // c1 of N is the alternating c1 of the terms minus nothing from finite H and C
  CHECK(l.c1_n == -15 + 4);
}

TEST_CASE("fiber functor values") {
  Triad m = T(testing::modular_residue(ctx));
  CHECK(fiber_functor(m, FiberPoint::Special, ctx).hilbert == std::vector<int>{1});
  CHECK(fiber_functor(m, FiberPoint::Generic, ctx).hilbert == std::vector<int>{0});

  Triad r = T(testing::representable_mineure(ctx));
  CHECK(fiber_functor(r, FiberPoint::Special, ctx).hilbert == std::vector<int>{1});
  CHECK(fiber_functor(r, FiberPoint::Generic, ctx).hilbert == std::vector<int>{0});
  FiberValue base = fiber_functor(r, FiberPoint::Base, ctx);
  CHECK(is_zero_module(base.module, ctx));
  CHECK(base.pieces == std::vector<InvariantFactors>{InvariantFactors{}});

  Triad t = trivial_triad(testing::datum_cubic(ctx), ctx);
  CHECK(fiber_functor(t, FiberPoint::Special, ctx).hilbert == std::vector<int>{1, 1, 1});
  CHECK(fiber_functor(t, FiberPoint::Generic, ctx).hilbert == std::vector<int>{0, 1, 0});
}

TEST_CASE("the 1.5 dimension identity") {
  std::vector<Triad> ts{T(testing::modular_residue(ctx)), T(testing::representable_mineure(ctx)),
                        T(testing::lprime(ctx)), trivial_triad(testing::datum_cubic(ctx), ctx)};
  for (const Triad& t : ts) {
    TriadReport r = triad_invariants(t, ctx);
    PresentedModule h = homology(t.complex, 0, ctx).module;
    std::vector<int> hk = special_hilbert(h, r.window.lo, r.window.hi, ctx);
    for (std::size_t i = 0; i < r.special.size(); ++i) CHECK(r.special[i] == hk[i] + torsion_count(r.cokernel[i]));
  }
}

TEST_CASE("resolution_majeure") {
  SUBCASE("0 -> A --a--> A") {
    Triad t = T(testing::representable_mineure(ctx));
    TriadMap m = resolution_majeure(t, ctx);
    CHECK(shape(m.triad.complex) == "1^4,2^6 -> 0,1^4 -> 0");
    CHECK(psi_check(m.triad.complex, t.complex, m.map, ctx).is_strong());
  }
  SUBCASE("trivial triad of (R/(X,Y,Z,T^3), <t>, <t^2>)") {
    Triad t = trivial_triad(testing::datum_cubic(ctx), ctx);
    TriadMap m = resolution_majeure(t, ctx);
    CHECK(shape(m.triad.complex) == "1^3,2^7,3 -> 0,1^4 -> 0");
    CHECK(Chiffres(homology(m.triad.complex, 1, ctx).generators.source()).str() == "2^3,3^8,4^3");
    CHECK(psi_check(m.triad.complex, t.complex, m.map, ctx).is_strong());
  }
  SUBCASE("majeure input") {
    Triad t = T(testing::lprime(ctx));
    TriadMap m = resolution_majeure(t, ctx);
    CHECK(m.triad.complex.d1 == t.complex.d1);
    CHECK(m.map.f0 == GradedMatrix::identity(t.complex.L0.generators(), ctx));
  }
}

TEST_CASE("psi_check") {
  Complex3 l = testing::lprime(ctx);
  CHECK(psi_check(l, l, Morphism::identity(l, ctx), ctx).is_strong());

  SUBCASE("truncation projections are psi and compose") {
    Complex3 m = testing::modular_residue(ctx);
    for (const Complex3& c : {l, m}) {
      Complex3 q3 = quotient_at_most(c, 3, ctx), q2 = quotient_at_most(c, 2, ctx);
      Morphism j3 = Morphism::identity(c, ctx), j32 = Morphism::identity(c, ctx);
      CHECK(psi_check(c, q2, j3, ctx).is_psi());
      CHECK(psi_check(c, q3, j3, ctx).is_psi());
      CHECK(psi_check(q3, q2, j32, ctx).is_psi());
      CHECK(psi_check(c, q2, compose(j32, j3), ctx).is_psi());
    }
    // below the top degree of H the projection loses part of the heart
    CHECK_FALSE(psi_check(l, quotient_at_most(l, 1, ctx), Morphism::identity(l, ctx), ctx).is_psi());
  }
  SUBCASE("maps that are not psi") {
    auto cok = [&](PresentedModule m) {
      Complex3 c;
      c.L1 = PresentedModule::free({});
      c.L0 = PresentedModule::free({});
      c.Lm1 = std::move(m);
      c.d1 = GradedMatrix({}, {});
      c.d0 = GradedMatrix({}, c.Lm1.generators());
      return c;
    };
    Complex3 a = cok(cyclic(0, {"X", "Y", "Z", "T"}, ctx));
    Complex3 k = cok(testing::residue_field(ctx));
    Morphism onto{GradedMatrix({}, {}), GradedMatrix({}, {}), GradedMatrix::identity({0}, ctx)};
    PsiReport r = psi_check(a, k, onto, ctx);
    CHECK(r.heart_injective);
    CHECK(r.heart_surjective);
    CHECK_FALSE(r.cokernel_injective);
    CHECK_FALSE(r.is_psi());
    Morphism times_a{GradedMatrix({}, {}), GradedMatrix({}, {}), testing::matrix("0", "0", "a", ctx)};
    PsiReport s = psi_check(a, a, times_a, ctx);
    CHECK(s.cokernel_injective);
    CHECK_FALSE(s.quotient_flat);
    CHECK(code_of([&] { psi_check(k, a, onto, ctx); }) == ErrorCode::NotAMorphism);
  }
  SUBCASE("non-commuting maps are rejected") {
    Morphism f = Morphism::identity(l, ctx);
    f.fm1 = f.fm1.scaled(P("2"));
    CHECK(code_of([&] { psi_check(l, l, f, ctx); }) == ErrorCode::NotAMorphism);
  }
}

TEST_CASE("elementary_reduction") {
  auto cokernel_data = [&](const Triad& t, int lo, int hi) {
    return hilbert_data(PresentedModule(t.complex.d0.hconcat(t.complex.Lm1.relations())), lo, hi, ctx);
  };
  SUBCASE("already elementary") {
    Triad t = T(testing::lprime(ctx));
    TriadMap e = elementary_reduction(t, ctx);
    CHECK(shape(e.triad.complex) == shape(t.complex));
    CHECK(psi_check(e.triad.complex, t.complex, e.map, ctx).is_psi());
  }
  SUBCASE("free cokernel") {
    Complex3 c;
    c.L1 = PresentedModule::free({});
    c.L0 = PresentedModule::free({});
    c.Lm1 = cyclic(0, {"X", "Y", "Z", "T"}, ctx);
    c.d1 = GradedMatrix({}, {});
    c.d0 = GradedMatrix({}, {0});
    Triad t = T(c);
    TriadMap e = elementary_reduction(t, ctx);
    CHECK(cokernel_data(e.triad, 0, 1) == std::vector<InvariantFactors>(2));
    CHECK(psi_check(e.triad.complex, t.complex, e.map, ctx).is_psi());
  }
  SUBCASE("mixed cokernel A + A/(a)") {
    Complex3 c;
    c.L1 = PresentedModule::free({});
    c.L0 = PresentedModule::free({});
    c.Lm1 = PresentedModule(testing::matrix("1^4,1^4,0", "0,0",
                                            "X, Y, Z, T, 0, 0, 0, 0, 0; 0, 0, 0, 0, X, Y, Z, T, a", ctx));
    c.d1 = GradedMatrix({}, {});
    c.d0 = GradedMatrix({}, {0, 0});
    Triad t = T(c);
    TriadMap e = elementary_reduction(t, ctx);
    CHECK(e.triad.is_majeure());
    std::vector<InvariantFactors> cok = cokernel_data(e.triad, 0, 1);
    CHECK(cok[0] == InvariantFactors{0, {1}});
    CHECK(cok[1].is_zero());
    CHECK(triad_invariants(e.triad, ctx).elementary);
    CHECK(psi_check(e.triad.complex, t.complex, e.map, ctx).is_psi());
  }
}

TEST_CASE("dual triads") {
  SUBCASE("modular and representable swap") {
    Triad m = T(testing::modular_residue(ctx));
    Triad d = dual_triad(m, ctx);
    TriadReport r = triad_invariants(triad_validate(d.complex, ctx), ctx);
    CHECK(r.representable);
    CHECK_FALSE(r.modular);
    for (const Complex3& c : {testing::representable_mineure(ctx), trivial_triad(testing::datum_cubic(ctx), ctx).complex}) {
      Triad t = T(c);
      TriadReport a = triad_invariants(t, ctx);
      TriadReport b = triad_invariants(triad_validate(dual_triad(t, ctx).complex, ctx), ctx);
      CHECK(a.modular == b.representable);
      CHECK(a.representable == b.modular);
    }
  }
  SUBCASE("double dual of a mineure triad") {
    Triad t = trivial_triad(testing::datum_cubic(ctx), ctx);
    Triad dd = dual_triad(dual_triad(t, ctx), ctx);
    DegreewiseComplex x = degreewise_complex(t.complex, 0, 2, ctx);
    DegreewiseComplex y = degreewise_complex(dd.complex, 0, 2, ctx);
    for (int i = 0; i < 3; ++i)
      for (int n = 0; n <= 2; ++n) CHECK(x.terms[i].factors(n) == y.terms[i].factors(n));
    TriadReport a = triad_invariants(t, ctx), b = triad_invariants(dd, ctx);
    CHECK(a.special == b.special);
    CHECK(a.generic == b.generic);
  }
  SUBCASE("zero triad") {
    Triad z = T(Complex3::free(GradedMatrix({}, {}), GradedMatrix({}, {})));
    Triad d = dual_triad(z, ctx);
    for (int i : {1, 0, -1}) CHECK(d.complex.term(i).num_generators() == 0);
  }
}

TEST_CASE("trivial triads") {
  Triad t = trivial_triad(testing::datum_cubic(ctx), ctx);
  CHECK(t.complex.d1.at(0, 0) == P("a*T^2"));
  CHECK(t.complex.d0.at(0, 0) == P("a"));

  PresentedModule k = cyclic(0, {"X", "Y", "Z", "T"}, ctx);
  GradedMatrix one = testing::matrix("0", "0", "1", ctx), none({}, {0});
  TriadReport mod = triad_invariants(trivial_triad({k, one, one}, ctx), ctx);
  CHECK(mod.modular);
  CHECK_FALSE(mod.representable);
  TriadReport rep = triad_invariants(trivial_triad({k, none, none}, ctx), ctx);
  CHECK(rep.representable);
  CHECK_FALSE(rep.modular);

  SubquotientDatum bad = testing::datum_cubic(ctx);
  std::swap(bad.J, bad.M1);
  CHECK(code_of([&] { trivial_triad(bad, ctx); }) == ErrorCode::InvalidDrapeau);
  SubquotientDatum with_a = testing::datum_cubic(ctx);
  with_a.J = testing::matrix("1", "0", "a*T", ctx);
  CHECK(code_of([&] { trivial_triad(with_a, ctx); }) == ErrorCode::InvalidDrapeau);
}

TEST_CASE("cocycle_check") {
  PresentedModule h = testing::heart_lprime(ctx);
  CHECK(cocycle_check(testing::koszul_cocycle(h, testing::u_hat("1", "0,0,0,1,-T,0,0,0,0,0", ctx), ctx), ctx));
  CHECK(cocycle_check(testing::koszul_cocycle(h, testing::u_hat("1", "0,0,0,0,0,0,0,0,0,0", ctx), ctx), ctx));
  CHECK_FALSE(cocycle_check(testing::koszul_cocycle(h, testing::u_hat("1", "1,0,0,0,0,0,0,0,0,0", ctx), ctx), ctx));
  CHECK(cocycle_check(testing::koszul_cocycle(k_twisted(2), testing::u_hat("2", "0,0,0,0,1,2,0,0,0,-1", ctx), ctx), ctx));
  ExtCocycle wrong = testing::koszul_cocycle(h, testing::u_hat("2", "0,0,0,0,0,0,0,0,0,0", ctx), ctx);
  CHECK(code_of([&] { cocycle_check(wrong, ctx); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("cone triads for C = k, H = k(-2)") {
  PresentedModule h = k_twisted(2);
  SUBCASE("u = 0 gives the direct sum") {
    Triad t = cone_triad(testing::koszul_cocycle(h, testing::u_hat("2", "0,0,0,0,0,0,0,0,0,0", ctx), ctx), ctx);
    CHECK(shape(t.complex) == "1^4,2^7,3^4 -> 0,1^4,2 -> 0");
    TriadReport r = triad_invariants(t, ctx);
    CHECK(r.heart[2] == InvariantFactors{0, {1}});
    CHECK(r.cokernel[0] == InvariantFactors{0, {1}});
  }
  SUBCASE("u = eps1") {
    ExtCocycle e = testing::koszul_cocycle(h, testing::u_hat("2", "0,0,0,0,1,0,0,0,0,0", ctx), ctx);
    Triad t = cone_triad(e, ctx);
    CHECK(shape(t.complex) == "1^4,2^5,3^2 -> 0,1^4 -> 0");
    Triad c = compact_cone_triad(e, ctx);
    CHECK(shape(c.complex) == "1^4,2^5,3^2 -> 0,1^4 -> 0");
    TriadReport r = triad_invariants(t, ctx), s = triad_invariants(c, ctx);
    CHECK(r.heart == s.heart);
    CHECK(r.cokernel == s.cokernel);
    CHECK(r.heart[2] == InvariantFactors{0, {1}});
  }
  SUBCASE("C = 0 gives the modular triad of H") {
    ExtCocycle e = ExtCocycle::from_module(PresentedModule(GradedMatrix({}, {})), h, GradedMatrix({}, {2}), ctx);
    Triad t = cone_triad(e, ctx);
    CHECK(shape(t.complex) == "2,3^4 -> 2 -> ");
    CHECK(triad_invariants(t, ctx).modular);
  }
}

TEST_CASE("compact cone triads for C = k, H = R(-1)/(X,Y,Z,aT,T^2)") {
  PresentedModule h = testing::heart_lprime(ctx);
  SUBCASE("case 2 reproduces L'") {
    Triad t = compact_cone_triad(testing::koszul_cocycle(h, testing::u_hat("1", "0,0,0,1,-T,0,0,0,0,0", ctx), ctx), ctx);
    CHECK(shape(t.complex) == "1^3,2^6 -> 0,1^4 -> 0");
    CHECK(Chiffres(homology(t.complex, 1, ctx).generators.source()).str() == "2^2,3^6,4^2");
    TriadReport r = triad_invariants(t, ctx), l = triad_invariants(T(testing::lprime(ctx)), ctx);
    CHECK(r.heart == l.heart);
    CHECK(r.cokernel == l.cokernel);
  }
  SUBCASE("case 1") {
    Triad t = compact_cone_triad(testing::koszul_cocycle(h, testing::u_hat("1", "0,0,0,1,0,0,0,0,0,0", ctx), ctx), ctx);
    CHECK(shape(t.complex) == "1^3,2^7,3 -> 0,1^4 -> 0");
  }
  SUBCASE("H = 0") {
    ExtCocycle e = testing::koszul_cocycle(PresentedModule(GradedMatrix({}, {})), GradedMatrix({1, 1, 1, 1, 2, 2, 2, 2, 2, 2}, {}), ctx);
    Triad t = compact_cone_triad(e, ctx);
    CHECK(shape(t.complex) == "1^4,2^6 -> 0,1^4 -> 0");
  }
  SUBCASE("not surjective") {
    ExtCocycle e = testing::koszul_cocycle(h, testing::u_hat("1", "0,0,0,0,-T,0,0,0,0,0", ctx), ctx);
    CHECK(code_of([&] { compact_cone_triad(e, ctx); }) == ErrorCode::NotSurjective);
  }
}

TEST_CASE("subquotient extraction") {
  SUBCASE("L'") {
    Subquotient q = subquotient_of(T(testing::lprime(ctx)), ctx);
    CHECK(q.consistent);
    CHECK(special_hilbert(q.datum.M0, 0, 2, ctx) == std::vector<int>{1, 1, 1});
    CHECK(same_ideal(annihilator(q.datum.M0, ctx), {P("X"), P("Y"), P("Z"), P("T^3")}, ctx));
    CHECK(special_hilbert(q.M, 0, 2, ctx) == std::vector<int>{0, 1, 0});
    CHECK(special_hilbert(q.M1, 0, 2, ctx) == std::vector<int>{0, 0, 1});
    CHECK(special_hilbert(q.Mm1, 0, 2, ctx) == std::vector<int>{1, 0, 0});
    std::vector<Poly> max{P("a"), P("X"), P("Y"), P("Z"), P("T")};
    CHECK(same_ideal(annihilator(q.M, ctx), max, ctx));
    CHECK(same_ideal(annihilator(q.M1, ctx), max, ctx));
    CHECK(same_ideal(annihilator(q.Mm1, ctx), max, ctx));
    // the drapeau feeds back into a trivial triad with the same fibers
    Triad back = trivial_triad(q.datum, ctx);
    CHECK(fiber_functor(back, FiberPoint::Special, ctx).hilbert == std::vector<int>{1, 1, 1});
    CHECK(fiber_functor(back, FiberPoint::Generic, ctx).hilbert == std::vector<int>{0, 1, 0});
  }
  SUBCASE("modular residue triad") {
    Subquotient q = subquotient_of(T(testing::modular_residue(ctx)), ctx);
    CHECK(q.consistent);
    CHECK(special_hilbert(q.datum.M0, 0, 0, ctx) == std::vector<int>{1});
    CHECK(special_hilbert(q.J, 0, 0, ctx) == std::vector<int>{1});
    CHECK(is_zero_module(q.M, ctx));
  }
  SUBCASE("exact triad of a flat heart") {
    Complex3 c;
    c.L1 = PresentedModule::free({});
    c.L0 = cyclic(0, {"X", "Y", "Z", "T"}, ctx);
    c.Lm1 = PresentedModule::free({});
    c.d1 = GradedMatrix({}, {0});
    c.d0 = GradedMatrix({0}, {});
    Subquotient q = subquotient_of(T(c), ctx);
    CHECK(q.consistent);
    CHECK(special_hilbert(q.M, 0, 0, ctx) == std::vector<int>{1});
    CHECK(is_zero_module(q.M1, ctx));
    CHECK(is_zero_module(q.Mm1, ctx));
  }
}
