#include <random>

#include "doctest.h"
#include "triadlab/chiffres.hpp"
#include "triadlab/graded_matrix.hpp"
#include "triadlab/poly.hpp"
#include "triadlab/upoly.hpp"
#include "fixtures.hpp"

using namespace triadlab;

namespace {
const Field QQ = Field::rationals();
Poly P(const char* s) { return parse_poly(s, QQ); }
}  // namespace

TEST_CASE("scalars are exact in both fields") {
  Scalar h(QQ, mpq_class(1, 2));
  CHECK((h + h).is_one());
  CHECK((h * Scalar(QQ, 2)).is_one());
  Field f = Field::prime(7);
  Scalar x(f, 3);
  CHECK((x * x.inverse()).is_one());
  CHECK(Scalar(f, -1).str() == "6");
  CHECK(Scalar(f, mpq_class(1, 2)).str() == "4");
}

TEST_CASE("parse_poly handles implicit products and canonical forms") {
  Poly p = P("aT^2-XY");
  CHECK(p.size() == 2);
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK(P("0").is_zero());
  CHECK(P("X*Y - Y*X").is_zero());
  CHECK(P("(X+Y)*(X-Y)") == P("X^2-Y^2"));
  CHECK(P("a^2T+XY").specialize_a(Scalar(QQ, 0)) == P("XY"));
  CHECK(P("X^2+aX^2+T").homogeneous_part(2) == P("X^2+aX^2"));
  CHECK(P("1/2X+3/4").str() == "1/2X+3/4");
}

TEST_CASE("parse_poly reports positions") {
  try {
    (void)P("X + b");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS((void)P("X +"), ParseError);
  CHECK_THROWS_AS((void)P("(X"), ParseError);
}

TEST_CASE("format then parse is the identity") {
  std::mt19937 rng(11);
  for (int it = 0; it < 200; ++it) {
    Poly p = testing::random_poly(rng, QQ, it % 4, 4);
    CHECK(P(p.str().c_str()) == p);
  }
}

TEST_CASE("term order: grevlex on XYZT, a breaks ties") {
  CHECK(compare(Monomial::var(kX), Monomial::var(kY)) > 0);
  CHECK(compare(Monomial::var(kX) * Monomial::var(kT), Monomial::var(kY, 2)) < 0);
  CHECK(compare(Monomial::var(kA) * Monomial::var(kT), Monomial::var(kT)) > 0);
  CHECK(compare(Monomial::var(kA, 5) * Monomial::var(kT), Monomial::var(kX)) < 0);
  CHECK(compare(Monomial::var(kA), Monomial{}) > 0);
}

TEST_CASE("specialize(a:=0) is a ring homomorphism") {
  std::mt19937 rng(5);
  Scalar zero(QQ, 0);
  for (int it = 0; it < 100; ++it) {
    Poly f = testing::random_poly(rng, QQ, 1, 4), g = testing::random_poly(rng, QQ, 2, 4);
    CHECK((f + g).specialize_a(zero) == f.specialize_a(zero) + g.specialize_a(zero));
    CHECK((f * g).specialize_a(zero) == f.specialize_a(zero) * g.specialize_a(zero));
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(9);
  for (int it = 0; it < 60; ++it) {
    Poly f = testing::random_poly(rng, QQ, 1, 3), g = testing::random_poly(rng, QQ, 1, 3),
         h = testing::random_poly(rng, QQ, 2, 3);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f - f == Poly());
  }
}

TEST_CASE("chiffres parse and format") {
  Chiffres c = Chiffres::parse("1^3,2^6");
  CHECK(c.items() == std::vector<std::pair<int, int>>{{1, 3}, {2, 6}});
  CHECK(c.rank() == 9);
  CHECK(c.c1() == -15);
  CHECK(Chiffres::parse("0,1^4").items() == std::vector<std::pair<int, int>>{{0, 1}, {1, 4}});
  CHECK(Chiffres::parse("").empty());
  CHECK(Chiffres::parse("").str() == "");
  for (const char* s : {"1^3,2^6", "0,1^4", "0", "2,3^4,4", "-1^2,0"})
    CHECK(Chiffres::parse(s).str() == s);
  CHECK_THROWS_AS(Chiffres::parse("1^0"), ParseError);
  CHECK_THROWS_AS(Chiffres::parse("1^"), ParseError);
  CHECK_THROWS_AS(Chiffres::parse("x"), ParseError);
  CHECK(parse_degree_list("2,1^3") == DegreeList{2, 1, 1, 1});
}

TEST_CASE("rank and c1 are additive under concatenation") {
  std::mt19937 rng(2);
  for (int it = 0; it < 50; ++it) {
    DegreeList x, y;
    for (int i = rng() % 6; i > 0; --i) x.push_back(static_cast<int>(rng() % 7) - 2);
    for (int i = rng() % 6; i > 0; --i) y.push_back(static_cast<int>(rng() % 7) - 2);
    Chiffres a(x), b(y);
    CHECK((a + b).rank() == a.rank() + b.rank());
    CHECK((a + b).c1() == a.c1() + b.c1());
  }
}

TEST_CASE("graded_matrix_check") {
  Context ctx;
  GradedMatrix d0 = testing::matrix("0,1^4", "0", "a, X, Y, Z, T", ctx);
  CHECK(graded_matrix_check(d0).empty());
  GradedMatrix bad = testing::matrix("0", "0", "X", ctx);
  auto v = graded_matrix_check(bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0].required_degree == 0);
  CHECK(graded_matrix_check(testing::d1_prime(ctx)).empty());
}

TEST_CASE("homogeneous columns map to homogeneous vectors") {
  Context ctx;
  GradedMatrix d = testing::d1_prime(ctx);
  std::mt19937 rng(3);
  for (int it = 0; it < 30; ++it) {
    int deg = 2 + it % 3;
    Vec v(d.cols());
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (deg >= d.source()[j]) v[j] = testing::random_poly(rng, ctx.field, deg - d.source()[j], 2);
    Vec w = d.apply(v);
    bool ok = false;
    int dw = vec_degree(w, d.target(), &ok);
    if (!vec_is_zero(w)) {
      CHECK(ok);
      CHECK(dw == deg);
    }
  }
}

TEST_CASE("univariate arithmetic and local units") {
  Context ctx;
  UPoly one(ctx.one());
  UPoly a = UPoly::monomial(ctx.one(), 1);
  CHECK((one + a).is_local_unit());
  CHECK_FALSE(a.is_local_unit());
  CoefElem u(one + a);
  CHECK(u.is_unit());
  CoefElem q = CoefElem(a) / u;
  CHECK(q.valuation() == 1);
  CHECK(q * u == CoefElem(a));
  CHECK_THROWS((void)(CoefElem(one) / CoefElem(a)));
  // 1/(1+a) = 1 - a + a^2 - ... modulo a^3
  CHECK(CoefElem(one, one + a).truncated(3) ==
        UPoly({ctx.one(), -ctx.one(), ctx.one()}));
}
