#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bei/poly.hpp"

using namespace bei;

static RingPtr R4() { return Ring::xy_lex(4, Field{}); }

TEST_CASE("scalar arithmetic over Q and F_p") {
  Field q{};
  auto a = scalar_of(q, 1, 2), b = scalar_of(q, 1, 3);
  CHECK(add(q, a, b).str() == "5/6");
  CHECK(mul(q, a, b).str() == "1/6");
  CHECK(inv(q, b).str() == "3");

  Field fp{kDefaultPrime};
  auto two = scalar_of(fp, 2);
  auto half = inv(fp, two);
  CHECK(mul(fp, two, half).is_one());
  CHECK(add(fp, scalar_of(fp, kDefaultPrime - 1), scalar_of(fp, 1)).is_zero());
  CHECK(reduce(fp, mpq_class(-1)).str() == "32002");
}

TEST_CASE("monomial order is lex with x1 heaviest") {
  auto R = R4();
  auto x1 = R->var_monomial(vx(1)), x2 = R->var_monomial(vx(2));
  auto y1 = R->var_monomial(vy(1));
  CHECK(Monomial::cmp(x1, x2) > 0);
  CHECK(Monomial::cmp(x2, y1) > 0);
  CHECK(Monomial::cmp(Monomial::mul(x1, y1), Monomial::mul(x1, x2)) < 0);
  CHECK(Monomial::cmp(x1, x1) == 0);
}

TEST_CASE("monomial division and lcm") {
  auto R = R4();
  auto m = Poly::parse(R, "x1^2*y2").lm();
  auto d = Poly::parse(R, "x1*y2").lm();
  CHECK(Monomial::divides(d, m));
  auto q = Monomial::try_div(m, d);
  REQUIRE(q.has_value());
  CHECK(R->monomial_str(*q) == "x1");
  CHECK(!Monomial::try_div(m, Poly::parse(R, "y1").lm()).has_value());
  auto l = Monomial::lcm(Poly::parse(R, "x1*y2").lm(), Poly::parse(R, "x2*y2^2").lm());
  CHECK(R->monomial_str(l) == "x1*x2*y2^2");
}

TEST_CASE("parse and print round trip") {
  auto R = R4();
  for (const char* s : {"x1*y2 - x2*y1", "x1^3 + 3/2*x2*y4 - y4^2", "-x1 + 2",
                        "0", "1", "-5/7"}) {
    CHECK(Poly::parse(R, s).str() == s);
  }
  CHECK(Poly::parse(R, "x2*x1").str() == "x1*x2");
  CHECK(Poly::parse(R, "x1 + x1").str() == "2*x1");
  CHECK(Poly::parse(R, "x1 - x1").str() == "0");
  CHECK_THROWS(Poly::parse(R, "x9"));
  CHECK_THROWS(Poly::parse(R, "x1 +"));
}

TEST_CASE("arithmetic keeps canonical form") {
  auto R = R4();
  auto f = Poly::parse(R, "x1*y2 - x2*y1");
  auto g = Poly::parse(R, "x2*y1");
  CHECK((f + g).str() == "x1*y2");
  CHECK((f - f).is_zero());
  auto h = f * f;
  CHECK(h.str() == "x1^2*y2^2 - 2*x1*x2*y1*y2 + x2^2*y1^2");
  CHECK(h.degree() == 4);
  CHECK(h.is_homogeneous());
  CHECK((f * Poly::constant(R, scalar_of(R->field(), 0))).is_zero());
  CHECK(f.scaled(scalar_of(R->field(), -2)).str() == "-2*x1*y2 + 2*x2*y1");
  CHECK(f.monic() == f);
}

TEST_CASE("substitution") {
  auto R = R4();
  auto f = Poly::parse(R, "x1*y2 - x2*y1");
  std::map<VarName, Poly> img;
  img[vx(1)] = Poly::parse(R, "x3");
  img[vy(1)] = Poly::parse(R, "y3");
  CHECK(f.substitute(img, R).str() == "-x2*y3 + x3*y2");
  // composite image
  std::map<VarName, Poly> img2;
  img2[vx(1)] = Poly::parse(R, "x2*y1 + x4");
  CHECK(f.substitute(img2, R).str() == "x2*y1*y2 - x2*y1 + x4*y2");
}

TEST_CASE("ring reorder and subring") {
  auto R = R4();
  auto Rf = R->with_front({vy(2)});
  CHECK(Rf->vars().front() == vy(2));
  CHECK(Rf->vars().size() == 8);
  auto f = Poly::parse(R, "x1 + y2");
  CHECK(f.change_ring(Rf).lm() == Rf->var_monomial(vy(2)));

  auto Rs = R->without({vx(4), vy(4)});
  CHECK(Rs->vars().size() == 6);
  CHECK_THROWS(Poly::parse(R, "x4").change_ring(Rs));
  CHECK(Poly::parse(R, "x1*y3").change_ring(Rs).str() == "x1*y3");
}

TEST_CASE("graded basis") {
  auto R = Ring::xy_lex(1, Field{});
  auto b1 = graded_basis(R, 1);
  REQUIRE(b1.size() == 2);
  CHECK(R->monomial_str(b1[0]) == "x1");
  CHECK(R->monomial_str(b1[1]) == "y1");
  CHECK(graded_basis(R, 3).size() == 4);
  auto Rb = R4();
  CHECK(graded_basis(Rb, 2).size() == 36);  // C(8+1,2)
  CHECK(graded_basis(Rb, 2, {vx(1), vx(2)}).size() == 3);
}

TEST_CASE("free vectors") {
  auto R = R4();
  FreeVector v(R);
  v.add_to({1, 2}, Poly::parse(R, "x3"));
  v.add_to({3, 4}, Poly::parse(R, "-y1"));
  v.add_to({1, 2}, Poly::parse(R, "-x3"));
  CHECK(v.coord({1, 2}).is_zero());
  CHECK(v.str() == "e{3,4} <- -y1");
  FreeVector w(R);
  w.add_to({3, 4}, Poly::parse(R, "y1"));
  CHECK((v + w).is_zero());

  std::map<Edge, Poly> images;
  images[{3, 4}] = Poly::parse(R, "x3*y4 - x4*y3");
  CHECK(v.apply(images).str() == "-x3*y1*y4 + x4*y1*y3");
}

TEST_CASE("T variables live alongside xy") {
  Field F{};
  std::vector<VarName> prec{vt(), vT({1, 2}), vx(1), vx(2), vy(1), vy(2)};
  auto R = Ring::make(F, prec);
  auto p = Poly::parse(R, "T[1,2] - x1*y2*t");
  auto expect = Monomial::mul(Monomial::mul(R->var_monomial(vt()), R->var_monomial(vx(1))),
                              R->var_monomial(vy(2)));
  CHECK(p.lm() == expect);
  CHECK(p.str() == "-t*x1*y2 + T[1,2]");
}
