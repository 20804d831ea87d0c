#include <doctest.h>

#include "chartlab/complex_split.hpp"
#include "chartlab/parse.hpp"
#include "test_util.hpp"

using namespace chartlab::sym;
using test_util::exactly_equal;

namespace {
Chart r2() { return Chart("R2", {"x", "y"}); }
Chart r3() { return Chart("R3", {"x1", "x2", "x3"}); }
} // namespace

TEST_CASE("parse normal forms") {
  Chart c = Chart("C", {"x1", "y1", "z1", "z2", "z3"});
  CHECK(parse("x1^2*y1", c).str() == "x1^2*y1");
  CHECK(parse("exp((z1^2+z2^2+z3^2)/2)*z1", c).same_as(
      parse("z1*exp(z1^2/2+z2^2/2+z3^2/2)", c)));
  CHECK(parse("exp(x1)*exp(-x1)", c).same_as(ScalarExpr::constant(c, 1)));
  CHECK(parse("2+3", c).same_as(ScalarExpr::constant(c, 5)));
  CHECK(parse("1/2", c).constant_value().value() == GaussRat(1, 2));
  CHECK(parse("i^2", c).constant_value().value() == GaussRat(-1));
  CHECK(parse("x1/(4*pi^2)", c).same_as(
      ScalarExpr::variable(c, 0) * ScalarExpr::pi_const(c, -2) * GaussRat(1, 4)));
}

TEST_CASE("parse errors carry a position") {
  Chart c = r2();
  CHECK_THROWS_AS(parse("x +* y", c), ParseError);
  CHECK_THROWS_AS(parse("q + 1", c), ParseError);         // unknown identifier
  CHECK_THROWS_AS(parse("exp(sin(x))", c), ParseError);   // non-polynomial argument
  CHECK_THROWS_AS(parse("x^y", c), ParseError);           // non-integer exponent
  CHECK_THROWS_AS(parse("1/x", c), ParseError);           // division by non-constant
  CHECK_THROWS_AS(parse("x^-1", c), ParseError);          // coordinates are not units
  CHECK_THROWS_AS(parse("sin(i*x)", c), ParseError);      // non-real trig argument
  try {
    parse("x + (y", c);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.pos == 6);
  }
}

TEST_CASE("printing round-trips") {
  std::mt19937_64 rng(11);
  Chart c = r3();
  for (int t = 0; t < 60; ++t) {
    ScalarExpr e = test_util::random_expr(rng, c);
    ScalarExpr back = parse(e.str(), c);
    CHECK(back.same_as(e));
  }
  // Gaussian coefficients
  ScalarExpr g = parse("(1/2 + 3*i)*x1 - i*x2 + 2", c);
  CHECK(parse(g.str(), c).same_as(g));
}

TEST_CASE("differentiate basics") {
  Chart c = r2();
  Variable x{c, 0}, y{c, 1};
  ScalarExpr ex = ScalarExpr::variable(c, 0), ey = ScalarExpr::variable(c, 1);
  CHECK(parse("x^2*y", c).differentiate(x).same_as(parse("2*x*y", c)));
  CHECK(parse("exp(x^2/2)", c).differentiate(x).same_as(ex * exp_of(ex * ex / ScalarExpr::constant(c, 2))));
  CHECK(parse("sin(x*y)", c).differentiate(x).same_as(ey * cos_of(ex * ey)));
  CHECK(parse("cos(x)", c).differentiate(x).same_as(-sin_of(ex)));
  CHECK(ScalarExpr::pi_const(c).differentiate(x).is_zero());
  // product and chain rules on a thicker expression
  ScalarExpr f = parse("x^3*sin(x*y)*exp(y^2)", c);
  ScalarExpr want = parse("3*x^2*sin(x*y)*exp(y^2) + x^3*y*cos(x*y)*exp(y^2)", c);
  CHECK(f.differentiate(x).same_as(want));
}

TEST_CASE("mixed partials commute on random expressions") {
  std::mt19937_64 rng(5);
  Chart c = r3();
  for (int t = 0; t < 40; ++t) {
    ScalarExpr e = test_util::random_expr(rng, c);
    ScalarExpr a = e.differentiate(0).differentiate(1);
    ScalarExpr b = e.differentiate(1).differentiate(0);
    CHECK(a.same_as(b));
  }
}

TEST_CASE("normalization is stable under reassembly") {
  std::mt19937_64 rng(17);
  Chart c = r3();
  for (int t = 0; t < 40; ++t) {
    ScalarExpr e = test_util::random_expr(rng, c);
    // rebuilding from the printed form must be a fixed point
    ScalarExpr once = parse(e.str(), c);
    ScalarExpr twice = parse(once.str(), c);
    CHECK(once.same_as(twice));
  }
}

TEST_CASE("trig rewrites") {
  Chart c = r2();
  ScalarExpr x = ScalarExpr::variable(c, 0);
  CHECK(exactly_equal(cos_of(x) * cos_of(x), ScalarExpr::constant(c, 1) - sin_of(x) * sin_of(x)));
  CHECK(sin_of(-x).same_as(-sin_of(x)));
  CHECK(cos_of(-x).same_as(cos_of(x)));
  CHECK(cos_of(x).pow(4).same_as((ScalarExpr::constant(c, 1) - sin_of(x) * sin_of(x)).pow(2)));
  CHECK(sin_of(ScalarExpr::zero(c)).is_zero());
  CHECK(cos_of(ScalarExpr::zero(c)).same_as(ScalarExpr::constant(c, 1)));
}

TEST_CASE("eq_check three outcomes") {
  Chart c = r2();
  CHECK(eq_check(parse("(x+y)^2", c), parse("x^2+2*x*y+y^2", c)) == EqResult::Equal);
  CHECK(eq_check(parse("cos(x)^2", c), parse("1-sin(x)^2", c)) == EqResult::Equal);
  // double angle lies outside the rewrite set: numerically indistinguishable
  CHECK(eq_check(parse("sin(2*x)", c), parse("2*sin(x)*cos(x)", c)) == EqResult::ProbablyEqual);
  CHECK(eq_check(parse("x*y", c), parse("x+y", c)) == EqResult::NotEqual);
}

TEST_CASE("evaluate") {
  Chart c = r2();
  CHECK(parse("x^2", c).evaluate({{"x", 3.0}}).real() == doctest::Approx(9.0));
  CHECK(parse("exp(x)", c).evaluate({{"x", 0.0}}).real() == doctest::Approx(1.0));
  CHECK(parse("pi", c).evaluate({}).real() == doctest::Approx(3.14159265358979));
  CHECK(parse("1/(4*pi^2)", c).evaluate({}).real() == doctest::Approx(1.0 / (4 * M_PI * M_PI)));
  CHECK(parse("i*x", c).evaluate({{"x", 2.0}}).imag() == doctest::Approx(2.0));
  CHECK_THROWS_AS(parse("exp(x*y)", c).evaluate({{"x", 1.0}}), EvalError);
}

TEST_CASE("split_complex examples") {
  CoordPairing p = standard_pairing(1, "C1");
  Chart zc = p.z_chart, rc = p.real_chart;
  ScalarExpr z = ScalarExpr::variable(zc, 0);
  ScalarExpr x = ScalarExpr::variable(rc, 0), y = ScalarExpr::variable(rc, 1);

  ComplexScalar zz = split_complex(z * z, p);
  CHECK(zz.re.same_as(x * x - y * y));
  CHECK(zz.im.same_as(x * y * 2));

  ComplexScalar ez = split_complex(exp_of(z), p);
  CHECK(ez.re.same_as(exp_of(x) * cos_of(y)));
  CHECK(ez.im.same_as(exp_of(x) * sin_of(y)));

  ComplexScalar iz = split_complex(z * GaussRat::i(), p);
  CHECK(iz.re.same_as(-y));
  CHECK(iz.im.same_as(x));
}

TEST_CASE("split respects products and recombination") {
  std::mt19937_64 rng(23);
  CoordPairing p = standard_pairing(2, "C2");
  for (int t = 0; t < 25; ++t) {
    ScalarExpr a = test_util::random_poly(rng, p.z_chart, 2, true);
    ScalarExpr b = test_util::random_poly(rng, p.z_chart, 2, true);
    ComplexScalar sa = split_complex(a, p), sb = split_complex(b, p), sab = split_complex(a * b, p);
    CHECK(sab.re.same_as(sa.re * sb.re - sa.im * sb.im));
    CHECK(sab.im.same_as(sa.re * sb.im + sa.im * sb.re));
    // recombining reproduces the substituted expression
    std::map<int, ScalarExpr> repl;
    for (int k = 0; k < p.n(); ++k) {
      ScalarExpr xr = ScalarExpr::variable(p.real_chart, p.pairs[k].first);
      ScalarExpr yr = ScalarExpr::variable(p.real_chart, p.pairs[k].second);
      repl.emplace(k, xr + yr * GaussRat::i());
    }
    CHECK(recombine(sa).same_as(a.substitute(repl, p.real_chart)));
  }
}

TEST_CASE("cauchy-riemann") {
  CoordPairing p = standard_pairing(1, "C1");
  ScalarExpr z = ScalarExpr::variable(p.z_chart, 0);
  ScalarExpr x = ScalarExpr::variable(p.real_chart, 0), y = ScalarExpr::variable(p.real_chart, 1);

  CHECK(cauchy_riemann_check(split_complex(z * z, p), p) == Tri::Yes);
  CHECK(cauchy_riemann_check(split_complex(exp_of(z), p), p) == Tri::Yes);
  // conj(z) = x - i y
  CHECK(cauchy_riemann_check(ComplexScalar{x, -y}, p) == Tri::No);

  std::mt19937_64 rng(31);
  CoordPairing p2 = standard_pairing(2, "C2");
  for (int t = 0; t < 20; ++t) {
    ScalarExpr f = test_util::random_poly(rng, p2.z_chart, 3, true);
    CHECK(cauchy_riemann_check(split_complex(f, p2), p2) == Tri::Yes);
  }
  // genuine conj dependence fails: f = x1 (the real part of z1)
  ScalarExpr x1 = ScalarExpr::variable(p2.real_chart, 0);
  CHECK(cauchy_riemann_check(ComplexScalar{x1, ScalarExpr::zero(p2.real_chart)}, p2) == Tri::No);
}

TEST_CASE("division is restricted to constants and powers of pi") {
  Chart c = r2();
  ScalarExpr x = ScalarExpr::variable(c, 0);
  CHECK((x / ScalarExpr::constant(c, 2)).same_as(x * GaussRat(1, 2)));
  CHECK((x / ScalarExpr::pi_const(c)).same_as(x * ScalarExpr::pi_const(c, -1)));
  CHECK_THROWS_AS(x / ScalarExpr::variable(c, 1), std::domain_error);
  CHECK_THROWS_AS(x / ScalarExpr::zero(c), std::domain_error);
}
