#include <doctest.h>

#include "chartlab/chart_map.hpp"
#include "chartlab/one_one.hpp"
#include "chartlab/parse.hpp"
#include "chartlab/schouten.hpp"
#include "test_util.hpp"

using namespace chartlab::cal;
using namespace chartlab::sym;

namespace {

Chart r2() { return Chart("R2", {"x1", "x2"}); }
Chart r3() { return Chart("R3", {"x1", "x2", "x3"}); }

Multivector random_multivector(std::mt19937_64& rng, const Chart& c, int degree) {
  Multivector p(c, degree);
  std::vector<int> idx(static_cast<size_t>(degree));
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == degree) {
      std::uniform_int_distribution<int> keep(0, 2);
      if (keep(rng)) p.add_term(idx, test_util::random_poly(rng, c, 2));
      return;
    }
    for (int k = start; k < c.dim(); ++k) {
      idx[static_cast<size_t>(pos)] = k;
      rec(pos + 1, k + 1);
    }
  };
  rec(0, 0);
  return p;
}

Multivector so3_bivector(const Chart& c) {
  // x3 d1^d2 + x1 d2^d3 + x2 d3^d1
  Multivector pi(c, 2);
  pi.add_term({0, 1}, parse("x3", c));
  pi.add_term({1, 2}, parse("x1", c));
  pi.add_term({2, 0}, parse("x2", c));
  return pi;
}

} // namespace

TEST_CASE("wedge basics") {
  Chart c = r2();
  Multivector d1 = coordinate_field(c, 0), d2 = coordinate_field(c, 1);
  Multivector w = d1.wedge(d2);
  CHECK(w.component({0, 1}).same_as(ScalarExpr::constant(c, 1)));
  CHECK(w.component({1, 0}).same_as(ScalarExpr::constant(c, -1)));
  CHECK(d1.wedge(d1).is_zero());
  Multivector a = d1 * parse("x1", c), b = d2 * parse("x2", c);
  Multivector s = a.wedge(d2) + d1.wedge(b);
  CHECK(s.component({0, 1}).same_as(parse("x1+x2", c)));
}

TEST_CASE("schouten bracket spec examples") {
  Chart c = r2();
  Multivector d1 = coordinate_field(c, 0), d2 = coordinate_field(c, 1);
  CHECK(schouten_bracket(d1 * parse("x1", c), d2).is_zero());
  CHECK(schouten_bracket(d1 * parse("x2", c), d2).component({0}).same_as(parse("-1", c)));

  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    Multivector pi = random_multivector(rng, c, 2);
    CHECK(schouten_bracket(pi, pi).is_zero()); // no 3-vectors in dimension 2
  }
  Chart c3 = r3();
  CHECK(schouten_bracket(so3_bivector(c3), so3_bivector(c3)).is_zero());
}

TEST_CASE("schouten pinned conventions") {
  Chart c = r3();
  std::mt19937_64 rng(41);
  // [pi,pi](df,dg,dh) = 2 * cyclic Jacobiator
  for (int t = 0; t < 8; ++t) {
    Multivector pi = random_multivector(rng, c, 2);
    ScalarExpr f = test_util::random_poly(rng, c, 2), g = test_util::random_poly(rng, c, 2),
               h = test_util::random_poly(rng, c, 2);
    Multivector br = schouten_bracket(pi, pi);
    // br(df,dg,dh)
    ScalarExpr lhs = ScalarExpr::zero(c);
    for (const auto& [idx, comp] : br.components()) {
      ScalarExpr det = ScalarExpr::zero(c);
      int i = idx[0], j = idx[1], k = idx[2];
      auto d = [&](const ScalarExpr& u, int a) { return u.differentiate(a); };
      det = d(f, i) * (d(g, j) * d(h, k) - d(g, k) * d(h, j)) -
            d(f, j) * (d(g, i) * d(h, k) - d(g, k) * d(h, i)) +
            d(f, k) * (d(g, i) * d(h, j) - d(g, j) * d(h, i));
      lhs = lhs + comp * det;
    }
    ScalarExpr jac = poisson_bracket(pi, f, poisson_bracket(pi, g, h)) +
                     poisson_bracket(pi, g, poisson_bracket(pi, h, f)) +
                     poisson_bracket(pi, h, poisson_bracket(pi, f, g));
    CHECK(lhs.same_as(jac * 2));
  }
}

TEST_CASE("schouten graded antisymmetry and Leibniz") {
  Chart c = r3();
  std::mt19937_64 rng(7);
  for (auto [p, q] : std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {1, 2}, {2, 2}, {0, 2}, {2, 3}}) {
    for (int t = 0; t < 4; ++t) {
      Multivector P = random_multivector(rng, c, p), Q = random_multivector(rng, c, q);
      Multivector lhs = schouten_bracket(P, Q);
      Multivector rhs = schouten_bracket(Q, P);
      if (((p - 1) * (q - 1)) % 2 == 0) rhs = -rhs;
      CHECK(lhs.same_as(-(-rhs))); // lhs == -(-1)^((p-1)(q-1)) [Q,P]
      CHECK(lhs.same_as(rhs));
    }
  }
  for (auto [p, q, r] :
       std::vector<std::array<int, 3>>{{1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {1, 2, 1}, {2, 1, 2}, {2, 0, 2}}) {
    for (int t = 0; t < 3; ++t) {
      Multivector P = random_multivector(rng, c, p), Q = random_multivector(rng, c, q),
                  R = random_multivector(rng, c, r);
      Multivector lhs = schouten_bracket(P, Q.wedge(R));
      Multivector rhs = schouten_bracket(P, Q).wedge(R);
      Multivector second = Q.wedge(schouten_bracket(P, R));
      if (((p - 1) * q) % 2 != 0) second = -second;
      CHECK(lhs.same_as(rhs + second));
    }
  }
}

TEST_CASE("is_poisson and brackets") {
  Chart c = r3();
  Multivector pi = so3_bivector(c);
  CHECK(is_poisson(pi) == Tri::Yes);
  CHECK(poisson_bracket(pi, parse("x1", c), parse("x2", c)).same_as(parse("x3", c)));

  Multivector bad(c, 2);
  bad.add_term({0, 1}, parse("x3", c));
  bad.add_term({0, 2}, parse("x1", c));
  CHECK(is_poisson(bad) == Tri::No);
  CHECK(jacobiator(bad, 0, 1, 2).same_as(parse("x3", c)));

  Chart c2 = r2();
  std::mt19937_64 rng(9);
  for (int t = 0; t < 6; ++t) CHECK(is_poisson(random_multivector(rng, c2, 2)) == Tri::Yes);

  Multivector p12(c2, 2);
  p12.add_term({0, 1}, ScalarExpr::constant(c2, 1));
  CHECK(poisson_bracket(p12, parse("x1", c2), parse("x2", c2)).same_as(ScalarExpr::constant(c2, 1)));
  Multivector h = hamiltonian_vf(p12, parse("x1", c2));
  CHECK(h.same_as(coordinate_field(c2, 1))); // {x1,x2} = 1 sends x1 to d/dx2
  auto m = sharp(p12);
  CHECK(m[1][0].same_as(ScalarExpr::constant(c2, 1)));
  CHECK(m[0][1].same_as(ScalarExpr::constant(c2, -1)));
}

TEST_CASE("nijenhuis torsion") {
  Chart c = r2();
  // constant entries
  OneOneTensor n0(c, {{parse("1", c), parse("2", c)}, {parse("3", c), parse("5", c)}});
  CHECK(nijenhuis_torsion(n0).is_zero());

  // N(d1)=d2, N(d2)=x1 d1  =>  N(d1,d2) = -d2
  OneOneTensor n(c, {{parse("0", c), parse("x1", c)}, {parse("1", c), parse("0", c)}});
  TwoOneTensor t = nijenhuis_torsion(n);
  auto v = t.component(0, 1);
  CHECK(v[0].is_zero());
  CHECK(v[1].same_as(parse("-1", c)));

  // component formula agrees with direct evaluation on coordinate fields
  std::mt19937_64 rng(13);
  Chart c3 = r3();
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::vector<ScalarExpr>> e;
    for (int k = 0; k < 3; ++k) {
      std::vector<ScalarExpr> row;
      for (int l = 0; l < 3; ++l) row.push_back(test_util::random_poly(rng, c3, 2));
      e.push_back(std::move(row));
    }
    OneOneTensor nn(c3, e);
    TwoOneTensor tt = nijenhuis_torsion(nn);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        Multivector direct =
            nijenhuis_on_fields(nn, coordinate_field(c3, i), coordinate_field(c3, j));
        auto comp = tt.component(i, j);
        for (int k = 0; k < 3; ++k) CHECK(direct.component({k}).same_as(comp[static_cast<size_t>(k)]));
      }
  }

  // standard complex structure on R^2: J d/dx = d/dy, J d/dy = -d/dx
  OneOneTensor j(c, {{parse("0", c), parse("-1", c)}, {parse("1", c), parse("0", c)}});
  CHECK(j.squares_to_minus_identity());
  CHECK(nijenhuis_torsion(j).is_zero());
}

TEST_CASE("exterior derivative") {
  Chart c = r2();
  DifferentialForm xdy(c, 1);
  xdy.add_term({1}, parse("x1", c));
  DifferentialForm d = exterior_derivative(xdy);
  CHECK(d.component({0, 1}).same_as(parse("1", c)));

  Chart c3 = r3();
  DifferentialForm w(c3, 2);
  w.add_term({0, 1}, parse("x3", c3));
  DifferentialForm dw = exterior_derivative(w);
  CHECK(dw.component({2, 0, 1}).same_as(parse("1", c3)));

  // eta_1 is *not* closed on the flat ambient chart: d eta_1 = 3/(4 pi^2) dx1^dx2^dx3.
  DifferentialForm eta1(c3, 2);
  eta1.add_term({1, 2}, parse("x1/(4*pi^2)", c3));
  eta1.add_term({2, 0}, parse("x2/(4*pi^2)", c3));
  eta1.add_term({0, 1}, parse("x3/(4*pi^2)", c3));
  DifferentialForm de = exterior_derivative(eta1);
  CHECK(de.component({0, 1, 2}).same_as(parse("3/(4*pi^2)", c3)));

  // d o d = 0 on random forms
  std::mt19937_64 rng(21);
  Chart c4("R4", {"x1", "x2", "x3", "x4"});
  for (int deg = 0; deg <= 2; ++deg)
    for (int t = 0; t < 5; ++t) {
      DifferentialForm f(c4, deg);
      std::vector<int> idx;
      std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == deg) {
          f.add_term(idx, test_util::random_expr(rng, c4));
          return;
        }
        for (int k = start; k < 4; ++k) {
          idx.push_back(k);
          rec(pos + 1, k + 1);
          idx.pop_back();
        }
      };
      rec(0, 0);
      CHECK(exterior_derivative(exterior_derivative(f)).is_zero());
    }
}

TEST_CASE("pullback and pushforward") {
  Chart xy("XY", {"x", "y"});
  Chart uv("UV", {"u", "v"});

  // sigma(x,y) = (x,-y)
  ChartMap sigma(xy, xy, {parse("x", xy), parse("-y", xy)}, {{parse("x", xy), parse("-y", xy)}});
  Multivector dy = coordinate_field(xy, 1);
  CHECK(pushforward(dy, sigma).same_as(-dy));
  CHECK(pushforward(coordinate_field(xy, 0), ChartMap::identity(xy)).same_as(coordinate_field(xy, 0)));

  // (u,v) -> (u*v, u): pull dx^dy back to -u du^dv
  ChartMap m(uv, xy, {parse("u*v", uv), parse("u", uv)});
  DifferentialForm dxdy(xy, 2);
  dxdy.add_term({0, 1}, ScalarExpr::constant(xy, 1));
  DifferentialForm pb = pullback(dxdy, m);
  CHECK(pb.component({0, 1}).same_as(parse("-u", uv)));

  // pushforward then pushforward by the inverse is the identity
  std::mt19937_64 rng(33);
  ChartMap shear(xy, uv, {parse("x+y^3", xy), parse("y", xy)}, {{parse("u-v^3", uv), parse("v", uv)}});
  for (int deg = 1; deg <= 2; ++deg)
    for (int t = 0; t < 4; ++t) {
      Multivector p = random_multivector(rng, xy, deg);
      Multivector round = pushforward(pushforward(p, shear), shear.inverse_map());
      CHECK(round.same_as(p));
    }

  // pullback is functorial: (m1 o m2)^* = m2^* o m1^*
  ChartMap m2(uv, xy, {parse("u+v", uv), parse("v", uv)}, {{parse("x-y", xy), parse("y", xy)}});
  ChartMap m1(xy, xy, {parse("x*y", xy), parse("x+y", xy)});
  ChartMap comp = compose(m1, m2);
  std::uniform_int_distribution<int> pick(0, 1);
  for (int t = 0; t < 4; ++t) {
    DifferentialForm w(xy, 2);
    w.add_term({0, 1}, test_util::random_poly(rng, xy, 2));
    CHECK(pullback(w, comp).same_as(pullback(pullback(w, m1), m2)));
  }

  // invalid inverse is rejected
  CHECK_THROWS_AS(ChartMap(xy, xy, {parse("x+y", xy), parse("y", xy)},
                           {{parse("x+y", xy), parse("y", xy)}}),
                  std::invalid_argument);
}
