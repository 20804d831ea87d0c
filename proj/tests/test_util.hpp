#ifndef CHARTLAB_TEST_UTIL_HPP
#define CHARTLAB_TEST_UTIL_HPP

#include <random>

#include "chartlab/eq.hpp"
#include "chartlab/scalar.hpp"

namespace test_util {

using namespace chartlab::sym;

/// Random polynomial of bounded degree with small integer coefficients.
inline ScalarExpr random_poly(std::mt19937_64& rng, const Chart& chart, int max_degree = 3,
                              bool gaussian = false) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> nterms(1, 4);
  ScalarExpr out = ScalarExpr::zero(chart);
  int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    GaussRat c(coef(rng));
    if (gaussian && coef(rng) > 1) c = c + GaussRat::i() * GaussRat(coef(rng));
    ScalarExpr m = ScalarExpr::constant(chart, c);
    int d = deg(rng);
    for (int k = 0; k < d; ++k) {
      std::uniform_int_distribution<int> pick(0, chart.dim() - 1);
      m = m * ScalarExpr::variable(chart, pick(rng));
    }
    out = out + m;
  }
  return out;
}

/// Random expression that may carry exp/sin/cos atoms.
inline ScalarExpr random_expr(std::mt19937_64& rng, const Chart& chart) {
  ScalarExpr e = random_poly(rng, chart, 2);
  std::uniform_int_distribution<int> kind(0, 5);
  switch (kind(rng)) {
    case 0: e = e * exp_of(random_poly(rng, chart, 2)); break;
    case 1: e = e * sin_of(random_poly(rng, chart, 1)); break;
    case 2: e = e * cos_of(random_poly(rng, chart, 1)); break;
    case 3: e = e + sin_of(random_poly(rng, chart, 1)) * random_poly(rng, chart, 1); break;
    default: break;
  }
  return e;
}

inline bool exactly_equal(const ScalarExpr& a, const ScalarExpr& b) {
  return eq_check(a, b) == EqResult::Equal;
}

} // namespace test_util

#endif
