#include "chartlab/schouten.hpp"

namespace chartlab::cal {

Multivector schouten_bracket(const Multivector& p, const Multivector& q) {
  sym::require_same_chart(p.chart(), q.chart(), "schouten_bracket");
  const Chart& chart = p.chart();
  const int dp = p.degree(), dq = q.degree();
  if (dp + dq == 0) return Multivector(chart, 0);
  Multivector out(chart, dp + dq - 1);

  // [f dI, g dJ] = (-1)^((q-1)p) sum_m (-1)^m g (d_{j_m} f) dJ\m ^ dI
  //             +                sum_m (-1)^(p-m) f (d_{i_m} g) dI\m ^ dJ
  // (1-based m, wedge carries the sorting sign)
  const bool front_sign = ((dq - 1) * dp) % 2 != 0;
  for (const auto& [I, f] : p.components()) {
    for (const auto& [J, g] : q.components()) {
      for (size_t m = 0; m < J.size(); ++m) {
        ScalarExpr df = f.differentiate(J[m]);
        if (df.is_zero()) continue;
        ScalarExpr c = g * df;
        if ((m + 1) % 2 != 0) c = -c; // (-1)^m with 1-based m
        if (front_sign) c = -c;
        IndexTuple idx;
        idx.reserve(I.size() + J.size() - 1);
        for (size_t t = 0; t < J.size(); ++t)
          if (t != m) idx.push_back(J[t]);
        idx.insert(idx.end(), I.begin(), I.end());
        out.add_term(std::move(idx), c);
      }
      for (size_t m = 0; m < I.size(); ++m) {
        ScalarExpr dg = g.differentiate(I[m]);
        if (dg.is_zero()) continue;
        ScalarExpr c = f * dg;
        if ((dp - static_cast<int>(m) - 1) % 2 != 0) c = -c; // (-1)^(p-m), 1-based m
        IndexTuple idx;
        idx.reserve(I.size() + J.size() - 1);
        for (size_t t = 0; t < I.size(); ++t)
          if (t != m) idx.push_back(I[t]);
        idx.insert(idx.end(), J.begin(), J.end());
        out.add_term(std::move(idx), c);
      }
    }
  }
  return out;
}

std::vector<std::vector<ScalarExpr>> sharp(const Multivector& pi) {
  if (pi.degree() != 2) throw std::invalid_argument("sharp needs a bivector");
  int n = pi.chart().dim();
  std::vector<std::vector<ScalarExpr>> m(
      static_cast<size_t>(n), std::vector<ScalarExpr>(static_cast<size_t>(n), ScalarExpr::zero(pi.chart())));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) m[static_cast<size_t>(j)][static_cast<size_t>(i)] = pi.component({i, j});
  return m;
}

ScalarExpr poisson_bracket(const Multivector& pi, const ScalarExpr& f, const ScalarExpr& g) {
  if (pi.degree() != 2) throw std::invalid_argument("poisson_bracket needs a bivector");
  sym::require_same_chart(pi.chart(), f.chart(), "poisson_bracket");
  sym::require_same_chart(pi.chart(), g.chart(), "poisson_bracket");
  ScalarExpr out = ScalarExpr::zero(pi.chart());
  for (const auto& [idx, c] : pi.components()) {
    int i = idx[0], j = idx[1];
    out = out + c * (f.differentiate(i) * g.differentiate(j) - f.differentiate(j) * g.differentiate(i));
  }
  return out;
}

Multivector hamiltonian_vf(const Multivector& pi, const ScalarExpr& f) {
  if (pi.degree() != 2) throw std::invalid_argument("hamiltonian_vf needs a bivector");
  sym::require_same_chart(pi.chart(), f.chart(), "hamiltonian_vf");
  Multivector x(pi.chart(), 1);
  for (const auto& [idx, c] : pi.components()) {
    int i = idx[0], j = idx[1];
    // pi^#(df) = sum_i (d_i f) pi(dx_i, .)
    x.add_term({j}, f.differentiate(i) * c);
    x.add_term({i}, -(f.differentiate(j) * c));
  }
  return x;
}

ScalarExpr jacobiator(const Multivector& pi, int i, int j, int k) {
  const Chart& c = pi.chart();
  ScalarExpr xi = ScalarExpr::variable(c, i), xj = ScalarExpr::variable(c, j),
             xk = ScalarExpr::variable(c, k);
  return poisson_bracket(pi, xi, poisson_bracket(pi, xj, xk)) +
         poisson_bracket(pi, xj, poisson_bracket(pi, xk, xi)) +
         poisson_bracket(pi, xk, poisson_bracket(pi, xi, xj));
}

Tri is_poisson(const Multivector& pi, const RandomPointConfig& cfg) {
  if (pi.degree() != 2) throw std::invalid_argument("is_poisson needs a bivector");
  const int n = pi.chart().dim();
  ScalarExpr zero = ScalarExpr::zero(pi.chart());
  Tri verdict = Tri::Yes;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        verdict = sym::combine(verdict, eq_as_tri(sym::eq_check(jacobiator(pi, i, j, k), zero, cfg)));
        if (verdict == Tri::No) return verdict;
      }
  return verdict;
}

} // namespace chartlab::cal
