#include "chartlab/complex_split.hpp"

namespace chartlab::sym {

CoordPairing::CoordPairing(Chart z, Chart real, std::vector<std::pair<int, int>> p)
    : z_chart(std::move(z)), real_chart(std::move(real)), pairs(std::move(p)) {
  if (static_cast<int>(pairs.size()) != z_chart.dim())
    throw std::invalid_argument("pairing must cover every z coordinate");
  std::vector<bool> seen(static_cast<size_t>(real_chart.dim()), false);
  for (auto [x, y] : pairs) {
    if (x < 0 || y < 0 || x >= real_chart.dim() || y >= real_chart.dim() || x == y)
      throw std::invalid_argument("pairing indices outside the real chart");
    if (seen[static_cast<size_t>(x)] || seen[static_cast<size_t>(y)])
      throw std::invalid_argument("pairing reuses a real coordinate");
    seen[static_cast<size_t>(x)] = seen[static_cast<size_t>(y)] = true;
  }
}

CoordPairing standard_pairing(int n, const std::string& chart_name) {
  std::vector<std::string> zc, rc;
  for (int k = 1; k <= n; ++k) zc.push_back("z" + std::to_string(k));
  for (int k = 1; k <= n; ++k) rc.push_back("x" + std::to_string(k));
  for (int k = 1; k <= n; ++k) rc.push_back("y" + std::to_string(k));
  Chart z(chart_name + ".z", zc);
  Chart real(chart_name, rc);
  std::vector<std::pair<int, int>> pairs;
  for (int k = 0; k < n; ++k) pairs.emplace_back(k, n + k);
  return {z, real, pairs};
}

ComplexScalar split_complex(const ScalarExpr& e, const CoordPairing& pairing) {
  require_same_chart(e.chart(), pairing.z_chart, "split_complex");
  std::map<int, ScalarExpr> repl;
  for (int k = 0; k < pairing.n(); ++k) {
    ScalarExpr x = ScalarExpr::variable(pairing.real_chart, pairing.pairs[static_cast<size_t>(k)].first);
    ScalarExpr y = ScalarExpr::variable(pairing.real_chart, pairing.pairs[static_cast<size_t>(k)].second);
    repl.emplace(k, x + y * GaussRat::i());
  }
  ScalarExpr sub = e.substitute(repl, pairing.real_chart);
  Polynomial re, im;
  sub.poly().split(re, im);
  return {ScalarExpr(pairing.real_chart, std::move(re)), ScalarExpr(pairing.real_chart, std::move(im))};
}

ScalarExpr recombine(const ComplexScalar& f) {
  require_same_chart(f.re.chart(), f.im.chart(), "recombine");
  return f.re + f.im * GaussRat::i();
}

ScalarExpr rename_coords(const ScalarExpr& e, const Chart& target) {
  if (target.dim() < e.chart().dim())
    throw std::invalid_argument("rename_coords: target chart too small");
  std::map<int, ScalarExpr> repl;
  for (int k = 0; k < e.chart().dim(); ++k) repl.emplace(k, ScalarExpr::variable(target, k));
  return e.substitute(repl, target);
}

Tri cauchy_riemann_check(const ComplexScalar& f, const CoordPairing& pairing,
                         const RandomPointConfig& cfg) {
  require_same_chart(f.re.chart(), pairing.real_chart, "cauchy_riemann_check");
  require_same_chart(f.im.chart(), pairing.real_chart, "cauchy_riemann_check");
  Tri verdict = Tri::Yes;
  for (auto [x, y] : pairing.pairs) {
    EqResult a = eq_check(f.re.differentiate(x), f.im.differentiate(y), cfg);
    EqResult b = eq_check(f.re.differentiate(y), -f.im.differentiate(x), cfg);
    verdict = combine(verdict, combine(eq_as_tri(a), eq_as_tri(b)));
    if (verdict == Tri::No) return Tri::No;
  }
  return verdict;
}

} // namespace chartlab::sym
