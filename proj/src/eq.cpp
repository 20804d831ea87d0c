#include "chartlab/eq.hpp"

#include <cmath>
#include <random>

namespace chartlab::sym {

const char* to_cstr(EqResult r) {
  switch (r) {
    case EqResult::Equal: return "Equal";
    case EqResult::ProbablyEqual: return "ProbablyEqual";
    case EqResult::NotEqual: return "NotEqual";
  }
  return "?";
}

const char* to_cstr(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Inconclusive: return "inconclusive";
  }
  return "?";
}

EqResult eq_check(const ScalarExpr& a, const ScalarExpr& b, const RandomPointConfig& cfg) {
  require_same_chart(a.chart(), b.chart(), "eq_check");
  ScalarExpr diff = a - b;
  if (diff.is_zero()) return EqResult::Equal;

  std::set<int> used;
  diff.poly().collect_vars(used);

  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<long> num(-cfg.max_denominator, cfg.max_denominator);

  int accepted = 0, attempts = 0;
  const int max_attempts = cfg.points * std::max(cfg.max_retries, 1);
  while (accepted < cfg.points) {
    if (++attempts > max_attempts)
      throw EvalError("eq_check: persistent evaluation overflow while sampling");
    std::vector<double> point(static_cast<size_t>(a.chart().dim()), 0.0);
    for (int id : used)
      point[static_cast<size_t>(id)] =
          static_cast<double>(num(rng)) / static_cast<double>(cfg.max_denominator);
    std::complex<double> va = a.evaluate_indexed(point);
    std::complex<double> vb = b.evaluate_indexed(point);
    if (!std::isfinite(va.real()) || !std::isfinite(va.imag()) || !std::isfinite(vb.real()) ||
        !std::isfinite(vb.imag()) || std::abs(va) > 1e100 || std::abs(vb) > 1e100)
      continue; // overflow at this sample; retry elsewhere
    ++accepted;
    if (std::abs(va - vb) > cfg.tolerance) return EqResult::NotEqual;
  }
  return EqResult::ProbablyEqual;
}

} // namespace chartlab::sym
