#include "chartlab/one_one.hpp"

#include "chartlab/schouten.hpp"

namespace chartlab::cal {

OneOneTensor::OneOneTensor(Chart chart, std::vector<std::vector<ScalarExpr>> entries)
    : chart_(std::move(chart)), entries_(std::move(entries)) {
  size_t n = static_cast<size_t>(chart_.dim());
  if (entries_.size() != n) throw std::invalid_argument("(1,1)-tensor must be square");
  for (auto& row : entries_) {
    if (row.size() != n) throw std::invalid_argument("(1,1)-tensor must be square");
    for (auto& e : row) sym::require_same_chart(e.chart(), chart_, "(1,1)-tensor entry");
  }
}

OneOneTensor OneOneTensor::identity(const Chart& chart) {
  size_t n = static_cast<size_t>(chart.dim());
  std::vector<std::vector<ScalarExpr>> e(n, std::vector<ScalarExpr>(n, ScalarExpr::zero(chart)));
  for (size_t k = 0; k < n; ++k) e[k][k] = ScalarExpr::constant(chart, 1);
  return {chart, std::move(e)};
}

OneOneTensor OneOneTensor::zero(const Chart& chart) {
  size_t n = static_cast<size_t>(chart.dim());
  std::vector<std::vector<ScalarExpr>> e(n, std::vector<ScalarExpr>(n, ScalarExpr::zero(chart)));
  return {chart, std::move(e)};
}

Multivector OneOneTensor::apply(const Multivector& x) const {
  if (x.degree() != 1) throw std::invalid_argument("(1,1)-tensor applies to vector fields");
  sym::require_same_chart(x.chart(), chart_, "apply (1,1)-tensor");
  Multivector out(chart_, 1);
  for (const auto& [idx, c] : x.components()) {
    int l = idx[0];
    for (int k = 0; k < chart_.dim(); ++k) {
      const ScalarExpr& e = entry(k, l);
      if (!e.is_zero()) out.add_term({k}, e * c);
    }
  }
  return out;
}

OneOneTensor OneOneTensor::compose(const OneOneTensor& o) const {
  sym::require_same_chart(chart_, o.chart_, "compose (1,1)-tensors");
  size_t n = static_cast<size_t>(chart_.dim());
  std::vector<std::vector<ScalarExpr>> e(n, std::vector<ScalarExpr>(n, ScalarExpr::zero(chart_)));
  for (size_t k = 0; k < n; ++k)
    for (size_t l = 0; l < n; ++l) {
      ScalarExpr acc = ScalarExpr::zero(chart_);
      for (size_t m = 0; m < n; ++m) acc = acc + entries_[k][m] * o.entries_[m][l];
      e[k][l] = std::move(acc);
    }
  return {chart_, std::move(e)};
}

OneOneTensor OneOneTensor::operator+(const OneOneTensor& o) const {
  sym::require_same_chart(chart_, o.chart_, "add (1,1)-tensors");
  auto e = entries_;
  for (size_t k = 0; k < e.size(); ++k)
    for (size_t l = 0; l < e.size(); ++l) e[k][l] = e[k][l] + o.entries_[k][l];
  return {chart_, std::move(e)};
}

OneOneTensor OneOneTensor::operator-() const {
  auto e = entries_;
  for (auto& row : e)
    for (auto& v : row) v = -v;
  return {chart_, std::move(e)};
}

OneOneTensor OneOneTensor::operator*(const GaussRat& c) const {
  auto e = entries_;
  for (auto& row : e)
    for (auto& v : row) v = v * c;
  return {chart_, std::move(e)};
}

bool OneOneTensor::same_as(const OneOneTensor& o) const {
  if (!(chart_ == o.chart_)) return false;
  for (size_t k = 0; k < entries_.size(); ++k)
    for (size_t l = 0; l < entries_.size(); ++l)
      if (!entries_[k][l].same_as(o.entries_[k][l])) return false;
  return true;
}

bool OneOneTensor::squares_to_minus_identity() const {
  return compose(*this).same_as(-identity(chart_));
}

TwoOneTensor::TwoOneTensor(Chart chart) : chart_(std::move(chart)) {}

std::vector<ScalarExpr> TwoOneTensor::component(int i, int j) const {
  int sign = 1;
  if (i == j) return std::vector<ScalarExpr>(static_cast<size_t>(chart_.dim()), ScalarExpr::zero(chart_));
  if (i > j) {
    std::swap(i, j);
    sign = -1;
  }
  auto it = comps_.find({i, j});
  if (it == comps_.end())
    return std::vector<ScalarExpr>(static_cast<size_t>(chart_.dim()), ScalarExpr::zero(chart_));
  auto v = it->second;
  if (sign < 0)
    for (auto& e : v) e = -e;
  return v;
}

void TwoOneTensor::add(int i, int j, int k, const ScalarExpr& v) {
  if (v.is_zero() || i == j) return;
  int sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -1;
  }
  auto it = comps_.find({i, j});
  if (it == comps_.end())
    it = comps_
             .emplace(std::make_pair(i, j),
                      std::vector<ScalarExpr>(static_cast<size_t>(chart_.dim()), ScalarExpr::zero(chart_)))
             .first;
  it->second[static_cast<size_t>(k)] = it->second[static_cast<size_t>(k)] + (sign > 0 ? v : -v);
}

bool TwoOneTensor::is_zero() const {
  for (const auto& [ij, vec] : comps_)
    for (const auto& e : vec)
      if (!e.is_zero()) return false;
  return true;
}

TwoOneTensor nijenhuis_torsion(const OneOneTensor& n) {
  const Chart& chart = n.chart();
  const int d = chart.dim();
  TwoOneTensor t(chart);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        ScalarExpr acc = ScalarExpr::zero(chart);
        for (int l = 0; l < d; ++l) {
          acc = acc + n.entry(l, i) * n.entry(k, j).differentiate(l);
          acc = acc - n.entry(l, j) * n.entry(k, i).differentiate(l);
          acc = acc - n.entry(k, l) * (n.entry(l, j).differentiate(i) - n.entry(l, i).differentiate(j));
        }
        t.add(i, j, k, acc);
      }
  return t;
}

Multivector nijenhuis_on_fields(const OneOneTensor& n, const Multivector& v, const Multivector& w) {
  Multivector nv = n.apply(v), nw = n.apply(w);
  Multivector inner = schouten_bracket(nv, w) + schouten_bracket(v, nw) - n.apply(schouten_bracket(v, w));
  return schouten_bracket(nv, nw) - n.apply(inner);
}

} // namespace chartlab::cal
