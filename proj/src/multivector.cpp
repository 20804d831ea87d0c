#include "chartlab/multivector.hpp"

#include <algorithm>

namespace chartlab::cal {

int sort_index(IndexTuple& idx) {
  int sign = 1;
  for (size_t i = 1; i < idx.size(); ++i) {
    size_t j = i;
    while (j > 0 && idx[j - 1] > idx[j]) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
      --j;
    }
  }
  for (size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

template <bool C>
SkewTensor<C>::SkewTensor(Chart chart, int degree) : chart_(std::move(chart)), degree_(degree) {
  if (degree < 0) throw std::invalid_argument("negative tensor degree");
}

template <bool C>
void SkewTensor<C>::add_term(IndexTuple idx, const ScalarExpr& value) {
  if (static_cast<int>(idx.size()) != degree_) throw std::invalid_argument("index arity != degree");
  for (int i : idx)
    if (i < 0 || i >= chart_.dim()) throw std::out_of_range("tensor index outside chart");
  if (value.is_zero()) return;
  sym::require_same_chart(value.chart(), chart_, "tensor component");
  int s = sort_index(idx);
  if (s == 0) return;
  ScalarExpr v = s > 0 ? value : -value;
  auto it = comps_.find(idx);
  if (it == comps_.end()) {
    comps_.emplace(std::move(idx), std::move(v));
  } else {
    it->second = it->second + v;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

template <bool C>
ScalarExpr SkewTensor<C>::component(IndexTuple idx) const {
  int s = sort_index(idx);
  if (s == 0) return ScalarExpr::zero(chart_);
  auto it = comps_.find(idx);
  if (it == comps_.end()) return ScalarExpr::zero(chart_);
  return s > 0 ? it->second : -it->second;
}

template <bool C>
bool SkewTensor<C>::same_as(const SkewTensor& o) const {
  if (!(chart_ == o.chart_) || degree_ != o.degree_) return false;
  if (comps_.size() != o.comps_.size()) return false;
  for (const auto& [idx, v] : comps_) {
    auto it = o.comps_.find(idx);
    if (it == o.comps_.end() || !v.same_as(it->second)) return false;
  }
  return true;
}

template <bool C>
SkewTensor<C> SkewTensor<C>::operator+(const SkewTensor& o) const {
  sym::require_same_chart(chart_, o.chart_, "tensor add");
  if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch in tensor add");
  SkewTensor r = *this;
  for (const auto& [idx, v] : o.comps_) r.add_term(idx, v);
  return r;
}

template <bool C>
SkewTensor<C> SkewTensor<C>::operator-(const SkewTensor& o) const {
  return *this + (-o);
}

template <bool C>
SkewTensor<C> SkewTensor<C>::operator-() const {
  SkewTensor r(chart_, degree_);
  for (const auto& [idx, v] : comps_) r.comps_.emplace(idx, -v);
  return r;
}

template <bool C>
SkewTensor<C> SkewTensor<C>::operator*(const ScalarExpr& f) const {
  SkewTensor r(chart_, degree_);
  for (const auto& [idx, v] : comps_) {
    ScalarExpr w = v * f;
    if (!w.is_zero()) r.comps_.emplace(idx, std::move(w));
  }
  return r;
}

template <bool C>
SkewTensor<C> SkewTensor<C>::operator*(const GaussRat& c) const {
  SkewTensor r(chart_, degree_);
  if (c.is_zero()) return r;
  for (const auto& [idx, v] : comps_) r.comps_.emplace(idx, v * c);
  return r;
}

template <bool C>
SkewTensor<C> SkewTensor<C>::wedge(const SkewTensor& o) const {
  sym::require_same_chart(chart_, o.chart_, "wedge");
  SkewTensor r(chart_, degree_ + o.degree_);
  if (degree_ + o.degree_ > chart_.dim()) return r;
  for (const auto& [ia, a] : comps_) {
    for (const auto& [ib, b] : o.comps_) {
      IndexTuple merged = ia;
      merged.insert(merged.end(), ib.begin(), ib.end());
      r.add_term(std::move(merged), a * b);
    }
  }
  return r;
}

template class SkewTensor<true>;
template class SkewTensor<false>;

Multivector coordinate_field(const Chart& chart, int i) {
  Multivector v(chart, 1);
  v.add_term({i}, ScalarExpr::constant(chart, 1));
  return v;
}

DifferentialForm coordinate_form(const Chart& chart, int i) {
  DifferentialForm w(chart, 1);
  w.add_term({i}, ScalarExpr::constant(chart, 1));
  return w;
}

Multivector scalar_multivector(const ScalarExpr& f) {
  Multivector v(f.chart(), 0);
  v.add_term({}, f);
  return v;
}

DifferentialForm scalar_form(const ScalarExpr& f) {
  DifferentialForm w(f.chart(), 0);
  w.add_term({}, f);
  return w;
}

DifferentialForm exterior_derivative(const DifferentialForm& w) {
  DifferentialForm d(w.chart(), w.degree() + 1);
  if (w.degree() + 1 > w.chart().dim()) return d;
  for (const auto& [idx, c] : w.components()) {
    for (int k = 0; k < w.chart().dim(); ++k) {
      ScalarExpr dc = c.differentiate(k);
      if (dc.is_zero()) continue;
      IndexTuple nidx;
      nidx.push_back(k);
      nidx.insert(nidx.end(), idx.begin(), idx.end());
      d.add_term(std::move(nidx), dc);
    }
  }
  return d;
}

ScalarExpr apply_vector_field(const Multivector& x, const ScalarExpr& f) {
  if (x.degree() != 1) throw std::invalid_argument("apply_vector_field needs a degree-1 field");
  sym::require_same_chart(x.chart(), f.chart(), "apply_vector_field");
  ScalarExpr out = ScalarExpr::zero(x.chart());
  for (const auto& [idx, c] : x.components()) out = out + c * f.differentiate(idx[0]);
  return out;
}

} // namespace chartlab::cal
