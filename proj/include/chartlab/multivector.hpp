#ifndef CHARTLAB_MULTIVECTOR_HPP
#define CHARTLAB_MULTIVECTOR_HPP

#include <map>
#include <vector>

#include "chartlab/scalar.hpp"

namespace chartlab::cal {

using sym::Chart;
using sym::GaussRat;
using sym::ScalarExpr;
using sym::Variable;

/// Strictly increasing multi-index (0-based coordinate indices).
using IndexTuple = std::vector<int>;

/// Sorts an index tuple; returns the permutation sign, or 0 on repeats.
int sort_index(IndexTuple& idx);

/// Degree-k antisymmetric tensor with exact symbolic components, stored
/// on strictly increasing index tuples only. Contravariant = multivector
/// field, covariant = differential form.
template <bool Contravariant>
class SkewTensor {
public:
  SkewTensor() = default;
  SkewTensor(Chart chart, int degree);

  const Chart& chart() const { return chart_; }
  int degree() const { return degree_; }
  const std::map<IndexTuple, ScalarExpr>& components() const { return comps_; }

  /// Signed accumulate at an arbitrarily ordered index.
  void add_term(IndexTuple idx, const ScalarExpr& value);
  /// Signed lookup at an arbitrarily ordered index (zero when absent).
  ScalarExpr component(IndexTuple idx) const;

  bool is_zero() const { return comps_.empty(); }
  /// Componentwise identity of normal forms.
  bool same_as(const SkewTensor& o) const;

  SkewTensor operator+(const SkewTensor& o) const;
  SkewTensor operator-(const SkewTensor& o) const;
  SkewTensor operator-() const;
  SkewTensor operator*(const ScalarExpr& f) const;
  SkewTensor operator*(const GaussRat& c) const;
  SkewTensor wedge(const SkewTensor& o) const;

private:
  Chart chart_;
  int degree_ = 0;
  std::map<IndexTuple, ScalarExpr> comps_;
};

using Multivector = SkewTensor<true>;
using DifferentialForm = SkewTensor<false>;

/// The coordinate vector field d/dx_i.
Multivector coordinate_field(const Chart& chart, int i);
/// The coordinate 1-form dx_i.
DifferentialForm coordinate_form(const Chart& chart, int i);
/// Degree-0 wrappers.
Multivector scalar_multivector(const ScalarExpr& f);
DifferentialForm scalar_form(const ScalarExpr& f);

/// Standard coordinate exterior derivative; satisfies d(d(w)) = 0.
DifferentialForm exterior_derivative(const DifferentialForm& w);

/// Applies a vector field to a function: X(f) = sum X^i df/dx_i.
ScalarExpr apply_vector_field(const Multivector& x, const ScalarExpr& f);

extern template class SkewTensor<true>;
extern template class SkewTensor<false>;

} // namespace chartlab::cal

#endif
