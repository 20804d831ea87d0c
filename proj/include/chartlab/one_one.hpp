#ifndef CHARTLAB_ONE_ONE_HPP
#define CHARTLAB_ONE_ONE_HPP

#include "chartlab/multivector.hpp"

namespace chartlab::cal {

/// Fiberwise endomorphism of the tangent bundle. Entries follow
/// N(d/dx_l) = sum_k entry(k,l) d/dx_k (columns are images).
class OneOneTensor {
public:
  OneOneTensor() = default;
  OneOneTensor(Chart chart, std::vector<std::vector<ScalarExpr>> entries);

  static OneOneTensor identity(const Chart& chart);
  static OneOneTensor zero(const Chart& chart);

  const Chart& chart() const { return chart_; }
  int dim() const { return chart_.dim(); }
  const ScalarExpr& entry(int k, int l) const {
    return entries_[static_cast<size_t>(k)][static_cast<size_t>(l)];
  }

  Multivector apply(const Multivector& x) const;
  OneOneTensor compose(const OneOneTensor& o) const; // this after o
  OneOneTensor operator+(const OneOneTensor& o) const;
  OneOneTensor operator-() const;
  OneOneTensor operator*(const GaussRat& c) const;

  bool same_as(const OneOneTensor& o) const;
  /// True when N*N = -identity exactly.
  bool squares_to_minus_identity() const;

private:
  Chart chart_;
  std::vector<std::vector<ScalarExpr>> entries_;
};

/// Skew (2,1)-tensor: map (i<j) -> coefficient vector. Only torsions
/// need this shape.
class TwoOneTensor {
public:
  TwoOneTensor() = default;
  TwoOneTensor(Chart chart);

  const Chart& chart() const { return chart_; }
  /// Signed component vector at (i,j); (j,i) flips sign.
  std::vector<ScalarExpr> component(int i, int j) const;
  void add(int i, int j, int k, const ScalarExpr& v);

  bool is_zero() const;
  const std::map<std::pair<int, int>, std::vector<ScalarExpr>>& components() const { return comps_; }

private:
  Chart chart_;
  std::map<std::pair<int, int>, std::vector<ScalarExpr>> comps_;
};

/// Nijenhuis torsion of a (1,1)-tensor, componentwise:
///   T^k_ij = N^l_i d_l N^k_j - N^l_j d_l N^k_i - N^k_l (d_i N^l_j - d_j N^l_i).
/// Agrees with evaluating the defining bracket identity on coordinate
/// fields (cross-checked in the tests).
TwoOneTensor nijenhuis_torsion(const OneOneTensor& n);

/// The defining-identity route: N(V,W) = [NV,NW] - N([NV,W] + [V,NW] - N[V,W]).
Multivector nijenhuis_on_fields(const OneOneTensor& n, const Multivector& v, const Multivector& w);

} // namespace chartlab::cal

#endif
