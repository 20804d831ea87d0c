#ifndef CHARTLAB_CHART_MAP_HPP
#define CHARTLAB_CHART_MAP_HPP

#include <optional>

#include "chartlab/multivector.hpp"

namespace chartlab::cal {

/// A smooth map between charts, given by expressions for the target
/// coordinates. An explicit inverse may be attached; when present, both
/// composites are verified to normalize to the identity.
class ChartMap {
public:
  ChartMap() = default;
  ChartMap(Chart source, Chart target, std::vector<ScalarExpr> components,
           std::optional<std::vector<ScalarExpr>> inverse = std::nullopt);

  static ChartMap identity(const Chart& chart);
  /// Linear map with constant matrix m (columns = images of basis
  /// vectors, i.e. target_k = sum_l m[k][l] * source_l), with inverse.
  static ChartMap linear(const Chart& source, const Chart& target,
                         const std::vector<std::vector<GaussRat>>& m,
                         const std::vector<std::vector<GaussRat>>& m_inverse);

  const Chart& source() const { return source_; }
  const Chart& target() const { return target_; }
  const std::vector<ScalarExpr>& components() const { return comps_; }
  bool has_inverse() const { return inverse_.has_value(); }
  const std::vector<ScalarExpr>& inverse_components() const;

  ChartMap inverse_map() const;

  /// f on the target pulled back to the source: f o m.
  ScalarExpr pull_function(const ScalarExpr& f) const;
  /// f on the source transported to the target: f o m^-1.
  ScalarExpr push_function(const ScalarExpr& f) const;

  /// Jacobian d(components_k)/d(source_l), an expression matrix on the
  /// source chart.
  std::vector<std::vector<ScalarExpr>> jacobian() const;

private:
  Chart source_, target_;
  std::vector<ScalarExpr> comps_;
  std::optional<std::vector<ScalarExpr>> inverse_;
};

/// m2 after m1 (m1: A -> B, m2: B -> C).
ChartMap compose(const ChartMap& m2, const ChartMap& m1);

/// Classical pullback of a form through a chart map.
DifferentialForm pullback(const DifferentialForm& w, const ChartMap& m);

/// Pushforward of a multivector; requires the explicit inverse.
Multivector pushforward(const Multivector& p, const ChartMap& m);

} // namespace chartlab::cal

#endif
