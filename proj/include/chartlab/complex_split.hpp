#ifndef CHARTLAB_COMPLEX_SPLIT_HPP
#define CHARTLAB_COMPLEX_SPLIT_HPP

#include <utility>
#include <vector>

#include "chartlab/eq.hpp"
#include "chartlab/scalar.hpp"

namespace chartlab::sym {

/// A function written as re + i*im with both parts free of the formal
/// imaginary unit, on the real chart of a coordinate pairing.
struct ComplexScalar {
  ScalarExpr re;
  ScalarExpr im;
};

/// Declares z_k = x_k + i y_k between a holomorphic chart (coords z_k)
/// and a real chart containing the paired coordinates.
struct CoordPairing {
  Chart z_chart;
  Chart real_chart;
  std::vector<std::pair<int, int>> pairs; // (x index, y index) per z coordinate

  CoordPairing() = default;
  CoordPairing(Chart z, Chart real, std::vector<std::pair<int, int>> p);

  int n() const { return static_cast<int>(pairs.size()); }
};

/// Builds the standard pairing for C^n: z-chart (z1..zn) and real chart
/// (x1..xn, y1..yn), with the given base names.
CoordPairing standard_pairing(int n, const std::string& chart_name = "Cn");

/// Substitutes z_k <- x_k + i y_k and separates real and imaginary
/// parts; exp of a complex argument expands through Euler's identity.
ComplexScalar split_complex(const ScalarExpr& e, const CoordPairing& pairing);

/// re + i*im on the real chart.
ScalarExpr recombine(const ComplexScalar& f);

/// Transports an expression by sending the i-th coordinate of its chart
/// to the i-th coordinate of the target chart (holomorphic extension
/// uses this with x_i -> z_i; the tangent lift with x_i -> x_i of the
/// doubled chart). Requires target.dim() >= source dim.
ScalarExpr rename_coords(const ScalarExpr& e, const Chart& target);

/// Classical Cauchy-Riemann test on every coordinate pair:
/// d(re)/dx_k = d(im)/dy_k and d(re)/dy_k = -d(im)/dx_k.
/// ProbablyEqual comparisons surface as Inconclusive.
Tri cauchy_riemann_check(const ComplexScalar& f, const CoordPairing& pairing,
                         const RandomPointConfig& cfg = RandomPointConfig{});

} // namespace chartlab::sym

#endif
