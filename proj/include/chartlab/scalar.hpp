#ifndef CHARTLAB_SCALAR_HPP
#define CHARTLAB_SCALAR_HPP

#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "chartlab/chart.hpp"
#include "chartlab/rational.hpp"

namespace chartlab::sym {

/// Reserved variable id for the circle constant. `pi` is an opaque
/// transcendental atom with derivative zero; it may carry any integer
/// exponent (it is a unit, unlike coordinates).
constexpr int kPiId = -1;

class Polynomial;
using PolyPtr = std::shared_ptr<const Polynomial>;

/// sin(P)^k or cos(P) factor of a monomial. Arguments are pure real
/// polynomials, sign-normalized (sin(-P) = -sin(P), cos(-P) = cos(P));
/// cos powers >= 2 are rewritten through cos^2 = 1 - sin^2, so after
/// normalization cos carries exponent 1 and sin any exponent >= 1.
struct TrigFactor {
  bool is_sin = true;
  PolyPtr arg;
  int exp = 1;
};

/// A normal-form monomial: coordinate/pi powers, at most one exp atom,
/// and a sorted list of trig atoms.
struct Monomial {
  std::vector<std::pair<int, int>> vars; // (id, exp), sorted by id
  PolyPtr exp_arg;                       // nullptr when absent
  std::vector<TrigFactor> trig;

  bool is_unit() const { return vars.empty() && !exp_arg && trig.empty(); }
};

int compare(const Monomial& a, const Monomial& b);
int compare(const Polynomial& a, const Polynomial& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Multivariate polynomial with Gaussian-rational coefficients over the
/// atom set {coordinates, pi, exp(P), sin(P), cos(P)}. Kept in canonical
/// normal form at all times: equal normal forms mean semantically equal
/// expressions (complete on the polynomial fragment, sound everywhere).
class Polynomial {
public:
  using TermMap = std::map<Monomial, GaussRat, MonomialLess>;

  Polynomial() = default;
  explicit Polynomial(GaussRat c);

  static Polynomial variable(int id, int exp = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// The constant value if the polynomial is constant.
  std::optional<GaussRat> constant() const;
  /// c * pi^k monomials are the invertible elements of the ring.
  std::optional<std::pair<GaussRat, int>> as_const_pi_power() const;

  /// True when no monomial carries an exp or trig atom.
  bool is_pure() const;
  /// True when every coefficient is real.
  bool is_real() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const GaussRat& c) const;
  Polynomial pow(int n) const;

  Polynomial differentiate(int var_id) const;

  /// Replace coordinate variables by polynomials. Every coordinate id
  /// occurring in the polynomial (including inside atom arguments) must
  /// be mapped; `pi` maps to itself.
  Polynomial substitute(const std::map<int, Polynomial>& repl) const;

  std::complex<double> evaluate(const std::vector<double>& point) const;

  /// Splits coefficients into real and imaginary parts. Valid in normal
  /// form because all atoms are real.
  void split(Polynomial& re, Polynomial& im) const;

  /// Collects every coordinate id occurring anywhere, including inside
  /// exp/sin/cos arguments. `pi` is not reported.
  void collect_vars(std::set<int>& out) const;

  void add_term(const Monomial& m, const GaussRat& c);

private:
  TermMap terms_;
};

/// exp(arg) with Euler expansion of any imaginary part of the argument:
/// exp(P + iQ) = exp(P)(cos Q + i sin Q). The argument must be pure.
Polynomial exp_poly(const Polynomial& arg);
/// sin/cos of a pure real polynomial argument.
Polynomial sin_poly(const Polynomial& arg);
Polynomial cos_poly(const Polynomial& arg);

/// An exact symbolic scalar on a chart. Immutable; all operations are
/// pure functions and safe to call concurrently.
class ScalarExpr {
public:
  ScalarExpr() = default;
  ScalarExpr(Chart chart, Polynomial poly) : chart_(std::move(chart)), poly_(std::move(poly)) {}

  static ScalarExpr zero(const Chart& chart) { return {chart, Polynomial{}}; }
  static ScalarExpr constant(const Chart& chart, GaussRat c) { return {chart, Polynomial(std::move(c))}; }
  static ScalarExpr constant(const Chart& chart, long n) { return constant(chart, GaussRat(n)); }
  static ScalarExpr variable(const Variable& v) { return {v.chart, Polynomial::variable(v.index)}; }
  static ScalarExpr variable(const Chart& chart, int index);
  static ScalarExpr pi_const(const Chart& chart, int exp = 1) { return {chart, Polynomial::variable(kPiId, exp)}; }
  static ScalarExpr imag_unit(const Chart& chart) { return constant(chart, GaussRat::i()); }

  const Chart& chart() const { return chart_; }
  const Polynomial& poly() const { return poly_; }

  bool is_zero() const { return poly_.is_zero(); }
  std::optional<GaussRat> constant_value() const { return poly_.constant(); }

  ScalarExpr operator-() const { return {chart_, -poly_}; }
  ScalarExpr operator+(const ScalarExpr& o) const;
  ScalarExpr operator-(const ScalarExpr& o) const;
  ScalarExpr operator*(const ScalarExpr& o) const;
  ScalarExpr operator*(const GaussRat& c) const { return {chart_, poly_ * c}; }
  ScalarExpr operator*(long n) const { return *this * GaussRat(n); }
  ScalarExpr pow(int n) const { return {chart_, poly_.pow(n)}; }
  /// Division by an invertible constant (c * pi^k, c != 0).
  ScalarExpr operator/(const ScalarExpr& o) const;

  ScalarExpr differentiate(const Variable& v) const;
  ScalarExpr differentiate(int var_index) const { return {chart_, poly_.differentiate(var_index)}; }

  /// Transport to another chart: repl maps each coordinate index of this
  /// chart to an expression on the target chart.
  ScalarExpr substitute(const std::map<int, ScalarExpr>& repl, const Chart& target) const;

  std::complex<double> evaluate(const std::map<std::string, double>& point) const;
  std::complex<double> evaluate_indexed(const std::vector<double>& point) const { return poly_.evaluate(point); }

  /// Exact structural equality (identical normal forms).
  bool same_as(const ScalarExpr& o) const;

  std::string str() const;

private:
  Chart chart_;
  Polynomial poly_;
};

ScalarExpr exp_of(const ScalarExpr& arg);
ScalarExpr sin_of(const ScalarExpr& arg);
ScalarExpr cos_of(const ScalarExpr& arg);

} // namespace chartlab::sym

#endif
