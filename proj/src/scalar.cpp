#include "chartlab/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace chartlab::sym {

Chart::Chart(std::string name, std::vector<std::string> coords) {
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == "pi" || coords[i] == "i")
      throw std::invalid_argument("chart coordinate may not shadow reserved name '" + coords[i] + "'");
    for (size_t j = i + 1; j < coords.size(); ++j)
      if (coords[i] == coords[j])
        throw std::invalid_argument("duplicate coordinate name '" + coords[i] + "'");
  }
  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->coords = std::move(coords);
  d_ = std::move(d);
}

int Chart::index_of(const std::string& coord_name) const {
  for (int i = 0; i < dim(); ++i)
    if (d_->coords[static_cast<size_t>(i)] == coord_name) return i;
  return -1;
}

bool Chart::operator==(const Chart& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  return d_->name == o.d_->name && d_->coords == o.d_->coords;
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// ordering

static int compare_ptr(const PolyPtr& a, const PolyPtr& b) {
  if (!a && !b) return 0;
  if (!a) return -1;
  if (!b) return 1;
  return compare(*a, *b);
}

static int compare(const TrigFactor& a, const TrigFactor& b) {
  if (int c = compare_ptr(a.arg, b.arg)) return c;
  if (a.is_sin != b.is_sin) return a.is_sin ? -1 : 1;
  if (a.exp != b.exp) return a.exp < b.exp ? -1 : 1;
  return 0;
}

int compare(const Monomial& a, const Monomial& b) {
  if (a.vars != b.vars) return a.vars < b.vars ? -1 : 1;
  if (int c = compare_ptr(a.exp_arg, b.exp_arg)) return c;
  size_t n = std::min(a.trig.size(), b.trig.size());
  for (size_t k = 0; k < n; ++k)
    if (int c = compare(a.trig[k], b.trig[k])) return c;
  if (a.trig.size() != b.trig.size()) return a.trig.size() < b.trig.size() ? -1 : 1;
  return 0;
}

int compare(const Polynomial& a, const Polynomial& b) {
  auto ia = a.terms().begin(), ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (int c = compare(ia->first, ib->first)) return c;
    if (int c = ia->second.compare(ib->second)) return c;
  }
  if (ia != a.terms().end()) return 1;
  if (ib != b.terms().end()) return -1;
  return 0;
}

// ---------------------------------------------------------------------------
// construction and normalization

Polynomial::Polynomial(GaussRat c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

Polynomial Polynomial::variable(int id, int exp) {
  if (exp == 0) return Polynomial(GaussRat(1));
  if (id != kPiId && exp < 0) throw std::domain_error("negative power of a coordinate");
  Polynomial p;
  Monomial m;
  m.vars.emplace_back(id, exp);
  p.terms_.emplace(std::move(m), GaussRat(1));
  return p;
}

void Polynomial::add_term(const Monomial& m, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<GaussRat> Polynomial::constant() const {
  if (terms_.empty()) return GaussRat(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_unit()) return terms_.begin()->second;
  return std::nullopt;
}

std::optional<std::pair<GaussRat, int>> Polynomial::as_const_pi_power() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [m, c] = *terms_.begin();
  if (m.exp_arg || !m.trig.empty()) return std::nullopt;
  if (m.vars.empty()) return std::make_pair(c, 0);
  if (m.vars.size() == 1 && m.vars[0].first == kPiId) return std::make_pair(c, m.vars[0].second);
  return std::nullopt;
}

bool Polynomial::is_pure() const {
  for (const auto& [m, c] : terms_)
    if (m.exp_arg || !m.trig.empty()) return false;
  return true;
}

bool Polynomial::is_real() const {
  for (const auto& [m, c] : terms_)
    if (!c.is_real()) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const GaussRat& c) const {
  Polynomial r;
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

/// Sign-normalizes a trig argument. Returns the canonical argument and
/// whether the sign was flipped (sin picks up a factor -1, cos none).
static std::pair<Polynomial, bool> canonical_trig_arg(const Polynomial& arg) {
  if (arg.is_zero()) return {arg, false};
  const GaussRat& lead = arg.terms().begin()->second;
  bool flip = cmp(lead.re(), 0) < 0 || (lead.re() == 0 && cmp(lead.im(), 0) < 0);
  return {flip ? -arg : arg, flip};
}

/// Multiplies a monomial by (1 - sin(arg)^2)^q, merging with existing
/// sin factors of the same argument.
static Polynomial expand_cos_square(const Monomial& base, const GaussRat& coef, const PolyPtr& arg, int q);

/// Appends a trig factor to a monomial under the normal-form rules and
/// returns the resulting polynomial (cos powers >= 2 expand).
static Polynomial monomial_times_trig(const Monomial& base, const GaussRat& coef, bool is_sin,
                                      const PolyPtr& arg, int exp) {
  Monomial m = base;
  int total = exp;
  bool was_cos_present = false;
  for (size_t k = 0; k < m.trig.size(); ++k) {
    if (compare_ptr(m.trig[k].arg, arg) == 0 && m.trig[k].is_sin == is_sin) {
      total += m.trig[k].exp;
      was_cos_present = !is_sin;
      m.trig.erase(m.trig.begin() + static_cast<long>(k));
      break;
    }
  }
  (void)was_cos_present;
  if (!is_sin && total >= 2) {
    int q = total / 2, r = total % 2;
    if (r == 1) {
      TrigFactor f{false, arg, 1};
      auto pos = std::lower_bound(m.trig.begin(), m.trig.end(), f,
                                  [](const TrigFactor& x, const TrigFactor& y) { return compare(x, y) < 0; });
      m.trig.insert(pos, f);
    }
    return expand_cos_square(m, coef, arg, q);
  }
  TrigFactor f{is_sin, arg, total};
  auto pos = std::lower_bound(m.trig.begin(), m.trig.end(), f,
                              [](const TrigFactor& x, const TrigFactor& y) { return compare(x, y) < 0; });
  m.trig.insert(pos, f);
  Polynomial out;
  out.add_term(m, coef);
  return out;
}

static Polynomial monomial_times_sin_power(const Monomial& base, const GaussRat& coef,
                                           const PolyPtr& arg, int exp) {
  if (exp == 0) {
    Polynomial out;
    out.add_term(base, coef);
    return out;
  }
  return monomial_times_trig(base, coef, true, arg, exp);
}

static Polynomial expand_cos_square(const Monomial& base, const GaussRat& coef, const PolyPtr& arg, int q) {
  // (1 - sin^2)^q = sum_j C(q,j) (-1)^j sin^(2j)
  Polynomial out;
  mpz_class binom = 1;
  for (int j = 0; j <= q; ++j) {
    GaussRat c = coef * GaussRat(mpq_class(binom), mpq_class(0));
    if (j % 2 == 1) c = -c;
    out = out + monomial_times_sin_power(base, c, arg, 2 * j);
    binom = binom * (q - j) / (j + 1);
  }
  return out;
}

/// Product of two monomials with coefficients; the result can expand into
/// several terms through the cos^2 rewrite.
static Polynomial monomial_product(const Monomial& a, const GaussRat& ca, const Monomial& b,
                                   const GaussRat& cb) {
  Monomial m;
  // merge variable powers
  size_t i = 0, j = 0;
  while (i < a.vars.size() || j < b.vars.size()) {
    if (j == b.vars.size() || (i < a.vars.size() && a.vars[i].first < b.vars[j].first)) {
      m.vars.push_back(a.vars[i++]);
    } else if (i == a.vars.size() || b.vars[j].first < a.vars[i].first) {
      m.vars.push_back(b.vars[j++]);
    } else {
      int e = a.vars[i].second + b.vars[j].second;
      if (e != 0) m.vars.emplace_back(a.vars[i].first, e);
      ++i, ++j;
    }
  }
  // merge exp atoms: exp(P) * exp(Q) = exp(P + Q)
  if (a.exp_arg && b.exp_arg) {
    Polynomial s = *a.exp_arg + *b.exp_arg;
    if (!s.is_zero()) m.exp_arg = std::make_shared<const Polynomial>(std::move(s));
  } else if (a.exp_arg) {
    m.exp_arg = a.exp_arg;
  } else if (b.exp_arg) {
    m.exp_arg = b.exp_arg;
  }
  GaussRat c = ca * cb;
  // fold in trig factors one at a time so same-argument powers merge
  Polynomial out;
  out.add_term(m, c);
  for (const auto* list : {&a.trig, &b.trig}) {
    for (const auto& f : *list) {
      Polynomial next;
      for (const auto& [tm, tc] : out.terms()) {
        Polynomial piece = monomial_times_trig(tm, tc, f.is_sin, f.arg, f.exp);
        next = next + piece;
      }
      out = std::move(next);
    }
  }
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r = r + monomial_product(ma, ca, mb, cb);
  return r;
}

Polynomial Polynomial::pow(int n) const {
  if (n == 0) return Polynomial(GaussRat(1));
  if (n < 0) {
    // only monomials c * pi^k * exp(P) are invertible
    if (terms_.size() != 1) throw std::domain_error("negative power of a non-invertible expression");
    const auto& [m, c] = *terms_.begin();
    if (!m.trig.empty()) throw std::domain_error("negative power of a trigonometric atom");
    for (const auto& [id, e] : m.vars)
      if (id != kPiId) throw std::domain_error("negative power of a coordinate");
    Monomial inv;
    for (const auto& [id, e] : m.vars) inv.vars.emplace_back(id, -e);
    if (m.exp_arg) inv.exp_arg = std::make_shared<const Polynomial>(-*m.exp_arg);
    Polynomial base;
    base.add_term(inv, c.inverse());
    return base.pow(-n);
  }
  Polynomial acc(GaussRat(1));
  Polynomial base = *this;
  int e = n;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Polynomial exp_poly(const Polynomial& arg) {
  if (!arg.is_pure()) throw std::domain_error("non-polynomial argument to exp");
  Polynomial re, im;
  arg.split(re, im);
  Polynomial e(GaussRat(1));
  if (!re.is_zero()) {
    Monomial m;
    m.exp_arg = std::make_shared<const Polynomial>(re);
    Polynomial p;
    p.add_term(m, GaussRat(1));
    e = p;
  }
  if (im.is_zero()) return e;
  // exp(P + iQ) = exp(P)(cos Q + i sin Q)
  return e * (cos_poly(im) + sin_poly(im) * GaussRat::i());
}

Polynomial sin_poly(const Polynomial& arg) {
  if (!arg.is_pure()) throw std::domain_error("non-polynomial argument to sin");
  if (!arg.is_real()) throw std::domain_error("non-real argument to sin");
  if (arg.is_zero()) return Polynomial{};
  auto [canon, flipped] = canonical_trig_arg(arg);
  Monomial m;
  m.trig.push_back(TrigFactor{true, std::make_shared<const Polynomial>(std::move(canon)), 1});
  Polynomial p;
  p.add_term(m, flipped ? GaussRat(-1) : GaussRat(1));
  return p;
}

Polynomial cos_poly(const Polynomial& arg) {
  if (!arg.is_pure()) throw std::domain_error("non-polynomial argument to cos");
  if (!arg.is_real()) throw std::domain_error("non-real argument to cos");
  if (arg.is_zero()) return Polynomial(GaussRat(1));
  auto [canon, flipped] = canonical_trig_arg(arg);
  (void)flipped;
  Monomial m;
  m.trig.push_back(TrigFactor{false, std::make_shared<const Polynomial>(std::move(canon)), 1});
  Polynomial p;
  p.add_term(m, GaussRat(1));
  return p;
}

// ---------------------------------------------------------------------------
// calculus

Polynomial Polynomial::differentiate(int var_id) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    // coordinate powers
    for (size_t k = 0; k < m.vars.size(); ++k) {
      if (m.vars[k].first != var_id) continue;
      Monomial d = m;
      int e = d.vars[k].second;
      if (e == 1)
        d.vars.erase(d.vars.begin() + static_cast<long>(k));
      else
        d.vars[k].second = e - 1;
      out.add_term(d, c * GaussRat(e));
    }
    // exp atom: (exp P)' = P' exp P
    if (m.exp_arg) {
      Polynomial darg = m.exp_arg->differentiate(var_id);
      if (!darg.is_zero()) {
        Polynomial self;
        self.add_term(m, c);
        out = out + self * darg;
      }
    }
    // trig atoms
    for (size_t k = 0; k < m.trig.size(); ++k) {
      const TrigFactor& f = m.trig[k];
      Polynomial darg = f.arg->differentiate(var_id);
      if (darg.is_zero()) continue;
      Monomial rest = m;
      rest.trig.erase(rest.trig.begin() + static_cast<long>(k));
      Polynomial base;
      base.add_term(rest, c);
      if (f.is_sin) {
        // d sin^e = e sin^(e-1) cos
        Polynomial term = base;
        for (const auto& [tm, tc] : term.terms()) {
          Polynomial withsin = monomial_times_sin_power(tm, tc * GaussRat(f.exp), f.arg, f.exp - 1);
          for (const auto& [sm, sc] : withsin.terms())
            out = out + monomial_times_trig(sm, sc, false, f.arg, 1) * darg;
        }
      } else {
        // d cos = -sin
        for (const auto& [tm, tc] : base.terms())
          out = out + monomial_times_sin_power(tm, -tc, f.arg, 1) * darg;
      }
    }
  }
  return out;
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& repl) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Polynomial acc{c};
    for (const auto& [id, e] : m.vars) {
      if (id == kPiId) {
        acc = acc * Polynomial::variable(kPiId, e);
        continue;
      }
      auto it = repl.find(id);
      if (it == repl.end()) throw std::invalid_argument("substitute: unmapped coordinate");
      acc = acc * it->second.pow(e);
    }
    if (m.exp_arg) {
      Polynomial sub = m.exp_arg->substitute(repl);
      if (!sub.is_pure()) throw std::domain_error("substitution makes exp argument non-polynomial");
      acc = acc * exp_poly(sub);
    }
    for (const auto& f : m.trig) {
      Polynomial sub = f.arg->substitute(repl);
      if (!sub.is_pure()) throw std::domain_error("substitution makes trig argument non-polynomial");
      if (!sub.is_real()) throw std::domain_error("substitution makes trig argument non-real");
      Polynomial atom = f.is_sin ? sin_poly(sub) : cos_poly(sub);
      acc = acc * atom.pow(f.exp);
    }
    out = out + acc;
  }
  return out;
}

static double evaluate_pure_real(const Polynomial& p, const std::vector<double>& point) {
  std::complex<double> v = p.evaluate(point);
  return v.real();
}

std::complex<double> Polynomial::evaluate(const std::vector<double>& point) const {
  std::complex<double> total = 0.0;
  for (const auto& [m, c] : terms_) {
    double mag = 1.0;
    for (const auto& [id, e] : m.vars) {
      double x;
      if (id == kPiId) {
        x = M_PI;
      } else {
        if (id < 0 || static_cast<size_t>(id) >= point.size())
          throw EvalError("evaluate: unbound variable index " + std::to_string(id));
        x = point[static_cast<size_t>(id)];
      }
      mag *= std::pow(x, e);
    }
    if (m.exp_arg) mag *= std::exp(evaluate_pure_real(*m.exp_arg, point));
    for (const auto& f : m.trig) {
      double a = evaluate_pure_real(*f.arg, point);
      mag *= std::pow(f.is_sin ? std::sin(a) : std::cos(a), f.exp);
    }
    total += c.to_complex() * mag;
  }
  return total;
}

void Polynomial::collect_vars(std::set<int>& out) const {
  for (const auto& [m, c] : terms_) {
    for (const auto& [id, e] : m.vars)
      if (id != kPiId) out.insert(id);
    if (m.exp_arg) m.exp_arg->collect_vars(out);
    for (const auto& f : m.trig) f.arg->collect_vars(out);
  }
}

void Polynomial::split(Polynomial& re, Polynomial& im) const {
  re = Polynomial{};
  im = Polynomial{};
  for (const auto& [m, c] : terms_) {
    if (c.re() != 0) re.add_term(m, GaussRat(c.re()));
    if (c.im() != 0) im.add_term(m, GaussRat(c.im()));
  }
}

// ---------------------------------------------------------------------------
// ScalarExpr facade

ScalarExpr ScalarExpr::variable(const Chart& chart, int index) {
  if (index < 0 || index >= chart.dim()) throw std::out_of_range("variable index outside chart");
  return {chart, Polynomial::variable(index)};
}

ScalarExpr ScalarExpr::operator+(const ScalarExpr& o) const {
  require_same_chart(chart_, o.chart_, "add");
  return {chart_, poly_ + o.poly_};
}

ScalarExpr ScalarExpr::operator-(const ScalarExpr& o) const {
  require_same_chart(chart_, o.chart_, "subtract");
  return {chart_, poly_ - o.poly_};
}

ScalarExpr ScalarExpr::operator*(const ScalarExpr& o) const {
  require_same_chart(chart_, o.chart_, "multiply");
  return {chart_, poly_ * o.poly_};
}

ScalarExpr ScalarExpr::operator/(const ScalarExpr& o) const {
  require_same_chart(chart_, o.chart_, "divide");
  auto unit = o.poly_.as_const_pi_power();
  if (!unit || unit->first.is_zero())
    throw std::domain_error("division is only defined by nonzero constants (optionally times a power of pi)");
  Polynomial inv;
  Monomial m;
  if (unit->second != 0) m.vars.emplace_back(kPiId, -unit->second);
  inv.add_term(m, unit->first.inverse());
  return {chart_, poly_ * inv};
}

ScalarExpr ScalarExpr::differentiate(const Variable& v) const {
  require_same_chart(chart_, v.chart, "differentiate");
  return {chart_, poly_.differentiate(v.index)};
}

ScalarExpr ScalarExpr::substitute(const std::map<int, ScalarExpr>& repl, const Chart& target) const {
  std::map<int, Polynomial> polys;
  for (const auto& [id, e] : repl) {
    require_same_chart(e.chart(), target, "substitute");
    polys.emplace(id, e.poly());
  }
  return {target, poly_.substitute(polys)};
}

std::complex<double> ScalarExpr::evaluate(const std::map<std::string, double>& point) const {
  std::vector<double> indexed(static_cast<size_t>(chart_.dim()), 0.0);
  std::vector<bool> bound(static_cast<size_t>(chart_.dim()), false);
  for (const auto& [name, value] : point) {
    int idx = chart_.index_of(name);
    if (idx < 0) throw EvalError("evaluate: '" + name + "' is not a coordinate of chart " + chart_.name());
    indexed[static_cast<size_t>(idx)] = value;
    bound[static_cast<size_t>(idx)] = true;
  }
  // only require bindings for variables that actually occur
  std::set<int> used;
  poly_.collect_vars(used);
  for (int id : used)
    if (!bound[static_cast<size_t>(id)]) throw EvalError("evaluate: unbound variable " + chart_.coord(id));
  return poly_.evaluate(indexed);
}

bool ScalarExpr::same_as(const ScalarExpr& o) const {
  return chart_ == o.chart_ && compare(poly_, o.poly_) == 0;
}

ScalarExpr exp_of(const ScalarExpr& arg) { return {arg.chart(), exp_poly(arg.poly())}; }
ScalarExpr sin_of(const ScalarExpr& arg) { return {arg.chart(), sin_poly(arg.poly())}; }
ScalarExpr cos_of(const ScalarExpr& arg) { return {arg.chart(), cos_poly(arg.poly())}; }

// ---------------------------------------------------------------------------
// printing (grammar syntax; parse(str()) reproduces the normal form)

namespace {

std::string coeff_str(const GaussRat& c) {
  if (c.im() == 0) return to_string(c.re());
  if (c.re() == 0) {
    if (c.im() == 1) return "i";
    if (c.im() == -1) return "-i";
    return to_string(c.im()) + "*i";
  }
  std::string im_part;
  if (c.im() == 1)
    im_part = "+i";
  else if (c.im() == -1)
    im_part = "-i";
  else if (c.im() > 0)
    im_part = "+" + to_string(c.im()) + "*i";
  else
    im_part = to_string(c.im()) + "*i";
  return "(" + to_string(c.re()) + im_part + ")";
}

std::string poly_str(const Polynomial& p, const Chart& chart);

std::string arg_str(const PolyPtr& arg, const Chart& chart) { return poly_str(*arg, chart); }

std::string monomial_str(const Monomial& m, const GaussRat& c, const Chart& chart) {
  std::vector<std::string> factors;
  for (const auto& [id, e] : m.vars) {
    std::string base = id == kPiId ? "pi" : chart.coord(id);
    factors.push_back(e == 1 ? base : base + "^" + std::to_string(e));
  }
  if (m.exp_arg) factors.push_back("exp(" + arg_str(m.exp_arg, chart) + ")");
  for (const auto& f : m.trig) {
    std::string base = (f.is_sin ? "sin(" : "cos(") + arg_str(f.arg, chart) + ")";
    factors.push_back(f.exp == 1 ? base : base + "^" + std::to_string(f.exp));
  }
  std::string body;
  for (size_t k = 0; k < factors.size(); ++k) {
    if (k) body += "*";
    body += factors[k];
  }
  if (factors.empty()) return coeff_str(c);
  if (c.is_one()) return body;
  if (c == GaussRat(-1)) return "-" + body;
  return coeff_str(c) + "*" + body;
}

std::string poly_str(const Polynomial& p, const Chart& chart) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::string t = monomial_str(m, c, chart);
    if (first) {
      out = t;
      first = false;
    } else if (!t.empty() && t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

} // namespace

std::string ScalarExpr::str() const { return poly_str(poly_, chart_); }

} // namespace chartlab::sym
