#include "chartlab/chart_map.hpp"

namespace chartlab::cal {

namespace {

std::map<int, ScalarExpr> as_replacement(const std::vector<ScalarExpr>& comps) {
  std::map<int, ScalarExpr> repl;
  for (size_t k = 0; k < comps.size(); ++k) repl.emplace(static_cast<int>(k), comps[k]);
  return repl;
}

} // namespace

ChartMap::ChartMap(Chart source, Chart target, std::vector<ScalarExpr> components,
                   std::optional<std::vector<ScalarExpr>> inverse)
    : source_(std::move(source)), target_(std::move(target)), comps_(std::move(components)),
      inverse_(std::move(inverse)) {
  if (static_cast<int>(comps_.size()) != target_.dim())
    throw std::invalid_argument("chart map needs one component per target coordinate");
  for (const auto& c : comps_) sym::require_same_chart(c.chart(), source_, "chart map component");
  if (inverse_) {
    if (static_cast<int>(inverse_->size()) != source_.dim())
      throw std::invalid_argument("inverse needs one component per source coordinate");
    for (const auto& c : *inverse_) sym::require_same_chart(c.chart(), target_, "chart map inverse");
    // both composites must normalize to the identity coordinates
    auto fwd = as_replacement(comps_);
    auto bwd = as_replacement(*inverse_);
    for (int j = 0; j < target_.dim(); ++j) {
      ScalarExpr back = comps_[static_cast<size_t>(j)].substitute(bwd, target_);
      if (!back.same_as(ScalarExpr::variable(target_, j)))
        throw std::invalid_argument("supplied inverse is not a right inverse at coordinate " +
                                    target_.coord(j));
    }
    for (int i = 0; i < source_.dim(); ++i) {
      ScalarExpr fwd_back = (*inverse_)[static_cast<size_t>(i)].substitute(fwd, source_);
      if (!fwd_back.same_as(ScalarExpr::variable(source_, i)))
        throw std::invalid_argument("supplied inverse is not a left inverse at coordinate " +
                                    source_.coord(i));
    }
  }
}

ChartMap ChartMap::identity(const Chart& chart) {
  std::vector<ScalarExpr> comps;
  for (int i = 0; i < chart.dim(); ++i) comps.push_back(ScalarExpr::variable(chart, i));
  return {chart, chart, comps, comps};
}

ChartMap ChartMap::linear(const Chart& source, const Chart& target,
                          const std::vector<std::vector<GaussRat>>& m,
                          const std::vector<std::vector<GaussRat>>& m_inverse) {
  std::vector<ScalarExpr> comps, inv;
  for (int k = 0; k < target.dim(); ++k) {
    ScalarExpr acc = ScalarExpr::zero(source);
    for (int l = 0; l < source.dim(); ++l)
      acc = acc + ScalarExpr::variable(source, l) * m[static_cast<size_t>(k)][static_cast<size_t>(l)];
    comps.push_back(acc);
  }
  for (int k = 0; k < source.dim(); ++k) {
    ScalarExpr acc = ScalarExpr::zero(target);
    for (int l = 0; l < target.dim(); ++l)
      acc = acc +
            ScalarExpr::variable(target, l) * m_inverse[static_cast<size_t>(k)][static_cast<size_t>(l)];
    inv.push_back(acc);
  }
  return {source, target, std::move(comps), std::move(inv)};
}

const std::vector<ScalarExpr>& ChartMap::inverse_components() const {
  if (!inverse_) throw std::logic_error("chart map has no inverse attached");
  return *inverse_;
}

ChartMap ChartMap::inverse_map() const {
  return {target_, source_, inverse_components(), comps_};
}

ScalarExpr ChartMap::pull_function(const ScalarExpr& f) const {
  sym::require_same_chart(f.chart(), target_, "pull_function");
  return f.substitute(as_replacement(comps_), source_);
}

ScalarExpr ChartMap::push_function(const ScalarExpr& f) const {
  sym::require_same_chart(f.chart(), source_, "push_function");
  return f.substitute(as_replacement(inverse_components()), target_);
}

std::vector<std::vector<ScalarExpr>> ChartMap::jacobian() const {
  std::vector<std::vector<ScalarExpr>> j;
  for (int k = 0; k < target_.dim(); ++k) {
    std::vector<ScalarExpr> row;
    for (int l = 0; l < source_.dim(); ++l) row.push_back(comps_[static_cast<size_t>(k)].differentiate(l));
    j.push_back(std::move(row));
  }
  return j;
}

ChartMap compose(const ChartMap& m2, const ChartMap& m1) {
  sym::require_same_chart(m1.target(), m2.source(), "compose chart maps");
  auto repl = as_replacement(m1.components());
  std::vector<ScalarExpr> comps;
  for (const auto& c : m2.components()) comps.push_back(c.substitute(repl, m1.source()));
  std::optional<std::vector<ScalarExpr>> inv;
  if (m1.has_inverse() && m2.has_inverse()) {
    auto repl2 = as_replacement(m2.inverse_components());
    std::vector<ScalarExpr> iv;
    for (const auto& c : m1.inverse_components()) iv.push_back(c.substitute(repl2, m2.target()));
    inv = std::move(iv);
  }
  return {m1.source(), m2.target(), std::move(comps), std::move(inv)};
}

DifferentialForm pullback(const DifferentialForm& w, const ChartMap& m) {
  sym::require_same_chart(w.chart(), m.target(), "pullback");
  auto jac = m.jacobian();
  auto repl = as_replacement(m.components());
  // m*(dxi_j) as 1-forms on the source
  std::vector<DifferentialForm> d_comp;
  for (int j = 0; j < m.target().dim(); ++j) {
    DifferentialForm dj(m.source(), 1);
    for (int a = 0; a < m.source().dim(); ++a)
      dj.add_term({a}, jac[static_cast<size_t>(j)][static_cast<size_t>(a)]);
    d_comp.push_back(std::move(dj));
  }
  DifferentialForm out(m.source(), w.degree());
  for (const auto& [idx, c] : w.components()) {
    DifferentialForm piece = scalar_form(c.substitute(repl, m.source()));
    for (int j : idx) piece = piece.wedge(d_comp[static_cast<size_t>(j)]);
    out = out + piece;
  }
  return out;
}

Multivector pushforward(const Multivector& p, const ChartMap& m) {
  sym::require_same_chart(p.chart(), m.source(), "pushforward");
  if (!m.has_inverse()) throw std::invalid_argument("pushforward requires an explicit inverse");
  auto jac = m.jacobian();
  // m_*(d/du_i) with coefficients still on the source chart
  const int nt = m.target().dim();
  auto wedge_sign = [](IndexTuple& v) { return sort_index(v); };
  std::map<IndexTuple, ScalarExpr> acc;
  for (const auto& [idx, c] : p.components()) {
    // expand the wedge of pushed basis fields over target index choices
    std::vector<IndexTuple> stack_idx{{}};
    std::vector<ScalarExpr> stack_val{c};
    for (int i : idx) {
      std::vector<IndexTuple> nidx;
      std::vector<ScalarExpr> nval;
      for (size_t s = 0; s < stack_idx.size(); ++s) {
        for (int k = 0; k < nt; ++k) {
          const ScalarExpr& jk = jac[static_cast<size_t>(k)][static_cast<size_t>(i)];
          if (jk.is_zero()) continue;
          IndexTuple ni = stack_idx[s];
          ni.push_back(k);
          nidx.push_back(std::move(ni));
          nval.push_back(stack_val[s] * jk);
        }
      }
      stack_idx = std::move(nidx);
      stack_val = std::move(nval);
    }
    for (size_t s = 0; s < stack_idx.size(); ++s) {
      IndexTuple key = stack_idx[s];
      int sign = wedge_sign(key);
      if (sign == 0) continue;
      ScalarExpr v = sign > 0 ? stack_val[s] : -stack_val[s];
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(std::move(key), std::move(v));
      else
        it->second = it->second + v;
    }
  }
  Multivector out(m.target(), p.degree());
  auto inv_repl = as_replacement(m.inverse_components());
  for (auto& [idx, v] : acc) {
    if (v.is_zero()) continue;
    out.add_term(idx, v.substitute(inv_repl, m.target()));
  }
  return out;
}

} // namespace chartlab::cal
