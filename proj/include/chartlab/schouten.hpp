#ifndef CHARTLAB_SCHOUTEN_HPP
#define CHARTLAB_SCHOUTEN_HPP

#include "chartlab/eq.hpp"
#include "chartlab/multivector.hpp"

namespace chartlab::cal {

using sym::EqResult;
using sym::RandomPointConfig;
using sym::Tri;

/// Schouten-Nijenhuis bracket of multivector fields. Conventions pinned
/// by: [X,Y] is the Lie bracket, [X,f] = X(f), graded antisymmetry
/// [P,Q] = -(-1)^((p-1)(q-1)) [Q,P], graded Leibniz
/// [P,Q^R] = [P,Q]^R + (-1)^((p-1)q) Q^[P,R], and
/// [pi,pi](df,dg,dh) = 2 (sum of cyclic {f,{g,h}}).
Multivector schouten_bracket(const Multivector& p, const Multivector& q);

/// Matrix of the bundle map pi^#: sharp[j][i] = pi(dx_i, dx_j), so the
/// i-th column holds the components of pi^#(dx_i) and {x_i,x_j} equals
/// the stored component pi^ij.
std::vector<std::vector<ScalarExpr>> sharp(const Multivector& pi);

/// {f,g} = pi(df,dg).
ScalarExpr poisson_bracket(const Multivector& pi, const ScalarExpr& f, const ScalarExpr& g);

/// pi^#(df); with {x1,x2} = 1 this sends x1 to d/dx2.
Multivector hamiltonian_vf(const Multivector& pi, const ScalarExpr& f);

/// Jacobiator {x_i,{x_j,x_k}} + cyclic of a bivector.
ScalarExpr jacobiator(const Multivector& pi, int i, int j, int k);

/// Yes iff every coordinate Jacobiator normalizes to zero.
Tri is_poisson(const Multivector& pi, const RandomPointConfig& cfg = RandomPointConfig{});

} // namespace chartlab::cal

#endif
