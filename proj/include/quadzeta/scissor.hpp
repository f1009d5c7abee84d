#pragma once

#include "quadzeta/laurent.hpp"
#include "quadzeta/set_expression.hpp"

namespace quadzeta::scissor {

// Closed forms for the virtual Poincare polynomial of signature quadrics.
// X0(m, M): cone {sum x^2 - sum y^2 = 0} in R^(m+M).
// Z(m, M): its projectivisation in P^(m+M-1).
// X1(s, t), Xneg1(s, t): level sets {... = 1} and {... = -1} in R^(s+t).

/// u^(m+M-1) - u^(max-1) + u^min, and 1 when min(m, M) = 0 (the origin).
LaurentPolynomial beta_x0(int m, int big_m);

/// (1 + u^(max-1)) (1 + u + ... + u^(min-1)). Throws EmptyProjectiveQuadric
/// if m or M is zero.
LaurentPolynomial beta_z(int m, int big_m);

/// u^(t-1)(u^s - 1) for 1 <= s <= t, u^t(u^(s-1) + 1) for s > t >= 0,
/// 0 for s = 0. At t = 0 the set is the sphere S^(s-1).
LaurentPolynomial beta_x1(int s, int t);

/// Same set as X1(t, s).
LaurentPolynomial beta_xneg1(int s, int t);

/// Closed form for the quadric of the given level (-1, 0 or 1).
LaurentPolynomial beta_quadric(int level, int s, int t);

/// beta_x0(m, M) == 1 + (u - 1) beta_z(m, M), the cone fibration over Z.
bool cone_relation_check(int m, int big_m);

/// Splits one hyperbolic pair x^2 - y^2 = p q off the quadric:
///   {p != 0} ~ R^* x R^(s+t-2),  {p = 0} ~ X^c_{s-1,t-1} x R.
/// Throws NotReducible when s == 0 or t == 0.
SetExpression quadric_reduce(int level, int s, int t);

/// Chart decomposition Z_{m,M} = {y_M != 0} + {y_M = 0}
///   = X^1_{m,M-1} + Z_{m,M-1}; the second piece is dropped when M = 1.
SetExpression projective_quadric_reduce(int m, int big_m);

/// Base atoms of the reduction (s == 0 or t == 0): a sphere, a point, or
/// the empty set. Throws MalformedExpression when s, t >= 1.
SetExpression quadric_base_case(int level, int s, int t);

/// Virtual Poincare polynomial by additivity and multiplicativity. Quadric
/// atoms are reduced recursively; results are cached per atom.
LaurentPolynomial beta_eval(const SetExpression& expression);

/// beta_eval specialised at u = -1.
Integer euler_characteristic(const SetExpression& expression);

} // namespace quadzeta::scissor
