#pragma once

#include <map>

#include "motzkin/errors.hpp"
#include "motzkin/poly.hpp"

namespace motzkin {

/// Exact quotient of two polynomials. Throws NonZeroRemainder when `den`
/// does not divide `num`.
Poly exact_div(const Poly& num, const Poly& den);

/// zeta -> zeta q^n: multiplies each monomial by QH^(2n * step degree).
Poly scale_shift(const Poly& p, int n);

/// Replaces `v` by `value`. Negative powers of `v` are rejected.
Poly substitute(const Poly& p, Var v, const Poly& value);

/// Floor/ceiling reflection of the ceiling-k process:
/// zeta -> zeta q^k, q -> 1/q, optionally exchanging the floor and ceiling
/// markers (TD <-> TU, CD <-> CU). The result is in Laurent mode.
Poly dual_transform(const Poly& p, int k, bool swap_markers = false);

/// Gaussian binomial [a choose b] in q = QH^qh_step, by the q-Pascal rule.
Poly gaussian_binomial(int a, int b, int qh_step);

/// Gaussian binomial [a choose b] in q = QH^2.
Poly q_binomial(int a, int b);

/// Rewrites a U<->V symmetric polynomial in the elementary basis
/// e1 = U+V -> ZH, e2 = U*V -> Z^2. Other variables ride along as
/// coefficients. Throws NotSymmetric.
Poly sym_reduce(const Poly& p);

/// Inverse of sym_reduce: ZH -> U+V, Z^2 -> U*V. Requires even Z-powers.
Poly sym_expand(const Poly& p);

using Assignment = std::map<Var, Rational>;

/// Exact evaluation. Throws MissingAssignment or DivisionByZero.
Rational eval_rational(const Poly& p, const Assignment& at);

}  // namespace motzkin
