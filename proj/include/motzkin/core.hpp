#pragma once

#include "motzkin/checks.hpp"
#include "motzkin/poly.hpp"
#include "motzkin/poly_matrix.hpp"
#include "motzkin/series.hpp"

namespace motzkin {

/// Marks a query without a ceiling.
inline constexpr int kInfinite = -1;

/// Generating-function request: ceiling k (or kInfinite), start m, end n,
/// series truncation L.
struct MeanderQuery {
    int k = 0;
    int m = 0;
    int n = 0;
    int L = 0;
};

/// The ceiling actually used: k itself, or max(m, n) + L when there is none.
/// Throws IndexOutOfRange for an invalid query.
int effective_ceiling(const MeanderQuery& q);

/// G = Z^z_power QH^qh_power numerator / denominator, plus its expansion.
struct GFResult {
    int k_eff = 0;
    Poly numerator;
    Poly denominator;
    int z_power = 0;
    int qh_power = 0;
    Series series;

    Poly prefactor() const;
};

/// Transfer matrix H_k: diagonal ZH QH^2j, off-diagonal Z QH^(2 min(i,j)+1).
PolyMatrix hamiltonian(int k);
/// D_k = 1 - H_k.
PolyMatrix secular_matrix(int k);

/// F_k by the top-row recursion, with F_-1 = 1 and F_k = 0 for k <= -2.
Poly secular_recursive(int k);
/// F_k from the Chebyshev double sum. Throws NotIntegral on a bad result.
Poly secular_closed(int k);
/// The occupation-number form of F_k, as a U,V-symmetric polynomial.
Poly secular_dual(int k);

enum class Route { recursive, det, closed, dual };
Poly secular(int k, Route route);

GFResult gf_meander(const MeanderQuery& q);
/// Brute propagator expansion sum_l <m|H^l|n>.
Series gf_series_oracle(const MeanderQuery& q);
/// Series of G_{k,mn} for any integers; zero outside 0 <= m,n <= k.
Series gf_series(int k, int m, int n, int L);

/// Two-step Dyck Hamiltonian of dimension 2k+3 in Z1, Z2, QH (QH plays q_o).
PolyMatrix two_step(int k);
/// F_k under Z -> Z1 Z2, ZH -> Z1^2 + Z2^2.
Poly embed_two_step(const Poly& p);
Report embedding_report(int k);
bool embedding_check(int k);

/// F_k(zeta q^k, 1/q) == F_k(zeta, q).
bool duality_check(int k);
/// Coefficientwise floor/ceiling reflection of a series.
Series dual_series(const Series& s, int k, bool swap_markers = false);
Report recursion_checks(int k, int L);

/// z G_k as a truncated continued fraction, cleared of denominators.
GFResult continued_fraction(int k);

enum class SpecialCase { q1, dyck, uniform };
Poly secular_special(int k, SpecialCase c);
/// F_k under the substitution that matches `c`.
Poly secular_specialized(int k, SpecialCase c);

enum class Tower { alpha, beta };
/// N bosons on kk+1 equidistant levels of the given tower.
Poly bosonic_partition(int kk, int N, Tower tower);
/// prod_{j=1}^{n} (1 - x^(j+shift)) / (1 - x^j) with x = QH^qh_step,
/// divided exactly. Zero when a numerator factor vanishes.
Poly q_product_ratio(int n, int shift, int qh_step);

}  // namespace motzkin
