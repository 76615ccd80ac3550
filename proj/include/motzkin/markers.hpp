#pragma once

#include "motzkin/checks.hpp"
#include "motzkin/core.hpp"

namespace motzkin {

/// Touch-down, creep-down, touch-up and creep-up weights. Each is either the
/// formal marker variable or a specialization (any polynomial, usually a
/// rational constant).
struct MarkerWeights {
    Poly td = Poly(1);
    Poly cd = Poly(1);
    Poly tu = Poly(1);
    Poly cu = Poly(1);

    static MarkerWeights symbolic();
    static MarkerWeights ones();
    /// Floor markers only (ceiling weights 1), and ceiling markers only.
    MarkerWeights floor_only() const;
    MarkerWeights ceiling_only() const;
    /// Exchange floor and ceiling roles.
    MarkerWeights swapped() const;
};

/// A_r(t, s) = 1 - t + (t - s) zh q^r.
Poly boundary_factor(int r, const Poly& t, const Poly& s);

/// H_k with (0,0) scaled by cd, (1,0) by td, (k-1,k) by tu, (k,k) by cu.
/// Throws CeilingTooLow for k < 1.
PolyMatrix marked_hamiltonian(int k, const MarkerWeights& w);

/// Marked secular determinant through its expression in unmarked F's; valid
/// for every k (F~_-1 = t T, F~_k = 0 below).
Poly marked_secular(int k, const MarkerWeights& w);
/// det(1 - H~_k), k >= 1.
Poly marked_secular_det(int k, const MarkerWeights& w);
/// Top-row and bottom-row expansions, k >= 1.
Poly marked_secular_top_row(int k, const MarkerWeights& w);
Poly marked_secular_bottom_row(int k, const MarkerWeights& w);

/// Symmetrized marked generating function by the cofactor route.
GFResult marked_gf(const MeanderQuery& q, const MarkerWeights& w);
/// Extra t for a start on the floor, extra T for a start on the ceiling.
Poly start_factor(int k, int m, const MarkerWeights& w);
/// start_factor * sum_l <m|H~^l|n>.
Series marked_series_oracle(const MeanderQuery& q, const MarkerWeights& w);
/// The expression of G~ through unmarked G's, expanded to order L.
Series marked_gf_from_unmarked(int k, int m, int n, int L, const MarkerWeights& w);

/// Weights of the invariance family s = t + (1-t)/zh, sigma = T + (1-T) q^-k / zh
/// at a numeric point. `literal_sign` uses q^k for sigma instead.
MarkerWeights invariance_weights(int k, const Rational& t, const Rational& tt, const Rational& zh,
                                 const Rational& q, bool literal_sign = false);

/// Value of G~_{k,mn} / (z^(n-m) q^((n^2-m^2)/2)) at a point given in z, zh, q.
Rational marked_ratio_value(int k, int m, int n, const MarkerWeights& w, const Rational& z,
                            const Rational& zh, const Rational& q);
Rational unmarked_ratio_value(int k, int m, int n, const Rational& z, const Rational& zh, const Rational& q);

Report marked_identity_suite(int k, int L, unsigned seed = 1, int random_points = 20);

}  // namespace motzkin
