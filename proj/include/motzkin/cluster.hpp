#pragma once

#include <utility>
#include <vector>

#include "motzkin/poly.hpp"
#include "motzkin/series.hpp"

namespace motzkin {

using Composition = std::vector<int>;

/// Compositions of a with at most max_parts parts (0: no limit), in
/// lexicographic order: a=2 gives (1,1), (2).
std::vector<Composition> compositions(int a, int max_parts = 0);

/// Exclusion-2 composition weight (1/l1) prod C(l_i + l_{i+1} - 1, l_{i+1}).
Rational c2(const Composition& parts);

/// Spectral factor of level r of the two-step ladder:
/// s(2n) = -U QH^2n, s(2n+1) = -V QH^2n.
Poly spectral_factor(int r);

/// Degree-a part of ln F_k in U, V, QH (symmetric), and its reduction to Z, ZH, QH.
Poly cluster_term_uv(int k, int a);
Poly cluster_term(int k, int a);
/// Sum of cluster terms a = 1..A as a series.
Series cluster_log(int k, int A);

/// ln(G_{k,mn} / prefactor) through z-grade A, telescoped window route.
Series log_gf(int k, int m, int n, int A);
/// Same quantity through the even/odd split of the window.
Series log_gf_even_odd(int k, int m, int n, int A);
/// series_log of the generating function itself, the independent route.
Series log_gf_reference(int k, int m, int n, int A);

/// (Amin2, Amax2): doubled extremal areas of length-l meanders from m to n
/// under ceiling k. Throws Unreachable when l < |n - m|.
std::pair<int, int> area_bounds(int k, int m, int n, int l);
/// (min, max) doubled excess area (QH exponent) at extra length a over |n - m|.
std::pair<int, int> q_degree_bounds(int k, int m, int n, int a);

}  // namespace motzkin
