#include "doctest.h"
#include "motzkin/cluster.hpp"
#include "motzkin/core.hpp"
#include "motzkin/errors.hpp"
#include "motzkin/polyring.hpp"

using namespace motzkin;

namespace {

const Poly Z = Poly::var(Var::Z);
const Poly ZH = Poly::var(Var::ZH);
const Poly QH = Poly::var(Var::QH);
const Poly U = Poly::var(Var::U);
const Poly V = Poly::var(Var::V);

}  // namespace

TEST_CASE("compositions") {
    const auto two = compositions(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == Composition{1, 1});
    CHECK(two[1] == Composition{2});
    CHECK(compositions(4).size() == 8);
    CHECK(compositions(5).size() == 16);
    CHECK(compositions(4, 2).size() == 4);
    CHECK(compositions(3).front() == Composition{1, 1, 1});
    CHECK(compositions(3).back() == Composition{3});
    CHECK_THROWS_AS(compositions(0), IndexOutOfRange);
}

TEST_CASE("c2 weights") {
    CHECK(c2({1}) == 1);
    CHECK(c2({2}) == ratio(1, 2));
    CHECK(c2({3}) == ratio(1, 3));
    CHECK(c2({1, 1}) == 1);
    CHECK(c2({1, 2}) == 1);
    CHECK(c2({2, 1}) == 1);
    CHECK(c2({2, 2}) == ratio(3, 2));
    CHECK(c2({1, 1, 1}) == 1);
    CHECK(c2({2, 3, 1}) == 6);
}

TEST_CASE("spectral ladder") {
    CHECK(spectral_factor(0) == -U);
    CHECK(spectral_factor(1) == -V);
    CHECK(spectral_factor(4) == -U * QH.pow(4));
    CHECK(spectral_factor(5) == -V * QH.pow(4));
}

TEST_CASE("cluster terms") {
    // k = 0: ln(1 - zh)
    for (int a = 1; a <= 6; ++a) CHECK(cluster_term(0, a) == -ZH.pow(a).scaled(ratio(1, a)));
    // a = 1 is minus the trace of H_k
    for (int k = 0; k <= 4; ++k) {
        Poly trace;
        for (int j = 0; j <= k; ++j) trace += QH.pow(2 * j);
        CHECK(cluster_term(k, 1) == -ZH * trace);
    }
    // symmetric in U, V before reduction
    const Poly c = cluster_term_uv(2, 4);
    CHECK(substitute(substitute(substitute(c, Var::U, Poly::var(Var::Z1)), Var::V, U), Var::Z1, V) == c);
    for (int k = 0; k <= 3; ++k)
        for (int a = 1; a <= 6; ++a) CHECK(cluster_term(k, a).is_step_homogeneous(a));
}

TEST_CASE("exp of the cluster sum is the secular determinant") {
    for (int k = 0; k <= 4; ++k) {
        CAPTURE(k);
        const int A = 2 * k + 4;
        CHECK(series_exp(cluster_log(k, A)) == Series::from_poly(secular_recursive(k), A));
    }
}

TEST_CASE("log of the meander generating function") {
    for (int k = 0; k <= 3; ++k)
        for (int m = 0; m <= k; ++m)
            for (int n = 0; n <= k; ++n) {
                CAPTURE(k);
                CAPTURE(m);
                CAPTURE(n);
                const Series ref = log_gf_reference(k, m, n, 7);
                CHECK(log_gf(k, m, n, 7) == ref);
                CHECK(log_gf_even_odd(k, m, n, 7) == ref);
                // exp(log) over the prefactor reproduces G
                const GFResult g = gf_meander({k, m, n, 7 + std::abs(n - m)});
                const Series expanded = series_exp(ref);
                for (int a = 0; a <= 7; ++a)
                    CHECK(expanded[a].times_monomial(g.prefactor().terms()[0].exp) ==
                          g.series[a + std::abs(n - m)]);
            }
    CHECK_THROWS_AS(log_gf(2, 3, 0, 4), IndexOutOfRange);
}

TEST_CASE("log coefficients are not integral") {
    // ln 1/(1 - zh) carries zh^2/2
    const Series s = log_gf(0, 0, 0, 2);
    CHECK(s[2] == ZH.pow(2).scaled(ratio(1, 2)));
    CHECK_FALSE(s[2].is_integral());
    // but every QH power in the log is even, so the log is a series in q
    for (int k = 0; k <= 3; ++k)
        for (int m = 0; m <= k; ++m)
            for (int n = m; n <= k; ++n) {
                const Series l = log_gf(k, m, n, 6);
                for (int a = 0; a <= 6; ++a)
                    for (const auto& t : l[a].terms()) CHECK(t.exp[index(Var::QH)] % 2 == 0);
            }
}

TEST_CASE("area bounds") {
    // minimal area from 3 to 4 for lengths 5, 6, 7, 9
    CHECK(area_bounds(10, 3, 4, 5).first == 23);
    CHECK(area_bounds(10, 3, 4, 6).first == 25);
    CHECK(area_bounds(10, 3, 4, 7).first == 25);
    CHECK(area_bounds(10, 3, 4, 9).first == 25);
    CHECK(area_bounds(4, 0, 0, 4).second == 8);
    CHECK(area_bounds(1, 0, 0, 4).second == 6);  // up, two flats at height 1, down
    CHECK_THROWS_AS(area_bounds(5, 0, 3, 2), Unreachable);
    CHECK_THROWS_AS(area_bounds(2, 0, 3, 5), IndexOutOfRange);
    // against the extreme QH powers of the generating function
    for (int k = 0; k <= 4; ++k)
        for (int m = 0; m <= k; ++m)
            for (int n = 0; n <= k; ++n) {
                const int d = std::abs(n - m);
                const Series g = gf_series(k, m, n, d + 8);
                for (int l = d; l <= d + 8; ++l) {
                    CAPTURE(k);
                    CAPTURE(m);
                    CAPTURE(n);
                    CAPTURE(l);
                    const auto [lo, hi] = area_bounds(k, m, n, l);
                    CHECK(g[l].min_degree(Var::QH) == lo);
                    CHECK(g[l].max_degree(Var::QH) == hi);
                }
            }
}

TEST_CASE("degree bounds of the log expansion") {
    for (int k = 0; k <= 3; ++k)
        for (int m = 0; m <= k; ++m)
            for (int n = 0; n <= k; ++n) {
                const Series e = series_exp(log_gf(k, m, n, 7));
                for (int a = 0; a <= 7; ++a) {
                    CAPTURE(k);
                    CAPTURE(m);
                    CAPTURE(n);
                    CAPTURE(a);
                    const auto [lo, hi] = q_degree_bounds(k, m, n, a);
                    CHECK(e[a].min_degree(Var::QH) == lo);
                    CHECK(e[a].max_degree(Var::QH) == hi);
                }
            }
}
