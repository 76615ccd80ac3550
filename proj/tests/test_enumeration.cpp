#include <algorithm>
#include <cstdint>

#include "doctest.h"
#include "motzkin/cluster.hpp"
#include "motzkin/core.hpp"
#include "motzkin/enumeration.hpp"
#include "motzkin/errors.hpp"
#include "motzkin/polyring.hpp"

using namespace motzkin;

namespace {

const Poly Z = Poly::var(Var::Z);
const Poly ZH = Poly::var(Var::ZH);
const Poly QH = Poly::var(Var::QH);

Rational at_one(const Poly& p) {
    return eval_rational(p, {{Var::Z, 1}, {Var::ZH, 1}, {Var::QH, 1}});
}

}  // namespace

TEST_CASE("trivial lengths") {
    CHECK(enumerate(3, 1, 1, 0)[0] == 1);
    CHECK(enumerate(3, 1, 2, 0)[0].is_zero());
    CHECK(enumerate(0, 0, 0, 3) == Series::from_poly(1 + ZH + ZH.pow(2) + ZH.pow(3), 3));
    CHECK_THROWS_AS(enumerate(2, 3, 0, 4), IndexOutOfRange);
}

TEST_CASE("Motzkin numbers") {
    const std::vector<long> motzkin = {1, 1, 2, 4, 9, 21, 51, 127, 323};
    const int k_eff = effective_ceiling({kInfinite, 0, 0, 8});
    const Series s = enumerate(k_eff, 0, 0, 8);
    for (int l = 0; l <= 8; ++l) {
        CHECK(at_one(s[l]) == motzkin[l]);
        if (l <= 4) CHECK(static_cast<long>(list_paths(k_eff, 0, 0, l).size()) == motzkin[l]);
    }
}

TEST_CASE("listing") {
    const auto two = list_paths(1, 0, 0, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].steps == "UD");
    CHECK(two[1].steps == "HH");
    CHECK(two[1].stats.b == 2);
    CHECK(two[0].stats.a == 2);  // start on floor plus the down-step
    CHECK(two[0].stats.c == 1);
    const auto forced = list_paths(4, 1, 4, 3);
    REQUIRE(forced.size() == 1);
    CHECK(forced[0].steps == "UUU");
    CHECK(forced[0].stats.A2 == 16 - 1);
    CHECK(list_paths(3, 0, 3, 2).empty());
    CHECK_THROWS_AS(list_paths(3, 0, 0, 15), LengthGuard);
    CHECK_THROWS_AS(path_stats(1, 0, "D"), IndexOutOfRange);
}

TEST_CASE("listing aggregates to the DP") {
    for (int k = 0; k <= 4; ++k)
        for (int m = 0; m <= k; ++m)
            for (int n = 0; n <= k; ++n) {
                const Series s = enumerate(k, m, n, 10);
                for (int l = 0; l <= 10; ++l) {
                    Poly total;
                    for (const auto& p : list_paths(k, m, n, l)) {
                        const PathStats& st = p.stats;
                        CHECK(st.lu - st.ld == n - m);
                        CHECK(st.a <= st.ld + 1);
                        CHECK(st.c <= st.lu + 1);
                        total += path_weight(st);
                    }
                    CAPTURE(k);
                    CAPTURE(m);
                    CAPTURE(n);
                    CAPTURE(l);
                    CHECK(total == s[l]);
                }
            }
}

TEST_CASE("DP agrees with the propagator") {
    for (int k = 0; k <= 4; ++k)
        for (int m = 0; m <= k; ++m)
            for (int n = 0; n <= k; ++n) {
                CAPTURE(k);
                CAPTURE(m);
                CAPTURE(n);
                const Series s = enumerate(k, m, n, 10);
                CHECK(s == gf_series_oracle({k, m, n, 10}));
                CHECK(s == gf_meander({k, m, n, 10}).series);
                for (int l = 0; l <= 10; ++l) {
                    CHECK(s[l].is_counting());
                    CHECK(s[l].is_step_homogeneous(l));
                }
            }
}

TEST_CASE("long-path witness") {
    const Series s = enumerate(5, 1, 2, 20);
    CHECK(s[20].coeff(exps({{Var::Z, 15}, {Var::ZH, 5}, {Var::QH, 99}})) >= 1);
}

TEST_CASE("marked DP") {
    const MarkerWeights w = MarkerWeights::symbolic();
    CHECK_THROWS_AS(enumerate_marked(0, 0, 0, 3, w), CeilingTooLow);
    for (int k = 1; k <= 3; ++k)
        for (int m = 0; m <= k; ++m)
            for (int n = 0; n <= k; ++n) {
                CAPTURE(k);
                CAPTURE(m);
                CAPTURE(n);
                const Series s = enumerate_marked(k, m, n, 8, w);
                CHECK(s == marked_gf({k, m, n, 8}, w).series);
                CHECK(enumerate_marked(k, m, n, 8, MarkerWeights::ones()) == enumerate(k, m, n, 8));
                // marker exponents count boundary events path by path
                for (int l = 0; l <= 6; ++l) {
                    Poly total;
                    for (const auto& p : list_paths(k, m, n, l)) total += path_weight(p.stats, w);
                    CHECK(total == s[l]);
                }
            }
}

TEST_CASE("extremal areas") {
    CHECK(extremal_area_scan(5, 3, 4, 5).first == 23);
    CHECK(extremal_area_scan(1, 0, 0, 2).second == 2);
    const auto forced = extremal_area_scan(4, 1, 4, 3);
    CHECK(forced.first == forced.second);
    CHECK_THROWS_AS(extremal_area_scan(4, 0, 4, 3), Unreachable);
    for (int k = 0; k <= 4; ++k)
        for (int m = 0; m <= k; ++m)
            for (int n = 0; n <= k; ++n)
                for (int l = std::abs(n - m); l <= 9; ++l) {
                    CAPTURE(k);
                    CAPTURE(m);
                    CAPTURE(n);
                    CAPTURE(l);
                    CHECK(extremal_area_scan(k, m, n, l) == area_bounds(k, m, n, l));
                }
}

TEST_CASE("reflection") {
    CHECK(reflect_steps("UHD") == "DHU");
    for (int k = 0; k <= 3; ++k)
        for (int m = 0; m <= k; ++m)
            for (int n = 0; n <= k; ++n)
                for (int l = 0; l <= 7; ++l) CHECK(reflection_check(k, m, n, l));
}
