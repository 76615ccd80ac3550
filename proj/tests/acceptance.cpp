// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "motzkin/cluster.hpp"
#include "motzkin/core.hpp"
#include "motzkin/enumeration.hpp"
#include "motzkin/errors.hpp"
#include "motzkin/markers.hpp"
#include "motzkin/polyring.hpp"

using namespace motzkin;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    void expect(const Report& r) {
        for (const auto& c : r) expect(c.passed, c.name + (c.detail.empty() ? "" : ": " + c.detail));
    }
};

std::string tag(int k, int m = -1, int n = -1) {
    std::string s = "k=" + std::to_string(k);
    if (m >= 0) s += " m=" + std::to_string(m) + " n=" + std::to_string(n);
    return s;
}

Outcome route_agreement() {
    Outcome o;
    for (int k = 0; k <= 6; ++k) {
        const Poly f = secular_recursive(k);
        o.expect(det(secular_matrix(k)) == f, "det " + tag(k));
        o.expect(secular_closed(k) == f, "closed " + tag(k));
        o.expect(sym_reduce(secular_dual(k)) == f, "dual " + tag(k));
    }
    return o;
}

Outcome tri_route() {
    Outcome o;
    for (int k = 0; k <= 4; ++k)
        for (int m = 0; m <= k; ++m)
            for (int n = 0; n <= k; ++n) {
                const Series g = gf_meander({k, m, n, 10}).series;
                o.expect(g == gf_series_oracle({k, m, n, 10}), "propagator " + tag(k, m, n));
                o.expect(g == enumerate(k, m, n, 10), "enumeration " + tag(k, m, n));
                for (int l = 0; l <= 10; ++l) o.expect(g[l].is_counting(), "counting " + tag(k, m, n));
            }
    return o;
}

Outcome motzkin_numbers() {
    Outcome o;
    const long expected[] = {1, 1, 2, 4, 9, 21, 51, 127, 323};
    const int k_eff = effective_ceiling({kInfinite, 0, 0, 8});
    const Series s = enumerate(k_eff, 0, 0, 8);
    for (int l = 0; l <= 8; ++l) {
        const Rational total = eval_rational(s[l], {{Var::Z, 1}, {Var::ZH, 1}, {Var::QH, 1}});
        o.expect(total == expected[l], "l=" + std::to_string(l) + " gives " + total.get_str());
        if (l <= 4) {
            o.expect(static_cast<long>(list_paths(k_eff, 0, 0, l).size()) == expected[l],
                     "listing l=" + std::to_string(l));
        }
    }
    return o;
}

Outcome long_path_witness() {
    Outcome o;
    const Exponents e = exps({{Var::Z, 15}, {Var::ZH, 5}, {Var::QH, 99}});
    o.expect(gf_meander({5, 1, 2, 20}).series[20].coeff(e) >= 1, "gf coefficient");
    o.expect(enumerate(5, 1, 2, 20)[20].coeff(e) >= 1, "enumeration coefficient");
    return o;
}

Outcome embedding() {
    Outcome o;
    for (int k = 0; k <= 4; ++k) {
        o.expect(embedding_report(k));
        o.expect(embedding_check(k), "embedding " + tag(k));
    }
    return o;
}

Outcome marked_suite() {
    Outcome o;
    const MarkerWeights w = MarkerWeights::symbolic();
    for (int k = 1; k <= 3; ++k) {
        for (int m = 0; m <= k; ++m)
            for (int n = 0; n <= k; ++n)
                o.expect(marked_gf({k, m, n, 8}, w).series == enumerate_marked(k, m, n, 8, w),
                         "marked DP " + tag(k, m, n));
        const Report r = marked_identity_suite(k, 8, 1, 20);
        o.expect(r);
    }
    return o;
}

Outcome cluster_suite() {
    Outcome o;
    for (int k = 0; k <= 4; ++k) {
        for (int a = 1; a <= 8; ++a) {
            const Poly c = cluster_term_uv(k, a);
            const Poly swapped =
                substitute(substitute(substitute(c, Var::U, Poly::var(Var::Z1)), Var::V, Poly::var(Var::U)), Var::Z1,
                           Poly::var(Var::V));
            o.expect(swapped == c, "U<->V symmetry " + tag(k) + " a=" + std::to_string(a));
        }
        o.expect(series_exp(cluster_log(k, 8)) == Series::from_poly(secular_recursive(k), 8), "exp " + tag(k));
    }
    for (int k = 0; k <= 3; ++k)
        for (int m = 0; m <= k; ++m)
            for (int n = 0; n <= k; ++n) {
                const Series ref = log_gf_reference(k, m, n, 8);
                o.expect(log_gf(k, m, n, 8) == ref, "log_gf " + tag(k, m, n));
                o.expect(log_gf_even_odd(k, m, n, 8) == ref, "even/odd " + tag(k, m, n));
            }
    return o;
}

Outcome extremal_areas() {
    Outcome o;
    for (int k = 0; k <= 5; ++k)
        for (int m = 0; m <= k; ++m)
            for (int n = 0; n <= k; ++n)
                for (int l = std::abs(n - m); l <= 10; ++l)
                    o.expect(area_bounds(k, m, n, l) == extremal_area_scan(k, m, n, l),
                             tag(k, m, n) + " l=" + std::to_string(l));
    o.expect(area_bounds(5, 3, 4, 5).first == 23, "A_min 11.5 at l=5");
    o.expect(area_bounds(5, 3, 4, 6).first == 25, "A_min 12.5 at l=6");
    for (int l = 8; l <= 10; ++l) o.expect(area_bounds(5, 3, 4, l).first == 25, "A_min 12.5 at l > m+n");
    o.expect(extremal_area_scan(5, 3, 4, 5).first == 23, "scan 11.5 at l=5");
    return o;
}

Outcome special_cases() {
    Outcome o;
    const Poly z = Poly::var(Var::Z);
    for (int k = 0; k <= 5; ++k) {
        for (auto c : {SpecialCase::q1, SpecialCase::dyck, SpecialCase::uniform})
            o.expect(secular_special(k, c) == secular_specialized(k, c), "special " + tag(k));
        const GFResult cf = continued_fraction(k);
        // num / den == z F_{k-1}(zeta q) / F_k
        o.expect(cf.numerator * secular_recursive(k) == cf.denominator * z * scale_shift(secular_recursive(k - 1), 1),
                 "continued fraction " + tag(k));
        const Series zg = gf_series(k, 0, 0, 12).times(z);
        o.expect(series_invert(cf.denominator, 12).times(cf.numerator) == zg, "continued fraction series " + tag(k));
        o.expect(duality_check(k), "duality " + tag(k));
    }
    return o;
}

Outcome degeneration() {
    Outcome o;
    for (int k = 0; k <= 4; ++k) {
        const Series g = gf_series(k, 0, 0, 12);
        for (int l = 1; l <= 12; l += 2)
            for (const auto& t : g[l].terms())
                o.expect(t.exp[index(Var::ZH)] != 0, "odd excursion without zh " + tag(k));
    }
    const MarkerWeights w = MarkerWeights::symbolic();
    for (int k = 1; k <= 3; ++k)
        for (int m = 0; m <= k; ++m)
            for (int n = 0; n <= k; ++n) {
                const GFResult g = marked_gf({k, m, n, 8}, w);
                for (const Poly& p : {g.numerator, g.denominator}) {
                    const Poly flat = substitute(p, Var::ZH, Poly());
                    o.expect(!flat.involves(Var::CD) && !flat.involves(Var::CU), "creep markers at zh=0 " + tag(k, m, n));
                }
                for (int l = 0; l <= 8; ++l) {
                    const Poly flat = substitute(g.series[l], Var::ZH, Poly());
                    o.expect(!flat.involves(Var::CD) && !flat.involves(Var::CU), "creep markers at zh=0 " + tag(k, m, n));
                }
            }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
        double budget_s;
    };
    const std::vector<Criterion> criteria = {
        {"route agreement, k <= 6", route_agreement, 60},
        {"tri-route series agreement, k <= 4, L = 10", tri_route, 120},
        {"Motzkin numbers through l = 8", motzkin_numbers, 0},
        {"witness Z^15 ZH^5 QH^99 at length 20", long_path_witness, 0},
        {"two-step embedding, k <= 4", embedding, 0},
        {"marked suite, k <= 3, L = 8", marked_suite, 0},
        {"cluster suite, A = 8", cluster_suite, 0},
        {"extremal areas, k <= 5, l <= 10", extremal_areas, 0},
        {"special cases, continued fraction, duality, k <= 5", special_cases, 0},
        {"degeneration sanity", degeneration, 0},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criteria[i].budget_s > 0 && secs > criteria[i].budget_s) {
            o.expect(false, "over time budget of " + std::to_string(static_cast<int>(criteria[i].budget_s)) + " s");
        }
        if (!o.ok) ++failed;
        std::printf("%s  %2zu  %-52s %7.2f s%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                    o.ok ? "" : "  ", o.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
