#include "motzkin/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "motzkin/polyring.hpp"

namespace motzkin {

namespace {

const Poly& z() {
    static const Poly p = Poly::var(Var::Z);
    return p;
}
const Poly& zh() {
    static const Poly p = Poly::var(Var::ZH);
    return p;
}
Poly qh(int e) { return Poly::var(Var::QH, e); }

Integer binomial(int a, int b) {
    if (b < 0 || a < 0 || b > a) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

// Chebyshev T_m coefficients, lowest degree first.
std::vector<Integer> chebyshev(int m) {
    std::vector<Integer> prev{1}, cur{0, 1};
    if (m == 0) return prev;
    for (int i = 1; i < m; ++i) {
        std::vector<Integer> next(cur.size() + 1, 0);
        for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += 2 * cur[j];
        for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// z^N T_m(zh / 2z), a homogeneous polynomial of degree N (m <= N).
Poly chebyshev_homogenized(int N, int m) {
    std::vector<Integer> c = chebyshev(m);
    std::vector<Term> terms;
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
        if (c[i] == 0) continue;
        Rational coeff(c[i]);
        coeff /= Rational(Integer(1) << i);
        terms.push_back({exps({{Var::Z, N - i}, {Var::ZH, i}}), coeff});
    }
    return Poly::from_terms(std::move(terms));
}

// Complete homogeneous h_t(U, V).
Poly complete_homogeneous(int t) {
    std::vector<Term> terms;
    for (int i = 0; i <= t; ++i) terms.push_back({exps({{Var::U, i}, {Var::V, t - i}}), 1});
    return Poly::from_terms(std::move(terms));
}

Series gf_from_parts(const Poly& num, const Poly& den, int z_power, int qh_power, int L) {
    Series out(L);
    if (z_power > L || num.is_zero()) return out;
    const Series body = series_invert(den, L).times(num);
    const Exponents pre = exps({{Var::Z, z_power}, {Var::QH, qh_power}});
    for (int d = z_power; d <= L; ++d) out.set(d, body[d - z_power].times_monomial(pre));
    return out;
}

void require_ceiling(int k, const char* what) {
    if (k < 0) throw IndexOutOfRange(std::string(what) + ": ceiling must be >= 0, got " + std::to_string(k));
}

}  // namespace

int effective_ceiling(const MeanderQuery& q) {
    if (q.m < 0 || q.n < 0 || q.L < 0) throw IndexOutOfRange("query: m, n and L must be >= 0");
    if (q.k == kInfinite) return std::max(q.m, q.n) + q.L;
    if (q.k < 0 || q.m > q.k || q.n > q.k) {
        throw IndexOutOfRange("query: need 0 <= m, n <= k (k=" + std::to_string(q.k) +
                              ", m=" + std::to_string(q.m) + ", n=" + std::to_string(q.n) + ")");
    }
    return q.k;
}

Poly GFResult::prefactor() const { return Poly::monomial(exps({{Var::Z, z_power}, {Var::QH, qh_power}})); }

PolyMatrix hamiltonian(int k) {
    require_ceiling(k, "hamiltonian");
    const std::size_t dim = static_cast<std::size_t>(k) + 1;
    PolyMatrix h(dim);
    for (int j = 0; j <= k; ++j) {
        h(j, j) = zh() * qh(2 * j);
        if (j < k) {
            h(j, j + 1) = z() * qh(2 * j + 1);
            h(j + 1, j) = h(j, j + 1);
        }
    }
    return h;
}

PolyMatrix secular_matrix(int k) {
    const PolyMatrix h = hamiltonian(k);
    return PolyMatrix::identity(h.dim()) - h;
}

Poly secular_recursive(int k) {
    if (k <= -2) return Poly();
    // F_{j} = (1 - zh) F_{j-1}(zeta q) - z^2 q F_{j-2}(zeta q^2)
    Poly before(0), last(1);  // F_{-2}, F_{-1}
    const Poly step = 1 - zh();
    const Poly hop = z().pow(2) * qh(2);
    for (int j = 0; j <= k; ++j) {
        Poly next = step * scale_shift(last, 1) - hop * scale_shift(before, 2);
        before = std::move(last);
        last = std::move(next);
    }
    return last;
}

Poly secular_closed(int k) {
    require_ceiling(k, "secular_closed");
    Poly total;
    for (int N = 0; N <= k + 1; ++N) {
        const int K = k - N + 1;
        Poly inner;
        for (int n = 0; n <= N; ++n) {
            inner += chebyshev_homogenized(N, std::abs(2 * n - N)) * q_binomial(K + n, n) *
                     q_binomial(K + N - n, N - n);
        }
        inner *= qh(N * (N - 1));
        if (N % 2 == 1) inner = -inner;
        total += inner;
    }
    if (!total.is_integral()) {
        throw NotIntegral("secular_closed(" + std::to_string(k) + "): non-integral coefficients in " +
                          total.to_string());
    }
    return total;
}

Poly secular_dual(int k) {
    require_ceiling(k, "secular_dual");
    std::vector<Poly> h;
    for (int t = 0; t <= k + 1; ++t) h.push_back(complete_homogeneous(t));
    Poly total;
    for (int N = 0; N <= k + 1; ++N) {
        const int levels = k - N + 2;  // j = 0 .. k-N+1
        // dp[c]: weight of c particles distributed over the levels seen so far
        std::vector<Poly> dp(N + 1);
        dp[0] = Poly(1);
        for (int j = 0; j < levels; ++j) {
            std::vector<Poly> next(N + 1);
            for (int c = 0; c <= N; ++c) {
                if (dp[c].is_zero()) continue;
                for (int t = 0; c + t <= N; ++t) next[c + t] += dp[c] * h[t] * qh(2 * j * t);
            }
            dp = std::move(next);
        }
        Poly term = dp[N] * qh(N * (N - 1));
        if (N % 2 == 1) term = -term;
        total += term;
    }
    return total;
}

Poly secular(int k, Route route) {
    switch (route) {
        case Route::recursive: return secular_recursive(k);
        case Route::det: return det(secular_matrix(k));
        case Route::closed: return secular_closed(k);
        case Route::dual: return sym_reduce(secular_dual(k));
    }
    return secular_recursive(k);
}

Series gf_series(int k, int m, int n, int L) {
    if (k < 0 || m < 0 || n < 0 || m > k || n > k) return Series(L);
    const int lo = std::min(m, n), hi = std::max(m, n);
    const Poly num = secular_recursive(lo - 1) * scale_shift(secular_recursive(k - hi - 1), hi + 1);
    return gf_from_parts(num, secular_recursive(k), hi - lo, hi * hi - lo * lo, L);
}

GFResult gf_meander(const MeanderQuery& q) {
    GFResult r;
    r.k_eff = effective_ceiling(q);
    const int lo = std::min(q.m, q.n), hi = std::max(q.m, q.n);
    r.z_power = hi - lo;
    r.qh_power = hi * hi - lo * lo;
    r.numerator = secular_recursive(lo - 1) * scale_shift(secular_recursive(r.k_eff - hi - 1), hi + 1);
    r.denominator = secular_recursive(r.k_eff);
    r.series = gf_from_parts(r.numerator, r.denominator, r.z_power, r.qh_power, q.L);
    return r;
}

Series gf_series_oracle(const MeanderQuery& q) {
    const int k = effective_ceiling(q);
    const PolyMatrix h = hamiltonian(k);
    std::vector<Poly> row(static_cast<std::size_t>(k) + 1);
    row[q.m] = Poly(1);
    Series out(q.L);
    for (int l = 0; l <= q.L; ++l) {
        out.set(l, row[q.n]);
        if (l < q.L) row = h.left_apply(row);
    }
    return out;
}

PolyMatrix two_step(int k) {
    require_ceiling(k, "two_step");
    const std::size_t dim = 2 * static_cast<std::size_t>(k) + 3;
    PolyMatrix h(dim);
    for (int j = 0; j <= k; ++j) {
        const std::size_t e = 2 * static_cast<std::size_t>(j);
        h(e, e + 1) = Poly::var(Var::Z1) * qh(j);
        h(e + 1, e) = h(e, e + 1);
        h(e + 1, e + 2) = Poly::var(Var::Z2) * qh(j);
        h(e + 2, e + 1) = h(e + 1, e + 2);
    }
    return h;
}

Poly embed_two_step(const Poly& p) {
    const Poly z1 = Poly::var(Var::Z1), z2 = Poly::var(Var::Z2);
    return substitute(substitute(p, Var::Z, z1 * z2), Var::ZH, z1.pow(2) + z2.pow(2));
}

Report embedding_report(int k) {
    const PolyMatrix h = two_step(k);
    const PolyMatrix one = PolyMatrix::identity(h.dim());
    const Poly minus = det(one - h);
    Report r;
    r.push_back(check_equal("two_step_determinant k=" + std::to_string(k), minus,
                            embed_two_step(secular_recursive(k))));
    r.push_back(check_equal("two_step_parity k=" + std::to_string(k), minus, det(one + h)));
    return r;
}

bool embedding_check(int k) { return all_passed(embedding_report(k)); }

bool duality_check(int k) {
    const Poly f = secular_recursive(k);
    return dual_transform(f, k) == f;
}

Series dual_series(const Series& s, int k, bool swap_markers) {
    Series out(s.order());
    for (int d = 0; d <= s.order(); ++d) out.set(d, dual_transform(s[d], k, swap_markers));
    return out;
}

Report recursion_checks(int k, int L) {
    require_ceiling(k, "recursion_checks");
    Report r;
    const std::string at = " k=" + std::to_string(k);
    const Series gk = gf_series(k, 0, 0, L);

    r.push_back(check_true("duality F" + at, duality_check(k)));

    {  // (1 - zh) G_k = 1 + z^2 q G_{k-1}(zeta q) G_k
        Series lhs = gk.times(1 - zh());
        Series rhs = Series::from_poly(Poly(1), L) +
                     (gf_series(k - 1, 0, 0, L).shifted(1) * gk).times(z().pow(2) * qh(2));
        r.push_back(check_equal("first passage excursion" + at, lhs, rhs));
    }

    bool three_term = true, symmetric = true, duality_g = true, split_a = true, split_b = true;
    bool cofactor = true;
    std::string detail;
    auto note = [&](bool& flag, const std::string& what, const std::string& diff) {
        if (diff.empty()) return;
        flag = false;
        if (detail.empty()) detail = what + ": " + diff;
    };
    const PolyMatrix d = secular_matrix(k);
    for (int m = 0; m <= k; ++m) {
        for (int n = 0; n <= k; ++n) {
            const std::string mn = " m=" + std::to_string(m) + " n=" + std::to_string(n);
            const Series g = gf_series(k, m, n, L);
            if (m < n) {
                // (1 - zh q^n) G_mn = z q^(n-1/2) G_{m,n-1} + z q^(n+1/2) G_{m,n+1}
                Series lhs = g.times(1 - zh() * qh(2 * n));
                Series rhs = gf_series(k, m, n - 1, L).times(z() * qh(2 * n - 1)) +
                             gf_series(k, m, n + 1, L).times(z() * qh(2 * n + 1));
                note(three_term, "three-term" + mn, first_difference(lhs, rhs));
                // G_mn = z q^(n-1/2) G_{m,n-1} G_{k-n}(zeta q^n)
                Series a = (gf_series(k, m, n - 1, L) * gf_series(k - n, 0, 0, L).shifted(n))
                               .times(z() * qh(2 * n - 1));
                note(split_a, "last passage" + mn, first_difference(g, a));
                // G_mn = z q^(l+1/2) G_{l+1,n} G_{l;m,l} for m <= l < n
                for (int l = m; l < n; ++l) {
                    Series b = (gf_series(k, l + 1, n, L) * gf_series(l, m, l, L)).times(z() * qh(2 * l + 1));
                    note(split_b, "first passage at l=" + std::to_string(l) + mn, first_difference(g, b));
                }
            }
            if (m <= n) {
                const Poly minor = k == 0 ? Poly(1) : det(d.complement(n, m));
                const Poly cof = (n - m) % 2 == 0 ? minor : -minor;
                const Poly expect = secular_recursive(m - 1) * scale_shift(secular_recursive(k - n - 1), n + 1) *
                                    Poly::monomial(exps({{Var::Z, n - m}, {Var::QH, n * n - m * m}}));
                note(cofactor, "cofactor" + mn, first_difference(cof, expect));
            }
            const Series oracle_mn = gf_series_oracle({k, m, n, L});
            const Series oracle_nm = gf_series_oracle({k, n, m, L});
            note(symmetric, "symmetry" + mn, first_difference(oracle_mn, oracle_nm));
            note(duality_g, "duality G" + mn, first_difference(dual_series(g, k), gf_series(k, k - n, k - m, L)));
        }
    }
    r.push_back(check_true("three-term recursion" + at, three_term, three_term ? "" : detail));
    r.push_back(check_true("last-step factorization" + at, split_a, split_a ? "" : detail));
    r.push_back(check_true("first-passage factorization" + at, split_b, split_b ? "" : detail));
    r.push_back(check_true("cofactor formula" + at, cofactor, cofactor ? "" : detail));
    r.push_back(check_true("G symmetry" + at, symmetric, symmetric ? "" : detail));
    r.push_back(check_true("G duality" + at, duality_g, duality_g ? "" : detail));

    {  // sum_j <m|H^a|j><j|H^b|n> == <m|H^(a+b)|n>, every split of every l <= L
        const PolyMatrix h = hamiltonian(k);
        std::vector<std::vector<std::vector<Poly>>> rows(k + 1);  // rows[m][l] = e_m H^l
        for (int m = 0; m <= k; ++m) {
            std::vector<Poly> v(k + 1);
            v[m] = Poly(1);
            for (int l = 0; l <= L; ++l) {
                rows[m].push_back(v);
                if (l < L) v = h.left_apply(v);
            }
        }
        bool ok = true;
        std::string where;
        for (int m = 0; m <= k && ok; ++m)
            for (int n = 0; n <= k && ok; ++n)
                for (int l = 0; l <= L && ok; ++l)
                    for (int a = 0; a <= l && ok; ++a) {
                        Poly sum;
                        for (int j = 0; j <= k; ++j) sum += rows[m][a][j] * rows[n][l - a][j];
                        if (!(sum == rows[m][l][n])) {
                            ok = false;
                            where = "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                    " l=" + std::to_string(l) + " split=" + std::to_string(a);
                        }
                    }
        r.push_back(check_true("fixed-split propagator" + at, ok, where));
    }

    {  // odd-length excursions need a horizontal step
        bool ok = true;
        for (int l = 1; l <= L; l += 2)
            for (const auto& t : gk[l].terms())
                if (t.exp[index(Var::ZH)] == 0) ok = false;
        r.push_back(check_true("odd excursions contain zh" + at, ok));
    }

    {  // a ceiling above max(m,n)+L is invisible at order L
        const int high = std::max(k, L);
        r.push_back(check_equal("ceiling stabilization" + at, gf_series(high, 0, 0, L),
                                gf_series(high + 1, 0, 0, L)));
    }

    {
        const GFResult cf = continued_fraction(k);
        r.push_back(check_equal("continued fraction" + at, cf.numerator * secular_recursive(k),
                                cf.denominator * z() * scale_shift(secular_recursive(k - 1), 1)));
    }
    return r;
}

GFResult continued_fraction(int k) {
    require_ceiling(k, "continued_fraction");
    // z G_j = N_j / D_j with g_j(w) = 1 / (w - lambda - g_{j-1}(u w)), g_{-1} = 0.
    Poly num(0), den(1);
    for (int j = 0; j <= k; ++j) {
        const Poly n1 = scale_shift(num, 1), d1 = scale_shift(den, 1);
        num = z() * d1;
        den = (1 - zh()) * d1 - z() * n1;
    }
    GFResult r;
    r.k_eff = k;
    r.numerator = std::move(num);
    r.denominator = std::move(den);
    return r;
}

Poly q_product_ratio(int n, int shift, int qh_step) {
    if (n < 0) throw IndexOutOfRange("q_product_ratio: negative length");
    if (shift < 0 && n >= -shift) return Poly();
    if (shift < 0) throw IndexOutOfRange("q_product_ratio: every numerator exponent is negative");
    Poly num(1), den(1);
    for (int j = 1; j <= n; ++j) {
        num *= 1 - qh(qh_step * (j + shift));
        den *= 1 - qh(qh_step * j);
    }
    return exact_div(num, den);
}

Poly secular_special(int k, SpecialCase c) {
    require_ceiling(k, "secular_special");
    Poly total;
    switch (c) {
        case SpecialCase::q1: {
            for (int N = 0; N <= k + 1; ++N)
                for (int n = 0; n <= N; ++n) {
                    Integer w = binomial(k + 1 - N + n, n) * binomial(k + 1 - n, N - n);
                    if (N % 2 == 1) w = -w;
                    total += Poly::monomial(exps({{Var::U, N - n}, {Var::V, n}}), Rational(w));
                }
            return sym_reduce(total);
        }
        case SpecialCase::dyck: {
            for (int n = 0; 2 * n <= k + 1; ++n) {
                Poly term = gaussian_binomial(k - n + 1, n, 4) * z().pow(2 * n) * qh(2 * n * (2 * n - 1));
                total += n % 2 == 0 ? term : -term;
            }
            return total;
        }
        case SpecialCase::uniform: {
            for (int n = 0; 3 * n <= k + 1; ++n)
                for (int l = 0; 3 * n + l <= k + 1; ++l) {
                    const int area2 = 3 * n * (3 * n - 1) + 6 * n * l + 2 * l * (l - 1);
                    Poly term = z().pow(3 * n + l) * qh(area2) * q_product_ratio(n, k - 3 * n - l + 1, 6) *
                                q_product_ratio(l, k - 3 * n - 2 * l + 2, 2);
                    total += l % 2 == 0 ? term : -term;
                }
            return total;
        }
    }
    return total;
}

Poly secular_specialized(int k, SpecialCase c) {
    const Poly f = secular_recursive(k);
    switch (c) {
        case SpecialCase::q1: return substitute(f, Var::QH, Poly(1));
        case SpecialCase::dyck: return substitute(f, Var::ZH, Poly());
        case SpecialCase::uniform: return substitute(f, Var::ZH, z());
    }
    return f;
}

Poly bosonic_partition(int kk, int N, Tower tower) {
    if (kk < 0 || N < 0) throw IndexOutOfRange("bosonic_partition: kk and N must be >= 0");
    const Poly base = -Poly::var(tower == Tower::alpha ? Var::U : Var::V);
    return base.pow(static_cast<unsigned>(N)) * q_binomial(N + kk, N);
}

}  // namespace motzkin
