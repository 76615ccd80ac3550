#include "motzkin/cluster.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>

#include "motzkin/core.hpp"
#include "motzkin/errors.hpp"
#include "motzkin/polyring.hpp"

namespace motzkin {

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// prod_i s(r + i - 1)^{l_i}
Poly window_product(const Composition& parts, int r) {
    Exponents e{};
    int sign = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const int level = r + static_cast<int>(i);
        e[index(level % 2 == 0 ? Var::U : Var::V)] += parts[i];
        e[index(Var::QH)] += 2 * (level / 2) * parts[i];
        if (parts[i] % 2 == 1) sign = -sign;
    }
    return Poly::monomial(e, sign);
}

void require_order(int A) {
    if (A < 0) throw IndexOutOfRange("cluster order must be >= 0");
}

void require_meander(int k, int m, int n) {
    if (k < 0 || m < 0 || n < 0 || m > k || n > k) {
        throw IndexOutOfRange("need 0 <= m, n <= k (k=" + std::to_string(k) + ", m=" + std::to_string(m) +
                              ", n=" + std::to_string(n) + ")");
    }
}

}  // namespace

std::vector<Composition> compositions(int a, int max_parts) {
    if (a < 1) throw IndexOutOfRange("compositions: a must be >= 1");
    std::vector<Composition> out;
    Composition current;
    std::function<void(int)> extend = [&](int rest) {
        if (rest == 0) {
            out.push_back(current);
            return;
        }
        if (max_parts > 0 && static_cast<int>(current.size()) == max_parts) return;
        for (int part = 1; part <= rest; ++part) {
            current.push_back(part);
            extend(rest - part);
            current.pop_back();
        }
    };
    extend(a);
    return out;
}

Rational c2(const Composition& parts) {
    if (parts.empty()) throw IndexOutOfRange("c2: empty composition");
    Integer num = 1;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        Integer b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(parts[i] + parts[i + 1] - 1),
                     static_cast<unsigned long>(parts[i + 1]));
        num *= b;
    }
    Rational r(num, parts.front());
    r.canonicalize();
    return r;
}

Poly spectral_factor(int r) {
    if (r < 0) throw IndexOutOfRange("spectral_factor: negative level");
    return -Poly::var(r % 2 == 0 ? Var::U : Var::V) * Poly::var(Var::QH, 2 * (r / 2));
}

Poly cluster_term_uv(int k, int a) {
    if (k < 0 || a < 1) throw IndexOutOfRange("cluster_term: need k >= 0 and a >= 1");
    const int levels = 2 * k + 2;
    Poly total;
    for (const auto& parts : compositions(a, levels)) {
        const int j = static_cast<int>(parts.size());
        Poly sum;
        for (int r = 0; r <= levels - j; ++r) sum += window_product(parts, r);
        total += sum.scaled(c2(parts));
    }
    return a % 2 == 1 ? total : -total;
}

Poly cluster_term(int k, int a) { return sym_reduce(cluster_term_uv(k, a)); }

Series cluster_log(int k, int A) {
    require_order(A);
    Series s(A);
    for (int a = 1; a <= A; ++a) s.set(a, cluster_term(k, a));
    return s;
}

Series log_gf(int k, int m, int n, int A) {
    require_meander(k, m, n);
    require_order(A);
    if (n < m) std::swap(m, n);
    Series s(A);
    for (int a = 1; a <= A; ++a) {
        Poly total;
        for (const auto& parts : compositions(a, 2 * k + 2)) {
            const int j = static_cast<int>(parts.size());
            Poly sum;
            const int lo = std::max(2 * m + 1 - j, 0), hi = std::min(2 * k + 2 - j, 2 * n + 1);
            for (int r = lo; r <= hi; ++r) sum += window_product(parts, r);
            total += sum.scaled(c2(parts));
        }
        s.set(a, sym_reduce(a % 2 == 0 ? total : -total));
    }
    return s;
}

Series log_gf_even_odd(int k, int m, int n, int A) {
    require_meander(k, m, n);
    require_order(A);
    if (n < m) std::swap(m, n);
    Series s(A);
    for (int a = 1; a <= A; ++a) {
        Poly total;
        for (const auto& parts : compositions(a)) {
            const int j = static_cast<int>(parts.size());
            int even_parts = 0, weighted = 0;
            for (int i = 0; i < j; ++i) {
                if (i % 2 == 1) even_parts += parts[i];
                weighted += i * parts[i];
            }
            const int base = weighted - even_parts;  // doubled q-power, always even
            auto geometric = [&](int lo, int hi) {
                Poly g;
                for (int t = lo; t <= hi; ++t) g += Poly::var(Var::QH, 2 * t * a);
                return g;
            };
            const Poly even = geometric(std::max(floor_div(2 * m + 2 - j, 2), 0),
                                        std::min(floor_div(2 * k + 2 - j, 2), n));
            const Poly odd = geometric(std::max(floor_div(2 * m + 1 - j, 2), 0),
                                       std::min(floor_div(2 * k + 1 - j, 2), n));
            Poly term = even.times_monomial(exps({{Var::U, a - even_parts}, {Var::V, even_parts}, {Var::QH, base}})) +
                        odd.times_monomial(exps({{Var::U, even_parts},
                                                 {Var::V, a - even_parts},
                                                 {Var::QH, base + 2 * even_parts}}));
            total += term.scaled(c2(parts));
        }
        s.set(a, sym_reduce(total));
    }
    return s;
}

Series log_gf_reference(int k, int m, int n, int A) {
    require_meander(k, m, n);
    require_order(A);
    if (n < m) std::swap(m, n);
    const Poly num = secular_recursive(m - 1) * scale_shift(secular_recursive(k - n - 1), n + 1);
    return series_log(series_invert(secular_recursive(k), A).times(num));
}

std::pair<int, int> area_bounds(int k, int m, int n, int l) {
    require_meander(k, m, n);
    if (l < std::abs(n - m)) {
        throw Unreachable("no path of length " + std::to_string(l) + " from " + std::to_string(m) + " to " +
                          std::to_string(n));
    }
    const int squares = m * m + n * n;
    const int s = m + n + l;
    const int amax2 = s <= 2 * k ? 2 * (s * s / 4) - squares : 2 * k * (s - k) - squares;
    const int d = m + n - l;
    const int amin2 = l <= m + n ? squares - 2 * (d * d / 4) : squares;
    return {amin2, amax2};
}

std::pair<int, int> q_degree_bounds(int k, int m, int n, int a) {
    require_meander(k, m, n);
    if (a < 0) throw Unreachable("negative excess length");
    if (n < m) std::swap(m, n);
    const int maxpow = a <= 2 * k - 2 * n ? a * n + a * a / 4 : a * k - (k - n) * (k - n);
    const int minpow = a <= 2 * m ? a * m - a * a / 4 : m * m;
    return {2 * minpow, 2 * maxpow};
}

}  // namespace motzkin
