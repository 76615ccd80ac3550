#include "motzkin/polyring.hpp"

#include <algorithm>
#include <vector>

namespace motzkin {

Poly exact_div(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DivisionByZero("exact_div: zero divisor");
    const bool laurent = num.laurent() || den.laurent();
    if (num.is_zero()) return laurent ? Poly().as_laurent() : Poly();

    // Any exact quotient has per-variable degrees inside this box.
    Exponents lo{}, hi{};
    for (auto v : kAllVars) {
        lo[index(v)] = num.min_degree(v) - den.min_degree(v);
        hi[index(v)] = num.max_degree(v) - den.max_degree(v);
    }

    const Poly divisor = laurent ? den.as_laurent() : den;
    const Term& lead = divisor.leading_term();
    std::vector<Term> quotient;
    Poly rem = num;
    while (!rem.is_zero()) {
        const Term& top = rem.leading_term();
        Exponents e;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            e[i] = top.exp[i] - lead.exp[i];
            const bool sign_ok = e[i] >= 0 || (laurent && i == index(Var::QH));
            if (!sign_ok || e[i] < lo[i] || e[i] > hi[i]) {
                throw NonZeroRemainder("exact_div: " + den.to_string() + " does not divide " +
                                       num.to_string());
            }
        }
        Rational c = top.coeff / lead.coeff;
        Poly step = divisor.times_monomial(e).scaled(c);
        quotient.push_back({e, std::move(c)});
        rem -= step;
    }
    return Poly::from_terms(std::move(quotient), laurent);
}

Poly scale_shift(const Poly& p, int n) {
    if (n == 0) return p;
    std::vector<Term> terms(p.terms().begin(), p.terms().end());
    for (auto& t : terms) t.exp[index(Var::QH)] += 2 * n * step_degree(t.exp);
    return Poly::from_terms(std::move(terms), p.laurent() || n < 0);
}

Poly substitute(const Poly& p, Var v, const Poly& value) {
    const std::size_t vi = index(v);
    std::vector<Poly> powers{Poly(1)};
    Poly out = p.laurent() ? Poly().as_laurent() : Poly();
    // Group terms by their power of v so each power is computed once.
    std::map<int, std::vector<Term>> by_power;
    for (const auto& t : p.terms()) {
        if (t.exp[vi] < 0) throw std::domain_error("substitute: negative power of " + std::string(var_name(v)));
        Term stripped = t;
        stripped.exp[vi] = 0;
        by_power[t.exp[vi]].push_back(std::move(stripped));
    }
    for (auto& [power, terms] : by_power) {
        while (static_cast<int>(powers.size()) <= power) powers.push_back(powers.back() * value);
        out += Poly::from_terms(std::move(terms), p.laurent()) * powers[power];
    }
    return out;
}

Poly dual_transform(const Poly& p, int k, bool swap_markers) {
    std::vector<Term> terms(p.terms().begin(), p.terms().end());
    for (auto& t : terms) {
        auto& e = t.exp;
        e[index(Var::QH)] = 2 * k * step_degree(e) - e[index(Var::QH)];
        if (swap_markers) {
            std::swap(e[index(Var::TD)], e[index(Var::TU)]);
            std::swap(e[index(Var::CD)], e[index(Var::CU)]);
        }
    }
    return Poly::from_terms(std::move(terms), true);
}

Poly gaussian_binomial(int a, int b, int qh_step) {
    if (a < 0 || b < 0 || b > a) {
        throw IndexOutOfRange("q_binomial(" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
    // Row-by-row q-Pascal: [n, j] = [n-1, j-1] + q^j [n-1, j].
    std::vector<Poly> row{Poly(1)};
    for (int n = 1; n <= a; ++n) {
        std::vector<Poly> next(std::min(n, b) + 1);
        for (int j = 0; j < static_cast<int>(next.size()); ++j) {
            Poly v;
            if (j >= 1) v += row[j - 1];
            if (j < static_cast<int>(row.size())) v += row[j] * Poly::var(Var::QH, qh_step * j);
            next[j] = std::move(v);
        }
        row = std::move(next);
    }
    return row[b];
}

Poly q_binomial(int a, int b) { return gaussian_binomial(a, b, 2); }

Poly sym_reduce(const Poly& p) {
    const std::size_t ui = index(Var::U), vi = index(Var::V);
    for (const auto& t : p.terms()) {
        Exponents mirror = t.exp;
        std::swap(mirror[ui], mirror[vi]);
        if (p.coeff(mirror) != t.coeff) {
            throw NotSymmetric("sym_reduce: term " + monomial_string(t.exp) +
                               " has no matching mirror term");
        }
        if (t.exp[index(Var::Z)] != 0 || t.exp[index(Var::ZH)] != 0) {
            throw NotSymmetric("sym_reduce: input already contains z or zh");
        }
    }
    // Power sums p_r = U^r + V^r in the elementary basis:
    // p_0 = 2, p_1 = e1, p_r = e1 p_{r-1} - e2 p_{r-2}.
    const Poly e1 = Poly::var(Var::ZH);
    const Poly e2 = Poly::var(Var::Z, 2);
    std::vector<Poly> power_sum{Poly(2), e1};
    auto power_sum_at = [&](int r) -> const Poly& {
        while (static_cast<int>(power_sum.size()) <= r) {
            const std::size_t n = power_sum.size();
            power_sum.push_back(e1 * power_sum[n - 1] - e2 * power_sum[n - 2]);
        }
        return power_sum[r];
    };

    Poly out = p.laurent() ? Poly().as_laurent() : Poly();
    for (const auto& t : p.terms()) {
        const int i = t.exp[ui], j = t.exp[vi];
        if (i < j) continue;  // covered by its mirror
        Exponents rest = t.exp;
        rest[ui] = 0;
        rest[vi] = 0;
        rest[index(Var::Z)] = 2 * j;
        // m_{i,j} = U^i V^j + U^j V^i = e2^j p_{i-j}; m_{i,i} = e2^i.
        Poly basis = i == j ? Poly(1) : power_sum_at(i - j);
        out += basis.times_monomial(rest).scaled(t.coeff);
    }
    return out;
}

Poly sym_expand(const Poly& p) {
    const Poly uv = Poly::var(Var::U) * Poly::var(Var::V);
    const Poly upv = Poly::var(Var::U) + Poly::var(Var::V);
    // Z^2 -> UV: halve the Z exponent, then substitute Z -> UV.
    std::vector<Term> halved;
    for (auto t : p.terms()) {
        if (t.exp[index(Var::Z)] % 2 != 0) {
            throw std::domain_error("sym_expand: odd power of z has no U,V preimage");
        }
        t.exp[index(Var::Z)] /= 2;
        halved.push_back(std::move(t));
    }
    Poly h = Poly::from_terms(std::move(halved), p.laurent());
    return substitute(substitute(h, Var::Z, uv), Var::ZH, upv);
}

Rational eval_rational(const Poly& p, const Assignment& at) {
    Rational total = 0;
    for (const auto& t : p.terms()) {
        Rational value = t.coeff;
        for (auto v : kAllVars) {
            const int e = t.exp[index(v)];
            if (e == 0) continue;
            auto it = at.find(v);
            if (it == at.end()) {
                throw MissingAssignment("eval_rational: no value for " + std::string(var_name(v)));
            }
            if (e < 0 && sgn(it->second) == 0) {
                throw DivisionByZero("eval_rational: negative power of zero-valued " +
                                     std::string(var_name(v)));
            }
            Rational base = e < 0 ? Rational(1 / it->second) : it->second;
            Rational acc = 1;
            for (int n = 0; n < std::abs(e); ++n) acc *= base;
            value *= acc;
        }
        total += value;
    }
    return total;
}

}  // namespace motzkin
