#include "motzkin/poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace motzkin {

namespace {

constexpr std::array<std::string_view, kNumVars> kNames = {
    "z", "zh", "qh", "u", "v", "t", "s", "tc", "sc", "z1", "z2"};

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

struct ExponentsHash {
    std::size_t operator()(const Exponents& e) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto x : e) {
            h ^= static_cast<std::uint32_t>(x);
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

void check_exponents(const Exponents& e, bool laurent) {
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (e[i] >= 0) continue;
        if (i == index(Var::QH) && laurent) continue;
        throw std::domain_error("negative exponent on " + std::string(kNames[i]) +
                                (i == index(Var::QH) ? " outside Laurent mode" : ""));
    }
}

bool term_less(const Term& a, const Term& b) { return grlex_less(a.exp, b.exp); }

}  // namespace

std::string_view var_name(Var v) { return kNames[index(v)]; }

bool grlex_less(const Exponents& a, const Exponents& b) {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

std::string monomial_string(const Exponents& e) {
    std::string out;
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += kNames[i];
        if (e[i] != 1) out += '^' + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

Exponents exps(std::initializer_list<std::pair<Var, int>> powers) {
    Exponents e{};
    for (auto [v, p] : powers) e[index(v)] += p;
    return e;
}

Poly::Poly(long c) : Poly(Rational(c)) {}

Poly::Poly(const Rational& c) {
    if (sgn(c) != 0) {
        terms_.push_back({Exponents{}, c});
        terms_.back().coeff.canonicalize();
    }
}

Poly Poly::var(Var v, int power) {
    Exponents e{};
    e[index(v)] = power;
    return monomial(e, 1, power < 0);
}

Poly Poly::monomial(const Exponents& e, const Rational& c, bool laurent) {
    check_exponents(e, laurent);
    Poly p;
    p.laurent_ = laurent;
    if (sgn(c) != 0) {
        p.terms_.push_back({e, c});
        p.terms_.back().coeff.canonicalize();
    }
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms, bool laurent) {
    for (auto& t : terms) {
        check_exponents(t.exp, laurent);
        t.coeff.canonicalize();
    }
    std::sort(terms.begin(), terms.end(), term_less);
    Poly p;
    p.laurent_ = laurent;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
    return p;
}

Poly Poly::as_laurent() const {
    Poly p = *this;
    p.laurent_ = true;
    return p;
}

bool Poly::is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.coeff.get_den() == 1; });
}

bool Poly::is_counting() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) {
        return t.coeff.get_den() == 1 && sgn(t.coeff) > 0;
    });
}

Rational Poly::coeff(const Exponents& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponents& x) { return grlex_less(t.exp, x); });
    if (it != terms_.end() && it->exp == e) return it->coeff;
    return 0;
}

Rational Poly::constant_term() const { return coeff(Exponents{}); }

bool Poly::involves(Var v) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [v](const Term& t) { return t.exp[index(v)] != 0; });
}

int Poly::max_degree(Var v) const {
    if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
    int d = terms_.front().exp[index(v)];
    for (const auto& t : terms_) d = std::max(d, t.exp[index(v)]);
    return d;
}

int Poly::min_degree(Var v) const {
    if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
    int d = terms_.front().exp[index(v)];
    for (const auto& t : terms_) d = std::min(d, t.exp[index(v)]);
    return d;
}

bool Poly::is_step_homogeneous(int d) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const Term& t) { return step_degree(t.exp) == d; });
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.terms_.empty()) {
        laurent_ = laurent_ || o.laurent_;
        return *this;
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && grlex_less(a->exp, b->exp))) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || grlex_less(b->exp, a->exp)) {
            merged.push_back(*b++);
        } else {
            Rational c = a->coeff + b->coeff;
            if (sgn(c) != 0) merged.push_back({a->exp, std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    laurent_ = laurent_ || o.laurent_;
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    out.laurent_ = a.laurent_ || b.laurent_;
    if (a.terms_.empty() || b.terms_.empty()) return out;
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
        // Monomial times polynomial preserves order and needs no merging.
        const Poly& mono = a.terms_.size() == 1 ? a : b;
        const Poly& other = a.terms_.size() == 1 ? b : a;
        out.terms_ = other.terms_;
        for (auto& t : out.terms_) {
            for (std::size_t i = 0; i < kNumVars; ++i) t.exp[i] += mono.terms_[0].exp[i];
            t.coeff *= mono.terms_[0].coeff;
        }
        return out;
    }
    std::unordered_map<Exponents, Rational, ExponentsHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    Rational prod;
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            Exponents e;
            for (std::size_t i = 0; i < kNumVars; ++i) e[i] = x.exp[i] + y.exp[i];
            mpq_mul(prod.get_mpq_t(), x.coeff.get_mpq_t(), y.coeff.get_mpq_t());
            auto [it, inserted] = acc.try_emplace(e, prod);
            if (!inserted) it->second += prod;
        }
    }
    out.terms_.reserve(acc.size());
    for (auto& [e, c] : acc) {
        if (sgn(c) != 0) out.terms_.push_back({e, std::move(c)});
    }
    std::sort(out.terms_.begin(), out.terms_.end(), term_less);
    return out;
}

Poly Poly::pow(unsigned e) const {
    Poly result(1);
    result.laurent_ = laurent_;
    Poly base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

Poly Poly::scaled(const Rational& c) const {
    if (sgn(c) == 0) {
        Poly z;
        z.laurent_ = laurent_;
        return z;
    }
    Poly p = *this;
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
}

Poly Poly::times_monomial(const Exponents& e) const {
    Poly p = *this;
    for (auto& t : p.terms_) {
        for (std::size_t i = 0; i < kNumVars; ++i) t.exp[i] += e[i];
        check_exponents(t.exp, laurent_);
    }
    return p;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->coeff;
        const bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        const bool unit_monomial = it->exp == Exponents{};
        if (c != 1 || unit_monomial) {
            os << c.get_str();
            if (!unit_monomial) os << '*';
        }
        if (!unit_monomial) os << monomial_string(it->exp);
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace motzkin
