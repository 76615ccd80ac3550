#include "motzkin/series.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "motzkin/polyring.hpp"

namespace motzkin {

Series::Series(int order) {
    if (order < 0) throw std::invalid_argument("Series: negative order");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Series Series::from_poly(const Poly& p, int order) {
    Series s(order);
    std::map<int, std::vector<Term>> buckets;
    for (const auto& t : p.terms()) {
        const int d = step_degree(t.exp);
        if (d > order) continue;
        if (d < 0) throw std::domain_error("Series: negative step degree");
        buckets[d].push_back(t);
    }
    for (auto& [d, terms] : buckets) s.coeffs_[d] = Poly::from_terms(std::move(terms), p.laurent());
    return s;
}

void Series::set(int d, Poly p) { coeffs_.at(d) = std::move(p); }

void Series::add_to(int d, const Poly& p) { coeffs_.at(d) += p; }

Series Series::truncated(int order) const {
    Series s(order);
    for (int d = 0; d <= std::min(order, this->order()); ++d) s.coeffs_[d] = coeffs_[d];
    return s;
}

Poly Series::to_poly() const {
    Poly p;
    for (const auto& c : coeffs_) p += c;
    return p;
}

Series& Series::operator+=(const Series& o) {
    if (o.order() < order()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] += o.coeffs_[d];
    return *this;
}

Series& Series::operator-=(const Series& o) {
    if (o.order() < order()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] -= o.coeffs_[d];
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    const int order = std::min(a.order(), b.order());
    Series out(order);
    for (int i = 0; i <= order; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

Series Series::times(const Poly& p) const { return *this * from_poly(p, order()); }

Series Series::scaled(const Rational& c) const {
    Series s = *this;
    for (auto& x : s.coeffs_) x = x.scaled(c);
    return s;
}

Series Series::shifted(int n) const {
    Series s = *this;
    for (auto& x : s.coeffs_) x = scale_shift(x, n);
    return s;
}

bool operator==(const Series& a, const Series& b) {
    return a.order() == b.order() && a.coeffs_ == b.coeffs_;
}

namespace {

void require_unit_constant(const Poly& p, const char* what) {
    if (!(p == Poly(1))) {
        throw NonUnitConstantTerm(std::string(what) + ": degree-0 coefficient is " + p.to_string() +
                                  ", expected 1");
    }
}

}  // namespace

Series series_invert(const Series& s) {
    require_unit_constant(s[0], "series_invert");
    const int order = s.order();
    Series t(order);
    t.set(0, Poly(1));
    for (int d = 1; d <= order; ++d) {
        Poly acc;
        for (int i = 1; i <= d; ++i) {
            if (s[i].is_zero() || t[d - i].is_zero()) continue;
            acc += s[i] * t[d - i];
        }
        t.set(d, -acc);
    }
    return t;
}

Series series_invert(const Poly& p, int order) { return series_invert(Series::from_poly(p, order)); }

Series series_log(const Series& s) {
    require_unit_constant(s[0], "series_log");
    // d s_d = sum_{i=1}^{d} i u_i s_{d-i}
    const int order = s.order();
    Series u(order);
    for (int d = 1; d <= order; ++d) {
        Poly acc;
        for (int i = 1; i < d; ++i) {
            if (u[i].is_zero() || s[d - i].is_zero()) continue;
            acc += (u[i] * s[d - i]).scaled(i);
        }
        u.set(d, s[d] - acc.scaled(Rational(1, d)));
    }
    return u;
}

Series series_exp(const Series& u) {
    if (!u[0].is_zero()) throw NonUnitConstantTerm("series_exp: degree-0 coefficient must vanish");
    const int order = u.order();
    Series s(order);
    s.set(0, Poly(1));
    for (int d = 1; d <= order; ++d) {
        Poly acc;
        for (int i = 1; i <= d; ++i) {
            if (u[i].is_zero() || s[d - i].is_zero()) continue;
            acc += (u[i] * s[d - i]).scaled(i);
        }
        s.set(d, acc.scaled(Rational(1, d)));
    }
    return s;
}

}  // namespace motzkin
