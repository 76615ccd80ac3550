#pragma once

#include <vector>

#include "motzkin/errors.hpp"
#include "motzkin/poly.hpp"

namespace motzkin {

/// Formal power series graded by step degree (combined Z, ZH degree, i.e.
/// path length), truncated after degree `order()`. The degree-d coefficient
/// is homogeneous of step degree d.
class Series {
public:
    explicit Series(int order = 0);

    /// Splits a polynomial by step degree, dropping everything above `order`.
    static Series from_poly(const Poly& p, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Poly& operator[](int d) const { return coeffs_.at(d); }
    void set(int d, Poly p);
    void add_to(int d, const Poly& p);

    Series truncated(int order) const;
    /// Sum of all coefficients as one polynomial.
    Poly to_poly() const;

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    /// Truncated Cauchy product; the result has the smaller of the two orders.
    friend Series operator*(const Series& a, const Series& b);
    /// Product with a polynomial, truncated at this series' order.
    Series times(const Poly& p) const;
    Series scaled(const Rational& c) const;
    /// Applies scale_shift to every coefficient.
    Series shifted(int n) const;

    friend bool operator==(const Series& a, const Series& b);

private:
    std::vector<Poly> coeffs_;
};

/// t with p * t == 1 through degree L. The step-degree-0 part of p must be 1.
Series series_invert(const Poly& p, int order);
Series series_invert(const Series& s);

/// u with exp(u) == s through the order of s. Requires s[0] == 1.
Series series_log(const Series& s);

/// exp(u). Requires u[0] == 0.
Series series_exp(const Series& u);

}  // namespace motzkin
