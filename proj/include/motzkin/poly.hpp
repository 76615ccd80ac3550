#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace motzkin {

using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms (mpq_class does not reduce on construction).
inline Rational ratio(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// The fixed, global variable set. Exponent vectors are always indexed in
/// this order.
///
///   Z   weight of an up- or down-step
///   ZH  weight of a horizontal step
///   QH  half-area variable, QH^2 = q; the exponent is twice the area
///   U,V two-step weights (U = z*omega, V = z/omega, so U+V = ZH, U*V = Z^2)
///   TD, CD, TU, CU  touch-down, creep-down, touch-up, creep-up markers
///   Z1, Z2  auxiliary slots for the single-step amplitudes of the two-step
///           Dyck process (not part of the serialized variable set)
enum class Var : std::uint8_t { Z, ZH, QH, U, V, TD, CD, TU, CU, Z1, Z2 };

inline constexpr std::size_t kNumVars = 11;
inline constexpr std::size_t kNumPublicVars = 9;

constexpr std::size_t index(Var v) { return static_cast<std::size_t>(v); }

/// Short lower-case name used in JSON documents and diagnostics.
std::string_view var_name(Var v);

inline constexpr std::array<Var, kNumVars> kAllVars = {
    Var::Z, Var::ZH, Var::QH, Var::U, Var::V, Var::TD,
    Var::CD, Var::TU, Var::CU, Var::Z1, Var::Z2};

using Exponents = std::array<std::int32_t, kNumVars>;

/// Total degree, then lexicographic on the exponent vector. This is a
/// group order on Z^n, so it is compatible with multiplication.
bool grlex_less(const Exponents& a, const Exponents& b);

/// Combined (Z, ZH) degree: the path length carried by a monomial.
inline int step_degree(const Exponents& e) { return e[index(Var::Z)] + e[index(Var::ZH)]; }

std::string monomial_string(const Exponents& e);

struct Term {
    Exponents exp{};
    Rational coeff;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted in ascending grlex order with no zero coefficients,
/// so equal polynomials have identical term vectors. Negative exponents are
/// only permitted on QH, and only for a polynomial in Laurent mode.
class Poly {
public:
    Poly() = default;
    Poly(long c);  // NOLINT(google-explicit-constructor): constants read naturally
    Poly(const Rational& c);  // NOLINT(google-explicit-constructor)

    static Poly var(Var v, int power = 1);
    static Poly monomial(const Exponents& e, const Rational& c = 1, bool laurent = false);
    /// Canonicalizes: merges equal monomials, drops zeros, sorts.
    static Poly from_terms(std::vector<Term> terms, bool laurent = false);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    std::span<const Term> terms() const { return terms_; }
    const Term& leading_term() const { return terms_.back(); }

    bool laurent() const { return laurent_; }
    Poly as_laurent() const;

    /// True iff every coefficient has denominator 1.
    bool is_integral() const;
    /// True iff all coefficients are non-negative integers.
    bool is_counting() const;
    Rational coeff(const Exponents& e) const;
    Rational constant_term() const;
    bool involves(Var v) const;
    int max_degree(Var v) const;
    int min_degree(Var v) const;
    /// Every term has step degree d.
    bool is_step_homogeneous(int d) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    Poly pow(unsigned e) const;
    Poly scaled(const Rational& c) const;
    /// Multiplies every term by the given monomial.
    Poly times_monomial(const Exponents& e) const;

    friend bool operator==(const Poly& a, const Poly& b);

    std::string to_string() const;

private:
    std::vector<Term> terms_;
    bool laurent_ = false;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Builds an exponent vector from (variable, power) pairs.
Exponents exps(std::initializer_list<std::pair<Var, int>> powers);

}  // namespace motzkin
