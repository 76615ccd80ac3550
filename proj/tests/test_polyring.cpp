#include <random>

#include "doctest.h"
#include "motzkin/poly_matrix.hpp"
#include "motzkin/polyring.hpp"
#include "motzkin/series.hpp"

using namespace motzkin;

namespace {

const Poly Z = Poly::var(Var::Z);
const Poly ZH = Poly::var(Var::ZH);
const Poly QH = Poly::var(Var::QH);
const Poly U = Poly::var(Var::U);
const Poly V = Poly::var(Var::V);

Poly f1() { return (1 - ZH) * (1 - ZH * QH.pow(2)) - Z.pow(2) * QH.pow(2); }

Poly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> e(0, 2), c(-3, 3), n(0, 4);
    std::vector<Term> terms;
    const int count = n(rng);
    for (int i = 0; i < count; ++i) {
        Term t;
        t.exp[index(Var::Z)] = e(rng);
        t.exp[index(Var::ZH)] = e(rng);
        t.exp[index(Var::QH)] = e(rng);
        t.coeff = Rational(c(rng), 1 + e(rng));
        terms.push_back(t);
    }
    return Poly::from_terms(terms);
}

}  // namespace

TEST_CASE("arithmetic basics") {
    CHECK((1 - ZH) * (1 + ZH) == 1 - ZH.pow(2));
    CHECK((f1() * Poly()).is_zero());
    Poly p = f1();
    CHECK(p.size() == 5);
    CHECK(p.coeff(exps({{Var::ZH, 2}, {Var::QH, 2}})) == 1);
    CHECK(p.coeff(exps({{Var::Z, 2}, {Var::QH, 2}})) == -1);
    CHECK(p.coeff(exps({{Var::ZH, 1}, {Var::QH, 2}})) == -1);
    CHECK(p.constant_term() == 1);
    CHECK((ZH - ZH).is_zero());
    CHECK(Poly(Rational(1, 2)).is_integral() == false);
    CHECK(f1().is_integral());
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("exact division") {
    CHECK(exact_div(1 - QH.pow(4), 1 - QH.pow(2)) == 1 + QH.pow(2));
    CHECK(exact_div(f1(), f1()) == 1);
    Poly q = QH.pow(2);
    Poly num = (1 - q.pow(2)) * (1 - q.pow(2));
    CHECK(exact_div(num, (1 - q).pow(2)) == (1 + QH.pow(2)).pow(2));
    CHECK_THROWS_AS(exact_div(1 + ZH, 1 - ZH), NonZeroRemainder);
    CHECK_THROWS_AS(exact_div(ZH, Poly()), DivisionByZero);
    std::mt19937 rng(11);
    for (int i = 0; i < 30; ++i) {
        Poly a = random_poly(rng), b = random_poly(rng);
        if (b.is_zero()) continue;
        CHECK(exact_div(a * b, b) == a);
    }
}

TEST_CASE("scale shift") {
    CHECK(scale_shift(ZH, 1) == ZH * QH.pow(2));
    CHECK(scale_shift(1 - ZH, 1) == 1 - ZH * QH.pow(2));
    CHECK(scale_shift(f1(), 0) == f1());
    CHECK(scale_shift(Z * ZH, 2) == Z * ZH * QH.pow(8));
    Poly back = scale_shift(scale_shift(f1(), 3), -3);
    CHECK(back.laurent());
    CHECK(back == f1());
}

TEST_CASE("series inversion and logarithm") {
    Series inv = series_invert(1 - ZH, 3);
    CHECK(inv.to_poly() == 1 + ZH + ZH.pow(2) + ZH.pow(3));
    Series lg = series_log(inv);
    CHECK(lg.to_poly() == ZH + ZH.pow(2).scaled(Rational(1, 2)) + ZH.pow(3).scaled(Rational(1, 3)));
    for (int L : {0, 3, 8}) {
        Series t = series_invert(f1(), L);
        Series one = t * Series::from_poly(f1(), L);
        CHECK(one.to_poly() == 1);
        Series back = series_exp(series_log(t));
        CHECK(back == t);
        for (int d = 0; d <= L; ++d) CHECK(t[d].is_step_homogeneous(d));
    }
    CHECK_THROWS_AS(series_invert(2 - ZH, 3), NonUnitConstantTerm);
    CHECK_THROWS_AS(series_log(Series::from_poly(Poly(3), 2)), NonUnitConstantTerm);
}

TEST_CASE("q-binomials") {
    CHECK(q_binomial(5, 0) == 1);
    CHECK(q_binomial(2, 1) == 1 + QH.pow(2));
    CHECK(q_binomial(4, 2) == 1 + QH.pow(2) + 2 * QH.pow(4) + QH.pow(6) + QH.pow(8));
    CHECK_THROWS_AS(q_binomial(2, 3), IndexOutOfRange);
    const Poly q = QH.pow(2);
    for (int a = 0; a <= 7; ++a) {
        Integer binom = 1;
        for (int b = 0; b <= a; ++b) {
            Poly g = q_binomial(a, b);
            CHECK(g == q_binomial(a, a - b));
            CHECK(g.is_counting());
            CHECK(eval_rational(g, {{Var::QH, 1}}) == Rational(binom));
            // product form, divided exactly
            Poly num(1), den(1);
            for (int j = 1; j <= b; ++j) {
                num *= 1 - q.pow(a - b + j);
                den *= 1 - q.pow(j);
            }
            CHECK(exact_div(num, den) == g);
            binom = binom * (a - b) / (b + 1);
        }
    }
}

TEST_CASE("symmetric reduction") {
    CHECK(sym_reduce(U + V) == ZH);
    CHECK(sym_reduce(U * V) == Z.pow(2));
    CHECK(sym_reduce(U.pow(2) + V.pow(2)) == ZH.pow(2) - 2 * Z.pow(2));
    CHECK_THROWS_AS(sym_reduce(U + 2 * V), NotSymmetric);
    std::vector<Poly> inputs = {
        (U + V).pow(3) * QH.pow(2),
        U.pow(4) * V + U * V.pow(4) - 3 * U.pow(2) * V.pow(2),
        (1 - U * QH) * (1 - V * QH),
    };
    for (const auto& p : inputs) CHECK(sym_expand(sym_reduce(p)) == p);
}

TEST_CASE("rational evaluation") {
    CHECK(eval_rational(1 - ZH, {{Var::ZH, Rational(1, 3)}}) == Rational(2, 3));
    CHECK(eval_rational(f1(), {{Var::Z, 0}, {Var::ZH, 0}, {Var::QH, 5}}) == 1);
    const Rational z(1, 5), zh(1, 7), qh(1, 2);
    // direct 2x2 determinant with numeric entries
    const Rational a = 1 - zh, b = -z * qh, d = 1 - zh * qh * qh;
    CHECK(eval_rational(f1(), {{Var::Z, z}, {Var::ZH, zh}, {Var::QH, qh}}) == a * d - b * b);
    CHECK_THROWS_AS(eval_rational(ZH, {}), MissingAssignment);
    CHECK_THROWS_AS(eval_rational(scale_shift(ZH, -1), {{Var::ZH, 1}, {Var::QH, 0}}), DivisionByZero);
}

TEST_CASE("determinants") {
    CHECK(det(PolyMatrix::identity(4)) == 1);
    PolyMatrix m(2);
    m(0, 0) = 1 - ZH;
    m(0, 1) = -Z * QH;
    m(1, 0) = -Z * QH;
    m(1, 1) = 1 - ZH * QH.pow(2);
    CHECK(det(m) == f1());
    PolyMatrix zero_row(3);
    zero_row(0, 0) = ZH;
    zero_row(2, 1) = Z;
    CHECK(det(zero_row).is_zero());
    // Laplace and Bareiss agree on a dense random matrix
    std::mt19937 rng(3);
    for (std::size_t n : {1u, 2u, 4u, 6u}) {
        PolyMatrix r(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) r(i, j) = random_poly(rng);
        CHECK(det_laplace(r) == det_bareiss(r));
    }
}
