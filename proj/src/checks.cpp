#include "motzkin/checks.hpp"

#include <algorithm>
#include <utility>

namespace motzkin {

std::string first_difference(const Poly& a, const Poly& b) {
    auto ta = a.terms();
    auto tb = b.terms();
    std::size_t i = 0, j = 0;
    while (i < ta.size() || j < tb.size()) {
        const Exponents* e;
        if (j == tb.size() || (i < ta.size() && grlex_less(ta[i].exp, tb[j].exp))) {
            e = &ta[i].exp;
        } else {
            e = &tb[j].exp;
        }
        const Rational ca = a.coeff(*e), cb = b.coeff(*e);
        if (ca != cb) {
            return "monomial " + monomial_string(*e) + ": " + ca.get_str() + " vs " + cb.get_str();
        }
        if (i < ta.size() && ta[i].exp == *e) ++i;
        if (j < tb.size() && tb[j].exp == *e) ++j;
    }
    return {};
}

std::string first_difference(const Series& a, const Series& b) {
    const int order = std::max(a.order(), b.order());
    for (int d = 0; d <= order; ++d) {
        const Poly pa = d <= a.order() ? a[d] : Poly();
        const Poly pb = d <= b.order() ? b[d] : Poly();
        std::string diff = first_difference(pa, pb);
        if (!diff.empty()) return "degree " + std::to_string(d) + ", " + diff;
    }
    return {};
}

Check check_equal(std::string name, const Poly& a, const Poly& b) {
    std::string diff = first_difference(a, b);
    return {std::move(name), diff.empty(), std::move(diff)};
}

Check check_equal(std::string name, const Series& a, const Series& b) {
    std::string diff = first_difference(a, b);
    return {std::move(name), diff.empty(), std::move(diff)};
}

Check check_true(std::string name, bool ok, std::string detail) {
    return {std::move(name), ok, std::move(detail)};
}

bool all_passed(const Report& r) {
    return std::all_of(r.begin(), r.end(), [](const Check& c) { return c.passed; });
}

void append(Report& into, const Report& from) { into.insert(into.end(), from.begin(), from.end()); }

}  // namespace motzkin
