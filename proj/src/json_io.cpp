#include "motzkin/json_io.hpp"

#include <algorithm>

#include "motzkin/errors.hpp"

namespace motzkin {

const std::array<std::string, kNumPublicVars>& json_variable_names() {
    static const std::array<std::string, kNumPublicVars> names = {"z", "zh", "qh", "u", "v", "t", "s", "tc", "sc"};
    return names;
}

Rational parse_rational(const std::string& text) {
    const bool ok = !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
        return (c >= '0' && c <= '9') || c == '/' || c == '-' || c == '+';
    });
    Rational r;
    if (!ok || r.set_str(text, 10) != 0 || r.get_den() == 0) {
        throw IndexOutOfRange("not a rational number: '" + text + "'");
    }
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }

Json poly_to_json(const Poly& p) {
    Json doc;
    doc["variables"] = json_variable_names();
    Json terms = Json::array();
    for (const Term& t : p.terms()) {
        for (std::size_t i = kNumPublicVars; i < kNumVars; ++i) {
            if (t.exp[i] != 0) throw IndexOutOfRange("auxiliary variables have no JSON form");
        }
        Json term;
        term["coeff"] = format_rational(t.coeff);
        term["exp"] = std::vector<int>(t.exp.begin(), t.exp.begin() + kNumPublicVars);
        term["q"] = std::to_string(t.exp[index(Var::QH)]) + "/2";
        terms.push_back(std::move(term));
    }
    doc["terms"] = std::move(terms);
    return doc;
}

Poly poly_from_json(const Json& doc) {
    try {
        const auto names = doc.at("variables").get<std::vector<std::string>>();
        if (!std::equal(names.begin(), names.end(), json_variable_names().begin(), json_variable_names().end())) {
            throw IndexOutOfRange("unexpected variable list");
        }
        std::vector<Term> terms;
        bool laurent = false;
        for (const auto& t : doc.at("terms")) {
            const auto e = t.at("exp").get<std::vector<int>>();
            if (e.size() != kNumPublicVars) throw IndexOutOfRange("exponent vector of wrong length");
            Term term;
            std::copy(e.begin(), e.end(), term.exp.begin());
            term.coeff = parse_rational(t.at("coeff").get<std::string>());
            laurent = laurent || term.exp[index(Var::QH)] < 0;
            terms.push_back(std::move(term));
        }
        return Poly::from_terms(std::move(terms), laurent);
    } catch (const Json::exception& e) {
        throw IndexOutOfRange(std::string("malformed polynomial document: ") + e.what());
    }
}

Json series_to_json(const Series& s) {
    Json doc;
    doc["order"] = s.order();
    Json coeffs = Json::array();
    for (int d = 0; d <= s.order(); ++d) coeffs.push_back(poly_to_json(s[d]));
    doc["coefficients"] = std::move(coeffs);
    return doc;
}

Series series_from_json(const Json& doc) {
    try {
        Series s(doc.at("order").get<int>());
        const auto& coeffs = doc.at("coefficients");
        if (static_cast<int>(coeffs.size()) != s.order() + 1) throw IndexOutOfRange("series length mismatch");
        for (int d = 0; d <= s.order(); ++d) s.set(d, poly_from_json(coeffs[d]));
        return s;
    } catch (const Json::exception& e) {
        throw IndexOutOfRange(std::string("malformed series document: ") + e.what());
    }
}

}  // namespace motzkin
