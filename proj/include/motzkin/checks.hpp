#pragma once

#include <string>
#include <vector>

#include "motzkin/poly.hpp"
#include "motzkin/series.hpp"

namespace motzkin {

/// Outcome of one named identity check.
struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

using Report = std::vector<Check>;

/// Empty string when equal, otherwise a description of the first monomial
/// (in grlex order) whose coefficients differ.
std::string first_difference(const Poly& a, const Poly& b);
std::string first_difference(const Series& a, const Series& b);

Check check_equal(std::string name, const Poly& a, const Poly& b);
Check check_equal(std::string name, const Series& a, const Series& b);
Check check_true(std::string name, bool ok, std::string detail = {});

bool all_passed(const Report& r);
void append(Report& into, const Report& from);

}  // namespace motzkin
