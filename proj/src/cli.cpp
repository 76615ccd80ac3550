#include "motzkin/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "motzkin/cluster.hpp"
#include "motzkin/core.hpp"
#include "motzkin/enumeration.hpp"
#include "motzkin/errors.hpp"
#include "motzkin/polyring.hpp"

namespace motzkin {

namespace {

constexpr std::pair<const char*, Route> kRoutes[] = {
    {"recursive", Route::recursive}, {"det", Route::det}, {"closed", Route::closed}, {"dual", Route::dual}};

int parse_ceiling(const std::string& text) {
    if (text == "inf") return kInfinite;
    std::size_t used = 0;
    int k = 0;
    try {
        k = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || k < 0) throw IndexOutOfRange("k must be a non-negative integer or inf");
    return k;
}

Json check_to_json(const Check& c) {
    Json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["detail"] = c.detail;
    return j;
}

Json report_to_json(const Report& r) {
    Json checks = Json::array();
    for (const auto& c : r) checks.push_back(check_to_json(c));
    return checks;
}

// Adds the report to doc and returns the exit code it implies.
int attach_report(Json& doc, const Report& r) {
    doc["checks"] = report_to_json(r);
    doc["passed"] = all_passed(r);
    return report_exit_code(r);
}

Json weights_to_json(const MarkerWeights& w) {
    Json j;
    auto put = [&](const char* key, const Poly& p, Var v) {
        if (p == Poly::var(v)) {
            j[key] = "symbolic";
        } else if (p.is_zero() || (p.size() == 1 && p.terms()[0].exp == Exponents{})) {
            j[key] = format_rational(p.constant_term());
        } else {
            j[key] = poly_to_json(p);
        }
    };
    put("t", w.td, Var::TD);
    put("s", w.cd, Var::CD);
    put("T", w.tu, Var::TU);
    put("S", w.cu, Var::CU);
    return j;
}

Json gf_to_json(const GFResult& g) {
    Json j;
    j["z_power"] = g.z_power;
    j["qh_power"] = g.qh_power;
    j["prefactor"] = poly_to_json(g.prefactor());
    j["numerator"] = poly_to_json(g.numerator);
    j["denominator"] = poly_to_json(g.denominator);
    j["series"] = series_to_json(g.series);
    return j;
}

int run_secular(const JobSpec& job, int k, Json& doc) {
    doc["route"] = job.route;
    Json routes;
    Report r;
    Poly reference;
    bool first = true;
    for (const auto& [name, route] : kRoutes) {
        if (job.route != "all" && job.route != name) continue;
        const Poly p = secular(k, route);
        routes[name] = poly_to_json(p);
        if (first) {
            reference = p;
            first = false;
        } else {
            r.push_back(check_equal(std::string("route ") + name, p, reference));
        }
    }
    if (first) throw IndexOutOfRange("unknown route '" + job.route + "'");
    doc["polynomial"] = poly_to_json(reference);
    doc["routes"] = std::move(routes);
    if (job.laurent) doc["dual"] = poly_to_json(dual_transform(reference.as_laurent(), k));
    if (job.check) r.push_back(check_true("duality", duality_check(k)));
    return attach_report(doc, r);
}

int run_gf(const JobSpec& job, const MeanderQuery& q, Json& doc) {
    const GFResult g = gf_meander(q);
    doc["gf"] = gf_to_json(g);
    Report r;
    if (job.check) {
        r.push_back(check_equal("propagator expansion", g.series, gf_series_oracle({g.k_eff, q.m, q.n, q.L})));
        r.push_back(check_equal("path enumeration", g.series, enumerate(g.k_eff, q.m, q.n, q.L)));
    }
    return attach_report(doc, r);
}

int run_marked(const JobSpec& job, const MeanderQuery& q, Json& doc) {
    const MarkerWeights w = parse_weights(job.weights);
    const GFResult g = marked_gf(q, w);
    doc["weights"] = weights_to_json(w);
    doc["gf"] = gf_to_json(g);
    if (job.laurent) doc["dual"] = poly_to_json(dual_transform(g.denominator.as_laurent(), g.k_eff, true));
    Report r;
    if (job.check) {
        const MeanderQuery resolved{g.k_eff, q.m, q.n, q.L};
        r.push_back(check_equal("propagator expansion", g.series, marked_series_oracle(resolved, w)));
        r.push_back(check_equal("path enumeration", g.series, enumerate_marked(g.k_eff, q.m, q.n, q.L, w)));
    }
    return attach_report(doc, r);
}

int run_cluster(const JobSpec& job, int k, Json& doc) {
    if (job.A < 1) throw IndexOutOfRange("A must be >= 1");
    Json terms = Json::array();
    for (int a = 1; a <= job.A; ++a) terms.push_back(poly_to_json(cluster_term(k, a)));
    doc["A"] = job.A;
    doc["cluster_terms"] = std::move(terms);
    const Series l = log_gf(k, job.m, job.n, job.A);
    doc["log_gf"] = series_to_json(l);
    Report r;
    if (job.check) {
        r.push_back(check_equal("exp of cluster sum", series_exp(cluster_log(k, job.A)),
                                Series::from_poly(secular_recursive(k), job.A)));
        r.push_back(check_equal("log reference", l, log_gf_reference(k, job.m, job.n, job.A)));
        r.push_back(check_equal("even/odd split", l, log_gf_even_odd(k, job.m, job.n, job.A)));
    }
    return attach_report(doc, r);
}

int run_enumerate(const JobSpec& job, int k, Json& doc) {
    Series s;
    if (job.weights.empty()) {
        s = enumerate(k, job.m, job.n, job.L);
    } else {
        const MarkerWeights w = parse_weights(job.weights);
        doc["weights"] = weights_to_json(w);
        s = enumerate_marked(k, job.m, job.n, job.L, w);
    }
    doc["series"] = series_to_json(s);
    Report r;
    if (job.check && job.weights.empty()) {
        r.push_back(check_equal("propagator expansion", s, gf_series_oracle({k, job.m, job.n, job.L})));
    }
    return attach_report(doc, r);
}

int run_bounds(const JobSpec& job, int k, Json& doc) {
    const int d = std::abs(job.n - job.m);
    Json rows = Json::array();
    Report r;
    for (int l = d; l <= d + job.L; ++l) {
        const auto [amin2, amax2] = area_bounds(k, job.m, job.n, l);
        const auto [qmin2, qmax2] = q_degree_bounds(k, job.m, job.n, l - d);
        Json row;
        row["l"] = l;
        row["amin2"] = amin2;
        row["amax2"] = amax2;
        row["amin"] = std::to_string(amin2) + "/2";
        row["amax"] = std::to_string(amax2) + "/2";
        row["qmin2"] = qmin2;
        row["qmax2"] = qmax2;
        rows.push_back(std::move(row));
        if (job.check && l <= kMaxListedLength) {
            const auto seen = extremal_area_scan(k, job.m, job.n, l);
            r.push_back(check_true("extremal areas l=" + std::to_string(l), seen == std::make_pair(amin2, amax2),
                                   std::to_string(seen.first) + "," + std::to_string(seen.second)));
        }
    }
    doc["bounds"] = std::move(rows);
    return attach_report(doc, r);
}

JobResult dispatch(const JobSpec& job) {
    JobResult res;
    Json& doc = res.doc;
    doc["command"] = job.command;
    const int k_in = parse_ceiling(job.k);
    if (k_in == kInfinite) {
        doc["k"] = "inf";
    } else {
        doc["k"] = k_in;
    }
    const MeanderQuery q{k_in, job.m, job.n, job.L};
    const int k = effective_ceiling(q);
    if (job.L < 0) throw IndexOutOfRange("L must be >= 0");
    doc["k_eff"] = k;
    doc["m"] = job.m;
    doc["n"] = job.n;
    doc["L"] = job.L;
    if (job.command == "secular") {
        res.exit_code = run_secular(job, k, doc);
    } else if (job.command == "gf") {
        res.exit_code = run_gf(job, q, doc);
    } else if (job.command == "marked") {
        res.exit_code = run_marked(job, q, doc);
    } else if (job.command == "cluster") {
        res.exit_code = run_cluster(job, k, doc);
    } else if (job.command == "enumerate") {
        res.exit_code = run_enumerate(job, k, doc);
    } else if (job.command == "bounds") {
        res.exit_code = run_bounds(job, k, doc);
    } else if (job.command == "verify") {
        doc["A"] = job.A;
        const Report r = verify_suite(k, job.L, job.A);
        doc["failed"] = std::count_if(r.begin(), r.end(), [](const Check& c) { return !c.passed; });
        res.exit_code = attach_report(doc, r);
    } else {
        throw IndexOutOfRange("unknown command '" + job.command + "'");
    }
    return res;
}

}  // namespace

int report_exit_code(const Report& r) { return all_passed(r) ? kExitOk : kExitVerification; }

MarkerWeights parse_weights(const std::string& text) {
    MarkerWeights w = MarkerWeights::symbolic();
    if (text.empty() || text == "symbolic") return w;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw IndexOutOfRange("weight '" + item + "' is not key=value");
        const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
        const Poly p = value == "symbolic" ? Poly() : Poly(parse_rational(value));
        if (key == "t") {
            if (value != "symbolic") w.td = p;
        } else if (key == "s") {
            if (value != "symbolic") w.cd = p;
        } else if (key == "T") {
            if (value != "symbolic") w.tu = p;
        } else if (key == "S") {
            if (value != "symbolic") w.cu = p;
        } else {
            throw IndexOutOfRange("unknown weight '" + key + "' (expected t, s, T, S)");
        }
    }
    return w;
}

Report verify_suite(int k, int L, int A) {
    Report r;
    const std::string at = " k=" + std::to_string(k);
    for (int kk = 0; kk <= k; ++kk) {
        const Poly f = secular_recursive(kk);
        const std::string tag = " k=" + std::to_string(kk);
        r.push_back(check_equal("secular det" + tag, secular(kk, Route::det), f));
        r.push_back(check_equal("secular closed" + tag, secular(kk, Route::closed), f));
        r.push_back(check_equal("secular dual" + tag, secular(kk, Route::dual), f));
    }
    r.push_back(check_true("duality" + at, duality_check(k)));
    append(r, recursion_checks(k, L));
    append(r, embedding_report(k));
    for (auto [name, c] : {std::pair{"q=1", SpecialCase::q1}, std::pair{"dyck", SpecialCase::dyck},
                           std::pair{"uniform", SpecialCase::uniform}}) {
        r.push_back(check_equal(std::string("special ") + name + at, secular_special(k, c), secular_specialized(k, c)));
    }
    const GFResult cf = continued_fraction(k);
    r.push_back(check_equal("continued fraction" + at, cf.numerator * secular_recursive(k),
                            cf.denominator * Poly::var(Var::Z) * scale_shift(secular_recursive(k - 1), 1)));
    for (int m = 0; m <= k; ++m)
        for (int n = 0; n <= k; ++n) {
            const std::string tag = at + " m=" + std::to_string(m) + " n=" + std::to_string(n);
            const Series g = gf_meander({k, m, n, L}).series;
            r.push_back(check_equal("gf vs propagator" + tag, g, gf_series_oracle({k, m, n, L})));
            r.push_back(check_equal("gf vs enumeration" + tag, g, enumerate(k, m, n, L)));
            bool counting = true;
            for (int l = 0; l <= L; ++l) counting = counting && g[l].is_counting();
            r.push_back(check_true("gf counting" + tag, counting));
            if (k >= 1) {
                const MarkerWeights w = MarkerWeights::symbolic();
                r.push_back(check_equal("marked gf vs enumeration" + tag, marked_gf({k, m, n, L}, w).series,
                                        enumerate_marked(k, m, n, L, w)));
            }
            if (m <= n) {
                r.push_back(check_equal("log gf" + tag, log_gf(k, m, n, A), log_gf_reference(k, m, n, A)));
                r.push_back(
                    check_equal("log gf even/odd" + tag, log_gf_even_odd(k, m, n, A), log_gf_reference(k, m, n, A)));
            }
            for (int l = std::abs(n - m); l <= std::min(L, 10); ++l) {
                const auto seen = extremal_area_scan(k, m, n, l);
                const auto formula = area_bounds(k, m, n, l);
                r.push_back(check_true("area bounds" + tag + " l=" + std::to_string(l), seen == formula,
                                       "scan " + std::to_string(seen.first) + "," + std::to_string(seen.second) +
                                           " vs formula " + std::to_string(formula.first) + "," +
                                           std::to_string(formula.second)));
            }
        }
    if (k >= 1) append(r, marked_identity_suite(k, L));
    r.push_back(check_equal("cluster exp" + at, series_exp(cluster_log(k, A)),
                            Series::from_poly(secular_recursive(k), A)));
    return r;
}

JobResult run(const JobSpec& job) {
    try {
        return dispatch(job);
    } catch (const InternalAssertion& e) {
        JobResult res{kExitInternal, {}};
        res.doc["error"] = e.what();
        return res;
    } catch (const Error& e) {
        JobResult res{kExitUsage, {}};
        res.doc["error"] = e.what();
        return res;
    }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact length-area generating functions for Motzkin meanders"};
    JobSpec job;
    app.add_option("command", job.command, "secular, gf, marked, cluster, enumerate, bounds or verify")
        ->required()
        ->check(CLI::IsMember({"secular", "gf", "marked", "cluster", "enumerate", "bounds", "verify"}));
    app.add_option("--k", job.k, "ceiling height, or inf");
    app.add_option("--m", job.m, "start height");
    app.add_option("--n", job.n, "end height");
    app.add_option("--L", job.L, "series order (path length)");
    app.add_option("--A", job.A, "cluster order");
    app.add_option("--route", job.route, "secular route")
        ->check(CLI::IsMember({"recursive", "det", "closed", "dual", "all"}));
    app.add_option("--weights", job.weights, "t=<r>,s=<r>,T=<r>,S=<r> or symbolic");
    app.add_flag("--laurent", job.laurent, "also emit the dual (Laurent) form");
    app.add_flag("--check", job.check, "cross-check against the oracles");
    app.add_option("--out", job.out, "write JSON here instead of stdout");
    app.set_config("--config", "", "key=value file; flags override it");
    app.get_config_formatter_base()->arrayDelimiter(';');  // keep weights=t=1/2,s=3 as one value
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }
    if (job.command == "marked" && job.weights.empty()) job.weights = "symbolic";

    const JobResult res = run(job);
    const std::string text = res.doc.dump(2) + "\n";
    if (res.doc.contains("error")) err << "error: " << res.doc["error"].get<std::string>() << "\n";
    if (job.out.empty()) {
        out << text;
    } else {
        std::ofstream file(job.out, std::ios::binary);
        if (!(file << text)) {
            err << "error: cannot write " << job.out << "\n";
            return kExitUsage;
        }
    }
    return res.exit_code;
}

}  // namespace motzkin
