#pragma once

#include <iosfwd>
#include <string>

#include "motzkin/checks.hpp"
#include "motzkin/json_io.hpp"
#include "motzkin/markers.hpp"

namespace motzkin {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitVerification = 2, kExitInternal = 3 };

struct JobSpec {
    std::string command;
    std::string k = "0";  // integer or "inf"
    int m = 0;
    int n = 0;
    int L = 8;
    int A = 4;
    std::string route = "all";
    std::string weights;  // empty: unmarked for enumerate, symbolic for marked
    bool laurent = false;
    bool check = false;  // cross-check against the oracles
    std::string out;
};

struct JobResult {
    int exit_code = kExitOk;
    Json doc;
};

/// Marker weights from "symbolic" or "t=<r>,s=<r>,T=<r>,S=<r>"; keys left
/// out keep their formal variable.
MarkerWeights parse_weights(const std::string& text);

/// kExitOk when every check passed, kExitVerification otherwise.
int report_exit_code(const Report& r);

/// Every identity suite at ceiling k, series order L, cluster order A.
Report verify_suite(int k, int L, int A);

JobResult run(const JobSpec& job);

/// Full command line handling: parse, run, write JSON to stdout or --out.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace motzkin
