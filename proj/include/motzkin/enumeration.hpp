#pragma once

#include <string>
#include <utility>
#include <vector>

#include "motzkin/markers.hpp"
#include "motzkin/poly.hpp"
#include "motzkin/series.hpp"

namespace motzkin {

/// Step counts, doubled area and marker counts of one path. The touch counts
/// a and c include the start-on-boundary indicator.
struct PathStats {
    int lu = 0;
    int lh = 0;
    int ld = 0;
    int A2 = 0;
    int a = 0;  // down-steps onto the floor
    int b = 0;  // level steps on the floor
    int c = 0;  // up-steps onto the ceiling
    int d = 0;  // level steps on the ceiling

    friend bool operator==(const PathStats&, const PathStats&) = default;
};

struct Path {
    std::string steps;  // 'U', 'H', 'D'
    PathStats stats;
};

inline constexpr int kMaxListedLength = 14;

/// Sum over paths of Z^(lu+ld) ZH^lh QH^A2, by length, through L.
Series enumerate(int k, int m, int n, int L);
/// The same with marker weights on boundary steps and on a boundary start.
/// Throws CeilingTooLow for k < 1.
Series enumerate_marked(int k, int m, int n, int L, const MarkerWeights& w);

/// Every path of length l, depth-first in U < H < D order. Throws LengthGuard
/// for l > kMaxListedLength.
std::vector<Path> list_paths(int k, int m, int n, int l);
PathStats path_stats(int k, int m, const std::string& steps);
/// Z^(lu+ld) ZH^lh QH^A2 td^a cd^b tu^c cu^d.
Poly path_weight(const PathStats& s, const MarkerWeights& w = MarkerWeights::ones());

/// Observed (min, max) doubled area over list_paths. Throws Unreachable when
/// there is no path.
std::pair<int, int> extremal_area_scan(int k, int m, int n, int l);

/// Mirror j -> k - j of a step sequence.
std::string reflect_steps(const std::string& steps);
/// Reflection bijects the paths m -> n onto k-m -> k-n with A2 -> 2kl - A2.
bool reflection_check(int k, int m, int n, int l);

}  // namespace motzkin
