#include "motzkin/enumeration.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "motzkin/errors.hpp"

namespace motzkin {

namespace {

void require_heights(int k, int m, int n) {
    if (k < 0 || m < 0 || n < 0 || m > k || n > k) {
        throw IndexOutOfRange("need 0 <= m, n <= k (k=" + std::to_string(k) + ", m=" + std::to_string(m) +
                              ", n=" + std::to_string(n) + ")");
    }
}

// Weight of one step from height j; markers applied only when k >= 1.
Poly step_weight(int k, int j, int dj, const MarkerWeights* w) {
    const int to = j + dj;
    if (dj == 0) {
        Poly p = Poly::monomial(exps({{Var::ZH, 1}, {Var::QH, 2 * j}}));
        if (w && j == 0) p *= w->cd;
        if (w && j == k) p *= w->cu;
        return p;
    }
    Poly p = Poly::monomial(exps({{Var::Z, 1}, {Var::QH, 2 * std::min(j, to) + 1}}));
    if (w && to == 0) p *= w->td;
    if (w && to == k) p *= w->tu;
    return p;
}

Series run_dp(int k, int m, int n, int L, const MarkerWeights* w) {
    if (L < 0) throw IndexOutOfRange("series order must be >= 0");
    const std::size_t size = static_cast<std::size_t>(k) + 1;
    // weights[j][dj+1] for the step leaving height j
    std::vector<std::vector<Poly>> weights(size, std::vector<Poly>(3));
    for (int j = 0; j <= k; ++j)
        for (int dj = -1; dj <= 1; ++dj)
            if (j + dj >= 0 && j + dj <= k) weights[j][dj + 1] = step_weight(k, j, dj, w);

    std::vector<Poly> row(size);
    row[m] = 1;
    if (w) {
        if (m == 0) row[m] *= w->td;
        if (m == k) row[m] *= w->tu;
    }
    Series out(L);
    for (int l = 0; l <= L; ++l) {
        out.set(l, row[n]);
        if (l == L) break;
        std::vector<Poly> next(size);
        for (int j = 0; j <= k; ++j) {
            if (row[j].is_zero()) continue;
            for (int dj = -1; dj <= 1; ++dj)
                if (j + dj >= 0 && j + dj <= k) next[j + dj] += row[j] * weights[j][dj + 1];
        }
        row = std::move(next);
    }
    return out;
}

}  // namespace

Series enumerate(int k, int m, int n, int L) {
    require_heights(k, m, n);
    return run_dp(k, m, n, L, nullptr);
}

Series enumerate_marked(int k, int m, int n, int L, const MarkerWeights& w) {
    if (k < 1) throw CeilingTooLow("markers need a ceiling k >= 1");
    require_heights(k, m, n);
    return run_dp(k, m, n, L, &w);
}

PathStats path_stats(int k, int m, const std::string& steps) {
    PathStats s;
    int j = m;
    s.a = m == 0 ? 1 : 0;
    s.c = m == k ? 1 : 0;
    for (char step : steps) {
        switch (step) {
            case 'U':
                ++s.lu;
                s.A2 += 2 * j + 1;
                ++j;
                if (j == k) ++s.c;
                break;
            case 'D':
                ++s.ld;
                --j;
                s.A2 += 2 * j + 1;
                if (j == 0) ++s.a;
                break;
            case 'H':
                ++s.lh;
                s.A2 += 2 * j;
                if (j == 0) ++s.b;
                if (j == k) ++s.d;
                break;
            default:
                throw IndexOutOfRange(std::string("unknown step '") + step + "'");
        }
        if (j < 0 || j > k) throw IndexOutOfRange("step sequence leaves the strip");
    }
    return s;
}

Poly path_weight(const PathStats& s, const MarkerWeights& w) {
    Poly p = Poly::monomial(exps({{Var::Z, s.lu + s.ld}, {Var::ZH, s.lh}, {Var::QH, s.A2}}));
    p *= w.td.pow(static_cast<unsigned>(s.a));
    p *= w.cd.pow(static_cast<unsigned>(s.b));
    p *= w.tu.pow(static_cast<unsigned>(s.c));
    p *= w.cu.pow(static_cast<unsigned>(s.d));
    return p;
}

std::vector<Path> list_paths(int k, int m, int n, int l) {
    require_heights(k, m, n);
    if (l > kMaxListedLength) {
        throw LengthGuard("list_paths is limited to l <= " + std::to_string(kMaxListedLength) + ", got " +
                          std::to_string(l));
    }
    if (l < 0) throw IndexOutOfRange("negative length");
    std::vector<Path> out;
    std::string steps;
    auto walk = [&](auto&& self, int j) -> void {
        const int left = l - static_cast<int>(steps.size());
        if (std::abs(n - j) > left) return;
        if (left == 0) {
            out.push_back({steps, path_stats(k, m, steps)});
            return;
        }
        static constexpr std::pair<char, int> kSteps[] = {{'U', 1}, {'H', 0}, {'D', -1}};
        for (const auto& [c, dj] : kSteps) {
            if (j + dj < 0 || j + dj > k) continue;
            steps.push_back(c);
            self(self, j + dj);
            steps.pop_back();
        }
    };
    walk(walk, m);
    return out;
}

std::pair<int, int> extremal_area_scan(int k, int m, int n, int l) {
    const auto paths = list_paths(k, m, n, l);
    if (paths.empty()) {
        throw Unreachable("no path of length " + std::to_string(l) + " from " + std::to_string(m) + " to " +
                          std::to_string(n) + " under ceiling " + std::to_string(k));
    }
    int lo = paths.front().stats.A2, hi = lo;
    for (const auto& p : paths) {
        lo = std::min(lo, p.stats.A2);
        hi = std::max(hi, p.stats.A2);
    }
    return {lo, hi};
}

std::string reflect_steps(const std::string& steps) {
    std::string out = steps;
    for (char& c : out) {
        if (c == 'U') c = 'D';
        else if (c == 'D') c = 'U';
    }
    return out;
}

bool reflection_check(int k, int m, int n, int l) {
    const auto paths = list_paths(k, m, n, l);
    const auto mirrored = list_paths(k, k - m, k - n, l);
    if (paths.size() != mirrored.size()) return false;
    std::map<std::string, int> areas;
    for (const auto& p : mirrored) areas[p.steps] = p.stats.A2;
    for (const auto& p : paths) {
        const auto it = areas.find(reflect_steps(p.steps));
        if (it == areas.end() || it->second != 2 * k * l - p.stats.A2) return false;
    }
    return true;
}

}  // namespace motzkin
