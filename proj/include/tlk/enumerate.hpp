#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "tlk/frame.hpp"

namespace tlk {

struct EnumSpec {
    int max_points = 5;
    std::optional<int> dep, widF, widB, zdg, gir;  // upper bounds; gir=1 = skeletons
    bool rooted_only = false;
};

namespace detail {

// Canonical form: lexicographically least adjacency matrix (row-major bits)
// over all point permutations.
inline std::vector<int> canonical_matrix(const std::vector<Mask>& succ) {
    int n = static_cast<int>(succ.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<int> best;
    do {
        std::vector<int> mat;
        mat.reserve(n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                mat.push_back(has_bit(succ[perm[i]], perm[j]) ? 1 : 0);
        if (best.empty() || mat < best) best = mat;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool is_transitive(const std::vector<Mask>& succ) {
    int n = static_cast<int>(succ.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (has_bit(succ[i], j) && (succ[j] & ~succ[i]) != 0) return false;
    return true;
}

}  // namespace detail

// All reflexive-transitive frames up to isomorphism with at most max_points
// points, filtered by the requested bounds; deterministic canonical order.
inline std::vector<Frame> enumerate_frames(const EnumSpec& spec) {
    if (spec.max_points > 5) throw error("enumerate_frames: max_points capped at 5");
    if (spec.max_points < 1) throw error("enumerate_frames: max_points must be positive");
    std::vector<Frame> out;
    for (int n = 1; n <= spec.max_points; ++n) {
        std::set<std::vector<int>> seen;
        std::vector<std::vector<int>> canon_list;
        int off_pairs = n * (n - 1);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) pairs.emplace_back(i, j);
        for (long long code = 0; code < (1LL << off_pairs); ++code) {
            std::vector<Mask> succ(n);
            for (int i = 0; i < n; ++i) succ[i] = Mask(1) << i;  // reflexive
            for (int p = 0; p < off_pairs; ++p)
                if ((code >> p) & 1) succ[pairs[p].first] |= Mask(1) << pairs[p].second;
            if (!detail::is_transitive(succ)) continue;
            std::vector<int> canon = detail::canonical_matrix(succ);
            if (seen.insert(canon).second) canon_list.push_back(std::move(canon));
        }
        std::sort(canon_list.begin(), canon_list.end());
        for (const auto& mat : canon_list) {
            std::vector<std::string> points;
            for (int i = 0; i < n; ++i) points.push_back(std::to_string(i));
            std::vector<std::pair<std::string, std::string>> edges;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (mat[i * n + j]) edges.emplace_back(points[i], points[j]);
            Frame f(points, edges, ClosureMode::None);
            FrameMetrics m = metrics(f);
            if (spec.dep && m.dep > *spec.dep) continue;
            if (spec.widF && m.widF > *spec.widF) continue;
            if (spec.widB && m.widB > *spec.widB) continue;
            if (spec.zdg && m.zdg > *spec.zdg) continue;
            if (spec.gir && m.gir > *spec.gir) continue;
            if (spec.rooted_only && !is_rooted(f)) continue;
            out.push_back(std::move(f));
        }
    }
    return out;
}

}  // namespace tlk
