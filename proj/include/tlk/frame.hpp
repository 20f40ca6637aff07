#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tlk {

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

enum class ClosureMode { None, ReflexiveTransitive };

// Point sets are bitmasks over point indices; frames are capped at 64 points.
using Mask = std::uint64_t;

inline int popcount(Mask m) {
    int n = 0;
    while (m) { m &= m - 1; ++n; }
    return n;
}

inline bool has_bit(Mask m, int i) { return (m >> i) & 1u; }

inline std::vector<int> mask_to_indices(Mask m) {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
        if (has_bit(m, i)) out.push_back(i);
    return out;
}

// A finite Kripke frame: ordered point ids plus a relation stored as
// per-point successor masks.  With reflexive-transitive closure mode the
// stored relation is the closure of the input edges.
class Frame {
public:
    static constexpr int kMaxPoints = 64;

    Frame(std::vector<std::string> points,
          const std::vector<std::pair<std::string, std::string>>& edges,
          ClosureMode mode)
        : ids_(std::move(points)), mode_(mode) {
        if (static_cast<int>(ids_.size()) > kMaxPoints)
            throw error("frame exceeds " + std::to_string(kMaxPoints) + " points");
        if (ids_.empty())
            throw error("frame must have at least one point");
        for (int i = 0; i < size(); ++i) {
            if (index_.count(ids_[i]))
                throw error("duplicate point id: " + ids_[i]);
            index_[ids_[i]] = i;
        }
        succ_.assign(size(), 0);
        for (const auto& e : edges) {
            int a = index(e.first);
            int b = index(e.second);
            succ_[a] |= Mask(1) << b;
        }
        if (mode_ == ClosureMode::ReflexiveTransitive) close_();
        rebuild_pred_();
    }

    int size() const { return static_cast<int>(ids_.size()); }
    const std::string& id(int i) const { return ids_.at(i); }
    const std::vector<std::string>& ids() const { return ids_; }
    ClosureMode closure_mode() const { return mode_; }

    int index(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw error("unknown point: " + id);
        return it->second;
    }
    bool has_point(const std::string& id) const { return index_.count(id) != 0; }

    bool rel(int i, int j) const { return has_bit(succ_[i], j); }
    Mask succ(int i) const { return succ_[i]; }   // R[i]
    Mask pred(int i) const { return pred_[i]; }   // R-breve[i]
    Mask all_mask() const {
        return size() == 64 ? ~Mask(0) : (Mask(1) << size()) - 1;
    }

    // Forward image R[Y] and backward image R-breve[Y] of a point set.
    Mask image(Mask ys) const {
        Mask out = 0;
        for (int i = 0; i < size(); ++i)
            if (has_bit(ys, i)) out |= succ_[i];
        return out;
    }
    Mask preimage(Mask ys) const {
        Mask out = 0;
        for (int i = 0; i < size(); ++i)
            if (has_bit(ys, i)) out |= pred_[i];
        return out;
    }

    std::vector<std::pair<std::string, std::string>> edge_list() const {
        std::vector<std::pair<std::string, std::string>> out;
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j)
                if (rel(i, j)) out.emplace_back(ids_[i], ids_[j]);
        return out;
    }

private:
    void close_() {
        for (int i = 0; i < size(); ++i) succ_[i] |= Mask(1) << i;
        for (int k = 0; k < size(); ++k)
            for (int i = 0; i < size(); ++i)
                if (has_bit(succ_[i], k)) succ_[i] |= succ_[k];
    }
    void rebuild_pred_() {
        pred_.assign(size(), 0);
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j)
                if (rel(i, j)) pred_[j] |= Mask(1) << i;
    }

    std::vector<std::string> ids_;
    std::map<std::string, int> index_;
    std::vector<Mask> succ_;
    std::vector<Mask> pred_;
    ClosureMode mode_;
};

inline Frame build_frame(std::vector<std::string> points,
                         const std::vector<std::pair<std::string, std::string>>& edges,
                         ClosureMode mode = ClosureMode::ReflexiveTransitive) {
    return Frame(std::move(points), edges, mode);
}

// R-sharp^n[x]; n < 0 means iterate to the fixpoint (omega).
inline Mask zigzag_ball(const Frame& f, int x, int n) {
    Mask ball = Mask(1) << x;
    for (int step = 0; n < 0 || step < n; ++step) {
        Mask next = ball | f.image(ball) | f.preimage(ball);
        if (next == ball) break;
        ball = next;
    }
    return ball;
}

inline Mask zigzag_ball(const Frame& f, const std::string& x, int n) {
    return zigzag_ball(f, f.index(x), n);
}

struct ClusterPartition {
    std::vector<std::vector<int>> blocks;  // ordered by least member
    std::vector<int> block_of;             // point -> block index
};

inline ClusterPartition clusters(const Frame& f) {
    ClusterPartition p;
    p.block_of.assign(f.size(), -1);
    for (int i = 0; i < f.size(); ++i) {
        if (p.block_of[i] >= 0) continue;
        int b = static_cast<int>(p.blocks.size());
        std::vector<int> block;
        Mask members = f.succ(i) & f.pred(i);
        members |= Mask(1) << i;  // guard for non-reflexive relations
        for (int j = 0; j < f.size(); ++j)
            if (has_bit(members, j) && p.block_of[j] < 0) {
                p.block_of[j] = b;
                block.push_back(j);
            }
        p.blocks.push_back(std::move(block));
    }
    return p;
}

// Cluster C(x) = R[x] ∩ R-breve[x] as a mask.
inline Mask cluster_of(const Frame& f, int x) {
    return (f.succ(x) & f.pred(x)) | (Mask(1) << x);
}

struct SkeletonResult {
    Frame frame;                 // quotient frame (antisymmetric)
    std::vector<int> map;        // source point -> quotient point index
};

inline SkeletonResult skeleton(const Frame& f) {
    ClusterPartition p = clusters(f);
    std::vector<std::string> points;
    points.reserve(p.blocks.size());
    for (const auto& b : p.blocks) points.push_back(f.id(b.front()));
    std::vector<std::pair<std::string, std::string>> edges;
    for (size_t a = 0; a < p.blocks.size(); ++a)
        for (size_t b = 0; b < p.blocks.size(); ++b)
            if (f.rel(p.blocks[a].front(), p.blocks[b].front()))
                edges.emplace_back(points[a], points[b]);
    Frame q(points, edges, f.closure_mode());
    std::vector<int> map(f.size());
    for (int i = 0; i < f.size(); ++i) map[i] = p.block_of[i];
    return SkeletonResult{std::move(q), std::move(map)};
}

struct PointMetrics {
    int dep = 0;
    int widF = 0;
    int widB = 0;
    int zdg = 0;
};

struct FrameMetrics {
    std::vector<PointMetrics> per_point;
    int dep = 0, widF = 0, widB = 0, zdg = 0, gir = 0;
};

namespace detail {

// Longest chain (number of clusters) in the cluster DAG restricted to the
// clusters meeting the given point set.
inline int longest_cluster_chain(const Frame& f, const ClusterPartition& p, Mask within) {
    int nb = static_cast<int>(p.blocks.size());
    std::vector<int> order;  // blocks inside `within`
    for (int b = 0; b < nb; ++b)
        if (has_bit(within, p.blocks[b].front())) order.push_back(b);
    // memoized longest path: chain length ending at block b
    std::vector<int> best(nb, -1);
    int overall = 0;
    // iterate until fixpoint (blocks are few; simple relaxation suffices)
    bool changed = true;
    for (int b : order) best[b] = 1;
    while (changed) {
        changed = false;
        for (int a : order)
            for (int b : order) {
                if (a == b) continue;
                int xa = p.blocks[a].front(), xb = p.blocks[b].front();
                if (f.rel(xa, xb) && !f.rel(xb, xa) && best[a] < best[b] + 1) {
                    best[a] = best[b] + 1;
                    changed = true;
                }
            }
    }
    for (int b : order) overall = std::max(overall, best[b]);
    return overall;
}

// Maximum antichain (pairwise unrelated points) inside `within`.  One point
// per cluster can appear, so search over cluster representatives.
inline int max_antichain(const Frame& f, const ClusterPartition& p, Mask within) {
    std::vector<int> reps;
    for (const auto& b : p.blocks)
        if (has_bit(within, b.front())) reps.push_back(b.front());
    int n = static_cast<int>(reps.size());
    std::vector<Mask> conflict(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && (f.rel(reps[i], reps[j]) || f.rel(reps[j], reps[i])))
                conflict[i] |= Mask(1) << j;
    int best = 0;
    // branch and bound over representative indices
    std::vector<std::pair<Mask, int>> stack;  // (candidates still allowed, size so far)
    Mask all = n == 64 ? ~Mask(0) : (Mask(1) << n) - 1;
    stack.emplace_back(all, 0);
    while (!stack.empty()) {
        auto [cand, sz] = stack.back();
        stack.pop_back();
        if (sz + popcount(cand) <= best) continue;
        if (!cand) { best = std::max(best, sz); continue; }
        int i = mask_to_indices(cand & ~(cand - 1)).front();
        Mask rest = cand & ~(Mask(1) << i);
        stack.emplace_back(rest, sz);                      // skip i
        stack.emplace_back(rest & ~conflict[i], sz + 1);   // take i
        best = std::max(best, sz);
    }
    return best;
}

}  // namespace detail

inline FrameMetrics metrics(const Frame& f) {
    FrameMetrics m;
    ClusterPartition p = clusters(f);
    m.per_point.resize(f.size());
    for (const auto& b : p.blocks)
        m.gir = std::max(m.gir, static_cast<int>(b.size()));
    for (int x = 0; x < f.size(); ++x) {
        PointMetrics& pm = m.per_point[x];
        Mask rx = f.succ(x);
        pm.dep = detail::longest_cluster_chain(f, p, rx);
        pm.widF = detail::max_antichain(f, p, rx);
        pm.widB = detail::max_antichain(f, p, f.pred(x));
        // z-degree: number of strict growth steps of the zigzag ball
        Mask ball = Mask(1) << x;
        int k = 0;
        for (;;) {
            Mask next = ball | f.image(ball) | f.preimage(ball);
            if (next == ball) break;
            ball = next;
            ++k;
        }
        pm.zdg = k;
        m.dep = std::max(m.dep, pm.dep);
        m.widF = std::max(m.widF, pm.widF);
        m.widB = std::max(m.widB, pm.widB);
        m.zdg = std::max(m.zdg, pm.zdg);
    }
    return m;
}

// Induced subframe on the points of `keep`; point order inherited.
inline Frame induced_subframe(const Frame& f, Mask keep) {
    if (!keep) throw error("induced subframe of empty point set");
    if ((keep & ~f.all_mask()) != 0) throw error("induced subframe: foreign points");
    std::vector<std::string> points;
    std::vector<int> sel = mask_to_indices(keep);
    for (int i : sel) points.push_back(f.id(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i : sel)
        for (int j : sel)
            if (f.rel(i, j)) edges.emplace_back(f.id(i), f.id(j));
    // relation is restricted as-is; restriction of a closed relation is closed
    return Frame(points, edges, ClosureMode::None);
}

inline Frame induced_subframe(const Frame& f, const std::vector<std::string>& ys) {
    Mask keep = 0;
    for (const auto& y : ys) keep |= Mask(1) << f.index(y);
    return induced_subframe(f, keep);
}

inline Frame generated_subframe(const Frame& f, int x) {
    return induced_subframe(f, zigzag_ball(f, x, -1));
}

inline bool is_rooted(const Frame& f) {
    for (int x = 0; x < f.size(); ++x)
        if (zigzag_ball(f, x, -1) == f.all_mask()) return true;
    return false;
}

inline Frame disjoint_union(const std::vector<Frame>& fs) {
    if (fs.empty()) throw error("disjoint union of empty list");
    std::vector<std::string> points;
    std::vector<std::pair<std::string, std::string>> edges;
    for (size_t t = 0; t < fs.size(); ++t) {
        std::string tag = std::to_string(t) + ":";
        for (int i = 0; i < fs[t].size(); ++i) points.push_back(tag + fs[t].id(i));
        for (const auto& e : fs[t].edge_list())
            edges.emplace_back(tag + e.first, tag + e.second);
    }
    return Frame(points, edges, ClosureMode::None);
}

inline Frame inverse(const Frame& f) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : f.edge_list()) edges.emplace_back(e.second, e.first);
    return Frame(f.ids(), edges, ClosureMode::None);
}

// F^x_lambda: fatten point x of a skeleton into a (1+lambda)-cluster.
// The fresh cluster-mates of x are named "<id>~1" .. "<id>~lambda".
inline Frame preskeleton(const Frame& f, int x, int lambda) {
    if (lambda < 1) throw error("preskeleton requires lambda >= 1");
    for (const auto& b : clusters(f).blocks)
        if (b.size() > 1) throw error("preskeleton requires a skeleton (girth 1)");
    std::vector<std::string> points = f.ids();
    std::vector<std::string> fresh;
    for (int k = 1; k <= lambda; ++k) {
        fresh.push_back(f.id(x) + "~" + std::to_string(k));
        points.push_back(fresh.back());
    }
    std::vector<std::pair<std::string, std::string>> edges = f.edge_list();
    std::vector<std::string> cluster = fresh;
    cluster.push_back(f.id(x));
    for (const auto& c : cluster) {
        for (const auto& d : cluster) edges.emplace_back(c, d);
        for (int j = 0; j < f.size(); ++j) {
            if (f.rel(x, j)) edges.emplace_back(c, f.id(j));
            if (f.rel(j, x)) edges.emplace_back(f.id(j), c);
        }
    }
    return Frame(points, edges, ClosureMode::None);
}

inline Frame preskeleton(const Frame& f, const std::string& x, int lambda) {
    return preskeleton(f, f.index(x), lambda);
}

}  // namespace tlk
