#pragma once

#include <map>
#include <string>
#include <vector>

#include "tlk/formula.hpp"
#include "tlk/frame.hpp"
#include "tlk/morphism.hpp"
#include "tlk/semantics.hpp"
#include "tlk/sequence.hpp"

namespace tlk {

// Umbrella frame Z_alpha: one block per position of alpha.  A type-0 block
// has points a0..a5, b0, b1, c0, c1, c2 (11 points); a type-1 block adds
// a6, a7 (13 points).  Within a block the relation is the reflexive closure
// of the generators
//   a_{2i} -> a_{2i+1} (i<4),  a_{2i+2} -> a_{2i+1} (i<3),
//   b0 -> b1, b0 -> a1, c0 -> c1, c2 -> c1, c0 -> a3
// restricted to the block's points.  Consecutive blocks are linked by one
// cross edge from a0 of block i+1 up to the terminal top of block i (a5 for
// type 0, a7 for type 1) -- the figure-consistent direction, which keeps
// depth at 2.
struct UmbrellaFrame {
    Frame frame;
    BitSeq alpha;
    std::map<std::string, long long> block_index;  // point id -> block position
    std::map<std::string, std::string> role;       // point id -> a0..a7,b0,b1,c0..c2
};

namespace detail {

inline std::string umbrella_point(long long block, const std::string& role) {
    return role + "@" + std::to_string(block);
}

}  // namespace detail

inline UmbrellaFrame umbrella(const BitSeq& alpha) {
    if (alpha.empty()) throw error("umbrella requires a nonempty bit sequence");
    std::vector<std::string> points;
    std::vector<std::pair<std::string, std::string>> edges;
    std::map<std::string, long long> block_index;
    std::map<std::string, std::string> role;

    auto add_point = [&](long long blk, const std::string& r) {
        std::string id = detail::umbrella_point(blk, r);
        points.push_back(id);
        block_index[id] = blk;
        role[id] = r;
        return id;
    };

    for (long long i = alpha.lo(); i <= alpha.hi(); ++i) {
        int type = alpha.at(i);
        int atop = type == 0 ? 6 : 8;  // number of a-points
        for (int k = 0; k < atop; ++k) add_point(i, "a" + std::to_string(k));
        add_point(i, "b0");
        add_point(i, "b1");
        add_point(i, "c0");
        add_point(i, "c1");
        add_point(i, "c2");
        auto a = [&](int k) { return detail::umbrella_point(i, "a" + std::to_string(k)); };
        auto other = [&](const std::string& r) { return detail::umbrella_point(i, r); };
        for (int k = 0; 2 * k + 1 < atop; ++k) edges.emplace_back(a(2 * k), a(2 * k + 1));
        for (int k = 0; 2 * k + 2 < atop; ++k) edges.emplace_back(a(2 * k + 2), a(2 * k + 1));
        edges.emplace_back(other("b0"), other("b1"));
        edges.emplace_back(other("b0"), a(1));
        edges.emplace_back(other("c0"), other("c1"));
        edges.emplace_back(other("c2"), other("c1"));
        edges.emplace_back(other("c0"), a(3));
        if (i > alpha.lo()) {
            int prev_type = alpha.at(i - 1);
            std::string prev_top =
                detail::umbrella_point(i - 1, prev_type == 0 ? "a5" : "a7");
            edges.emplace_back(a(0), prev_top);
        }
    }
    Frame f(points, edges, ClosureMode::ReflexiveTransitive);
    return UmbrellaFrame{std::move(f), alpha, std::move(block_index), std::move(role)};
}

inline UmbrellaFrame umbrella(const std::string& bits, long long anchor = 0) {
    return umbrella(bitseq(bits, anchor));
}

struct UmbrellaReport {
    bool rooted;
    bool antisymmetric;
    bool dep_ok;    // dep <= 2
    bool widF_ok;   // widF <= 2
    bool widB_ok;   // widB <= 3
    bool schema_ok; // bd2 / bw+2 / bw-3 hold pointwise (semantic cross-check)
    FrameMetrics m;

    bool all_ok() const {
        return rooted && antisymmetric && dep_ok && widF_ok && widB_ok && schema_ok;
    }
};

inline UmbrellaReport umbrella_check(const Frame& f, int budget = 40) {
    UmbrellaReport r{};
    r.m = metrics(f);
    r.rooted = is_rooted(f);
    r.antisymmetric = r.m.gir <= 1;
    r.dep_ok = r.m.dep <= 2;
    r.widF_ok = r.m.widF <= 2;
    r.widB_ok = r.m.widB <= 3;
    r.schema_ok = true;
    Formula checks[] = {schema_bd(2), schema_bw_plus(2), schema_bw_minus(3)};
    for (const Formula& phi : checks)
        for (int x = 0; x < f.size() && r.schema_ok; ++x)
            if (!valid_at(f, x, phi, budget)) r.schema_ok = false;
    return r;
}

inline UmbrellaReport umbrella_check(const UmbrellaFrame& z, int budget = 40) {
    return umbrella_check(z.frame, budget);
}

// Induced subframe on the points of blocks i..j; isomorphic to
// umbrella(alpha restricted to [i,j]) since boundary cross edges vanish.
inline Frame block_interval_subframe(const UmbrellaFrame& z, long long i, long long j) {
    if (i < z.alpha.lo() || j > z.alpha.hi() || i > j)
        throw error("block interval out of range");
    Mask keep = 0;
    for (int p = 0; p < z.frame.size(); ++p) {
        long long blk = z.block_index.at(z.frame.id(p));
        if (blk >= i && blk <= j) keep |= Mask(1) << p;
    }
    return induced_subframe(z.frame, keep);
}

}  // namespace tlk
