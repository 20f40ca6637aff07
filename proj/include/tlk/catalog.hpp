#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tlk/frame.hpp"
#include "tlk/morphism.hpp"

namespace tlk {

// ---------------------------------------------------------------------------
// Frame families.
// ---------------------------------------------------------------------------

// Chain c_n = (n, >=): point i sees every j <= i.
inline Frame chain(int n) {
    if (n < 1) throw error("chain requires n >= 1");
    std::vector<std::string> points;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) points.push_back(std::to_string(i));
    for (int i = 1; i < n; ++i) edges.emplace_back(points[i], points[i - 1]);
    return Frame(points, edges, ClosureMode::ReflexiveTransitive);
}

// Single (1+lambda)-cluster: (c_1)^0_lambda.
inline Frame cluster_frame(int lambda) {
    if (lambda < 0) throw error("cluster requires lambda >= 0");
    if (lambda == 0) return chain(1);
    return preskeleton(chain(1), 0, lambda);
}

enum class CtType { Circ, Plus, Minus, PlusMinus };

inline std::string ct_name(CtType t) {
    switch (t) {
        case CtType::Circ: return "o";
        case CtType::Plus: return "+";
        case CtType::Minus: return "-";
        case CtType::PlusMinus: return "+-";
    }
    return "?";
}

// C^o = (c_1)^0_l, C^+ = (c_2)^1_l, C^- = (c_2)^0_l, C^+- = (c_3)^1_l.
inline Frame ct(CtType t, int lambda) {
    if (lambda < 1) throw error("Ct requires lambda >= 1");
    switch (t) {
        case CtType::Circ: return preskeleton(chain(1), 0, lambda);
        case CtType::Plus: return preskeleton(chain(2), 1, lambda);
        case CtType::Minus: return preskeleton(chain(2), 0, lambda);
        case CtType::PlusMinus: return preskeleton(chain(3), 1, lambda);
    }
    throw error("unknown Ct type");
}

namespace detail {

// Points i..j of the two-sided garland G_Z, with the R_z generators
// restricted to that window: 2i+1 -> 2i and 2i+1 -> 2i+2 (odd points see
// their even neighbours).
inline Frame garland_window_impl(int lo, int hi, bool add_hoop_edge) {
    if (lo > hi) throw error("garland window empty");
    if (hi - lo + 1 > Frame::kMaxPoints) throw error("garland window too large");
    std::vector<std::string> points;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = lo; i <= hi; ++i) points.push_back(std::to_string(i));
    auto name = [](int i) { return std::to_string(i); };
    for (int i = lo; i <= hi; ++i) {
        if (i % 2 != 0) {  // odd in the sense of R_z: 2k+1 (handles negatives)
            if (i - 1 >= lo) edges.emplace_back(name(i), name(i - 1));
            if (i + 1 <= hi) edges.emplace_back(name(i), name(i + 1));
        }
    }
    if (add_hoop_edge) edges.emplace_back(name(hi), name(lo));
    return Frame(points, edges, ClosureMode::ReflexiveTransitive);
}

}  // namespace detail

// n-garland G_n = G_Z restricted to {0..n}.
inline Frame garland(int n) {
    if (n < 0) throw error("garland requires n >= 0");
    return detail::garland_window_impl(0, n, false);
}

inline Frame co_garland(int n) { return inverse(garland(n)); }

// n-hoop (n odd): garland 0..n plus the closing edge n -> 0.
inline Frame hoop(int n) {
    if (n < 1 || n % 2 == 0) throw error("hoop requires odd n >= 1");
    return detail::garland_window_impl(0, n, true);
}

inline Frame garland_window(int lo, int hi) {
    return detail::garland_window_impl(lo, hi, false);
}

// ---------------------------------------------------------------------------
// Pre-skeleton recognition and c-irreducibility.
// ---------------------------------------------------------------------------

struct PreSkeletonDescriptor {
    Frame skeleton;
    std::string marked;  // point id in the skeleton
    int lambda;
};

inline std::optional<PreSkeletonDescriptor> recognize_preskeleton(const Frame& f) {
    ClusterPartition p = clusters(f);
    int fat = -1;
    for (size_t b = 0; b < p.blocks.size(); ++b) {
        if (p.blocks[b].size() > 1) {
            if (fat >= 0) return std::nullopt;  // more than one proper cluster
            fat = static_cast<int>(b);
        }
    }
    if (fat < 0) return std::nullopt;  // a skeleton
    SkeletonResult sk = skeleton(f);
    int marked = p.blocks[fat].front();
    return PreSkeletonDescriptor{sk.frame, f.id(marked),
                                 static_cast<int>(p.blocks[fat].size()) - 1};
}

struct CIrreducibility {
    bool irreducible;
    std::optional<Frame> witness;  // offending t-morphic image when reducible
};

// Decides c-irreducibility of F^x_1 for a rooted skeleton F: every t-morphic
// image of F^x_1 must be isomorphic to F^x_1 itself or a t-morphic image of F.
inline CIrreducibility is_c_irreducible(const Frame& f, int x) {
    for (const auto& b : clusters(f).blocks)
        if (b.size() > 1) throw error("is_c_irreducible requires a skeleton");
    Frame p = preskeleton(f, x, 1);
    for (const auto& img : enumerate_images(p)) {
        if (isomorphic(img, p)) continue;
        if (img.size() <= f.size() && find_tmorphism_onto(f, img)) continue;
        return CIrreducibility{false, img};
    }
    return CIrreducibility{true, std::nullopt};
}

inline CIrreducibility is_c_irreducible(const Frame& f, const std::string& x) {
    return is_c_irreducible(f, f.index(x));
}

struct PretabularityReport {
    bool rooted;
    bool skeleton;
    bool c_irreducible;
    bool pretabular;  // verdict within the bounded-parameter ambient cell
    FrameMetrics ambient;
    std::optional<Frame> witness;
};

inline PretabularityReport pretabularity_report(const Frame& f, int x) {
    PretabularityReport r{};
    r.rooted = is_rooted(f);
    r.skeleton = true;
    for (const auto& b : clusters(f).blocks)
        if (b.size() > 1) r.skeleton = false;
    r.ambient = metrics(f);
    if (r.rooted && r.skeleton) {
        CIrreducibility c = is_c_irreducible(f, x);
        r.c_irreducible = c.irreducible;
        r.witness = c.witness;
    } else {
        r.c_irreducible = false;
    }
    r.pretabular = r.rooted && r.skeleton && r.c_irreducible;
    return r;
}

inline PretabularityReport pretabularity_report(const Frame& f, const std::string& x) {
    return pretabularity_report(f, f.index(x));
}

// ---------------------------------------------------------------------------
// Classification procedures.
// ---------------------------------------------------------------------------

struct Bs222Class {
    enum class Tag { Garland, CoGarland, Hoop, NotApplicable } tag;
    int n = -1;
    std::string reason;
};

inline Bs222Class classify_bs222(const Frame& f) {
    using Tag = Bs222Class::Tag;
    FrameMetrics m = metrics(f);
    if (m.gir > 1) return {Tag::NotApplicable, -1, "girth " + std::to_string(m.gir) + " > 1"};
    if (!is_rooted(f)) return {Tag::NotApplicable, -1, "not rooted"};
    if (m.dep > 2) return {Tag::NotApplicable, -1, "dep " + std::to_string(m.dep) + " > 2"};
    if (m.widF > 2) return {Tag::NotApplicable, -1, "widF " + std::to_string(m.widF) + " > 2"};
    if (m.widB > 2) return {Tag::NotApplicable, -1, "widB " + std::to_string(m.widB) + " > 2"};
    int n = f.size() - 1;
    if (isomorphic(f, garland(n))) return {Tag::Garland, n, ""};
    if (isomorphic(f, co_garland(n))) return {Tag::CoGarland, n, ""};
    if (n >= 1 && n % 2 == 1 && isomorphic(f, hoop(n))) return {Tag::Hoop, n, ""};
    return {Tag::NotApplicable, -1, "no family member of matching size"};
}

struct S43Class {
    enum class Tag { ChainType, Ct, NotApplicable } tag;
    int n = -1;           // chain length
    CtType ct = CtType::Circ;
    std::string reason;
};

// Fingerprint classification of linear rooted frames: chains, or the four
// C^t pre-skeleton types read off (|Y0|,|Y1|) with Y0/Y1 the strict
// successors/predecessors of the proper cluster.
inline S43Class classify_s43(const Frame& f) {
    using Tag = S43Class::Tag;
    FrameMetrics m = metrics(f);
    if (!is_rooted(f)) return {Tag::NotApplicable, -1, CtType::Circ, "not rooted"};
    if (m.widF > 1) return {Tag::NotApplicable, -1, CtType::Circ, "widF " + std::to_string(m.widF)};
    if (m.widB > 1) return {Tag::NotApplicable, -1, CtType::Circ, "widB " + std::to_string(m.widB)};
    if (m.gir == 1) return {Tag::ChainType, f.size(), CtType::Circ, ""};
    auto desc = recognize_preskeleton(f);
    if (!desc)
        return {Tag::NotApplicable, -1, CtType::Circ, "more than one proper cluster"};
    int c = f.index(desc->marked);
    Mask cl = cluster_of(f, c);
    int y0 = popcount(f.succ(c) & ~cl);
    int y1 = popcount(f.pred(c) & ~cl);
    if (y0 > 1 || y1 > 1)
        return {Tag::NotApplicable, -1, CtType::Circ,
                "fingerprint (" + std::to_string(y0) + "," + std::to_string(y1) + ")"};
    CtType t = y0 == 0 ? (y1 == 0 ? CtType::Circ : CtType::Minus)
                       : (y1 == 0 ? CtType::Plus : CtType::PlusMinus);
    return {Tag::Ct, -1, t, ""};
}

}  // namespace tlk
