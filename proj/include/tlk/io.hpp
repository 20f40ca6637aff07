#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tlk/frame.hpp"

namespace tlk {

struct FrameDoc {
    Frame frame;
    std::optional<std::string> root;
};

inline nlohmann::json frame_to_json(const Frame& f,
                                    const std::optional<std::string>& root = std::nullopt) {
    nlohmann::json j;
    j["points"] = f.ids();
    // under reflexive-transitive closure loops are implied and omitted;
    // uncovered relations keep every pair for losslessness
    bool closed = f.closure_mode() == ClosureMode::ReflexiveTransitive;
    std::vector<std::vector<std::string>> edges;
    for (const auto& e : f.edge_list())
        if (!closed || e.first != e.second) edges.push_back({e.first, e.second});
    j["edges"] = edges;
    j["closure"] = closed ? "reflexive-transitive" : "none";
    if (root) j["root"] = *root;
    return j;
}

inline FrameDoc frame_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw error("frame JSON: expected an object");
    if (!j.contains("points") || !j["points"].is_array())
        throw error("frame JSON: missing 'points' array");
    std::vector<std::string> points;
    for (const auto& p : j["points"]) {
        if (!p.is_string()) throw error("frame JSON: points must be strings");
        points.push_back(p.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> edges;
    if (j.contains("edges")) {
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw error("frame JSON: each edge must be a [from, to] string pair");
            edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
    }
    ClosureMode mode = ClosureMode::ReflexiveTransitive;
    if (j.contains("closure")) {
        std::string c = j["closure"].get<std::string>();
        if (c == "none")
            mode = ClosureMode::None;
        else if (c == "reflexive-transitive")
            mode = ClosureMode::ReflexiveTransitive;
        else
            throw error("frame JSON: unknown closure mode '" + c + "'");
    }
    std::optional<std::string> root;
    if (j.contains("root")) root = j["root"].get<std::string>();
    Frame f(points, edges, mode);
    if (root) f.index(*root);  // validate
    return FrameDoc{std::move(f), std::move(root)};
}

inline FrameDoc frame_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw error(std::string("frame JSON parse error: ") + e.what());
    }
    return frame_from_json(j);
}

// DOT export: loops implied, cluster cycles drawn explicitly, strict edges
// transitively reduced (an edge is dropped when a strict two-step path
// through a third cluster exists).
inline std::string export_dot(const Frame& f, const std::string& name = "frame") {
    ClusterPartition p = clusters(f);
    std::string out = "digraph \"" + name + "\" {\n";
    auto quote = [](const std::string& s) { return "\"" + s + "\""; };
    for (int i = 0; i < f.size(); ++i) out += "  " + quote(f.id(i)) + ";\n";
    // intra-cluster cycles
    for (const auto& b : p.blocks) {
        if (b.size() < 2) continue;
        for (size_t i = 0; i < b.size(); ++i)
            out += "  " + quote(f.id(b[i])) + " -> " + quote(f.id(b[(i + 1) % b.size()])) +
                   ";\n";
    }
    // reduced skeleton edges between cluster representatives
    int nb = static_cast<int>(p.blocks.size());
    auto strict = [&](int a, int b) {
        int xa = p.blocks[a].front(), xb = p.blocks[b].front();
        return a != b && f.rel(xa, xb);
    };
    for (int a = 0; a < nb; ++a)
        for (int b = 0; b < nb; ++b) {
            if (!strict(a, b)) continue;
            bool redundant = false;
            for (int c = 0; c < nb && !redundant; ++c)
                if (c != a && c != b && strict(a, c) && strict(c, b)) redundant = true;
            if (!redundant)
                out += "  " + quote(f.id(p.blocks[a].front())) + " -> " +
                       quote(f.id(p.blocks[b].front())) + ";\n";
        }
    out += "}\n";
    return out;
}

}  // namespace tlk
