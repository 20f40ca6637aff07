#pragma once

#include <random>
#include <string>
#include <vector>

#include "tlk/catalog.hpp"
#include "tlk/formula.hpp"
#include "tlk/frame.hpp"

namespace tlk_test {

// The skeleton under F1: a root seeing three incomparable maximal points.
inline tlk::Frame s1() {
    return tlk::build_frame({"r", "m1", "m2", "m3"},
                            {{"r", "m1"}, {"r", "m2"}, {"r", "m3"}});
}

// The skeleton under F2: a root seeing two incomparable maximal points.
inline tlk::Frame s2() {
    return tlk::build_frame({"r", "m1", "m2"}, {{"r", "m1"}, {"r", "m2"}});
}

// Figure frames: root below a 2-cluster plus two / one extra maximal points.
inline tlk::Frame f1() { return tlk::preskeleton(s1(), "m1", 1); }
inline tlk::Frame f2() { return tlk::preskeleton(s2(), "m1", 1); }

// Seeded random closed frame with 1..max_points points.
inline tlk::Frame random_closed_frame(std::mt19937& rng, int max_points) {
    int n = 1 + static_cast<int>(rng() % max_points);
    std::vector<std::string> points;
    for (int i = 0; i < n; ++i) points.push_back(std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && rng() % 3 == 0) edges.emplace_back(points[i], points[j]);
    return tlk::Frame(points, edges, tlk::ClosureMode::ReflexiveTransitive);
}

// Seeded random formula over variables p0..p_{vars-1} with modal degree at
// most max_md.
inline tlk::Formula random_formula(std::mt19937& rng, int vars, int max_md, int depth = 4) {
    int pick = static_cast<int>(rng() % (depth <= 0 ? 2 : 7));
    switch (pick) {
        case 0: return tlk::f_false();
        case 1: return tlk::f_var(static_cast<int>(rng() % vars));
        case 2:
            return tlk::f_imp(random_formula(rng, vars, max_md, depth - 1),
                              random_formula(rng, vars, max_md, depth - 1));
        case 3:
        case 4: {
            if (max_md <= 0) return tlk::f_var(static_cast<int>(rng() % vars));
            auto sub = random_formula(rng, vars, max_md - 1, depth - 1);
            return pick == 3 ? tlk::f_box(sub) : tlk::f_pdia(sub);
        }
        case 5:
            return tlk::f_and(random_formula(rng, vars, max_md, depth - 1),
                              random_formula(rng, vars, max_md, depth - 1));
        default:
            return tlk::f_not(random_formula(rng, vars, max_md, depth - 1));
    }
}

}  // namespace tlk_test
