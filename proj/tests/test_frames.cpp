#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "tlk/catalog.hpp"
#include "tlk/frame.hpp"

using namespace tlk;

TEST_CASE("build_frame closes the relation") {
    Frame c2 = build_frame({"0", "1"}, {{"1", "0"}});
    REQUIRE(c2.rel(c2.index("0"), c2.index("0")));
    REQUIRE(c2.rel(c2.index("1"), c2.index("1")));
    REQUIRE(c2.rel(c2.index("1"), c2.index("0")));
    REQUIRE_FALSE(c2.rel(c2.index("0"), c2.index("1")));

    Frame c1 = build_frame({"0"}, {});
    REQUIRE(c1.rel(0, 0));
}

TEST_CASE("build_frame rejects bad input") {
    REQUIRE_THROWS_AS(build_frame({"a", "a"}, {}), error);
    REQUIRE_THROWS_AS(build_frame({"a"}, {{"a", "z"}}), error);
}

TEST_CASE("zigzag balls") {
    Frame g3 = garland(3);
    Frame h3 = hoop(3);
    REQUIRE(zigzag_ball(g3, g3.index("0"), 0) == (Mask(1) << g3.index("0")));
    // H3: ball of radius 1 around 0 is {0,1,3}
    Mask b = zigzag_ball(h3, h3.index("0"), 1);
    REQUIRE(mask_to_indices(b).size() == 3);
    REQUIRE(has_bit(b, h3.index("0")));
    REQUIRE(has_bit(b, h3.index("1")));
    REQUIRE(has_bit(b, h3.index("3")));
    // G3: ball of radius 2 around 0 is {0,1,2}
    Mask b2 = zigzag_ball(g3, g3.index("0"), 2);
    REQUIRE(b2 == ((Mask(1) << g3.index("0")) | (Mask(1) << g3.index("1")) |
                   (Mask(1) << g3.index("2"))));
    REQUIRE_THROWS_AS(zigzag_ball(g3, "9", 1), error);
}

TEST_CASE("monotone balls stabilize") {
    std::mt19937 rng(7);
    for (int t = 0; t < 30; ++t) {
        Frame f = tlk_test::random_closed_frame(rng, 5);
        for (int x = 0; x < f.size(); ++x) {
            Mask prev = zigzag_ball(f, x, 0);
            for (int n = 1; n <= f.size() + 1; ++n) {
                Mask cur = zigzag_ball(f, x, n);
                REQUIRE((prev & ~cur) == 0);
                if (cur == prev) {
                    REQUIRE(cur == zigzag_ball(f, x, -1));
                    break;
                }
                prev = cur;
            }
        }
    }
}

TEST_CASE("clusters") {
    Frame c2 = chain(2);
    auto p = clusters(c2);
    REQUIRE(p.blocks.size() == 2);

    Frame cl3 = cluster_frame(2);
    auto p2 = clusters(cl3);
    REQUIRE(p2.blocks.size() == 1);
    REQUIRE(p2.blocks[0].size() == 3);

    // figure frame F1: one 2-block, the rest singletons
    auto p3 = clusters(tlk_test::f1());
    int two_blocks = 0, singletons = 0;
    for (const auto& b : p3.blocks)
        (b.size() == 2 ? two_blocks : singletons)++;
    REQUIRE(two_blocks == 1);
    REQUIRE(singletons == 3);
}

TEST_CASE("skeleton") {
    auto sk = skeleton(cluster_frame(2));
    REQUIRE(sk.frame.size() == 1);

    auto sk2 = skeleton(sk.frame);
    REQUIRE(sk2.frame.size() == sk.frame.size());
    for (int i = 0; i < sk2.frame.size(); ++i) REQUIRE(sk2.map[i] == i);

    // F1 collapses to its 4-point skeleton (root with three maximal points)
    auto sk3 = skeleton(tlk_test::f1());
    REQUIRE(sk3.frame.size() == 4);
    REQUIRE(isomorphic(sk3.frame, tlk_test::s1()).has_value());
    REQUIRE(metrics(sk3.frame).gir == 1);
}

TEST_CASE("metrics of catalog frames") {
    FrameMetrics c3 = metrics(chain(3));
    REQUIRE(c3.dep == 3);
    REQUIRE(c3.widF == 1);
    REQUIRE(c3.widB == 1);
    REQUIRE(c3.zdg == 1);  // every ball stabilizes after one zigzag step
    REQUIRE(c3.gir == 1);

    FrameMetrics g3 = metrics(garland(3));
    REQUIRE(g3.dep == 2);
    REQUIRE(g3.widF == 2);
    REQUIRE(g3.widB == 2);
    REQUIRE(g3.zdg == 3);
    REQUIRE(g3.gir == 1);

    FrameMetrics h3 = metrics(hoop(3));
    REQUIRE(h3.dep == 2);
    REQUIRE(h3.widF == 2);
    REQUIRE(h3.widB == 2);
    REQUIRE(h3.zdg == 2);
    REQUIRE(h3.gir == 1);
}

TEST_CASE("generated and induced subframes") {
    Frame g3 = garland(3);
    REQUIRE(isomorphic(generated_subframe(g3, 0), g3).has_value());

    Frame two = disjoint_union({chain(1), chain(1)});
    REQUIRE(generated_subframe(two, 0).size() == 1);
    REQUIRE_FALSE(is_rooted(two));
    REQUIRE(is_rooted(g3));

    REQUIRE(isomorphic(induced_subframe(g3, {"0", "1", "2"}), garland(2)).has_value());
    REQUIRE(isomorphic(induced_subframe(hoop(3), {"0"}), chain(1)).has_value());
    Frame g3b = induced_subframe(g3, g3.all_mask());
    REQUIRE(isomorphic(g3b, g3).has_value());
    REQUIRE_THROWS_AS(induced_subframe(g3, Mask(0)), error);

    // hoops are rooted from every point
    Frame h5 = hoop(5);
    for (int x = 0; x < h5.size(); ++x)
        REQUIRE(zigzag_ball(h5, x, -1) == h5.all_mask());
}

TEST_CASE("disjoint union and inverse") {
    Frame two = disjoint_union({chain(1), chain(1)});
    REQUIRE(two.size() == 2);
    int edge_count = 0;
    for (const auto& e : two.edge_list()) {
        REQUIRE(e.first == e.second);
        ++edge_count;
    }
    REQUIRE(edge_count == 2);
    REQUIRE_THROWS_AS(disjoint_union({}), error);

    REQUIRE(isomorphic(inverse(garland(2)), co_garland(2)).has_value());
    std::mt19937 rng(11);
    for (int t = 0; t < 20; ++t) {
        Frame f = tlk_test::random_closed_frame(rng, 5);
        Frame ff = inverse(inverse(f));
        for (int i = 0; i < f.size(); ++i)
            for (int j = 0; j < f.size(); ++j) REQUIRE(f.rel(i, j) == ff.rel(i, j));
        // inverse swaps forth and back widths pointwise
        FrameMetrics m = metrics(f), mi = metrics(inverse(f));
        for (int i = 0; i < f.size(); ++i) {
            REQUIRE(m.per_point[i].widF == mi.per_point[i].widB);
            REQUIRE(m.per_point[i].widB == mi.per_point[i].widF);
        }
    }
}

TEST_CASE("closure idempotence") {
    std::mt19937 rng(13);
    for (int t = 0; t < 20; ++t) {
        Frame f = tlk_test::random_closed_frame(rng, 5);
        Frame g(f.ids(), f.edge_list(), ClosureMode::ReflexiveTransitive);
        for (int i = 0; i < f.size(); ++i)
            for (int j = 0; j < f.size(); ++j) REQUIRE(f.rel(i, j) == g.rel(i, j));
    }
}

TEST_CASE("preskeleton") {
    Frame cl = preskeleton(chain(1), 0, 2);
    REQUIRE(cl.size() == 3);
    REQUIRE(metrics(cl).gir == 3);

    // fattening the top (seeing) point of the 2-chain gives C+, the bottom C-
    REQUIRE(isomorphic(preskeleton(chain(2), 1, 1), ct(CtType::Plus, 1)).has_value());
    REQUIRE(isomorphic(preskeleton(chain(2), 0, 1), ct(CtType::Minus, 1)).has_value());
    REQUIRE_FALSE(isomorphic(ct(CtType::Plus, 1), ct(CtType::Minus, 1)).has_value());

    // dep/wid/zdg are preserved under cluster fattening
    for (const Frame& f : {chain(3), garland(3), tlk_test::s1()}) {
        FrameMetrics m = metrics(f);
        for (int x = 0; x < f.size(); ++x) {
            FrameMetrics mf = metrics(preskeleton(f, x, 2));
            REQUIRE(mf.dep == m.dep);
            REQUIRE(mf.widF == m.widF);
            REQUIRE(mf.widB == m.widB);
            REQUIRE(mf.zdg == m.zdg);
        }
    }
    REQUIRE_THROWS_AS(preskeleton(cluster_frame(1), 0, 1), error);
    REQUIRE_THROWS_AS(preskeleton(chain(1), 0, 0), error);
}

TEST_CASE("point cap") {
    std::vector<std::string> pts;
    for (int i = 0; i < 65; ++i) pts.push_back(std::to_string(i));
    REQUIRE_THROWS_AS(Frame(pts, {}, ClosureMode::None), error);
}
