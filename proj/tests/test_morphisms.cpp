#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "tlk/catalog.hpp"
#include "tlk/morphism.hpp"

using namespace tlk;

TEST_CASE("check_tmorphism") {
    // the skeleton quotient is always a t-morphism
    for (const Frame& f : {tlk_test::f1(), tlk_test::f2(), ct(CtType::PlusMinus, 2)}) {
        auto sk = skeleton(f);
        REQUIRE(check_tmorphism(f, sk.frame, sk.map).ok);
    }

    // constant map on the 2-chain breaks the back condition at the bottom
    Frame c2 = chain(2);
    auto bad = check_tmorphism(c2, c2, {0, 0});
    REQUIRE_FALSE(bad.ok);
    REQUIRE(bad.point == c2.index("0"));
    REQUIRE_FALSE(bad.forth_failed);

    REQUIRE_THROWS_AS(check_tmorphism(c2, c2, {0}), error);
    REQUIRE_THROWS_AS(check_tmorphism(c2, c2, {0, -1}), error);
}

TEST_CASE("find_tmorphism_onto") {
    // collapsing two adjacent chain points
    auto m = find_tmorphism_onto(chain(3), chain(2));
    REQUIRE(m.has_value());
    REQUIRE(check_tmorphism(chain(3), chain(2), *m).ok);

    REQUIRE(find_tmorphism_onto(tlk_test::f1(), tlk_test::s1()).has_value());
    REQUIRE(find_tmorphism_onto(tlk_test::f2(), tlk_test::s2()).has_value());

    // a chain cannot map onto a proper cluster
    REQUIRE_FALSE(find_tmorphism_onto(chain(2), cluster_frame(1)).has_value());
    // and never onto something larger
    REQUIRE_FALSE(find_tmorphism_onto(chain(2), chain(3)).has_value());
    // s1 cannot map onto f2 (no cluster to produce)
    REQUIRE_FALSE(find_tmorphism_onto(tlk_test::s1(), tlk_test::f2()).has_value());
}

TEST_CASE("isomorphic") {
    REQUIRE(isomorphic(garland(3), co_garland(3)).has_value());  // odd garlands self-dual
    REQUIRE_FALSE(isomorphic(garland(2), co_garland(2)).has_value());
    REQUIRE_FALSE(isomorphic(hoop(3), garland(3)).has_value());

    // invariance under relabeling
    Frame a = build_frame({"x", "y", "z"}, {{"x", "y"}, {"x", "z"}});
    Frame b = build_frame({"u", "v", "w"}, {{"w", "v"}, {"w", "u"}});
    auto iso = isomorphic(a, b);
    REQUIRE(iso.has_value());
    REQUIRE((*iso)[a.index("x")] == b.index("w"));
}

TEST_CASE("enumerate_images") {
    // images of the 2-chain: itself and the point
    REQUIRE(enumerate_images(chain(2)).size() == 2);

    // images of F2: F2, its skeleton, the 2-chain, the point
    auto imgs = enumerate_images(tlk_test::f2());
    REQUIRE(imgs.size() == 4);
    int hits = 0;
    for (const auto& img : imgs) {
        if (isomorphic(img, tlk_test::f2())) ++hits;
        if (isomorphic(img, tlk_test::s2())) ++hits;
        if (isomorphic(img, chain(2))) ++hits;
        if (isomorphic(img, chain(1))) ++hits;
    }
    REQUIRE(hits == 4);

    // every reported image really is a t-morphic image
    for (const Frame& f : {tlk_test::f1(), hoop(3)})
        for (const auto& img : enumerate_images(f))
            REQUIRE(find_tmorphism_onto(f, img).has_value());

    REQUIRE_THROWS_AS(enumerate_images(garland(12)), error);
}

TEST_CASE("k-t-morphism identity") {
    std::mt19937 rng(17);
    for (int t = 0; t < 20; ++t) {
        Frame f = tlk_test::random_closed_frame(rng, 5);
        for (int x = 0; x < f.size(); ++x)
            for (int k = 1; k <= 2; ++k)
                REQUIRE(find_k_t_morphism(f, x, f, x, k).has_value());
    }
}

TEST_CASE("k-t-morphism between hoop and garland") {
    Frame h3 = hoop(3);
    Frame g3 = garland(3);

    // locally the hoop looks like the garland
    auto m1 = find_k_t_morphism(h3, "0", g3, "0", 1);
    REQUIRE(m1.has_value());
    REQUIRE(m1->map[h3.index("0")] == g3.index("0"));

    // but no point of H3 admits a 4-t-morphism to (G3, 0)
    for (int x = 0; x < h3.size(); ++x)
        REQUIRE_FALSE(find_k_t_morphism(h3, x, g3, g3.index("0"), 4).has_value());

    REQUIRE_THROWS_AS(find_k_t_morphism(h3, 0, g3, 0, 0), error);
}

TEST_CASE("sufficiency and fullness") {
    Frame c1 = chain(1);
    PartialMorphism id1{{0}};
    REQUIRE(is_sufficient(c1, 0, 1, id1, Mask(1)));
    REQUIRE(is_full(c1, 0, 1, id1, c1));

    Frame h3 = hoop(3);
    Frame g3 = garland(3);
    auto m = find_k_t_morphism(h3, "0", g3, "0", 1);
    REQUIRE(m.has_value());
    // {0} does not dominate its own one-step neighbourhood here
    REQUIRE_FALSE(is_sufficient(h3, h3.index("0"), 1, *m, Mask(1) << h3.index("0")));
    // the 1-ball image misses part of G3's component
    REQUIRE_FALSE(is_full(h3, h3.index("0"), 1, *m, g3));
    REQUIRE_THROWS_AS(is_sufficient(h3, h3.index("0"), 1, *m, h3.all_mask()), error);
}
