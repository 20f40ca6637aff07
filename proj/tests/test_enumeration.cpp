#include <catch2/catch_amalgamated.hpp>

#include "tlk/catalog.hpp"
#include "tlk/enumerate.hpp"
#include "tlk/morphism.hpp"

using namespace tlk;

TEST_CASE("preorder counts") {
    // preorders up to isomorphism: 1, 3, 9, 33, 139
    EnumSpec spec;
    spec.max_points = 5;
    auto all = enumerate_frames(spec);
    std::map<int, int> by_size;
    for (const auto& f : all) ++by_size[f.size()];
    REQUIRE(by_size[1] == 1);
    REQUIRE(by_size[2] == 3);
    REQUIRE(by_size[3] == 9);
    REQUIRE(by_size[4] == 33);
    REQUIRE(by_size[5] == 139);
    REQUIRE(all.size() == 185);
    REQUIRE_THROWS_AS(enumerate_frames({.max_points = 6}), error);
}

TEST_CASE("poset counts under the girth filter") {
    // partial orders up to isomorphism: 1, 2, 5, 16
    EnumSpec spec;
    spec.max_points = 4;
    spec.gir = 1;
    auto posets = enumerate_frames(spec);
    REQUIRE(posets.size() == 1 + 2 + 5 + 16);
    for (const auto& f : posets) REQUIRE(metrics(f).gir == 1);
}

TEST_CASE("filters and determinism") {
    EnumSpec spec;
    spec.max_points = 3;
    spec.rooted_only = true;
    spec.dep = 2;
    auto out = enumerate_frames(spec);
    for (const auto& f : out) {
        REQUIRE(is_rooted(f));
        REQUIRE(metrics(f).dep <= 2);
    }
    // no duplicates up to isomorphism
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
            REQUIRE_FALSE(isomorphic(out[i], out[j]).has_value());
    // identical run is bit-for-bit identical
    auto again = enumerate_frames(spec);
    REQUIRE(again.size() == out.size());
    for (size_t i = 0; i < out.size(); ++i)
        REQUIRE(out[i].edge_list() == again[i].edge_list());
}

TEST_CASE("known frames appear") {
    EnumSpec spec;
    spec.max_points = 4;
    auto all = enumerate_frames(spec);
    int hits = 0;
    for (const auto& f : all) {
        if (f.size() == 3 && isomorphic(f, chain(3))) ++hits;
        if (f.size() == 3 && isomorphic(f, cluster_frame(2))) ++hits;
        if (f.size() == 4 && isomorphic(f, hoop(3))) ++hits;
        if (f.size() == 4 && isomorphic(f, garland(3))) ++hits;
    }
    REQUIRE(hits == 4);
}
