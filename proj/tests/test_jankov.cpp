#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "tlk/catalog.hpp"
#include "tlk/jankov.hpp"

using namespace tlk;

TEST_CASE("ball enumeration") {
    Frame g3 = garland(3);
    auto en = jankov_enumeration(g3, g3.index("0"), 2);
    REQUIRE(en == std::vector<int>{g3.index("0"), g3.index("1"), g3.index("2")});

    Frame c2 = chain(2);
    auto en2 = jankov_enumeration(c2, c2.index("1"), 1);
    REQUIRE(en2 == std::vector<int>{c2.index("1"), c2.index("0")});
}

TEST_CASE("formula shape") {
    Frame c2 = chain(2);
    for (int k = 1; k <= 2; ++k) {
        Formula j = jankov(c2, c2.index("1"), k);
        REQUIRE(modal_degree(j) == k);
        REQUIRE(variables(j) == std::set<int>{0, 1});
    }
    Frame g3 = garland(3);
    Formula j2 = jankov(g3, g3.index("0"), 2);
    REQUIRE(variables(j2) == std::set<int>{0, 1, 2});
    REQUIRE_THROWS_AS(jankov(g3, 0, 0), error);
}

TEST_CASE("refutation matches k-t-morphism existence") {
    std::vector<Frame> pool = {chain(1), chain(2), cluster_frame(1), garland(2), hoop(3)};
    std::mt19937 rng(19);
    for (int t = 0; t < 8; ++t) pool.push_back(tlk_test::random_closed_frame(rng, 3));

    for (const Frame& f : pool)
        for (const Frame& g : pool)
            for (int y = 0; y < g.size(); ++y)
                for (int k = 1; k <= 2; ++k)
                    for (int x = 0; x < f.size(); ++x) {
                        bool morph = find_k_t_morphism(f, x, g, y, k).has_value();
                        bool refuted = jankov_refuted(f, x, g, y, k);
                        REQUIRE(refuted == morph);
                    }
}

TEST_CASE("specific refutations") {
    Frame g3 = garland(3);
    REQUIRE(jankov_refuted(g3, g3.index("0"), g3, g3.index("0"), 1));  // identity
    // a reflexive point cannot simulate a proper cluster even to depth 1
    REQUIRE_FALSE(jankov_refuted(chain(1), 0, cluster_frame(1), 0, 1));
}
