#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "tlk/catalog.hpp"

using namespace tlk;

TEST_CASE("chains and clusters") {
    Frame c3 = chain(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) REQUIRE(c3.rel(i, j) == (j <= i));
    REQUIRE(cluster_frame(0).size() == 1);
    REQUIRE(metrics(cluster_frame(2)).gir == 3);
    REQUIRE_THROWS_AS(chain(0), error);
    REQUIRE_THROWS_AS(cluster_frame(-1), error);
}

TEST_CASE("Ct frames") {
    REQUIRE(ct(CtType::Circ, 2).size() == 3);
    REQUIRE(ct(CtType::Plus, 1).size() == 3);
    REQUIRE(ct(CtType::Minus, 1).size() == 3);
    REQUIRE(ct(CtType::PlusMinus, 1).size() == 4);
    // the four types are pairwise non-isomorphic at every lambda
    for (int l = 1; l <= 2; ++l) {
        std::vector<CtType> ts = {CtType::Circ, CtType::Plus, CtType::Minus,
                                  CtType::PlusMinus};
        for (size_t i = 0; i < ts.size(); ++i)
            for (size_t j = i + 1; j < ts.size(); ++j)
                REQUIRE_FALSE(isomorphic(ct(ts[i], l), ct(ts[j], l)).has_value());
    }
    REQUIRE(ct_name(CtType::PlusMinus) == "+-");
    REQUIRE_THROWS_AS(ct(CtType::Plus, 0), error);
}

TEST_CASE("garlands, co-garlands, hoops") {
    REQUIRE(isomorphic(garland(0), chain(1)).has_value());
    REQUIRE(isomorphic(garland(1), chain(2)).has_value());
    REQUIRE(isomorphic(hoop(1), chain(2)).has_value());
    Frame g4 = garland(4);
    REQUIRE(g4.size() == 5);
    // odd points see their even neighbours and nothing else strictly
    REQUIRE(g4.rel(g4.index("1"), g4.index("0")));
    REQUIRE(g4.rel(g4.index("3"), g4.index("4")));
    REQUIRE_FALSE(g4.rel(g4.index("1"), g4.index("4")));
    REQUIRE_FALSE(g4.rel(g4.index("0"), g4.index("1")));

    Frame h3 = hoop(3);
    REQUIRE(h3.rel(h3.index("3"), h3.index("0")));
    REQUIRE_THROWS_AS(hoop(2), error);

    // windows are translation invariant
    REQUIRE(isomorphic(garland_window(2, 4), garland(2)).has_value());
    REQUIRE(isomorphic(garland_window(-2, 0), garland(2)).has_value());
    REQUIRE(isomorphic(garland_window(-1, 1), co_garland(2)).has_value());
}

TEST_CASE("preskeleton recognition") {
    auto d = recognize_preskeleton(tlk_test::f1());
    REQUIRE(d.has_value());
    REQUIRE(d->lambda == 1);
    REQUIRE(isomorphic(d->skeleton, tlk_test::s1()).has_value());
    // the marked point sits in the proper cluster
    Frame f1 = tlk_test::f1();
    REQUIRE(popcount(cluster_of(f1, f1.index(d->marked))) == 2);

    auto d2 = recognize_preskeleton(ct(CtType::Plus, 3));
    REQUIRE(d2.has_value());
    REQUIRE(d2->lambda == 3);

    REQUIRE_FALSE(recognize_preskeleton(chain(3)).has_value());
    // two proper clusters
    Frame two = build_frame({"a", "a2", "b", "b2"},
                            {{"a", "a2"}, {"a2", "a"}, {"b", "b2"}, {"b2", "b"}, {"a", "b"}});
    REQUIRE_FALSE(recognize_preskeleton(two).has_value());
}

TEST_CASE("c-irreducibility of the figure skeletons") {
    // fattening a maximal point of the 3-fan admits an extra image (the
    // 2-fan analogue), so it is reducible ...
    auto r1 = is_c_irreducible(tlk_test::s1(), "m1");
    REQUIRE_FALSE(r1.irreducible);
    REQUIRE(r1.witness.has_value());
    REQUIRE(isomorphic(*r1.witness, tlk_test::f2()).has_value());

    // ... while the 2-fan version is irreducible
    REQUIRE(is_c_irreducible(tlk_test::s2(), "m1").irreducible);

    // the four linear pre-skeleton types are irreducible
    REQUIRE(is_c_irreducible(chain(1), 0).irreducible);
    REQUIRE(is_c_irreducible(chain(2), 1).irreducible);
    REQUIRE(is_c_irreducible(chain(2), 0).irreducible);
    REQUIRE(is_c_irreducible(chain(3), 1).irreducible);

    REQUIRE_THROWS_AS(is_c_irreducible(cluster_frame(1), 0), error);
}

TEST_CASE("pretabularity report") {
    auto r = pretabularity_report(tlk_test::s2(), "m1");
    REQUIRE(r.rooted);
    REQUIRE(r.skeleton);
    REQUIRE(r.pretabular);

    auto r2 = pretabularity_report(tlk_test::s1(), "m1");
    REQUIRE_FALSE(r2.pretabular);
    REQUIRE(r2.witness.has_value());

    Frame two = disjoint_union({chain(1), chain(1)});
    REQUIRE_FALSE(pretabularity_report(two, 0).rooted);
    REQUIRE_FALSE(pretabularity_report(two, 0).pretabular);

    auto r3 = pretabularity_report(tlk_test::f1(), 0);
    REQUIRE_FALSE(r3.skeleton);
    REQUIRE_FALSE(r3.pretabular);
}

TEST_CASE("bounded-shape classification") {
    using Tag = Bs222Class::Tag;
    auto g = classify_bs222(garland(4));
    REQUIRE(g.tag == Tag::Garland);
    REQUIRE(g.n == 4);
    auto cg = classify_bs222(co_garland(2));
    REQUIRE(cg.tag == Tag::CoGarland);
    REQUIRE(cg.n == 2);
    auto h = classify_bs222(hoop(5));
    REQUIRE(h.tag == Tag::Hoop);
    REQUIRE(h.n == 5);
    REQUIRE(classify_bs222(chain(3)).tag == Tag::NotApplicable);
    REQUIRE(classify_bs222(cluster_frame(1)).tag == Tag::NotApplicable);
    REQUIRE(classify_bs222(disjoint_union({chain(1), chain(1)})).tag == Tag::NotApplicable);
}

TEST_CASE("linear classification") {
    using Tag = S43Class::Tag;
    auto c = classify_s43(chain(4));
    REQUIRE(c.tag == Tag::ChainType);
    REQUIRE(c.n == 4);
    for (CtType t : {CtType::Circ, CtType::Plus, CtType::Minus, CtType::PlusMinus}) {
        auto r = classify_s43(ct(t, 2));
        REQUIRE(r.tag == Tag::Ct);
        REQUIRE(r.ct == t);
    }
    REQUIRE(classify_s43(garland(2)).tag == Tag::NotApplicable);
    REQUIRE(classify_s43(disjoint_union({chain(1), chain(1)})).tag == Tag::NotApplicable);
}
