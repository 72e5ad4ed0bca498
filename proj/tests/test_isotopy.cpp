#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "doctest.h"
#include "loopwork/enumerate.hpp"
#include "loopwork/errors.hpp"
#include "loopwork/isotopy.hpp"

using namespace loopwork;

TEST_SUITE("isotopy") {

TEST_CASE("the trivial principal isotope is the loop itself") {
    for (const char* name : {"Z4", "S3", "N5"}) {
        const Loop& loop = builtin_loop(name);
        CHECK(principal_isotope(loop, loop.e, loop.e).same_table(loop));
    }
}

TEST_CASE("principal isotopes are pinned on Z3") {
    const Loop& z3 = builtin_loop("Z3");
    // x o y = (x/g) + (f\y) = x - g + y - f mod 3, identity f+g.
    const Loop q01 = principal_isotope(z3, 0, 1);
    CHECK(q01.cells() == std::vector<int>{2, 0, 1, 0, 1, 2, 1, 2, 0});
    CHECK(q01.e == 1);
    const Loop q02 = principal_isotope(z3, 0, 2);
    CHECK(q02.cells() == std::vector<int>{1, 2, 0, 2, 0, 1, 0, 1, 2});
    CHECK(q02.e == 2);
}

TEST_CASE("the definitional triple carries the loop onto each isotope") {
    for (const char* name : {"Z5", "S3", "N5"}) {
        const Loop& loop = builtin_loop(name);
        for (int f = 0; f < loop.n; ++f)
            for (int g = 0; g < loop.n; ++g) {
                const Loop q = principal_isotope(loop, f, g);
                const IsoTriple t{loop.right_translation(g),
                                  loop.left_translation(f),
                                  identity_perm(loop.n)};
                CHECK(is_isotopism(t, loop, q));
            }
    }
}

TEST_CASE("is_isotopism rejects mismatched orders") {
    const IsoTriple t{identity_perm(3), identity_perm(3), identity_perm(3)};
    CHECK_THROWS_AS(is_isotopism(t, builtin_loop("Z3"), builtin_loop("Z4")),
                    OrderMismatchError);
}

TEST_CASE("autotopism group sizes are pinned") {
    CHECK(autotopisms(builtin_loop("Z1")).size() == 1);
    CHECK(autotopisms(builtin_loop("Z2")).size() == 4);
    CHECK(autotopisms(builtin_loop("Z3")).size() == 18);
    CHECK(autotopisms(builtin_loop("Z4")).size() == 32);
    CHECK(autotopisms(builtin_loop("Z2xZ2")).size() == 96);
    CHECK(autotopisms(builtin_loop("S3")).size() == 216);
    CHECK(autotopisms(builtin_loop("N5")).size() == 12);
}

TEST_CASE("pruned enumeration agrees with the brute-force scan up to order 4") {
    for (const char* name : {"Z1", "Z2", "Z3", "Z4", "Z2xZ2"}) {
        CAPTURE(name);
        const Loop& loop = builtin_loop(name);
        const auto fast = autotopisms(loop);
        const auto slow = autotopisms_unpruned(loop);
        CHECK(fast == slow);
    }
}

TEST_CASE("autotopisms form a group containing the identity triple") {
    const Loop& n5 = builtin_loop("N5");
    const auto group = autotopisms(n5);
    const IsoTriple id{identity_perm(5), identity_perm(5), identity_perm(5)};
    CHECK(std::find(group.begin(), group.end(), id) != group.end());
    for (const IsoTriple& s : group) {
        const IsoTriple inv{inverse(s.a), inverse(s.b), inverse(s.c)};
        CHECK(std::find(group.begin(), group.end(), inv) != group.end());
        for (const IsoTriple& t : group) {
            const IsoTriple st{compose(s.a, t.a), compose(s.b, t.b),
                               compose(s.c, t.c)};
            CHECK(is_autotopism(n5, st));
        }
    }
}

TEST_CASE("autotopisms_with_third recovers the full fibre") {
    const Loop& z3 = builtin_loop("Z3");
    const auto group = autotopisms(z3);
    for (const IsoTriple& t : group) {
        const auto fibre = autotopisms_with_third(z3, t.c);
        bool found = false;
        for (const auto& [a, b] : fibre) {
            CHECK(is_autotopism(z3, IsoTriple{a, b, t.c}));
            if (a == t.a && b == t.b) found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("regularity of translations in a group") {
    const Loop& z4 = builtin_loop("Z4");
    const Perm r1 = z4.right_translation(1);
    const Regularity reg = regularity(z4, r1);
    CHECK(reg.autotopic);
    CHECK(reg.lambda_regular);
    CHECK(reg.rho_regular);
}

TEST_CASE("find_isomorphism is deterministic and correct on Z3 isotopes") {
    const Loop& z3 = builtin_loop("Z3");
    const Loop q02 = principal_isotope(z3, 0, 2);
    const Loop q01 = principal_isotope(z3, 0, 1);
    const auto theta = find_isomorphism(q02, q01);
    REQUIRE(theta);
    CHECK(*theta == Perm{2, 0, 1});
    CHECK(is_isomorphism(*theta, q02, q01));
}

TEST_CASE("find_isomorphism returns the identity for equal loops") {
    const Loop& s3 = builtin_loop("S3");
    const auto theta = find_isomorphism(s3, s3);
    REQUIRE(theta);
    CHECK(*theta == identity_perm(6));
}

TEST_CASE("Z2xZ2 and Z4 are not isomorphic") {
    CHECK(!find_isomorphism(builtin_loop("Z2xZ2"), builtin_loop("Z4")));
    CHECK_THROWS_AS(find_isomorphism(builtin_loop("Z3"), builtin_loop("Z4")),
                    OrderMismatchError);
}

TEST_CASE("drisko finds an autotopism matching the pair transport") {
    const Loop& z3 = builtin_loop("Z3");
    const auto t = drisko(z3, 0, 2, 0, 1);
    REQUIRE(t);
    CHECK(is_autotopism(z3, *t));
    CHECK(t->a[0] == 0);
    CHECK(t->b[2] == 1);
    CHECK(t->c[z3.mul(0, 2)] == z3.mul(0, 1));
}

TEST_CASE("the identity triple qualifies when both pairs agree") {
    const Loop& n5 = builtin_loop("N5");
    const auto t = drisko(n5, 1, 3, 1, 3);
    REQUIRE(t);
    CHECK(is_autotopism(n5, *t));
}

TEST_CASE("drisko_all lists only matching autotopisms") {
    const Loop& z3 = builtin_loop("Z3");
    const auto all = drisko_all(z3, 0, 2, 0, 1);
    CHECK(!all.empty());
    for (const IsoTriple& t : all) {
        CHECK(is_autotopism(z3, t));
        CHECK(t.a[0] == 0);
        CHECK(t.b[2] == 1);
        CHECK(t.c[2] == 1);
    }
    // 18 autotopisms, transitive on the 9 (c,d) targets: the fibre has 2.
    CHECK(all.size() == 2);
}

TEST_CASE("the isomorphism constructor lands in the autotopism group") {
    const Loop& z3 = builtin_loop("Z3");
    const Loop q02 = principal_isotope(z3, 0, 2);
    const Loop q01 = principal_isotope(z3, 0, 1);
    const auto theta = find_isomorphism(q02, q01);
    REQUIRE(theta);
    const IsoTriple t = drisko_from_isomorphism(z3, 0, 2, 0, 1, *theta);
    CHECK(is_autotopism(z3, t));
    CHECK(t.c == *theta);
}

TEST_CASE("drisko agrees with find_isomorphism on every order-4 tuple") {
    enumerate_loops(4, [](const Loop& loop) {
        for (int f = 0; f < 4; ++f)
            for (int g = 0; g < 4; ++g)
                for (int c = 0; c < 4; ++c)
                    for (int d = 0; d < 4; ++d) {
                        const bool via_drisko =
                            drisko(loop, f, g, c, d).has_value();
                        const bool via_iso =
                            find_isomorphism(principal_isotope(loop, f, g),
                                             principal_isotope(loop, c, d))
                                .has_value();
                        CHECK(via_drisko == via_iso);
                    }
        return true;
    });
}

TEST_CASE("bryant_schneider_identity_test matches the identity-map check") {
    const Loop& z3 = builtin_loop("Z3");
    CHECK(bryant_schneider_identity_test(z3, 1, 2, 1, 2));
    CHECK(!bryant_schneider_identity_test(z3, 0, 2, 0, 1));
    for (const char* name : {"Z4", "N5"}) {
        const Loop& loop = builtin_loop(name);
        for (int a = 0; a < loop.n; ++a)
            for (int b = 0; b < loop.n; ++b)
                for (int c = 0; c < loop.n; ++c)
                    for (int d = 0; d < loop.n; ++d) {
                        const IsoTriple id{identity_perm(loop.n),
                                           identity_perm(loop.n),
                                           identity_perm(loop.n)};
                        const bool direct =
                            is_isotopism(id, principal_isotope(loop, a, b),
                                         principal_isotope(loop, c, d));
                        CHECK(bryant_schneider_identity_test(loop, a, b, c, d) ==
                              direct);
                    }
    }
}

TEST_CASE("groups are G-loops, N5 is not") {
    CHECK(is_g_loop(builtin_loop("Z3")).pass);
    CHECK(is_g_loop(builtin_loop("Z2xZ2")).pass);
    CHECK(is_g_loop(builtin_loop("S3")).pass);
    const GLoopResult r = is_g_loop(builtin_loop("N5"));
    CHECK(!r.pass);
    CHECK(r.witness == std::array<int, 2>{0, 1});
}

TEST_CASE("every permutation of three points sits in BS2 of Z3") {
    const Loop& z3 = builtin_loop("Z3");
    const std::vector<std::pair<Perm, std::array<int, 4>>> expected{
        {{0, 1, 2}, {0, 0, 0, 0}}, {{0, 2, 1}, {0, 0, 0, 0}},
        {{1, 0, 2}, {0, 0, 0, 1}}, {{1, 2, 0}, {0, 0, 0, 1}},
        {{2, 0, 1}, {0, 0, 0, 2}}, {{2, 1, 0}, {0, 0, 0, 2}},
    };
    for (const auto& [theta, evidence] : expected) {
        CAPTURE(perm_to_string(theta));
        const auto found = bs2_contains(z3, theta);
        REQUIRE(found);
        CHECK(*found == evidence);
        CHECK(is_isomorphism(theta,
                             principal_isotope(z3, (*found)[0], (*found)[1]),
                             principal_isotope(z3, (*found)[2], (*found)[3])));
    }
}

TEST_CASE("bs2 membership is closed under composition on Z3") {
    const Loop& z3 = builtin_loop("Z3");
    std::vector<Perm> members;
    std::vector<int> points{0, 1, 2};
    do {
        if (bs2_contains(z3, points)) members.push_back(points);
    } while (std::next_permutation(points.begin(), points.end()));
    CHECK(members.size() == 6);
    for (const Perm& p : members)
        for (const Perm& q : members)
            CHECK(bs2_contains(z3, compose(p, q)).has_value());
}

TEST_CASE("bs2 refuses loops above the bound") {
    CHECK_THROWS_AS(bs2_contains(builtin_loop("M(S3,2)"), identity_perm(12)),
                    BoundExceededError);
    CHECK(bs2_contains(builtin_loop("M(S3,2)"), identity_perm(12), 12)
              .has_value());
}

TEST_CASE("autotopism enumeration refuses loops above the bound") {
    CHECK_THROWS_AS(autotopisms(builtin_loop("M(S3,2)"), 8),
                    BoundExceededError);
    CHECK_THROWS_AS(is_g_loop(builtin_loop("M(S3,2)"), 8).pass,
                    BoundExceededError);
}

}  // TEST_SUITE
