#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "loopwork/classify.hpp"
#include "loopwork/enumerate.hpp"
#include "loopwork/errors.hpp"
#include "loopwork/osborn.hpp"

using namespace loopwork;

TEST_SUITE("enumerate") {

TEST_CASE("reduced loop counts for small orders") {
    CHECK(count_loops(1) == 1);
    CHECK(count_loops(2) == 1);
    CHECK(count_loops(3) == 1);
    CHECK(count_loops(4) == 4);
    CHECK(count_loops(5) == 56);
}

TEST_CASE("order 6 count matches the published value") {
    CHECK(count_loops(6) == 9408);
}

TEST_CASE("enumerated loops are reduced and named by position") {
    std::vector<std::string> names;
    std::uint64_t seen = enumerate_loops(4, [&](const Loop& q) {
        names.push_back(q.name);
        CHECK(q.n == 4);
        CHECK(q.e == 0);
        for (int j = 0; j < 4; ++j) {
            CHECK(q.mul(0, j) == j);
            CHECK(q.mul(j, 0) == j);
        }
        return true;
    });
    CHECK(seen == 4);
    CHECK(names == std::vector<std::string>{"Q4.1", "Q4.2", "Q4.3", "Q4.4"});
}

TEST_CASE("every loop of order at most 4 is a group") {
    for (int n = 1; n <= 4; ++n)
        enumerate_loops(n, [](const Loop& q) {
            CHECK(is_associative(q));
            return true;
        });
}

TEST_CASE("order 4 enumeration hits both group tables") {
    const Loop& z4 = builtin_loop("Z4");
    const Loop& klein = builtin_loop("Z2xZ2");
    bool saw_z4 = false, saw_klein = false;
    enumerate_loops(4, [&](const Loop& q) {
        saw_z4 = saw_z4 || q.same_table(z4);
        saw_klein = saw_klein || q.same_table(klein);
        return true;
    });
    CHECK(saw_z4);
    CHECK(saw_klein);
}

TEST_CASE("a false visitor stops the walk") {
    std::uint64_t visited = 0;
    const std::uint64_t reported = enumerate_loops(5, [&](const Loop&) {
        ++visited;
        return visited < 3;
    });
    CHECK(visited == 3);
    CHECK(reported == 3);
}

TEST_CASE("orders outside the bound are refused") {
    CHECK_THROWS_AS(count_loops(0), MalformedError);
    CHECK_THROWS_AS(count_loops(8), BoundExceededError);
    CHECK_THROWS_WITH_AS(count_loops(8),
                         "loop enumeration capped at order 7, got 8 "
                         "(raise with --bound)",
                         BoundExceededError);
    CHECK_NOTHROW(count_loops(1, 1));
    CHECK_THROWS_AS(count_loops(2, 1), BoundExceededError);
    // The cap can be raised but never past the cell encoding.
    CHECK_THROWS_AS(count_loops(32, 40), BoundExceededError);
}

TEST_CASE("chein double of an abelian group is a group") {
    const Loop m = chein_double(builtin_loop("Z3"));
    CHECK(m.n == 6);
    CHECK(m.name == "M(Z3,2)");
    CHECK(is_associative(m));
}

TEST_CASE("chein double of S3 is the built-in Moufang loop") {
    const Loop m = chein_double(builtin_loop("S3"));
    CHECK(m.name == "M(S3,2)");
    CHECK(m.same_table(builtin_loop("M(S3,2)")));
    const Flags flags = classify(m);
    CHECK(flags.moufang);
    CHECK(!flags.group);
}

TEST_CASE("chein double refuses non-groups") {
    CHECK_THROWS_AS(chein_double(builtin_loop("N5")), NotAGroupError);
}

TEST_CASE("built-in catalog is fixed and ordered") {
    std::vector<std::string> names;
    for (const NamedLoop& entry : builtins()) names.push_back(entry.name);
    CHECK(names == std::vector<std::string>{"Z1", "Z2", "Z3", "Z4", "Z5", "Z6",
                                            "Z2xZ2", "Z2^3", "S3", "N5",
                                            "M(S3,2)"});
    CHECK(builtin_loop("Z2^3").n == 8);
    CHECK(builtin_loop("M(S3,2)").n == 12);
}

TEST_CASE("built-in lookup ignores case and reports the catalog") {
    CHECK(builtin_loop("z3").name == "Z3");
    CHECK(builtin_loop("m(s3,2)").name == "M(S3,2)");
    CHECK(is_builtin("s3"));
    CHECK(!is_builtin("Q4.1"));
    CHECK_THROWS_WITH_AS(builtin_loop("nope"),
                         "no built-in loop named 'nope' (known: Z1, Z2, Z3, "
                         "Z4, Z5, Z6, Z2xZ2, Z2^3, S3, N5, M(S3,2))",
                         UnknownLoopError);
}

TEST_CASE("N5 is the fixed table") {
    const Loop& n5 = builtin_loop("N5");
    const std::vector<int> cells{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 3, 4, 0, 1,
                                 3, 4, 1, 2, 0, 4, 2, 0, 1, 3};
    CHECK(n5.cells() == cells);
}

TEST_CASE("filters compile to predicates over the classifier") {
    const auto boolean = compile_filter("boolean_group");
    CHECK(boolean(builtin_loop("Z2xZ2")));
    CHECK(!boolean(builtin_loop("Z4")));

    const auto nonassoc_osborn = compile_filter("osborn & !group");
    CHECK(nonassoc_osborn(builtin_loop("M(S3,2)")));
    CHECK(!nonassoc_osborn(builtin_loop("S3")));
    CHECK(!nonassoc_osborn(builtin_loop("N5")));

    const auto spelled = compile_filter("osborn AND NOT group");
    CHECK(spelled(builtin_loop("M(S3,2)")));
    CHECK(!spelled(builtin_loop("S3")));

    const auto utf8 = compile_filter("osborn ∧ ¬group");
    CHECK(utf8(builtin_loop("M(S3,2)")));
    CHECK(!utf8(builtin_loop("Z6")));

    const auto either = compile_filter("boolean_group | cc");
    CHECK(either(builtin_loop("Z2xZ2")));
    CHECK(either(builtin_loop("Z5")));
    CHECK(!either(builtin_loop("N5")));

    const auto parens = compile_filter("(moufang OR cc) & !abelian");
    CHECK(parens(builtin_loop("S3")));
    CHECK(!parens(builtin_loop("Z3")));

    const auto uo = compile_filter("universal_osborn");
    CHECK(uo(builtin_loop("Z5")));
    CHECK(!uo(builtin_loop("N5")));
}

TEST_CASE("the empty filter accepts everything") {
    const auto all = compile_filter("");
    CHECK(all(builtin_loop("N5")));
    const auto blank = compile_filter("   ");
    CHECK(blank(builtin_loop("N5")));
}

TEST_CASE("malformed filters are rejected at compile time") {
    CHECK_THROWS_AS(compile_filter("nosuchflag"), BadFilterError);
    CHECK_THROWS_AS(compile_filter("group &"), BadFilterError);
    CHECK_THROWS_AS(compile_filter("(group"), BadFilterError);
    CHECK_THROWS_AS(compile_filter("group group"), BadFilterError);
    CHECK_THROWS_WITH_AS(compile_filter("frobnitz"),
                         "unknown flag 'frobnitz' in filter", BadFilterError);
    // A word alias never swallows the prefix of a flag name.
    CHECK_THROWS_AS(compile_filter("group & NOTHING"), BadFilterError);
}

TEST_CASE("corpus streams built-ins first, then enumerated tables") {
    std::vector<std::string> names;
    const std::uint64_t total = corpus("", 4, [&](const NamedLoop& entry) {
        names.push_back(entry.name);
        return true;
    });
    CHECK(total == 7);
    REQUIRE(names.size() == 7);
    CHECK(names[0] == "Z1");
    CHECK(names[1] == "Z2");
    CHECK(names[2] == "Z3");
    CHECK(names[3] == "Z4");
    CHECK(names[4] == "Z2xZ2");
    CHECK(names[5].substr(0, 3) == "Q4.");
    CHECK(names[6].substr(0, 3) == "Q4.");
}

TEST_CASE("corpus skips enumerated tables identical to a built-in") {
    const Loop& z4 = builtin_loop("Z4");
    const Loop& klein = builtin_loop("Z2xZ2");
    corpus("", 4, [&](const NamedLoop& entry) {
        if (entry.name.substr(0, 1) == "Q") {
            CHECK(!entry.loop.same_table(z4));
            CHECK(!entry.loop.same_table(klein));
        }
        return true;
    });
}

TEST_CASE("corpus counts at the frozen sizes") {
    const auto count_with = [](const std::string& filter, int max_order) {
        return corpus(filter, max_order,
                      [](const NamedLoop&) { return true; });
    };
    CHECK(count_with("", 5) == 63);
    CHECK(count_with("group", 4) == 7);
    CHECK(count_with("universal_osborn", 5) == 13);
}

TEST_CASE("the boolean group corpus up to order 4 is Z1, Z2, Z2xZ2") {
    std::vector<std::string> names;
    corpus("boolean_group", 4, [&](const NamedLoop& entry) {
        names.push_back(entry.name);
        return true;
    });
    CHECK(names == std::vector<std::string>{"Z1", "Z2", "Z2xZ2"});
}

TEST_CASE("a false corpus visitor stops the stream") {
    std::vector<std::string> names;
    const std::uint64_t emitted = corpus("", 6, [&](const NamedLoop& entry) {
        names.push_back(entry.name);
        return names.size() < 3;
    });
    CHECK(emitted == 3);
    CHECK(names == std::vector<std::string>{"Z1", "Z2", "Z3"});
}

}  // TEST_SUITE
