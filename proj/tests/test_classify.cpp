#include <string>
#include <vector>

#include "doctest.h"
#include "loopwork/classify.hpp"
#include "loopwork/enumerate.hpp"

using namespace loopwork;

namespace {

std::vector<std::string> flags_of(const std::string& name) {
    return classify(builtin_loop(name)).names();
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("flag catalog is fixed") {
    CHECK(Flags::all_names() ==
          std::vector<std::string>{"group", "abelian", "boolean_group",
                                   "moufang", "extra", "left_bol", "cc",
                                   "osborn"});
}

TEST_CASE("Z2xZ2 sets every flag") {
    CHECK(flags_of("Z2xZ2") == Flags::all_names());
    CHECK(flags_of("Z2^3") == Flags::all_names());
}

TEST_CASE("odd cyclic groups set everything except boolean_group") {
    const std::vector<std::string> expected{"group",    "abelian", "moufang",
                                            "extra",    "left_bol", "cc",
                                            "osborn"};
    CHECK(flags_of("Z3") == expected);
    CHECK(flags_of("Z5") == expected);
    CHECK(flags_of("Z6") == expected);
}

TEST_CASE("S3 is a nonabelian group") {
    CHECK(flags_of("S3") == std::vector<std::string>{"group", "moufang",
                                                     "extra", "left_bol", "cc",
                                                     "osborn"});
}

TEST_CASE("N5 sets nothing") {
    CHECK(flags_of("N5").empty());
}

TEST_CASE("the Chein double of S3 is Moufang but not a group") {
    CHECK(flags_of("M(S3,2)") ==
          std::vector<std::string>{"moufang", "left_bol", "osborn"});
}

TEST_CASE("associativity and commutativity helpers") {
    CHECK(is_associative(builtin_loop("Z6")));
    CHECK(!is_associative(builtin_loop("N5")));
    CHECK(!is_associative(builtin_loop("M(S3,2)")));
    CHECK(is_commutative(builtin_loop("Z6")));
    CHECK(!is_commutative(builtin_loop("S3")));
}

TEST_CASE("get looks flags up by name") {
    const Flags flags = classify(builtin_loop("S3"));
    CHECK(flags.get("group"));
    CHECK(!flags.get("abelian"));
    CHECK(flags.get("cc"));
}

}  // TEST_SUITE
