#include <string>
#include <vector>

#include "doctest.h"
#include "loopwork/enumerate.hpp"
#include "loopwork/errors.hpp"
#include "loopwork/theorems.hpp"

using namespace loopwork;

namespace {

const json* find_clause(const Certificate& cert, const std::string& name) {
    for (const json& clause : cert.clauses)
        if (clause["name"] == name) return &clause;
    return nullptr;
}

}  // namespace

TEST_SUITE("theorems") {

TEST_CASE("the statement catalog is fixed") {
    CHECK(theorem_names() ==
          std::vector<std::string>{
              "2post1.10", "2post1.11", "2post1.11b", "2post1.12", "2post1.13",
              "2post1.14", "2post1.15", "2post1.16", "2post1.17", "2post1.17b",
              "2post1.17c", "2post1.18", "2post1.19", "2post1.20", "2post1.21",
              "remark.commutator"});
    CHECK_THROWS_AS(check_theorem(builtin_loop("Z3"), "2post1.99"),
                    MalformedError);
}

TEST_CASE("every statement passes on Z3") {
    for (const std::string& name : theorem_names()) {
        CAPTURE(name);
        const Certificate cert = check_theorem(builtin_loop("Z3"), name);
        CHECK(cert.pass);
        CHECK(cert.check == "theorem." + name);
        CHECK(cert.loop == "Z3");
    }
}

TEST_CASE("every statement except 2post1.18 passes on S3") {
    for (const std::string& name : theorem_names()) {
        CAPTURE(name);
        const Certificate cert = check_theorem(builtin_loop("S3"), name);
        CHECK(cert.pass == (name != "2post1.18"));
    }
}

TEST_CASE("statements with a universal Osborn hypothesis refuse N5") {
    for (const std::string& name : theorem_names()) {
        CAPTURE(name);
        if (name == "2post1.17c" || name == "2post1.21") {
            CHECK_NOTHROW(check_theorem(builtin_loop("N5"), name));
        } else {
            CHECK_THROWS_AS(check_theorem(builtin_loop("N5"), name),
                            HypothesisFailedError);
        }
    }
}

TEST_CASE("2post1.10 records the boolean-group equivalence") {
    const Certificate good = check_theorem(builtin_loop("Z2xZ2"), "2post1.10");
    CHECK(good.pass);
    REQUIRE(good.clauses.size() == 3);
    CHECK(good.clauses[0]["name"] == "identity-iso(o0,o1)");
    CHECK(good.clauses[0]["pass"] == true);
    CHECK(good.clauses[1]["name"] == "identity-iso(s0,s1)");
    CHECK(good.clauses[1]["pass"] == true);
    CHECK(good.clauses[2]["name"] == "boolean-group");
    CHECK(good.clauses[2]["pass"] == true);

    // On Z3 all three come out false together, so the statement still passes;
    // the first parameter point where the identity map fails is recorded.
    const Certificate z3 = check_theorem(builtin_loop("Z3"), "2post1.10");
    CHECK(z3.pass);
    const json* iso = find_clause(z3, "identity-iso(o0,o1)");
    REQUIRE(iso != nullptr);
    CHECK((*iso)["pass"] == false);
    CHECK((*iso)["witness"]["x"] == 0);
    CHECK((*iso)["witness"]["u"] == 1);
    CHECK((*iso)["witness"]["v"] == 0);
    CHECK(find_clause(z3, "boolean-group")->at("pass") == false);
}

TEST_CASE("2post1.10 identity-map clause fails first at (0,3,0) on S3") {
    const Certificate cert = check_theorem(builtin_loop("S3"), "2post1.10");
    CHECK(cert.pass);
    const json* iso = find_clause(cert, "identity-iso(o0,o1)");
    REQUIRE(iso != nullptr);
    CHECK((*iso)["pass"] == false);
    CHECK((*iso)["witness"]["x"] == 0);
    CHECK((*iso)["witness"]["u"] == 3);
    CHECK((*iso)["witness"]["v"] == 0);
}

TEST_CASE("2post1.15 composes the gamma words at every p") {
    for (const char* name : {"Z2", "Z3", "Z4", "Z2xZ2", "S3"}) {
        CAPTURE(name);
        CHECK(check_theorem(builtin_loop(name), "2post1.15").pass);
    }
}

TEST_CASE("2post1.16 lists seven clauses on a boolean group") {
    const Certificate cert = check_theorem(builtin_loop("Z2xZ2"), "2post1.16");
    CHECK(cert.pass);
    const std::vector<std::string> expected{
        "beta=I",  "gamma=I", "delta=I", "pi=I", "identity-iso(o0,o1)",
        "identity-iso(s0,s1)", "boolean-group"};
    REQUIRE(cert.clauses.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(cert.clauses[i]["name"] == expected[i]);
        CHECK(cert.clauses[i]["pass"] == true);
    }
}

TEST_CASE("2post1.18 holds on Z3 and Z4 but fails on S3") {
    CHECK(check_theorem(builtin_loop("Z3"), "2post1.18").pass);
    CHECK(check_theorem(builtin_loop("Z4"), "2post1.18").pass);
    const Certificate cert = check_theorem(builtin_loop("S3"), "2post1.18");
    CHECK(!cert.pass);
    REQUIRE(!cert.clauses.empty());
    CHECK(cert.clauses[0]["name"] == "p(0,0,1)");
    CHECK(cert.clauses[0]["witness"]["isomorphism"] == true);
    CHECK(cert.clauses[0]["witness"]["criterion"] == false);
    const json summary = cert.clauses[cert.clauses.size() - 1];
    CHECK(summary["name"] == "all-p");
    CHECK(summary["witness"]["checked"] == 216);
    CHECK(summary["witness"]["failed"] == 180);
}

TEST_CASE("2post1.17c carries its hypothesis as a clause") {
    const Certificate s3 = check_theorem(builtin_loop("S3"), "2post1.17c");
    CHECK(s3.pass);
    const json* item1 = find_clause(s3, "item1");
    REQUIRE(item1 != nullptr);
    CHECK((*item1)["pass"] == true);
    const Certificate n5 = check_theorem(builtin_loop("N5"), "2post1.17c");
    CHECK(n5.pass);
}

TEST_CASE("2post1.21 is vacuous on non universal Osborn loops") {
    const Certificate cert = check_theorem(builtin_loop("N5"), "2post1.21");
    CHECK(cert.pass);
    const json* hyp = find_clause(cert, "universal-osborn");
    REQUIRE(hyp != nullptr);
    CHECK((*hyp)["pass"] == false);
}

TEST_CASE("remark.commutator passes on every small group") {
    for (const char* name : {"Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ2", "S3"}) {
        CAPTURE(name);
        CHECK(check_theorem(builtin_loop(name), "remark.commutator").pass);
    }
}

TEST_CASE("certificates are deterministic across runs") {
    const Certificate a = check_theorem(builtin_loop("S3"), "2post1.18");
    const Certificate b = check_theorem(builtin_loop("S3"), "2post1.18");
    CHECK(a.to_json().dump(2) == b.to_json().dump(2));
    OsbornOptions opts;
    opts.jobs = 3;
    const Certificate c = check_theorem(builtin_loop("S3"), "2post1.18", opts);
    CHECK(a.to_json().dump(2) == c.to_json().dump(2));
}

TEST_CASE("parameters are recorded in the certificate") {
    OsbornOptions opts;
    opts.gamma1 = Gamma1Variant::printed;
    opts.phi1 = Phi1Variant::printed;
    const Certificate cert =
        check_theorem(builtin_loop("Z2xZ2"), "2post1.15", opts);
    CHECK(cert.params["gamma1"] == "printed");
    CHECK(cert.params["phi1"] == "printed");
}

}  // TEST_SUITE
