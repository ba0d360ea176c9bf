#include <catch_amalgamated.hpp>

#include "pnm/suites.hpp"

using namespace pnm;

TEST_CASE("surjections parse from 1-based value lists") {
    auto s = parse_surjection(3, "1,2,1");
    CHECK(s.n == 3);
    CHECK(s.m == 2);
    CHECK(s.s == std::vector<int>{0, 1, 0});
    CHECK_THROWS_AS(parse_surjection(2, "1,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_surjection(3, "1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_surjection(1, "0"), std::invalid_argument);
}

TEST_CASE("reports carry law, status, witnesses, seed and timings with sorted keys") {
    MonadSuiteConfig c;
    c.n = 1;
    c.dims = 1;
    c.seed = 99;
    c.functors = {"identity", "zero"};
    auto rep = run_verify_monad(c);
    for (const char* k : {"law", "status", "witnesses", "seed", "timings"}) CHECK(rep.contains(k));
    CHECK(rep["seed"] == 99);
    CHECK(rep["status"] == "pass");
    CHECK(rep["timings"]["monad_laws"]["wall_ms"].is_null());
    // every checked object is listed
    CHECK(rep["config"]["objects"].size() == 2);
    std::string text = canonical(rep);
    CHECK(text.find("\"checked\"") < text.find("\"law\""));
    CHECK(text.back() == '\n');
}

TEST_CASE("cocross report fields") {
    CocrossSuiteConfig c;
    c.functor = "tensor-square";
    c.inputs = {1, 1};
    auto rep = run_cocross(c);
    CHECK(rep["n"] == 2);
    CHECK(rep["dimension"] == 2);
    CHECK(rep["oracle_agreement"]["mutually_inverse"] == true);
    CHECK(rep["law_reports"].size() == 2);
    CHECK(rep.contains("seed"));
    c.target = TargetSpec{true, 2};
    c.inputs = {3, 2};
    auto p = run_cocross(c);
    // smash square of pointed sets with x and y points: 1 + (xy-1)^2 - (x-1)^2 - (y-1)^2
    CHECK(p["cardinality"] == 1 + 25 - 4 - 1);
}

TEST_CASE("merging law reports adds counts and keeps at most five witnesses") {
    LawReport a, b;
    LawResult x{"l"};
    for (int i = 0; i < 4; ++i) x.record(false, [&] { return nlohmann::json(i); });
    a.laws = {x};
    b.laws = {x, LawResult{"other"}};
    merge_laws(a, b);
    REQUIRE(a.laws.size() == 2);
    CHECK(a.laws[0].checks == 8);
    CHECK(a.laws[0].failures == 8);
    CHECK(a.laws[0].witnesses.size() == 5);
}

TEST_CASE("the corrupted multiplication fixture fails and the unpointed demo shows the counterexample") {
    MonadSuiteConfig c;
    c.corrupt_mu = true;
    c.functors = registry_names();
    auto rep = run_verify_monad(c);
    CHECK(rep["status"] == "fail");
    CHECK_FALSE(rep["witnesses"].empty());
    AxiomSuiteConfig a;
    a.unpointed_demo = true;
    auto d = run_axioms(a);
    CHECK(d["status"] == "fail");
    CHECK(d["witnesses"][2]["colimit_cardinality"] == 2);
}
