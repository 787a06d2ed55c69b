#include <doctest.h>

#include <random>

#include "typea/report.hpp"

using namespace typea;

TEST_CASE("extended integers") {
    CHECK(to_json(ExtInt::neg_inf()) == json("-inf"));
    CHECK(to_json(ExtInt::pos_inf()) == json("+inf"));
    CHECK(to_json(ExtInt::fin(-2)) == json(-2));
    CHECK(ext_int_from_json(json("-inf")) == ExtInt::neg_inf());
    CHECK(ext_int_from_json(json(7)) == ExtInt::fin(7));
    CHECK_THROWS_AS(ext_int_from_json(json("oo")), std::invalid_argument);
    CHECK_THROWS_AS(ext_int_from_json(json(1.5)), std::invalid_argument);
}

TEST_CASE("objects and aisles round-trip through JSON") {
    std::mt19937 rng(5);
    Algebra a = Algebra::linear(3);
    std::vector<Interval> ivs = a.intervals();
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<IndecObject> xs;
        int count = static_cast<int>(rng() % 4);
        for (int i = 0; i < count; ++i) {
            Interval iv = ivs[rng() % ivs.size()];
            xs.push_back(shifted(iv, static_cast<int>(rng() % 7) - 3));
        }
        DObject z(xs);
        CHECK(dobject_from_json(to_json(z)) == z);

        Aisle s = Aisle::standard(a, static_cast<int>(rng() % 5) - 2);
        for (IndecObject x : z.summands) s.extras.push_back(shift(x, -4));
        s = canonicalize(a, s);
        CHECK(aisle_from_json(to_json(s)) == s);
    }
}

TEST_CASE("schema violations are rejected") {
    CHECK_THROWS(indec_from_json(json::parse("{\"l\":0}")));
    CHECK_THROWS(aisle_from_json(json::parse("{\"tails\":[0]}")));
    CHECK_THROWS(dobject_from_json(json::parse("{\"l\":0,\"k\":1,\"d\":0}")));
}

TEST_CASE("reports carry their seed and statuses") {
    SuiteParams p;
    p.seed = 424242;
    Report rep = run_suite("semisimple", p);
    json j = report_to_json(rep);
    CHECK(j.at("seed") == 424242u);
    CHECK(j.at("failed") == 0);
    CHECK(report_to_markdown(rep).find("seed 424242") != std::string::npos);
}

TEST_CASE("recollement and factor encodings") {
    Algebra a = Algebra::linear(2);
    Recollement r1 = recollement_from_json(a, json::parse("{\"kind\":\"idempotent\",\"r\":1}"));
    CHECK(r1.idempotent);
    CHECK(to_json(r1) == json::parse("{\"kind\":\"idempotent\",\"r\":1}"));

    json ex = json::parse("{\"kind\":\"exceptional\",\"x\":{\"l\":1,\"k\":2,\"d\":0}}");
    Recollement r2 = recollement_from_json(a, ex);
    CHECK_FALSE(r2.idempotent);

    FactorTStructure f{ExtInt::fin(0), Aisle::standard(Algebra::linear(1), 0)};
    CHECK(factor_from_json(to_json(f)) == f);
}
