#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "turan/verify.hpp"

using namespace turan;

namespace {

nlohmann::json strip_runtimes(nlohmann::json j) {
    j.erase("runtime_ms");
    for (auto& c : j["claims"]) c.erase("runtime_ms");
    return j;
}

}  // namespace

TEST_CASE("unknown suite rejected") {
    CHECK_THROWS_AS(run_suite("no-such-suite"), std::invalid_argument);
}

TEST_CASE("suite ids are all runnable names") {
    auto ids = suite_ids();
    CHECK(ids.size() == 10);
    for (const auto& id : ids) CHECK_FALSE(id.empty());
}

TEST_CASE("prop-relation suite passes and is deterministic") {
    VerifySuiteReport a = run_suite("prop-relation");
    CHECK(a.pass);
    REQUIRE(a.claims.size() == 1);
    CHECK(a.claims[0].measured.at("checked").get<int>() == 11 * 41 * 41);

    VerifySuiteReport b = run_suite("prop-relation");
    CHECK(strip_runtimes(report_to_json(a)) == strip_runtimes(report_to_json(b)));
}

TEST_CASE("palettes suite passes") {
    VerifySuiteReport r = run_suite("palettes");
    CHECK(r.pass);
    // two deterministic runs agree claim by claim
    VerifySuiteReport r2 = run_suite("palettes");
    CHECK(strip_runtimes(report_to_json(r)) == strip_runtimes(report_to_json(r2)));
}

TEST_CASE("lemma-t6 suite passes") {
    VerifySuiteReport r = run_suite("lemma-t6");
    CHECK(r.pass);
    REQUIRE(r.claims.size() == 1);
    CHECK(r.claims[0].measured.at("tournaments").get<std::uint64_t>() == 32768);
    CHECK(r.claims[0].measured.at("failures").get<std::uint64_t>() == 0);
}

TEST_CASE("parallel run gives the same verdicts") {
    VerifySuiteReport seq = run_suite("d10-remark");
    VerifySuiteReport par = run_suite("d10-remark", /*parallel=*/true);
    CHECK(seq.pass);
    CHECK(strip_runtimes(report_to_json(seq)) == strip_runtimes(report_to_json(par)));
}

TEST_CASE("report serialization shape") {
    VerifySuiteReport r = run_suite("prop-relation");
    nlohmann::json j = report_to_json(r);
    CHECK(j.at("schema").get<int>() == 1);
    CHECK(j.at("suite").get<std::string>() == "prop-relation");
    CHECK(j.at("pass").get<bool>());
    for (const auto& c : j.at("claims")) {
        CHECK(c.contains("id"));
        CHECK(c.contains("anchor"));
        CHECK(c.contains("status"));
        CHECK(c.contains("measured"));
        CHECK(c.contains("runtime_ms"));
    }
    std::string text = report_to_text(r);
    CHECK(text.find("PASS") != std::string::npos);
}
