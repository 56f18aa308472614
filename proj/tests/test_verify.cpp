#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "knothom/verify.hpp"

using namespace knothom;

namespace {

nlohmann::json strip_wall(nlohmann::json j) {
    j.erase("wall_ms");
    return j;
}

}  // namespace

TEST_CASE("structure lemma suites are clean away from the exception") {
    for (auto [q, r] : std::vector<std::pair<int, int>>{{2, 5}, {5, 2}, {3, 2}}) {
        auto rep = verify_dqr_lemma(q, r);
        CHECK(rep.ok());
        std::uint64_t n = DqrGroup::make(q, r)->order();
        CHECK(rep.instances_checked == 2 * n + 2 * n * n);
    }
}

TEST_CASE("the D(2,3) exception produces the expected witnesses") {
    auto rep = verify_dqr_lemma(2, 3);
    CHECK(rep.ok());
    bool witness_note = false;
    for (const auto& note : rep.notes)
        if (note.find("witnesses found") != std::string::npos) witness_note = true;
    CHECK(witness_note);
}

TEST_CASE("injected bugs surface as counterexamples") {
    VerifyOptions bug;
    bug.inject_bug = true;
    CHECK_FALSE(verify_dqr_lemma(2, 5, bug).ok());
    CHECK_FALSE(verify_dichotomy(5, bug).ok());
    CHECK_FALSE(verify_caseii_remark(7, bug).ok());
    CHECK_FALSE(verify_exceptional_case({2, 3, 2, 5}, 1u << 12, 42, bug).ok());
}

TEST_CASE("dichotomy at small q, with exhaustive pair counts") {
    for (int q : {2, 3, 4, 5}) {
        auto rep = verify_dichotomy(q);
        CHECK(rep.ok());
        std::uint64_t n = PslGroup::make(q)->order();
        CHECK(rep.instances_checked == n * n);
    }
}

TEST_CASE("transitivity at p = 7") {
    auto rep = verify_transitivity(7);
    CHECK(rep.ok());
    CHECK(rep.instances_checked > 0);
}

TEST_CASE("upper-triangular remark at small odd q, including a prime power") {
    for (int q : {3, 5, 7, 9}) {
        auto rep = verify_caseii_remark(q);
        CHECK(rep.ok());
    }
    CHECK_THROWS_AS(verify_caseii_remark(4), std::invalid_argument);
}

TEST_CASE("wreath lemma sampling is clean and seed-deterministic") {
    auto a = verify_wreath_lemmas(3, 5, 2, std::nullopt, 500, 99);
    CHECK(a.ok());
    auto b = verify_wreath_lemmas(3, 5, 2, std::nullopt, 500, 99);
    CHECK(strip_wall(a.to_json()) == strip_wall(b.to_json()));
    auto with_n = verify_wreath_lemmas(3, 2, 5, 2, 200, 99);
    CHECK(with_n.ok());
    bool pipeline_note = false;
    for (const auto& note : with_n.notes)
        if (note.find("pipeline runs") != std::string::npos) pipeline_note = true;
    CHECK(pipeline_note);
}

TEST_CASE("exceptional-case commutation at the small parameter sets") {
    auto rep = verify_exceptional_case({2, 3, 2, 5}, 1u << 17, 7);
    CHECK(rep.ok());
    CHECK(rep.instances_checked > 0);
    auto rep2 = verify_exceptional_case({3, 2, 3, 5}, 1u << 14, 7);
    CHECK(rep2.ok());
    // q = 5 does not divide p+1 = 4 here, so the paragraph does not apply
    CHECK_THROWS_AS(verify_exceptional_case({5, 3, 5, 7}, 100, 7), std::invalid_argument);
}

TEST_CASE("report JSON shape") {
    auto rep = verify_dqr_lemma(5, 2);
    auto j = rep.to_json();
    CHECK(j["schema"] == "1");
    CHECK(j["kind"] == "verification");
    CHECK(j["check"] == "dqr_lemma");
    CHECK(j["counterexamples"].is_array());
}
