// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bctforge/serialize.hpp"
#include "bctforge/verify.hpp"

using namespace bctforge;

namespace {

std::vector<std::string> claim_ids(const VerificationReport& rep) {
    std::vector<std::string> out;
    for (const auto& c : rep.claims) out.push_back(c.id);
    return out;
}

bool all_pass(const VerificationReport& rep) {
    for (const auto& c : rep.claims)
        if (!c.pass) return false;
    return true;
}

} // namespace

TEST_CASE("lemma1 verification") {
    const auto rep = verify_lemma1(7);
    CHECK(rep.overall == Overall::Pass);
    CHECK(claim_ids(rep) == std::vector<std::string>{"L1.delta0", "L1.delta_pm1", "L1.bound",
                                                     "L1.symmetry", "L1.analytic_equiv"});
    CHECK(all_pass(rep));
    REQUIRE(rep.hypotheses.size() == 1);
    CHECK(rep.hypotheses[0].holds);

    const auto skipped = verify_lemma1(5);
    CHECK(skipped.overall == Overall::HypothesesNotMet);
    CHECK(skipped.claims.empty());

    CHECK(verify_lemma1(27).overall == Overall::Pass);
}

TEST_CASE("lemma2 verification") {
    const auto rep = verify_lemma2(7);
    CHECK(rep.overall == Overall::Pass);
    CHECK(claim_ids(rep) ==
          std::vector<std::string>{"L2.delta0", "L2.delta_pm1", "L2.bound", "L2.analytic_equiv",
                                   "L2.b_norm_ne_4", "L2.disc_square", "L2.case_gating",
                                   "L2.case2_split"});

    CHECK(verify_lemma2(13).overall == Overall::HypothesesNotMet);  // 13 = 1 mod 4
    CHECK(verify_lemma2(19).overall == Overall::Pass);
}

TEST_CASE("theorem1 verification") {
    const auto rep = verify_theorem1(7);
    CHECK(rep.overall == Overall::Pass);
    CHECK(claim_ids(rep) == std::vector<std::string>{"T1.bound", "T1.attain", "T1.oracle",
                                                     "T1.bc_relation", "T1.pairing"});
    for (const auto& c : rep.claims) CHECK(!c.witness.empty());

    // q = 9 keeps the oracle claim; q = 13 is above the naive cutoff
    auto ids9 = claim_ids(verify_theorem1(9));
    CHECK(std::find(ids9.begin(), ids9.end(), "T1.oracle") != ids9.end());
    auto ids13 = claim_ids(verify_theorem1(13));
    CHECK(std::find(ids13.begin(), ids13.end(), "T1.oracle") == ids13.end());
    CHECK(verify_theorem1(13).overall == Overall::Pass);
}

TEST_CASE("theorem1 boundary at q=3: bound holds, never attained") {
    const auto rep = verify_theorem1(3);
    CHECK(rep.overall == Overall::BoundHoldsNotAttained);
    bool saw_attain = false;
    for (const auto& c : rep.claims) {
        if (c.id == "T1.attain") {
            saw_attain = true;
            CHECK(!c.pass);
            CHECK(c.witness == "beta=0, no b attains 2");
        } else {
            CHECK(c.pass);
        }
    }
    CHECK(saw_attain);
}

TEST_CASE("theorem2 verification") {
    const auto rep = verify_theorem2(7);
    CHECK(rep.overall == Overall::Pass);
    CHECK(claim_ids(rep) == std::vector<std::string>{"T2.bound", "T2.attain", "T2.oracle",
                                                     "T2.bc_relation", "T2.b2_identity",
                                                     "T2.case2_pairs"});
    CHECK(verify_theorem2(13).overall == Overall::HypothesesNotMet);
    CHECK(verify_theorem2(19).overall == Overall::Pass);
}

TEST_CASE("scan") {
    const auto reports = scan({7, 9, 13}, {Subject::Theorem1});
    REQUIRE(reports.size() == 3);
    for (const auto& rep : reports) CHECK(rep.overall == Overall::Pass);
    CHECK(reports[0].q == 7);
    CHECK(reports[2].q == 13);

    const auto skipped = scan({5}, {Subject::Theorem1, Subject::Theorem2});
    REQUIRE(skipped.size() == 2);
    CHECK(skipped[0].overall == Overall::HypothesesNotMet);
    CHECK(skipped[1].overall == Overall::HypothesesNotMet);

    CHECK(scan({}, {Subject::Lemma1}).empty());

    // a bad q is embedded as an error without aborting the rest
    const auto mixed = scan({4, 7}, {Subject::Lemma1});
    REQUIRE(mixed.size() == 2);
    CHECK(mixed[0].overall == Overall::Fail);
    CHECK(!mixed[0].error.empty());
    CHECK(mixed[1].overall == Overall::Pass);
    CHECK(mixed[1].error.empty());

    // field too large for the cap is reported, not thrown
    const auto capped = scan({7}, {Subject::Lemma1}, 10);
    REQUIRE(capped.size() == 1);
    CHECK(!capped[0].error.empty());
}

TEST_CASE("reports are deterministic") {
    const auto a = verification_report_json(verify_theorem1(7)).dump();
    const auto b = verification_report_json(verify_theorem1(7)).dump();
    CHECK(a == b);
    const auto c = verification_report_json(verify_lemma2(7)).dump();
    const auto d = verification_report_json(verify_lemma2(7)).dump();
    CHECK(c == d);
}

TEST_CASE("subject names round-trip") {
    for (Subject s : {Subject::Lemma1, Subject::Lemma2, Subject::Theorem1, Subject::Theorem2})
        CHECK(parse_subject(subject_name(s)) == s);
    CHECK(!parse_subject("lemma3").has_value());
}
