#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <json.hpp>
#include <set>
#include <string>
#include <vector>

#include "cayring/ring_spec.hpp"
#include "cayring/verifier.hpp"

using namespace cayring;

TEST_CASE("theorem ids are the paper's statements in order") {
    const std::vector<std::string> expected = {
        "lemma_1_1", "thm_2_2", "cor_2_3", "lemma_2_4", "thm_2_5",
        "lemma_2_6", "lemma_2_7", "thm_2_8", "cor_2_9",  "thm_2_10",
        "thm_3_1",   "cor_3_2",  "thm_3_4", "thm_4_1",   "thm_4_2",
    };
    CHECK(theorem_ids() == expected);
}

TEST_CASE("single-ring verification reports") {
    FiniteRing R12 = ring_from_spec("Z12");

    VerificationReport rep = verify("thm_2_8", R12);
    CHECK(rep.pass);
    CHECK_FALSE(rep.skipped);
    CHECK(rep.ring == "Z4 x Z3");
    CHECK(rep.predicted == rep.oracle);
    CHECK(rep.predicted.find("kappa=6") != std::string::npos);
    CHECK(rep.predicted.find("kappa_edge=7") != std::string::npos);

    VerificationReport conn = verify("thm_2_2", ring_from_spec("Z4"));
    CHECK(conn.pass);
    CHECK(conn.predicted.find("connected=no") != std::string::npos);

    CHECK_THROWS_AS(verify("thm_9_9", R12), Error);
}

TEST_CASE("vacuous hypotheses still pass") {
    VerificationReport rep = verify("thm_2_5", ring_from_spec("Z8"));
    CHECK(rep.pass);
    CHECK_FALSE(rep.skipped);
    CHECK(rep.note.find("hypothesis not satisfied") != std::string::npos);
}

TEST_CASE("cap exceedance reports as skipped, never as pass") {
    VerifierCaps caps;
    caps.order = 4;
    VerificationReport rep = verify("thm_2_2", ring_from_spec("Z6"), caps);
    CHECK(rep.skipped);
    CHECK_FALSE(rep.pass);
    CHECK(rep.note.find("skipped") != std::string::npos);
}

TEST_CASE("witnesses are attached where promised") {
    VerificationReport hole = verify("thm_3_4", ring_from_spec("Z3 x Z3 x Z3"));
    REQUIRE(hole.pass);
    REQUIRE_FALSE(hole.witness_json.empty());
    auto w = nlohmann::json::parse(hole.witness_json);
    CHECK(w.contains("hole"));
    CHECK(w.at("hole").size() >= 5);

    VerificationReport ham = verify("thm_2_10", ring_from_spec("Z6"));
    REQUIRE(ham.pass);
    auto cycle = nlohmann::json::parse(ham.witness_json);
    CHECK(cycle.at("cycle").size() == 6);
}

TEST_CASE("zn_range enumerates and deduplicates") {
    RingFamily fam = zn_range(2, 30);
    CHECK(fam.members.size() == 29);

    RingFamily again = zn_range(2, 10);
    again.extend(zn_range(2, 10));
    CHECK(again.members.size() == 9);

    RingFamily seeded;
    seeded.members.push_back(parse_ring_spec("Z6"));
    seeded.extend(zn_range(2, 10));  // Z6 = Z2 x Z3 must not reappear
    CHECK(seeded.members.size() == 9);

    RingFamily reordered;
    reordered.members.push_back(parse_ring_spec("Z3 x Z2"));
    reordered.extend(zn_range(2, 10));  // duplicate up to factor reordering
    CHECK(reordered.members.size() == 9);
}

TEST_CASE("local_products pool covers all descriptor kinds") {
    RingFamily fam = local_products(2, 9, 81);
    // Local pool of order <= 9: Z2, Z3, Z4, GF(4), GF(2)[t]/(t^2), Z5, Z7,
    // Z8, GF(8), GF(2)[t]/(t^3), Z9, GF(9), GF(3)[t]/(t^2) -- 13 rings,
    // so 13 * 14 / 2 unordered pairs.
    CHECK(fam.members.size() == 91);
    std::set<std::string> renders;
    bool has_trunc_pair = false;
    for (const auto& m : fam.members) {
        CHECK(m.factors.size() == 2);
        renders.insert(render_ring_spec(m));
        if (render_ring_spec(m) == "GF(2)[t]/(t^2) x GF(2)[t]/(t^2)") has_trunc_pair = true;
    }
    CHECK(renders.size() == 91);
    CHECK(has_trunc_pair);
}

TEST_CASE("suite over all Z_n up to 30 has no failures") {
    RingFamily fam = zn_range(2, 30);
    SuiteSummary summary;
    auto reports = run_suite(fam, theorem_ids(), {}, &summary);
    CHECK(reports.size() == fam.members.size() * theorem_ids().size());
    CHECK(summary.failed == 0);
    CHECK(summary.skipped == 0);
    CHECK(summary.passed == reports.size());

    // Reports are ordered by (ring index, theorem order).
    CHECK(reports[0].theorem == "lemma_1_1");
    CHECK(reports[0].ring == "Z2");
    CHECK(reports[theorem_ids().size()].ring == "Z3");

    std::string csv = reports_to_csv(reports);
    CHECK(csv.rfind("theorem,ring,predicted,oracle,pass,millis\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + static_cast<long>(reports.size()));

    auto doc = nlohmann::json::parse(reports_to_json(reports));
    CHECK(doc.at("summary").at("failed") == 0);
    CHECK(doc.at("summary").at("total") == reports.size());
    CHECK(doc.at("reports").size() == reports.size());
}

TEST_CASE("suite results do not depend on the worker count") {
    RingFamily fam = zn_range(2, 16);
    SuiteSummary s1, s4;
    auto serial = run_suite(fam, {"thm_2_2", "thm_2_8"}, {}, &s1);
    setenv("CAYRING_THREADS", "4", 1);
    auto threaded = run_suite(fam, {"thm_2_2", "thm_2_8"}, {}, &s4);
    unsetenv("CAYRING_THREADS");
    REQUIRE(serial.size() == threaded.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].theorem == threaded[i].theorem);
        CHECK(serial[i].ring == threaded[i].ring);
        CHECK(serial[i].pass == threaded[i].pass);
        CHECK(serial[i].predicted == threaded[i].predicted);
        CHECK(serial[i].oracle == threaded[i].oracle);
    }
    CHECK(s1.passed == s4.passed);
    CHECK(s1.failed == s4.failed);
}

TEST_CASE("oversized rings in a family become skipped rows") {
    RingFamily fam;
    fam.members.push_back(parse_ring_spec("Z6"));
    fam.members.push_back(parse_ring_spec("Z1024", 2048));
    VerifierCaps caps;
    caps.order = 512;
    SuiteSummary summary;
    auto reports = run_suite(fam, {"thm_2_2"}, caps, &summary);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].pass);
    CHECK(reports[1].skipped);
    CHECK_FALSE(reports[1].pass);
    CHECK(summary.passed == 1);
    CHECK(summary.skipped == 1);
    CHECK(summary.failed == 0);

    std::string csv = reports_to_csv(reports);
    CHECK(csv.find(",skip,") != std::string::npos);
}
