#include "gordonlab/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace gordonlab;

namespace {
constexpr Interpretation kInduced = Interpretation::InducedNoIsolated;
constexpr Interpretation kDefinition = Interpretation::DefinitionConditions;
}  // namespace

TEST_CASE("report bookkeeping") {
    VerificationReport report;
    report.add_row(0, Integer(1), Integer(1));
    CHECK(report.pass);
    CHECK_FALSE(report.first_failure.has_value());
    report.add_row(5, Integer(2), Integer(-2));
    report.add_row(6, Integer(0), Integer(1));
    CHECK_FALSE(report.pass);
    CHECK(report.first_failure == 5);
    CHECK(report.rows.size() == 3);
}

TEST_CASE("main identity holds at small order") {
    for (Interpretation interp : {kInduced, kDefinition}) {
        VerificationReport report = verify_main_identity(3, 3, 12, interp);
        INFO("interp=" << to_string(interp));
        CHECK(report.pass);
        CHECK(report.rows.size() == 26);  // two rows per degree
    }
    CHECK(verify_main_identity(2, 1, 10).pass);
    CHECK(verify_main_identity(4, 2, 8).pass);
}

TEST_CASE("gordon equality holds at small order") {
    VerificationReport report = verify_gordon(2, 2, 15);
    CHECK(report.pass);
    CHECK(report.identity == "gordon");
    CHECK(report.rows.size() == 16);
}

TEST_CASE("multiple-sum vs product holds at small order") {
    CHECK(verify_andrews_gordon(2, 2, 20).pass);
    CHECK(verify_andrews_gordon(3, 1, 15).pass);
}

TEST_CASE("random hypergraph generator is deterministic and simple") {
    std::mt19937_64 rng_a(99), rng_b(99);
    for (int c = 0; c < 10; ++c) {
        auto [ha, wa] = random_weighted_hypergraph(rng_a, 8, 10, 3);
        auto [hb, wb] = random_weighted_hypergraph(rng_b, 8, 10, 3);
        CHECK(ha == hb);
        CHECK(wa.weights == wb.weights);
        CHECK(ha.is_simple());
        CHECK(ha.vertex_count() >= 1);
        CHECK(ha.vertex_count() <= 8);
        CHECK(ha.edge_count() <= 10);
        for (const auto& [v, weight] : wa.weights) {
            CHECK(weight >= 1);
            CHECK(weight <= 3);
        }
    }
}

TEST_CASE("hilbert numerator property on random hypergraphs") {
    VerificationReport report = verify_hilbert_numerator(15, 12, 2024);
    CHECK(report.pass);
    CHECK(report.rows.size() == 15 * 13);

    // Same seed, same report.
    VerificationReport again = verify_hilbert_numerator(15, 12, 2024);
    REQUIRE(report.rows.size() == again.rows.size());
    for (std::size_t k = 0; k < report.rows.size(); ++k) {
        CHECK(report.rows[k].lhs == again.rows[k].lhs);
        CHECK(report.rows[k].rhs == again.rows[k].rhs);
    }
}

TEST_CASE("polarization relation holds at small order") {
    CHECK(verify_polarization_relation(2, 1, 12).pass);
    CHECK(verify_polarization_relation(2, 2, 12).pass);
    CHECK(verify_polarization_relation(3, 2, 10).pass);
}

TEST_CASE("dp agrees with brute force on a small sweep") {
    for (Interpretation interp : {kInduced, kDefinition}) {
        VerificationReport report = verify_dp_vs_brute(3, 2, 12, interp);
        INFO("interp=" << to_string(interp));
        CHECK(report.pass);
        CHECK(!report.rows.empty());
    }
}
