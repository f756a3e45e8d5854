#include <doctest.h>

#include "rotorlab/verify.hpp"

using namespace rotorlab;

TEST_CASE("sample points are deterministic and respect constraints") {
    auto a = sample_points(42, 4, 3);
    auto b = sample_points(42, 4, 3);
    REQUIRE(a.size() == 3);
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].z == b[i].z);
        CHECK(a[i].t == b[i].t);
        CHECK(a[i].generic());
    }
    auto c = sample_points(7, 4, 1, {PointConstraint::Type::MinusQ2, 2});
    CHECK(c[0].z[2] == Eis(Rat(1), Rat(1)) * c[0].z[1]);
    auto d = sample_points(7, 4, 1, {PointConstraint::Type::TimesQ, 1});
    CHECK(d[0].z[1] == Eis::q() * d[0].z[0]);
}

TEST_CASE("verification reports are byte-identical across runs") {
    VerificationConfig cfg;
    cfg.bc = Bc::PbcEven;
    cfg.sizes = {4};
    cfg.samples = 1;
    cfg.seed = 9;
    cfg.checks = {"algebra", "sums"};
    auto r1 = run_verification(cfg);
    auto r2 = run_verification(cfg);
    CHECK(r1.all_passed());
    CHECK(r1.to_json() == r2.to_json());
    CHECK(r1.to_json().find("\"schema\": 1") != std::string::npos);
}

TEST_CASE("failures are reported with witnesses, exit contract") {
    // no reachable failure in the shipped checks; exercise the report shape
    VerificationConfig cfg;
    cfg.bc = Bc::PbcEven;
    cfg.sizes = {4};
    cfg.samples = 1;
    cfg.checks = {"sequences"};
    auto report = run_verification(cfg);
    CHECK(report.all_passed());
    for (const auto& r : report.records) CHECK(r.check == "sequences");
}

TEST_CASE("sequence tables render") {
    auto tables = sequence_tables(4);
    CHECK(!tables.empty());
    std::string csv = sequence_tables_csv(4);
    CHECK(csv.find("A(n;1)") != std::string::npos);
    CHECK(csv.find("7436") == std::string::npos);  // max 4 stops at 42
    CHECK(csv.find("42") != std::string::npos);
}

TEST_CASE("ground state and transfer dumps") {
    auto gs = solve_ground_state(build_transfer(Bc::PbcEven, homogeneous_point(4)));
    std::string js = ground_state_json(gs);
    CHECK(js.find("\"bc\": \"pbc-even\"") != std::string::npos);
    CHECK(js.find("AABB|AABB") != std::string::npos);
    CHECK(js.find("gcd-one") != std::string::npos);

    auto tm = build_transfer(Bc::CbcOdd, sample_points(3, 3, 1)[0]);
    std::string tj = transfer_json(tm);
    CHECK(tj.find("\"size\": 3") != std::string::npos);
    CHECK(tj.find("entries") != std::string::npos);
}
