#include <doctest.h>

#include "rotorlab/polynomial.hpp"

using namespace rotorlab;

TEST_CASE("interpolation recovers a known polynomial") {
    // p = z1^2 z2 + q z2^2 - 3
    std::vector<std::vector<Eis>> nodes{{Eis(1), Eis(2), Eis(3)}, {Eis(4), Eis(5), Eis(7)}};
    auto p_ref = [](const Eis& a, const Eis& b) {
        return a * a * b + Eis::q() * b * b - Eis(3);
    };
    std::vector<Eis> samples;
    for (const auto& a : nodes[0])
        for (const auto& b : nodes[1]) samples.push_back(p_ref(a, b));
    MultiPoly p = MultiPoly::interpolate(nodes, samples);
    CHECK(p.degree(0) == 2);
    CHECK(p.degree(1) == 2);
    CHECK(p.coeff({2, 1}) == Eis(1));
    CHECK(p.coeff({0, 2}) == Eis::q());
    CHECK(p.coeff({0, 0}) == Eis(-3));
    CHECK(p.eval({Eis(Rat(9, 2)), Eis(Rat(-1, 3))}) ==
          p_ref(Eis(Rat(9, 2)), Eis(Rat(-1, 3))));
}

TEST_CASE("linear division and symmetry") {
    // p = (z0 + q z1)(z0 + z1): divisible, quotient symmetric-free check
    std::vector<std::vector<Eis>> nodes{{Eis(1), Eis(2), Eis(3)}, {Eis(4), Eis(5), Eis(7)}};
    std::vector<Eis> samples;
    for (const auto& a : nodes[0])
        for (const auto& b : nodes[1]) samples.push_back((a + Eis::q() * b) * (a + b));
    MultiPoly p = MultiPoly::interpolate(nodes, samples);
    auto quot = p.divide_linear(0, 1, Eis::q());
    REQUIRE(quot.has_value());
    CHECK(quot->degree(0) == 1);
    CHECK(quot->symmetric_in(0, 1));
    CHECK_FALSE(p.divide_linear(0, 1, Eis(7)).has_value());
}

TEST_CASE("reconstructed pbc size-4 ground state") {
    auto rec = reconstruct_polynomial(Bc::PbcEven, 4);
    REQUIRE(rec.components.size() == 4);

    SUBCASE("per-variable degree is exactly 2(n-1) = 2") {
        for (int v = 0; v < 4; ++v) {
            long max_deg = -1;
            for (const auto& c : rec.components) {
                CHECK(c.degree(v) <= 2);
                max_deg = std::max(max_deg, c.degree(v));
            }
            CHECK(max_deg == 2);
        }
    }

    SUBCASE("polynomials reproduce fresh kernels off the grid") {
        CHECK(rec.consistent_at(sample_points(71, 4, 1)[0]));
        CHECK(rec.consistent_at(sample_points(72, 4, 1)[0]));
    }

    SUBCASE("exchange factorization on arcless stretches") {
        // (AABB|AABB) has no arcs inside [2,3] or the wrap stretch [4,1]
        LinkPattern aabb = LinkPattern::from_string("AABB");
        const MultiPoly& comp =
            rec.components[rec.basis->index_of({aabb, aabb})];
        auto q1 = comp.divide_linear(1, 2, Eis::q());  // (z2 + q z3)
        REQUIRE(q1.has_value());
        auto q2 = q1->divide_linear(3, 0, Eis::q());   // (z4 + q z1)
        REQUIRE(q2.has_value());
        CHECK(q2->symmetric_in(1, 2));

        // the nested pair factors on [1,2] and [3,4]
        LinkPattern abba = LinkPattern::from_string("ABBA");
        const MultiPoly& mnc = rec.components[rec.basis->index_of({abba, abba})];
        auto m1 = mnc.divide_linear(0, 1, Eis::q());
        REQUIRE(m1.has_value());
        auto m2 = m1->divide_linear(2, 3, Eis::q());
        REQUIRE(m2.has_value());
        CHECK(m2->symmetric_in(0, 1));
        CHECK(m2->symmetric_in(2, 3));
    }

    SUBCASE("the nested component equals the factorized Schur closed form") {
        LinkPattern abba = LinkPattern::from_string("ABBA");
        const MultiPoly& mnc = rec.components[rec.basis->index_of({abba, abba})];
        std::mt19937_64 rng(73);
        for (int rep = 0; rep < 6; ++rep) {
            std::vector<Eis> z;
            for (int i = 0; i < 4; ++i) z.push_back(Eis(random_rational(rng)));
            CHECK(mnc.eval(z) == mnc_pbc_even(0, 2, z));
        }
    }

    SUBCASE("all components vanish at the wheel point") {
        // z2 = -q^2 z1, z3 = q z1 puts the kernel in the image of both E_1
        // and E_2, which intersect trivially
        std::vector<Eis> z{Eis(Rat(5, 3)), Eis(0), Eis(0), Eis(Rat(7, 2))};
        z[1] = Eis(Rat(1), Rat(1)) * z[0];
        z[2] = Eis::q() * z[0];
        for (const auto& c : rec.components) CHECK(c.eval(z) == Eis(0));
    }
}
