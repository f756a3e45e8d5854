#include <doctest.h>

#include <random>

#include "rotorlab/eisenstein.hpp"
#include "rotorlab/sampling.hpp"

using namespace rotorlab;

namespace {

Eis random_eis(std::mt19937_64& rng) {
    return Eis(random_rational(rng), random_rational(rng));
}

} // namespace

TEST_CASE("q satisfies the cyclotomic relations") {
    Eis q = Eis::q();
    CHECK(q * q == Eis(-1) - q);
    CHECK(q * q * q == Eis(1));
    CHECK(Eis(1) + q + q * q == Eis(0));
    CHECK(Eis::q2() == q * q);
    CHECK(Eis::q_pow(-4) == q * q);
}

TEST_CASE("products reduce by q^2 = -1 - q") {
    Eis q = Eis::q();
    CHECK(q * q == Eis(Rat(-1), Rat(-1)));
    // (1 + q)(1 + q^2) = 1
    CHECK((Eis(1) + q) * (Eis(1) + q * q) == Eis(1));
}

TEST_CASE("inverse via conjugate over norm") {
    Eis q = Eis::q();
    CHECK(q.inv() == q * q);
    CHECK(Eis(2).inv() == Eis(Rat(1, 2)));
    CHECK((Eis(1) + q).inv() == -q);
    CHECK_THROWS_AS(Eis(0).inv(), std::domain_error);

    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
        Eis x = random_eis(rng);
        if (x.is_zero()) continue;
        CHECK(x * x.inv() == Eis(1));
    }
}

TEST_CASE("conjugation is the involutive automorphism fixing the rationals") {
    Eis q = Eis::q();
    CHECK(q.conj() == Eis(-1) - q);
    CHECK(Eis(Rat(3, 7)).conj() == Eis(Rat(3, 7)));
    std::mt19937_64 rng(2);
    for (int i = 0; i < 50; ++i) {
        Eis x = random_eis(rng), y = random_eis(rng);
        CHECK(x.conj().conj() == x);
        CHECK((x * y).conj() == x.conj() * y.conj());
    }
}

TEST_CASE("field axioms and norm multiplicativity on random triples") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        Eis x = random_eis(rng), y = random_eis(rng), z = random_eis(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y).norm() == x.norm() * y.norm());
    }
}

TEST_CASE("textual form a+b*q") {
    CHECK(Eis(Rat(3, 2), Rat(-1, 3)).to_string() == "3/2-1/3*q");
    CHECK(Eis(Rat(0), Rat(1)).to_string() == "0+1*q");
    CHECK(Eis(Rat(5)).to_string() == "5");
}
