#include <doctest.h>

#include <random>

#include "rotorlab/matrix.hpp"
#include "rotorlab/sampling.hpp"

using namespace rotorlab;

namespace {

EisMatrix random_matrix(std::mt19937_64& rng, int r, int c) {
    EisMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = Eis(random_rational(rng), random_rational(rng));
    return m;
}

} // namespace

TEST_CASE("kernel of a rank-deficient matrix") {
    std::mt19937_64 rng(11);
    EisMatrix m = random_matrix(rng, 5, 3);  // 5x3, generic rank 3
    // widen to 5x5 with two dependent columns
    EisMatrix wide(5, 5);
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 3; ++j) wide(i, j) = m(i, j);
        wide(i, 3) = m(i, 0) + Eis(2) * m(i, 1);
        wide(i, 4) = Eis::q() * m(i, 2);
    }
    auto ker = wide.kernel();
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker) {
        auto img = wide.apply(v);
        for (const auto& x : img) CHECK(x.is_zero());
    }
    CHECK(wide.kernel_dim_upper_bound() == 2);
}

TEST_CASE("determinant multiplies and detects singularity") {
    std::mt19937_64 rng(12);
    EisMatrix a = random_matrix(rng, 4, 4), b = random_matrix(rng, 4, 4);
    CHECK((a * b).determinant() == a.determinant() * b.determinant());
    EisMatrix sing = a;
    for (int j = 0; j < 4; ++j) sing(3, j) = sing(0, j) + sing(1, j);
    CHECK(sing.determinant() == Eis(0));
}

TEST_CASE("mod-p certificate bounds the kernel dimension") {
    std::mt19937_64 rng(13);
    EisMatrix a = random_matrix(rng, 6, 6);
    CHECK(a.kernel_dim_upper_bound() == 0);
    EisMatrix sing = a;
    for (int j = 0; j < 6; ++j) sing(5, j) = sing(0, j);
    CHECK(sing.kernel_dim_upper_bound() == 1);
}

TEST_CASE("column sums and commutator") {
    EisMatrix a(2, 2), b(2, 2);
    a(0, 0) = Eis(1);
    a(0, 1) = Eis(2);
    a(1, 0) = Eis(3);
    a(1, 1) = Eis(4);
    auto sums = a.column_sums();
    CHECK(sums[0] == Eis(4));
    CHECK(sums[1] == Eis(6));
    b = EisMatrix::identity(2) * Eis::q();
    CHECK(commutator(a, b).is_zero());
}
