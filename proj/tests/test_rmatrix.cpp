#include <doctest.h>

#include <random>

#include "rotorlab/rmatrix.hpp"
#include "rotorlab/sampling.hpp"

using namespace rotorlab;

TEST_CASE("omega degenerate points and sum") {
    std::mt19937_64 rng(21);
    const Eis q = Eis::q();
    for (int i = 0; i < 50; ++i) {
        Eis z{random_rational(rng)}, w{random_rational(rng)};
        CHECK(omega(FaceKind::A, z, z) == Eis(0));
        CHECK(omega(FaceKind::R, z, z) == Eis(0));
        CHECK(omega(FaceKind::D, z, q * z) == Eis(0));
        CHECK(omega(FaceKind::R, z, w) == omega(FaceKind::L, z, w));
        // the four weights at (w, z) add up to q z^2 - w^2; this is the
        // <<Omega| action of Rcheck(w, z) and the per-column weight sum of
        // the transfer matrix at (t, z) = (w, z)
        CHECK(FaceWeights::at(w, z).sum() == q * z * z - w * w);
    }
}

TEST_CASE("Rcheck is proportional to the identity at w = z") {
    auto basis = PairBasis::get(Bc::PbcEven, 4);
    SiteOps ops(basis);
    Eis z(Rat(3, 2));
    EisMatrix m = rcheck_matrix(ops, 1, z, z);
    Eis factor = omega(FaceKind::D, z, z);
    CHECK(m == EisMatrix::identity(basis->dim()) * factor);
}

TEST_CASE("degenerate specializations of Rcheck") {
    auto basis = PairBasis::get(Bc::PbcEven, 4);
    SiteOps ops(basis);
    int dim = basis->dim();
    std::mt19937_64 rng(22);
    const Eis q = Eis::q(), q2 = Eis::q2();
    for (int rep = 0; rep < 5; ++rep) {
        Eis z{random_rational(rng)};
        for (int site = 1; site <= 3; ++site) {
            EisMatrix e_mat(dim, dim), proj(dim, dim);
            for (int col = 0; col < dim; ++col) {
                e_mat(ops.apply(RotorKind::E, site, col), col) += Eis(1);
                proj(ops.apply(RotorKind::E, site, col), col) += Eis(2);
                proj(ops.apply(RotorKind::R, site, col), col) -= Eis(1);
                proj(ops.apply(RotorKind::L, site, col), col) -= Eis(1);
            }
            CHECK(rcheck_matrix(ops, site, z, Eis(Rat(1), Rat(1)) * z) ==
                  e_mat * ((q2 - Eis(1)) * z * z));
            CHECK(rcheck_matrix(ops, site, z, q * z) == proj * ((q2 - q) * z * z));
        }
    }
}

TEST_CASE("unitarity at random points, sizes 4 and 6") {
    for (int n : {4, 6}) {
        auto basis = PairBasis::get(Bc::PbcEven, n);
        SiteOps ops(basis);
        auto pts = sample_points(23 + n, n, 4);
        for (const auto& p : pts)
            for (int site = 1; site < n; ++site)
                CHECK(check_unitarity(ops, site, p.z[site - 1], p.z[site]));
    }
}

TEST_CASE("trace functional") {
    auto basis = PairBasis::get(Bc::PbcEven, 4);
    StateVector v(basis);
    LinkPattern p = LinkPattern::from_string("AABB");
    v[basis->index_of({p, p})] = Eis(1);
    auto traced = trace_green(v);
    CHECK(traced[basis->single_index(p)] == Eis(1));
    Eis total;
    for (const auto& c : traced) total += c;
    CHECK(total == Eis(1));

    // uniform vector: every single pattern collects one term per green pattern
    StateVector u(basis);
    for (int i = 0; i < basis->dim(); ++i) u[i] = Eis(1);
    for (const auto& c : trace_green(u)) CHECK(c == Eis(2));
}

TEST_CASE("trace intertwines E with e and Rcheck with Rcheck_O1") {
    auto basis = PairBasis::get(Bc::PbcEven, 6);
    SiteOps ops(basis);
    std::mt19937_64 rng(24);
    StateVector v(basis);
    for (int i = 0; i < basis->dim(); ++i) v[i] = Eis(random_rational(rng));

    // T(E_i v) = e_i T(v)
    auto lhs = trace_green(apply_rotor(ops, RotorKind::E, 2, v));
    auto traced = trace_green(v);
    std::vector<Eis> rhs(traced.size());
    for (size_t i = 0; i < traced.size(); ++i) rhs[ops.e_map(2)[i]] += traced[i];
    CHECK(lhs == rhs);

    for (int rep = 0; rep < 3; ++rep) {
        Eis z{random_rational(rng)}, w{random_rational(rng)};
        for (int site = 1; site <= 5; ++site) {
            auto a = trace_green(apply_rcheck(ops, site, z, w, v));
            auto b = apply_rcheck_o1(ops, site, z * z, w * w, trace_green(v));
            CHECK(a == b);
        }
    }
}

TEST_CASE("Rcheck_O1 specializations") {
    auto basis = PairBasis::get(Bc::PbcEven, 4);
    SiteOps ops(basis);
    Eis x(Rat(5, 3));
    // y = x: proportional to the identity
    EisMatrix m = rcheck_o1_matrix(ops, 1, x, x);
    CHECK(m == EisMatrix::identity(basis->single_dim()) * (Eis::q() * x - x));
    // y = q x: the identity coefficient q x - q x vanishes, pure e_i
    EisMatrix me = rcheck_o1_matrix(ops, 1, x, Eis::q() * x);
    EisMatrix e(basis->single_dim(), basis->single_dim());
    for (int col = 0; col < basis->single_dim(); ++col)
        e(ops.e_map(1)[col], col) += Eis::q2() * (x - Eis::q() * x);
    CHECK(me == e);
}
