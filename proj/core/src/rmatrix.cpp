#include "rotorlab/rmatrix.hpp"

namespace rotorlab {

Eis omega(FaceKind kind, const Eis& z, const Eis& w) {
    const Eis q = Eis::q();
    switch (kind) {
        case FaceKind::R:
        case FaceKind::L: return (w - z) * (z + q * w);
        case FaceKind::D: return q * (w - q * z) * (z + q * w);
        case FaceKind::A: return (w - z) * (w + q * z);
    }
    return Eis(0);
}

FaceWeights FaceWeights::at(const Eis& z, const Eis& w) {
    return {omega(FaceKind::R, z, w), omega(FaceKind::L, z, w),
            omega(FaceKind::A, z, w), omega(FaceKind::D, z, w)};
}

StateVector apply_rcheck(const SiteOps& ops, int site, const Eis& z, const Eis& w,
                         const StateVector& v) {
    Eis wD = omega(FaceKind::D, z, w);
    Eis wA = omega(FaceKind::A, z, w);
    Eis wR = omega(FaceKind::R, z, w);
    StateVector out(v.basis());
    for (int idx = 0; idx < v.dim(); ++idx) {
        if (v[idx].is_zero()) continue;
        out[idx] += wD * v[idx];
        out[ops.apply(RotorKind::E, site, idx)] += wA * v[idx];
        out[ops.apply(RotorKind::R, site, idx)] += wR * v[idx];
        out[ops.apply(RotorKind::L, site, idx)] += wR * v[idx];
    }
    return out;
}

EisMatrix rcheck_matrix(const SiteOps& ops, int site, const Eis& z, const Eis& w) {
    int dim = ops.basis()->dim();
    Eis wD = omega(FaceKind::D, z, w);
    Eis wA = omega(FaceKind::A, z, w);
    Eis wR = omega(FaceKind::R, z, w);
    EisMatrix m(dim, dim);
    for (int col = 0; col < dim; ++col) {
        m(col, col) += wD;
        m(ops.apply(RotorKind::E, site, col), col) += wA;
        m(ops.apply(RotorKind::R, site, col), col) += wR;
        m(ops.apply(RotorKind::L, site, col), col) += wR;
    }
    return m;
}

bool check_unitarity(const SiteOps& ops, int site, const Eis& z, const Eis& w) {
    EisMatrix lhs = rcheck_matrix(ops, site, w, z) * rcheck_matrix(ops, site, z, w);
    Eis q2 = Eis::q2();
    Eis factor = q2 * (w * w - q2 * z * z) * (z * z - q2 * w * w);
    return lhs == EisMatrix::identity(ops.basis()->dim()) * factor;
}

std::vector<Eis> trace_green(const StateVector& v) {
    const auto& basis = *v.basis();
    std::vector<Eis> out(basis.single_dim());
    for (int idx = 0; idx < v.dim(); ++idx)
        if (!v[idx].is_zero()) out[basis.red_of(idx)] += v[idx];
    return out;
}

EisMatrix trace_matrix(const PairBasis& basis) {
    EisMatrix m(basis.single_dim(), basis.dim());
    for (int idx = 0; idx < basis.dim(); ++idx) m(basis.red_of(idx), idx) = Eis(1);
    return m;
}

std::vector<Eis> apply_rcheck_o1(const SiteOps& ops, int site, const Eis& x, const Eis& y,
                                 const std::vector<Eis>& w) {
    const auto& em = ops.e_map(site);
    Eis cid = Eis::q() * x - y;
    Eis ce = Eis::q2() * (x - y);
    std::vector<Eis> out(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i].is_zero()) continue;
        out[i] += cid * w[i];
        out[em[i]] += ce * w[i];
    }
    return out;
}

EisMatrix rcheck_o1_matrix(const SiteOps& ops, int site, const Eis& x, const Eis& y) {
    const auto& em = ops.e_map(site);
    int dim = ops.basis()->single_dim();
    Eis cid = Eis::q() * x - y;
    Eis ce = Eis::q2() * (x - y);
    EisMatrix m(dim, dim);
    for (int col = 0; col < dim; ++col) {
        m(col, col) += cid;
        m(em[col], col) += ce;
    }
    return m;
}

} // namespace rotorlab
