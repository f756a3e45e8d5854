#include "rotorlab/operators.hpp"

#include <cstdlib>

namespace rotorlab {

SiteOps::SiteOps(std::shared_ptr<const PairBasis> basis, bool broken_parity)
    : basis_(std::move(basis)),
      sites_(site_count(basis_->size(), bc_geometry(basis_->bc()))),
      broken_parity_(broken_parity) {
    Geometry geom = bc_geometry(basis_->bc());
    e_single_.resize(sites_);
    for (int site = 1; site <= sites_; ++site) {
        auto& m = e_single_[site - 1];
        m.resize(basis_->single_dim());
        for (int idx = 0; idx < basis_->single_dim(); ++idx)
            m[idx] = basis_->single_index(apply_e(site, basis_->single(idx), geom));
    }
}

bool SiteOps::r_acts_on_red(int site) const {
    return broken_parity_ ? true : (site % 2 == 1);
}

int SiteOps::apply(RotorKind kind, int site, int pair_idx) const {
    const auto& em = e_map(site);
    int r = basis_->red_of(pair_idx);
    int g = basis_->green_of(pair_idx);
    switch (kind) {
        case RotorKind::E: return basis_->pair_index(em[r], em[g]);
        case RotorKind::R:
            return r_acts_on_red(site) ? basis_->pair_index(em[r], g)
                                       : basis_->pair_index(r, em[g]);
        case RotorKind::L:
            return r_acts_on_red(site) ? basis_->pair_index(r, em[g])
                                       : basis_->pair_index(em[r], g);
    }
    return pair_idx;
}

std::vector<int> SiteOps::op_map(RotorKind kind, int site) const {
    std::vector<int> m(basis_->dim());
    for (int idx = 0; idx < basis_->dim(); ++idx) m[idx] = apply(kind, site, idx);
    return m;
}

StateVector apply_rotor(const SiteOps& ops, RotorKind kind, int site, const StateVector& v) {
    StateVector out(v.basis());
    for (int idx = 0; idx < v.dim(); ++idx) {
        if (v[idx].is_zero()) continue;
        out[ops.apply(kind, site, idx)] += v[idx];
    }
    return out;
}

namespace {

using Map = std::vector<int>;

Map compose(const Map& a, const Map& b) {  // (a . b)(x) = a[b[x]]
    Map out(b.size());
    for (size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
    return out;
}

int first_mismatch(const Map& a, const Map& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return static_cast<int>(i);
    return -1;
}

} // namespace

const AlgebraCheck* AlgebraReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.holds) return &c;
    return nullptr;
}

AlgebraReport check_algebra(Bc bc, int n, bool broken_parity) {
    auto basis = PairBasis::get(bc, n);
    SiteOps ops(basis, broken_parity);
    int sites = ops.sites();
    bool cyclic = bc == Bc::PbcEven;

    AlgebraReport report;
    auto record = [&](const std::string& name, const Map& lhs, const Map& rhs) {
        int w = first_mismatch(lhs, rhs);
        AlgebraCheck c{name, w < 0, w < 0 ? "" : basis->state(w).to_string()};
        if (!c.holds) report.all_hold = false;
        report.checks.push_back(std::move(c));
    };

    std::vector<Map> E(sites), R(sites), L(sites);
    for (int i = 1; i <= sites; ++i) {
        E[i - 1] = ops.op_map(RotorKind::E, i);
        R[i - 1] = ops.op_map(RotorKind::R, i);
        L[i - 1] = ops.op_map(RotorKind::L, i);
    }
    auto site_label = [](const char* fmt, int i, int j = 0) {
        std::string s = fmt;
        size_t p;
        while ((p = s.find("{i}")) != std::string::npos) s.replace(p, 3, std::to_string(i));
        while ((p = s.find("{j}")) != std::string::npos) s.replace(p, 3, std::to_string(j));
        return s;
    };

    // neighbours of site i, respecting the cyclic wrap for pbc-even
    auto neighbours = [&](int i) {
        std::vector<int> out;
        if (cyclic) {
            out.push_back(i % sites + 1);
            out.push_back((i + sites - 2) % sites + 1);
        } else {
            if (i + 1 <= sites) out.push_back(i + 1);
            if (i - 1 >= 1) out.push_back(i - 1);
        }
        return out;
    };
    auto adjacent = [&](int i, int j) {
        int d = std::abs(i - j);
        if (cyclic) d = std::min(d, sites - d);
        return d == 1;
    };

    for (int i = 1; i <= sites; ++i) {
        record(site_label("E_{i} = R_{i} L_{i}", i), E[i - 1], compose(R[i - 1], L[i - 1]));
        record(site_label("E_{i} = L_{i} R_{i}", i), E[i - 1], compose(L[i - 1], R[i - 1]));
        record(site_label("R_{i}^2 = R_{i}", i), compose(R[i - 1], R[i - 1]), R[i - 1]);
        record(site_label("L_{i}^2 = L_{i}", i), compose(L[i - 1], L[i - 1]), L[i - 1]);
        for (int j : neighbours(i)) {
            record(site_label("L_{i} R_{j} L_{i} = L_{i}", i, j),
                   compose(L[i - 1], compose(R[j - 1], L[i - 1])), L[i - 1]);
            record(site_label("R_{i} L_{j} R_{i} = R_{i}", i, j),
                   compose(R[i - 1], compose(L[j - 1], R[i - 1])), R[i - 1]);
            if (first_mismatch(compose(R[i - 1], compose(L[j - 1], R[i - 1])), L[i - 1]) >= 0)
                report.printed_sandwich_variant_holds = false;
            record(site_label("[R_{i}, R_{j}] = 0", i, j),
                   compose(R[i - 1], R[j - 1]), compose(R[j - 1], R[i - 1]));
            record(site_label("[L_{i}, L_{j}] = 0", i, j),
                   compose(L[i - 1], L[j - 1]), compose(L[j - 1], L[i - 1]));
        }
        for (int j = 1; j <= sites; ++j) {
            if (j == i || adjacent(i, j)) continue;
            record(site_label("[R_{i}, R_{j}] = 0", i, j),
                   compose(R[i - 1], R[j - 1]), compose(R[j - 1], R[i - 1]));
            record(site_label("[L_{i}, L_{j}] = 0", i, j),
                   compose(L[i - 1], L[j - 1]), compose(L[j - 1], L[i - 1]));
            record(site_label("[R_{i}, L_{j}] = 0", i, j),
                   compose(R[i - 1], L[j - 1]), compose(L[j - 1], R[i - 1]));
        }
    }
    return report;
}

} // namespace rotorlab
