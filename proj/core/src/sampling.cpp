#include "rotorlab/sampling.hpp"

#include <stdexcept>

namespace rotorlab {

SamplePoint SamplePoint::with_swapped(int site) const {
    SamplePoint p = *this;
    std::swap(p.z[site - 1], p.z[site]);
    return p;
}

SamplePoint SamplePoint::without_sites(int i, int j) const {
    SamplePoint p;
    p.t = t;
    for (int k = 0; k < static_cast<int>(z.size()); ++k)
        if (k != i - 1 && k != j - 1) p.z.push_back(z[k]);
    return p;
}

bool SamplePoint::generic() const {
    // t*t = 1 collapses the double-row matrix to a scalar (the return row
    // inverts the outward one), so it is excluded along with t = 0.
    if (t.is_zero() || t * t == Eis(1)) return false;
    const Eis one(1);
    for (const auto& zi : z) {
        if (zi.is_zero()) return false;
        // z_i^2 = 1 is a pole of the closed-boundary character formulas
        if (zi * zi == one) return false;
    }
    for (size_t i = 0; i < z.size(); ++i) {
        for (size_t j = 0; j < z.size(); ++j) {
            if (i == j) continue;
            Eis zi2 = z[i] * z[i], zj2 = z[j] * z[j];
            if (zj2 == zi2 || zj2 == Eis::q() * zi2 || zj2 == Eis::q2() * zi2) return false;
            if (zi2 * zj2 == one) return false;  // z->1/z degeneracy (cbc)
        }
    }
    return true;
}

Rat random_rational(std::mt19937_64& rng) {
    for (;;) {
        long num = static_cast<long>(rng() % 21) - 10;
        long den = static_cast<long>(rng() % 7) + 1;
        if (num != 0) return Rat(num, den);
    }
}

std::vector<SamplePoint> sample_points(std::uint64_t seed, int n, int count,
                                       const PointConstraint& constraint) {
    std::mt19937_64 rng(seed);
    std::vector<SamplePoint> out;
    const Eis minus_q2 = Eis(Rat(1), Rat(1));  // -q^2 = 1 + q
    int attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > 10000 * count)
            throw std::runtime_error("sample_points: constraint infeasible");
        SamplePoint p;
        p.z.resize(n);
        for (int i = 0; i < n; ++i) p.z[i] = Eis(random_rational(rng));
        p.t = Eis(random_rational(rng));
        if (!p.generic()) continue;

        switch (constraint.type) {
            case PointConstraint::Type::None:
                break;
            case PointConstraint::Type::MinusQ2:
                p.z[constraint.site] = minus_q2 * p.z[constraint.site - 1];
                break;
            case PointConstraint::Type::TimesQ:
                p.z[constraint.site] = Eis::q() * p.z[constraint.site - 1];
                break;
            case PointConstraint::Type::TimesQ2:
                p.z[constraint.site] = Eis::q2() * p.z[constraint.site - 1];
                break;
            case PointConstraint::Type::Wheel:
                p.z[constraint.site] = minus_q2 * p.z[constraint.site - 1];
                p.z[constraint.site + 1] = Eis::q() * p.z[constraint.site - 1];
                break;
        }
        // after forcing a degeneracy the remaining pairs must stay generic
        if (constraint.type != PointConstraint::Type::None) {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                if (p.z[i].is_zero()) ok = false;
                for (int j = 0; j < n && ok; ++j) {
                    if (i == j) continue;
                    bool pinned =
                        (j == constraint.site && i == constraint.site - 1) ||
                        (i == constraint.site && j == constraint.site - 1) ||
                        (constraint.type == PointConstraint::Type::Wheel &&
                         ((j == constraint.site + 1) || (i == constraint.site + 1)));
                    if (pinned) continue;
                    Eis zi2 = p.z[i] * p.z[i], zj2 = p.z[j] * p.z[j];
                    if (zj2 == zi2 || zj2 == Eis::q() * zi2 || zj2 == Eis::q2() * zi2) ok = false;
                }
            }
            if (!ok) continue;
        }
        out.push_back(std::move(p));
    }
    return out;
}

SamplePoint homogeneous_point(int n, const Rat& t) {
    SamplePoint p;
    p.z.assign(n, Eis(1));
    p.t = Eis(t);
    return p;
}

} // namespace rotorlab
