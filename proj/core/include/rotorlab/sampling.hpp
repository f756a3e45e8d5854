#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rotorlab/eisenstein.hpp"

namespace rotorlab {

/**
 * One evaluation point: a spectral parameter per site plus the auxiliary
 * parameter t. Generic points are rational, which automatically avoids the
 * loci z_j^2 in {q z_i^2, q^2 z_i^2}; targeted degeneracies (z_{i+1} equal
 * to -q^2 z_i or q z_i) put Eisenstein values into z.
 */
struct SamplePoint {
    std::vector<Eis> z;
    Eis t;

    SamplePoint with_swapped(int site) const;     // exchange z_site, z_site+1
    SamplePoint without_sites(int i, int j) const;

    // z_j^2 not in {z_i^2, q z_i^2, q^2 z_i^2} for all i != j, all z nonzero
    bool generic() const;
};

struct PointConstraint {
    enum class Type {
        None,
        MinusQ2,   // z_{site+1} = -q^2 z_site
        TimesQ,    // z_{site+1} = q z_site
        TimesQ2,   // z_{site+1} = q^2 z_site
        Wheel,     // z_{site+1} = -q^2 z_site and z_{site+2} = q z_site
    };
    Type type = Type::None;
    int site = 1;
};

// Nonzero rational with numerator in [-10, 10] and denominator in [1, 7].
// Raw generator output is consumed directly so sequences are identical on
// every platform.
Rat random_rational(std::mt19937_64& rng);

/**
 * Deterministic sample points: distinct nonzero rational z_i with
 * |z_i| != |z_j|, rational t with t != z degeneracies, and the requested
 * constraint substituted exactly afterwards. Throws after a bounded number
 * of rejection rounds (cannot happen for the supported sizes).
 */
std::vector<SamplePoint> sample_points(std::uint64_t seed, int n, int count,
                                       const PointConstraint& constraint = {});

SamplePoint homogeneous_point(int n, const Rat& t = Rat(2));

} // namespace rotorlab
