#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rotorlab/basis.hpp"

namespace rotorlab {

enum class RotorKind { E, R, L };

/**
 * The diagram operators e_i, E_i, R_i, L_i on a fixed basis. Each one maps
 * basis states to basis states, so they are stored as index maps; linear
 * extension to StateVectors is a permutation-free scatter.
 *
 * Colour convention: R_i applies e_i to the red pattern when i is odd and
 * to the green pattern when i is even; L_i acts on the opposite colour.
 * This is the unique assignment (up to the global colour swap) compatible
 * with the sandwich relations L_i R_{i+-1} L_i = L_i, which check_algebra
 * verifies.
 */
class SiteOps {
public:
    SiteOps(std::shared_ptr<const PairBasis> basis, bool broken_parity = false);

    const std::shared_ptr<const PairBasis>& basis() const { return basis_; }
    int sites() const { return sites_; }

    // Index map on the single-colour basis.
    const std::vector<int>& e_map(int site) const { return e_single_[site - 1]; }

    // Index map on the pair basis.
    std::vector<int> op_map(RotorKind kind, int site) const;

    // True if R_site acts on the red pattern (and L_site on the green one).
    bool r_acts_on_red(int site) const;

    int apply(RotorKind kind, int site, int pair_idx) const;

private:
    std::shared_ptr<const PairBasis> basis_;
    int sites_;
    bool broken_parity_;
    std::vector<std::vector<int>> e_single_;
};

StateVector apply_rotor(const SiteOps& ops, RotorKind kind, int site, const StateVector& v);

struct AlgebraCheck {
    std::string relation;
    bool holds = false;
    std::string witness;  // basis state where the relation first fails
};

struct AlgebraReport {
    bool all_hold = true;
    std::vector<AlgebraCheck> checks;
    // Status of the relation R_i L_{i+-1} R_i = L_i exactly as printed; the
    // algebra itself forces R_i on the right-hand side, which is verified
    // as part of the main suite.
    bool printed_sandwich_variant_holds = true;

    const AlgebraCheck* first_failure() const;
};

/**
 * Verifies, as exact identities of basis maps on the full PairState basis:
 *   E_i = R_i L_i = L_i R_i,  R_i^2 = R_i,  L_i^2 = L_i,
 *   L_i R_{i+-1} L_i = L_i,  R_i L_{i+-1} R_i = R_i,
 *   [R_i, R_j] = [L_i, L_j] = [R_i, L_j] = 0 for |i-j| >= 2,
 *   [R_i, R_{i+-1}] = [L_i, L_{i+-1}] = 0.
 * Adjacency is cyclic for pbc-even. broken_parity deliberately pins R to
 * the red colour at every site (negative control for the tests).
 */
AlgebraReport check_algebra(Bc bc, int n, bool broken_parity = false);

} // namespace rotorlab
