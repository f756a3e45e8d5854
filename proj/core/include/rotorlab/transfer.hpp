#pragma once

#include "rotorlab/matrix.hpp"
#include "rotorlab/rmatrix.hpp"
#include "rotorlab/sampling.hpp"

namespace rotorlab {

/**
 * Row transfer matrix T(t|z) (pbc-even) or double-row transfer matrix
 * D(t|z) (cbc), as an exact matrix on the PairState basis in canonical
 * order. lambda is the eigenvalue of the all-ones left functional: the
 * product prod_i (q z_i^2 - t^2) for pbc-even, and the measured common
 * column sum for cbc (the paper does not print a closed form for it).
 */
struct TransferMatrix {
    Bc bc;
    int n = 0;
    SamplePoint point;
    std::shared_ptr<const PairBasis> basis;
    EisMatrix entries;
    Eis lambda;
};

Eis lambda_pbc_even(const SamplePoint& point);

/**
 * Assembles the transfer matrix by a frontier scan over the row faces: each
 * face routes its two red and two green line ends into one of two planar
 * corner configurations per colour, the four combinations carrying the four
 * omega weights; auxiliary strands close around the period (trace) or
 * through the boundary U-turns (cbc, with t -> 1/t on the return row).
 * Closed loops have weight 1.
 *
 * The face-gluing conventions are not printable from the text; they are
 * pinned, uniquely at the tested sizes, by the contract triple
 *   (a) [T(t), T(t')] = 0,
 *   (b) <<Omega| T = lambda <<Omega|,
 *   (c) T(t; .., z_i, z_{i+1}, ..) Rcheck_i = Rcheck_i T(t; .., z_{i+1}, z_i, ..)
 *       (pbc-even) / ground-state invariance under z -> 1/z at the ends (cbc).
 * Contract (b) is verified on every build and failure aborts with the
 * witness column; (a) and (c) run in the verification suites.
 */
TransferMatrix build_transfer(Bc bc, const SamplePoint& point);

TransferMatrix build_transfer_pbc_even(const SamplePoint& point);
TransferMatrix build_transfer_cbc(Bc bc, const SamplePoint& point);

// Single-colour O(1) row transfer matrix at auxiliary parameter s and site
// parameters x (pbc, trace closure), on the single-pattern basis of the
// given pair basis. Used for the trace intertwining checks.
EisMatrix build_transfer_o1(const std::vector<Eis>& x, const Eis& s,
                            const std::shared_ptr<const PairBasis>& basis);

// Contract (a): [T(t), T(t')] = 0 with the same z and an independent t.
bool check_commuting_family(Bc bc, const SamplePoint& point, const Eis& t_other);

// Contract (c), pbc-even.
bool check_intertwining(const SamplePoint& point, int site);

// Trace mapping to the O(1) model: T T(t|z) = T_O1(t^2|z^2) T exactly.
bool check_trace_intertwining(const SamplePoint& point);

} // namespace rotorlab
