#pragma once

#include "rotorlab/matrix.hpp"
#include "rotorlab/operators.hpp"

namespace rotorlab {

enum class FaceKind { R, L, A, D };

/**
 * Class-II face weights at spectral parameters (z, w):
 *   omega_R = omega_L = (w - z)(z + q w)
 *   omega_D = q (w - q z)(z + q w)
 *   omega_A = (w - z)(w + q z)
 * Their sum is q w^2 - z^2, which is also the action of the left functional
 * <<Omega| on Rcheck(z, w). Degenerate points: omega_A and omega_R vanish at
 * w = z, omega_D at w = q z and at w = -q^2 z.
 */
Eis omega(FaceKind kind, const Eis& z, const Eis& w);

struct FaceWeights {
    Eis wR, wL, wA, wD;
    static FaceWeights at(const Eis& z, const Eis& w);
    Eis sum() const { return wR + wL + wA + wD; }
};

/**
 * Rcheck_i(z, w) = omega_D Id + omega_A E_i + omega_R (R_i + L_i), applied
 * lazily via the diagram operators.
 */
StateVector apply_rcheck(const SiteOps& ops, int site, const Eis& z, const Eis& w,
                         const StateVector& v);

EisMatrix rcheck_matrix(const SiteOps& ops, int site, const Eis& z, const Eis& w);

// Exact check of Rcheck_i(w,z) Rcheck_i(z,w) = q^2 (w^2 - q^2 z^2)(z^2 - q^2 w^2) Id.
bool check_unitarity(const SiteOps& ops, int site, const Eis& z, const Eis& w);

/**
 * The functional T = sum over green patterns: collapses a pair-basis vector
 * onto the single-colour (red) basis. Returned coefficients are indexed by
 * the canonical single-pattern order of the basis.
 */
std::vector<Eis> trace_green(const StateVector& v);

// The matrix of the trace functional: single_dim x pair_dim.
EisMatrix trace_matrix(const PairBasis& basis);

/**
 * Single-colour Rcheck of the O(1) model in the squared variables,
 *   Rcheck_O1(x, y) = (q x - y) Id + q^2 (x - y) e_i,
 * with (x, y) = (z^2, w^2). The closed form follows from the omega sums
 * omega_D + omega_L = q z^2 - w^2 and omega_A + omega_R = q^2 (z^2 - w^2);
 * the trace intertwining test is its correctness gate.
 */
std::vector<Eis> apply_rcheck_o1(const SiteOps& ops, int site, const Eis& x, const Eis& y,
                                 const std::vector<Eis>& w);

EisMatrix rcheck_o1_matrix(const SiteOps& ops, int site, const Eis& x, const Eis& y);

} // namespace rotorlab
