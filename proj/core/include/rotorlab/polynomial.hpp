#pragma once

#include <optional>

#include "rotorlab/ground_state.hpp"

namespace rotorlab {

/**
 * Dense multivariate polynomial over Q(q) with per-variable degree bounds.
 * Small by construction (the reconstructed ground states have per-variable
 * degree 2 at pbc size 4), so no sparse machinery.
 */
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(int vars, std::vector<long> degree_bounds);

    int vars() const { return vars_; }
    const std::vector<long>& bounds() const { return bounds_; }

    Eis& coeff(const std::vector<long>& exponents);
    const Eis& coeff(const std::vector<long>& exponents) const;

    Eis eval(const std::vector<Eis>& values) const;

    // Largest exponent of the variable appearing with a nonzero coefficient
    // (-1 for the zero polynomial).
    long degree(int var) const;

    bool is_zero() const;

    MultiPoly operator-(const MultiPoly& o) const;

    // Exact division by (z_a + coef * z_b); nullopt if the remainder is
    // nonzero.
    std::optional<MultiPoly> divide_linear(int a, int b, const Eis& coef) const;

    bool symmetric_in(int a, int b) const;

    /**
     * Tensor-grid Lagrange interpolation: values[k] is the sample on the
     * grid point whose coordinates step through nodes[v] with the last
     * variable fastest.
     */
    static MultiPoly interpolate(const std::vector<std::vector<Eis>>& nodes,
                                 const std::vector<Eis>& values);

private:
    size_t index(const std::vector<long>& exponents) const;

    int vars_ = 0;
    std::vector<long> bounds_;
    std::vector<size_t> strides_;
    std::vector<Eis> coeffs_;
};

/**
 * Ground-state components as polynomials in the z, recovered from exact
 * kernels on a tensor grid, normalized at every grid point by the sum rule
 * (the Schur or symplectic closed form). sizes: pbc-even 2n = 4, cbc N <= 4.
 */
struct ReconstructedGroundState {
    Bc bc;
    int n = 0;
    std::shared_ptr<const PairBasis> basis;
    std::vector<MultiPoly> components;  // canonical basis order
    long degree_bound = 0;              // assumed per-variable degree

    // Fresh kernel solve at the point versus evaluation of the polynomials;
    // a mismatch flags the degree assumption.
    bool consistent_at(const SamplePoint& point) const;
};

ReconstructedGroundState reconstruct_polynomial(Bc bc, int n, const Rat& t = Rat(2));

} // namespace rotorlab
