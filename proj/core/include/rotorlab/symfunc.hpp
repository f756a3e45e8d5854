#pragma once

#include <functional>
#include <vector>

#include "rotorlab/matrix.hpp"

namespace rotorlab {

struct Partition {
    std::vector<long> parts;  // weakly decreasing, trailing zeros stripped

    Partition() = default;
    explicit Partition(std::vector<long> p);

    long length() const { return static_cast<long>(parts.size()); }
    long weight() const;
    long part(long i) const { return i < length() ? parts[i] : 0; }  // 0-based

    // Two rows each of lengths n-1, n-2, ..., 1.
    static Partition y(int n);
    // y(n) with one extra row of length n on top.
    static Partition y_prime(int n);
};

// h_0 .. h_max of the given values (valid at repeated values).
std::vector<Eis> complete_homogeneous(const std::vector<Eis>& values, long max_degree);

// Schur polynomial via the Jacobi-Trudi determinant in the h_k; works at
// arbitrary (also coincident) values.
Eis schur(const Partition& lambda, const std::vector<Eis>& values);

// Independent route: bialternant ratio det(v_i^{l_j+N-j}) / det(v_i^{N-j}).
// Requires pairwise distinct values.
Eis schur_bialternant(const Partition& lambda, const std::vector<Eis>& values);

// Exact Pfaffian of an antisymmetric matrix of even dimension. Recursive
// expansion up to dimension 6, skew elimination above.
Eis pfaffian(const EisMatrix& a);

/**
 * Symplectic character
 *   chi_N(z) = (prod_i z_i^{ceil(N/2)-1})
 *              det(z_i^{e_j} - z_i^{-e_j}) / det(z_i^j - z_i^{-j}),
 * with e_j = j + ceil(j/2) - 1 the positive integers not divisible by 3.
 * The prefactor exponent makes chi a polynomial of degree
 * 2 (ceil(N/2) - 1) in each variable with chi(.., 1/z_i, ..) =
 * z_i^{-2(ceil(N/2)-1)} chi(.., z_i, ..). Coincident or self-inverse values
 * make the denominator vanish; evaluate through eval_on_line or the product
 * formulas instead.
 */
Eis symplectic_character(int n_sites, const std::vector<Eis>& values);

/**
 * Value of a polynomial map at a possibly degenerate point: restrict to the
 * rational line target + s * direction, interpolate in s from degree_bound+1
 * good nodes (nodes where f throws are skipped), and read off s = 0.
 */
Eis eval_on_line(const std::function<Eis(const std::vector<Eis>&)>& f,
                 const std::vector<Eis>& target, long degree_bound);

/**
 * Same resolution in a single variable: interpolate f in variable var at
 * rational nodes and evaluate the interpolant at target[var]. Used where an
 * evaluation formula has a removable singularity in one variable, e.g. the
 * Pfaffian form of the punctured-cylinder MNC at its own recursion point.
 */
Eis eval_interp_var(const std::function<Eis(const std::vector<Eis>&)>& f,
                    const std::vector<Eis>& target, int var, long degree_bound);

// --- enumeration product formulas ---------------------------------------

enum class Seq {
    Asm1,     // A(n;1)
    Asm3,     // A(n;3)
    Av1,      // A_V(2n+1;1)
    Av3,      // A_V(2n+1;3)
    AhtEven,  // A_HT(2n)
    AhtOdd,   // A_HT(2n+1)
    N8,       // cyclically symmetric transpose complement plane partitions N_8(2n)
    Theta,    // floor((n-1)(n+2)/3)
};

Rat sequence_value(Seq s, int n);

// Both sides of the factorial identity equating the chi specialization
// with A(n+1;1).
Rat chi_asm_identity_lhs(int n);
Rat chi_asm_identity_rhs(int n);

// --- sum rules ------------------------------------------------------------

enum class SumRule { PbcEven, PbcOdd, PbcInfty, Cbc };

// Sum of the ground-state components as a closed form in the z:
//   pbc-even : S_{Y_n}(z^2)
//   pbc-odd  : S_{Y_{n+1}}(z^2) S_{Y'_n}(z^2)
//   pbc-infty: S_{Y_n}(z^2) S_{Y'_n}(z^2)
//   cbc      : chi_N(z^2)
// The cbc form requires a generic point (see symplectic_character).
Eis sum_formula(SumRule rule, const std::vector<Eis>& z);

// Homogeneous values via the enumeration products.
Rat sum_formula_hom(SumRule rule, int n_sites);

// --- maximally nested components -------------------------------------------

/**
 * PBC-even MNC: red pattern fully nested (arcs (i, 2n+1-i)), green pattern
 * the red one rotated by m sites, m + k = n. Evaluates the factorized
 * closed form (trivial exchange factors times two Schur polynomials in the
 * sign-split variables), normalized so that together with
 * sum_formula(PbcEven) it reproduces the eigenvector ratios exactly: the
 * overall unit is anchored to the homogeneous value A(m;3) A(k;3).
 * z in circle order, length 2(m+k).
 */
Eis mnc_pbc_even(int m, int k, const std::vector<Eis>& z);

// Nontrivial factor Psi~*_{0,k} of the punctured / odd cylinder MNCs:
// Pfaffian formula for even k, leading-coefficient reduction from k+1 for
// odd k. Requires pairwise distinct z.
Eis mnc_pbc_star_tilde(int k, const std::vector<Eis>& z);

enum class StarKind { Odd, Infty };

// Full component Psi*_{m,k} = (per-block exchange factors) x
// Psi~*_{0,m}(z_1..z_m) Psi~*_{0,k}(z_{m+1}..z_{m+k}). Odd kind needs
// m + k odd, infty kind even.
Eis mnc_pbc_star(StarKind kind, int m, int k, const std::vector<Eis>& z);

// Homogeneous value of the full Psi*_{0,k}, via line interpolation.
Rat mnc_pbc_star_hom(int k);

// --- closed boundary MNCs ---------------------------------------------------

enum class CbcMncKind { Even, OddA, OddS };

/**
 * CBC MNC closed forms: inversion/exchange trivial factors times
 * chi(-z_1, .., -z_n, z_..) with the first block sign-flipped (for OddS the
 * variable z_{n+1} enters only through the trivial factors). Normalized by
 * the homogeneous anchor values of mnc_cbc_hom. Generic z required.
 */
Eis mnc_cbc(CbcMncKind kind, int n_sites, const std::vector<Eis>& z);

// Homogeneous values: A_V(2n+1;3) for Even (N = 2n) and OddS (N = 2n+1),
// 3^{n(n-1)/2} A(n+1;1) for OddA (N = 2n+1).
Rat mnc_cbc_hom(CbcMncKind kind, int n_sites);

} // namespace rotorlab
