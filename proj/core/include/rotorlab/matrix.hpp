#pragma once

#include <vector>

#include "rotorlab/eisenstein.hpp"

namespace rotorlab {

/**
 * Dense matrix over Q(q), row major. Sizes in this project stay below
 * 200 x 200, so exact Gaussian elimination with eagerly reduced rationals
 * is the workhorse for ranks, kernels and determinants.
 */
class EisMatrix {
public:
    EisMatrix() : rows_(0), cols_(0) {}
    EisMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    static EisMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Eis& operator()(int r, int c) const { return data_[size_t(r) * cols_ + c]; }
    Eis& operator()(int r, int c) { return data_[size_t(r) * cols_ + c]; }

    bool operator==(const EisMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    EisMatrix operator*(const EisMatrix& o) const;
    EisMatrix operator+(const EisMatrix& o) const;
    EisMatrix operator-(const EisMatrix& o) const;
    EisMatrix operator*(const Eis& c) const;

    std::vector<Eis> apply(const std::vector<Eis>& v) const;

    bool is_zero() const;
    std::vector<Eis> column_sums() const;

    // In-place row reduction to echelon form; returns the rank. Used by
    // kernel() and determinant().
    int rref();

    // Basis of the right null space.
    std::vector<std::vector<Eis>> kernel() const;

    Eis determinant() const;

    /**
     * Certified upper bound on the kernel dimension: the matrix is reduced
     * modulo a prime p = 1 (mod 3), sending q to a cube root of unity in
     * F_p; rank can only drop under reduction, so cols - rank_p bounds the
     * rational kernel dimension from above. Together with one exact kernel
     * vector this pins dimension 1 without a full exact elimination.
     * Returns -1 if no listed prime admits the reduction (denominator
     * divisible by p).
     */
    int kernel_dim_upper_bound() const;

private:
    int rows_, cols_;
    std::vector<Eis> data_;
};

EisMatrix commutator(const EisMatrix& a, const EisMatrix& b);

} // namespace rotorlab
