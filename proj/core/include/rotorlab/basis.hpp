#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotorlab/eisenstein.hpp"
#include "rotorlab/link_pattern.hpp"

namespace rotorlab {

enum class Bc { PbcEven, CbcEven, CbcOdd };

std::string bc_name(Bc bc);
Bc bc_from_name(const std::string& name);
Geometry bc_geometry(Bc bc);
int bc_defects(Bc bc);
// Validates N against the bc (parity, N >= minimum size).
void bc_check_size(Bc bc, int n);

// Ordered pair of link patterns on the same points: one red, one green.
struct PairState {
    LinkPattern red;
    LinkPattern green;

    bool operator==(const PairState& o) const {
        return red == o.red && green == o.green;
    }
    bool operator<(const PairState& o) const {
        if (red == o.red) return green < o.green;
        return red < o.red;
    }
    std::string to_string() const { return red.to_string() + "|" + green.to_string(); }
};

/**
 * The PairState basis for one boundary condition and size, in canonical
 * order: single-colour patterns are sorted lexicographically on their
 * partner arrays and pairs are ordered by (red, green). Instances are
 * cached; get() is safe to call concurrently.
 */
class PairBasis {
public:
    static std::shared_ptr<const PairBasis> get(Bc bc, int n);

    Bc bc() const { return bc_; }
    int size() const { return n_; }
    int dim() const { return static_cast<int>(singles_.size() * singles_.size()); }
    int single_dim() const { return static_cast<int>(singles_.size()); }

    const std::vector<LinkPattern>& singles() const { return singles_; }
    const LinkPattern& single(int idx) const { return singles_[idx]; }
    int single_index(const LinkPattern& p) const;

    PairState state(int idx) const {
        return {singles_[idx / single_dim()], singles_[idx % single_dim()]};
    }
    int red_of(int idx) const { return idx / single_dim(); }
    int green_of(int idx) const { return idx % single_dim(); }
    int pair_index(int red_idx, int green_idx) const {
        return red_idx * single_dim() + green_idx;
    }
    int index_of(const PairState& s) const {
        return pair_index(single_index(s.red), single_index(s.green));
    }

private:
    PairBasis(Bc bc, int n);

    Bc bc_;
    int n_;
    std::vector<LinkPattern> singles_;
};

/**
 * Finite map PairState -> Eis over a fixed basis; stores the coefficients
 * densely in canonical order. Houses ground states and every intermediate
 * vector the diagram operators act on.
 */
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(std::shared_ptr<const PairBasis> basis)
        : basis_(std::move(basis)), coeffs_(basis_->dim()) {}
    StateVector(std::shared_ptr<const PairBasis> basis, std::vector<Eis> coeffs)
        : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
        if (static_cast<int>(coeffs_.size()) != basis_->dim())
            throw std::invalid_argument("StateVector: coefficient count mismatch");
    }

    const std::shared_ptr<const PairBasis>& basis() const { return basis_; }
    int dim() const { return static_cast<int>(coeffs_.size()); }

    const Eis& operator[](int idx) const { return coeffs_[idx]; }
    Eis& operator[](int idx) { return coeffs_[idx]; }
    const std::vector<Eis>& coeffs() const { return coeffs_; }

    const Eis& at(const PairState& s) const { return coeffs_[basis_->index_of(s)]; }

    bool is_zero() const;
    Eis sum() const;

    StateVector& operator+=(const StateVector& o);
    StateVector& operator*=(const Eis& c);
    friend StateVector operator*(const Eis& c, StateVector v) { return v *= c; }

    bool operator==(const StateVector& o) const { return coeffs_ == o.coeffs_; }

    // True iff the two vectors span the same line (either may be zero only
    // if both are).
    static bool proportional(const StateVector& x, const StateVector& y);

private:
    std::shared_ptr<const PairBasis> basis_;
    std::vector<Eis> coeffs_;
};

} // namespace rotorlab
