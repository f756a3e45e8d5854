#include "rotorlab/basis.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace rotorlab {

std::string bc_name(Bc bc) {
    switch (bc) {
        case Bc::PbcEven: return "pbc-even";
        case Bc::CbcEven: return "cbc-even";
        case Bc::CbcOdd: return "cbc-odd";
    }
    return "?";
}

Bc bc_from_name(const std::string& name) {
    if (name == "pbc-even") return Bc::PbcEven;
    if (name == "cbc-even") return Bc::CbcEven;
    if (name == "cbc-odd") return Bc::CbcOdd;
    throw std::invalid_argument("unknown boundary condition: " + name);
}

Geometry bc_geometry(Bc bc) {
    return bc == Bc::PbcEven ? Geometry::Disk : Geometry::HalfPlane;
}

int bc_defects(Bc bc) {
    return bc == Bc::CbcOdd ? 1 : 0;
}

void bc_check_size(Bc bc, int n) {
    if (n < 2 - bc_defects(bc)) throw std::invalid_argument("size too small");
    if ((n - bc_defects(bc)) % 2 != 0)
        throw std::invalid_argument("size parity does not match boundary condition " + bc_name(bc));
}

PairBasis::PairBasis(Bc bc, int n) : bc_(bc), n_(n) {
    bc_check_size(bc, n);
    singles_ = enumerate_patterns(n, bc_defects(bc), bc_geometry(bc));
}

std::shared_ptr<const PairBasis> PairBasis::get(Bc bc, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const PairBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(bc), n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto basis = std::shared_ptr<const PairBasis>(new PairBasis(bc, n));
    cache.emplace(key, basis);
    return basis;
}

int PairBasis::single_index(const LinkPattern& p) const {
    auto it = std::lower_bound(singles_.begin(), singles_.end(), p);
    if (it == singles_.end() || !(*it == p))
        throw std::invalid_argument("pattern not in basis: " + p.to_string());
    return static_cast<int>(it - singles_.begin());
}

bool StateVector::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

Eis StateVector::sum() const {
    Eis s;
    for (const auto& c : coeffs_) s += c;
    return s;
}

StateVector& StateVector::operator+=(const StateVector& o) {
    if (dim() != o.dim()) throw std::invalid_argument("StateVector: dimension mismatch");
    for (int i = 0; i < dim(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

StateVector& StateVector::operator*=(const Eis& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

bool StateVector::proportional(const StateVector& x, const StateVector& y) {
    if (x.dim() != y.dim()) return false;
    // cross products x_i y_j = x_j y_i for all i, j; one nonzero anchor is
    // enough by transitivity.
    int anchor = -1;
    for (int i = 0; i < x.dim(); ++i) {
        if (!x[i].is_zero() || !y[i].is_zero()) { anchor = i; break; }
    }
    if (anchor < 0) return true;  // both zero
    for (int i = 0; i < x.dim(); ++i) {
        if (!(x[anchor] * y[i] == x[i] * y[anchor])) return false;
    }
    return true;
}

} // namespace rotorlab
