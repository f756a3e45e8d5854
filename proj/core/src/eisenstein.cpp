#include "rotorlab/eisenstein.hpp"

#include <ostream>
#include <sstream>

namespace rotorlab {

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Eis Eis::q_pow(long k) {
    long m = ((k % 3) + 3) % 3;
    switch (m) {
        case 0: return Eis(1);
        case 1: return q();
        default: return q2();
    }
}

Eis Eis::pow(long k) const {
    if (k < 0) return inv().pow(-k);
    Eis result(1);
    Eis base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

std::string Eis::to_string() const {
    std::ostringstream os;
    if (b_ == 0) {
        os << a_;
    } else if (b_ > 0) {
        os << a_ << "+" << b_ << "*q";
    } else {
        os << a_ << "-" << -b_ << "*q";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Eis& x) {
    return os << x.to_string();
}

} // namespace rotorlab
