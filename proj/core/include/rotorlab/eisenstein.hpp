#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "rotorlab/rational.hpp"

namespace rotorlab {

/**
 * Element a + b*q of the field Q(q), where q = e^{2*pi*i/3} satisfies
 * q^2 + q + 1 = 0. This is the coefficient field of the whole library;
 * every weight, matrix entry and ground-state component lives here.
 *
 * Multiplication reduces by q^2 = -1 - q:
 *   (a1 + b1 q)(a2 + b2 q) = (a1 a2 - b1 b2) + (a1 b2 + a2 b1 - b1 b2) q
 * The norm N(a + bq) = a^2 - ab + b^2 is rational and multiplicative, so
 * every nonzero element is invertible via the conjugate (q -> q^2).
 */
class Eis {
public:
    Eis() : a_(0), b_(0) {}
    Eis(int v) : a_(v), b_(0) {}              // NOLINT: implicit by design
    Eis(long v) : a_(v), b_(0) {}             // NOLINT
    Eis(const Rat& v) : a_(v), b_(0) {}       // NOLINT
    Eis(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

    static Eis q() { return Eis(Rat(0), Rat(1)); }
    static Eis q2() { return Eis(Rat(-1), Rat(-1)); }
    // q^k for any integer k (reduced mod 3)
    static Eis q_pow(long k);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    friend Eis operator+(const Eis& x, const Eis& y) {
        return Eis(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend Eis operator-(const Eis& x, const Eis& y) {
        return Eis(x.a_ - y.a_, x.b_ - y.b_);
    }
    Eis operator-() const { return Eis(-a_, -b_); }

    friend Eis operator*(const Eis& x, const Eis& y) {
        return Eis(x.a_ * y.a_ - x.b_ * y.b_,
                   x.a_ * y.b_ + x.b_ * y.a_ - x.b_ * y.b_);
    }

    // Field automorphism q -> q^2, i.e. complex conjugation on Q(q).
    Eis conj() const { return Eis(a_ - b_, -b_); }

    // a^2 - ab + b^2, rational and >= 0, zero only at zero.
    Rat norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

    Eis inv() const {
        Rat n = norm();
        if (n == 0) throw std::domain_error("Eis::inv: division by zero");
        Eis c = conj();
        return Eis(c.a_ / n, c.b_ / n);
    }

    friend Eis operator/(const Eis& x, const Eis& y) { return x * y.inv(); }

    Eis& operator+=(const Eis& y) { a_ += y.a_; b_ += y.b_; return *this; }
    Eis& operator-=(const Eis& y) { a_ -= y.a_; b_ -= y.b_; return *this; }
    Eis& operator*=(const Eis& y) { *this = *this * y; return *this; }
    Eis& operator/=(const Eis& y) { *this = *this / y; return *this; }

    friend bool operator==(const Eis& x, const Eis& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Eis& x, const Eis& y) { return !(x == y); }

    Eis pow(long k) const;

    // Textual form "a+b*q" with rationals as "p/r"; plain "a" when b = 0.
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Eis& x);

private:
    Rat a_, b_;
};

} // namespace rotorlab
