#ifndef DRLAB_DUAL_HPP
#define DRLAB_DUAL_HPP

#include "drlab/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace drlab {

/// value + derivative * eps with eps^2 = 0. Carries exact first derivatives
/// through any ring computation, including exact divisions.
struct DualScalar {
    Rational value;
    Rational derivative;

    DualScalar() = default;
    DualScalar(Rational v, Rational d = Rational()) : value(std::move(v)), derivative(std::move(d)) {}
    DualScalar(long v) : value(v) {}

    DualScalar &operator+=(const DualScalar &o) {
        value += o.value;
        derivative += o.derivative;
        return *this;
    }
    DualScalar &operator-=(const DualScalar &o) {
        value -= o.value;
        derivative -= o.derivative;
        return *this;
    }
    DualScalar &operator*=(const DualScalar &o) {
        derivative = value * o.derivative + derivative * o.value;
        value *= o.value;
        return *this;
    }

    friend DualScalar operator+(DualScalar a, const DualScalar &b) { return a += b; }
    friend DualScalar operator-(DualScalar a, const DualScalar &b) { return a -= b; }
    friend DualScalar operator*(DualScalar a, const DualScalar &b) { return a *= b; }
    friend DualScalar operator-(const DualScalar &a) { return {-a.value, -a.derivative}; }
    friend bool operator==(const DualScalar &, const DualScalar &) = default;

    friend std::ostream &operator<<(std::ostream &os, const DualScalar &d) {
        return os << "(" << d.value << ", " << d.derivative << ")";
    }
};

inline bool is_zero(const DualScalar &d) { return d.value.is_zero() && d.derivative.is_zero(); }

/// (a + b eps) / (c + d eps) = a/c + (bc - ad)/c^2 eps. Requires c != 0.
inline DualScalar exact_divide(const DualScalar &p, const DualScalar &q) {
    if (q.value.is_zero())
        throw std::domain_error("dual division by a value-zero divisor");
    Rational v = p.value / q.value;
    return {v, (p.derivative - v * q.derivative) / q.value};
}

}  // namespace drlab

#endif  // DRLAB_DUAL_HPP
