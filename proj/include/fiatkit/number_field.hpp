#pragma once

#include "fiatkit/rational.hpp"

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <vector>

namespace fiatkit {

/// Integer polynomial, coefficient of y^k at index k.
using IntPoly = std::vector<mpz_class>;

/// Cyclotomic polynomial Phi_m over the integers (m >= 1). Cached.
const IntPoly& cyclotomic_polynomial(int m);

/// Minimal polynomial Psi_n of delta = 2cos(pi/n) over Q, obtained from
/// Phi_{2n} by substituting x = y + 1/y. Degree phi(2n)/2, monic. Cached.
/// Throws std::domain_error for n < 3.
const IntPoly& minpoly_delta(int n);

std::string poly_to_string(const IntPoly& p, char var = 'y');

/// Element of Q(delta), delta = 2cos(pi/n), stored as coefficients of
/// 1, delta, ..., delta^{d-1} with d = deg Psi_n.
///
/// A default-constructed element is a field-agnostic zero (tag 0); it adopts
/// the tag of whatever it is combined with. Mixing two different nonzero tags
/// throws std::domain_error.
class NumberFieldElem {
public:
    NumberFieldElem() = default;

    static NumberFieldElem zero(int n);
    static NumberFieldElem one(int n);
    static NumberFieldElem from_rational(int n, const Rational& r);
    static NumberFieldElem delta(int n);
    /// Coefficients are reduced modulo Psi_n if longer than its degree.
    static NumberFieldElem from_coefficients(int n, std::vector<Rational> coeffs);

    [[nodiscard]] int field_tag() const { return tag_; }
    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()); }
    [[nodiscard]] const std::vector<Rational>& coefficients() const { return c_; }
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_rational() const;
    /// Numeric value at delta = 2cos(pi/n); for reports only.
    [[nodiscard]] double to_double() const;
    /// "c0 + c1*d + c2*d^2" with rational coefficient strings; "0" for zero.
    [[nodiscard]] std::string to_string() const;

    /// Throws std::domain_error for zero.
    [[nodiscard]] NumberFieldElem inverse() const;

    NumberFieldElem& operator+=(const NumberFieldElem& o);
    NumberFieldElem& operator-=(const NumberFieldElem& o);
    NumberFieldElem& operator*=(const NumberFieldElem& o);
    NumberFieldElem& operator/=(const NumberFieldElem& o) { return *this *= o.inverse(); }

    friend NumberFieldElem operator+(NumberFieldElem a, const NumberFieldElem& b) { return a += b; }
    friend NumberFieldElem operator-(NumberFieldElem a, const NumberFieldElem& b) { return a -= b; }
    friend NumberFieldElem operator*(NumberFieldElem a, const NumberFieldElem& b) { return a *= b; }
    friend NumberFieldElem operator/(NumberFieldElem a, const NumberFieldElem& b) { return a /= b; }
    friend NumberFieldElem operator-(const NumberFieldElem& a);

    friend bool operator==(const NumberFieldElem& a, const NumberFieldElem& b);

    friend std::ostream& operator<<(std::ostream& os, const NumberFieldElem& x) { return os << x.to_string(); }

private:
    void adopt(int tag);
    int tag_ = 0;
    std::vector<Rational> c_;
};

inline bool is_zero(const NumberFieldElem& x) { return x.is_zero(); }
inline NumberFieldElem one_like(const NumberFieldElem& x) { return NumberFieldElem::one(x.field_tag()); }

/// Quantum integer [k] in Q(delta): [0]=0, [1]=1, [k+1] = delta[k] - [k-1].
NumberFieldElem quantum_integer(int k, int n);

}  // namespace fiatkit
