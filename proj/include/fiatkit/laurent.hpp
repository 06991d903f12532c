#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace fiatkit {

/// Finitely supported Laurent polynomial in v with integer coefficients.
/// Zero coefficients are never stored.
class LaurentIntPoly {
public:
    LaurentIntPoly() = default;
    static LaurentIntPoly monomial(int exponent, const mpz_class& coeff = 1);

    [[nodiscard]] const std::map<int, mpz_class>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] mpz_class coefficient(int exponent) const;
    /// Specialization v = 1.
    [[nodiscard]] mpz_class at_one() const;
    /// Bar involution v -> v^{-1}.
    [[nodiscard]] LaurentIntPoly bar() const;
    /// e.g. "v^-1 + 2 + v^3"; "0" for the zero polynomial.
    [[nodiscard]] std::string to_string() const;

    LaurentIntPoly& operator+=(const LaurentIntPoly& o);
    LaurentIntPoly& operator-=(const LaurentIntPoly& o);
    friend LaurentIntPoly operator+(LaurentIntPoly a, const LaurentIntPoly& b) { return a += b; }
    friend LaurentIntPoly operator-(LaurentIntPoly a, const LaurentIntPoly& b) { return a -= b; }
    friend LaurentIntPoly operator*(const LaurentIntPoly& a, const LaurentIntPoly& b);
    friend bool operator==(const LaurentIntPoly& a, const LaurentIntPoly& b) { return a.terms_ == b.terms_; }

private:
    void add_term(int e, const mpz_class& c);
    std::map<int, mpz_class> terms_;
};

/// Balanced quantum integer v^{-(k-1)} + v^{-(k-3)} + ... + v^{k-1}.
LaurentIntPoly laurent_quantum_integer(int k);

}  // namespace fiatkit
