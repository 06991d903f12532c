#include "fiatkit/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace fiatkit {

LaurentIntPoly LaurentIntPoly::monomial(int exponent, const mpz_class& coeff) {
    LaurentIntPoly p;
    p.add_term(exponent, coeff);
    return p;
}

void LaurentIntPoly::add_term(int e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

mpz_class LaurentIntPoly::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class LaurentIntPoly::at_one() const {
    mpz_class s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentIntPoly LaurentIntPoly::bar() const {
    LaurentIntPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

std::string LaurentIntPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "v";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

LaurentIntPoly& LaurentIntPoly::operator+=(const LaurentIntPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentIntPoly& LaurentIntPoly::operator-=(const LaurentIntPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentIntPoly operator*(const LaurentIntPoly& a, const LaurentIntPoly& b) {
    LaurentIntPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentIntPoly laurent_quantum_integer(int k) {
    if (k < 0) throw std::domain_error("quantum integer index must be nonnegative");
    LaurentIntPoly p;
    for (int e = -(k - 1); e <= k - 1; e += 2) p += LaurentIntPoly::monomial(e);
    return p;
}

}  // namespace fiatkit
