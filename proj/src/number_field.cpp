#include "fiatkit/number_field.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace fiatkit {
namespace {

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// Exact division of integer polynomials; the divisor must be monic.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) throw std::logic_error("cyclotomic division underflow");
    IntPoly q(num.size() - dd, mpz_class(0));
    for (std::size_t k = num.size(); k-- > dd;) {
        mpz_class c = num[k];
        q[k - dd] = c;
        for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
    }
    trim(num);
    if (!num.empty()) throw std::logic_error("cyclotomic division left a remainder");
    trim(q);
    return q;
}

IntPoly compute_cyclotomic(int m) {
    IntPoly p(static_cast<std::size_t>(m) + 1, mpz_class(0));
    p[0] = -1;
    p[static_cast<std::size_t>(m)] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
    return p;
}

IntPoly compute_minpoly_delta(int n) {
    const IntPoly& phi = cyclotomic_polynomial(2 * n);
    const std::size_t deg = phi.size() - 1;
    const std::size_t d = deg / 2;
    for (std::size_t i = 0; i <= deg; ++i)
        if (phi[i] != phi[deg - i]) throw std::logic_error("cyclotomic polynomial not palindromic");
    // x^k + x^-k = T_k(y) with T_0 = 2, T_1 = y, T_{k+1} = y T_k - T_{k-1}.
    std::vector<IntPoly> cheb;
    cheb.push_back(IntPoly{mpz_class(2)});
    cheb.push_back(IntPoly{mpz_class(0), mpz_class(1)});
    for (std::size_t k = 1; k < d; ++k) {
        IntPoly next = multiply(cheb[k], IntPoly{mpz_class(0), mpz_class(1)});
        const IntPoly& prev = cheb[k - 1];
        if (next.size() < prev.size()) next.resize(prev.size(), mpz_class(0));
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        trim(next);
        cheb.push_back(std::move(next));
    }
    IntPoly psi(d + 1, mpz_class(0));
    psi[0] = phi[d];
    for (std::size_t k = 1; k <= d; ++k) {
        const IntPoly& t = cheb[k];
        for (std::size_t i = 0; i < t.size(); ++i) psi[i] += phi[d + k] * t[i];
    }
    trim(psi);
    if (psi.size() != d + 1 || psi.back() != 1) throw std::logic_error("minimal polynomial is not monic");
    return psi;
}

}  // namespace

const IntPoly& cyclotomic_polynomial(int m) {
    if (m < 1) throw std::domain_error("cyclotomic index must be positive");
    static std::map<int, IntPoly> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    IntPoly p = compute_cyclotomic(m);
    std::lock_guard<std::mutex> lock(cache_mutex());
    return cache.emplace(m, std::move(p)).first->second;
}

const IntPoly& minpoly_delta(int n) {
    if (n < 3) throw std::domain_error("minpoly_delta requires n >= 3");
    static std::map<int, IntPoly> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    IntPoly p = compute_minpoly_delta(n);
    std::lock_guard<std::mutex> lock(cache_mutex());
    return cache.emplace(n, std::move(p)).first->second;
}

std::string poly_to_string(const IntPoly& p, char var) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = p.size(); k-- > 0;) {
        const mpz_class& c = p[k];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0 || a != 1) os << a.get_str();
        if (k >= 1) os << var;
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

void NumberFieldElem::adopt(int tag) {
    if (tag == 0 || tag_ == tag) return;
    if (tag_ != 0) throw std::domain_error("number field tag mismatch");
    tag_ = tag;
    c_.assign(minpoly_delta(tag).size() - 1, Rational(0));
}

NumberFieldElem NumberFieldElem::zero(int n) {
    NumberFieldElem x;
    x.adopt(n);
    return x;
}

NumberFieldElem NumberFieldElem::one(int n) { return from_rational(n, Rational(1)); }

NumberFieldElem NumberFieldElem::from_rational(int n, const Rational& r) {
    NumberFieldElem x = zero(n);
    x.c_[0] = r;
    return x;
}

NumberFieldElem NumberFieldElem::delta(int n) {
    std::vector<Rational> c{Rational(0), Rational(1)};
    return from_coefficients(n, std::move(c));
}

NumberFieldElem NumberFieldElem::from_coefficients(int n, std::vector<Rational> coeffs) {
    const IntPoly& psi = minpoly_delta(n);
    const std::size_t d = psi.size() - 1;
    for (std::size_t k = coeffs.size(); k-- > d;) {
        Rational c = coeffs[k];
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i <= d; ++i) coeffs[k - d + i] -= c * Rational(psi[i]);
    }
    coeffs.resize(d, Rational(0));
    NumberFieldElem x;
    x.tag_ = n;
    x.c_ = std::move(coeffs);
    return x;
}

bool NumberFieldElem::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool NumberFieldElem::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

double NumberFieldElem::to_double() const {
    if (tag_ == 0) return 0.0;
    const double d = 2.0 * std::cos(std::numbers::pi / tag_);
    double v = 0.0, p = 1.0;
    for (const auto& c : c_) {
        v += c.to_double() * p;
        p *= d;
    }
    return v;
}

std::string NumberFieldElem::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        if (k == 0) {
            os << c_[k];
        } else {
            if (!c_[k].is_one()) os << c_[k] << "*";
            os << "d";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

NumberFieldElem& NumberFieldElem::operator+=(const NumberFieldElem& o) {
    adopt(o.tag_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

NumberFieldElem& NumberFieldElem::operator-=(const NumberFieldElem& o) {
    adopt(o.tag_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

NumberFieldElem& NumberFieldElem::operator*=(const NumberFieldElem& o) {
    adopt(o.tag_);
    if (tag_ == 0) return *this;
    NumberFieldElem other = o;
    other.adopt(tag_);
    const std::size_t d = c_.size();
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (other.c_[j].is_zero()) continue;
            prod[i + j] += c_[i] * other.c_[j];
        }
    }
    *this = from_coefficients(tag_, std::move(prod));
    return *this;
}

NumberFieldElem operator-(const NumberFieldElem& a) {
    NumberFieldElem r = a;
    for (auto& c : r.c_) c = -c;
    return r;
}

bool operator==(const NumberFieldElem& a, const NumberFieldElem& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.tag_ == b.tag_ && a.c_ == b.c_;
}

NumberFieldElem NumberFieldElem::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in Q(delta)");
    const std::size_t d = c_.size();
    // Solve (multiplication-by-this matrix) * x = e_0 by Gauss-Jordan.
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1, Rational(0)));
    NumberFieldElem basis = one(tag_);
    const NumberFieldElem dlt = delta(tag_);
    for (std::size_t j = 0; j < d; ++j) {
        NumberFieldElem col = *this * basis;
        for (std::size_t i = 0; i < d; ++i) m[i][j] = col.c_[i];
        basis *= dlt;
    }
    m[0][d] = Rational(1);
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        while (piv < d && m[piv][col].is_zero()) ++piv;
        if (piv == d) throw std::logic_error("singular multiplication matrix in Q(delta)");
        std::swap(m[piv], m[col]);
        Rational inv = m[col][col].inverse();
        for (auto& v : m[col]) v *= inv;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (std::size_t k = col; k <= d; ++k) m[r][k] -= f * m[col][k];
        }
    }
    std::vector<Rational> x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = m[i][d];
    return from_coefficients(tag_, std::move(x));
}

NumberFieldElem quantum_integer(int k, int n) {
    if (k < 0) throw std::domain_error("quantum integer index must be nonnegative");
    NumberFieldElem prev = NumberFieldElem::zero(n);
    if (k == 0) return prev;
    NumberFieldElem cur = NumberFieldElem::one(n);
    const NumberFieldElem dlt = NumberFieldElem::delta(n);
    for (int i = 1; i < k; ++i) {
        NumberFieldElem next = dlt * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace fiatkit
