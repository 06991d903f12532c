#include "doctest.h"

#include "fiatkit/laurent.hpp"
#include "fiatkit/linalg.hpp"
#include "fiatkit/number_field.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace fiatkit;

namespace {

int euler_phi(int m) {
    int r = 0;
    for (int k = 1; k <= m; ++k)
        if (std::gcd(k, m) == 1) ++r;
    return r;
}

// x^d * Psi(x + 1/x) expanded as an integer polynomial in x.
IntPoly reverse_substitute(const IntPoly& psi) {
    const std::size_t d = psi.size() - 1;
    IntPoly out(2 * d + 1, mpz_class(0));
    for (std::size_t k = 0; k <= d; ++k) {
        // (x^2 + 1)^k x^(d-k): binomial expansion.
        mpz_class binom = 1;
        for (std::size_t i = 0; i <= k; ++i) {
            out[2 * i + (d - k)] += psi[k] * binom;
            binom = binom * static_cast<unsigned long>(k - i) / static_cast<unsigned long>(i + 1);
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

QMatrix multiplication_by_delta(int n) {
    const NumberFieldElem d = NumberFieldElem::delta(n);
    const int deg = d.degree();
    QMatrix m(deg, deg);
    for (int j = 0; j < deg; ++j) {
        std::vector<Rational> e(deg, Rational(0));
        e[j] = Rational(1);
        NumberFieldElem col = NumberFieldElem::from_coefficients(n, e) * d;
        for (int i = 0; i < deg; ++i) m(i, j) = col.coefficients()[i];
    }
    return m;
}

NumberFieldElem random_element(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    const int deg = NumberFieldElem::one(n).degree();
    std::vector<Rational> c;
    for (int i = 0; i < deg; ++i) c.emplace_back(num(rng), den(rng));
    return NumberFieldElem::from_coefficients(n, c);
}

QMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(-3, 3), sparsity(0, 2);
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (sparsity(rng) != 0) m(i, j) = Rational(pick(rng));
    return m;
}

}  // namespace

TEST_CASE("rational parsing and normalization") {
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse(" -2 ").to_string() == "-2");
    CHECK(Rational(4, -6).to_string() == "-2/3");
    CHECK(Rational(4, -6).denominator() > 0);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS((void)Rational(0).inverse(), std::domain_error);
}

TEST_CASE("minimal polynomial of 2cos(pi/n)") {
    CHECK(poly_to_string(minpoly_delta(3)) == "y - 1");
    CHECK(poly_to_string(minpoly_delta(4)) == "y^2 - 2");
    CHECK(poly_to_string(minpoly_delta(6)) == "y^2 - 3");
    CHECK_THROWS_AS(minpoly_delta(2), std::domain_error);

    // Phi_8 = x^4 + 1 by hand; x^2 * Psi_4(x + 1/x) must reproduce it.
    CHECK(reverse_substitute(minpoly_delta(4)) == IntPoly{1, 0, 0, 0, 1});

    for (int n = 3; n <= 30; ++n) {
        const IntPoly& psi = minpoly_delta(n);
        CAPTURE(n);
        CHECK(static_cast<int>(psi.size()) - 1 == euler_phi(2 * n) / 2);
        CHECK(reverse_substitute(psi) == cyclotomic_polynomial(2 * n));
        const double delta = 2.0 * std::cos(std::numbers::pi / n);
        double v = 0.0, p = 1.0;
        for (const auto& c : psi) {
            v += c.get_d() * p;
            p *= delta;
        }
        CHECK(std::abs(v) < 1e-6);
    }
}

TEST_CASE("minimal polynomial annihilates the companion representation of delta") {
    for (int n = 3; n <= 14; ++n) {
        const QMatrix d = multiplication_by_delta(n);
        const IntPoly& psi = minpoly_delta(n);
        QMatrix acc(d.rows(), d.cols());
        QMatrix power = QMatrix::identity(d.rows());
        for (const auto& c : psi) {
            acc += power * Rational(c);
            power = power * d;
        }
        CAPTURE(n);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("quantum integers") {
    for (int n = 3; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(quantum_integer(1, n) == NumberFieldElem::one(n));
        CHECK(quantum_integer(n, n).is_zero());
        const NumberFieldElem two = quantum_integer(2, n);
        CHECK(two == NumberFieldElem::delta(n));
        for (int k = 1; k <= n - 1; ++k) {
            CHECK(quantum_integer(k, n) * two == quantum_integer(k + 1, n) + quantum_integer(k - 1, n));
            const double expect = std::sin(k * std::numbers::pi / n) / std::sin(std::numbers::pi / n);
            CHECK(std::abs(quantum_integer(k, n).to_double() - expect) < 1e-9);
        }
    }
    CHECK(quantum_integer(3, 4) == NumberFieldElem::one(4));
}

TEST_CASE("number field arithmetic is a field") {
    std::mt19937 rng(20261015);
    for (int n = 3; n <= 12; ++n) {
        for (int trial = 0; trial < 100; ++trial) {
            NumberFieldElem a = random_element(n, rng), b = random_element(n, rng), c = random_element(n, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK(a * a.inverse() == NumberFieldElem::one(n));
        }
    }
    CHECK_THROWS_AS((void)NumberFieldElem::zero(5).inverse(), std::domain_error);
    CHECK_THROWS_AS(NumberFieldElem::one(5) + NumberFieldElem::one(7), std::domain_error);
    // A tagless zero adopts the field of its partner.
    NumberFieldElem z;
    z += NumberFieldElem::delta(5);
    CHECK(z == NumberFieldElem::delta(5));
    CHECK(NumberFieldElem::delta(4).to_string() == "d");
    CHECK((NumberFieldElem::delta(4) * NumberFieldElem::delta(4)).to_string() == "2");
}

TEST_CASE("laurent polynomials") {
    LaurentIntPoly q3 = laurent_quantum_integer(3);
    CHECK(q3.to_string() == "v^-2 + 1 + v^2");
    CHECK(q3.at_one() == 3);
    CHECK(q3.bar() == q3);
    LaurentIntPoly q2 = laurent_quantum_integer(2);
    CHECK(q2 * q2 == laurent_quantum_integer(3) + laurent_quantum_integer(1));
    CHECK((q2 - q2).is_zero());
    CHECK((q2 - q2).to_string() == "0");
}

TEST_CASE("kernel examples") {
    CHECK(kernel(QMatrix::identity(2)).cols() == 0);
    CHECK(kernel(QMatrix(2, 3)).cols() == 3);
    QMatrix m{{1, 1}, {1, 1}};
    QMatrix k = kernel(m);
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0) == -k(1, 0));
    CHECK((m * k).is_zero());
}

TEST_CASE("cokernel examples") {
    CHECK(cokernel_projection(QMatrix::identity(3)).dim == 0);
    CHECK(cokernel_projection(QMatrix(4, 2)).dim == 4);
    QMatrix r1{{1, 2}, {2, 4}};
    Cokernel<Rational> ck = cokernel_projection(r1);
    CHECK(ck.dim == 1);
    CHECK((ck.projection * r1).is_zero());
    CHECK(ck.projection * ck.section == QMatrix::identity(1));
}

TEST_CASE("solve_linear examples") {
    CHECK(solve_linear<Rational>(3, {}).size() == 3);
    SparseVec<Rational> x_eq_y{{0, Rational(1)}, {1, Rational(-1)}};
    auto sol = solve_linear<Rational>(2, {x_eq_y});
    REQUIRE(sol.size() == 1);
    CHECK(sol[0][0] == sol[0][1]);

    // Schur: intertwiners of the irreducible 2-dim representation of the
    // dihedral group of order 8 are scalars. Unknown X (2x2, index 2i+j)
    // with X g = g X for the rotation and reflection generators.
    std::vector<QMatrix> gens{QMatrix{{0, -1}, {1, 0}}, QMatrix{{1, 0}, {0, -1}}};
    std::vector<SparseVec<Rational>> eqs;
    for (const auto& g : gens)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                SparseVec<Rational> eq;
                for (std::size_t l = 0; l < 2; ++l) {
                    if (!g(l, j).is_zero()) eq.emplace_back(2 * i + l, g(l, j));
                    if (!g(i, l).is_zero()) eq.emplace_back(2 * l + j, -g(i, l));
                }
                eqs.push_back(eq);
            }
    auto schur = solve_linear<Rational>(4, eqs);
    REQUIRE(schur.size() == 1);
    CHECK(schur[0][1].is_zero());
    CHECK(schur[0][2].is_zero());
    CHECK(schur[0][0] == schur[0][3]);
}

TEST_CASE("rank-nullity and exact annihilation on random matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> size(1, 7);
    for (int trial = 0; trial < 200; ++trial) {
        QMatrix m = random_matrix(size(rng), size(rng), rng);
        QMatrix k = kernel(m);
        CHECK(rank(m) + k.cols() == m.cols());
        CHECK((m * k).is_zero());
        CHECK(rank(k) == k.cols());
        Cokernel<Rational> ck = cokernel_projection(m);
        CHECK(ck.dim == m.rows() - rank(m));
        CHECK((ck.projection * m).is_zero());
        CHECK(rank(ck.projection) == ck.dim);
        CHECK(rank(image_basis(m)) == rank(m));
    }
}

TEST_CASE("inverse, affine solve, left inverse") {
    std::mt19937 rng(11);
    int invertible = 0;
    for (int trial = 0; trial < 100; ++trial) {
        QMatrix m = random_matrix(4, 4, rng);
        if (!is_invertible(m)) {
            CHECK_THROWS_AS(inverse(m), std::domain_error);
            continue;
        }
        ++invertible;
        CHECK(inverse(m) * m == QMatrix::identity(4));
        std::vector<Rational> b{1, 2, 3, 4};
        auto x = solve_affine(m, b);
        REQUIRE(x.has_value());
        CHECK(m.apply(*x) == b);
    }
    CHECK(invertible > 10);

    QMatrix tall{{1, 0}, {2, 1}, {0, 3}};
    CHECK(left_inverse(tall) * tall == QMatrix::identity(2));
    CHECK_FALSE(solve_affine(QMatrix{{1, 1}, {1, 1}}, {Rational(1), Rational(2)}).has_value());
}

TEST_CASE("linear algebra over Q(delta)") {
    const int n = 5;
    NumberFieldElem d = NumberFieldElem::delta(n), one = NumberFieldElem::one(n);
    // delta^2 = delta + 1 at n = 5, so [[delta, 1], [delta + 1, delta]] is singular.
    CHECK(d * d == d + one);
    Matrix<NumberFieldElem> m(2, 2);
    m(0, 0) = d;
    m(0, 1) = one;
    m(1, 0) = d + one;
    m(1, 1) = d;
    CHECK(rank(m) == 1);
    auto k = kernel(m);
    REQUIRE(k.cols() == 1);
    CHECK((m * k).is_zero());
}
