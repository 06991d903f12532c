#include "doctest.h"

#include "fiatkit/tl.hpp"

#include <cmath>
#include <random>

using namespace fiatkit;

namespace {

NumberFieldElem q_int(int k, int n) {
    auto d = NumberFieldElem::delta(n);
    NumberFieldElem prev = NumberFieldElem::zero(n), cur = NumberFieldElem::one(n);
    if (k == 0) return prev;
    for (int i = 1; i < k; ++i) {
        auto next = d * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

NumberFieldElem rat(int n, long num, long den = 1) { return NumberFieldElem::from_rational(n, Rational(num, den)); }

std::size_t catalan(std::size_t m) {
    std::size_t c = 1;
    for (std::size_t i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

}  // namespace

TEST_CASE("matchings: encoding, planarity and Catalan counts") {
    for (std::size_t m = 0; m <= 8; ++m) {
        auto all = all_matchings(m, m);
        CHECK(all.size() == catalan(m));
        for (auto& d : all) {
            CHECK(PlanarMatching::from_nesting(d.to_nesting(), m, m) == d);
            CHECK(PlanarMatching::from_partners(m, m, d.partner) == d);
        }
    }
    CHECK(all_matchings(1, 3).size() == catalan(2));
    CHECK(all_matchings(0, 6).size() == catalan(3));
    CHECK(all_matchings(1, 2).empty());
    CHECK(PlanarMatching::identity(2).to_nesting() == "(())");
    CHECK(PlanarMatching::generator(2, 1).to_nesting() == "()()");
    CHECK(PlanarMatching::identity(3).through_degree() == 3);
    CHECK(PlanarMatching::generator(3, 2).through_degree() == 1);
    CHECK_THROWS_AS(PlanarMatching::from_partners(2, 2, {3, 2, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(PlanarMatching::from_nesting("(()", 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(PlanarMatching::from_nesting("))((", 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(PlanarMatching::from_nesting("()", 2, 2), std::invalid_argument);
}

TEST_CASE("composition: loops and small relations") {
    const int n = 5;
    auto delta = NumberFieldElem::delta(n);
    auto e1 = TLMorphism::generator(n, 2, 1);
    CHECK(compose(e1, e1) == delta * e1);

    auto cup = TLMorphism::from_matching(n, PlanarMatching::from_nesting("()", 0, 2));
    auto cap = TLMorphism::from_matching(n, PlanarMatching::from_nesting("()", 2, 0));
    auto closed = compose(cup, cap);
    CHECK(closed.bottom == 0);
    CHECK(closed.top == 0);
    CHECK(closed == delta * TLMorphism::identity(n, 0));

    auto a = TLMorphism::generator(n, 3, 1), b = TLMorphism::generator(n, 3, 2);
    CHECK(compose(compose(a, b), a) == a);
    CHECK(compose(compose(b, a), b) == b);
    CHECK_FALSE(compose(a, b) == compose(b, a));

    CHECK_THROWS_AS(compose(e1, a), std::invalid_argument);
    CHECK_THROWS_AS(compose(e1, TLMorphism::generator(6, 2, 1)), std::invalid_argument);
    auto s = e1, t = e1;
    s.color = 's';
    t.color = 't';
    CHECK_THROWS_AS(compose(s, t), std::invalid_argument);
    CHECK(compose(s, e1).color == 's');
}

TEST_CASE("composition is associative on random triples") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        std::size_t m[4];
        m[0] = rng() % 7;
        for (int i = 1; i < 4; ++i) {
            m[i] = rng() % 7;
            if ((m[i] + m[i - 1]) % 2 != 0) m[i] = m[i] == 6 ? 5 : m[i] + 1;
        }
        TLMorphism f[3];
        for (int i = 0; i < 3; ++i) {
            auto basis = all_matchings(m[i], m[i + 1]);
            f[i] = TLMorphism::zero(n, m[i], m[i + 1]);
            for (int t = 0; t < 3; ++t) {
                auto c = rat(n, static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
                auto term = c * TLMorphism::from_matching(n, basis[rng() % basis.size()]);
                f[i] += term;
            }
        }
        CHECK(compose(compose(f[0], f[1]), f[2]) == compose(f[0], compose(f[1], f[2])));
    }
}

TEST_CASE("Jones-Wenzl projectors") {
    // JW_2 at n = 4 is 1 - (1/delta) e_1, and 1/delta = delta/2 there
    auto jw2 = jones_wenzl(2, 4);
    auto expect = TLMorphism::identity(4, 2) - (rat(4, 1, 2) * NumberFieldElem::delta(4)) * TLMorphism::generator(4, 2, 1);
    CHECK(jw2 == expect);
    CHECK(jones_wenzl(1, 7) == TLMorphism::identity(7, 1));

    auto jw3 = jones_wenzl(3, 4);
    CHECK(compose(TLMorphism::generator(4, 3, 1), jw3).is_zero());

    // closed form of JW_3
    for (int n : {5, 6, 8}) {
        auto e1 = TLMorphism::generator(n, 3, 1), e2 = TLMorphism::generator(n, 3, 2);
        auto q2 = q_int(2, n), q3 = q_int(3, n);
        auto closed = TLMorphism::identity(n, 3) - (q2 / q3) * (e1 + e2) +
                      (NumberFieldElem::one(n) / q3) * (compose(e1, e2) + compose(e2, e1));
        CHECK(jones_wenzl(3, n) == closed);
    }

    for (int n = 4; n <= 8; ++n)
        for (std::size_t k = 1; k + 1 <= static_cast<std::size_t>(n); ++k) {
            auto jw = jones_wenzl(k, n);
            CHECK(jw.terms.size() == catalan(k));
            CHECK(is_idempotent(jw));
            CHECK(kills_generators(jw));
            auto tr = markov_trace(jw);
            if (k + 1 < static_cast<std::size_t>(n)) {
                CHECK(tr == q_int(static_cast<int>(k) + 1, n));
                double pi = std::acos(-1.0);
                CHECK(tr.to_double() == doctest::Approx(std::sin((k + 1) * pi / n) / std::sin(pi / n)));
            } else {
                CHECK(tr.is_zero());
            }
        }
    CHECK_THROWS_AS(jones_wenzl(4, 4), std::domain_error);
    CHECK_THROWS_AS(jones_wenzl(0, 4), std::invalid_argument);
    CHECK_FALSE(kills_generators(TLMorphism::identity(5, 2)));
    CHECK_FALSE(is_idempotent(TLMorphism::generator(5, 2, 1)));
}

TEST_CASE("Markov trace and negligibility") {
    CHECK(markov_trace(TLMorphism::identity(6, 1)) == NumberFieldElem::delta(6));
    auto d = NumberFieldElem::delta(6);
    CHECK(markov_trace(TLMorphism::generator(6, 2, 1)) == d);
    CHECK(markov_trace(TLMorphism::identity(6, 2)) == d * d);
    CHECK_THROWS_AS(markov_trace(TLMorphism::from_matching(6, PlanarMatching::from_nesting("()", 0, 2))),
                    std::invalid_argument);

    for (int n = 4; n <= 8; ++n) {
        auto jw = jones_wenzl(static_cast<std::size_t>(n - 1), n);
        auto rep = negligibility_check(jw);
        CHECK(rep.negligible);
        CHECK(rep.closures == catalan(static_cast<std::size_t>(n - 1)));
        if (n <= 6) {
            auto below = negligibility_check(jones_wenzl(static_cast<std::size_t>(n - 2), n));
            CHECK_FALSE(below.negligible);
        }
    }
    auto id = negligibility_check(TLMorphism::identity(5, 1));
    CHECK_FALSE(id.negligible);
    REQUIRE(id.witness.has_value());
    CHECK(negligibility_check(TLMorphism::zero(5, 2, 2)).negligible);
}

TEST_CASE("coloring and embedding") {
    auto e = color_and_embed(3, 's', 6);
    CHECK(e.word == "sts");
    CHECK(e.object.strands == 3);
    CHECK(e.object.leftmost() == 't');
    CHECK(color_and_embed(0, 't', 4).word.empty());
    CHECK(color_and_embed(2, 't', 5).word == "st");
    CHECK(color_and_embed(2, 't', 5).object.leftmost() == 't');
    CHECK_THROWS_AS(color_and_embed(3, 's', 4), std::invalid_argument);
    CHECK_THROWS_AS(color_and_embed(1, 'u', 4), std::invalid_argument);
    // the rightmost color fixes both ends of every diagram consistently
    for (std::size_t m = 0; m <= 5; ++m)
        for (std::size_t mp = m % 2; mp <= 5; mp += 2)
            for (char c : {'s', 't'}) {
                CHECK(ColoredObject{m, c}.leftmost() == ColoredObject{mp, c}.leftmost());
                char other = c == 's' ? 't' : 's';
                CHECK(ColoredObject{m, other}.leftmost() != ColoredObject{m, c}.leftmost());
            }
}
