#include "doctest.h"

#include "fiatkit/quiver.hpp"

using namespace fiatkit;

namespace {

QuiverSpec zigzag_a3_spec() {
    QuiverSpec s{"zigzag_a3", {"1", "2", "3"}, {{"a1", "1", "2"}, {"b1", "2", "1"}, {"a2", "2", "3"}, {"b2", "3", "2"}}, {}, 3};
    s.relations.push_back({{Rational(1), {"a1", "a2"}}});
    s.relations.push_back({{Rational(1), {"b2", "b1"}}});
    s.relations.push_back({{Rational(1), {"b1", "a1"}}, {Rational(-1), {"a2", "b2"}}});
    return s;
}

// Number of paths of each length in a quiver, by powers of the adjacency matrix.
std::size_t count_paths_shorter_than(const QuiverSpec& s, int bound) {
    const std::size_t n = s.vertices.size();
    std::vector<std::vector<std::size_t>> adj(n, std::vector<std::size_t>(n, 0));
    auto idx = [&](const std::string& v) {
        return static_cast<std::size_t>(std::find(s.vertices.begin(), s.vertices.end(), v) - s.vertices.begin());
    };
    for (const auto& a : s.arrows) ++adj[idx(a.src)][idx(a.tgt)];
    std::vector<std::vector<std::size_t>> power(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
    std::size_t total = 0;
    for (int len = 0; len < bound; ++len) {
        for (const auto& row : power)
            for (std::size_t x : row) total += x;
        std::vector<std::vector<std::size_t>> next(n, std::vector<std::size_t>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t j = 0; j < n; ++j) next[i][j] += power[i][k] * adj[k][j];
        power = next;
    }
    return total;
}

void check_algebra_axioms(const FDAlgebra& a) {
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                auto bi = a.basis_vector(i), bj = a.basis_vector(j), bk = a.basis_vector(k);
                CHECK(a.multiply(a.multiply(bi, bj), bk) == a.multiply(bi, a.multiply(bj, bk)));
            }
    std::vector<Rational> sum(d);
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        for (std::size_t w = 0; w < a.num_vertices(); ++w) {
            auto p = a.multiply(a.basis_vector(a.idempotent(v)), a.basis_vector(a.idempotent(w)));
            CHECK(p == (v == w ? a.basis_vector(a.idempotent(v)) : std::vector<Rational>(d)));
        }
        sum[a.idempotent(v)] += Rational(1);
        // Primitive: e_v A e_v modulo the radical is one-dimensional.
        std::size_t top = 0;
        for (std::size_t k : a.block(v, v))
            if (a.basis(k).length == 0) ++top;
        CHECK(top == 1);
    }
    CHECK(sum == a.unit());
    for (std::size_t k = 0; k < d; ++k) {
        CHECK(a.multiply(a.unit(), a.basis_vector(k)) == a.basis_vector(k));
        CHECK(a.multiply(a.basis_vector(k), a.unit()) == a.basis_vector(k));
    }
    // The radical is nilpotent: any product of radical_length + 1 radical elements vanishes.
    QMatrix prod = QMatrix::identity(d);
    for (std::size_t r = 0; r <= a.radical_length(); ++r) {
        QMatrix sum_rad(d, d);
        for (std::size_t k : a.radical_generators()) sum_rad += a.left_mult(k);
        prod = prod * sum_rad;
    }
    CHECK(prod.is_zero());
}

}  // namespace

TEST_CASE("dual numbers") {
    auto a = build_algebra(dual_numbers_spec());
    CHECK(a->dim() == 2);
    CHECK(a->basis_labels() == std::vector<std::string>{"e1", "x"});
    check_algebra_axioms(*a);
    CHECK(cartan_matrix(*a) == std::vector<std::vector<long>>{{2}});
    auto x = a->basis_vector(1);
    CHECK(a->multiply(x, x) == std::vector<Rational>(2));
}

TEST_CASE("zigzag A2") {
    auto spec = zigzag_a2_spec();
    auto a = build_algebra(spec);
    CHECK(a->dim() == count_paths_shorter_than(spec, 3));
    CHECK(a->basis_labels() == std::vector<std::string>{"e1", "e2", "a", "b", "ab", "ba"});
    check_algebra_axioms(*a);
    CHECK(cartan_matrix(*a) == std::vector<std::vector<long>>{{2, 1}, {1, 2}});
    CHECK(a->left_projective(0).size() == 3);
    CHECK(a->right_projective(1).size() == 3);
}

TEST_CASE("A2 path and ground field") {
    auto a = build_algebra(a2_path_spec());
    CHECK(a->dim() == 3);
    check_algebra_axioms(*a);
    CHECK(cartan_matrix(*a) == std::vector<std::vector<long>>{{1, 1}, {0, 1}});
    CHECK(cartan_matrix(*ground_field()) == std::vector<std::vector<long>>{{1}});
    CHECK(ground_field()->is_ground_field());
}

TEST_CASE("zigzag A3 with a commutativity relation") {
    auto a = build_algebra(zigzag_a3_spec());
    CHECK(a->dim() == 10);
    check_algebra_axioms(*a);
    CHECK(cartan_matrix(*a) == std::vector<std::vector<long>>{{2, 1, 0}, {1, 2, 1}, {0, 1, 2}});
    auto f = symmetrizing_form(*a);
    REQUIRE(f.has_value());
    CHECK(f->gram == f->gram.transpose());
}

TEST_CASE("cartan matrix does not depend on arrow order") {
    auto spec = zigzag_a3_spec();
    std::reverse(spec.arrows.begin(), spec.arrows.end());
    CHECK(cartan_matrix(*build_algebra(spec)) == cartan_matrix(*build_algebra(zigzag_a3_spec())));
}

TEST_CASE("input validation") {
    QuiverSpec free_loop{"free", {"1"}, {{"x", "1", "1"}}, {}, 2};
    CHECK_THROWS_AS(build_algebra(free_loop), std::domain_error);
    QuiverSpec bad = dual_numbers_spec();
    bad.relations[0][0].path = {"x", "y"};
    CHECK_THROWS_AS(build_algebra(bad), std::invalid_argument);
    QuiverSpec short_rel = dual_numbers_spec();
    short_rel.relations[0][0].path = {"x"};
    CHECK_THROWS_AS(build_algebra(short_rel), std::invalid_argument);
    QuiverSpec not_composable = a2_path_spec();
    not_composable.nilpotency_bound = 3;
    not_composable.relations.push_back({{Rational(1), {"a", "a"}}});
    CHECK_THROWS_AS(build_algebra(not_composable), std::invalid_argument);
    CHECK_THROWS_AS(quiver_spec_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(quiver_spec_from_json(R"({"vertices":["1"]})"), std::invalid_argument);
}

TEST_CASE("json round trip") {
    const auto spec = zigzag_a3_spec();
    const auto back = quiver_spec_from_json(quiver_spec_to_json(spec));
    CHECK(back.vertices == spec.vertices);
    CHECK(back.relations.size() == spec.relations.size());
    CHECK(build_algebra(back)->dim() == 10);
    auto parsed = quiver_spec_from_json(
        R"({"vertices":[1],"arrows":[{"name":"x","src":1,"tgt":1}],"relations":[[{"coeff":"1","path":["x","x"]}]],"nilpotency_bound":2})");
    CHECK(build_algebra(parsed)->dim() == 2);
}

TEST_CASE("symmetrizing forms") {
    SUBCASE("dual numbers: tau(1) = 0, tau(x) = 1") {
        auto a = build_algebra(dual_numbers_spec());
        auto f = symmetrizing_form(*a);
        REQUIRE(f.has_value());
        CHECK(f->values == std::vector<Rational>{0, 1});
        // Dual basis of {1, x} is {x, 1}.
        auto u = f->dual_basis(*a, 0);
        CHECK(u[0] == a->basis_vector(1));
        CHECK(u[1] == a->basis_vector(0));
    }
    SUBCASE("zigzag A2: one on the two cycles") {
        auto a = build_algebra(zigzag_a2_spec());
        auto f = symmetrizing_form(*a);
        REQUIRE(f.has_value());
        CHECK(f->values == std::vector<Rational>{0, 0, 0, 0, 1, 1});
        CHECK(f->gram == f->gram.transpose());
        CHECK(is_invertible(f->gram));
        for (std::size_t e = 0; e < 2; ++e) {
            auto left = a->left_projective(e);
            auto u = f->dual_basis(*a, e);
            for (std::size_t l = 0; l < left.size(); ++l)
                for (std::size_t m = 0; m < left.size(); ++m)
                    CHECK((*f)(a->multiply(u[l], a->basis_vector(left[m]))) == Rational(l == m ? 1 : 0));
        }
    }
    SUBCASE("A2 path has none") { CHECK_FALSE(symmetrizing_form(*build_algebra(a2_path_spec())).has_value()); }
    SUBCASE("ground field") {
        auto f = symmetrizing_form(*ground_field());
        REQUIRE(f.has_value());
        CHECK(f->values == std::vector<Rational>{1});
    }
}
