#include "doctest.h"

#include "fiatkit/cells.hpp"

using namespace fiatkit;

namespace {

// Catalog index of P(i,j) when Id comes first.
std::size_t p_index(std::size_t n, std::size_t i, std::size_t j) { return 1 + i * n + j; }

std::vector<std::vector<std::size_t>> sorted(std::vector<std::vector<std::size_t>> v) {
    for (auto& c : v) std::sort(c.begin(), c.end());
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("multisemigroup table against block dimensions") {
    for (auto spec : {dual_numbers_spec(), zigzag_a2_spec()}) {
        auto a = build_algebra(spec);
        const std::size_t n = a->num_vertices();
        auto t = multisemigroup_table(a);
        REQUIRE(t.labels.size() == 1 + n * n);
        for (std::size_t f = 0; f < t.labels.size(); ++f) {
            // Id o F = F o Id = F
            std::vector<std::size_t> just_f(t.labels.size(), 0);
            just_f[f] = 1;
            CHECK(t.mult[0][f] == just_f);
            CHECK(t.mult[f][0] == just_f);
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l) {
                        std::vector<std::size_t> expect(t.labels.size(), 0);
                        expect[p_index(n, i, l)] = a->block(j, k).size();
                        CHECK(t.mult[p_index(n, i, j)][p_index(n, k, l)] == expect);
                    }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(t.dual[p_index(n, i, j)] == p_index(n, j, i));
        CHECK(t.dual[0] == 0);
    }
    auto dn = multisemigroup_table(build_algebra(dual_numbers_spec()));
    CHECK(dn.mult[1][1] == std::vector<std::size_t>{0, 2});
}

TEST_CASE("cells of zigzag A2") {
    auto a = build_algebra(zigzag_a2_spec());
    auto t = multisemigroup_table(a);
    auto c = compute_cells(t);
    REQUIRE(c.labels == std::vector<std::string>{"Id", "P(1,1)", "P(1,2)", "P(2,1)", "P(2,2)"});
    // Columns, rows and one J-cell of P's; Id alone.
    CHECK(sorted(c.left_cells) == sorted({{0}, {1, 3}, {2, 4}}));
    CHECK(sorted(c.right_cells) == sorted({{0}, {1, 2}, {3, 4}}));
    CHECK(sorted(c.two_sided_cells) == sorted({{0}, {1, 2, 3, 4}}));
    for (std::size_t f = 0; f < 5; ++f) CHECK(c.two_sided[0][f]);
    CHECK(duflo(cell_of(c.left_cells, 1), t) == 1);
    CHECK(duflo(cell_of(c.left_cells, 2), t) == 4);
    CHECK_THROWS_AS((void)duflo(cell_of(c.left_cells, 0), t), std::invalid_argument);
}

TEST_CASE("cells of the dual numbers") {
    auto t = multisemigroup_table(build_algebra(dual_numbers_spec()));
    auto c = compute_cells(t);
    CHECK(sorted(c.left_cells) == sorted({{0}, {1}}));
    CHECK(sorted(c.two_sided_cells) == sorted({{0}, {1}}));
    CHECK(duflo({1}, t) == 1);
}

TEST_CASE("cell properties") {
    QuiverSpec a3{"zigzag_a3", {"1", "2", "3"}, {{"a1", "1", "2"}, {"b1", "2", "1"}, {"a2", "2", "3"}, {"b2", "3", "2"}}, {}, 3};
    a3.relations.push_back({{Rational(1), {"a1", "a2"}}});
    a3.relations.push_back({{Rational(1), {"b2", "b1"}}});
    a3.relations.push_back({{Rational(1), {"b1", "a1"}}, {Rational(-1), {"a2", "b2"}}});
    for (auto spec : {dual_numbers_spec(), zigzag_a2_spec(), a3}) {
        auto a = build_algebra(spec);
        const std::size_t n = a->num_vertices();
        auto t = multisemigroup_table(a);
        auto c = compute_cells(t);
        const std::size_t m = c.labels.size();
        // Preorders are reflexive and transitive.
        for (const Preorder* r : {&c.left, &c.right, &c.two_sided})
            for (std::size_t x = 0; x < m; ++x) {
                CHECK((*r)[x][x]);
                for (std::size_t y = 0; y < m; ++y)
                    for (std::size_t z = 0; z < m; ++z)
                        if ((*r)[x][y] && (*r)[y][z]) CHECK((*r)[x][z]);
            }
        // Dual swaps left and right.
        for (std::size_t x = 0; x < m; ++x)
            for (std::size_t y = 0; y < m; ++y) CHECK(c.left[x][y] == c.right[t.dual[x]][t.dual[y]]);
        // Left cells are columns; each meets each right cell of P's once.
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> col;
            for (std::size_t i = 0; i < n; ++i) col.push_back(p_index(n, i, j));
            CHECK(cell_of(c.left_cells, col[0]) == col);
            CHECK(duflo(col, t) == p_index(n, j, j));
        }
        for (const auto& l : c.left_cells)
            for (const auto& r : c.right_cells) {
                if (l.front() == 0 || r.front() == 0) continue;
                std::size_t meet = 0;
                for (std::size_t x : l) meet += static_cast<std::size_t>(std::count(r.begin(), r.end(), x));
                CHECK(meet == 1);
            }
    }
}

TEST_CASE("poset dot keeps only covering edges") {
    // chain a < b < c: the a -> c edge is implied
    std::vector<std::string> labels{"a", "b", "c"};
    Preorder leq{{true, true, true}, {false, true, true}, {false, false, true}};
    auto dot = cell_poset_dot(labels, leq, {{0}, {1}, {2}}, "chain");
    CHECK(dot.find("c0 -> c1;") != std::string::npos);
    CHECK(dot.find("c1 -> c2;") != std::string::npos);
    CHECK(dot.find("c0 -> c2;") == std::string::npos);

    // a and b in one cell: no edges at all
    Preorder same{{true, true}, {true, true}};
    auto one = cell_poset_dot({"a", "b"}, same, {{0, 1}}, "one");
    CHECK(one.find("->") == std::string::npos);
    CHECK(one.find("label=\"a b\"") != std::string::npos);
}
