#pragma once

#include "fiatkit/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fiatkit {

/// Nonnegative integer combination of ring basis elements (entries may go
/// negative in residuals).
using ClassVector = std::vector<std::int64_t>;

/// Dense square int64 matrix, row-major.
struct IntMatrix {
    std::size_t n = 0;
    std::vector<std::int64_t> data;

    IntMatrix() = default;
    explicit IntMatrix(std::size_t size) : n(size), data(size * size, 0) {}
    static IntMatrix identity(std::size_t size);
    std::int64_t& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }
    bool operator==(const IntMatrix&) const = default;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_symmetric() const;
};

/// Throws std::overflow_error when the exact product leaves int64.
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Verlinde ring with basis L_0..L_{n-2} and truncated Clebsch-Gordan rules.
struct FusionRing {
    int n = 0;
    std::size_t rank = 0;
    std::vector<std::int64_t> structure;  // N_{ij}^k at (i * rank + j) * rank + k
    bool associative = false;

    [[nodiscard]] std::int64_t coefficient(std::size_t i, std::size_t j, std::size_t k) const {
        return structure[(i * rank + j) * rank + k];
    }
    /// Matrix of x -> L_i x on the basis.
    [[nodiscard]] IntMatrix left_matrix(std::size_t i) const;
    [[nodiscard]] ClassVector multiply(const ClassVector& a, const ClassVector& b) const;
    [[nodiscard]] ClassVector basis(std::size_t i) const;
};

/// Throws std::invalid_argument for n < 3.
FusionRing fusion_ring(int n);
/// L_i L_j = sum_k N_{ij}^k L_k as left multiplication matrices.
bool fusion_associativity_holds(const FusionRing& ring);

struct Graph {
    std::string name;
    IntMatrix adjacency;  // symmetric; a diagonal 1 is a loop
};

Graph graph_a(std::size_t k);
Graph graph_d(std::size_t k);  // k >= 4
Graph graph_e(std::size_t k);  // k in {6, 7, 8}
Graph graph_t(std::size_t k);  // tadpole: path with a loop at the last vertex

struct BasedModule {
    Graph graph;
    int n = 0;
    std::vector<IntMatrix> m;  // M_0 .. M_{n-1} (shorter if the recursion overflowed)
    bool valid = false;
    bool overflow = false;
};

/// M_0 = I, M_1 = adjacency, M_{k+1} = M_1 M_k - M_{k-1}; valid when
/// M_0..M_{n-2} are nonnegative and M_{n-1} = 0. Throws std::invalid_argument
/// for non-symmetric, negative or disconnected graphs.
BasedModule based_module_from_graph(const Graph& g, int n);

/// M_i M_j = sum_k N_{ij}^k M_k for all i, j.
bool ring_homomorphism_holds(const BasedModule& m, const FusionRing& ring);

/// Names of the A_k, D_k (k <= max_vertices), E_6..E_8 and T_k graphs whose
/// based module at n is valid, in that order.
std::vector<std::string> ade_scan(int n, std::size_t max_vertices);
inline std::vector<std::string> ade_scan(int n) { return ade_scan(n, static_cast<std::size_t>(n)); }

/// Coefficient of L_k is (M_k)_{vertex, vertex}. Throws for invalid modules.
ClassVector internal_end_class(const BasedModule& m, std::size_t vertex);

/// Dihedral group of order 2n: element labels are reduced words ("e", "s",
/// "t", "st", ...); the longest element is labelled by its s-word.
struct KLRing {
    int n = 0;
    bool small_quotient = false;
    std::vector<std::string> labels;  // e, then s- and t-words by length, w0 last
    std::vector<IntMatrix> left_ops;  // b_x acting by left multiplication

    [[nodiscard]] std::size_t size() const { return labels.size(); }
    [[nodiscard]] std::size_t longest() const { return labels.size() - 1; }
    [[nodiscard]] std::size_t length(std::size_t w) const;
    /// Accepts either reduced word of w0. Throws std::invalid_argument for non-reduced or unknown words.
    [[nodiscard]] std::size_t index_of(const std::string& word) const;
    [[nodiscard]] ClassVector basis(std::size_t w) const;
    [[nodiscard]] ClassVector multiply(const ClassVector& a, const ClassVector& b) const;
};

/// Multiplication from b_s b_w = 2 b_w (sw < w), b_{sw} + b_z (z the s-word of
/// length l(w) - 1) otherwise, extended by b_{sx} = b_s b_x - b_{z}. The small
/// quotient drops the b_{w0} coordinate.
KLRing kl_ring(int n, bool small_quotient);

/// Independent oracle: b_w = sum_{y <= w} y multiplied in the integral group
/// ring and re-expanded in the b basis (reduced mod b_{w0} when asked).
ClassVector kl_group_ring_product(int n, const std::string& x, const std::string& w, bool small_quotient);
ClassVector kl_group_ring_product(const KLRing& ring, const ClassVector& a, const ClassVector& b);

/// b_s + b_z with z the length n-1 element starting and ending with s (n even).
ClassVector kl_type_d_class(const KLRing& ring);
/// b_s + b_{s w0}, the literal reading.
ClassVector kl_literal_d_class(const KLRing& ring);

struct IdempotencyReport {
    ClassVector square;
    std::optional<Rational> lambda;  // x^2 = lambda x with lambda >= 0
    ClassVector residual;            // square - lambda x, or the square itself
};
IdempotencyReport pseudo_idempotent_check(const FusionRing& ring, const ClassVector& x);
IdempotencyReport pseudo_idempotent_check(const KLRing& ring, const ClassVector& x);

}  // namespace fiatkit
