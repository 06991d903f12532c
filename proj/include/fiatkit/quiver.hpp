#pragma once

#include "fiatkit/linalg.hpp"
#include "fiatkit/matrix.hpp"
#include "fiatkit/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fiatkit {

struct Arrow {
    std::string name;
    std::string src;
    std::string tgt;
};

struct RelationTerm {
    Rational coeff;
    std::vector<std::string> path;  // arrow names, composed left to right
};
using Relation = std::vector<RelationTerm>;

/// Presentation of a basic algebra as a quiver with relations. Paths are read
/// left to right: the path (a, b) is "a then b" and needs tgt(a) = src(b).
struct QuiverSpec {
    std::string name;
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;
    int nilpotency_bound = 1;
};

/// Parses {"vertices", "arrows", "relations", "nilpotency_bound"[, "name"]}.
/// Throws std::invalid_argument ("parse error: ...") on malformed input.
QuiverSpec quiver_spec_from_json(std::string_view text);
std::string quiver_spec_to_json(const QuiverSpec& spec);

QuiverSpec dual_numbers_spec();
QuiverSpec zigzag_a2_spec();
QuiverSpec a2_path_spec();
QuiverSpec ground_field_spec();

/// Finite-dimensional algebra with a basis of (residues of) paths. Every basis
/// element lies in a single e_i A e_j; vertex idempotents come first.
class FDAlgebra {
public:
    struct BasisElement {
        std::string label;
        std::size_t src = 0;
        std::size_t tgt = 0;
        std::size_t length = 0;
    };

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] std::size_t dim() const { return basis_.size(); }
    [[nodiscard]] std::size_t num_vertices() const { return vertices_.size(); }
    [[nodiscard]] const std::vector<std::string>& vertex_names() const { return vertices_; }
    /// Throws std::invalid_argument for an unknown vertex name.
    [[nodiscard]] std::size_t vertex_index(std::string_view name) const;
    [[nodiscard]] const BasisElement& basis(std::size_t k) const { return basis_[k]; }
    [[nodiscard]] std::vector<std::string> basis_labels() const;
    [[nodiscard]] std::optional<std::size_t> find_label(std::string_view label) const;
    [[nodiscard]] std::size_t idempotent(std::size_t vertex) const { return idempotents_[vertex]; }
    [[nodiscard]] std::size_t radical_length() const { return radical_length_; }

    /// Structure constants: b_i * b_j as a sparse vector.
    [[nodiscard]] const SparseVec<Rational>& product(std::size_t i, std::size_t j) const {
        return table_[i * dim() + j];
    }
    [[nodiscard]] std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const;
    [[nodiscard]] std::vector<Rational> unit() const;
    [[nodiscard]] std::vector<Rational> basis_vector(std::size_t k) const;

    /// Matrices of x -> b_k x and x -> x b_k on A.
    [[nodiscard]] const QMatrix& left_mult(std::size_t k) const { return left_[k]; }
    [[nodiscard]] const QMatrix& right_mult(std::size_t k) const { return right_[k]; }

    /// Basis indices spanning e_i A e_j, A e_i (paths ending at i) and e_j A.
    [[nodiscard]] std::vector<std::size_t> block(std::size_t i, std::size_t j) const;
    [[nodiscard]] std::vector<std::size_t> left_projective(std::size_t i) const;
    [[nodiscard]] std::vector<std::size_t> right_projective(std::size_t j) const;

    /// Idempotents and arrow residues: they generate A.
    [[nodiscard]] std::vector<std::size_t> generators() const;
    /// Basis elements of positive length (span the radical).
    [[nodiscard]] std::vector<std::size_t> radical_generators() const;

    [[nodiscard]] bool is_ground_field() const { return dim() == 1; }

    friend std::shared_ptr<const FDAlgebra> build_algebra(const QuiverSpec& spec);

private:
    std::string name_;
    std::vector<std::string> vertices_;
    std::vector<BasisElement> basis_;
    std::vector<std::size_t> idempotents_;
    std::vector<SparseVec<Rational>> table_;
    std::vector<QMatrix> left_, right_;
    std::size_t radical_length_ = 0;
};

using AlgebraPtr = std::shared_ptr<const FDAlgebra>;

/// Throws std::invalid_argument on malformed specs and std::domain_error
/// ("nilpotency bound violated") when the ideal is not admissible.
AlgebraPtr build_algebra(const QuiverSpec& spec);
/// The one-dimensional algebra k (shared instance).
AlgebraPtr ground_field();

/// Entry (i, j) = dim e_i A e_j.
std::vector<std::vector<long>> cartan_matrix(const FDAlgebra& a);

/// Symmetric nondegenerate associative form tau with the induced dual bases.
struct SymmetrizingForm {
    std::vector<Rational> values;  // tau(b_k)
    QMatrix gram;                  // tau(b_i b_j)

    [[nodiscard]] Rational operator()(const std::vector<Rational>& x) const;
    /// For the basis {a_l} of A e (indices from left_projective(e)), the
    /// elements u_l of eA with tau(u_l a_m) = delta_lm, as coordinate vectors.
    [[nodiscard]] std::vector<std::vector<Rational>> dual_basis(const FDAlgebra& a, std::size_t e) const;
    /// Matrix of Phi_e: eA -> (Ae)*, u -> (a -> tau(u a)), in the bases
    /// right_projective(e) and the dual of left_projective(e).
    [[nodiscard]] QMatrix phi(const FDAlgebra& a, std::size_t e) const;
};

/// Searches the symmetric functionals for a nondegenerate one; nullopt when
/// none of the tested candidates is nondegenerate.
std::optional<SymmetrizingForm> symmetrizing_form(const FDAlgebra& a);

}  // namespace fiatkit
