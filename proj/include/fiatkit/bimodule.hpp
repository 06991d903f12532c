#pragma once

#include "fiatkit/linalg.hpp"
#include "fiatkit/quiver.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fiatkit {

class Bimodule;
using BimodulePtr = std::shared_ptr<const Bimodule>;

/// How a composite M o N = M (x)_B N sits as a quotient of M (x)_k N.
/// Flat index of m (x) n is m * dim N + n. The section sends quotient basis
/// vector k to the flat basis vector kept[k].
struct TensorData {
    BimodulePtr left;
    BimodulePtr right;
    std::vector<SparseVec<Rational>> projection;  // per flat index, its image in the quotient basis
    std::vector<std::size_t> kept;
};

/// Finite-dimensional A-B-bimodule with explicit action matrices:
/// left_action(k) is v -> b_k v, right_action(k) is v -> v b_k.
class Bimodule {
public:
    Bimodule(AlgebraPtr left, AlgebraPtr right, std::vector<QMatrix> left_action, std::vector<QMatrix> right_action,
             std::string label);

    [[nodiscard]] const AlgebraPtr& left_algebra() const { return left_; }
    [[nodiscard]] const AlgebraPtr& right_algebra() const { return right_; }
    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const QMatrix& left_action(std::size_t k) const { return lact_[k]; }
    [[nodiscard]] const QMatrix& right_action(std::size_t k) const { return ract_[k]; }
    [[nodiscard]] const std::string& label() const { return label_; }

    /// Vertex pair (i, j) with e_i v e_j = v for every basis vector, when the
    /// idempotents act diagonally on the basis.
    [[nodiscard]] const std::optional<std::vector<std::pair<std::size_t, std::size_t>>>& weights() const {
        return weights_;
    }
    [[nodiscard]] const std::shared_ptr<const TensorData>& tensor() const { return tensor_; }

    /// Exact check of the module axioms; returns an empty string when valid,
    /// else a description of the first violation.
    [[nodiscard]] std::string validation_error() const;

    friend BimodulePtr tensor_over(const BimodulePtr& m, const BimodulePtr& n);

private:
    AlgebraPtr left_, right_;
    std::size_t dim_ = 0;
    std::vector<QMatrix> lact_, ract_;
    std::string label_;
    std::optional<std::vector<std::pair<std::size_t, std::size_t>>> weights_;
    std::shared_ptr<const TensorData> tensor_;
};

struct BimoduleMap {
    BimodulePtr source;
    BimodulePtr target;
    QMatrix matrix;  // dim target x dim source
};

class AlgebraMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

BimodulePtr make_bimodule(AlgebraPtr left, AlgebraPtr right, std::vector<QMatrix> left_action,
                          std::vector<QMatrix> right_action, std::string label);

/// Ae_i (x)_k e_jA with a.(x (x) y).b = ax (x) yb; basis pairs (x, y) of paths.
BimodulePtr projective_bimodule(const AlgebraPtr& a, std::size_t i, std::size_t j);
/// The regular bimodule A.
BimodulePtr identity_bimodule(const AlgebraPtr& a);
/// Left A-modules as A-k-bimodules: A e_i and A itself.
BimodulePtr left_projective_module(const AlgebraPtr& a, std::size_t i);
BimodulePtr regular_left_module(const AlgebraPtr& a);
BimodulePtr zero_bimodule(const AlgebraPtr& left, const AlgebraPtr& right);

/// M (x)_B N as the quotient of M (x)_k N by mb (x) n - m (x) bn.
BimodulePtr tensor_over(const BimodulePtr& m, const BimodulePtr& n);

/// The linear dual with L*(b) = R(b)^T and R*(a) = L(a)^T (a B-A-bimodule).
BimodulePtr dual(const BimodulePtr& m);

/// Basis of Hom(M, N) as dim N x dim M matrices.
std::vector<QMatrix> hom_space(const BimodulePtr& m, const BimodulePtr& n);
bool is_bimodule_map(const BimodulePtr& m, const BimodulePtr& n, const QMatrix& f);
/// Coefficients c with sum c_k basis[k] = f, or nullopt when f is outside the span.
std::optional<std::vector<Rational>> coordinates(const std::vector<QMatrix>& basis, const QMatrix& f);
/// sum c_k maps[k]; rows x cols gives the shape when maps is empty.
QMatrix combine(const std::vector<QMatrix>& maps, const std::vector<Rational>& c, std::size_t rows, std::size_t cols);

/// f o g : M o N -> M' o N' for f : M -> M', g : N -> N'.
QMatrix horizontal(const BimodulePtr& mn, const BimodulePtr& mn2, const QMatrix& f, const QMatrix& g);
/// (M o N) o K -> M o (N o K) and back; factors must be shared pointers to
/// the same M, N, K.
QMatrix associator(const BimodulePtr& mn_k, const BimodulePtr& m_nk);
QMatrix associator_inverse(const BimodulePtr& m_nk, const BimodulePtr& mn_k);
/// Id o M -> M and M o Id -> M, and their inverses.
QMatrix left_unitor(const BimodulePtr& id_m);
QMatrix right_unitor(const BimodulePtr& m_id);
QMatrix left_unitor_inverse(const BimodulePtr& id_m);
QMatrix right_unitor_inverse(const BimodulePtr& m_id);

/// Projection of a flat vector of M (x)_k N onto the basis of M o N.
std::vector<Rational> project_flat(const TensorData& t, const SparseVec<Rational>& flat);

/// Isomorphism P(j,i) -> dual(P(i,j)) induced by the form:
/// (y (x) x) -> (a (x) u -> tau(u y) tau(x a)).
QMatrix dual_projective_iso(const AlgebraPtr& a, const SymmetrizingForm& form, std::size_t i, std::size_t j,
                            const BimodulePtr& p_ji, const BimodulePtr& dual_p_ij);
/// Isomorphism A -> A*, m -> (a -> tau(m a)).
QMatrix dual_identity_iso(const AlgebraPtr& a, const SymmetrizingForm& form);

/// Catalog of indecomposable 1-morphisms: Id (unless A is semisimple, where
/// Id splits into the P(i,i)) and all P(i,j), in that order.
struct CatalogEntry {
    std::string label;
    BimodulePtr module;
    bool is_identity = false;
    std::size_t i = 0, j = 0;
};
std::vector<CatalogEntry> catalog(const AlgebraPtr& a);

class DecompositionRemainder : public std::runtime_error {
public:
    DecompositionRemainder(std::string what, long residual)
        : std::runtime_error(std::move(what)), residual_dimension(residual) {}
    long residual_dimension;
};

/// Multiplicity of each catalog entry in M via the rank of the evaluation
/// pairing modulo the radical of End(P). Throws DecompositionRemainder when
/// the summands found do not exhaust dim M.
std::vector<std::size_t> decompose(const BimodulePtr& m, const std::vector<CatalogEntry>& cat);

/// Counit P(i,j) o P(j,i) -> Id and unit Id -> P(j,i) o P(i,j) from the form,
/// with both zig-zag identities checked exactly.
struct AdjunctionData {
    BimodulePtr f, g, fg, gf;
    QMatrix counit;  // fg -> Id
    QMatrix unit;    // Id -> gf
    bool counit_is_map = false;
    bool unit_is_map = false;
    bool zigzag_f = false;  // lambda (eps o 1) alpha^-1 (1 o eta) rho^-1 = id_F
    bool zigzag_g = false;  // rho (1 o eps) alpha (eta o 1) lambda^-1 = id_G
    [[nodiscard]] bool passed() const { return counit_is_map && unit_is_map && zigzag_f && zigzag_g; }
};
/// With misalign_unit the dual basis in the unit is cyclically shifted
/// (negative control).
AdjunctionData adjunction_data(const AlgebraPtr& a, const SymmetrizingForm& form, std::size_t i, std::size_t j,
                               bool misalign_unit = false);

}  // namespace fiatkit
