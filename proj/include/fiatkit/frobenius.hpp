#pragma once

#include "fiatkit/bimodule.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fiatkit {

/// Named exact checks; passed() is the conjunction.
struct AxiomReport {
    std::vector<std::pair<std::string, bool>> checks;
    [[nodiscard]] bool passed() const;
    /// Name of the first failing check, empty when all pass.
    [[nodiscard]] std::string first_failure() const;
    [[nodiscard]] bool holds(const std::string& name) const;
};

/// square is carrier o carrier built by tensor_over(carrier, carrier); the
/// structure maps are matrices in its basis.
struct AlgebraObject {
    BimodulePtr carrier;
    BimodulePtr square;
    QMatrix mult;  // square -> carrier
    QMatrix unit;  // Id -> carrier
};

struct CoalgebraObject {
    BimodulePtr carrier;
    BimodulePtr square;
    QMatrix comult;  // carrier -> square
    QMatrix counit;  // carrier -> Id
};

struct FrobeniusObject {
    AlgebraObject algebra;
    CoalgebraObject coalgebra;  // same carrier and square
};

/// Checks "associativity", "left unit", "right unit" (and "mult is a map", "unit is a map").
AxiomReport check_algebra_axioms(const AlgebraObject& obj);
/// Checks "coassociativity", "left counit", "right counit" (and the map checks).
AxiomReport check_coalgebra_axioms(const CoalgebraObject& obj);
/// Both of the above plus "frobenius left" and "frobenius right":
/// (mu o 1) alpha^-1 (1 o Delta) = Delta mu = (1 o mu) alpha (Delta o 1).
AxiomReport check_frobenius_axioms(const FrobeniusObject& obj);

/// Ae (x) eA with counit the multiplication and comultiplication
/// a (x) b -> (a (x) m) (x) (e (x) b); m is the idempotent e unless
/// `insert` names another basis element of eAe (negative control).
CoalgebraObject canonical_coalgebra(const AlgebraPtr& a, std::size_t e, std::optional<std::size_t> insert = std::nullopt);

/// Unit 1 -> sum a_k (x) u_k over a basis of Ae and its dual basis in eA, and
/// multiplication (a (x) b) (x) (c (x) d) -> tau(bc) a (x) d.
AlgebraObject canonical_algebra_object(const AlgebraPtr& a, const SymmetrizingForm& form, std::size_t e);
/// Same unit, multiplication (a (x) b) (x) (c (x) d) -> a (x) bcd (negative control).
AlgebraObject naive_algebra_object(const AlgebraPtr& a, const SymmetrizingForm& form, std::size_t e);

/// canonical_algebra_object bundled with canonical_coalgebra on the same carrier.
FrobeniusObject canonical_algebra(const AlgebraPtr& a, const SymmetrizingForm& form, std::size_t e);

/// For u in eA: sum_k tau(u a_k) u_k = u, checked on every basis vector.
bool dual_basis_identity(const AlgebraPtr& a, const SymmetrizingForm& form, std::size_t e);

/// Contraction P(i,j) o P(k,l) -> P(i,l), (a (x) b) (x) (c (x) d) -> tau(bc) a (x) d;
/// xy must be tensor_over(P(i,j), P(k,l)).
QMatrix contraction(const AlgebraPtr& a, const SymmetrizingForm& form, const BimodulePtr& xy, std::size_t i,
                    std::size_t j, std::size_t k, std::size_t l);

struct CellRepCartan {
    std::vector<std::vector<long>> matrix;
    bool equals_cartan = false;
};
/// Dimensions of Hom_G(X_i, X_j) for the right modules X_i = P(i,e) over the
/// canonical algebra G with action (x (x) b) (x) (c (x) d) -> tau(bc) x (x) d.
CellRepCartan cell_rep_cartan(const AlgebraPtr& a, const SymmetrizingForm& form, std::size_t e);

}  // namespace fiatkit
