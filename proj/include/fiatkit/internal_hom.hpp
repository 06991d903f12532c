#pragma once

#include "fiatkit/frobenius.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fiatkit {

/// Left A-modules are A-k-bimodules (see left_projective_module).
using ModulePtr = BimodulePtr;

/// Hom_A(N, A) = N* through tau: psi[k] is the A-linear N -> A (dim A x dim N)
/// with tau o psi[k] the k-th dual basis functional of N.
struct DualityData {
    AlgebraPtr algebra;
    ModulePtr n;
    std::vector<QMatrix> psi;
};
DualityData duality_data(const AlgebraPtr& a, const SymmetrizingForm& form, const ModulePtr& n);

/// The map Hom_A(M, F o N) -> Hom(M (x) N*, F), alpha -> (m (x) xi -> (1 o psi_xi) alpha(m)).
/// fn must be tensor_over(F, N); the result is dim F x (dim M * dim N).
QMatrix representability_map(const DualityData& d, const BimodulePtr& f, const BimodulePtr& fn, const QMatrix& alpha);

struct HomCertificate {
    std::string label;
    std::size_t module_side = 0;     // dim Hom_A(M, F o N)
    std::size_t bimodule_side = 0;   // dim Hom(carrier, F)
    QMatrix matrix;                  // representability map in the two hom bases
    bool isomorphism = false;
};

struct InternalHom {
    BimodulePtr carrier;  // M (x)_k N*
    std::vector<HomCertificate> certificates;
};

class RepresentabilityFailure : public std::runtime_error {
public:
    explicit RepresentabilityFailure(const std::string& label)
        : std::runtime_error("representability failure at " + label), label(label) {}
    std::string label;
};

/// Internal hom from N to M with certificates over the catalog; throws
/// RepresentabilityFailure when a certificate is not an isomorphism.
InternalHom internal_hom(const AlgebraPtr& a, const SymmetrizingForm& form, const ModulePtr& n, const ModulePtr& m);

/// Right comodule over a coalgebra object C: x, x o C and the coaction x -> x o C.
struct Comodule {
    std::string label;
    BimodulePtr x;
    BimodulePtr xc;
    QMatrix coaction;
};

/// A^N = N (x) N* with coevaluation, comultiplication and counit obtained by
/// chasing identities through the representability map.
struct InternalEnd {
    AlgebraPtr algebra;
    DualityData duality;
    CoalgebraObject coalgebra;
    BimodulePtr cn;  // A^N o N
    QMatrix coev;    // N -> A^N o N
    AxiomReport axioms;
    /// Coalgebra isomorphism A^N -> canonical_coalgebra(A, e) when requested and found.
    std::optional<QMatrix> canonical_iso;
};

InternalEnd coalgebra_from_internal_end(const AlgebraPtr& a, const SymmetrizingForm& form, const ModulePtr& n,
                                        std::optional<std::size_t> canonical_vertex = std::nullopt);

/// Bimodule isomorphism phi: C -> D of coalgebra objects, searched as an
/// affine solution of the counit condition plus a small grid over its kernel.
std::optional<QMatrix> find_coalgebra_iso(const CoalgebraObject& c, const CoalgebraObject& d);

/// A^N itself, and F o A^N with coaction alpha^-1 (1 o Delta).
Comodule regular_comodule(const InternalEnd& end);
Comodule free_comodule(const InternalEnd& end, const BimodulePtr& f, const std::string& label);

/// Basis of the comodule maps X -> Y among the bimodule maps.
std::vector<QMatrix> comodule_homs(const InternalEnd& end, const Comodule& x, const Comodule& y);

struct ComoduleHomEntry {
    std::string x, f;
    std::size_t comodule_side = 0;  // Hom_comod(X, F o A^N)
    std::size_t plain_side = 0;     // Hom(X, F)
    bool maps_inverse = false;
};
struct ComoduleHomReport {
    std::vector<ComoduleHomEntry> entries;
    [[nodiscard]] bool passed() const;
};
/// X ranges over A^N and F' o A^N for catalog F'.
ComoduleHomReport lemma5_check(const InternalEnd& end, const BimodulePtr& f, const std::string& f_label);

struct DimensionPair {
    std::string f, g;
    std::size_t lhs = 0, rhs = 0;
};
struct DimensionReport {
    std::vector<DimensionPair> pairs;
    [[nodiscard]] bool passed() const;
};

/// dim Hom_comod(F o A^N, G o A^N) against dim Hom_A(F o N, G o N) over catalog pairs.
DimensionReport theta_equivalence_check(const InternalEnd& end);

/// Injectivity of A^N in dimensions: Hom_comod(X, A^N) against Hom(X, Id) for X in
/// {A^N, F o A^N}.
DimensionReport injectivity_check(const InternalEnd& end);

/// The four hom dimensions along Hom(F o [N,M], G) = Hom([N,M], F* o G)
/// = Hom_A(M, F* o G o N) = Hom_A(F o M, G o N), for all catalog F, G.
struct AdjointShiftEntry {
    std::string f, g;
    std::size_t dims[4] = {0, 0, 0, 0};
};
struct AdjointShiftReport {
    std::vector<AdjointShiftEntry> entries;
    [[nodiscard]] bool passed() const;
};
AdjointShiftReport adjoint_shift_check(const AlgebraPtr& a, const ModulePtr& n, const ModulePtr& m);

}  // namespace fiatkit
