#pragma once

#include "fiatkit/bimodule.hpp"

#include <string>
#include <vector>

namespace fiatkit {

/// Injective mode: objects X -> Y_i with f_i : X -> Y_i. Projective mode is
/// the same engine run on the opposite category, so there f_i : Y_i -> X.
enum class AbMode { injective, projective };

/// Tuple (X, k, Y_i, f_i) over the ambient category of bimodules and bimodule
/// maps; k = y.size(). Matrices are the actual linear maps.
struct AbObject {
    BimodulePtr x;
    std::vector<BimodulePtr> y;
    std::vector<QMatrix> f;
    [[nodiscard]] std::size_t k() const { return y.size(); }
};

/// Empty string when the tuple is well formed in the given mode.
std::string ab_object_error(const AbObject& p, AbMode mode);
/// (X, 0, 0, 0).
AbObject embed(const BimodulePtr& x);

/// g : X -> X', h[i][j] : Y_i -> Y'_j. Compatibility is f'_i g = sum_j h_{j,i} f_j
/// (injective) or g f_i = sum_j f'_j h_{i,j} (projective).
struct AbMorphism {
    AbObject source;
    AbObject target;
    QMatrix g;
    std::vector<std::vector<QMatrix>> h;
};

struct AbMorphismSpace {
    std::size_t dim = 0;
    std::size_t solution_dim = 0;      // dim of the space of compatible (g, h)
    std::size_t g_dim = 0;             // dim of its image in Hom(X, X')
    std::size_t homotopy_dim = 0;      // dim of {sum q_i f_i}
    std::vector<AbMorphism> representatives;  // lift a basis of the quotient
    std::vector<QMatrix> homotopy;            // basis of {sum q_i f_i}
};

/// Throws std::invalid_argument for malformed tuples.
AbMorphismSpace hom_space(const AbObject& p, const AbObject& q, AbMode mode = AbMode::injective);
/// f'_i g = sum_j h_{j,i} f_j for every i.
bool is_compatible(const AbMorphism& m, AbMode mode = AbMode::injective);
/// g = sum_i q_i f_i for some q_i : Y_i -> X' (injective), or
/// g = sum_i f'_i q_i for some q_i : X -> Y'_i (projective).
bool is_null_homotopic(const AbMorphism& m, AbMode mode = AbMode::injective);
AbMorphism identity_morphism(const AbObject& p);
/// m1 followed by m2: (g' g, sum_k h'_{k,j} h_{i,k}). Throws
/// std::invalid_argument unless m1's target is m2's source.
AbMorphism compose(const AbMorphism& m1, const AbMorphism& m2);

/// Direct sum with its structure maps.
struct DirectSum {
    BimodulePtr sum;
    std::vector<QMatrix> inclusions;
    std::vector<QMatrix> projections;
};
/// Throws AlgebraMismatch for summands over different algebras, std::invalid_argument for none.
DirectSum direct_sum(const std::vector<BimodulePtr>& parts);
/// (X, k, Y_i, f_i) -> (X, 1, sum Y_i, sum f_i); k = 0 stays as it is.
AbObject collapse(const AbObject& p, AbMode mode = AbMode::injective);

/// (F, k, G_i, a_i) o (F', k', G'_i, a'_i) = (F F', k + k', H_i, b_i) with
/// H_i = F G'_i, b_i = id_F o a'_i for i <= k' and H_i = G_{i-k'} F',
/// b_i = a_{i-k'} o id_{F'} after that. The same bookkeeping gives the action
/// of tuples on tuples of modules.
AbObject compose_onemorphisms(const AbObject& t1, const AbObject& t2);

struct EquivalencePair {
    std::size_t source = 0, target = 0;
    std::size_t abelian_dim = 0;
    std::size_t module_dim = 0;
};
struct EquivalenceReport {
    AbMode mode = AbMode::injective;
    std::vector<std::string> objects;  // e.g. "(Ae1,1,Ae2,f0)"
    std::vector<AbObject> family;
    std::vector<EquivalencePair> pairs;
    [[nodiscard]] bool passed() const;
};

/// Over the generating family (Ae_i, 1, Ae_j, f) with f a basis map or zero,
/// compares hom dimensions with homs between kernels (injective) or
/// cokernels (projective) computed in the module category.
EquivalenceReport equivalence_check(const AlgebraPtr& a, AbMode mode = AbMode::injective);

/// Module-category oracle: dim Hom_A(ker f, ker f') or Hom_A(coker f, coker f')
/// for two-term objects of left A-modules.
std::size_t module_hom_dim(const AbObject& p, const AbObject& q, AbMode mode);

}  // namespace fiatkit
