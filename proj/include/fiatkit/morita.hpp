#pragma once

#include "fiatkit/frobenius.hpp"

#include <optional>
#include <string>

namespace fiatkit {

/// One-sided action of an algebra object B on a carrier X: composite is
/// B o X (left) or X o B (right), action the map composite -> X.
struct ModuleStructure {
    AlgebraObject algebra;
    BimodulePtr composite;
    QMatrix action;
};

/// Coaction X -> C o X (left) or X -> X o C (right).
struct ComoduleStructure {
    CoalgebraObject coalgebra;
    BimodulePtr composite;
    QMatrix coaction;
};

struct BimoduleObject {
    std::string label;
    BimodulePtr carrier;
    std::optional<ModuleStructure> left, right;
};

struct BicomoduleObject {
    std::string label;
    BimodulePtr carrier;
    std::optional<ComoduleStructure> left, right;
};

/// Checks associativity, unitality and (when both sides are present) that the
/// two actions commute; empty string when valid.
std::string module_object_error(const BimoduleObject& m);
std::string comodule_object_error(const BicomoduleObject& m);

/// B as a bimodule object over itself.
BimoduleObject regular_object(const AlgebraObject& b, std::string label);
/// C as a bicomodule object over itself.
BicomoduleObject regular_coobject(const CoalgebraObject& c, std::string label);

/// P(i,j) with the contraction actions of canonical algebra objects on P(i,i)
/// (left) and P(j,j) (right).
BimoduleObject contraction_object(const AlgebraPtr& a, const SymmetrizingForm& form, const AlgebraObject& left,
                                  const AlgebraObject& right, std::size_t i, std::size_t j);
/// P(i,j) with coactions a (x) b -> (a (x) e) (x) (e (x) b) into canonical coalgebras on P(i,i) and P(j,j).
BicomoduleObject insertion_coobject(const AlgebraPtr& a, const CoalgebraObject& left, const CoalgebraObject& right,
                                    std::size_t i, std::size_t j);

/// M o_B N: cokernel of (rho_M o 1) - (1 o lambda_N) alpha on (M o B) o N.
struct RelativeTensor {
    BimoduleObject result;  // outer actions induced from M.left and N.right
    BimodulePtr balanced;   // M o N
    QMatrix projection;     // balanced -> result
    QMatrix section;        // result -> balanced (linear only)
    QMatrix relations;      // (M o B) o N -> M o N
};
/// Throws std::invalid_argument on invalid or mismatched inputs.
RelativeTensor relative_tensor(const BimoduleObject& m, const BimoduleObject& n);

/// M box_C N: kernel of (rho_M o 1) - alpha^-1 (1 o lambda_N) on M o N.
struct Cotensor {
    BicomoduleObject result;  // carrier only
    BimodulePtr balanced;
    QMatrix inclusion;  // result -> balanced
};
Cotensor cotensor(const BicomoduleObject& m, const BicomoduleObject& n);

/// lambda: B o_B M -> M and rho: M o_B B -> M descend to isomorphisms.
bool unit_descent_check(const BimoduleObject& m);

/// Whether a one-sided module object is a summand of carrier o B (a split
/// epimorphism from the free module), tested by exact solving.
bool is_projective_right(const BimoduleObject& m);
bool is_projective_left(const BimoduleObject& m);

struct MoritaReport {
    std::string input_error;  // nonempty when M or N is rejected
    std::size_t balanced_mn = 0, relative_mn = 0, balanced_nm = 0, relative_nm = 0;
    bool found = false;  // isomorphisms f, g available (given or searched)
    bool f_iso = false, g_iso = false;
    bool f_linear = false, g_linear = false;
    bool square_m = false, square_n = false;
    QMatrix f, g;
    QMatrix residual_m, residual_n;  // square differences (zero when passing)
    bool m_projective = false, n_projective = false;
    [[nodiscard]] bool passed() const {
        return input_error.empty() && found && f_iso && g_iso && f_linear && g_linear && square_m && square_n;
    }
};

/// M an (A, B)-bimodule object, N a (B, A)-bimodule object; f: M o_B N -> A and
/// g: N o_A M -> B. Missing f, g are searched among the solutions of the
/// (jointly linear) square and linearity conditions.
MoritaReport check_morita_witness(const AlgebraObject& a_obj, const AlgebraObject& b_obj, const BimoduleObject& m,
                                  const BimoduleObject& n, const std::optional<QMatrix>& f = std::nullopt,
                                  const std::optional<QMatrix>& g = std::nullopt);

}  // namespace fiatkit
