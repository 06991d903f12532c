#pragma once

#include "fiatkit/number_field.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fiatkit {

/// Crossingless matching between `bottom` points and `top` points. Points are
/// indexed bottom 0..bottom-1 (left to right), then top bottom..bottom+top-1
/// (left to right). The boundary is read cyclically: bottom left to right,
/// then top right to left; the nesting string records that walk.
struct PlanarMatching {
    std::size_t bottom = 0;
    std::size_t top = 0;
    std::vector<std::size_t> partner;

    /// Throws std::invalid_argument for unbalanced strings or an odd/mismatched length.
    static PlanarMatching from_nesting(const std::string& s, std::size_t bottom, std::size_t top);
    /// Throws std::invalid_argument for crossings or a non-involutive pairing.
    static PlanarMatching from_partners(std::size_t bottom, std::size_t top, std::vector<std::size_t> partner);
    static PlanarMatching identity(std::size_t m);
    /// Cup-cap e_i joining strands i-1, i at the bottom and at the top (1 <= i < m).
    static PlanarMatching generator(std::size_t m, std::size_t i);

    [[nodiscard]] std::string to_nesting() const;
    [[nodiscard]] std::size_t through_degree() const;

    auto operator<=>(const PlanarMatching&) const = default;
    bool operator==(const PlanarMatching&) const = default;
};

/// All matchings with the given boundary, ordered by nesting string.
std::vector<PlanarMatching> all_matchings(std::size_t bottom, std::size_t top);

struct Stacked {
    PlanarMatching diagram;
    std::size_t loops = 0;
};
/// `upper` stacked on top of `lower`; closed loops are counted, not evaluated.
Stacked stack(const PlanarMatching& lower, const PlanarMatching& upper);
/// `b` placed to the right of `a`.
PlanarMatching juxtapose(const PlanarMatching& a, const PlanarMatching& b);
/// Number of loops after joining bottom i to top i around the right side.
std::size_t closure_loops(const PlanarMatching& d);

/// Linear combination of matchings over Q(delta), delta = 2cos(pi/n).
/// `color` optionally tags the rightmost region ('s' or 't').
struct TLMorphism {
    int n = 0;
    std::size_t bottom = 0;
    std::size_t top = 0;
    std::map<PlanarMatching, NumberFieldElem> terms;
    std::optional<char> color;

    static TLMorphism zero(int n, std::size_t bottom, std::size_t top);
    static TLMorphism from_matching(int n, const PlanarMatching& d);
    static TLMorphism identity(int n, std::size_t m);
    static TLMorphism generator(int n, std::size_t m, std::size_t i);

    [[nodiscard]] bool is_zero() const { return terms.empty(); }
    TLMorphism& operator+=(const TLMorphism& o);
    TLMorphism& operator-=(const TLMorphism& o);
    TLMorphism& operator*=(const NumberFieldElem& c);
    friend TLMorphism operator+(TLMorphism a, const TLMorphism& b) { return a += b; }
    friend TLMorphism operator-(TLMorphism a, const TLMorphism& b) { return a -= b; }
    friend TLMorphism operator*(const NumberFieldElem& c, TLMorphism a) { return a *= c; }
    friend bool operator==(const TLMorphism& a, const TLMorphism& b);
};

/// d2 stacked on top of d1, loops evaluated to delta. Throws
/// std::invalid_argument on boundary, field or color mismatch.
TLMorphism compose(const TLMorphism& d1, const TLMorphism& d2);
TLMorphism tensor(const TLMorphism& a, const TLMorphism& b);

/// JW_k = J (x) 1 - [k-1]/[k] (J (x) 1) e_{k-1} (J (x) 1) with J = JW_{k-1}.
/// Throws std::domain_error when a quantum integer vanishes mid-recursion and
/// std::logic_error if the result fails idempotency or annihilation.
TLMorphism jones_wenzl(std::size_t k, int n);
bool is_idempotent(const TLMorphism& d);
/// e_i d = d e_i = 0 for all 1 <= i < m.
bool kills_generators(const TLMorphism& d);

/// Throws std::invalid_argument for bottom != top.
NumberFieldElem markov_trace(const TLMorphism& d);

struct NegligibilityReport {
    bool negligible = false;
    std::size_t closures = 0;
    std::optional<PlanarMatching> witness;  // x with trace(x o d) != 0
};
NegligibilityReport negligibility_check(const TLMorphism& d);

struct ColoredObject {
    std::size_t strands = 0;
    char rightmost = 's';
    [[nodiscard]] char leftmost() const;
};

struct Embedding {
    ColoredObject object;
    std::string word;  // alternating, ends with the rightmost color
};
/// Throws std::invalid_argument for k > n - 2 or a color outside {s, t}.
Embedding color_and_embed(std::size_t k, char rightmost, int n);

}  // namespace fiatkit
