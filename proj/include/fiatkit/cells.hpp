#pragma once

#include "fiatkit/bimodule.hpp"

#include <string>
#include <vector>

namespace fiatkit {

/// Composition table of the indecomposable 1-morphisms, in catalog order.
/// mult[f][g][h] is the multiplicity of label h in F o G.
struct MultisemigroupTable {
    std::vector<std::string> labels;
    std::vector<std::vector<std::vector<std::size_t>>> mult;
    std::vector<std::size_t> dual;  // label of dual(F), found by decomposition
    std::vector<bool> identity;     // the Id entry
};

MultisemigroupTable multisemigroup_table(const AlgebraPtr& a);

/// leq[f][g] is F <= G in the given preorder.
using Preorder = std::vector<std::vector<bool>>;

struct CellStructure {
    std::vector<std::string> labels;
    Preorder left, right, two_sided;
    std::vector<std::vector<std::size_t>> left_cells, right_cells, two_sided_cells;
};

/// G >=_L F when G is a summand of H o F for some H (or G = F), closed
/// transitively; similarly F o H for the right and H o F o H' for the
/// two-sided preorder. Cells are sorted by their smallest label index.
CellStructure compute_cells(const MultisemigroupTable& table);

/// The unique self-dual member of a left cell of P's. Throws std::invalid_argument
/// ("no Duflo candidate") when there is none.
std::size_t duflo(const std::vector<std::size_t>& left_cell, const MultisemigroupTable& table);

/// The cell (as a sorted index list) containing label f.
const std::vector<std::size_t>& cell_of(const std::vector<std::vector<std::size_t>>& cells, std::size_t f);

/// Graphviz digraph of the cells ordered by a preorder: an edge c -> d when
/// c < d and nothing lies strictly between. Deterministic output.
std::string cell_poset_dot(const std::vector<std::string>& labels, const Preorder& leq,
                           const std::vector<std::vector<std::size_t>>& cells, const std::string& name);

}  // namespace fiatkit
