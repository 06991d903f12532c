#include "fiatkit/cells.hpp"

#include "fiatkit/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace fiatkit {
namespace {

void close_transitively(Preorder& r) {
    const std::size_t n = r.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (r[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (r[k][j]) r[i][j] = true;
}

std::vector<std::vector<std::size_t>> classes_of(const Preorder& r) {
    const std::size_t n = r.size();
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> cls;
        for (std::size_t j = i; j < n; ++j)
            if (r[i][j] && r[j][i]) {
                cls.push_back(j);
                seen[j] = true;
            }
        out.push_back(std::move(cls));
    }
    return out;
}

}  // namespace

MultisemigroupTable multisemigroup_table(const AlgebraPtr& a) {
    const auto cat = catalog(a);
    const std::size_t n = cat.size();
    MultisemigroupTable t;
    for (const auto& e : cat) {
        t.labels.push_back(e.label);
        t.identity.push_back(e.is_identity);
    }
    t.mult.assign(n, std::vector<std::vector<std::size_t>>(n));
    t.dual.assign(n, 0);
    parallel_for(n * n, [&](std::size_t idx) {
        const std::size_t f = idx / n, g = idx % n;
        t.mult[f][g] = decompose(tensor_over(cat[f].module, cat[g].module), cat);
    });
    for (std::size_t f = 0; f < n; ++f) {
        const auto d = decompose(dual(cat[f].module), cat);
        std::size_t hits = 0;
        for (std::size_t h = 0; h < n; ++h) hits += d[h];
        if (hits != 1) throw std::logic_error("dual of " + cat[f].label + " is not indecomposable");
        t.dual[f] = static_cast<std::size_t>(std::find(d.begin(), d.end(), 1) - d.begin());
    }
    return t;
}

CellStructure compute_cells(const MultisemigroupTable& table) {
    const std::size_t n = table.labels.size();
    CellStructure c;
    c.labels = table.labels;
    c.left.assign(n, std::vector<bool>(n, false));
    c.right = c.left;
    c.two_sided = c.left;
    for (std::size_t f = 0; f < n; ++f) {
        c.left[f][f] = c.right[f][f] = c.two_sided[f][f] = true;
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t g = 0; g < n; ++g) {
                if (table.mult[h][f][g] > 0) c.left[f][g] = c.two_sided[f][g] = true;   // G in H o F
                if (table.mult[f][h][g] > 0) c.right[f][g] = c.two_sided[f][g] = true;  // G in F o H
            }
    }
    close_transitively(c.left);
    close_transitively(c.right);
    close_transitively(c.two_sided);
    c.left_cells = classes_of(c.left);
    c.right_cells = classes_of(c.right);
    c.two_sided_cells = classes_of(c.two_sided);
    return c;
}

std::size_t duflo(const std::vector<std::size_t>& left_cell, const MultisemigroupTable& table) {
    std::vector<std::size_t> found;
    for (std::size_t f : left_cell)
        if (table.dual[f] == f && !table.identity[f]) found.push_back(f);
    if (found.size() != 1) throw std::invalid_argument("no Duflo candidate");
    return found.front();
}

const std::vector<std::size_t>& cell_of(const std::vector<std::vector<std::size_t>>& cells, std::size_t f) {
    for (const auto& c : cells)
        if (std::find(c.begin(), c.end(), f) != c.end()) return c;
    throw std::out_of_range("label not in any cell");
}

}  // namespace fiatkit

namespace fiatkit {

std::string cell_poset_dot(const std::vector<std::string>& labels, const Preorder& leq,
                           const std::vector<std::vector<std::size_t>>& cells, const std::string& name) {
    const std::size_t k = cells.size();
    auto below = [&](std::size_t c, std::size_t d) {
        return c != d && leq[cells[c].front()][cells[d].front()] && !leq[cells[d].front()][cells[c].front()];
    };
    std::string out = "digraph \"" + name + "\" {\n";
    for (std::size_t c = 0; c < k; ++c) {
        std::string node;
        for (auto f : cells[c]) node += (node.empty() ? "" : " ") + labels[f];
        out += "  c" + std::to_string(c) + " [label=\"" + node + "\"];\n";
    }
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t d = 0; d < k; ++d) {
            if (!below(c, d)) continue;
            bool covered = true;
            for (std::size_t m = 0; m < k && covered; ++m)
                if (below(c, m) && below(m, d)) covered = false;
            if (covered) out += "  c" + std::to_string(c) + " -> c" + std::to_string(d) + ";\n";
        }
    out += "}\n";
    return out;
}

}  // namespace fiatkit
