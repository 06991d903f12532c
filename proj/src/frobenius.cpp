#include "fiatkit/frobenius.hpp"

#include <algorithm>
#include <stdexcept>

namespace fiatkit {

bool AxiomReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

std::string AxiomReport::first_failure() const {
    for (const auto& [name, ok] : checks)
        if (!ok) return name;
    return {};
}

bool AxiomReport::holds(const std::string& name) const {
    for (const auto& [n, ok] : checks)
        if (n == name) return ok;
    throw std::out_of_range("no check named " + name);
}

namespace {

struct Composites {
    BimodulePtr id, cc_c, c_cc, id_c, c_id;
    QMatrix one;
};

Composites composites(const BimodulePtr& c, const BimodulePtr& sq) {
    const auto& st = sq->tensor();
    if (!st || st->left != c || st->right != c)
        throw std::invalid_argument("structure maps: square is not carrier o carrier");
    Composites k;
    k.id = identity_bimodule(c->left_algebra());
    k.cc_c = tensor_over(sq, c);
    k.c_cc = tensor_over(c, sq);
    k.id_c = tensor_over(k.id, c);
    k.c_id = tensor_over(c, k.id);
    k.one = QMatrix::identity(c->dim());
    return k;
}

void require_shape(const QMatrix& m, std::size_t rows, std::size_t cols, const char* what) {
    if (m.rows() != rows || m.cols() != cols) throw std::invalid_argument(std::string("shape mismatch: ") + what);
}

void algebra_checks(const AlgebraObject& o, const Composites& k, AxiomReport& r) {
    const auto& c = o.carrier;
    require_shape(o.mult, c->dim(), o.square->dim(), "multiplication");
    require_shape(o.unit, c->dim(), k.id->dim(), "unit");
    r.checks.emplace_back("mult is a map", is_bimodule_map(o.square, c, o.mult));
    r.checks.emplace_back("unit is a map", is_bimodule_map(k.id, c, o.unit));
    r.checks.emplace_back("associativity", o.mult * horizontal(k.cc_c, o.square, o.mult, k.one) ==
                                               o.mult * horizontal(k.c_cc, o.square, k.one, o.mult) *
                                                   associator(k.cc_c, k.c_cc));
    r.checks.emplace_back("left unit", o.mult * horizontal(k.id_c, o.square, o.unit, k.one) *
                                               left_unitor_inverse(k.id_c) ==
                                           k.one);
    r.checks.emplace_back("right unit", o.mult * horizontal(k.c_id, o.square, k.one, o.unit) *
                                                right_unitor_inverse(k.c_id) ==
                                            k.one);
}

void coalgebra_checks(const CoalgebraObject& o, const Composites& k, AxiomReport& r) {
    const auto& c = o.carrier;
    require_shape(o.comult, o.square->dim(), c->dim(), "comultiplication");
    require_shape(o.counit, k.id->dim(), c->dim(), "counit");
    r.checks.emplace_back("comult is a map", is_bimodule_map(c, o.square, o.comult));
    r.checks.emplace_back("counit is a map", is_bimodule_map(c, k.id, o.counit));
    r.checks.emplace_back("coassociativity",
                          associator(k.cc_c, k.c_cc) * horizontal(o.square, k.cc_c, o.comult, k.one) * o.comult ==
                              horizontal(o.square, k.c_cc, k.one, o.comult) * o.comult);
    r.checks.emplace_back("left counit",
                          left_unitor(k.id_c) * horizontal(o.square, k.id_c, o.counit, k.one) * o.comult == k.one);
    r.checks.emplace_back("right counit",
                          right_unitor(k.c_id) * horizontal(o.square, k.c_id, k.one, o.counit) * o.comult == k.one);
}

struct Layout {
    std::vector<std::size_t> left;   // basis of Ae
    std::vector<std::size_t> right;  // basis of eA
    [[nodiscard]] std::size_t index(std::size_t p, std::size_t q) const { return p * right.size() + q; }
};

Layout layout(const AlgebraPtr& a, std::size_t e) { return {a->left_projective(e), a->right_projective(e)}; }
Layout layout2(const AlgebraPtr& a, std::size_t i, std::size_t j) {
    return {a->left_projective(i), a->right_projective(j)};
}

std::size_t position(const std::vector<std::size_t>& v, std::size_t x) {
    const auto it = std::find(v.begin(), v.end(), x);
    if (it == v.end()) throw std::invalid_argument("element outside the expected projective");
    return static_cast<std::size_t>(it - v.begin());
}

CoalgebraObject coalgebra_on(const AlgebraPtr& a, std::size_t e, const BimodulePtr& c, const BimodulePtr& sq,
                             std::size_t insert) {
    const Layout l = layout(a, e);
    const std::size_t dc = c->dim();
    const std::size_t pos_m = position(l.right, insert);
    const std::size_t pos_e = position(l.left, a->idempotent(e));
    CoalgebraObject o{c, sq, QMatrix(sq->dim(), dc), QMatrix(a->dim(), dc)};
    for (std::size_t p = 0; p < l.left.size(); ++p)
        for (std::size_t q = 0; q < l.right.size(); ++q) {
            const std::size_t col = l.index(p, q);
            for (const auto& [r, x] : a->product(l.left[p], l.right[q])) o.counit(r, col) += x;
            const SparseVec<Rational> flat{{l.index(p, pos_m) * dc + l.index(pos_e, q), Rational(1)}};
            o.comult.set_column(col, project_flat(*sq->tensor(), flat));
        }
    return o;
}

QMatrix canonical_unit(const AlgebraPtr& a, const SymmetrizingForm& form, std::size_t e, const BimodulePtr& c) {
    const Layout l = layout(a, e);
    const auto duals = form.dual_basis(*a, e);
    std::vector<Rational> eta1(c->dim());
    for (std::size_t k = 0; k < l.left.size(); ++k)
        for (std::size_t q = 0; q < l.right.size(); ++q) eta1[l.index(k, q)] = duals[k][l.right[q]];
    QMatrix unit(c->dim(), a->dim());
    for (std::size_t b = 0; b < a->dim(); ++b) unit.set_column(b, c->left_action(b).apply(eta1));
    return unit;
}

AlgebraObject algebra_on(const AlgebraPtr& a, const SymmetrizingForm& form, std::size_t e, const BimodulePtr& c,
                         const BimodulePtr& sq) {
    const Layout l = layout(a, e);
    return {c, sq, contraction(a, form, sq, e, e, e, e), canonical_unit(a, form, e, c)};
}

}  // namespace

QMatrix contraction(const AlgebraPtr& a, const SymmetrizingForm& form, const BimodulePtr& xy, std::size_t i,
                    std::size_t j, std::size_t k, std::size_t l) {
    const Layout x = layout2(a, i, j), y = layout2(a, k, l);
    const auto& t = xy->tensor();
    const std::size_t dy = y.left.size() * y.right.size();
    if (!t || t->left->dim() != x.left.size() * x.right.size() || t->right->dim() != dy)
        throw std::invalid_argument("contraction: composite does not match P(i,j) o P(k,l)");
    const Layout out_shape{x.left, y.right};
    QMatrix out(x.left.size() * y.right.size(), xy->dim());
    for (std::size_t c = 0; c < t->kept.size(); ++c) {
        const std::size_t i1 = t->kept[c] / dy, i2 = t->kept[c] % dy;
        const std::size_t p1 = i1 / x.right.size(), q1 = i1 % x.right.size();
        const std::size_t p2 = i2 / y.right.size(), q2 = i2 % y.right.size();
        const Rational s = form.gram(x.right[q1], y.left[p2]);
        if (!s.is_zero()) out(out_shape.index(p1, q2), c) = s;
    }
    return out;
}

AxiomReport check_algebra_axioms(const AlgebraObject& obj) {
    AxiomReport r;
    algebra_checks(obj, composites(obj.carrier, obj.square), r);
    return r;
}

AxiomReport check_coalgebra_axioms(const CoalgebraObject& obj) {
    AxiomReport r;
    coalgebra_checks(obj, composites(obj.carrier, obj.square), r);
    return r;
}

AxiomReport check_frobenius_axioms(const FrobeniusObject& obj) {
    const auto& al = obj.algebra;
    const auto& co = obj.coalgebra;
    if (al.carrier != co.carrier || al.square != co.square)
        throw std::invalid_argument("frobenius: algebra and coalgebra live on different carriers");
    const Composites k = composites(al.carrier, al.square);
    AxiomReport r;
    algebra_checks(al, k, r);
    coalgebra_checks(co, k, r);
    const QMatrix middle = co.comult * al.mult;
    r.checks.emplace_back("frobenius left", horizontal(k.cc_c, al.square, al.mult, k.one) *
                                                    associator_inverse(k.c_cc, k.cc_c) *
                                                    horizontal(al.square, k.c_cc, k.one, co.comult) ==
                                                middle);
    r.checks.emplace_back("frobenius right", horizontal(k.c_cc, al.square, k.one, al.mult) *
                                                     associator(k.cc_c, k.c_cc) *
                                                     horizontal(al.square, k.cc_c, co.comult, k.one) ==
                                                 middle);
    return r;
}

CoalgebraObject canonical_coalgebra(const AlgebraPtr& a, std::size_t e, std::optional<std::size_t> insert) {
    auto c = projective_bimodule(a, e, e);
    auto sq = tensor_over(c, c);
    const std::size_t m = insert.value_or(a->idempotent(e));
    const auto& b = a->basis(m);
    if (b.src != e || b.tgt != e) throw std::invalid_argument("canonical_coalgebra: inserted element is not in eAe");
    return coalgebra_on(a, e, c, sq, m);
}

AlgebraObject canonical_algebra_object(const AlgebraPtr& a, const SymmetrizingForm& form, std::size_t e) {
    auto c = projective_bimodule(a, e, e);
    return algebra_on(a, form, e, c, tensor_over(c, c));
}

AlgebraObject naive_algebra_object(const AlgebraPtr& a, const SymmetrizingForm& form, std::size_t e) {
    auto c = projective_bimodule(a, e, e);
    auto sq = tensor_over(c, c);
    const Layout l = layout(a, e);
    const TensorData& t = *sq->tensor();
    const std::size_t dc = c->dim();
    QMatrix mult(dc, sq->dim());
    for (std::size_t k = 0; k < t.kept.size(); ++k) {
        const std::size_t i1 = t.kept[k] / dc, i2 = t.kept[k] % dc;
        const std::size_t p1 = i1 / l.right.size(), q1 = i1 % l.right.size();
        const std::size_t p2 = i2 / l.right.size(), q2 = i2 % l.right.size();
        const auto bcd = a->multiply(a->multiply(a->basis_vector(l.right[q1]), a->basis_vector(l.left[p2])),
                                     a->basis_vector(l.right[q2]));
        for (std::size_t q = 0; q < l.right.size(); ++q)
            if (!bcd[l.right[q]].is_zero()) mult(l.index(p1, q), k) = bcd[l.right[q]];
    }
    return {c, sq, std::move(mult), canonical_unit(a, form, e, c)};
}

FrobeniusObject canonical_algebra(const AlgebraPtr& a, const SymmetrizingForm& form, std::size_t e) {
    auto c = projective_bimodule(a, e, e);
    auto sq = tensor_over(c, c);
    return {algebra_on(a, form, e, c, sq), coalgebra_on(a, e, c, sq, a->idempotent(e))};
}

bool dual_basis_identity(const AlgebraPtr& a, const SymmetrizingForm& form, std::size_t e) {
    const Layout l = layout(a, e);
    const auto duals = form.dual_basis(*a, e);
    for (std::size_t u : l.right) {
        std::vector<Rational> sum(a->dim());
        for (std::size_t k = 0; k < l.left.size(); ++k) {
            const Rational s = form.gram(u, l.left[k]);
            if (s.is_zero()) continue;
            for (std::size_t r = 0; r < a->dim(); ++r) sum[r] += s * duals[k][r];
        }
        if (sum != a->basis_vector(u)) return false;
    }
    return true;
}

CellRepCartan cell_rep_cartan(const AlgebraPtr& a, const SymmetrizingForm& form, std::size_t e) {
    const std::size_t n = a->num_vertices();
    const Layout g = layout(a, e);
    auto c = projective_bimodule(a, e, e);
    std::vector<BimodulePtr> xs, xgs;
    std::vector<QMatrix> acts;
    for (std::size_t i = 0; i < n; ++i) {
        xs.push_back(projective_bimodule(a, i, e));
        xgs.push_back(tensor_over(xs[i], c));
        acts.push_back(contraction(a, form, xgs[i], i, e, e, e));
    }
    const QMatrix one = QMatrix::identity(c->dim());
    CellRepCartan out;
    out.matrix.assign(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto h = hom_space(xs[i], xs[j]);
            std::vector<QMatrix> defect;
            for (const auto& f : h) defect.push_back(acts[j] * horizontal(xgs[i], xgs[j], f, one) - f * acts[i]);
            std::vector<SparseVec<Rational>> eqs;
            if (!defect.empty())
                for (std::size_t r = 0; r < defect[0].rows(); ++r)
                    for (std::size_t s = 0; s < defect[0].cols(); ++s) {
                        SparseVec<Rational> row;
                        for (std::size_t u = 0; u < defect.size(); ++u)
                            if (!defect[u](r, s).is_zero()) row.emplace_back(u, defect[u](r, s));
                        if (!row.empty()) eqs.push_back(std::move(row));
                    }
            out.matrix[i][j] = static_cast<long>(solve_linear<Rational>(h.size(), eqs).size());
        }
    out.equals_cartan = out.matrix == cartan_matrix(*a);
    return out;
}

}  // namespace fiatkit
