#include "fiatkit/morita.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace fiatkit {
namespace {

QMatrix eye(const BimodulePtr& x) { return QMatrix::identity(x->dim()); }

void need(bool ok, std::string& err, const std::string& what) {
    if (!ok && err.empty()) err = what;
}

std::vector<Rational> stack(const std::vector<QMatrix>& parts) {
    std::vector<Rational> out;
    for (const auto& p : parts) {
        auto f = flatten(p);
        out.insert(out.end(), f.begin(), f.end());
    }
    return out;
}

void require_composite(const BimodulePtr& comp, const BimodulePtr& l, const BimodulePtr& r, const char* what) {
    const auto& t = comp->tensor();
    if (!t || t->left != l || t->right != r) throw std::invalid_argument(std::string(what) + ": composite mismatch");
}

// Right B-action on X o B, (X o B) o B -> X o B through 1 o mu.
QMatrix free_right_action(const BimodulePtr& x, const AlgebraObject& b, const BimodulePtr& xb,
                          const BimodulePtr& xb_b) {
    auto x_bb = tensor_over(x, b.square);
    return horizontal(x_bb, xb, eye(x), b.mult) * associator(xb_b, x_bb);
}

QMatrix free_left_action(const BimodulePtr& x, const AlgebraObject& b, const BimodulePtr& bx,
                         const BimodulePtr& b_bx) {
    auto bb_x = tensor_over(b.square, x);
    return horizontal(bb_x, bx, b.mult, eye(x)) * associator_inverse(b_bx, bb_x);
}

// Solves for a module section sigma: X -> free with act_free (sigma o 1) = sigma act and proj sigma = id.
bool has_module_section(const BimodulePtr& x, const BimodulePtr& free, const QMatrix& proj,
                        const std::function<QMatrix(const QMatrix&)>& defect) {
    const auto h = hom_space(x, free);
    if (h.empty()) return x->dim() == 0;
    std::vector<std::vector<Rational>> cols;
    for (const auto& s : h) cols.push_back(stack({defect(s), proj * s}));
    std::vector<Rational> rhs = stack({QMatrix(defect(h[0]).rows(), defect(h[0]).cols()), eye(x)});
    return solve_affine(QMatrix::from_columns(rhs.size(), cols), rhs).has_value();
}

}  // namespace

std::string module_object_error(const BimoduleObject& m) {
    std::string err;
    const auto& x = m.carrier;
    if (m.left) {
        const auto& l = *m.left;
        const auto& b = l.algebra;
        require_composite(l.composite, b.carrier, x, "left action");
        need(l.action.rows() == x->dim() && l.action.cols() == l.composite->dim(), err, "left action: shape");
        if (!err.empty()) return err;
        need(is_bimodule_map(l.composite, x, l.action), err, "left action is not a bimodule map");
        auto bb_x = tensor_over(b.square, x);
        auto b_bx = tensor_over(b.carrier, l.composite);
        need(l.action * horizontal(bb_x, l.composite, b.mult, eye(x)) ==
                 l.action * horizontal(b_bx, l.composite, eye(b.carrier), l.action) * associator(bb_x, b_bx),
             err, "left action is not associative");
        auto id_x = tensor_over(identity_bimodule(x->left_algebra()), x);
        need(l.action * horizontal(id_x, l.composite, b.unit, eye(x)) * left_unitor_inverse(id_x) == eye(x), err,
             "left action is not unital");
    }
    if (m.right) {
        const auto& r = *m.right;
        const auto& b = r.algebra;
        require_composite(r.composite, x, b.carrier, "right action");
        need(r.action.rows() == x->dim() && r.action.cols() == r.composite->dim(), err, "right action: shape");
        if (!err.empty()) return err;
        need(is_bimodule_map(r.composite, x, r.action), err, "right action is not a bimodule map");
        auto xb_b = tensor_over(r.composite, b.carrier);
        auto x_bb = tensor_over(x, b.square);
        need(r.action * horizontal(xb_b, r.composite, r.action, eye(b.carrier)) ==
                 r.action * horizontal(x_bb, r.composite, eye(x), b.mult) * associator(xb_b, x_bb),
             err, "right action is not associative");
        auto x_id = tensor_over(x, identity_bimodule(x->right_algebra()));
        need(r.action * horizontal(x_id, r.composite, eye(x), b.unit) * right_unitor_inverse(x_id) == eye(x), err,
             "right action is not unital");
    }
    if (m.left && m.right && err.empty()) {
        const auto& l = *m.left;
        const auto& r = *m.right;
        auto ax_b = tensor_over(l.composite, r.algebra.carrier);
        auto a_xb = tensor_over(l.algebra.carrier, r.composite);
        need(r.action * horizontal(ax_b, r.composite, l.action, eye(r.algebra.carrier)) ==
                 l.action * horizontal(a_xb, l.composite, eye(l.algebra.carrier), r.action) *
                     associator(ax_b, a_xb),
             err, "left and right actions do not commute");
    }
    return err;
}

std::string comodule_object_error(const BicomoduleObject& m) {
    std::string err;
    const auto& x = m.carrier;
    if (m.left) {
        const auto& l = *m.left;
        const auto& c = l.coalgebra;
        require_composite(l.composite, c.carrier, x, "left coaction");
        need(is_bimodule_map(x, l.composite, l.coaction), err, "left coaction is not a bimodule map");
        auto cc_x = tensor_over(c.square, x);
        auto c_cx = tensor_over(c.carrier, l.composite);
        need(associator(cc_x, c_cx) * horizontal(l.composite, cc_x, c.comult, eye(x)) * l.coaction ==
                 horizontal(l.composite, c_cx, eye(c.carrier), l.coaction) * l.coaction,
             err, "left coaction is not coassociative");
        auto id_x = tensor_over(identity_bimodule(x->left_algebra()), x);
        need(left_unitor(id_x) * horizontal(l.composite, id_x, c.counit, eye(x)) * l.coaction == eye(x), err,
             "left coaction is not counital");
    }
    if (m.right) {
        const auto& r = *m.right;
        const auto& c = r.coalgebra;
        require_composite(r.composite, x, c.carrier, "right coaction");
        need(is_bimodule_map(x, r.composite, r.coaction), err, "right coaction is not a bimodule map");
        auto xc_c = tensor_over(r.composite, c.carrier);
        auto x_cc = tensor_over(x, c.square);
        need(associator(xc_c, x_cc) * horizontal(r.composite, xc_c, r.coaction, eye(c.carrier)) * r.coaction ==
                 horizontal(r.composite, x_cc, eye(x), c.comult) * r.coaction,
             err, "right coaction is not coassociative");
        auto x_id = tensor_over(x, identity_bimodule(x->right_algebra()));
        need(right_unitor(x_id) * horizontal(r.composite, x_id, eye(x), c.counit) * r.coaction == eye(x), err,
             "right coaction is not counital");
    }
    if (m.left && m.right && err.empty()) {
        const auto& l = *m.left;
        const auto& r = *m.right;
        auto cx_d = tensor_over(l.composite, r.coalgebra.carrier);
        auto c_xd = tensor_over(l.coalgebra.carrier, r.composite);
        need(associator(cx_d, c_xd) * horizontal(r.composite, cx_d, l.coaction, eye(r.coalgebra.carrier)) *
                     r.coaction ==
                 horizontal(l.composite, c_xd, eye(l.coalgebra.carrier), r.coaction) * l.coaction,
             err, "left and right coactions do not commute");
    }
    return err;
}

BimoduleObject regular_object(const AlgebraObject& b, std::string label) {
    return {std::move(label), b.carrier, ModuleStructure{b, b.square, b.mult}, ModuleStructure{b, b.square, b.mult}};
}

BicomoduleObject regular_coobject(const CoalgebraObject& c, std::string label) {
    return {std::move(label), c.carrier, ComoduleStructure{c, c.square, c.comult},
            ComoduleStructure{c, c.square, c.comult}};
}

BimoduleObject contraction_object(const AlgebraPtr& a, const SymmetrizingForm& form, const AlgebraObject& left,
                                  const AlgebraObject& right, std::size_t i, std::size_t j) {
    auto x = projective_bimodule(a, i, j);
    auto lc = tensor_over(left.carrier, x);
    auto rc = tensor_over(x, right.carrier);
    return {x->label(), x, ModuleStructure{left, lc, contraction(a, form, lc, i, i, i, j)},
            ModuleStructure{right, rc, contraction(a, form, rc, i, j, j, j)}};
}

BicomoduleObject insertion_coobject(const AlgebraPtr& a, const CoalgebraObject& left, const CoalgebraObject& right,
                                    std::size_t i, std::size_t j) {
    auto x = projective_bimodule(a, i, j);
    auto lc = tensor_over(left.carrier, x);
    auto rc = tensor_over(x, right.carrier);
    const auto ai = a->left_projective(i), ui = a->right_projective(i);
    const auto aj = a->left_projective(j), uj = a->right_projective(j);
    auto pos = [](const std::vector<std::size_t>& v, std::size_t k) {
        return static_cast<std::size_t>(std::find(v.begin(), v.end(), k) - v.begin());
    };
    QMatrix lco(lc->dim(), x->dim()), rco(rc->dim(), x->dim());
    const std::size_t dx = x->dim(), dr = right.carrier->dim();
    for (std::size_t p = 0; p < ai.size(); ++p)
        for (std::size_t q = 0; q < uj.size(); ++q) {
            const std::size_t col = p * uj.size() + q;
            // (a (x) e_i) (x) (e_i (x) b)
            const std::size_t lflat = (p * ui.size() + pos(ui, a->idempotent(i))) * dx +
                                      pos(ai, a->idempotent(i)) * uj.size() + q;
            lco.set_column(col, project_flat(*lc->tensor(), {{lflat, Rational(1)}}));
            // (a (x) e_j) (x) (e_j (x) b)
            const std::size_t rflat = (p * uj.size() + pos(uj, a->idempotent(j))) * dr +
                                      pos(aj, a->idempotent(j)) * uj.size() + q;
            rco.set_column(col, project_flat(*rc->tensor(), {{rflat, Rational(1)}}));
        }
    return {x->label(), x, ComoduleStructure{left, lc, lco}, ComoduleStructure{right, rc, rco}};
}

RelativeTensor relative_tensor(const BimoduleObject& m, const BimoduleObject& n) {
    if (!m.right || !n.left) throw std::invalid_argument("relative_tensor: missing right or left action");
    if (m.right->algebra.carrier != n.left->algebra.carrier)
        throw std::invalid_argument("relative_tensor: actions over different algebra objects");
    if (auto e = module_object_error(m); !e.empty()) throw std::invalid_argument("relative_tensor: " + m.label + ": " + e);
    if (auto e = module_object_error(n); !e.empty()) throw std::invalid_argument("relative_tensor: " + n.label + ": " + e);
    const auto& x = m.carrier;
    const auto& y = n.carrier;
    RelativeTensor rt;
    rt.balanced = tensor_over(x, y);
    auto mb_n = tensor_over(m.right->composite, y);
    auto m_bn = tensor_over(x, n.left->composite);
    rt.relations = horizontal(mb_n, rt.balanced, m.right->action, eye(y)) -
                   horizontal(m_bn, rt.balanced, eye(x), n.left->action) * associator(mb_n, m_bn);
    const auto ck = cokernel_projection(rt.relations, std::optional<Rational>(Rational(1)));
    rt.projection = ck.projection;
    rt.section = ck.section;
    std::vector<QMatrix> left, right;
    for (std::size_t k = 0; k < x->left_algebra()->dim(); ++k)
        left.push_back(rt.projection * rt.balanced->left_action(k) * rt.section);
    for (std::size_t k = 0; k < y->right_algebra()->dim(); ++k)
        right.push_back(rt.projection * rt.balanced->right_action(k) * rt.section);
    auto r = make_bimodule(x->left_algebra(), y->right_algebra(), std::move(left), std::move(right),
                           m.label + " o_B " + n.label);
    rt.result = {r->label(), r, std::nullopt, std::nullopt};
    if (m.left) {
        const auto& a = m.left->algebra;
        auto a_r = tensor_over(a.carrier, r);
        auto a_mn = tensor_over(a.carrier, rt.balanced);
        auto am_n = tensor_over(m.left->composite, y);
        QMatrix act = rt.projection * horizontal(am_n, rt.balanced, m.left->action, eye(y)) *
                      associator_inverse(a_mn, am_n) * horizontal(a_r, a_mn, eye(a.carrier), rt.section);
        rt.result.left = ModuleStructure{a, a_r, std::move(act)};
    }
    if (n.right) {
        const auto& b = n.right->algebra;
        auto r_b = tensor_over(r, b.carrier);
        auto mn_b = tensor_over(rt.balanced, b.carrier);
        auto m_nb = tensor_over(x, n.right->composite);
        QMatrix act = rt.projection * horizontal(m_nb, rt.balanced, eye(x), n.right->action) *
                      associator(mn_b, m_nb) * horizontal(r_b, mn_b, rt.section, eye(b.carrier));
        rt.result.right = ModuleStructure{b, r_b, std::move(act)};
    }
    return rt;
}

Cotensor cotensor(const BicomoduleObject& m, const BicomoduleObject& n) {
    if (!m.right || !n.left) throw std::invalid_argument("cotensor: missing right or left coaction");
    if (m.right->coalgebra.carrier != n.left->coalgebra.carrier)
        throw std::invalid_argument("cotensor: coactions over different coalgebra objects");
    if (auto e = comodule_object_error(m); !e.empty()) throw std::invalid_argument("cotensor: " + m.label + ": " + e);
    if (auto e = comodule_object_error(n); !e.empty()) throw std::invalid_argument("cotensor: " + n.label + ": " + e);
    const auto& x = m.carrier;
    const auto& y = n.carrier;
    Cotensor ct;
    ct.balanced = tensor_over(x, y);
    auto mc_n = tensor_over(m.right->composite, y);
    auto m_cn = tensor_over(x, n.left->composite);
    const QMatrix diff = horizontal(ct.balanced, mc_n, m.right->coaction, eye(y)) -
                         associator_inverse(m_cn, mc_n) * horizontal(ct.balanced, m_cn, eye(x), n.left->coaction);
    ct.inclusion = kernel(diff);
    const QMatrix back = left_inverse(ct.inclusion);
    std::vector<QMatrix> left, right;
    for (std::size_t k = 0; k < x->left_algebra()->dim(); ++k)
        left.push_back(back * ct.balanced->left_action(k) * ct.inclusion);
    for (std::size_t k = 0; k < y->right_algebra()->dim(); ++k)
        right.push_back(back * ct.balanced->right_action(k) * ct.inclusion);
    auto r = make_bimodule(x->left_algebra(), y->right_algebra(), std::move(left), std::move(right),
                           m.label + " box_C " + n.label);
    ct.result = {r->label(), r, std::nullopt, std::nullopt};
    return ct;
}

bool unit_descent_check(const BimoduleObject& m) {
    bool ok = true;
    if (m.left) {
        auto rt = relative_tensor(regular_object(m.left->algebra, "B"), BimoduleObject{m.label, m.carrier, m.left, std::nullopt});
        ok = ok && (m.left->action * rt.relations).is_zero() && is_invertible(m.left->action * rt.section);
    }
    if (m.right) {
        auto rt = relative_tensor(BimoduleObject{m.label, m.carrier, std::nullopt, m.right}, regular_object(m.right->algebra, "B"));
        ok = ok && (m.right->action * rt.relations).is_zero() && is_invertible(m.right->action * rt.section);
    }
    return ok;
}

bool is_projective_right(const BimoduleObject& m) {
    if (!m.right) throw std::invalid_argument("is_projective_right: no right action");
    const auto& r = *m.right;
    auto xb_b = tensor_over(r.composite, r.algebra.carrier);
    const QMatrix free_act = free_right_action(m.carrier, r.algebra, r.composite, xb_b);
    const QMatrix one_b = eye(r.algebra.carrier);
    return has_module_section(m.carrier, r.composite, r.action, [&](const QMatrix& s) {
        return free_act * horizontal(r.composite, xb_b, s, one_b) - s * r.action;
    });
}

bool is_projective_left(const BimoduleObject& m) {
    if (!m.left) throw std::invalid_argument("is_projective_left: no left action");
    const auto& l = *m.left;
    auto b_bx = tensor_over(l.algebra.carrier, l.composite);
    const QMatrix free_act = free_left_action(m.carrier, l.algebra, l.composite, b_bx);
    const QMatrix one_b = eye(l.algebra.carrier);
    return has_module_section(m.carrier, l.composite, l.action, [&](const QMatrix& s) {
        return free_act * horizontal(l.composite, b_bx, one_b, s) - s * l.action;
    });
}

MoritaReport check_morita_witness(const AlgebraObject& a_obj, const AlgebraObject& b_obj, const BimoduleObject& m,
                                  const BimoduleObject& n, const std::optional<QMatrix>& f_in,
                                  const std::optional<QMatrix>& g_in) {
    MoritaReport rep;
    if (!m.left || !m.right || !n.left || !n.right) {
        rep.input_error = "bimodule objects need both actions";
        return rep;
    }
    if (m.left->algebra.carrier != a_obj.carrier || m.right->algebra.carrier != b_obj.carrier ||
        n.left->algebra.carrier != b_obj.carrier || n.right->algebra.carrier != a_obj.carrier) {
        rep.input_error = "actions are not over the given algebra objects";
        return rep;
    }
    if (auto e = module_object_error(m); !e.empty()) {
        rep.input_error = m.label + ": " + e;
        return rep;
    }
    if (auto e = module_object_error(n); !e.empty()) {
        rep.input_error = n.label + ": " + e;
        return rep;
    }
    const RelativeTensor r1 = relative_tensor(m, n);  // over B
    const RelativeTensor r2 = relative_tensor(n, m);  // over A
    rep.balanced_mn = r1.balanced->dim();
    rep.relative_mn = r1.result.carrier->dim();
    rep.balanced_nm = r2.balanced->dim();
    rep.relative_nm = r2.result.carrier->dim();
    rep.m_projective = is_projective_right(m) && is_projective_left(m);
    rep.n_projective = is_projective_right(n) && is_projective_left(n);

    const auto& x = m.carrier;
    const auto& y = n.carrier;
    auto mn_m = tensor_over(r1.balanced, x);
    auto m_nm = tensor_over(x, r2.balanced);
    auto nm_n = tensor_over(r2.balanced, y);
    auto n_mn = tensor_over(y, r1.balanced);
    const QMatrix al_m = associator(mn_m, m_nm);
    const QMatrix al_n = associator(nm_n, n_mn);
    const auto& r1l = *r1.result.left;
    const auto& r1r = *r1.result.right;
    const auto& r2l = *r2.result.left;
    const auto& r2r = *r2.result.right;

    struct Residuals {
        QMatrix sq_m, sq_n, f_left, f_right, g_left, g_right;
    };
    auto residuals = [&](const QMatrix& f, const QMatrix& g) {
        const QMatrix fp = f * r1.projection, gp = g * r2.projection;
        Residuals r;
        r.sq_m = m.left->action * horizontal(mn_m, m.left->composite, fp, eye(x)) -
                 m.right->action * horizontal(m_nm, m.right->composite, eye(x), gp) * al_m;
        r.sq_n = n.left->action * horizontal(nm_n, n.left->composite, gp, eye(y)) -
                 n.right->action * horizontal(n_mn, n.right->composite, eye(y), fp) * al_n;
        r.f_left = f * r1l.action - a_obj.mult * horizontal(r1l.composite, a_obj.square, eye(a_obj.carrier), f);
        r.f_right = f * r1r.action - a_obj.mult * horizontal(r1r.composite, a_obj.square, f, eye(a_obj.carrier));
        r.g_left = g * r2l.action - b_obj.mult * horizontal(r2l.composite, b_obj.square, eye(b_obj.carrier), g);
        r.g_right = g * r2r.action - b_obj.mult * horizontal(r2r.composite, b_obj.square, g, eye(b_obj.carrier));
        return r;
    };
    const std::size_t fr = a_obj.carrier->dim(), fc = r1.result.carrier->dim();
    const std::size_t gr = b_obj.carrier->dim(), gc = r2.result.carrier->dim();

    auto accept = [&](const QMatrix& f, const QMatrix& g) {
        const Residuals r = residuals(f, g);
        rep.f = f;
        rep.g = g;
        rep.f_iso = is_invertible(f) && is_bimodule_map(r1.result.carrier, a_obj.carrier, f);
        rep.g_iso = is_invertible(g) && is_bimodule_map(r2.result.carrier, b_obj.carrier, g);
        rep.f_linear = r.f_left.is_zero() && r.f_right.is_zero();
        rep.g_linear = r.g_left.is_zero() && r.g_right.is_zero();
        rep.square_m = r.sq_m.is_zero();
        rep.square_n = r.sq_n.is_zero();
        rep.residual_m = r.sq_m;
        rep.residual_n = r.sq_n;
    };

    if (f_in && g_in) {
        rep.found = true;
        accept(*f_in, *g_in);
        return rep;
    }
    const auto hf = hom_space(r1.result.carrier, a_obj.carrier);
    const auto hg = hom_space(r2.result.carrier, b_obj.carrier);
    std::vector<QMatrix> columns;
    auto as_column = [&](const Residuals& r) {
        auto v = stack({r.sq_m, r.sq_n, r.f_left, r.f_right, r.g_left, r.g_right});
        return QMatrix::from_columns(v.size(), {v});
    };
    for (const auto& h : hf) columns.push_back(as_column(residuals(h, QMatrix(gr, gc))));
    for (const auto& h : hg) columns.push_back(as_column(residuals(QMatrix(fr, fc), h)));
    const auto sol = linear_relations(columns);
    static const int grid[] = {1, -1, 2, -2, 0};
    std::size_t tries = 1;
    for (std::size_t i = 0; i < sol.size() && tries < 4096; ++i) tries *= 5;
    tries = std::min<std::size_t>(tries, 4096);
    for (std::size_t t = 0; t < tries; ++t) {
        std::vector<Rational> c(hf.size() + hg.size());
        std::size_t rest = t;
        for (const auto& s : sol) {
            const int w = grid[rest % 5];
            rest /= 5;
            if (w == 0) continue;
            for (std::size_t u = 0; u < c.size(); ++u) c[u] += s[u] * Rational(w);
        }
        const std::vector<Rational> cf(c.begin(), c.begin() + static_cast<long>(hf.size()));
        const std::vector<Rational> cg(c.begin() + static_cast<long>(hf.size()), c.end());
        const QMatrix f = combine(hf, cf, fr, fc), g = combine(hg, cg, gr, gc);
        if (is_invertible(f) && is_invertible(g)) {
            rep.found = true;
            accept(f, g);
            return rep;
        }
    }
    return rep;
}

}  // namespace fiatkit
