#include "fiatkit/abel.hpp"

#include "fiatkit/linalg.hpp"
#include "fiatkit/parallel.hpp"

#include <stdexcept>

namespace fiatkit {

namespace {

QMatrix zero_map(const BimodulePtr& x, const BimodulePtr& y) { return QMatrix(y->dim(), x->dim()); }

SparseVec<Rational> sparse(const std::vector<Rational>& v) {
    SparseVec<Rational> s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.emplace_back(i, v[i]);
    return s;
}

QMatrix combination(const std::vector<QMatrix>& basis, const std::vector<Rational>& c, std::size_t off,
                    const QMatrix& shape) {
    QMatrix out = shape;
    for (std::size_t b = 0; b < basis.size(); ++b)
        if (!c[off + b].is_zero()) out += basis[b] * c[off + b];
    return out;
}

// {sum q_i f_i} (injective) or {sum f'_i q_i} (projective) inside Hom(X, X').
std::vector<QMatrix> homotopies(const AbObject& p, const AbObject& q, AbMode mode) {
    std::vector<QMatrix> out;
    if (mode == AbMode::injective) {
        for (std::size_t i = 0; i < p.k(); ++i)
            for (const auto& qi : hom_space(p.y[i], q.x)) out.push_back(qi * p.f[i]);
    } else {
        for (std::size_t i = 0; i < q.k(); ++i)
            for (const auto& qi : hom_space(p.x, q.y[i])) out.push_back(q.f[i] * qi);
    }
    return out;
}

// Compatibility residuals, one per right-hand index of the relevant side:
// f'_i g - sum_j h_{j,i} f_j, or g f_i - sum_j f'_j h_{i,j}.
std::vector<QMatrix> residuals(const AbObject& p, const AbObject& q, const QMatrix& g,
                               const std::vector<std::vector<QMatrix>>& h, AbMode mode) {
    std::vector<QMatrix> out;
    if (mode == AbMode::injective) {
        for (std::size_t i = 0; i < q.k(); ++i) {
            QMatrix r = q.f[i] * g;
            for (std::size_t j = 0; j < p.k(); ++j) r -= h[j][i] * p.f[j];
            out.push_back(std::move(r));
        }
    } else {
        for (std::size_t i = 0; i < p.k(); ++i) {
            QMatrix r = g * p.f[i];
            for (std::size_t j = 0; j < q.k(); ++j) r -= q.f[j] * h[i][j];
            out.push_back(std::move(r));
        }
    }
    return out;
}

void require_valid(const AbObject& p, AbMode mode) {
    auto err = ab_object_error(p, mode);
    if (!err.empty()) throw std::invalid_argument(err);
}

}  // namespace

std::string ab_object_error(const AbObject& p, AbMode mode) {
    if (!p.x) return "object has no X";
    if (p.f.size() != p.y.size()) return "number of maps differs from number of targets";
    for (std::size_t i = 0; i < p.k(); ++i) {
        if (!p.y[i]) return "missing Y_" + std::to_string(i + 1);
        bool ok = mode == AbMode::injective ? is_bimodule_map(p.x, p.y[i], p.f[i]) : is_bimodule_map(p.y[i], p.x, p.f[i]);
        if (!ok) return "f_" + std::to_string(i + 1) + " is not a morphism of the ambient category";
    }
    return {};
}

AbObject embed(const BimodulePtr& x) { return AbObject{x, {}, {}}; }

AbMorphismSpace hom_space(const AbObject& p, const AbObject& q, AbMode mode) {
    require_valid(p, mode);
    require_valid(q, mode);
    // unknowns: g in Hom(X, X') and h_{i,j} in Hom(Y_i, Y'_j)
    const auto gb = hom_space(p.x, q.x);
    std::vector<std::vector<std::vector<QMatrix>>> hb(p.k(), std::vector<std::vector<QMatrix>>(q.k()));
    std::vector<std::vector<std::size_t>> hoff(p.k(), std::vector<std::size_t>(q.k()));
    std::size_t vars = gb.size();
    for (std::size_t i = 0; i < p.k(); ++i)
        for (std::size_t j = 0; j < q.k(); ++j) {
            hb[i][j] = hom_space(p.y[i], q.y[j]);
            hoff[i][j] = vars;
            vars += hb[i][j].size();
        }
    const auto gshape = zero_map(p.x, q.x);
    auto zero_h = [&] {
        std::vector<std::vector<QMatrix>> h(p.k(), std::vector<QMatrix>(q.k()));
        for (std::size_t i = 0; i < p.k(); ++i)
            for (std::size_t j = 0; j < q.k(); ++j) h[i][j] = zero_map(p.y[i], q.y[j]);
        return h;
    };

    // residuals are linear in the unknowns: evaluate on each basis vector
    std::vector<std::vector<Rational>> columns;
    for (std::size_t b = 0; b < gb.size(); ++b) {
        std::vector<Rational> col;
        for (auto& r : residuals(p, q, gb[b], zero_h(), mode))
            for (auto& v : flatten(r)) col.push_back(v);
        columns.push_back(std::move(col));
    }
    for (std::size_t i = 0; i < p.k(); ++i)
        for (std::size_t j = 0; j < q.k(); ++j)
            for (std::size_t b = 0; b < hb[i][j].size(); ++b) {
                auto h = zero_h();
                h[i][j] = hb[i][j][b];
                std::vector<Rational> col;
                for (auto& r : residuals(p, q, gshape, h, mode))
                    for (auto& v : flatten(r)) col.push_back(v);
                columns.push_back(std::move(col));
            }
    const std::size_t len = columns.empty() ? 0 : columns[0].size();
    std::vector<SparseVec<Rational>> eqs(len);
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t t = 0; t < len; ++t)
            if (!columns[c][t].is_zero()) eqs[t].emplace_back(c, columns[c][t]);
    auto solutions = solve_linear(vars, eqs, Rational(1));

    AbMorphismSpace out;
    out.solution_dim = solutions.size();
    const std::size_t glen = gshape.rows() * gshape.cols();
    EchelonBasis<Rational> g_span(glen, Rational(1));
    for (auto& s : solutions)
        if (g_span.insert(sparse(flatten(combination(gb, s, 0, gshape))))) ++out.g_dim;

    EchelonBasis<Rational> quotient(glen, Rational(1));
    for (auto& h : homotopies(p, q, mode))
        if (quotient.insert(sparse(flatten(h)))) out.homotopy.push_back(h);
    out.homotopy_dim = out.homotopy.size();
    for (auto& s : solutions) {
        QMatrix g = combination(gb, s, 0, gshape);
        if (!quotient.insert(sparse(flatten(g)))) continue;
        AbMorphism m{p, q, g, zero_h()};
        for (std::size_t i = 0; i < p.k(); ++i)
            for (std::size_t j = 0; j < q.k(); ++j)
                m.h[i][j] = combination(hb[i][j], s, hoff[i][j], zero_map(p.y[i], q.y[j]));
        out.representatives.push_back(std::move(m));
    }
    out.dim = out.representatives.size();
    if (out.dim + out.homotopy_dim != out.g_dim) throw std::logic_error("homotopies outside the compatible maps");
    return out;
}

bool is_compatible(const AbMorphism& m, AbMode mode) {
    const auto& p = m.source;
    const auto& q = m.target;
    if (m.g.rows() != q.x->dim() || m.g.cols() != p.x->dim() || m.h.size() != p.k()) return false;
    for (std::size_t i = 0; i < p.k(); ++i) {
        if (m.h[i].size() != q.k()) return false;
        for (std::size_t j = 0; j < q.k(); ++j)
            if (m.h[i][j].rows() != q.y[j]->dim() || m.h[i][j].cols() != p.y[i]->dim()) return false;
    }
    for (auto& r : residuals(p, q, m.g, m.h, mode))
        if (!r.is_zero()) return false;
    return true;
}

bool is_null_homotopic(const AbMorphism& m, AbMode mode) {
    const std::size_t len = m.g.rows() * m.g.cols();
    EchelonBasis<Rational> span(len, Rational(1));
    for (auto& h : homotopies(m.source, m.target, mode)) span.insert(sparse(flatten(h)));
    return !span.insert(sparse(flatten(m.g)));
}

AbMorphism identity_morphism(const AbObject& p) {
    AbMorphism m{p, p, QMatrix::identity(p.x->dim()), {}};
    m.h.assign(p.k(), std::vector<QMatrix>(p.k()));
    for (std::size_t i = 0; i < p.k(); ++i)
        for (std::size_t j = 0; j < p.k(); ++j)
            m.h[i][j] = i == j ? QMatrix::identity(p.y[i]->dim()) : zero_map(p.y[i], p.y[j]);
    return m;
}

namespace {

bool same_object(const AbObject& a, const AbObject& b) {
    if (a.x != b.x || a.y != b.y) return false;
    for (std::size_t i = 0; i < a.k(); ++i)
        if (a.f[i].rows() != b.f[i].rows() || a.f[i].cols() != b.f[i].cols() || !(a.f[i] - b.f[i]).is_zero())
            return false;
    return true;
}

}  // namespace

AbMorphism compose(const AbMorphism& m1, const AbMorphism& m2) {
    if (!same_object(m1.target, m2.source)) throw std::invalid_argument("morphisms are not composable");
    const auto& mid = m1.target;
    const auto& p = m1.source;
    const auto& r = m2.target;
    AbMorphism out{p, r, m2.g * m1.g, {}};
    out.h.assign(p.k(), std::vector<QMatrix>(r.k()));
    for (std::size_t i = 0; i < p.k(); ++i)
        for (std::size_t j = 0; j < r.k(); ++j) {
            QMatrix acc = zero_map(p.y[i], r.y[j]);
            for (std::size_t k = 0; k < mid.k(); ++k) acc += m2.h[k][j] * m1.h[i][k];
            out.h[i][j] = std::move(acc);
        }
    return out;
}

DirectSum direct_sum(const std::vector<BimodulePtr>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct sum of nothing");
    const auto& la = parts[0]->left_algebra();
    const auto& ra = parts[0]->right_algebra();
    std::size_t total = 0;
    std::string label;
    for (auto& m : parts) {
        if (m->left_algebra() != la || m->right_algebra() != ra) throw AlgebraMismatch("summands over different algebras");
        total += m->dim();
        label += (label.empty() ? "" : "+") + m->label();
    }
    std::vector<QMatrix> lact(la->dim(), QMatrix(total, total)), ract(ra->dim(), QMatrix(total, total));
    DirectSum ds;
    std::size_t off = 0;
    for (auto& m : parts) {
        for (std::size_t b = 0; b < la->dim(); ++b)
            for (std::size_t r = 0; r < m->dim(); ++r)
                for (std::size_t c = 0; c < m->dim(); ++c) lact[b](off + r, off + c) = m->left_action(b)(r, c);
        for (std::size_t b = 0; b < ra->dim(); ++b)
            for (std::size_t r = 0; r < m->dim(); ++r)
                for (std::size_t c = 0; c < m->dim(); ++c) ract[b](off + r, off + c) = m->right_action(b)(r, c);
        QMatrix inc(total, m->dim()), proj(m->dim(), total);
        for (std::size_t t = 0; t < m->dim(); ++t) inc(off + t, t) = proj(t, off + t) = Rational(1);
        ds.inclusions.push_back(std::move(inc));
        ds.projections.push_back(std::move(proj));
        off += m->dim();
    }
    ds.sum = make_bimodule(la, ra, std::move(lact), std::move(ract), label);
    return ds;
}

AbObject collapse(const AbObject& p, AbMode mode) {
    require_valid(p, mode);
    if (p.k() == 0) return p;
    auto ds = direct_sum(p.y);
    QMatrix f = mode == AbMode::injective ? QMatrix(ds.sum->dim(), p.x->dim()) : QMatrix(p.x->dim(), ds.sum->dim());
    for (std::size_t i = 0; i < p.k(); ++i)
        f += mode == AbMode::injective ? ds.inclusions[i] * p.f[i] : p.f[i] * ds.projections[i];
    return AbObject{p.x, {ds.sum}, {f}};
}

AbObject compose_onemorphisms(const AbObject& t1, const AbObject& t2) {
    require_valid(t1, AbMode::injective);
    require_valid(t2, AbMode::injective);
    AbObject out;
    out.x = tensor_over(t1.x, t2.x);
    const auto id_f = QMatrix::identity(t1.x->dim());
    const auto id_fp = QMatrix::identity(t2.x->dim());
    for (std::size_t i = 0; i < t2.k(); ++i) {
        auto h = tensor_over(t1.x, t2.y[i]);
        out.f.push_back(horizontal(out.x, h, id_f, t2.f[i]));
        out.y.push_back(std::move(h));
    }
    for (std::size_t i = 0; i < t1.k(); ++i) {
        auto h = tensor_over(t1.y[i], t2.x);
        out.f.push_back(horizontal(out.x, h, t1.f[i], id_fp));
        out.y.push_back(std::move(h));
    }
    return out;
}

// ---------------------------------------------------------------- module oracle

namespace {

struct ConcreteModule {
    std::size_t dim = 0;
    std::vector<QMatrix> actions;  // generators of the left, then of the right algebra
};

ConcreteModule restrict_to(const BimodulePtr& x, const QMatrix& basis_in, const QMatrix& basis_out) {
    ConcreteModule m;
    m.dim = basis_in.cols();
    for (auto g : x->left_algebra()->generators()) m.actions.push_back(basis_out * x->left_action(g) * basis_in);
    for (auto g : x->right_algebra()->generators()) m.actions.push_back(basis_out * x->right_action(g) * basis_in);
    return m;
}

ConcreteModule two_term_module(const AbObject& p, AbMode mode) {
    AbObject c = collapse(p, mode);
    const std::size_t d = c.x->dim();
    if (c.k() == 0) return restrict_to(c.x, QMatrix::identity(d), QMatrix::identity(d));
    if (mode == AbMode::injective) {
        QMatrix b = kernel(c.f[0], std::optional<Rational>(Rational(1)));
        if (b.cols() == 0) return ConcreteModule{0, {}};
        return restrict_to(c.x, b, left_inverse(b));
    }
    auto ck = cokernel_projection(c.f[0], std::optional<Rational>(Rational(1)));
    if (ck.dim == 0) return ConcreteModule{0, {}};
    return restrict_to(c.x, ck.section, ck.projection);
}

std::size_t hom_dim(const ConcreteModule& m, const ConcreteModule& n) {
    if (m.dim == 0 || n.dim == 0) return 0;
    // phi (n.dim x m.dim), variable (r, c) at r * m.dim + c
    std::vector<SparseVec<Rational>> eqs;
    for (std::size_t g = 0; g < m.actions.size(); ++g) {
        const auto& a = m.actions[g];
        const auto& b = n.actions[g];
        for (std::size_t i = 0; i < n.dim; ++i)
            for (std::size_t j = 0; j < m.dim; ++j) {
                SparseVec<Rational> row;
                std::vector<Rational> coeff(n.dim * m.dim);
                for (std::size_t c = 0; c < m.dim; ++c) coeff[i * m.dim + c] += a(c, j);
                for (std::size_t r = 0; r < n.dim; ++r) coeff[r * m.dim + j] -= b(i, r);
                row = sparse(coeff);
                if (!row.empty()) eqs.push_back(std::move(row));
            }
    }
    return solve_linear(n.dim * m.dim, eqs, Rational(1)).size();
}

}  // namespace

std::size_t module_hom_dim(const AbObject& p, const AbObject& q, AbMode mode) {
    return hom_dim(two_term_module(p, mode), two_term_module(q, mode));
}

bool EquivalenceReport::passed() const {
    for (auto& pr : pairs)
        if (pr.abelian_dim != pr.module_dim) return false;
    return !pairs.empty();
}

EquivalenceReport equivalence_check(const AlgebraPtr& a, AbMode mode) {
    EquivalenceReport rep;
    rep.mode = mode;
    const std::size_t n = a->num_vertices();
    std::vector<BimodulePtr> proj;
    for (std::size_t i = 0; i < n; ++i) proj.push_back(left_projective_module(a, i));
    auto name = [&](std::size_t i) { return proj[i]->label(); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto maps = mode == AbMode::injective ? hom_space(proj[i], proj[j]) : hom_space(proj[j], proj[i]);
            for (std::size_t b = 0; b < maps.size(); ++b) {
                rep.family.push_back(AbObject{proj[i], {proj[j]}, {maps[b]}});
                rep.objects.push_back("(" + name(i) + ",1," + name(j) + ",f" + std::to_string(b) + ")");
            }
            if (i == j) {
                rep.family.push_back(AbObject{proj[i], {proj[i]}, {zero_map(proj[i], proj[i])}});
                rep.objects.push_back("(" + name(i) + ",1," + name(i) + ",0)");
            }
        }
    const std::size_t m = rep.family.size();
    rep.pairs.resize(m * m);
    parallel_for(m * m, [&](std::size_t t) {
        auto& pr = rep.pairs[t];
        pr.source = t / m;
        pr.target = t % m;
        pr.abelian_dim = hom_space(rep.family[pr.source], rep.family[pr.target], mode).dim;
        pr.module_dim = module_hom_dim(rep.family[pr.source], rep.family[pr.target], mode);
    });
    return rep;
}

}  // namespace fiatkit
