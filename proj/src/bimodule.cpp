#include "fiatkit/bimodule.hpp"

#include <algorithm>
#include <map>

namespace fiatkit {
namespace {

std::vector<SparseVec<Rational>> columns_of(const QMatrix& m) {
    std::vector<SparseVec<Rational>> cols(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) cols[j].emplace_back(i, m(i, j));
    return cols;
}

std::vector<SparseVec<Rational>> rows_of(const QMatrix& m) {
    std::vector<SparseVec<Rational>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) rows[i].emplace_back(j, m(i, j));
    return rows;
}

QMatrix restrict(const QMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    QMatrix r(rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b) r(a, b) = m(rows[a], cols[b]);
    return r;
}

const TensorData& tensor_of(const BimodulePtr& m, const char* what) {
    if (!m || !m->tensor()) throw std::invalid_argument(std::string(what) + ": expected a composite 1-morphism");
    return *m->tensor();
}

std::string vertex_label(const FDAlgebra& a, std::size_t v) { return a.vertex_names()[v]; }

}  // namespace

Bimodule::Bimodule(AlgebraPtr left, AlgebraPtr right, std::vector<QMatrix> left_action,
                   std::vector<QMatrix> right_action, std::string label)
    : left_(std::move(left)), right_(std::move(right)), lact_(std::move(left_action)), ract_(std::move(right_action)),
      label_(std::move(label)) {
    if (lact_.size() != left_->dim() || ract_.size() != right_->dim())
        throw std::invalid_argument("bimodule: one action matrix per algebra basis element is required");
    dim_ = lact_.empty() ? 0 : lact_[0].rows();
    for (const auto& m : lact_)
        if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("bimodule: action shape mismatch");
    for (const auto& m : ract_)
        if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("bimodule: action shape mismatch");

    // Weights exist when every idempotent acts as a 0/1 diagonal matrix.
    std::vector<std::pair<std::size_t, std::size_t>> w(dim_, {SIZE_MAX, SIZE_MAX});
    auto scan = [&](const AlgebraPtr& alg, const std::vector<QMatrix>& act, bool left_side) {
        for (std::size_t v = 0; v < alg->num_vertices(); ++v) {
            const QMatrix& e = act[alg->idempotent(v)];
            for (std::size_t r = 0; r < dim_; ++r)
                for (std::size_t c = 0; c < dim_; ++c) {
                    const Rational& x = e(r, c);
                    if (x.is_zero()) continue;
                    if (r != c || !x.is_one()) return false;
                    auto& slot = left_side ? w[r].first : w[r].second;
                    if (slot != SIZE_MAX) return false;
                    slot = v;
                }
        }
        return true;
    };
    if (scan(left_, lact_, true) && scan(right_, ract_, false)) {
        bool complete = true;
        for (const auto& p : w)
            if (p.first == SIZE_MAX || p.second == SIZE_MAX) complete = false;
        if (complete) weights_ = std::move(w);
    }
}

std::string Bimodule::validation_error() const {
    const QMatrix id = QMatrix::identity(dim_);
    auto check_side = [&](const AlgebraPtr& alg, const std::vector<QMatrix>& act, bool left_side) -> std::string {
        const char* side = left_side ? "left" : "right";
        QMatrix unit(dim_, dim_);
        for (std::size_t v = 0; v < alg->num_vertices(); ++v) unit += act[alg->idempotent(v)];
        if (!(unit == id)) return std::string(side) + " action: unit does not act as the identity";
        for (std::size_t i = 0; i < alg->dim(); ++i)
            for (std::size_t j = 0; j < alg->dim(); ++j) {
                QMatrix expect(dim_, dim_);
                for (const auto& [k, c] : alg->product(i, j)) expect += act[k] * c;
                const QMatrix got = left_side ? act[i] * act[j] : act[j] * act[i];
                if (!(got == expect))
                    return std::string(side) + " action is not multiplicative on (" + alg->basis(i).label + ", " +
                           alg->basis(j).label + ")";
            }
        return {};
    };
    if (auto e = check_side(left_, lact_, true); !e.empty()) return e;
    if (auto e = check_side(right_, ract_, false); !e.empty()) return e;
    for (std::size_t a : left_->generators())
        for (std::size_t b : right_->generators())
            if (!(lact_[a] * ract_[b] == ract_[b] * lact_[a])) return "left and right actions do not commute";
    return {};
}

BimodulePtr make_bimodule(AlgebraPtr left, AlgebraPtr right, std::vector<QMatrix> left_action,
                          std::vector<QMatrix> right_action, std::string label) {
    return std::make_shared<const Bimodule>(std::move(left), std::move(right), std::move(left_action),
                                            std::move(right_action), std::move(label));
}

BimodulePtr projective_bimodule(const AlgebraPtr& a, std::size_t i, std::size_t j) {
    const auto lp = a->left_projective(i);
    const auto rp = a->right_projective(j);
    const QMatrix il = QMatrix::identity(lp.size()), ir = QMatrix::identity(rp.size());
    std::vector<QMatrix> left, right;
    for (std::size_t k = 0; k < a->dim(); ++k) {
        left.push_back(kron(restrict(a->left_mult(k), lp, lp), ir));
        right.push_back(kron(il, restrict(a->right_mult(k), rp, rp)));
    }
    return make_bimodule(a, a, std::move(left), std::move(right),
                         "P(" + vertex_label(*a, i) + "," + vertex_label(*a, j) + ")");
}

BimodulePtr identity_bimodule(const AlgebraPtr& a) {
    std::vector<QMatrix> left, right;
    for (std::size_t k = 0; k < a->dim(); ++k) {
        left.push_back(a->left_mult(k));
        right.push_back(a->right_mult(k));
    }
    return make_bimodule(a, a, std::move(left), std::move(right), "Id");
}

BimodulePtr left_projective_module(const AlgebraPtr& a, std::size_t i) {
    const auto lp = a->left_projective(i);
    std::vector<QMatrix> left;
    for (std::size_t k = 0; k < a->dim(); ++k) left.push_back(restrict(a->left_mult(k), lp, lp));
    return make_bimodule(a, ground_field(), std::move(left), {QMatrix::identity(lp.size())},
                         "Ae" + vertex_label(*a, i));
}

BimodulePtr regular_left_module(const AlgebraPtr& a) {
    std::vector<QMatrix> left;
    for (std::size_t k = 0; k < a->dim(); ++k) left.push_back(a->left_mult(k));
    return make_bimodule(a, ground_field(), std::move(left), {QMatrix::identity(a->dim())}, "A");
}

BimodulePtr zero_bimodule(const AlgebraPtr& left, const AlgebraPtr& right) {
    return make_bimodule(left, right, std::vector<QMatrix>(left->dim(), QMatrix(0, 0)),
                         std::vector<QMatrix>(right->dim(), QMatrix(0, 0)), "0");
}

std::vector<Rational> project_flat(const TensorData& t, const SparseVec<Rational>& flat) {
    std::vector<Rational> out(t.kept.size());
    for (const auto& [idx, c] : flat) {
        if (c.is_zero()) continue;
        for (const auto& [k, p] : t.projection[idx]) out[k] += c * p;
    }
    return out;
}

BimodulePtr tensor_over(const BimodulePtr& m, const BimodulePtr& n) {
    if (m->right_algebra() != n->left_algebra())
        throw AlgebraMismatch("tensor_over: middle algebras differ (" + m->label() + ", " + n->label() + ")");
    const AlgebraPtr& b = m->right_algebra();
    const std::size_t dm = m->dim(), dn = n->dim(), flat = dm * dn;

    std::vector<SparseVec<Rational>> rels;
    for (std::size_t g : b->generators()) {
        const auto rm = columns_of(m->right_action(g));
        const auto ln = columns_of(n->left_action(g));
        for (std::size_t mi = 0; mi < dm; ++mi)
            for (std::size_t ni = 0; ni < dn; ++ni) {
                std::map<std::size_t, Rational> row;
                for (const auto& [r, c] : rm[mi]) row[r * dn + ni] += c;
                for (const auto& [r, c] : ln[ni]) row[mi * dn + r] -= c;
                SparseVec<Rational> sv;
                for (auto& [k, c] : row)
                    if (!c.is_zero()) sv.emplace_back(k, c);
                if (!sv.empty()) rels.push_back(std::move(sv));
            }
    }
    Cokernel<Rational> q = quotient_by_relations(flat, rels, Rational(1));

    auto data = std::make_shared<TensorData>();
    data->left = m;
    data->right = n;
    data->kept = q.kept;
    data->projection.assign(flat, {});
    for (std::size_t k = 0; k < q.dim; ++k)
        for (std::size_t f = 0; f < flat; ++f)
            if (!q.projection(k, f).is_zero()) data->projection[f].emplace_back(k, q.projection(k, f));

    const std::size_t d = q.dim;
    std::vector<QMatrix> left, right;
    for (std::size_t a = 0; a < m->left_algebra()->dim(); ++a) {
        const auto cols = columns_of(m->left_action(a));
        QMatrix act(d, d);
        for (std::size_t k = 0; k < d; ++k) {
            const std::size_t mi = q.kept[k] / dn, ni = q.kept[k] % dn;
            SparseVec<Rational> fv;
            for (const auto& [r, c] : cols[mi]) fv.emplace_back(r * dn + ni, c);
            act.set_column(k, project_flat(*data, fv));
        }
        left.push_back(std::move(act));
    }
    for (std::size_t c = 0; c < n->right_algebra()->dim(); ++c) {
        const auto cols = columns_of(n->right_action(c));
        QMatrix act(d, d);
        for (std::size_t k = 0; k < d; ++k) {
            const std::size_t mi = q.kept[k] / dn, ni = q.kept[k] % dn;
            SparseVec<Rational> fv;
            for (const auto& [r, x] : cols[ni]) fv.emplace_back(mi * dn + r, x);
            act.set_column(k, project_flat(*data, fv));
        }
        right.push_back(std::move(act));
    }
    auto out = std::make_shared<Bimodule>(m->left_algebra(), n->right_algebra(), std::move(left), std::move(right),
                                          m->label() + " o " + n->label());
    out->tensor_ = std::move(data);
    return out;
}

BimodulePtr dual(const BimodulePtr& m) {
    std::vector<QMatrix> left, right;
    for (std::size_t b = 0; b < m->right_algebra()->dim(); ++b) left.push_back(m->right_action(b).transpose());
    for (std::size_t a = 0; a < m->left_algebra()->dim(); ++a) right.push_back(m->left_action(a).transpose());
    return make_bimodule(m->right_algebra(), m->left_algebra(), std::move(left), std::move(right),
                         m->label() + "*");
}

std::vector<QMatrix> hom_space(const BimodulePtr& m, const BimodulePtr& n) {
    if (m->left_algebra() != n->left_algebra() || m->right_algebra() != n->right_algebra())
        throw AlgebraMismatch("hom_space: bimodules over different algebras");
    const std::size_t dm = m->dim(), dn = n->dim();
    if (dm == 0 || dn == 0) return {};

    // Unknown F(w, v), w in N, v in M; weights cut the unknowns to matching blocks.
    const bool weighted = m->weights() && n->weights();
    std::vector<long> index(dn * dm, -1);
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    for (std::size_t w = 0; w < dn; ++w)
        for (std::size_t v = 0; v < dm; ++v)
            if (!weighted || (*n->weights())[w] == (*m->weights())[v]) {
                index[w * dm + v] = static_cast<long>(unknowns.size());
                unknowns.emplace_back(w, v);
            }
    if (unknowns.empty()) return {};

    std::vector<SparseVec<Rational>> eqs;
    // Adds the rows of N_g F - F M_g = 0 for one pair of action matrices.
    auto add_system = [&](const QMatrix& mg, const QMatrix& ng) {
        const auto ncols = columns_of(ng);
        const auto mrows = rows_of(mg);
        std::vector<std::map<std::size_t, Rational>> rows(dn * dm);
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
            const auto [w, v] = unknowns[u];
            // F(w, v) feeds (N_g F)(w', v) with coefficient N_g(w', w).
            for (const auto& [w2, c] : ncols[w]) rows[w2 * dm + v][u] += c;
            // F(w, v) feeds (F M_g)(w, v') with coefficient M_g(v, v').
            for (const auto& [v2, c] : mrows[v]) rows[w * dm + v2][u] -= c;
        }
        for (auto& r : rows) {
            SparseVec<Rational> sv;
            for (auto& [k, c] : r)
                if (!c.is_zero()) sv.emplace_back(k, c);
            if (!sv.empty()) eqs.push_back(std::move(sv));
        }
    };
    const auto& la = m->left_algebra();
    const auto& ra = m->right_algebra();
    const auto lgens = weighted ? la->radical_generators() : la->generators();
    const auto rgens = weighted ? ra->radical_generators() : ra->generators();
    for (std::size_t g : lgens) add_system(m->left_action(g), n->left_action(g));
    for (std::size_t g : rgens) add_system(m->right_action(g), n->right_action(g));

    auto sol = solve_linear<Rational>(unknowns.size(), eqs);
    std::vector<QMatrix> basis;
    basis.reserve(sol.size());
    for (const auto& s : sol) {
        QMatrix f(dn, dm);
        for (std::size_t u = 0; u < unknowns.size(); ++u)
            if (!s[u].is_zero()) f(unknowns[u].first, unknowns[u].second) = s[u];
        basis.push_back(std::move(f));
    }
    return basis;
}

bool is_bimodule_map(const BimodulePtr& m, const BimodulePtr& n, const QMatrix& f) {
    if (f.rows() != n->dim() || f.cols() != m->dim()) return false;
    for (std::size_t g : m->left_algebra()->generators())
        if (!(n->left_action(g) * f == f * m->left_action(g))) return false;
    for (std::size_t g : m->right_algebra()->generators())
        if (!(n->right_action(g) * f == f * m->right_action(g))) return false;
    return true;
}

std::optional<std::vector<Rational>> coordinates(const std::vector<QMatrix>& basis, const QMatrix& f) {
    if (basis.empty()) {
        if (f.is_zero()) return std::vector<Rational>{};
        return std::nullopt;
    }
    std::vector<std::vector<Rational>> cols;
    for (const auto& b : basis) {
        if (b.rows() != f.rows() || b.cols() != f.cols()) throw std::invalid_argument("coordinates: shape mismatch");
        cols.push_back(flatten(b));
    }
    return solve_affine(QMatrix::from_columns(f.rows() * f.cols(), cols), flatten(f));
}

QMatrix combine(const std::vector<QMatrix>& maps, const std::vector<Rational>& c, std::size_t rows, std::size_t cols) {
    QMatrix out(rows, cols);
    for (std::size_t k = 0; k < maps.size(); ++k)
        if (!c[k].is_zero()) out += maps[k] * c[k];
    return out;
}

QMatrix horizontal(const BimodulePtr& mn, const BimodulePtr& mn2, const QMatrix& f, const QMatrix& g) {
    const TensorData& t = tensor_of(mn, "horizontal");
    const TensorData& t2 = tensor_of(mn2, "horizontal");
    const std::size_t dn = t.right->dim(), dn2 = t2.right->dim();
    if (f.cols() != t.left->dim() || f.rows() != t2.left->dim() || g.cols() != dn || g.rows() != dn2)
        throw std::invalid_argument("horizontal: map shapes do not match the factors");
    const auto fc = columns_of(f);
    const auto gc = columns_of(g);
    QMatrix out(mn2->dim(), mn->dim());
    for (std::size_t k = 0; k < t.kept.size(); ++k) {
        const std::size_t mi = t.kept[k] / dn, ni = t.kept[k] % dn;
        SparseVec<Rational> fv;
        for (const auto& [r, x] : fc[mi])
            for (const auto& [s, y] : gc[ni]) fv.emplace_back(r * dn2 + s, x * y);
        out.set_column(k, project_flat(t2, fv));
    }
    return out;
}

QMatrix associator(const BimodulePtr& mn_k, const BimodulePtr& m_nk) {
    const TensorData& t1 = tensor_of(mn_k, "associator");
    const TensorData& t2 = tensor_of(m_nk, "associator");
    const TensorData& tmn = tensor_of(t1.left, "associator");
    const TensorData& tnk = tensor_of(t2.right, "associator");
    if (tmn.left != t2.left || tmn.right != tnk.left || t1.right != tnk.right)
        throw std::invalid_argument("associator: factors are not shared");
    const std::size_t dk = t1.right->dim(), dn = tmn.right->dim(), dnk = t2.right->dim();
    QMatrix out(m_nk->dim(), mn_k->dim());
    for (std::size_t k = 0; k < t1.kept.size(); ++k) {
        const std::size_t u = t1.kept[k] / dk, kk = t1.kept[k] % dk;
        const std::size_t mi = tmn.kept[u] / dn, ni = tmn.kept[u] % dn;
        SparseVec<Rational> fv;
        for (const auto& [v, c] : tnk.projection[ni * dk + kk]) fv.emplace_back(mi * dnk + v, c);
        out.set_column(k, project_flat(t2, fv));
    }
    return out;
}

QMatrix associator_inverse(const BimodulePtr& m_nk, const BimodulePtr& mn_k) {
    const TensorData& t1 = tensor_of(mn_k, "associator_inverse");
    const TensorData& t2 = tensor_of(m_nk, "associator_inverse");
    const TensorData& tmn = tensor_of(t1.left, "associator_inverse");
    const TensorData& tnk = tensor_of(t2.right, "associator_inverse");
    if (tmn.left != t2.left || tmn.right != tnk.left || t1.right != tnk.right)
        throw std::invalid_argument("associator_inverse: factors are not shared");
    const std::size_t dk = t1.right->dim(), dn = tmn.right->dim(), dnk = t2.right->dim();
    QMatrix out(mn_k->dim(), m_nk->dim());
    for (std::size_t k = 0; k < t2.kept.size(); ++k) {
        const std::size_t mi = t2.kept[k] / dnk, v = t2.kept[k] % dnk;
        const std::size_t ni = tnk.kept[v] / dk, kk = tnk.kept[v] % dk;
        SparseVec<Rational> fv;
        for (const auto& [u, c] : tmn.projection[mi * dn + ni]) fv.emplace_back(u * dk + kk, c);
        out.set_column(k, project_flat(t1, fv));
    }
    return out;
}

QMatrix left_unitor(const BimodulePtr& id_m) {
    const TensorData& t = tensor_of(id_m, "left_unitor");
    const BimodulePtr& m = t.right;
    const std::size_t dm = m->dim();
    QMatrix out(dm, id_m->dim());
    for (std::size_t k = 0; k < t.kept.size(); ++k) {
        const std::size_t a = t.kept[k] / dm, mi = t.kept[k] % dm;
        out.set_column(k, m->left_action(a).column(mi));
    }
    return out;
}

QMatrix right_unitor(const BimodulePtr& m_id) {
    const TensorData& t = tensor_of(m_id, "right_unitor");
    const BimodulePtr& m = t.left;
    const std::size_t db = t.right->dim();
    QMatrix out(m->dim(), m_id->dim());
    for (std::size_t k = 0; k < t.kept.size(); ++k) {
        const std::size_t mi = t.kept[k] / db, b = t.kept[k] % db;
        out.set_column(k, m->right_action(b).column(mi));
    }
    return out;
}

QMatrix left_unitor_inverse(const BimodulePtr& id_m) {
    const TensorData& t = tensor_of(id_m, "left_unitor_inverse");
    const AlgebraPtr& a = t.right->left_algebra();
    const std::size_t dm = t.right->dim();
    QMatrix out(id_m->dim(), dm);
    for (std::size_t mi = 0; mi < dm; ++mi) {
        SparseVec<Rational> fv;
        for (std::size_t v = 0; v < a->num_vertices(); ++v) fv.emplace_back(a->idempotent(v) * dm + mi, Rational(1));
        out.set_column(mi, project_flat(t, fv));
    }
    return out;
}

QMatrix right_unitor_inverse(const BimodulePtr& m_id) {
    const TensorData& t = tensor_of(m_id, "right_unitor_inverse");
    const AlgebraPtr& b = t.left->right_algebra();
    const std::size_t dm = t.left->dim(), db = t.right->dim();
    QMatrix out(m_id->dim(), dm);
    for (std::size_t mi = 0; mi < dm; ++mi) {
        SparseVec<Rational> fv;
        for (std::size_t v = 0; v < b->num_vertices(); ++v) fv.emplace_back(mi * db + b->idempotent(v), Rational(1));
        out.set_column(mi, project_flat(t, fv));
    }
    return out;
}

QMatrix dual_projective_iso(const AlgebraPtr& a, const SymmetrizingForm& form, std::size_t i, std::size_t j,
                            const BimodulePtr& p_ji, const BimodulePtr& dual_p_ij) {
    // P(i,j) basis (x1, u) with x1 in Ae_i, u in e_jA; P(j,i) basis (y, x) with y in Ae_j, x in e_iA.
    const auto ai = a->left_projective(i), uj = a->right_projective(j);
    const auto yj = a->left_projective(j), xi = a->right_projective(i);
    QMatrix out(dual_p_ij->dim(), p_ji->dim());
    for (std::size_t p = 0; p < ai.size(); ++p)
        for (std::size_t q = 0; q < uj.size(); ++q)
            for (std::size_t r = 0; r < yj.size(); ++r)
                for (std::size_t s = 0; s < xi.size(); ++s) {
                    const Rational t1 = form.gram(uj[q], yj[r]);
                    if (t1.is_zero()) continue;
                    const Rational t2 = form.gram(xi[s], ai[p]);
                    if (t2.is_zero()) continue;
                    out(p * uj.size() + q, r * xi.size() + s) = t1 * t2;
                }
    return out;
}

QMatrix dual_identity_iso(const AlgebraPtr& a, const SymmetrizingForm& form) {
    QMatrix out(a->dim(), a->dim());
    for (std::size_t x = 0; x < a->dim(); ++x)
        for (std::size_t m = 0; m < a->dim(); ++m) out(x, m) = form.gram(m, x);
    return out;
}

std::vector<CatalogEntry> catalog(const AlgebraPtr& a) {
    std::vector<CatalogEntry> out;
    if (!a->radical_generators().empty()) out.push_back({"Id", identity_bimodule(a), true, 0, 0});
    for (std::size_t i = 0; i < a->num_vertices(); ++i)
        for (std::size_t j = 0; j < a->num_vertices(); ++j) {
            auto p = projective_bimodule(a, i, j);
            out.push_back({p->label(), p, false, i, j});
        }
    return out;
}

namespace {

// Projection onto P / (rad A . P + P . rad A) and its section.
Cokernel<Rational> top_of(const BimodulePtr& p) {
    std::vector<std::vector<Rational>> cols;
    for (std::size_t g : p->left_algebra()->radical_generators())
        for (std::size_t c = 0; c < p->dim(); ++c) cols.push_back(p->left_action(g).column(c));
    for (std::size_t g : p->right_algebra()->radical_generators())
        for (std::size_t c = 0; c < p->dim(); ++c) cols.push_back(p->right_action(g).column(c));
    if (cols.empty()) {
        Cokernel<Rational> ck;
        ck.dim = p->dim();
        ck.projection = QMatrix::identity(p->dim());
        ck.section = QMatrix::identity(p->dim());
        for (std::size_t k = 0; k < p->dim(); ++k) ck.kept.push_back(k);
        return ck;
    }
    return cokernel_projection(QMatrix::from_columns(p->dim(), cols), std::optional<Rational>(Rational(1)));
}

}  // namespace

std::vector<std::size_t> decompose(const BimodulePtr& m, const std::vector<CatalogEntry>& cat) {
    std::vector<std::size_t> mult(cat.size(), 0);
    long covered = 0;
    for (std::size_t c = 0; c < cat.size(); ++c) {
        const BimodulePtr& p = cat[c].module;
        const auto to_m = hom_space(p, m);
        if (to_m.empty()) continue;
        const auto from_m = hom_space(m, p);
        if (from_m.empty()) continue;
        const Cokernel<Rational> top = top_of(p);
        if (top.dim == 0) continue;
        const Rational scale = Rational(1) / Rational(static_cast<long>(top.dim));
        QMatrix pairing(from_m.size(), to_m.size());
        std::vector<QMatrix> left, right;
        for (const auto& g : from_m) left.push_back(top.projection * g);
        for (const auto& f : to_m) right.push_back(f * top.section);
        for (std::size_t l = 0; l < left.size(); ++l)
            for (std::size_t k = 0; k < right.size(); ++k) {
                const QMatrix t = left[l] * right[k];
                Rational tr;
                for (std::size_t d = 0; d < t.rows(); ++d) tr += t(d, d);
                pairing(l, k) = tr * scale;
            }
        mult[c] = rank(pairing);
        covered += static_cast<long>(mult[c] * p->dim());
    }
    const long residual = static_cast<long>(m->dim()) - covered;
    if (residual != 0)
        throw DecompositionRemainder("undecomposed remainder of dimension " + std::to_string(residual) + " in " +
                                         m->label(),
                                     residual);
    return mult;
}

AdjunctionData adjunction_data(const AlgebraPtr& a, const SymmetrizingForm& form, std::size_t i, std::size_t j,
                               bool misalign_unit) {
    AdjunctionData d;
    d.f = projective_bimodule(a, i, j);
    d.g = projective_bimodule(a, j, i);
    d.fg = tensor_over(d.f, d.g);
    d.gf = tensor_over(d.g, d.f);
    const BimodulePtr id = identity_bimodule(a);

    // Counit on representatives (x1 (x) u) (x) (y (x) x2) -> tau(u y) x1 x2.
    {
        const auto ai = a->left_projective(i), uj = a->right_projective(j);
        const auto yj = a->left_projective(j), xi = a->right_projective(i);
        const TensorData& t = *d.fg->tensor();
        const std::size_t dg = d.g->dim();
        d.counit = QMatrix(a->dim(), d.fg->dim());
        for (std::size_t k = 0; k < t.kept.size(); ++k) {
            const std::size_t pf = t.kept[k] / dg, pg = t.kept[k] % dg;
            const std::size_t x1 = ai[pf / uj.size()], u = uj[pf % uj.size()];
            const std::size_t y = yj[pg / xi.size()], x2 = xi[pg % xi.size()];
            const Rational s = form.gram(u, y);
            if (s.is_zero()) continue;
            for (const auto& [r, c] : a->product(x1, x2)) d.counit(r, k) += s * c;
        }
    }
    // Unit: 1 -> sum_k a_k (x) e_i (x) u_k with a_k a basis of Ae_j and u_k its dual basis.
    {
        const auto aj = a->left_projective(j);        // Ae_j, the left factor of G
        const auto xi = a->right_projective(i);       // e_iA, the right factor of G
        const auto ai = a->left_projective(i);        // Ae_i, the left factor of F
        const auto uj = a->right_projective(j);       // e_jA, the right factor of F
        const auto duals = form.dual_basis(*a, j);    // u_k in e_jA, coordinates in A
        const std::size_t ei = a->idempotent(i);
        const std::size_t pos_ei_right = static_cast<std::size_t>(std::find(xi.begin(), xi.end(), ei) - xi.begin());
        const std::size_t pos_ei_left = static_cast<std::size_t>(std::find(ai.begin(), ai.end(), ei) - ai.begin());
        const std::size_t df = d.f->dim();
        SparseVec<Rational> flat;
        for (std::size_t k = 0; k < aj.size(); ++k) {
            const auto& u = duals[misalign_unit ? (k + 1) % aj.size() : k];
            const std::size_t gidx = k * xi.size() + pos_ei_right;
            for (std::size_t q = 0; q < uj.size(); ++q) {
                const Rational& c = u[uj[q]];
                if (c.is_zero()) continue;
                flat.emplace_back(gidx * df + pos_ei_left * uj.size() + q, c);
            }
        }
        const std::vector<Rational> eta1 = project_flat(*d.gf->tensor(), flat);
        d.unit = QMatrix(d.gf->dim(), a->dim());
        for (std::size_t c = 0; c < a->dim(); ++c) d.unit.set_column(c, d.gf->left_action(c).apply(eta1));
    }
    d.counit_is_map = is_bimodule_map(d.fg, id, d.counit);
    d.unit_is_map = is_bimodule_map(id, d.gf, d.unit);

    const QMatrix idf = QMatrix::identity(d.f->dim()), idg = QMatrix::identity(d.g->dim());
    {
        auto f_id = tensor_over(d.f, id);
        auto f_gf = tensor_over(d.f, d.gf);
        auto fg_f = tensor_over(d.fg, d.f);
        auto id_f = tensor_over(id, d.f);
        QMatrix z = left_unitor(id_f) * horizontal(fg_f, id_f, d.counit, idf) * associator_inverse(f_gf, fg_f) *
                    horizontal(f_id, f_gf, idf, d.unit) * right_unitor_inverse(f_id);
        d.zigzag_f = z == idf;
    }
    {
        auto id_g = tensor_over(id, d.g);
        auto gf_g = tensor_over(d.gf, d.g);
        auto g_fg = tensor_over(d.g, d.fg);
        auto g_id = tensor_over(d.g, id);
        QMatrix z = right_unitor(g_id) * horizontal(g_fg, g_id, idg, d.counit) * associator(gf_g, g_fg) *
                    horizontal(id_g, gf_g, d.unit, idg) * left_unitor_inverse(id_g);
        d.zigzag_g = z == idg;
    }
    return d;
}

}  // namespace fiatkit
