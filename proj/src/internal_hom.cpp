#include "fiatkit/internal_hom.hpp"

#include "fiatkit/parallel.hpp"

#include <algorithm>

namespace fiatkit {

DualityData duality_data(const AlgebraPtr& a, const SymmetrizingForm& form, const ModulePtr& n) {
    DualityData d{a, n, {}};
    const std::size_t dn = n->dim();
    if (dn == 0) return d;
    const auto h = hom_space(n, regular_left_module(a));
    // Column u holds the functional tau o h_u on the basis of N.
    QMatrix t(dn, h.size());
    for (std::size_t u = 0; u < h.size(); ++u)
        for (std::size_t j = 0; j < dn; ++j) {
            Rational s;
            for (std::size_t b = 0; b < a->dim(); ++b)
                if (!h[u](b, j).is_zero() && !form.values[b].is_zero()) s += form.values[b] * h[u](b, j);
            t(j, u) = s;
        }
    for (std::size_t k = 0; k < dn; ++k) {
        std::vector<Rational> target(dn);
        target[k] = Rational(1);
        auto c = solve_affine(t, target);
        if (!c) throw std::domain_error("Hom_A(N, A) does not realize N* through the form");
        d.psi.push_back(combine(h, *c, a->dim(), dn));
    }
    return d;
}

QMatrix representability_map(const DualityData& d, const BimodulePtr& f, const BimodulePtr& fn, const QMatrix& alpha) {
    const auto& t = fn->tensor();
    if (!t || t->left != f || t->right != d.n) throw std::invalid_argument("representability_map: expected F o N");
    const std::size_t dn = d.n->dim(), dm = alpha.cols(), df = f->dim();
    QMatrix out(df, dm * dn);
    for (std::size_t k = 0; k < dn; ++k) {
        // (1 o psi_k): F o N -> F, f (x) n -> f psi_k(n).
        QMatrix ev(df, fn->dim());
        for (std::size_t c = 0; c < t->kept.size(); ++c) {
            const std::size_t fi = t->kept[c] / dn, ni = t->kept[c] % dn;
            std::vector<Rational> col(df);
            for (std::size_t b = 0; b < d.algebra->dim(); ++b) {
                const Rational& w = d.psi[k](b, ni);
                if (w.is_zero()) continue;
                const QMatrix& r = f->right_action(b);
                for (std::size_t x = 0; x < df; ++x)
                    if (!r(x, fi).is_zero()) col[x] += w * r(x, fi);
            }
            ev.set_column(c, col);
        }
        const QMatrix img = ev * alpha;
        for (std::size_t m = 0; m < dm; ++m) out.set_column(m * dn + k, img.column(m));
    }
    return out;
}

InternalHom internal_hom(const AlgebraPtr& a, const SymmetrizingForm& form, const ModulePtr& n, const ModulePtr& m) {
    const DualityData d = duality_data(a, form, n);
    InternalHom ih;
    ih.carrier = tensor_over(m, dual(n));
    const auto cat = catalog(a);
    ih.certificates.resize(cat.size());
    parallel_for(cat.size(), [&](std::size_t idx) {
        const auto& f = cat[idx].module;
        auto fn = tensor_over(f, n);
        const auto lhs = hom_space(m, fn);
        const auto rhs = hom_space(ih.carrier, f);
        HomCertificate c{cat[idx].label, lhs.size(), rhs.size(), QMatrix(rhs.size(), lhs.size()), false};
        bool inside = true;
        for (std::size_t u = 0; u < lhs.size() && inside; ++u) {
            auto x = coordinates(rhs, representability_map(d, f, fn, lhs[u]));
            if (!x) inside = false;
            else c.matrix.set_column(u, *x);
        }
        c.isomorphism = inside && is_invertible(c.matrix);
        ih.certificates[idx] = std::move(c);
    });
    for (const auto& c : ih.certificates)
        if (!c.isomorphism) throw RepresentabilityFailure(c.label);
    return ih;
}

std::optional<QMatrix> find_coalgebra_iso(const CoalgebraObject& c, const CoalgebraObject& d) {
    if (c.carrier->dim() != d.carrier->dim()) return std::nullopt;
    const auto h = hom_space(c.carrier, d.carrier);
    const std::size_t dim = c.carrier->dim();
    if (dim == 0) return QMatrix(0, 0);
    std::vector<QMatrix> counits;
    for (const auto& x : h) counits.push_back(d.counit * x);
    auto base = coordinates(counits, c.counit);
    if (!base) return std::nullopt;
    const auto kernel = linear_relations(counits);
    static const int grid[] = {0, 1, -1, 2, -2};
    std::size_t tries = 1;
    for (std::size_t i = 0; i < kernel.size() && tries < 4096; ++i) tries *= 5;
    tries = std::min<std::size_t>(tries, 4096);
    for (std::size_t t = 0; t < tries; ++t) {
        std::vector<Rational> coeff = *base;
        std::size_t rest = t;
        for (const auto& kv : kernel) {
            const int g = grid[rest % 5];
            rest /= 5;
            if (g == 0) continue;
            for (std::size_t u = 0; u < coeff.size(); ++u) coeff[u] += kv[u] * Rational(g);
        }
        const QMatrix phi = combine(h, coeff, dim, dim);
        if (!is_invertible(phi)) continue;
        if (d.comult * phi == horizontal(c.square, d.square, phi, phi) * c.comult) return phi;
    }
    return std::nullopt;
}

InternalEnd coalgebra_from_internal_end(const AlgebraPtr& a, const SymmetrizingForm& form, const ModulePtr& n,
                                        std::optional<std::size_t> canonical_vertex) {
    InternalEnd end;
    end.algebra = a;
    end.duality = duality_data(a, form, n);
    auto c = tensor_over(n, dual(n));
    auto sq = tensor_over(c, c);
    end.cn = tensor_over(c, n);
    const QMatrix one = QMatrix::identity(c->dim());

    // coev is the preimage of id_{A^N}.
    const auto hs = hom_space(n, end.cn);
    std::vector<QMatrix> images;
    for (const auto& x : hs) images.push_back(representability_map(end.duality, c, end.cn, x));
    auto coeff = coordinates(images, one);
    if (!coeff) throw std::domain_error("identity of A^N has no preimage under the representability map");
    end.coev = combine(hs, *coeff, end.cn->dim(), n->dim());

    auto cc_n = tensor_over(sq, n);
    auto c_cn = tensor_over(c, end.cn);
    const QMatrix twice =
        associator_inverse(c_cn, cc_n) * horizontal(end.cn, c_cn, one, end.coev) * end.coev;
    auto id = identity_bimodule(a);
    auto id_n = tensor_over(id, n);
    end.coalgebra = {c, sq, representability_map(end.duality, sq, cc_n, twice),
                     representability_map(end.duality, id, id_n, left_unitor_inverse(id_n))};
    end.axioms = check_coalgebra_axioms(end.coalgebra);
    if (canonical_vertex) end.canonical_iso = find_coalgebra_iso(end.coalgebra, canonical_coalgebra(a, *canonical_vertex));
    return end;
}

Comodule regular_comodule(const InternalEnd& end) {
    return {"A^N", end.coalgebra.carrier, end.coalgebra.square, end.coalgebra.comult};
}

Comodule free_comodule(const InternalEnd& end, const BimodulePtr& f, const std::string& label) {
    const auto& c = end.coalgebra.carrier;
    auto fc = tensor_over(f, c);
    auto f_cc = tensor_over(f, end.coalgebra.square);
    auto fc_c = tensor_over(fc, c);
    QMatrix coaction = associator_inverse(f_cc, fc_c) *
                       horizontal(fc, f_cc, QMatrix::identity(f->dim()), end.coalgebra.comult);
    return {label + " o A^N", fc, fc_c, std::move(coaction)};
}

std::vector<QMatrix> comodule_homs(const InternalEnd& end, const Comodule& x, const Comodule& y) {
    const auto h = hom_space(x.x, y.x);
    const QMatrix one = QMatrix::identity(end.coalgebra.carrier->dim());
    std::vector<QMatrix> defects;
    for (const auto& f : h) defects.push_back(y.coaction * f - horizontal(x.xc, y.xc, f, one) * x.coaction);
    std::vector<QMatrix> out;
    for (const auto& r : linear_relations(defects)) out.push_back(combine(h, r, y.x->dim(), x.x->dim()));
    return out;
}

bool ComoduleHomReport::passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const ComoduleHomEntry& e) {
        return e.comodule_side == e.plain_side && e.maps_inverse;
    });
}

bool DimensionReport::passed() const {
    return std::all_of(pairs.begin(), pairs.end(), [](const DimensionPair& p) { return p.lhs == p.rhs; });
}

bool AdjointShiftReport::passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const AdjointShiftEntry& e) {
        return e.dims[0] == e.dims[1] && e.dims[1] == e.dims[2] && e.dims[2] == e.dims[3];
    });
}

namespace {

std::vector<Comodule> test_comodules(const InternalEnd& end, const std::vector<CatalogEntry>& cat) {
    std::vector<Comodule> xs(cat.size() + 1);
    xs[0] = regular_comodule(end);
    parallel_for(cat.size(), [&](std::size_t i) { xs[i + 1] = free_comodule(end, cat[i].module, cat[i].label); });
    return xs;
}

}  // namespace

ComoduleHomReport lemma5_check(const InternalEnd& end, const BimodulePtr& f, const std::string& f_label) {
    const auto& c = end.coalgebra.carrier;
    const QMatrix one_c = QMatrix::identity(c->dim()), one_f = QMatrix::identity(f->dim());
    const Comodule target = free_comodule(end, f, f_label);
    auto id = identity_bimodule(end.algebra);
    auto f_id = tensor_over(f, id);
    // F o A^N -> F o Id -> F
    const QMatrix collapse = right_unitor(f_id) * horizontal(target.x, f_id, one_f, end.coalgebra.counit);
    const auto xs = test_comodules(end, catalog(end.algebra));
    ComoduleHomReport rep;
    rep.entries.resize(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) {
        const Comodule& x = xs[i];
        const auto comod = comodule_homs(end, x, target);
        const auto plain = hom_space(x.x, f);
        ComoduleHomEntry e{x.label, f_label, comod.size(), plain.size(), true};
        auto lift = [&](const QMatrix& h) { return horizontal(x.xc, target.x, h, one_c) * x.coaction; };
        for (const auto& h : plain) {
            const QMatrix g = lift(h);
            if (!(collapse * g == h) || !coordinates(comod, g)) e.maps_inverse = false;
        }
        for (const auto& g : comod)
            if (!(lift(collapse * g) == g)) e.maps_inverse = false;
        rep.entries[i] = std::move(e);
    });
    return rep;
}

DimensionReport theta_equivalence_check(const InternalEnd& end) {
    const auto cat = catalog(end.algebra);
    const auto xs = test_comodules(end, cat);
    const std::size_t n = cat.size();
    DimensionReport rep;
    rep.pairs.resize(n * n);
    parallel_for(n * n, [&](std::size_t idx) {
        const std::size_t f = idx / n, g = idx % n;
        const auto& nmod = end.duality.n;
        rep.pairs[idx] = {cat[f].label, cat[g].label, comodule_homs(end, xs[f + 1], xs[g + 1]).size(),
                          hom_space(tensor_over(cat[f].module, nmod), tensor_over(cat[g].module, nmod)).size()};
    });
    return rep;
}

DimensionReport injectivity_check(const InternalEnd& end) {
    const auto cat = catalog(end.algebra);
    const auto xs = test_comodules(end, cat);
    const Comodule reg = regular_comodule(end);
    auto id = identity_bimodule(end.algebra);
    DimensionReport rep;
    rep.pairs.resize(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) {
        rep.pairs[i] = {xs[i].label, "A^N", comodule_homs(end, xs[i], reg).size(), hom_space(xs[i].x, id).size()};
    });
    return rep;
}

AdjointShiftReport adjoint_shift_check(const AlgebraPtr& a, const ModulePtr& n, const ModulePtr& m) {
    const auto cat = catalog(a);
    auto x = tensor_over(m, dual(n));
    const std::size_t k = cat.size();
    auto star = [&](std::size_t f) {
        for (std::size_t g = 0; g < k; ++g)
            if (cat[g].is_identity == cat[f].is_identity && cat[g].i == cat[f].j && cat[g].j == cat[f].i) return g;
        throw std::logic_error("catalog is not closed under duals");
    };
    AdjointShiftReport rep;
    rep.entries.resize(k * k);
    parallel_for(k * k, [&](std::size_t idx) {
        const auto& f = cat[idx / k].module;
        const auto& g = cat[idx % k].module;
        const auto& fs = cat[star(idx / k)].module;
        auto fs_g = tensor_over(fs, g);
        AdjointShiftEntry e{cat[idx / k].label, cat[idx % k].label, {}};
        e.dims[0] = hom_space(tensor_over(f, x), g).size();
        e.dims[1] = hom_space(x, fs_g).size();
        e.dims[2] = hom_space(m, tensor_over(fs_g, n)).size();
        e.dims[3] = hom_space(tensor_over(f, m), tensor_over(g, n)).size();
        rep.entries[idx] = e;
    });
    return rep;
}

}  // namespace fiatkit
