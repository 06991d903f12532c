#include "fiatkit/quiver.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fiatkit {
namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& what) { throw std::invalid_argument("parse error: " + what); }

Rational parse_coeff(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    parse_error("relation coefficient must be a string \"p/q\" or an integer");
}

struct Path {
    std::vector<std::size_t> arrows;
    std::size_t src = 0;
    std::size_t tgt = 0;
};

}  // namespace

QuiverSpec quiver_spec_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        parse_error(e.what());
    }
    if (!j.is_object()) parse_error("algebra spec must be a JSON object");
    QuiverSpec s;
    try {
        s.name = j.value("name", std::string{});
        for (const auto& v : j.at("vertices")) s.vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        if (j.contains("arrows"))
            for (const auto& a : j.at("arrows")) {
                auto str = [&](const char* key) {
                    const json& x = a.at(key);
                    return x.is_string() ? x.get<std::string>() : x.dump();
                };
                s.arrows.push_back({a.at("name").get<std::string>(), str("src"), str("tgt")});
            }
        if (j.contains("relations"))
            for (const auto& r : j.at("relations")) {
                Relation rel;
                for (const auto& t : r) rel.push_back({parse_coeff(t.at("coeff")), t.at("path").get<std::vector<std::string>>()});
                s.relations.push_back(std::move(rel));
            }
        s.nilpotency_bound = j.at("nilpotency_bound").get<int>();
    } catch (const json::exception& e) {
        parse_error(e.what());
    }
    return s;
}

std::string quiver_spec_to_json(const QuiverSpec& spec) {
    json j;
    if (!spec.name.empty()) j["name"] = spec.name;
    j["vertices"] = spec.vertices;
    j["arrows"] = json::array();
    for (const auto& a : spec.arrows) j["arrows"].push_back({{"name", a.name}, {"src", a.src}, {"tgt", a.tgt}});
    j["relations"] = json::array();
    for (const auto& r : spec.relations) {
        json rel = json::array();
        for (const auto& t : r) rel.push_back({{"coeff", t.coeff.to_string()}, {"path", t.path}});
        j["relations"].push_back(rel);
    }
    j["nilpotency_bound"] = spec.nilpotency_bound;
    return j.dump(2);
}

QuiverSpec dual_numbers_spec() {
    return {"dual_numbers", {"1"}, {{"x", "1", "1"}}, {{{Rational(1), {"x", "x"}}}}, 2};
}

QuiverSpec zigzag_a2_spec() {
    QuiverSpec s{"zigzag_a2", {"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}}, {}, 3};
    s.relations.push_back({{Rational(1), {"a", "b", "a"}}});
    s.relations.push_back({{Rational(1), {"b", "a", "b"}}});
    return s;
}

QuiverSpec a2_path_spec() { return {"a2_path", {"1", "2"}, {{"a", "1", "2"}}, {}, 2}; }

QuiverSpec ground_field_spec() { return {"ground_field", {"1"}, {}, {}, 1}; }

// ---------------------------------------------------------------------------

std::size_t FDAlgebra::vertex_index(std::string_view name) const {
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (vertices_[v] == name) return v;
    throw std::invalid_argument("unknown vertex '" + std::string(name) + "'");
}

std::vector<std::string> FDAlgebra::basis_labels() const {
    std::vector<std::string> out;
    for (const auto& b : basis_) out.push_back(b.label);
    return out;
}

std::optional<std::size_t> FDAlgebra::find_label(std::string_view label) const {
    for (std::size_t k = 0; k < basis_.size(); ++k)
        if (basis_[k].label == label) return k;
    return std::nullopt;
}

std::vector<Rational> FDAlgebra::multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    std::vector<Rational> r(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (b[j].is_zero()) continue;
            const Rational s = a[i] * b[j];
            for (const auto& [k, c] : product(i, j)) r[k] += s * c;
        }
    }
    return r;
}

std::vector<Rational> FDAlgebra::unit() const {
    std::vector<Rational> u(dim());
    for (std::size_t e : idempotents_) u[e] = Rational(1);
    return u;
}

std::vector<Rational> FDAlgebra::basis_vector(std::size_t k) const {
    std::vector<Rational> v(dim());
    v[k] = Rational(1);
    return v;
}

std::vector<std::size_t> FDAlgebra::block(std::size_t i, std::size_t j) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < dim(); ++k)
        if (basis_[k].src == i && basis_[k].tgt == j) out.push_back(k);
    return out;
}

std::vector<std::size_t> FDAlgebra::left_projective(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < dim(); ++k)
        if (basis_[k].tgt == i) out.push_back(k);
    return out;
}

std::vector<std::size_t> FDAlgebra::right_projective(std::size_t j) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < dim(); ++k)
        if (basis_[k].src == j) out.push_back(k);
    return out;
}

std::vector<std::size_t> FDAlgebra::generators() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < dim(); ++k)
        if (basis_[k].length <= 1) out.push_back(k);
    return out;
}

std::vector<std::size_t> FDAlgebra::radical_generators() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < dim(); ++k)
        if (basis_[k].length == 1) out.push_back(k);
    return out;
}

AlgebraPtr build_algebra(const QuiverSpec& spec) {
    if (spec.vertices.empty()) throw std::invalid_argument("parse error: quiver has no vertices");
    if (spec.nilpotency_bound < 1) throw std::invalid_argument("parse error: nilpotency_bound must be positive");
    const std::size_t bound = static_cast<std::size_t>(spec.nilpotency_bound);

    auto alg = std::make_shared<FDAlgebra>();
    alg->name_ = spec.name;
    alg->vertices_ = spec.vertices;
    std::map<std::string, std::size_t> vindex, aindex;
    for (std::size_t v = 0; v < spec.vertices.size(); ++v)
        if (!vindex.emplace(spec.vertices[v], v).second)
            throw std::invalid_argument("parse error: duplicate vertex " + spec.vertices[v]);
    std::vector<std::pair<std::size_t, std::size_t>> ends;
    for (std::size_t a = 0; a < spec.arrows.size(); ++a) {
        const Arrow& ar = spec.arrows[a];
        if (!vindex.count(ar.src) || !vindex.count(ar.tgt))
            throw std::invalid_argument("parse error: arrow " + ar.name + " has an unknown endpoint");
        if (!aindex.emplace(ar.name, a).second) throw std::invalid_argument("parse error: duplicate arrow " + ar.name);
        ends.emplace_back(vindex[ar.src], vindex[ar.tgt]);
    }

    // All paths of length <= bound, ordered by length then by arrow order.
    std::vector<Path> paths;
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> path_index;  // keyed by (source, arrows)
    for (std::size_t v = 0; v < spec.vertices.size(); ++v) paths.push_back({{}, v, v});
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= bound; ++len) {
        const std::size_t level_end = paths.size();
        for (std::size_t p = level_begin; p < level_end; ++p)
            for (std::size_t a = 0; a < ends.size(); ++a) {
                if (ends[a].first != paths[p].tgt) continue;
                Path q = paths[p];
                q.arrows.push_back(a);
                q.tgt = ends[a].second;
                paths.push_back(std::move(q));
            }
        level_begin = level_end;
    }
    for (std::size_t p = 0; p < paths.size(); ++p) path_index.emplace(std::make_pair(paths[p].src, paths[p].arrows), p);
    const std::size_t npaths = paths.size();
    auto column = [&](std::size_t p) { return npaths - 1 - p; };

    // Resolve relations to arrow sequences and check homogeneity.
    struct ResolvedTerm {
        Rational coeff;
        std::vector<std::size_t> arrows;
    };
    std::vector<std::vector<ResolvedTerm>> rels;
    for (const auto& rel : spec.relations) {
        std::vector<ResolvedTerm> rr;
        std::optional<std::pair<std::size_t, std::size_t>> rel_ends;
        for (const auto& t : rel) {
            if (t.path.size() < 2) throw std::invalid_argument("parse error: relation paths must have length >= 2");
            if (t.path.size() > bound) throw std::invalid_argument("parse error: relation longer than nilpotency_bound");
            ResolvedTerm rt{t.coeff, {}};
            for (const auto& name : t.path) {
                auto it = aindex.find(name);
                if (it == aindex.end()) throw std::invalid_argument("parse error: unknown arrow " + name);
                if (!rt.arrows.empty() && ends[rt.arrows.back()].second != ends[it->second].first)
                    throw std::invalid_argument("parse error: relation path is not composable");
                rt.arrows.push_back(it->second);
            }
            std::pair<std::size_t, std::size_t> e{ends[rt.arrows.front()].first, ends[rt.arrows.back()].second};
            if (rel_ends && *rel_ends != e)
                throw std::invalid_argument("parse error: relation terms have different endpoints");
            rel_ends = e;
            rr.push_back(std::move(rt));
        }
        if (!rr.empty()) rels.push_back(std::move(rr));
    }

    // Ideal spanned by p r q inside the path space (longer paths vanish).
    std::vector<SparseVec<Rational>> ideal;
    for (const auto& rel : rels) {
        const std::size_t s = ends[rel.front().arrows.front()].first;
        const std::size_t t = ends[rel.front().arrows.back()].second;
        for (const auto& p : paths) {
            if (p.tgt != s) continue;
            for (const auto& q : paths) {
                if (q.src != t) continue;
                SparseVec<Rational> row;
                for (const auto& term : rel) {
                    std::vector<std::size_t> w = p.arrows;
                    w.insert(w.end(), term.arrows.begin(), term.arrows.end());
                    w.insert(w.end(), q.arrows.begin(), q.arrows.end());
                    if (w.size() > bound) continue;
                    row.emplace_back(column(path_index.at({p.src, w})), term.coeff);
                }
                if (!row.empty()) ideal.push_back(std::move(row));
            }
        }
    }
    Cokernel<Rational> quot = quotient_by_relations(npaths, ideal, Rational(1));

    for (std::size_t p = 0; p < npaths; ++p) {
        if (paths[p].arrows.size() != bound) continue;
        for (std::size_t k = 0; k < quot.dim; ++k)
            if (!quot.projection(k, column(p)).is_zero())
                throw std::domain_error("nilpotency bound violated: a path of length " + std::to_string(bound) +
                                        " is nonzero modulo the relations");
    }

    // Basis = surviving paths in path order; map quotient coordinates to it.
    std::vector<std::size_t> kept_paths;
    for (std::size_t c : quot.kept) kept_paths.push_back(npaths - 1 - c);
    std::sort(kept_paths.begin(), kept_paths.end());
    std::map<std::size_t, std::size_t> basis_of_quot;  // quotient row -> basis index
    for (std::size_t k = 0; k < quot.dim; ++k) {
        const std::size_t p = npaths - 1 - quot.kept[k];
        basis_of_quot[k] = static_cast<std::size_t>(std::lower_bound(kept_paths.begin(), kept_paths.end(), p) -
                                                    kept_paths.begin());
    }
    auto reduce_path = [&](std::size_t p) {
        SparseVec<Rational> v;
        for (std::size_t k = 0; k < quot.dim; ++k) {
            const Rational& c = quot.projection(k, column(p));
            if (!c.is_zero()) v.emplace_back(basis_of_quot[k], c);
        }
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        return v;
    };

    for (std::size_t p : kept_paths) {
        FDAlgebra::BasisElement b;
        b.src = paths[p].src;
        b.tgt = paths[p].tgt;
        b.length = paths[p].arrows.size();
        if (paths[p].arrows.empty()) {
            b.label = "e" + spec.vertices[paths[p].src];
        } else {
            for (std::size_t a : paths[p].arrows) b.label += spec.arrows[a].name;
        }
        alg->radical_length_ = std::max(alg->radical_length_, b.length);
        alg->basis_.push_back(std::move(b));
    }
    for (std::size_t v = 0; v < spec.vertices.size(); ++v) alg->idempotents_.push_back(v);

    const std::size_t d = kept_paths.size();
    alg->table_.assign(d * d, {});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Path& x = paths[kept_paths[i]];
            const Path& y = paths[kept_paths[j]];
            if (x.tgt != y.src) continue;
            std::vector<std::size_t> w = x.arrows;
            w.insert(w.end(), y.arrows.begin(), y.arrows.end());
            if (w.size() >= bound) continue;
            alg->table_[i * d + j] = reduce_path(path_index.at({x.src, w}));
        }

    alg->left_.assign(d, QMatrix(d, d));
    alg->right_.assign(d, QMatrix(d, d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            for (const auto& [k, c] : alg->table_[i * d + j]) alg->left_[i](k, j) = c;
            for (const auto& [k, c] : alg->table_[j * d + i]) alg->right_[i](k, j) = c;
        }
    return alg;
}

AlgebraPtr ground_field() {
    static const AlgebraPtr k = build_algebra(ground_field_spec());
    return k;
}

std::vector<std::vector<long>> cartan_matrix(const FDAlgebra& a) {
    const std::size_t n = a.num_vertices();
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (std::size_t k = 0; k < a.dim(); ++k) ++c[a.basis(k).src][a.basis(k).tgt];
    return c;
}

// ---------------------------------------------------------------------------

Rational SymmetrizingForm::operator()(const std::vector<Rational>& x) const {
    Rational s;
    for (std::size_t k = 0; k < x.size(); ++k)
        if (!x[k].is_zero() && !values[k].is_zero()) s += x[k] * values[k];
    return s;
}

QMatrix SymmetrizingForm::phi(const FDAlgebra& a, std::size_t e) const {
    const auto left = a.left_projective(e);
    const auto right = a.right_projective(e);
    QMatrix m(left.size(), right.size());
    for (std::size_t l = 0; l < left.size(); ++l)
        for (std::size_t r = 0; r < right.size(); ++r) m(l, r) = gram(right[r], left[l]);
    return m;
}

std::vector<std::vector<Rational>> SymmetrizingForm::dual_basis(const FDAlgebra& a, std::size_t e) const {
    const auto right = a.right_projective(e);
    // phi * U = I: column l of U holds the eA-coordinates of u_l.
    const QMatrix u = inverse(phi(a, e));
    std::vector<std::vector<Rational>> out;
    for (std::size_t l = 0; l < u.cols(); ++l) {
        std::vector<Rational> v(a.dim());
        for (std::size_t r = 0; r < right.size(); ++r) v[right[r]] = u(r, l);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<SymmetrizingForm> symmetrizing_form(const FDAlgebra& a) {
    const std::size_t d = a.dim();
    std::vector<SparseVec<Rational>> eqs;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            std::map<std::size_t, Rational> row;
            for (const auto& [k, c] : a.product(i, j)) row[k] += c;
            for (const auto& [k, c] : a.product(j, i)) row[k] -= c;
            SparseVec<Rational> r;
            for (auto& [k, c] : row)
                if (!c.is_zero()) r.emplace_back(k, c);
            if (!r.empty()) eqs.push_back(std::move(r));
        }
    std::vector<std::vector<Rational>> sol = solve_linear<Rational>(d, eqs);
    if (sol.empty()) return std::nullopt;

    auto gram_of = [&](const std::vector<Rational>& tau) {
        QMatrix g(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (const auto& [k, c] : a.product(i, j))
                    if (!tau[k].is_zero()) g(i, j) += c * tau[k];
        return g;
    };
    auto try_candidate = [&](const std::vector<Rational>& tau) -> std::optional<SymmetrizingForm> {
        QMatrix g = gram_of(tau);
        if (!is_invertible(g)) return std::nullopt;
        return SymmetrizingForm{tau, std::move(g)};
    };

    // Single solution vectors first, those reaching the socle (longest paths)
    // before the others; then the plain sum; then small integer combinations.
    auto depth = [&](const std::vector<Rational>& v) {
        std::size_t m = 0;
        for (std::size_t k = 0; k < d; ++k)
            if (!v[k].is_zero()) m = std::max(m, a.basis(k).length);
        return m;
    };
    std::vector<std::size_t> order(sol.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return depth(sol[x]) > depth(sol[y]); });
    for (std::size_t i : order)
        if (auto f = try_candidate(sol[i])) return f;

    const std::size_t s = sol.size();
    std::vector<int> coeff(s, 1);
    constexpr std::size_t max_candidates = 4096;
    for (std::size_t count = 0; count < max_candidates; ++count) {
        std::vector<Rational> tau(d);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t k = 0; k < d; ++k)
                if (!sol[i][k].is_zero()) tau[k] += Rational(coeff[i]) * sol[i][k];
        if (auto f = try_candidate(tau)) return f;
        std::size_t pos = 0;
        while (pos < s && coeff[pos] == 5) coeff[pos++] = 1;
        if (pos == s) break;
        ++coeff[pos];
    }
    return std::nullopt;
}

}  // namespace fiatkit
