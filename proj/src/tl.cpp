#include "fiatkit/tl.hpp"

#include "fiatkit/parallel.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace fiatkit {

namespace {

// Position p on the cyclic boundary walk -> point index.
std::size_t point_at(std::size_t bottom, std::size_t top, std::size_t p) {
    return p < bottom ? p : bottom + (top - 1 - (p - bottom));
}

std::size_t position_of(std::size_t bottom, std::size_t top, std::size_t q) {
    return q < bottom ? q : bottom + (top - 1 - (q - bottom));
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

PlanarMatching PlanarMatching::from_nesting(const std::string& s, std::size_t bottom, std::size_t top) {
    if (s.size() != bottom + top) throw std::invalid_argument("nesting string length does not match the boundary");
    PlanarMatching d;
    d.bottom = bottom;
    d.top = top;
    d.partner.assign(s.size(), 0);
    std::vector<std::size_t> open;
    for (std::size_t p = 0; p < s.size(); ++p) {
        if (s[p] == '(') {
            open.push_back(p);
        } else if (s[p] == ')') {
            if (open.empty()) throw std::invalid_argument("unbalanced nesting string '" + s + "'");
            auto a = point_at(bottom, top, open.back()), b = point_at(bottom, top, p);
            open.pop_back();
            d.partner[a] = b;
            d.partner[b] = a;
        } else {
            throw std::invalid_argument("nesting strings use only '(' and ')'");
        }
    }
    if (!open.empty()) throw std::invalid_argument("unbalanced nesting string '" + s + "'");
    return d;
}

PlanarMatching PlanarMatching::from_partners(std::size_t bottom, std::size_t top, std::vector<std::size_t> partner) {
    const std::size_t size = bottom + top;
    if (partner.size() != size) throw std::invalid_argument("partner list has the wrong length");
    for (std::size_t q = 0; q < size; ++q)
        if (partner[q] >= size || partner[q] == q || partner[partner[q]] != q)
            throw std::invalid_argument("partner list is not a perfect matching");
    std::vector<std::size_t> open;
    for (std::size_t p = 0; p < size; ++p) {
        auto pp = position_of(bottom, top, partner[point_at(bottom, top, p)]);
        if (pp > p) {
            open.push_back(p);
        } else {
            if (open.empty() || open.back() != pp) throw std::invalid_argument("matching has a crossing");
            open.pop_back();
        }
    }
    return PlanarMatching{bottom, top, std::move(partner)};
}

PlanarMatching PlanarMatching::identity(std::size_t m) {
    PlanarMatching d{m, m, std::vector<std::size_t>(2 * m)};
    for (std::size_t i = 0; i < m; ++i) {
        d.partner[i] = m + i;
        d.partner[m + i] = i;
    }
    return d;
}

PlanarMatching PlanarMatching::generator(std::size_t m, std::size_t i) {
    if (i == 0 || i >= m) throw std::invalid_argument("generator index out of range");
    PlanarMatching d = identity(m);
    d.partner[i - 1] = i;
    d.partner[i] = i - 1;
    d.partner[m + i - 1] = m + i;
    d.partner[m + i] = m + i - 1;
    return d;
}

std::string PlanarMatching::to_nesting() const {
    std::string s;
    for (std::size_t p = 0; p < bottom + top; ++p)
        s += position_of(bottom, top, partner[point_at(bottom, top, p)]) > p ? '(' : ')';
    return s;
}

std::size_t PlanarMatching::through_degree() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < bottom; ++i)
        if (partner[i] >= bottom) ++c;
    return c;
}

std::vector<PlanarMatching> all_matchings(std::size_t bottom, std::size_t top) {
    const std::size_t len = bottom + top;
    std::vector<PlanarMatching> out;
    if (len % 2 != 0) return out;
    std::string s;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t open, std::size_t closed) {
        if (s.size() == len) {
            out.push_back(PlanarMatching::from_nesting(s, bottom, top));
            return;
        }
        if (open < len / 2) {
            s.push_back('(');
            rec(open + 1, closed);
            s.pop_back();
        }
        if (closed < open) {
            s.push_back(')');
            rec(open, closed + 1);
            s.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

Stacked stack(const PlanarMatching& lower, const PlanarMatching& upper) {
    if (lower.top != upper.bottom) throw std::invalid_argument("stacking boundary mismatch");
    const std::size_t off = lower.bottom + lower.top;
    const std::size_t total = off + upper.bottom + upper.top;
    UnionFind uf(total);
    for (std::size_t q = 0; q < off; ++q) uf.unite(q, lower.partner[q]);
    for (std::size_t q = 0; q < upper.bottom + upper.top; ++q) uf.unite(off + q, off + upper.partner[q]);
    for (std::size_t j = 0; j < lower.top; ++j) uf.unite(lower.bottom + j, off + j);

    Stacked r;
    r.diagram.bottom = lower.bottom;
    r.diagram.top = upper.top;
    r.diagram.partner.assign(lower.bottom + upper.top, 0);
    // outer node -> result index
    std::vector<std::size_t> outer_nodes;
    for (std::size_t i = 0; i < lower.bottom; ++i) outer_nodes.push_back(i);
    for (std::size_t j = 0; j < upper.top; ++j) outer_nodes.push_back(off + upper.bottom + j);
    std::vector<std::size_t> first(total, SIZE_MAX);
    std::vector<bool> has_outer(total, false);
    for (std::size_t idx = 0; idx < outer_nodes.size(); ++idx) {
        auto root = uf.find(outer_nodes[idx]);
        has_outer[root] = true;
        if (first[root] == SIZE_MAX) {
            first[root] = idx;
        } else {
            r.diagram.partner[idx] = first[root];
            r.diagram.partner[first[root]] = idx;
        }
    }
    for (std::size_t q = 0; q < total; ++q)
        if (uf.find(q) == q && !has_outer[q]) ++r.loops;
    return r;
}

PlanarMatching juxtapose(const PlanarMatching& a, const PlanarMatching& b) {
    PlanarMatching r;
    r.bottom = a.bottom + b.bottom;
    r.top = a.top + b.top;
    auto map_a = [&](std::size_t q) { return q < a.bottom ? q : r.bottom + (q - a.bottom); };
    auto map_b = [&](std::size_t q) { return q < b.bottom ? a.bottom + q : r.bottom + a.top + (q - b.bottom); };
    r.partner.assign(r.bottom + r.top, 0);
    for (std::size_t q = 0; q < a.partner.size(); ++q) r.partner[map_a(q)] = map_a(a.partner[q]);
    for (std::size_t q = 0; q < b.partner.size(); ++q) r.partner[map_b(q)] = map_b(b.partner[q]);
    return r;
}

std::size_t closure_loops(const PlanarMatching& d) {
    if (d.bottom != d.top) throw std::invalid_argument("closure needs equal boundary counts");
    const std::size_t m = d.bottom;
    UnionFind uf(2 * m);
    for (std::size_t q = 0; q < 2 * m; ++q) uf.unite(q, d.partner[q]);
    for (std::size_t i = 0; i < m; ++i) uf.unite(i, m + i);
    std::size_t c = 0;
    for (std::size_t q = 0; q < 2 * m; ++q)
        if (uf.find(q) == q) ++c;
    return c;
}

// ---------------------------------------------------------------- morphisms

TLMorphism TLMorphism::zero(int n, std::size_t bottom, std::size_t top) {
    if (n < 3) throw std::invalid_argument("field tag must be at least 3");
    TLMorphism t;
    t.n = n;
    t.bottom = bottom;
    t.top = top;
    return t;
}

TLMorphism TLMorphism::from_matching(int n, const PlanarMatching& d) {
    TLMorphism t = zero(n, d.bottom, d.top);
    t.terms.emplace(d, NumberFieldElem::one(n));
    return t;
}

TLMorphism TLMorphism::identity(int n, std::size_t m) { return from_matching(n, PlanarMatching::identity(m)); }

TLMorphism TLMorphism::generator(int n, std::size_t m, std::size_t i) {
    return from_matching(n, PlanarMatching::generator(m, i));
}

namespace {

void check_compatible(const TLMorphism& a, const TLMorphism& b) {
    if (a.n != b.n) throw std::invalid_argument("field tags differ");
    if (a.color && b.color && *a.color != *b.color) throw std::invalid_argument("rightmost colors differ");
}

std::optional<char> merged_color(const TLMorphism& a, const TLMorphism& b) { return a.color ? a.color : b.color; }

void accumulate(std::map<PlanarMatching, NumberFieldElem>& terms, const PlanarMatching& d, const NumberFieldElem& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

}  // namespace

TLMorphism& TLMorphism::operator+=(const TLMorphism& o) {
    check_compatible(*this, o);
    if (bottom != o.bottom || top != o.top) throw std::invalid_argument("boundary mismatch in sum");
    color = merged_color(*this, o);
    for (auto& [d, c] : o.terms) accumulate(terms, d, c);
    return *this;
}

TLMorphism& TLMorphism::operator-=(const TLMorphism& o) {
    check_compatible(*this, o);
    if (bottom != o.bottom || top != o.top) throw std::invalid_argument("boundary mismatch in difference");
    color = merged_color(*this, o);
    for (auto& [d, c] : o.terms) accumulate(terms, d, -c);
    return *this;
}

TLMorphism& TLMorphism::operator*=(const NumberFieldElem& c) {
    if (c.is_zero()) {
        terms.clear();
        return *this;
    }
    for (auto& [d, v] : terms) v *= c;
    return *this;
}

bool operator==(const TLMorphism& a, const TLMorphism& b) {
    return a.n == b.n && a.bottom == b.bottom && a.top == b.top && a.terms == b.terms;
}

TLMorphism compose(const TLMorphism& d1, const TLMorphism& d2) {
    check_compatible(d1, d2);
    if (d1.top != d2.bottom) throw std::invalid_argument("top of the first morphism does not match the second");
    TLMorphism out = TLMorphism::zero(d1.n, d1.bottom, d2.top);
    out.color = merged_color(d1, d2);
    std::vector<NumberFieldElem> powers{NumberFieldElem::one(d1.n)};
    const auto delta = NumberFieldElem::delta(d1.n);
    for (auto& [a, ca] : d1.terms)
        for (auto& [b, cb] : d2.terms) {
            auto s = stack(a, b);
            while (powers.size() <= s.loops) powers.push_back(powers.back() * delta);
            accumulate(out.terms, s.diagram, ca * cb * powers[s.loops]);
        }
    return out;
}

TLMorphism tensor(const TLMorphism& a, const TLMorphism& b) {
    if (a.n != b.n) throw std::invalid_argument("field tags differ");
    TLMorphism out = TLMorphism::zero(a.n, a.bottom + b.bottom, a.top + b.top);
    out.color = b.color;
    for (auto& [x, cx] : a.terms)
        for (auto& [y, cy] : b.terms) accumulate(out.terms, juxtapose(x, y), cx * cy);
    return out;
}

bool is_idempotent(const TLMorphism& d) { return d.bottom == d.top && compose(d, d) == d; }

bool kills_generators(const TLMorphism& d) {
    if (d.bottom != d.top) return false;
    for (std::size_t i = 1; i < d.bottom; ++i) {
        auto e = TLMorphism::generator(d.n, d.bottom, i);
        if (!compose(d, e).is_zero() || !compose(e, d).is_zero()) return false;
    }
    return true;
}

TLMorphism jones_wenzl(std::size_t k, int n) {
    if (k == 0) throw std::invalid_argument("Jones-Wenzl index starts at 1");
    TLMorphism jw = TLMorphism::identity(n, 1);
    const auto strand = TLMorphism::identity(n, 1);
    for (std::size_t j = 2; j <= k; ++j) {
        auto qj = quantum_integer(static_cast<int>(j), n);
        if (qj.is_zero())
            throw std::domain_error("quantum integer [" + std::to_string(j) + "] vanishes at n = " + std::to_string(n));
        auto coeff = quantum_integer(static_cast<int>(j - 1), n) / qj;
        auto ext = tensor(jw, strand);
        auto sandwich = compose(compose(ext, TLMorphism::generator(n, j, j - 1)), ext);
        jw = ext - coeff * sandwich;
    }
    if (!is_idempotent(jw) || !kills_generators(jw))
        throw std::logic_error("Jones-Wenzl recursion produced a non-projector");
    return jw;
}

NumberFieldElem markov_trace(const TLMorphism& d) {
    if (d.bottom != d.top) throw std::invalid_argument("trace needs equal boundary counts");
    auto value = NumberFieldElem::zero(d.n);
    const auto delta = NumberFieldElem::delta(d.n);
    for (auto& [m, c] : d.terms) {
        auto term = c;
        for (std::size_t l = closure_loops(m); l > 0; --l) term *= delta;
        value += term;
    }
    return value;
}

NegligibilityReport negligibility_check(const TLMorphism& d) {
    if (d.bottom != d.top) throw std::invalid_argument("negligibility needs equal boundary counts");
    auto xs = all_matchings(d.top, d.bottom);
    std::vector<char> vanishes(xs.size(), 1);
    parallel_for(xs.size(), [&](std::size_t i) {
        vanishes[i] = markov_trace(compose(d, TLMorphism::from_matching(d.n, xs[i]))).is_zero() ? 1 : 0;
    });
    NegligibilityReport r;
    r.closures = xs.size();
    r.negligible = true;
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (!vanishes[i]) {
            r.negligible = false;
            r.witness = xs[i];
            break;
        }
    return r;
}

char ColoredObject::leftmost() const {
    if (strands % 2 == 0) return rightmost;
    return rightmost == 's' ? 't' : 's';
}

Embedding color_and_embed(std::size_t k, char rightmost, int n) {
    if (rightmost != 's' && rightmost != 't') throw std::invalid_argument("colors are 's' and 't'");
    if (n < 3 || k + 2 > static_cast<std::size_t>(n)) throw std::invalid_argument("need k <= n - 2");
    Embedding e{ColoredObject{k, rightmost}, std::string(k, ' ')};
    char c = rightmost;
    for (std::size_t i = k; i > 0; --i) {
        e.word[i - 1] = c;
        c = c == 's' ? 't' : 's';
    }
    return e;
}

}  // namespace fiatkit
