#include "fiatkit/decat.hpp"

#include "fiatkit/parallel.hpp"
#include "fiatkit/simd/int_kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace fiatkit {

IntMatrix IntMatrix::identity(std::size_t size) {
    IntMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data.begin(), data.end(), [](std::int64_t v) { return v == 0; });
}

bool IntMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.n != b.n) throw std::invalid_argument("matrix size mismatch");
    IntMatrix c(a.n);
    if (!simd::matmul_i64(a.data.data(), b.data.data(), c.data.data(), a.n, a.n, a.n))
        throw std::overflow_error("int64 overflow in matrix product");
    return c;
}

// ---------------------------------------------------------------- fusion

IntMatrix FusionRing::left_matrix(std::size_t i) const {
    IntMatrix m(rank);
    for (std::size_t j = 0; j < rank; ++j)
        for (std::size_t k = 0; k < rank; ++k) m(k, j) = coefficient(i, j, k);
    return m;
}

ClassVector FusionRing::basis(std::size_t i) const {
    if (i >= rank) throw std::out_of_range("fusion basis index");
    ClassVector v(rank, 0);
    v[i] = 1;
    return v;
}

ClassVector FusionRing::multiply(const ClassVector& a, const ClassVector& b) const {
    if (a.size() != rank || b.size() != rank) throw std::invalid_argument("class vector has the wrong length");
    ClassVector out(rank, 0);
    for (std::size_t i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < rank; ++j) {
            if (b[j] == 0) continue;
            for (std::size_t k = 0; k < rank; ++k) out[k] += a[i] * b[j] * coefficient(i, j, k);
        }
    }
    return out;
}

FusionRing fusion_ring(int n) {
    if (n < 3) throw std::invalid_argument("fusion ring needs n >= 3");
    FusionRing r;
    r.n = n;
    r.rank = static_cast<std::size_t>(n - 1);
    r.structure.assign(r.rank * r.rank * r.rank, 0);
    const int top = 2 * (n - 2);
    for (int i = 0; i <= n - 2; ++i)
        for (int j = 0; j <= n - 2; ++j) {
            int hi = std::min(i + j, top - i - j);
            for (int k = std::abs(i - j); k <= hi; k += 2)
                r.structure[(static_cast<std::size_t>(i) * r.rank + j) * r.rank + k] = 1;
        }
    r.associative = fusion_associativity_holds(r);
    return r;
}

bool fusion_associativity_holds(const FusionRing& ring) {
    std::vector<IntMatrix> left;
    for (std::size_t i = 0; i < ring.rank; ++i) left.push_back(ring.left_matrix(i));
    for (std::size_t i = 0; i < ring.rank; ++i)
        for (std::size_t j = 0; j < ring.rank; ++j) {
            IntMatrix expected(ring.rank);
            for (std::size_t k = 0; k < ring.rank; ++k) {
                auto c = ring.coefficient(i, j, k);
                if (c == 0) continue;
                for (std::size_t t = 0; t < expected.data.size(); ++t) expected.data[t] += c * left[k].data[t];
            }
            if (left[i] * left[j] != expected) return false;
        }
    return true;
}

// ---------------------------------------------------------------- graphs

namespace {

Graph path_graph(std::string name, std::size_t k) {
    Graph g{std::move(name), IntMatrix(k)};
    for (std::size_t i = 0; i + 1 < k; ++i) g.adjacency(i, i + 1) = g.adjacency(i + 1, i) = 1;
    return g;
}

void add_edge(Graph& g, std::size_t u, std::size_t v) { g.adjacency(u, v) = g.adjacency(v, u) = 1; }

}  // namespace

Graph graph_a(std::size_t k) {
    if (k == 0) throw std::invalid_argument("A_k needs k >= 1");
    return path_graph("A" + std::to_string(k), k);
}

Graph graph_d(std::size_t k) {
    if (k < 4) throw std::invalid_argument("D_k needs k >= 4");
    Graph g = path_graph("D" + std::to_string(k), k);
    g.adjacency(k - 2, k - 1) = g.adjacency(k - 1, k - 2) = 0;
    add_edge(g, k - 3, k - 1);
    return g;
}

Graph graph_e(std::size_t k) {
    if (k < 6 || k > 8) throw std::invalid_argument("E_k needs k in {6, 7, 8}");
    Graph g = path_graph("E" + std::to_string(k), k);
    g.adjacency(k - 2, k - 1) = g.adjacency(k - 1, k - 2) = 0;
    add_edge(g, 2, k - 1);
    return g;
}

Graph graph_t(std::size_t k) {
    if (k == 0) throw std::invalid_argument("T_k needs k >= 1");
    Graph g = path_graph("T" + std::to_string(k), k);
    g.adjacency(k - 1, k - 1) = 1;
    return g;
}

BasedModule based_module_from_graph(const Graph& g, int n) {
    const auto& adj = g.adjacency;
    if (n < 3) throw std::invalid_argument("based module needs n >= 3");
    if (adj.n == 0) throw std::invalid_argument("graph has no vertices");
    if (!adj.is_symmetric()) throw std::invalid_argument("adjacency matrix is not symmetric");
    if (simd::min_i64(adj.data.data(), adj.data.size()) < 0)
        throw std::invalid_argument("adjacency matrix has negative entries");
    std::vector<bool> seen(adj.n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < adj.n; ++v)
            if (adj(u, v) != 0 && !seen[v]) seen[v] = true, stack.push_back(v);
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw std::invalid_argument("graph is not connected");

    BasedModule m;
    m.graph = g;
    m.n = n;
    m.m.push_back(IntMatrix::identity(adj.n));
    m.m.push_back(adj);
    for (int k = 1; k + 1 <= n - 1; ++k) {
        IntMatrix next(adj.n);
        if (!simd::mul_sub_i64(adj.data.data(), m.m[k].data.data(), m.m[k - 1].data.data(), next.data.data(),
                               adj.n)) {
            m.overflow = true;
            return m;
        }
        m.m.push_back(std::move(next));
    }
    bool nonneg = true;
    for (int k = 0; k <= n - 2 && nonneg; ++k)
        nonneg = simd::min_i64(m.m[k].data.data(), m.m[k].data.size()) >= 0;
    m.valid = nonneg && m.m[n - 1].is_zero();
    return m;
}

bool ring_homomorphism_holds(const BasedModule& m, const FusionRing& ring) {
    if (!m.valid || ring.n != m.n) return false;
    for (std::size_t i = 0; i < ring.rank; ++i)
        for (std::size_t j = i; j < ring.rank; ++j) {
            IntMatrix expected(m.graph.adjacency.n);
            for (std::size_t k = 0; k < ring.rank; ++k) {
                auto c = ring.coefficient(i, j, k);
                if (c == 0) continue;
                for (std::size_t t = 0; t < expected.data.size(); ++t) expected.data[t] += c * m.m[k].data[t];
            }
            if (m.m[i] * m.m[j] != expected) return false;
        }
    return true;
}

std::vector<std::string> ade_scan(int n, std::size_t max_vertices) {
    if (n < 3) throw std::invalid_argument("ade scan needs n >= 3");
    std::vector<Graph> candidates;
    for (std::size_t k = 1; k <= max_vertices; ++k) candidates.push_back(graph_a(k));
    for (std::size_t k = 4; k <= max_vertices; ++k) candidates.push_back(graph_d(k));
    for (std::size_t k = 6; k <= 8; ++k) candidates.push_back(graph_e(k));
    for (std::size_t k = 1; k <= max_vertices; ++k) candidates.push_back(graph_t(k));
    std::vector<char> ok(candidates.size(), 0);
    parallel_for(candidates.size(),
                 [&](std::size_t i) { ok[i] = based_module_from_graph(candidates[i], n).valid ? 1 : 0; });
    std::vector<std::string> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (ok[i]) out.push_back(candidates[i].name);
    return out;
}

ClassVector internal_end_class(const BasedModule& m, std::size_t vertex) {
    if (!m.valid) throw std::invalid_argument("based module is not valid");
    if (vertex >= m.graph.adjacency.n) throw std::out_of_range("vertex out of range");
    ClassVector out;
    for (int k = 0; k <= m.n - 2; ++k) out.push_back(m.m[k](vertex, vertex));
    return out;
}

// ---------------------------------------------------------------- dihedral KL

namespace {

// Basis layout: 0 = e, 2l-1 = s-word of length l, 2l = t-word of length l
// (1 <= l < n), 2n-1 = w0.
std::size_t word_index(int n, int len, bool s_first) {
    if (len == 0) return 0;
    if (len == n) return static_cast<std::size_t>(2 * n - 1);
    return static_cast<std::size_t>(s_first ? 2 * len - 1 : 2 * len);
}

bool starts_with_s(std::size_t w, int n) {
    return w == static_cast<std::size_t>(2 * n - 1) || w % 2 == 1;
}

std::string word(int len, bool s_first) {
    if (len == 0) return "e";
    std::string out;
    for (int i = 0; i < len; ++i) out += ((i % 2 == 0) == s_first) ? 's' : 't';
    return out;
}

// b_g b_w for a generator g, on the full basis.
IntMatrix generator_op(int n, bool g_is_s) {
    const std::size_t size = static_cast<std::size_t>(2 * n);
    IntMatrix op(size);
    for (std::size_t w = 0; w < size; ++w) {
        int len = w == size - 1 ? n : static_cast<int>((w + 1) / 2);
        if (len == 0) {
            op(word_index(n, 1, g_is_s), w) = 1;
            continue;
        }
        bool descent = (w == size - 1) || (starts_with_s(w, n) == g_is_s);
        if (descent) {
            op(w, w) = 2;
            continue;
        }
        op(word_index(n, len + 1, g_is_s), w) += 1;
        if (len >= 2) op(word_index(n, len - 1, g_is_s), w) += 1;
    }
    return op;
}

}  // namespace

std::size_t KLRing::length(std::size_t w) const {
    if (w >= size()) throw std::out_of_range("KL basis index");
    return w == longest() ? static_cast<std::size_t>(n) : (w + 1) / 2;
}

std::size_t KLRing::index_of(const std::string& w) const {
    if (w.empty() || w == "e") return 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != 's' && w[i] != 't') throw std::invalid_argument("unknown letter in word '" + w + "'");
        if (i > 0 && w[i] == w[i - 1]) throw std::invalid_argument("word '" + w + "' is not reduced");
    }
    if (w.size() > static_cast<std::size_t>(n)) throw std::invalid_argument("word '" + w + "' is not reduced");
    return word_index(n, static_cast<int>(w.size()), w[0] == 's');
}

ClassVector KLRing::basis(std::size_t w) const {
    if (w >= size()) throw std::out_of_range("KL basis index");
    ClassVector v(size(), 0);
    if (!(small_quotient && w == longest())) v[w] = 1;
    return v;
}

ClassVector KLRing::multiply(const ClassVector& a, const ClassVector& b) const {
    if (a.size() != size() || b.size() != size()) throw std::invalid_argument("class vector has the wrong length");
    ClassVector out(size(), 0);
    for (std::size_t x = 0; x < size(); ++x) {
        if (a[x] == 0 || (small_quotient && x == longest())) continue;
        for (std::size_t w = 0; w < size(); ++w) {
            if (b[w] == 0 || (small_quotient && w == longest())) continue;
            for (std::size_t k = 0; k < size(); ++k) out[k] += a[x] * b[w] * left_ops[x](k, w);
        }
    }
    if (small_quotient) out[longest()] = 0;
    return out;
}

KLRing kl_ring(int n, bool small_quotient) {
    if (n < 3) throw std::invalid_argument("KL ring needs n >= 3");
    KLRing r;
    r.n = n;
    r.small_quotient = small_quotient;
    const std::size_t size = static_cast<std::size_t>(2 * n);
    r.labels.assign(size, "");
    r.left_ops.assign(size, IntMatrix(size));
    r.labels[0] = "e";
    r.left_ops[0] = IntMatrix::identity(size);
    const IntMatrix ops[2] = {generator_op(n, false), generator_op(n, true)};
    for (int len = 1; len <= n; ++len)
        for (bool s_first : {true, false}) {
            std::size_t x = word_index(n, len, s_first);
            if (len == n && !s_first) continue;
            r.labels[x] = word(len, s_first);
            const IntMatrix& g = ops[s_first ? 1 : 0];
            if (len == 1) {
                r.left_ops[x] = g;
                continue;
            }
            // b_x = b_g b_{x'} - b_z with x' the other-letter word of length len-1
            // and z the g-word of length len-2 (absent for len = 2).
            const IntMatrix& tail = r.left_ops[word_index(n, len - 1, !s_first)];
            IntMatrix z = len >= 3 ? r.left_ops[word_index(n, len - 2, s_first)] : IntMatrix(size);
            IntMatrix out(size);
            if (!simd::mul_sub_i64(g.data.data(), tail.data.data(), z.data.data(), out.data.data(), size))
                throw std::overflow_error("int64 overflow in KL operators");
            r.left_ops[x] = std::move(out);
        }
    return r;
}

namespace {

struct Dihedral {
    int n;
    // element (k, f): x -> (f ? -x : x) + k mod n, stored as 2k + f
    [[nodiscard]] std::size_t compose(std::size_t a, std::size_t b) const {
        int ka = static_cast<int>(a / 2), kb = static_cast<int>(b / 2);
        bool fa = a % 2, fb = b % 2;
        int k = ((fa ? -kb : kb) + ka) % n;
        if (k < 0) k += n;
        return static_cast<std::size_t>(2 * k) + ((fa != fb) ? 1 : 0);
    }
    [[nodiscard]] std::size_t of_word(const std::string& w) const {
        std::size_t g = 0;
        if (w == "e") return g;
        for (char c : w) g = compose(g, c == 's' ? std::size_t{1} : std::size_t{3});
        return g;
    }
};

using GroupVector = std::vector<std::int64_t>;

struct GroupOracle {
    Dihedral d;
    std::vector<std::string> labels;
    std::vector<std::size_t> element;  // basis index -> group element
    std::vector<int> lengths;
    std::vector<GroupVector> b;        // b_w in the group ring

    explicit GroupOracle(int n) : d{n} {
        const std::size_t size = static_cast<std::size_t>(2 * n);
        labels.assign(size, "");
        lengths.assign(size, 0);
        element.assign(size, 0);
        for (int len = 0; len <= n; ++len)
            for (bool s_first : {true, false}) {
                std::size_t x = word_index(n, len, s_first);
                labels[x] = word(len, s_first);
                lengths[x] = len;
                element[x] = d.of_word(labels[x]);
            }
        for (std::size_t w = 0; w < size; ++w) {
            GroupVector v(size, 0);
            for (std::size_t y = 0; y < size; ++y)
                if (lengths[y] < lengths[w] || y == w) v[element[y]] += 1;
            b.push_back(std::move(v));
        }
    }

    [[nodiscard]] GroupVector product(const GroupVector& x, const GroupVector& y) const {
        GroupVector out(x.size(), 0);
        for (std::size_t g = 0; g < x.size(); ++g) {
            if (x[g] == 0) continue;
            for (std::size_t h = 0; h < y.size(); ++h)
                if (y[h] != 0) out[d.compose(g, h)] += x[g] * y[h];
        }
        return out;
    }

    [[nodiscard]] ClassVector expand(GroupVector v) const {
        const std::size_t size = v.size();
        ClassVector out(size, 0);
        std::vector<std::size_t> order(size);
        for (std::size_t i = 0; i < size; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t c) { return lengths[a] > lengths[c]; });
        for (std::size_t w : order) {
            auto c = v[element[w]];
            if (c == 0) continue;
            out[w] = c;
            for (std::size_t g = 0; g < size; ++g) v[g] -= c * b[w][g];
        }
        if (std::any_of(v.begin(), v.end(), [](std::int64_t t) { return t != 0; }))
            throw std::logic_error("group ring element outside the span of the b basis");
        return out;
    }
};

}  // namespace

ClassVector kl_group_ring_product(const KLRing& ring, const ClassVector& a, const ClassVector& b) {
    GroupOracle o(ring.n);
    const std::size_t size = ring.size();
    if (a.size() != size || b.size() != size) throw std::invalid_argument("class vector has the wrong length");
    GroupVector ga(size, 0), gb(size, 0);
    for (std::size_t w = 0; w < size; ++w) {
        if (ring.small_quotient && w == ring.longest()) continue;
        for (std::size_t g = 0; g < size; ++g) {
            ga[g] += a[w] * o.b[w][g];
            gb[g] += b[w] * o.b[w][g];
        }
    }
    ClassVector out = o.expand(o.product(ga, gb));
    if (ring.small_quotient) out[ring.longest()] = 0;
    return out;
}

ClassVector kl_group_ring_product(int n, const std::string& x, const std::string& w, bool small_quotient) {
    KLRing shape;
    shape.n = n;
    shape.small_quotient = small_quotient;
    shape.labels.assign(static_cast<std::size_t>(2 * n), "");
    auto a = ClassVector(shape.size(), 0), b = ClassVector(shape.size(), 0);
    a[shape.index_of(x)] = 1;
    b[shape.index_of(w)] = 1;
    return kl_group_ring_product(shape, a, b);
}

ClassVector kl_type_d_class(const KLRing& ring) {
    if (ring.n % 2 != 0) throw std::invalid_argument("type D class needs even n");
    ClassVector v(ring.size(), 0);
    v[ring.index_of("s")] += 1;
    v[word_index(ring.n, ring.n - 1, true)] += 1;
    return v;
}

ClassVector kl_literal_d_class(const KLRing& ring) {
    // s w0 has length n - 1 and its reduced word starts with the letter after s.
    ClassVector v(ring.size(), 0);
    v[ring.index_of("s")] += 1;
    v[word_index(ring.n, ring.n - 1, false)] += 1;
    return v;
}

namespace {

template <class Ring>
IdempotencyReport idempotency(const Ring& ring, ClassVector x, bool drop_last) {
    if (drop_last) x.back() = 0;
    IdempotencyReport rep;
    rep.square = ring.multiply(x, x);
    auto pivot = std::find_if(x.begin(), x.end(), [](std::int64_t v) { return v != 0; });
    if (pivot == x.end()) {
        rep.lambda = Rational(0);
        rep.residual.assign(x.size(), 0);
        return rep;
    }
    std::size_t p = static_cast<std::size_t>(pivot - x.begin());
    Rational lambda(static_cast<long>(rep.square[p]), static_cast<long>(x[p]));
    bool proportional = lambda >= Rational(0);
    for (std::size_t i = 0; i < x.size() && proportional; ++i)
        proportional = Rational(static_cast<long>(rep.square[i])) == lambda * Rational(static_cast<long>(x[i]));
    if (proportional) {
        rep.lambda = lambda;
        rep.residual.assign(x.size(), 0);
    } else {
        rep.residual = rep.square;
    }
    return rep;
}

}  // namespace

IdempotencyReport pseudo_idempotent_check(const FusionRing& ring, const ClassVector& x) {
    if (x.size() != ring.rank) throw std::invalid_argument("class vector has the wrong length");
    return idempotency(ring, x, false);
}

IdempotencyReport pseudo_idempotent_check(const KLRing& ring, const ClassVector& x) {
    if (x.size() != ring.size()) throw std::invalid_argument("class vector has the wrong length");
    return idempotency(ring, x, ring.small_quotient);
}

}  // namespace fiatkit
