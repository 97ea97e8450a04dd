#include "pcdg/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pcdg {

namespace {

// column-major upper triangle: bit of pair (i,j), i<j, is j(j-1)/2 + i,
// matching the graph6 bit order
inline int pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

inline void check_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(g.order()));
}

}  // namespace

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    for (int v = 0; v < 16; ++v)
        if (contains(v)) out.push_back(v);
    return out;
}

std::string VertexSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : to_vector()) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

Graph::Graph(int order) : order_(order), bits_(0) {
    if (order < 1 || order > kMaxOrder)
        throw std::invalid_argument("graph order must be in 1..10, got " + std::to_string(order));
}

Graph Graph::complete(int order) {
    Graph g(order);
    g.bits_ = order < 2 ? 0 : (uint64_t(1) << (order * (order - 1) / 2)) - 1;
    return g;
}

Graph Graph::from_edge_list(int order, std::span<const std::pair<int, int>> edges) {
    Graph g(order);
    for (auto [a, b] : edges) g = g.with_edge(a, b);
    return g;
}

Graph Graph::from_edge_list(int order, std::initializer_list<std::pair<int, int>> edges) {
    return from_edge_list(order, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

bool Graph::has_edge(int a, int b) const {
    check_vertex(*this, a);
    check_vertex(*this, b);
    if (a == b) return false;
    return bits_ >> pair_index(a, b) & 1;
}

int Graph::degree(int v) const { return __builtin_popcount(neighbor_mask(v)); }

uint16_t Graph::neighbor_mask(int v) const {
    check_vertex(*this, v);
    uint16_t m = 0;
    for (int u = 0; u < order_; ++u)
        if (u != v && (bits_ >> pair_index(u, v) & 1)) m |= uint16_t(1u << u);
    return m;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j < order_; ++j)
        for (int i = 0; i < j; ++i)
            if (bits_ >> pair_index(i, j) & 1) out.emplace_back(i, j);
    return out;
}

Graph Graph::with_edge(int a, int b) const {
    check_vertex(*this, a);
    check_vertex(*this, b);
    if (a == b) throw std::invalid_argument("self-loop rejected");
    Graph g = *this;
    g.bits_ |= uint64_t(1) << pair_index(a, b);
    return g;
}

Graph Graph::from_adjacency_bits(int order, uint64_t bits) {
    Graph g(order);
    uint64_t limit = order < 2 ? 0 : (uint64_t(1) << (order * (order - 1) / 2)) - 1;
    if (bits & ~limit) throw std::invalid_argument("adjacency bits exceed order");
    g.bits_ = bits;
    return g;
}

// ---- surgery ----

Graph complement(const Graph& g) {
    int n = g.order();
    uint64_t full = n < 2 ? 0 : (uint64_t(1) << (n * (n - 1) / 2)) - 1;
    return Graph::from_adjacency_bits(n, ~g.adjacency_bits() & full);
}

Graph delete_vertex(const Graph& g, int v) {
    check_vertex(g, v);
    if (g.order() < 2)
        throw std::invalid_argument("cannot delete the only vertex");
    Graph out(g.order() - 1);
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        out = out.with_edge(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return out;
}

Graph delete_edges(const Graph& g, std::span<const std::pair<int, int>> pairs) {
    uint64_t bits = g.adjacency_bits();
    for (auto [a, b] : pairs) {
        if (!g.has_edge(a, b))
            throw std::invalid_argument("(" + std::to_string(a) + "," + std::to_string(b) +
                                        ") is not an edge");
        bits &= ~(uint64_t(1) << pair_index(a, b));
    }
    return Graph::from_adjacency_bits(g.order(), bits);
}

Graph delete_edges(const Graph& g, std::initializer_list<std::pair<int, int>> pairs) {
    return delete_edges(g, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
}

Graph induced(const Graph& g, VertexSet vs) {
    if (vs.empty()) throw std::invalid_argument("induced subgraph on empty vertex set");
    std::vector<int> keep = vs.to_vector();
    if (keep.back() >= g.order()) throw std::out_of_range("vertex set exceeds order");
    Graph out(int(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (g.has_edge(keep[i], keep[j])) out = out.with_edge(int(i), int(j));
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    int n = g.order(), m = h.order();
    if (n + m > Graph::kMaxOrder)
        throw std::invalid_argument("join would exceed max order 10");
    Graph out = disjoint_union(g, h);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b) out = out.with_edge(a, n + b);
    return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int n = g.order(), m = h.order();
    if (n + m > Graph::kMaxOrder)
        throw std::invalid_argument("union would exceed max order 10");
    Graph out(n + m);
    for (auto [a, b] : g.edges()) out = out.with_edge(a, b);
    for (auto [a, b] : h.edges()) out = out.with_edge(n + a, n + b);
    return out;
}

std::vector<Graph> edge_subset_subgraphs(const Graph& g,
                                         std::span<const std::pair<int, int>> removable) {
    for (auto [a, b] : removable)
        if (!g.has_edge(a, b))
            throw std::invalid_argument("removable pair (" + std::to_string(a) + "," +
                                        std::to_string(b) + ") is not an edge");
    size_t k = removable.size();
    if (k > 20) throw std::invalid_argument("removable set too large");
    std::vector<Graph> out;
    out.reserve((size_t(1) << k) - 1);
    for (uint32_t mask = 1; mask < (1u << k); ++mask) {
        std::vector<std::pair<int, int>> drop;
        for (size_t i = 0; i < k; ++i)
            if (mask >> i & 1) drop.push_back(removable[i]);
        out.push_back(delete_edges(g, drop));
    }
    return out;
}

// ---- structure ----

std::vector<VertexSet> components(const Graph& g) {
    int n = g.order();
    std::vector<VertexSet> out;
    uint16_t seen = 0;
    for (int s = 0; s < n; ++s) {
        if (seen >> s & 1) continue;
        uint16_t comp = uint16_t(1u << s);
        for (;;) {
            uint16_t grow = comp;
            for (int v = 0; v < n; ++v)
                if (comp >> v & 1) grow |= g.neighbor_mask(v);
            if (grow == comp) break;
            comp = grow;
        }
        out.push_back(VertexSet(comp));
        seen |= comp;
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

namespace {

// BFS distances from s; unreachable = -1
std::array<int, Graph::kMaxOrder> bfs(const Graph& g, int s) {
    std::array<int, Graph::kMaxOrder> dist;
    dist.fill(-1);
    dist[s] = 0;
    uint16_t frontier = uint16_t(1u << s);
    int d = 0;
    while (frontier) {
        uint16_t next = 0;
        for (int v = 0; v < g.order(); ++v)
            if (frontier >> v & 1) next |= g.neighbor_mask(v);
        ++d;
        frontier = 0;
        for (int v = 0; v < g.order(); ++v)
            if ((next >> v & 1) && dist[v] < 0) {
                dist[v] = d;
                frontier |= uint16_t(1u << v);
            }
    }
    return dist;
}

}  // namespace

std::optional<int> diameter(const Graph& g) {
    int best = 0;
    for (int s = 0; s < g.order(); ++s) {
        auto dist = bfs(g, s);
        for (int v = 0; v < g.order(); ++v) {
            if (dist[v] < 0) return std::nullopt;
            best = std::max(best, dist[v]);
        }
    }
    return best;
}

VertexSet cut_vertices(const Graph& g) {
    if (g.order() == 1) return VertexSet();
    size_t base = components(g).size();
    VertexSet out;
    for (int v = 0; v < g.order(); ++v)
        if (components(delete_vertex(g, v)).size() > base) out = out.with(v);
    return out;
}

bool is_clique(const Graph& g, VertexSet vs) {
    auto verts = vs.to_vector();
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (!g.has_edge(verts[i], verts[j])) return false;
    return true;
}

VertexSet max_clique(const Graph& g) {
    int n = g.order();
    VertexSet best;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (int(std::popcount(mask)) <= best.count()) continue;
        if (is_clique(g, VertexSet(uint16_t(mask)))) best = VertexSet(uint16_t(mask));
    }
    return best;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    int n = g.order();
    std::array<int, Graph::kMaxOrder> color;
    color.fill(-1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;  // least vertex of each component on side A
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; ++u) {
                if (!g.has_edge(v, u)) continue;
                if (color[u] < 0) {
                    color[u] = 1 - color[v];
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    VertexSet a, b;
    for (int v = 0; v < n; ++v) (color[v] == 0 ? a : b) = (color[v] == 0 ? a : b).with(v);
    return std::make_pair(a, b);
}

std::optional<VertexSet> palfy_triple_check(const Graph& g) {
    int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (!g.has_edge(a, b) && !g.has_edge(a, c) && !g.has_edge(b, c))
                    return VertexSet::of({a, b, c});
    return std::nullopt;
}

std::optional<std::pair<VertexSet, VertexSet>> two_clique_cover_sides(const Graph& g) {
    Graph cg = complement(g);
    if (!bipartition(cg)) return std::nullopt;
    auto comps = components(cg);
    // 2-color each complement component, then choose flips maximizing |A|,
    // ties by lexicographically least side-A mask
    std::vector<std::pair<uint16_t, uint16_t>> sides;
    for (auto comp : comps) {
        Graph sub = induced(cg, comp);
        auto verts = comp.to_vector();
        auto bp = *bipartition(sub);
        uint16_t a = 0, b = 0;
        for (size_t i = 0; i < verts.size(); ++i)
            (bp.first.contains(int(i)) ? a : b) |= uint16_t(1u << verts[i]);
        sides.emplace_back(a, b);
    }
    std::optional<std::pair<uint16_t, uint16_t>> best;
    for (uint32_t flips = 0; flips < (1u << sides.size()); ++flips) {
        uint16_t A = 0, B = 0;
        for (size_t i = 0; i < sides.size(); ++i) {
            auto [a, b] = sides[i];
            if (flips >> i & 1) std::swap(a, b);
            A |= a;
            B |= b;
        }
        if (std::popcount(A) < std::popcount(B)) std::swap(A, B);
        if (!best || std::popcount(A) > std::popcount(best->first) ||
            (std::popcount(A) == std::popcount(best->first) && A < best->first))
            best = {A, B};
    }
    return std::make_pair(VertexSet(best->first), VertexSet(best->second));
}

std::optional<CliqueCoverSizes> two_clique_cover(const Graph& g) {
    auto sides = two_clique_cover_sides(g);
    if (!sides) return std::nullopt;
    return CliqueCoverSizes{sides->first.count(), sides->second.count()};
}

// ---- isomorphism ----

Graph relabel(const Graph& g, std::span<const int> perm) {
    if (int(perm.size()) != g.order()) throw std::invalid_argument("permutation size mismatch");
    uint16_t seen = 0;
    for (int v : perm) {
        if (v < 0 || v >= g.order() || (seen >> v & 1))
            throw std::invalid_argument("not a permutation");
        seen |= uint16_t(1u << v);
    }
    Graph out(g.order());
    for (auto [a, b] : g.edges()) out = out.with_edge(perm[a], perm[b]);
    return out;
}

namespace {

// backtracking minimization of the upper-triangle bit string over all vertex
// permutations; prefix pruning keeps the search exact and fast
struct Canonicalizer {
    int n;
    int total;
    std::array<uint16_t, Graph::kMaxOrder> adj{};
    std::array<int, Graph::kMaxOrder> order_hint{};  // vertices by ascending degree
    uint64_t best;

    explicit Canonicalizer(const Graph& g) : n(g.order()), total(n * (n - 1) / 2) {
        for (int v = 0; v < n; ++v) adj[v] = g.neighbor_mask(v);
        std::array<int, Graph::kMaxOrder> deg{};
        for (int v = 0; v < n; ++v) {
            deg[v] = std::popcount(adj[v]);
            order_hint[v] = v;
        }
        std::sort(order_hint.begin(), order_hint.begin() + n,
                  [&](int a, int b) { return deg[a] != deg[b] ? deg[a] < deg[b] : a < b; });
        best = total ? ~uint64_t(0) >> (64 - total) : 0;
        std::array<int, Graph::kMaxOrder> pos2v{};
        rec(pos2v, 0, 0, 0, 0);
    }

    void rec(std::array<int, Graph::kMaxOrder>& pos2v, int k, uint16_t used, uint64_t bits,
             int len) {
        if (k >= n) {
            if (bits < best) best = bits;
            return;
        }
        for (int idx = 0; idx < n; ++idx) {
            int v = order_hint[idx];
            if (used >> v & 1) continue;
            uint64_t col = 0;
            for (int i = 0; i < k && i < Graph::kMaxOrder; ++i)
                col = col << 1 | (adj[pos2v[i]] >> v & 1);
            uint64_t nb = bits << k | col;
            int nlen = len + k;
            // compare against the best prefix of the same length
            if (nb > (best >> (total - nlen))) continue;
            pos2v[k] = v;
            rec(pos2v, k + 1, uint16_t(used | 1u << v), nb, nlen);
        }
    }
};

}  // namespace

uint64_t canonical_bits(const Graph& g) {
    // column k of the encoding holds pairs (0,k)..(k-1,k), matching pair_index
    return Canonicalizer(g).best;
}

CanonicalForm canonical_form(const Graph& g) {
    CanonicalForm cf;
    cf.bytes[0] = uint8_t(g.order());
    uint64_t bits = canonical_bits(g);
    int total = g.order() * (g.order() - 1) / 2;
    // pack MSB-first: bit 0 of the encoding is the high bit of bytes[1]
    for (int i = 0; i < total; ++i) {
        int bit = int(bits >> (total - 1 - i) & 1);
        cf.bytes[1 + i / 8] |= uint8_t(bit << (7 - i % 8));
    }
    return cf;
}

Graph graph_from_canonical_bits(int order, uint64_t bits) {
    // the minimal string emits (0,1),(0,2),(1,2),... most-significant first
    int total = order * (order - 1) / 2;
    uint64_t adj = 0;
    int pos = 0;
    for (int j = 1; j < order; ++j)
        for (int i = 0; i < j; ++i) {
            if (bits >> (total - 1 - pos) & 1) adj |= uint64_t(1) << pair_index(i, j);
            ++pos;
        }
    return Graph::from_adjacency_bits(order, adj);
}

Graph canonical_graph(const Graph& g) { return graph_from_canonical_bits(g.order(), canonical_bits(g)); }

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    return canonical_bits(g) == canonical_bits(h);
}

// ---- graph6 ----

std::string to_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    out += char(n + 63);
    int total = n * (n - 1) / 2;
    int chars = (total + 5) / 6;
    uint64_t bits = g.adjacency_bits();
    for (int c = 0; c < chars; ++c) {
        int v = 0;
        for (int k = 0; k < 6; ++k) {
            int idx = c * 6 + k;
            int bit = idx < total ? int(bits >> idx & 1) : 0;
            v = v << 1 | bit;
        }
        out += char(v + 63);
    }
    return out;
}

Graph from_graph6(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty graph6 string");
    int n = s[0] - 63;
    if (n < 1 || n > Graph::kMaxOrder)
        throw std::invalid_argument("graph6 order out of supported range: " + std::string(s));
    int total = n * (n - 1) / 2;
    int chars = (total + 5) / 6;
    if (int(s.size()) != 1 + chars)
        throw std::invalid_argument("graph6 length mismatch: " + std::string(s));
    uint64_t bits = 0;
    for (int c = 0; c < chars; ++c) {
        int v = s[1 + c] - 63;
        if (v < 0 || v > 63) throw std::invalid_argument("graph6 byte out of range");
        for (int k = 0; k < 6; ++k) {
            int idx = c * 6 + k;
            int bit = v >> (5 - k) & 1;
            if (idx < total)
                bits |= uint64_t(bit) << idx;
            else if (bit)
                throw std::invalid_argument("graph6 padding bits must be zero");
        }
    }
    return Graph::from_adjacency_bits(n, bits);
}

}  // namespace pcdg
