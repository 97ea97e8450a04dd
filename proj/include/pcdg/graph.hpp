#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pcdg {

// Vertex subset as a bitmask over indices 0..order-1.
struct VertexSet {
    uint16_t mask = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(uint16_t m) : mask(m) {}
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.mask |= uint16_t(1u << v);
        return s;
    }
    static constexpr VertexSet all(int n) { return VertexSet(uint16_t((1u << n) - 1)); }

    bool contains(int v) const { return mask >> v & 1; }
    int count() const { return __builtin_popcount(mask); }
    bool empty() const { return mask == 0; }
    VertexSet with(int v) const { return VertexSet(uint16_t(mask | 1u << v)); }
    VertexSet without(int v) const { return VertexSet(uint16_t(mask & ~(1u << v))); }

    std::vector<int> to_vector() const;
    std::string to_string() const;  // e.g. "{0,2,5}"

    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.mask | b.mask); }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.mask & b.mask); }
    friend bool operator==(VertexSet, VertexSet) = default;
    friend auto operator<=>(VertexSet, VertexSet) = default;
};

// Label-independent representative: order byte + minimal upper-triangle bits.
struct CanonicalForm {
    std::array<uint8_t, 7> bytes{};
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Immutable simple undirected graph on 1..10 vertices, bit-packed adjacency.
// All surgery returns new values; inputs are never modified.
class Graph {
public:
    static constexpr int kMaxOrder = 10;

    Graph() : order_(1), bits_(0) {}  // K1
    explicit Graph(int order);        // edgeless
    static Graph complete(int order);
    static Graph from_edge_list(int order, std::span<const std::pair<int, int>> edges);
    static Graph from_edge_list(int order, std::initializer_list<std::pair<int, int>> edges);

    int order() const { return order_; }
    int edge_count() const { return __builtin_popcountll(bits_); }
    bool has_edge(int a, int b) const;
    int degree(int v) const;
    uint16_t neighbor_mask(int v) const;
    VertexSet neighbors(int v) const { return VertexSet(neighbor_mask(v)); }
    std::vector<std::pair<int, int>> edges() const;

    Graph with_edge(int a, int b) const;

    // upper-triangle bits in graph6 column order; stable across equal graphs
    uint64_t adjacency_bits() const { return bits_; }
    static Graph from_adjacency_bits(int order, uint64_t bits);

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Graph(int order, uint64_t bits) : order_(order), bits_(bits) {}
    int order_;
    uint64_t bits_;
};

// ---- surgery ----

Graph complement(const Graph& g);
Graph delete_vertex(const Graph& g, int v);  // indices above v shift down
Graph delete_edges(const Graph& g, std::span<const std::pair<int, int>> pairs);
Graph delete_edges(const Graph& g, std::initializer_list<std::pair<int, int>> pairs);
Graph induced(const Graph& g, VertexSet vs);  // relabels ascending
Graph join(const Graph& g, const Graph& h);   // disjoint union + all cross edges
Graph disjoint_union(const Graph& g, const Graph& h);

// every graph from deleting a nonempty subset of `removable`; deterministic
// order (increasing subset bitmask over the given list)
std::vector<Graph> edge_subset_subgraphs(const Graph& g,
                                         std::span<const std::pair<int, int>> removable);

// ---- structure ----

bool is_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g);  // ordered by least vertex
std::optional<int> diameter(const Graph& g);        // nullopt iff disconnected
VertexSet cut_vertices(const Graph& g);

bool is_clique(const Graph& g, VertexSet vs);
VertexSet max_clique(const Graph& g);

// 2-coloring of g if bipartite; per component the least vertex goes to side A
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

// least independent triple, or nullopt when any 3 vertices span an edge
std::optional<VertexSet> palfy_triple_check(const Graph& g);

struct CliqueCoverSizes {
    int large = 0;
    int small = 0;
    friend bool operator==(const CliqueCoverSizes&, const CliqueCoverSizes&) = default;
};
// cover of the vertex set by two cliques, maximizing the larger side; nullopt
// iff the complement is not bipartite
std::optional<CliqueCoverSizes> two_clique_cover(const Graph& g);
std::optional<std::pair<VertexSet, VertexSet>> two_clique_cover_sides(const Graph& g);

// ---- isomorphism ----

// perm[v] = new index of v; perm must be a permutation of 0..order-1
Graph relabel(const Graph& g, std::span<const int> perm);

CanonicalForm canonical_form(const Graph& g);
uint64_t canonical_bits(const Graph& g);  // minimal upper-triangle encoding
// rebuild the graph a minimal encoding describes (inverse of canonical_bits)
Graph graph_from_canonical_bits(int order, uint64_t bits);
Graph canonical_graph(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

// ---- graph6 ----

std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view s);

}  // namespace pcdg
