#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pcdg/factored.hpp"
#include "pcdg/graph.hpp"
#include "pcdg/occurrence.hpp"

namespace pcdg {

// vertex index -> prime, ascending
using PrimeLabeling = std::vector<uint64_t>;

// vertices are the primes dividing some degree; edge pq iff some degree is
// divisible by both p and q. Errors when cd = {1} (no primes).
std::pair<Graph, PrimeLabeling> graph_from_cd(const DegreeSet& ds);

// field of order q^n acted on by its multiplication group then Galois group:
// cd = divisors of n plus q^n - 1 (supplied factored and verified)
DegreeSet cd_semilinear(uint64_t q, int n, const FactoredInt& mult_factorization);

// diameter-three construction with q = 3; stuv are the four primes of
// (p^{3r} - 1)/(p - 1)
DegreeSet cd_diameter3(uint64_t p, uint64_t r, const std::array<uint64_t, 4>& stuv);

// two cliques of sizes k >= t >= 1 plus a perfect matching from the t-clique
Graph gamma_kt_graph(int k, int t);

struct RecipeResult {
    std::string label;      // A1..A6, B…, C…, or G1/G2 for the disconnected pair
    std::string recipe;     // the recipe line as read
    Graph graph;
    std::optional<DegreeSet> cd;           // set for cd-based recipes
    std::optional<PrimeLabeling> labeling; // likewise
};

// Build every occurring graph from data/constructions.recipes and assert each
// matches its target: the labelled appendix graph, or K1+K6 / K2+K5 for the
// disconnected constructions. Join operands must be Occurring per the oracle.
std::vector<RecipeResult> build_occurring_catalog(const std::string& data_dir,
                                                  const KnowledgeBase& kb);

}  // namespace pcdg
