#pragma once

#include <map>
#include <string>
#include <vector>

#include "pcdg/graph.hpp"

namespace pcdg {

// one canonical representative per isomorphism class, sorted by
// (edge count, canonical form) for run-to-run determinism
struct GraphCatalog {
    int order = 0;
    std::vector<Graph> graphs;
};

GraphCatalog enumerate_all(int n);        // n in 1..7
GraphCatalog enumerate_connected(int n);

// a connected 7-vertex graph can occur only if its vertex set is covered by
// two cliques (equivalently, its complement is bipartite)
bool eligible_seven(const Graph& g);

enum class AppendixClass { A, B, C };
char appendix_class_letter(AppendixClass c);

// class by the maximal larger cover side: 6 or 7 -> A, 5 -> B, 4 -> C
AppendixClass appendix_class(const Graph& g);

struct LabeledGraph {
    std::string label;
    Graph graph;
};

// `<label> <graph6>` lines; '#' comments
std::vector<LabeledGraph> load_labeled_graph6(const std::string& path);

// Validate the three curated data files against the enumeration: exactly the
// 85 eligible canonical forms, labels A1..A6 / B1..B26 / C1..C53, each in its
// class. Returns label -> graph as transcribed (vertex order preserved).
std::map<std::string, Graph> match_appendix_data(const GraphCatalog& connected7,
                                                 const std::string& data_dir);

}  // namespace pcdg
