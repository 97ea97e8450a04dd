#include "pcdg/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace pcdg {

namespace {

void sort_catalog(GraphCatalog& cat) {
    // entries are canonical representatives, so the identity labeling already
    // realizes the minimal encoding; re-encode it for the sort key
    auto encoding = [](const Graph& g) {
        uint64_t bits = 0;
        for (int j = 1; j < g.order(); ++j)
            for (int i = 0; i < j; ++i) bits = bits << 1 | (g.has_edge(i, j) ? 1 : 0);
        return bits;
    };
    std::sort(cat.graphs.begin(), cat.graphs.end(), [&](const Graph& a, const Graph& b) {
        if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
        return encoding(a) < encoding(b);
    });
}

GraphCatalog enumerate_all_uncached(int n);

// the catalogs are pure values; keep them after the first computation
const GraphCatalog& cached_catalog(int n) {
    static std::mutex mu;
    static std::map<int, GraphCatalog> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, enumerate_all_uncached(n)).first;
    return it->second;
}

GraphCatalog enumerate_all_uncached(int n) {
    // brute force over all labeled graphs, dedup by canonical form; sharded
    // (dedup merge is order-independent, final sort restores determinism)
    uint64_t count = uint64_t(1) << (n * (n - 1) / 2);
    unsigned shards = n >= 7 ? std::max(2u, std::thread::hardware_concurrency()) : 1;
    std::vector<std::unordered_set<uint64_t>> seen(shards);
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < shards; ++t) {
        workers.emplace_back([&, t] {
            for (uint64_t mask = t; mask < count; mask += shards)
                seen[t].insert(canonical_bits(Graph::from_adjacency_bits(n, mask)));
        });
    }
    for (auto& w : workers) w.join();
    std::unordered_set<uint64_t> merged;
    for (auto& s : seen) merged.insert(s.begin(), s.end());
    GraphCatalog cat;
    cat.order = n;
    for (uint64_t bits : merged) cat.graphs.push_back(graph_from_canonical_bits(n, bits));
    sort_catalog(cat);
    return cat;
}

}  // namespace

GraphCatalog enumerate_all(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("enumeration supports orders 1..7");
    return cached_catalog(n);
}

GraphCatalog enumerate_connected(int n) {
    GraphCatalog all = enumerate_all(n);
    GraphCatalog cat;
    cat.order = n;
    for (const Graph& g : all.graphs)
        if (is_connected(g)) cat.graphs.push_back(g);
    return cat;
}

bool eligible_seven(const Graph& g) {
    if (g.order() != 7) throw std::invalid_argument("eligibility is defined for order 7");
    if (!is_connected(g)) throw std::invalid_argument("eligibility is defined for connected graphs");
    return two_clique_cover(g).has_value();
}

char appendix_class_letter(AppendixClass c) {
    switch (c) {
        case AppendixClass::A: return 'A';
        case AppendixClass::B: return 'B';
        case AppendixClass::C: return 'C';
    }
    return '?';
}

AppendixClass appendix_class(const Graph& g) {
    auto cov = two_clique_cover(g);
    if (g.order() != 7 || !cov) throw std::invalid_argument("not an eligible 7-vertex graph");
    switch (cov->large) {
        case 7:  // K7, filed under A
        case 6: return AppendixClass::A;
        case 5: return AppendixClass::B;
        case 4: return AppendixClass::C;
        default:
            throw std::logic_error("impossible cover size " + std::to_string(cov->large));
    }
}

std::vector<LabeledGraph> load_labeled_graph6(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<LabeledGraph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string label, g6;
        if (!(ss >> label >> g6)) throw std::runtime_error(path + ": bad line: " + line);
        out.push_back({label, from_graph6(g6)});
    }
    return out;
}

std::map<std::string, Graph> match_appendix_data(const GraphCatalog& connected7,
                                                 const std::string& data_dir) {
    if (connected7.order != 7) throw std::invalid_argument("need the order-7 connected catalog");

    std::vector<LabeledGraph> entries;
    for (const char* f : {"appendix_a.g6", "appendix_b.g6", "appendix_c.g6"}) {
        auto part = load_labeled_graph6(data_dir + "/" + f);
        entries.insert(entries.end(), part.begin(), part.end());
    }

    // expected label sets
    std::vector<std::string> expected;
    for (int i = 1; i <= 6; ++i) expected.push_back("A" + std::to_string(i));
    for (int i = 1; i <= 26; ++i) expected.push_back("B" + std::to_string(i));
    for (int i = 1; i <= 53; ++i) expected.push_back("C" + std::to_string(i));

    std::map<std::string, Graph> by_label;
    std::map<CanonicalForm, std::string> by_form;
    for (const auto& e : entries) {
        if (std::find(expected.begin(), expected.end(), e.label) == expected.end())
            throw std::runtime_error("unexpected label " + e.label);
        if (!by_label.emplace(e.label, e.graph).second)
            throw std::runtime_error("duplicate label " + e.label);
        auto cf = canonical_form(e.graph);
        auto [it, fresh] = by_form.emplace(cf, e.label);
        if (!fresh)
            throw std::runtime_error("duplicate graph: " + e.label + " is isomorphic to " +
                                     it->second);
        try {
            if (!eligible_seven(e.graph))
                throw std::runtime_error("not coverable by two cliques");
            if (appendix_class_letter(appendix_class(e.graph)) != e.label[0])
                throw std::runtime_error("wrong appendix class");
        } catch (const std::exception& ex) {
            throw std::runtime_error(e.label + ": " + ex.what());
        }
    }
    for (const auto& lab : expected)
        if (!by_label.count(lab)) throw std::runtime_error("missing label " + lab);

    // bijection with the eligible subset of the enumeration
    size_t eligible = 0;
    for (const Graph& g : connected7.graphs) {
        if (!eligible_seven(g)) continue;
        ++eligible;
        if (!by_form.count(canonical_form(g)))
            throw std::runtime_error("eligible graph missing from data files: " + to_graph6(g));
    }
    if (eligible != entries.size())
        throw std::runtime_error("eligible count " + std::to_string(eligible) +
                                 " != data file count " + std::to_string(entries.size()));
    return by_label;
}

}  // namespace pcdg
