#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "pcdg/enumerate.hpp"
#include "test_util.hpp"

using namespace pcdg;
using pcdg::test::iso_brute;

namespace {

// second dedup route, independent of canonical forms
int count_classes_brute(int n, bool connected_only) {
    std::vector<Graph> reps;
    uint64_t total = uint64_t(1) << (n * (n - 1) / 2);
    for (uint64_t mask = 0; mask < total; ++mask) {
        Graph g = Graph::from_adjacency_bits(n, mask);
        if (connected_only && !is_connected(g)) continue;
        bool fresh = true;
        for (const Graph& r : reps)
            if (iso_brute(r, g)) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(g);
    }
    return int(reps.size());
}

}  // namespace

TEST_CASE("class counts per order") {
    const int want_all[] = {1, 2, 4, 11, 34, 156, 1044};
    const int want_conn[] = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        CHECK(int(enumerate_all(n).graphs.size()) == want_all[n - 1]);
        CHECK(int(enumerate_connected(n).graphs.size()) == want_conn[n - 1]);
    }
    // cross-check small orders with the pairwise-isomorphism oracle
    for (int n = 1; n <= 5; ++n) {
        CHECK(count_classes_brute(n, false) == want_all[n - 1]);
        CHECK(count_classes_brute(n, true) == want_conn[n - 1]);
    }
    CHECK_THROWS(enumerate_all(0));
    CHECK_THROWS(enumerate_all(8));
}

TEST_CASE("catalog entries are canonical and deterministically ordered") {
    GraphCatalog cat = enumerate_all(6);
    for (const Graph& g : cat.graphs) CHECK(canonical_graph(g) == g);
    for (size_t i = 1; i < cat.graphs.size(); ++i) {
        CHECK(cat.graphs[i - 1].edge_count() <= cat.graphs[i].edge_count());
        CHECK(!is_isomorphic(cat.graphs[i - 1], cat.graphs[i]));
    }
}

TEST_CASE("eligibility at order seven") {
    GraphCatalog conn = enumerate_connected(7);
    int eligible = 0;
    int split[3] = {0, 0, 0};
    for (const Graph& g : conn.graphs) {
        bool ok = eligible_seven(g);
        // the eligibility test is exactly complement bipartiteness
        CHECK(ok == bipartition(complement(g)).has_value());
        if (!ok) continue;
        ++eligible;
        ++split[int(appendix_class(g))];
    }
    CHECK(eligible == 85);
    CHECK(split[0] == 6);
    CHECK(split[1] == 26);
    CHECK(split[2] == 53);

    CHECK(eligible_seven(Graph::complete(7)));
    Graph c7 = Graph(7);
    for (int i = 0; i < 7; ++i) c7 = c7.with_edge(i, (i + 1) % 7);
    CHECK(!eligible_seven(c7));  // the 7-cycle has an independent triple
    CHECK(palfy_triple_check(c7).has_value());
    CHECK_THROWS(eligible_seven(Graph::complete(6)));
}

TEST_CASE("appendix data matches the enumeration") {
    auto by_label = match_appendix_data(enumerate_connected(7), PCDG_DATA_DIR);
    CHECK(by_label.size() == 85);
    CHECK(is_isomorphic(by_label.at("A6"), Graph::complete(7)));
    CHECK(appendix_class(by_label.at("A1")) == AppendixClass::A);
    CHECK(appendix_class(by_label.at("C17")) == AppendixClass::C);

    // appendix A: a 6-clique plus 1..6 pendant-side edges
    std::multiset<int> edge_counts;
    for (int i = 1; i <= 6; ++i)
        edge_counts.insert(by_label.at("A" + std::to_string(i)).edge_count());
    CHECK(edge_counts == std::multiset<int>{16, 17, 18, 19, 20, 21});
}

TEST_CASE("appendix validation rejects corrupted data") {
    // copy the data files, then break them in targeted ways
    auto copy_data = [](const std::string& dst, const std::string& mutate_label,
                        const std::string& replacement_line) {
        for (const char* f : {"appendix_a.g6", "appendix_b.g6", "appendix_c.g6"}) {
            std::ifstream in(std::string(PCDG_DATA_DIR) + "/" + f);
            std::ofstream out(dst + "/" + f);
            std::string line;
            while (std::getline(in, line)) {
                if (!mutate_label.empty() && line.rfind(mutate_label + " ", 0) == 0)
                    out << replacement_line << "\n";
                else
                    out << line << "\n";
            }
        }
    };
    GraphCatalog conn = enumerate_connected(7);

    std::string dir = "./tmp_appendix_test";
    std::filesystem::create_directories(dir);

    SUBCASE("duplicate graph under two labels") {
        auto a1 = load_labeled_graph6(std::string(PCDG_DATA_DIR) + "/appendix_a.g6");
        copy_data(dir, "A2", "A2 " + to_graph6(a1[0].graph));
        CHECK_THROWS_WITH(match_appendix_data(conn, dir), doctest::Contains("duplicate graph"));
    }
    SUBCASE("mutated edge moves a graph out of its class") {
        // replace C1 by a graph that is not even eligible (the 7-cycle)
        Graph c7 = Graph(7);
        for (int i = 0; i < 7; ++i) c7 = c7.with_edge(i, (i + 1) % 7);
        copy_data(dir, "C1", "C1 " + to_graph6(c7));
        CHECK_THROWS(match_appendix_data(conn, dir));
    }
    SUBCASE("missing label") {
        copy_data(dir, "B26", "# removed");
        CHECK_THROWS_WITH(match_appendix_data(conn, dir), doctest::Contains("B26"));
    }
}
