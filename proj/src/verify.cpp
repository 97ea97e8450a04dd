#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "pcdg/classify.hpp"

namespace pcdg {

namespace {

using Clock = std::chrono::steady_clock;

struct Runner {
    Checklist list;

    template <typename F>
    void check(const std::string& name, F&& body) {
        CheckItem item;
        item.name = name;
        auto t0 = Clock::now();
        try {
            std::string detail = body();
            item.pass = true;
            item.detail = detail;
        } catch (const std::exception& e) {
            item.pass = false;
            item.detail = e.what();
        }
        item.millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
        list.items.push_back(std::move(item));
    }
};

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

void expect(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
}

// independent oracle: exhaustive permutation search, no canonical forms
bool iso_brute(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (auto [a, b] : g.edges())
            if (!h.has_edge(perm[a], perm[b])) {
                match = false;
                break;
            }
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// second dedup route for small n: pairwise brute-force isomorphism
int count_classes_brute(int n) {
    std::vector<Graph> reps;
    uint64_t total = uint64_t(1) << (n * (n - 1) / 2);
    for (uint64_t mask = 0; mask < total; ++mask) {
        Graph g = Graph::from_adjacency_bits(n, mask);
        bool fresh = std::none_of(reps.begin(), reps.end(),
                                  [&](const Graph& r) { return iso_brute(r, g); });
        if (fresh) reps.push_back(g);
    }
    return int(reps.size());
}

// third implementation of the odd-cycle test: an odd closed walk exists iff
// trace(A^k) > 0 for some odd k <= n
bool has_odd_cycle_matrix(const Graph& g) {
    int n = g.order();
    long long a[10][10] = {}, b[10][10], c[10][10];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = g.has_edge(i, j) ? 1 : 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i][j] = a[i][j];
    for (int k = 1; k <= n; ++k) {
        if (k % 2 == 1) {
            long long tr = 0;
            for (int i = 0; i < n; ++i) tr += b[i][i];
            if (tr > 0) return true;
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long long s = 0;
                for (int l = 0; l < n; ++l) s += b[i][l] * a[l][j];
                c[i][j] = s;
            }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b[i][j] = c[i][j];
    }
    return false;
}

Graph random_graph(std::mt19937& rng, int max_order) {
    int n = 1 + int(rng() % uint32_t(max_order));
    uint64_t total = n < 2 ? 0 : (uint64_t(1) << (n * (n - 1) / 2)) - 1;
    uint64_t bits = (uint64_t(rng()) << 32 | rng()) & total;
    return Graph::from_adjacency_bits(n, bits);
}

std::vector<int> random_perm(std::mt19937& rng, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[int(rng() % uint32_t(i + 1))]);
    return p;
}

FactoredInt fi(std::map<uint64_t, int> m) { return FactoredInt::from_factors(m); }

const std::set<std::string> kOccurringLabels = {
    "A1", "A2", "A3", "A4", "A5", "A6", "B3",  "B4",  "B6",  "B13", "B14",
    "B15", "B16", "B19", "B21", "B23", "B24", "B26", "C26", "C50", "C51", "C53"};
const std::set<std::string> kNonOccurringLabels = {
    "B1", "B2",  "B5",  "C1",  "C2",  "C3",  "C4",  "C5",  "C6", "C7",
    "C9", "C11", "C12", "C14", "C16", "C10", "C17", "C18", "C20"};

}  // namespace

Checklist verify_paper(const std::string& data_dir) {
    Runner r;

    r.check("1-enumeration-counts", [&] {
        const int want_all[] = {1, 2, 4, 11, 34, 156, 1044};
        const int want_conn[] = {1, 1, 2, 6, 21, 112, 853};
        for (int n = 1; n <= 7; ++n) {
            int all = int(enumerate_all(n).graphs.size());
            int conn = int(enumerate_connected(n).graphs.size());
            expect(all == want_all[n - 1], "order " + std::to_string(n) + ": " +
                                               std::to_string(all) + " classes, want " +
                                               std::to_string(want_all[n - 1]));
            expect(conn == want_conn[n - 1], "order " + std::to_string(n) + ": " +
                                                 std::to_string(conn) + " connected, want " +
                                                 std::to_string(want_conn[n - 1]));
        }
        for (int n = 1; n <= 5; ++n)
            expect(count_classes_brute(n) == want_all[n - 1],
                   "pairwise-isomorphism dedup disagrees at order " + std::to_string(n));
        return "853 connected at order 7; orders 1..5 cross-checked by brute-force dedup";
    });

    r.check("2-eligibility-85-and-appendix-split", [&] {
        GraphCatalog conn7 = enumerate_connected(7);
        int eligible = 0, a = 0, b = 0, c = 0;
        for (const Graph& g : conn7.graphs) {
            if (!eligible_seven(g)) continue;
            ++eligible;
            switch (appendix_class(g)) {
                case AppendixClass::A: ++a; break;
                case AppendixClass::B: ++b; break;
                case AppendixClass::C: ++c; break;
            }
        }
        expect(eligible == 85, "eligible = " + std::to_string(eligible));
        expect(a == 6 && b == 26 && c == 53,
               "split = " + std::to_string(a) + "/" + std::to_string(b) + "/" + std::to_string(c));
        match_appendix_data(conn7, data_dir);  // throws on any mismatch
        return "85 eligible, split 6/26/53, bijection with the data files";
    });

    r.check("3-disconnected-classification", [&] {
        KnowledgeBase kb = KnowledgeBase::load(data_dir + "/knowledge_base.facts");
        auto catalog = build_occurring_catalog(data_dir, kb);
        const RecipeResult* g1 = nullptr;
        const RecipeResult* g2 = nullptr;
        for (const auto& res : catalog) {
            if (res.label == "G1") g1 = &res;
            if (res.label == "G2") g2 = &res;
        }
        expect(g1 && g2, "missing disconnected constructions");
        // prime labelings of the two semilinear graphs
        auto comp_primes = [](const RecipeResult& res) {
            std::vector<std::set<uint64_t>> out;
            for (auto comp : components(res.graph)) {
                std::set<uint64_t> ps;
                for (int v : comp.to_vector()) ps.insert((*res.labeling)[v]);
                out.push_back(ps);
            }
            std::sort(out.begin(), out.end(),
                      [](const auto& x, const auto& y) { return x.size() < y.size(); });
            return out;
        };
        auto c1 = comp_primes(*g1);
        expect(c1.size() == 2 && c1[0] == std::set<uint64_t>{3} &&
                   c1[1] == std::set<uint64_t>{7, 73, 2593, 71119, 262657, 97685839},
               "2^81 construction has wrong prime components");
        auto c2 = comp_primes(*g2);
        expect(c2.size() == 2 && c2[0] == std::set<uint64_t>{3, 17} &&
                   c2[1] == std::set<uint64_t>{7, 103, 2143, 11119, 131071},
               "2^51 construction has wrong prime components");
        Status k34 = status(disjoint_union(Graph::complete(3), Graph::complete(4)), kb);
        expect(k34.verdict == Verdict::NonOccurring, "K3+K4 not eliminated");
        expect(k34.reason.find("4 = b < 2^3 - 1 = 7") != std::string::npos,
               "K3+K4 reason is " + k34.reason);
        return "K1+K6 and K2+K5 constructed with prime labels; K3+K4: " + k34.reason;
    });

    r.check("4-constructions", [&] {
        KnowledgeBase kb = KnowledgeBase::load(data_dir + "/knowledge_base.facts");
        auto catalog = build_occurring_catalog(data_dir, kb);  // validates all targets
        expect(catalog.size() == 24, "recipe count = " + std::to_string(catalog.size()));

        expect(verify_factored_value(
                   fi({{7, 1}, {73, 1}, {2593, 1}, {71119, 1}, {262657, 1}, {97685839, 1}}), 2, 81, 1),
               "2^81 - 1 factorization");
        expect(verify_factored_value(fi({{7, 1}, {103, 1}, {2143, 1}, {11119, 1}, {131071, 1}}),
                                     2, 51, 1),
               "2^51 - 1 factorization");
        expect(verify_factored_value(fi({{7, 1}, {79, 1}, {292561, 1}, {74912328481, 1}}), 23, 15, 22),
               "(23^15 - 1)/22 factorization");
        expect(verify_factored_value(fi({{7, 1}, {23, 1}, {89, 1}, {599479, 1}}), 2, 33, 1),
               "2^33 - 1 factorization");
        expect(cyclotomic_coprimality(23, 3, 5), "coprimality (23,3,5)");
        expect(cyclotomic_coprimality(2, 3, 11), "coprimality (2,3,11)");

        // the two diameter-three degree sets, symbol for symbol
        DegreeSet g3 = cd_diameter3(23, 5, {7, 79, 292561, 74912328481});
        const uint64_t s3 = 7, t3 = 79, u3 = 292561, v3 = 74912328481;
        std::vector<FactoredInt> want3 = {
            FactoredInt::one(),
            fi({{3, 1}}),
            fi({{5, 1}}),
            fi({{3, 1}, {5, 1}}),
            fi({{s3, 1}, {t3, 1}, {u3, 1}, {v3, 1}}),
            fi({{23, 7}, {s3, 1}, {t3, 1}, {u3, 1}, {v3, 1}}),
            fi({{3, 1}, {23, 15}, {u3, 1}, {v3, 1}}),
            fi({{23, 12}, {u3, 1}, {v3, 1}}),
            fi({{3, 1}, {23, 12}, {u3, 1}, {v3, 1}}),
            fi({{23, 12}, {s3, 1}, {t3, 1}, {u3, 1}, {v3, 1}}),
            fi({{23, 13}, {s3, 1}, {t3, 1}, {u3, 1}, {v3, 1}}),
        };
        expect(g3 == DegreeSet(want3), "cd(G3) mismatch");

        DegreeSet g4 = cd_diameter3(2, 11, {7, 23, 89, 599479});
        const uint64_t s4 = 7, t4 = 23, u4 = 89, v4 = 599479;
        std::vector<FactoredInt> want4 = {
            FactoredInt::one(),
            fi({{3, 1}}),
            fi({{11, 1}}),
            fi({{3, 1}, {11, 1}}),
            fi({{s4, 1}, {t4, 1}, {u4, 1}, {v4, 1}}),
            fi({{2, 16}, {s4, 1}, {t4, 1}, {u4, 1}, {v4, 1}}),
            fi({{3, 1}, {2, 33}, {t4, 1}, {u4, 1}, {v4, 1}}),
            fi({{2, 30}, {t4, 1}, {u4, 1}, {v4, 1}}),
            fi({{3, 1}, {2, 30}, {t4, 1}, {u4, 1}, {v4, 1}}),
            fi({{2, 30}, {s4, 1}, {t4, 1}, {u4, 1}, {v4, 1}}),
            fi({{2, 31}, {s4, 1}, {t4, 1}, {u4, 1}, {v4, 1}}),
        };
        expect(g4 == DegreeSet(want4), "cd(G4) mismatch");
        expect(g3.size() == 11 && g4.size() == 11, "degree sets must have 11 elements");
        return "24 recipes, factorizations, coprimality, cd(G3)/cd(G4) exact";
    });

    r.check("5-rule-chain-eliminations", [&] {
        KnowledgeBase empty;  // no curated facts at all
        GraphCatalog conn7 = enumerate_connected(7);
        auto by_label = match_appendix_data(conn7, data_dir);

        Status b2 = status(by_label.at("B2"), empty);
        expect(b2.verdict == Verdict::NonOccurring &&
                   b2.reason.find("|rho3|=2<3") != std::string::npos,
               "B2 reason: " + b2.reason);
        for (const char* lab : {"B1", "C1"}) {
            Status s = status(by_label.at(lab), empty);
            expect(s.verdict == Verdict::NonOccurring &&
                       s.reason.find("2 cut vertices") != std::string::npos,
                   std::string(lab) + " reason: " + s.reason);
        }
        for (int i : {1, 2, 3, 4, 5, 6, 7, 9, 11, 12, 14, 16}) {
            const Graph& g = by_label.at("C" + std::to_string(i));
            auto d3 = rule_diameter3(g);
            expect(d3.has_value() && d3->verdict == Verdict::NonOccurring,
                   "C" + std::to_string(i) + " not eliminated by the diameter-three rule");
            bool found_4lt8 = false;
            for (const auto& part : diameter_three_partitions(g)) {
                int n12 = part.rho1.count() + part.rho2.count();
                int n34 = part.rho3.count() + part.rho4.count();
                if (n12 == 3 && n34 == 4) found_4lt8 = true;
            }
            expect(found_4lt8, "C" + std::to_string(i) +
                                   " has no partition with |rho1+rho2|=3, |rho3+rho4|=4");
            expect(status(g, empty).verdict == Verdict::NonOccurring,
                   "C" + std::to_string(i) + " not eliminated by the chain");
        }
        Status b5 = status(by_label.at("B5"), empty);
        expect(b5.reason.find("gamma(5,2)") != std::string::npos, "B5 reason: " + b5.reason);
        Status c17 = status(by_label.at("C17"), empty);
        expect(c17.reason.find("gamma(4,3)") != std::string::npos, "C17 reason: " + c17.reason);
        return "B2 via |rho3|, twelve diameter-three graphs via 4<2^3, B1/C1 via cut "
               "vertices, B5/C17 via the clique-matching family";
    });

    r.check("6-lemma-machine-checks", [&] {
        ClassificationReport rep = classify_all(data_dir);
        for (const auto& a : rep.admissibility)
            expect(a.strongly_admissible, a.label + " p" + std::to_string(a.vertex + 1) +
                                              " not strongly admissible");
        for (const auto& s : rep.subgraph_scans) {
            expect(s.pinned_justified, s.label + ": pinned edges not justified");
            expect(s.all_nonoccurring, s.label + ": some subgraph not eliminated");
        }
        for (const auto& s : rep.subset_scans)
            expect(s.matched, s.label + " case " + s.case_name + ": survivors " +
                                  (s.survivors.empty() ? "{}" : s.survivors[0]) + "... != expected");
        std::ostringstream d;
        d << rep.admissibility.size() << " strong-admissibility checks, "
          << rep.subgraph_scans.size() << " subgraph scans, " << rep.subset_scans.size()
          << " vertex-set cases";
        return d.str();
    });

    r.check("7-final-partition", [&] {
        ClassificationReport rep = classify_all(data_dir);
        expect(rep.occurring == 22 && rep.non_occurring == 19 && rep.unknown == 44,
               "partition " + std::to_string(rep.occurring) + "/" +
                   std::to_string(rep.non_occurring) + "/" + std::to_string(rep.unknown));
        for (const auto& e : rep.entries) {
            Verdict want = kOccurringLabels.count(e.label)      ? Verdict::Occurring
                           : kNonOccurringLabels.count(e.label) ? Verdict::NonOccurring
                                                                : Verdict::Unknown;
            expect(e.verdict == want, e.label + " is " + verdict_name(e.verdict) + ", want " +
                                          verdict_name(want));
        }
        return "22 occurring / 19 non-occurring / 44 unknown, exact label rosters";
    });

    r.check("8-property-suites", [&] {
        std::mt19937 rng(20240817);
        // canonical-form invariance under 1000 random relabelings
        for (int it = 0; it < 1000; ++it) {
            Graph g = random_graph(rng, 7);
            Graph h = relabel(g, random_perm(rng, g.order()));
            expect(canonical_form(g) == canonical_form(h), "canonical form not invariant");
        }
        // complement involution, and isomorphism preserved under complement
        for (int it = 0; it < 200; ++it) {
            Graph g = random_graph(rng, 7);
            expect(complement(complement(g)) == g, "complement not an involution");
            Graph h = relabel(g, random_perm(rng, g.order()));
            expect(is_isomorphic(complement(g), complement(h)),
                   "complement does not preserve isomorphism");
        }
        // bipartite complement <=> no odd cycle in complement <=> two-clique
        // cover, three routes, on every order-7 class
        GraphCatalog all7 = enumerate_all(7);
        for (const Graph& g : all7.graphs) {
            bool cover = two_clique_cover(g).has_value();
            bool bip = bipartition(complement(g)).has_value();
            bool no_odd = !has_odd_cycle_matrix(complement(g));
            expect(cover == bip && bip == no_odd, "cover/bipartite/odd-cycle disagree on " +
                                                      to_graph6(g));
            if (cover)
                expect(!palfy_triple_check(g), "cover exists but an independent triple too");
        }
        // strong admissibility implies admissibility
        KnowledgeBase kb = KnowledgeBase::load(data_dir + "/knowledge_base.facts");
        StatusOracle oracle = make_oracle(kb);
        for (int it = 0; it < 60; ++it) {
            Graph g = random_graph(rng, 7);
            if (g.order() < 2) continue;  // vertex deletion needs order >= 2
            int v = int(rng() % uint32_t(g.order()));
            if (is_strongly_admissible(g, v, oracle).admissible)
                expect(is_admissible(g, v, oracle).admissible,
                       "strongly admissible but not admissible");
        }
        // graph6 round-trip over every enumerated class, orders 1..7
        for (int n = 1; n <= 7; ++n)
            for (const Graph& g : enumerate_all(n).graphs)
                expect(from_graph6(to_graph6(g)) == g, "graph6 round-trip failed");
        return "canonical invariance, involution, cover equivalences on all 1044, "
               "admissibility monotonicity, graph6 round-trips";
    });

    return r.list;
}

}  // namespace pcdg
