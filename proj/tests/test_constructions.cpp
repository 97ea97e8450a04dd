#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "pcdg/constructions.hpp"
#include "pcdg/enumerate.hpp"
#include "test_util.hpp"

using namespace pcdg;

namespace {

const std::string kData = PCDG_DATA_DIR;

FactoredInt fi(std::map<uint64_t, int> m) { return FactoredInt::from_factors(m); }

Graph appendix(const std::string& label) {
    const char* file = label[0] == 'A'   ? "/appendix_a.g6"
                       : label[0] == 'B' ? "/appendix_b.g6"
                                         : "/appendix_c.g6";
    for (const auto& e : load_labeled_graph6(kData + file))
        if (e.label == label) return e.graph;
    FAIL("no such label ", label);
    return Graph(1);
}

}  // namespace

TEST_CASE("primality") {
    for (uint64_t p : {2ull, 3ull, 7ull, 79ull, 131071ull, 262657ull, 292561ull, 599479ull,
                       97685839ull, 74912328481ull})
        CHECK(is_prime_u64(p));
    for (uint64_t c : {1ull, 4ull, 91ull, 131072ull, 74912328483ull}) CHECK(!is_prime_u64(c));
}

TEST_CASE("factored integers") {
    CHECK(FactoredInt::one().to_string() == "1");
    CHECK(fi({{23, 15}, {3, 1}}).to_string() == "3*23^15");
    CHECK(FactoredInt::factor_small(51) == fi({{3, 1}, {17, 1}}));
    CHECK(FactoredInt::factor_small(81) == fi({{3, 4}}));
    CHECK_THROWS(FactoredInt::prime(91));  // 7*13
    CHECK_THROWS(fi({{4, 1}}));

    FactoredInt stuv = fi({{7, 1}, {79, 1}, {292561, 1}, {74912328481, 1}});
    FactoredInt st = fi({{7, 1}, {79, 1}});
    CHECK(stuv.divisible_by(st));
    CHECK(stuv.divide_exact(st) == fi({{292561, 1}, {74912328481, 1}}));
    CHECK_THROWS(st.divide_exact(stuv));
    CHECK(uint64_t(fi({{2, 10}}).value()) == 1024);
}

TEST_CASE("factored value checks") {
    CHECK(verify_factored_value(
        fi({{7, 1}, {73, 1}, {2593, 1}, {71119, 1}, {262657, 1}, {97685839, 1}}), 2, 81, 1));
    CHECK(verify_factored_value(fi({{7, 1}, {103, 1}, {2143, 1}, {11119, 1}, {131071, 1}}), 2, 51, 1));
    CHECK(verify_factored_value(fi({{7, 1}, {79, 1}, {292561, 1}, {74912328481, 1}}), 23, 15, 22));
    CHECK(verify_factored_value(fi({{7, 1}, {23, 1}, {89, 1}, {599479, 1}}), 2, 33, 1));
    // wrong factor fails
    CHECK(!verify_factored_value(fi({{11, 1}, {73, 1}, {2593, 1}, {71119, 1}, {262657, 1},
                                     {97685839, 1}}),
                                 2, 81, 1));
}

TEST_CASE("cyclotomic coprimality") {
    CHECK(cyclotomic_coprimality(23, 3, 5));
    CHECK(cyclotomic_coprimality(2, 3, 11));
    CHECK_THROWS(cyclotomic_coprimality(2, 3, 3));   // q < r violated
    CHECK_THROWS(cyclotomic_coprimality(2, 4, 11));  // q not prime
}

TEST_CASE("semilinear degree sets") {
    FactoredInt m81 = fi({{7, 1}, {73, 1}, {2593, 1}, {71119, 1}, {262657, 1}, {97685839, 1}});
    DegreeSet g1 = cd_semilinear(2, 81, m81);
    CHECK(g1.size() == 6);  // {1, 3, 9, 27, 81, 2^81-1}
    CHECK(g1.contains(fi({{3, 4}})));
    CHECK(g1.contains(m81));

    FactoredInt m51 = fi({{7, 1}, {103, 1}, {2143, 1}, {11119, 1}, {131071, 1}});
    DegreeSet g2 = cd_semilinear(2, 51, m51);
    CHECK(g2.size() == 5);  // {1, 3, 17, 51, 2^51-1}
    CHECK(g2.contains(fi({{3, 1}, {17, 1}})));

    // divisors of 1: just {1, q-1}
    DegreeSet t = cd_semilinear(5, 1, fi({{2, 2}}));
    CHECK(t.size() == 2);
    CHECK(t.contains(fi({{2, 2}})));

    CHECK_THROWS(cd_semilinear(2, 81, m51));  // mismatched factorization
}

TEST_CASE("diameter-three degree sets match the published displays") {
    const uint64_t s3 = 7, t3 = 79, u3 = 292561, v3 = 74912328481;
    DegreeSet g3 = cd_diameter3(23, 5, {s3, t3, u3, v3});
    std::vector<FactoredInt> want3 = {
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
    CHECK(g3 == DegreeSet(want3));  // 23^2+23+1 = 553 = 7*79, so the quotient is u*v

    const uint64_t s4 = 7, t4 = 23, u4 = 89, v4 = 599479;
    DegreeSet g4 = cd_diameter3(2, 11, {s4, t4, u4, v4});
    std::vector<FactoredInt> want4 = {
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
    CHECK(g4 == DegreeSet(want4));  // 2^2+2+1 = 7 = s, so the quotient is t*u*v

    CHECK_THROWS(cd_diameter3(23, 5, {7, 79, 292561, 11}));  // wrong prime set
}

TEST_CASE("the constructions pass the very rules that eliminate others") {
    for (auto& [g, cd] : {std::pair{appendix("B3"), cd_diameter3(23, 5, {7, 79, 292561, 74912328481})},
                          std::pair{appendix("B4"), cd_diameter3(2, 11, {7, 23, 89, 599479})}}) {
        auto [built, labeling] = graph_from_cd(cd);
        CHECK(built.order() == 7);
        CHECK(diameter(built) == 3);
        CHECK(is_isomorphic(built, g));
        CHECK(!rule_diameter3(built).has_value());  // some partition satisfies all tests
        CHECK(!rule_palfy(built).has_value());
        CHECK(!rule_odd_cycle(built).has_value());
    }
}

TEST_CASE("graph_from_cd") {
    FactoredInt m51 = fi({{7, 1}, {103, 1}, {2143, 1}, {11119, 1}, {131071, 1}});
    auto [g2, primes2] = graph_from_cd(cd_semilinear(2, 51, m51));
    CHECK(is_isomorphic(g2, disjoint_union(Graph::complete(2), Graph::complete(5))));
    auto comps = components(g2);
    REQUIRE(comps.size() == 2);
    std::set<uint64_t> small, large;
    for (int v : comps[0].to_vector()) (comps[0].count() == 2 ? small : large).insert(primes2[v]);
    for (int v : comps[1].to_vector()) (comps[1].count() == 2 ? small : large).insert(primes2[v]);
    CHECK(small == std::set<uint64_t>{3, 17});
    CHECK(large == std::set<uint64_t>{7, 103, 2143, 11119, 131071});

    CHECK_THROWS(graph_from_cd(DegreeSet{}));  // cd = {1}

    // adding a degree whose primes are already mutually adjacent changes nothing
    DegreeSet g3 = cd_diameter3(23, 5, {7, 79, 292561, 74912328481});
    auto [base, labeling] = graph_from_cd(g3);
    auto degs = g3.degrees();
    degs.push_back(fi({{3, 1}, {23, 1}}));  // 3 and 23 are adjacent via 3*23^15*u*v
    auto [extended, labeling2] = graph_from_cd(DegreeSet(degs));
    CHECK(extended == base);
}

TEST_CASE("gamma graphs invert") {
    for (int t = 1; t <= 5; ++t)
        for (int k = t; k + t <= 10; ++k)
            CHECK(recognize_gamma_kt(gamma_kt_graph(k, t)) == std::pair{k, t});
    CHECK(gamma_kt_graph(1, 1) == Graph::complete(2));
    CHECK(is_isomorphic(gamma_kt_graph(6, 1), appendix("A1")));
    CHECK(is_isomorphic(gamma_kt_graph(4, 3), appendix("C17")));
    CHECK_THROWS(gamma_kt_graph(0, 0));
    CHECK_THROWS(gamma_kt_graph(9, 2));
}

TEST_CASE("the full recipe catalog") {
    KnowledgeBase kb = KnowledgeBase::load(kData + "/knowledge_base.facts");
    auto catalog = build_occurring_catalog(kData, kb);
    CHECK(catalog.size() == 24);

    std::set<std::string> labels;
    for (const auto& r : catalog) labels.insert(r.label);
    for (const char* l : {"A1", "A6", "B3", "B4", "B15", "C26", "C53", "G1", "G2"})
        CHECK(labels.count(l));

    // spot-check the recipes named in the write-up
    for (const auto& r : catalog) {
        if (r.label == "A3")
            CHECK(is_isomorphic(r.graph, join(Graph::complete(2), gamma_kt_graph(4, 1))));
        if (r.label == "B15") {
            REQUIRE(!r.cd.has_value());
            Graph l26 = delete_vertex(r.graph, [&] {
                for (int v = 0; v < 7; ++v)
                    if (r.graph.degree(v) == 6) return v;
                return -1;
            }());
            CHECK(diameter(l26) == 3);
        }
        if (r.label == "G1") {
            REQUIRE(r.cd.has_value());
            CHECK(r.cd->size() == 6);
        }
    }

    SUBCASE("recipe validation rejects a wrong join") {
        std::string dir = "./tmp_recipes_test";
        std::filesystem::create_directories(dir);
        for (const char* f : {"appendix_a.g6", "appendix_b.g6", "appendix_c.g6",
                              "knowledge_base.facts"})
            std::filesystem::copy_file(kData + "/" + f, dir + "/" + std::string(f),
                                       std::filesystem::copy_options::overwrite_existing);
        std::ofstream out(dir + "/constructions.recipes");
        out << "A3 join gamma:4,1 K1\n";  // wrong order: builds a 6-vertex graph
        out.close();
        CHECK_THROWS(build_occurring_catalog(dir, kb));
    }
}
