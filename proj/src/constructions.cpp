#include "pcdg/constructions.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pcdg/enumerate.hpp"

namespace pcdg {

std::pair<Graph, PrimeLabeling> graph_from_cd(const DegreeSet& ds) {
    std::vector<uint64_t> primes;
    for (const auto& d : ds.degrees())
        for (auto [p, e] : d.factors()) primes.push_back(p);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    if (primes.empty()) throw std::invalid_argument("cd has no primes (cd = {1})");
    if (int(primes.size()) > Graph::kMaxOrder)
        throw std::invalid_argument("cd spans more than 10 primes");

    std::map<uint64_t, int> index;
    for (size_t i = 0; i < primes.size(); ++i) index[primes[i]] = int(i);
    Graph g(int(primes.size()));
    for (const auto& d : ds.degrees()) {
        std::vector<int> verts;
        for (auto [p, e] : d.factors()) verts.push_back(index[p]);
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j)
                if (!g.has_edge(verts[i], verts[j])) g = g.with_edge(verts[i], verts[j]);
    }
    return {g, primes};
}

DegreeSet cd_semilinear(uint64_t q, int n, const FactoredInt& mult_factorization) {
    if (!verify_factored_value(mult_factorization, q, n, 1))
        throw std::invalid_argument("factorization does not equal " + std::to_string(q) + "^" +
                                    std::to_string(n) + " - 1");
    std::vector<FactoredInt> degrees;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) degrees.push_back(FactoredInt::factor_small(uint64_t(d)));
    degrees.push_back(mult_factorization);
    return DegreeSet(std::move(degrees));
}

DegreeSet cd_diameter3(uint64_t p, uint64_t r, const std::array<uint64_t, 4>& stuv) {
    if (!cyclotomic_coprimality(p, 3, r))
        throw std::invalid_argument("Phi_3(p), Phi_r(p), Phi_3r(p) are not pairwise coprime");
    FactoredInt full = FactoredInt::one();
    for (uint64_t x : stuv) {
        if (x == p || x == 3 || x == r)
            throw std::invalid_argument("s,t,u,v must be distinct from p, q=3, r");
        full = full.times(FactoredInt::prime(x));  // rejects non-primes and duplicates
    }
    if (full.factors().size() != 4) throw std::invalid_argument("s,t,u,v must be distinct");
    if (!verify_factored_value(full, p, int(3 * r), p - 1))
        throw std::invalid_argument("s*t*u*v != (p^{3r} - 1)/(p - 1)");

    // p^2 + p + 1 must split over {s,t,u,v}
    uint64_t m = p * p + p + 1;
    FactoredInt mfac = FactoredInt::one();
    uint64_t rem = m;
    for (uint64_t x : stuv)
        while (rem % x == 0) {
            mfac = mfac.times(FactoredInt::prime(x));
            rem /= x;
        }
    if (rem != 1)
        throw std::invalid_argument("p^2 + p + 1 = " + std::to_string(m) +
                                    " does not factor over {s,t,u,v}");
    if (!full.divisible_by(mfac))
        throw std::invalid_argument("p^2 + p + 1 does not divide s*t*u*v");
    FactoredInt quot = full.divide_exact(mfac);

    int e = int(3 * r);
    if ((e - 1) % 2 != 0) throw std::invalid_argument("need r odd");
    FactoredInt three = FactoredInt::prime(3);
    FactoredInt deg_r = FactoredInt::prime(r);
    std::vector<FactoredInt> degrees = {
        three,
        deg_r,
        three.times(deg_r),
        full,
        full.times_power(p, (e - 1) / 2),
        quot.times(three).times_power(p, e),
        quot.times_power(p, e - 3),
        quot.times(three).times_power(p, e - 3),
        full.times_power(p, e - 3),
        full.times_power(p, e - 2),
    };
    return DegreeSet(std::move(degrees));
}

Graph gamma_kt_graph(int k, int t) {
    if (t < 1 || k < t || k + t > Graph::kMaxOrder)
        throw std::invalid_argument("gamma_kt_graph needs k >= t >= 1 and k + t <= 10");
    Graph g = disjoint_union(Graph::complete(k), Graph::complete(t));
    for (int i = 0; i < t; ++i) g = g.with_edge(i, k + i);
    return g;
}

// ---- recipes ----

namespace {

Graph parse_operand(const std::string& tok) {
    if (tok.rfind("g6:", 0) == 0) return from_graph6(tok.substr(3));
    if (tok.rfind("gamma:", 0) == 0) {
        auto comma = tok.find(',', 6);
        if (comma == std::string::npos) throw std::runtime_error("bad gamma operand: " + tok);
        return gamma_kt_graph(std::stoi(tok.substr(6, comma - 6)), std::stoi(tok.substr(comma + 1)));
    }
    // Kn or Kn+Km+...
    std::optional<Graph> acc;
    std::istringstream ss(tok);
    std::string part;
    while (std::getline(ss, part, '+')) {
        if (part.empty() || part[0] != 'K') throw std::runtime_error("bad operand: " + tok);
        Graph k = Graph::complete(std::stoi(part.substr(1)));
        acc = acc ? disjoint_union(*acc, k) : k;
    }
    if (!acc) throw std::runtime_error("empty operand: " + tok);
    return *acc;
}

std::map<std::string, std::string> parse_kv(const std::vector<std::string>& toks, size_t from) {
    std::map<std::string, std::string> kv;
    for (size_t i = from; i < toks.size(); ++i) {
        auto eq = toks[i].find('=');
        if (eq == std::string::npos) throw std::runtime_error("expected key=value: " + toks[i]);
        kv[toks[i].substr(0, eq)] = toks[i].substr(eq + 1);
    }
    return kv;
}

std::vector<uint64_t> parse_u64_list(const std::string& s) {
    std::vector<uint64_t> out;
    std::istringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(std::stoull(part));
    return out;
}

}  // namespace

std::vector<RecipeResult> build_occurring_catalog(const std::string& data_dir,
                                                  const KnowledgeBase& kb) {
    // targets for validation
    std::map<std::string, Graph> targets;
    for (const char* f : {"appendix_a.g6", "appendix_b.g6", "appendix_c.g6"})
        for (const auto& e : load_labeled_graph6(data_dir + "/" + f))
            targets.emplace(e.label, e.graph);
    targets.emplace("G1", disjoint_union(Graph::complete(1), Graph::complete(6)));
    targets.emplace("G2", disjoint_union(Graph::complete(2), Graph::complete(5)));

    std::ifstream in(data_dir + "/constructions.recipes");
    if (!in) throw std::runtime_error("cannot open " + data_dir + "/constructions.recipes");

    std::vector<RecipeResult> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ss >> tok) toks.push_back(tok);
        if (toks.size() < 2) throw std::runtime_error("bad recipe line: " + line);

        RecipeResult res;
        res.label = toks[0];
        res.recipe = line.substr(line.find(' ') + 1);
        const std::string& kind = toks[1];

        if (kind == "gamma") {
            res.graph = gamma_kt_graph(std::stoi(toks.at(2)), std::stoi(toks.at(3)));
        } else if (kind == "complete") {
            res.graph = Graph::complete(std::stoi(toks.at(2)));
        } else if (kind == "join") {
            std::optional<Graph> acc;
            for (size_t i = 2; i < toks.size(); ++i) {
                Graph op = parse_operand(toks[i]);
                Status s = status(op, kb);
                if (s.verdict != Verdict::Occurring)
                    throw std::runtime_error(res.label + ": join operand " + toks[i] +
                                             " is not known to occur (" + verdict_name(s.verdict) +
                                             ")");
                acc = acc ? join(*acc, op) : op;
            }
            res.graph = *acc;
        } else if (kind == "diam3") {
            auto kv = parse_kv(toks, 2);
            auto primes = parse_u64_list(kv.at("stuv"));
            if (primes.size() != 4) throw std::runtime_error(res.label + ": need 4 primes");
            std::array<uint64_t, 4> stuv{primes[0], primes[1], primes[2], primes[3]};
            DegreeSet cd = cd_diameter3(std::stoull(kv.at("p")), std::stoull(kv.at("r")), stuv);
            auto [g, labeling] = graph_from_cd(cd);
            res.graph = g;
            res.cd = cd;
            res.labeling = labeling;
        } else if (kind == "semilinear") {
            auto kv = parse_kv(toks, 2);
            FactoredInt mult = FactoredInt::one();
            for (uint64_t x : parse_u64_list(kv.at("factors")))
                mult = mult.times(FactoredInt::prime(x));
            DegreeSet cd =
                cd_semilinear(std::stoull(kv.at("q")), std::stoi(kv.at("n")), mult);
            auto [g, labeling] = graph_from_cd(cd);
            res.graph = g;
            res.cd = cd;
            res.labeling = labeling;
        } else {
            throw std::runtime_error("unknown recipe kind: " + kind);
        }

        auto it = targets.find(res.label);
        if (it == targets.end()) throw std::runtime_error("recipe for unknown label " + res.label);
        if (!is_isomorphic(res.graph, it->second))
            throw std::runtime_error(res.label + ": recipe output does not match the target graph");
        out.push_back(std::move(res));
    }
    return out;
}

}  // namespace pcdg
