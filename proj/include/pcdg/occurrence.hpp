#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcdg/graph.hpp"

namespace pcdg {

enum class Verdict { Occurring, NonOccurring, Unknown };
const char* verdict_name(Verdict v);

struct Status {
    Verdict verdict = Verdict::Unknown;
    std::string reason;  // rule name / source tag; empty for Unknown
};

// ---- curated facts ----

struct Fact {
    Verdict verdict;
    std::string source;
};

// Canonical-form-keyed store of curated facts from the classification
// literature. The loader rejects duplicates, orders > 7, and any fact that
// contradicts the rule chain.
class KnowledgeBase {
public:
    static KnowledgeBase load(const std::string& path);

    void add(const Graph& g, Verdict v, const std::string& source);
    const Fact* find(const Graph& g) const;
    size_t size() const { return facts_.size(); }

private:
    std::map<CanonicalForm, Fact> facts_;
};

// ---- rules ----
// each returns a decisive status or nullopt

std::optional<Status> rule_palfy(const Graph& g);
std::optional<Status> rule_odd_cycle(const Graph& g);
std::optional<Status> rule_disconnected(const Graph& g);
std::optional<Status> rule_cut_vertices(const Graph& g);
std::optional<Status> rule_diameter3(const Graph& g);
std::optional<Status> rule_gamma_kt(const Graph& g);

// (k,t) with k >= t >= 1 iff g is two cliques of sizes k,t plus a perfect
// matching from the t-clique into the k-clique
std::optional<std::pair<int, int>> recognize_gamma_kt(const Graph& g);

// distance strata from a basepoint with an eccentricity-3 partner
struct DiameterThreePartition {
    int basepoint = 0;
    VertexSet rho1, rho2, rho3, rho4;
};
std::vector<DiameterThreePartition> diameter_three_partitions(const Graph& g);

// per-partition outcome of the three diameter-three tests; empty() means the
// partition satisfies all of them
struct PartitionViolation {
    int basepoint = 0;
    std::string detail;  // e.g. "|rho3|=2<3"
};

// rule chain in fixed order, then knowledge-base lookup; throws on a
// rule/fact verdict conflict (bad curated fact)
Status status(const Graph& g, const KnowledgeBase& kb);

// debug mode: evaluate every rule and the kb, assert all decisive answers
// agree; returns the chain result
Status status_checked(const Graph& g, const KnowledgeBase& kb);

using StatusOracle = std::function<Status(const Graph&)>;
StatusOracle make_oracle(const KnowledgeBase& kb);

// ---- admissibility ----

struct TraceEntry {
    std::string operation;  // e.g. "delete p4" or "delete edges {(0,3),(2,3)}"
    std::string graph6;
    Status status;
};

struct AdmissibilityTrace {
    bool admissible = false;
    std::vector<TraceEntry> entries;  // every subgraph consulted, with verdicts
};

// vertex v is admissible iff deleting v, and deleting every nonempty subset
// of its incident edges, all yield non-occurring graphs. Unknown verdicts
// block the claim (recorded in the trace).
AdmissibilityTrace is_admissible(const Graph& g, int v, const StatusOracle& oracle);

// strongly admissible adds: after deleting v, every nonempty subset of the
// edges between former neighbors of v also yields a non-occurring graph
AdmissibilityTrace is_strongly_admissible(const Graph& g, int v, const StatusOracle& oracle);

// ---- proof scans ----

struct SubgraphScanReport {
    bool pinned_justified = false;   // each pinned edge's removal violates a
                                     // deletion-monotone rule (palfy/odd-cycle)
    bool all_nonoccurring = false;
    std::vector<TraceEntry> pinned;  // one entry per pinned edge
    std::vector<TraceEntry> scanned; // one entry per removable-edge subset
};

// statuses of every deletion of a nonempty subset of `removable`; the
// remaining edges must be pinned by a monotone rule, proven in the pre-pass
SubgraphScanReport proper_subgraph_scan(const Graph& g,
                                        std::span<const std::pair<int, int>> removable,
                                        const StatusOracle& oracle);

struct SubsetScanSurvivor {
    std::vector<std::pair<int, int>> edges;  // in g's vertex numbering
    bool connected = false;
    Status status;
};

struct SubsetScanReport {
    VertexSet subset;
    int candidates = 0;  // 2^edges(induced)
    int eliminated_connected = 0;
    int eliminated_disconnected = 0;
    std::vector<SubsetScanSurvivor> survivors;  // candidates not ruled out
};

// every spanning subgraph of induced(g, vs), split into survivors and
// eliminated; survivors are candidates the oracle does not rule out
SubsetScanReport vertex_subset_occurrence_scan(const Graph& g, VertexSet vs,
                                               const StatusOracle& oracle);

}  // namespace pcdg
