#pragma once

#include <string>
#include <vector>

#include "pcdg/constructions.hpp"
#include "pcdg/enumerate.hpp"
#include "pcdg/graph.hpp"
#include "pcdg/occurrence.hpp"

namespace pcdg {

// ---- machine-check configuration for the two admissibility eliminations ----

struct SubsetCaseSpec {
    std::string name;                  // e.g. "b-i"
    std::vector<int> vertices;         // subset of the labelled graph
    // expected survivors as edge lists over the original vertex numbering;
    // anything else surviving (or missing) is a failure
    std::vector<std::vector<std::pair<int, int>>> expected_survivors;
};

struct LemmaCheckSpec {
    std::string label;  // "C18" / "C20"
    std::vector<int> strongly_admissible_vertices;
    std::vector<std::pair<int, int>> removable_edges;  // proper-subgraph scan
    std::vector<SubsetCaseSpec> subset_cases;
};

const std::vector<LemmaCheckSpec>& lemma_check_specs();

// ---- report ----

struct ReportEntry {
    std::string label;
    std::string graph6;
    char appendix = '?';
    Verdict verdict = Verdict::Unknown;
    std::string reason;
    std::string recipe;  // empty unless constructed
    friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

struct AdmissibilityResult {
    std::string label;
    int vertex = 0;
    bool strongly_admissible = false;
    friend bool operator==(const AdmissibilityResult&, const AdmissibilityResult&) = default;
};

struct SubgraphScanResult {
    std::string label;
    bool pinned_justified = false;
    bool all_nonoccurring = false;
    int subgraphs = 0;
    friend bool operator==(const SubgraphScanResult&, const SubgraphScanResult&) = default;
};

struct SubsetScanResult {
    std::string label;
    std::string case_name;
    std::vector<int> vertices;
    std::vector<std::string> survivors;  // formatted edge lists
    std::vector<std::string> expected;
    bool matched = false;
    friend bool operator==(const SubsetScanResult&, const SubsetScanResult&) = default;
};

struct ClassificationReport {
    int connected_total = 0;
    int eligible = 0;
    int occurring = 0;
    int non_occurring = 0;
    int unknown = 0;
    std::vector<ReportEntry> entries;
    std::vector<AdmissibilityResult> admissibility;
    std::vector<SubgraphScanResult> subgraph_scans;
    std::vector<SubsetScanResult> subset_scans;
    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

ClassificationReport classify_all(const std::string& data_dir);

std::string report_to_json(const ClassificationReport& rep);
ClassificationReport report_from_json(const std::string& json_text);
std::string report_to_text(const ClassificationReport& rep);

// ---- verification checklist ----

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
    long millis = 0;
};

struct Checklist {
    std::vector<CheckItem> items;
    bool all_pass() const;
};

// run every acceptance check against the data files
Checklist verify_paper(const std::string& data_dir);

}  // namespace pcdg
