#include "pcdg/classify.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pcdg {

// ---- lemma-check configuration ----
// vertex i of the labelled data-file graph is p_{i+1} of the standard drawing

const std::vector<LemmaCheckSpec>& lemma_check_specs() {
    auto k3 = [](std::vector<std::pair<int, int>> extra) {
        std::vector<std::pair<int, int>> v{{0, 1}, {0, 2}, {1, 2}};
        v.insert(v.end(), extra.begin(), extra.end());
        return v;
    };
    static const std::vector<LemmaCheckSpec> specs = {
        {
            "C18",
            {0, 2, 3, 4, 5, 6},            // p1, p3..p7
            {{0, 3}, {2, 3}, {1, 4}},      // e(p1,p4), e(p3,p4), e(p2,p5)
            {
                {"b-i", {0, 1, 4, 5, 6}, {{{0, 1}, {4, 5}, {4, 6}, {5, 6}}}},
                {"b-ii", {0, 1, 2, 4, 5, 6}, {}},
                {"b-iii",
                 {0, 1, 3, 4, 5, 6},
                 {{{0, 1}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}}}},
                {"d-i", {0, 1, 2, 6}, {k3({})}},
                {"d-ii", {0, 1, 2, 3, 6}, {k3({{3, 6}})}},
                {"d-iii", {0, 1, 2, 4, 6}, {k3({{4, 6}})}},
                {"d-iv", {0, 1, 2, 5, 6}, {k3({{5, 6}})}},
                {"d-v", {0, 1, 2, 3, 4, 6}, {}},
                {"d-vi", {0, 1, 2, 3, 5, 6}, {}},
                {"d-vii", {0, 1, 2, 4, 5, 6}, {}},
            },
        },
        {
            "C20",
            {2, 3, 4, 5, 6},                         // p3..p7
            {{0, 5}, {1, 6}, {2, 3}, {2, 4}},        // e(p1,p6), e(p2,p7), e(p3,p4), e(p3,p5)
            {
                {"b", {0, 1, 2, 3, 4, 6}, {}},
                {"c", {0, 1, 2, 3, 4, 5}, {}},
                {"d-i", {0, 1, 2, 5, 6}, {k3({{5, 6}})}},
                {"d-ii", {0, 1, 2, 3, 5, 6}, {}},
                {"d-iii", {0, 1, 2, 4, 5, 6}, {}},
                {"e-i", {0, 1, 2, 3, 4, 5}, {}},
                {"e-ii", {0, 1, 2, 3, 6}, {k3({{3, 6}})}},
                {"e-iii", {0, 1, 2, 4, 6}, {k3({{4, 6}})}},
                {"e-iv", {0, 1, 2, 5, 6}, {k3({{5, 6}})}},
            },
        },
    };
    return specs;
}

namespace {

std::string edges_to_string(const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::pair<int, int>> sorted = edges;
    for (auto& [a, b] : sorted)
        if (a > b) std::swap(a, b);
    std::sort(sorted.begin(), sorted.end());
    std::string s = "{";
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (i) s += ",";
        s += "(" + std::to_string(sorted[i].first) + "," + std::to_string(sorted[i].second) + ")";
    }
    return s + "}";
}

std::vector<std::string> expected_labels() {
    std::vector<std::string> out;
    for (int i = 1; i <= 6; ++i) out.push_back("A" + std::to_string(i));
    for (int i = 1; i <= 26; ++i) out.push_back("B" + std::to_string(i));
    for (int i = 1; i <= 53; ++i) out.push_back("C" + std::to_string(i));
    return out;
}

void run_lemma_checks(const std::map<std::string, Graph>& by_label, const KnowledgeBase& kb,
                      ClassificationReport& rep) {
    StatusOracle oracle = make_oracle(kb);
    for (const auto& spec : lemma_check_specs()) {
        const Graph& g = by_label.at(spec.label);
        for (int v : spec.strongly_admissible_vertices) {
            auto tr = is_strongly_admissible(g, v, oracle);
            rep.admissibility.push_back({spec.label, v, tr.admissible});
        }
        auto scan = proper_subgraph_scan(g, spec.removable_edges, oracle);
        rep.subgraph_scans.push_back({spec.label, scan.pinned_justified, scan.all_nonoccurring,
                                      int(scan.scanned.size())});
        for (const auto& cs : spec.subset_cases) {
            VertexSet vs;
            for (int v : cs.vertices) vs = vs.with(v);
            auto sub = vertex_subset_occurrence_scan(g, vs, oracle);
            SubsetScanResult r;
            r.label = spec.label;
            r.case_name = cs.name;
            r.vertices = cs.vertices;
            for (const auto& surv : sub.survivors) r.survivors.push_back(edges_to_string(surv.edges));
            for (const auto& exp : cs.expected_survivors) r.expected.push_back(edges_to_string(exp));
            std::sort(r.survivors.begin(), r.survivors.end());
            std::sort(r.expected.begin(), r.expected.end());
            r.matched = r.survivors == r.expected;
            rep.subset_scans.push_back(std::move(r));
        }
    }
}

}  // namespace

ClassificationReport classify_all(const std::string& data_dir) {
    GraphCatalog connected7 = enumerate_connected(7);
    auto by_label = match_appendix_data(connected7, data_dir);
    KnowledgeBase kb = KnowledgeBase::load(data_dir + "/knowledge_base.facts");
    auto catalog = build_occurring_catalog(data_dir, kb);

    std::map<CanonicalForm, const RecipeResult*> recipe_by_form;
    for (const auto& r : catalog) recipe_by_form[canonical_form(r.graph)] = &r;

    ClassificationReport rep;
    rep.connected_total = int(connected7.graphs.size());
    rep.eligible = int(by_label.size());

    for (const auto& label : expected_labels()) {
        const Graph& g = by_label.at(label);
        ReportEntry e;
        e.label = label;
        e.graph6 = to_graph6(g);
        e.appendix = appendix_class_letter(appendix_class(g));
        Status s = status(g, kb);
        auto rec = recipe_by_form.find(canonical_form(g));
        if (rec != recipe_by_form.end()) {
            e.recipe = rec->second->recipe;
            if (s.verdict == Verdict::NonOccurring)
                throw std::runtime_error(label + ": constructed graph ruled non-occurring: " +
                                         s.reason);
            if (s.verdict == Verdict::Unknown) s = {Verdict::Occurring, "recipe: " + e.recipe};
        }
        e.verdict = s.verdict;
        e.reason = s.reason;
        switch (e.verdict) {
            case Verdict::Occurring: ++rep.occurring; break;
            case Verdict::NonOccurring: ++rep.non_occurring; break;
            case Verdict::Unknown: ++rep.unknown; break;
        }
        rep.entries.push_back(std::move(e));
    }

    run_lemma_checks(by_label, kb, rep);
    return rep;
}

// ---- json ----

namespace {

using ordered_json = nlohmann::ordered_json;

Verdict verdict_from_name(const std::string& s) {
    if (s == "OCCURRING") return Verdict::Occurring;
    if (s == "NONOCCURRING") return Verdict::NonOccurring;
    if (s == "UNKNOWN") return Verdict::Unknown;
    throw std::runtime_error("bad verdict name " + s);
}

}  // namespace

std::string report_to_json(const ClassificationReport& rep) {
    ordered_json j;
    j["summary"] = {{"connected_total", rep.connected_total},
                    {"eligible", rep.eligible},
                    {"occurring", rep.occurring},
                    {"non_occurring", rep.non_occurring},
                    {"unknown", rep.unknown}};
    j["entries"] = ordered_json::array();
    for (const auto& e : rep.entries) {
        ordered_json je = {{"label", e.label},
                           {"graph6", e.graph6},
                           {"appendix", std::string(1, e.appendix)},
                           {"verdict", verdict_name(e.verdict)},
                           {"reason", e.reason}};
        if (!e.recipe.empty()) je["recipe"] = e.recipe;
        j["entries"].push_back(je);
    }
    ordered_json adm = ordered_json::array();
    for (const auto& a : rep.admissibility)
        adm.push_back({{"label", a.label},
                       {"vertex", a.vertex},
                       {"strongly_admissible", a.strongly_admissible}});
    ordered_json scans = ordered_json::array();
    for (const auto& s : rep.subgraph_scans)
        scans.push_back({{"label", s.label},
                         {"pinned_justified", s.pinned_justified},
                         {"all_nonoccurring", s.all_nonoccurring},
                         {"subgraphs", s.subgraphs}});
    ordered_json subs = ordered_json::array();
    for (const auto& s : rep.subset_scans)
        subs.push_back({{"label", s.label},
                        {"case", s.case_name},
                        {"vertices", s.vertices},
                        {"survivors", s.survivors},
                        {"expected", s.expected},
                        {"matched", s.matched}});
    j["lemma_checks"] = {{"admissibility", adm}, {"subgraph_scans", scans}, {"subset_scans", subs}};
    return j.dump(2);
}

ClassificationReport report_from_json(const std::string& json_text) {
    ordered_json j = ordered_json::parse(json_text);
    ClassificationReport rep;
    const auto& s = j.at("summary");
    rep.connected_total = s.at("connected_total");
    rep.eligible = s.at("eligible");
    rep.occurring = s.at("occurring");
    rep.non_occurring = s.at("non_occurring");
    rep.unknown = s.at("unknown");
    for (const auto& je : j.at("entries")) {
        ReportEntry e;
        e.label = je.at("label");
        e.graph6 = je.at("graph6");
        e.appendix = je.at("appendix").get<std::string>()[0];
        e.verdict = verdict_from_name(je.at("verdict"));
        e.reason = je.at("reason");
        if (je.contains("recipe")) e.recipe = je.at("recipe");
        rep.entries.push_back(std::move(e));
    }
    for (const auto& ja : j.at("lemma_checks").at("admissibility"))
        rep.admissibility.push_back(
            {ja.at("label"), ja.at("vertex"), ja.at("strongly_admissible")});
    for (const auto& js : j.at("lemma_checks").at("subgraph_scans"))
        rep.subgraph_scans.push_back({js.at("label"), js.at("pinned_justified"),
                                      js.at("all_nonoccurring"), js.at("subgraphs")});
    for (const auto& js : j.at("lemma_checks").at("subset_scans")) {
        SubsetScanResult r;
        r.label = js.at("label");
        r.case_name = js.at("case");
        r.vertices = js.at("vertices").get<std::vector<int>>();
        r.survivors = js.at("survivors").get<std::vector<std::string>>();
        r.expected = js.at("expected").get<std::vector<std::string>>();
        r.matched = js.at("matched");
        rep.subset_scans.push_back(std::move(r));
    }
    return rep;
}

std::string report_to_text(const ClassificationReport& rep) {
    std::ostringstream out;
    out << "Connected graphs on seven vertices: " << rep.connected_total << "\n";
    out << "Eligible (two-clique cover):        " << rep.eligible << "\n";
    out << "  occurring " << rep.occurring << " / non-occurring " << rep.non_occurring
        << " / unknown " << rep.unknown << "\n\n";
    char fam = 0;
    for (const auto& e : rep.entries) {
        if (e.label[0] != fam) {
            fam = e.label[0];
            out << "-- family " << fam << " --\n";
        }
        out << "  " << e.label << "  " << e.graph6 << "  " << verdict_name(e.verdict);
        if (!e.reason.empty()) out << "  [" << e.reason << "]";
        if (!e.recipe.empty()) out << "  recipe: " << e.recipe;
        out << "\n";
    }
    out << "\n-- elimination machine checks --\n";
    for (const auto& a : rep.admissibility)
        out << "  " << a.label << " p" << a.vertex + 1 << " strongly admissible: "
            << (a.strongly_admissible ? "yes" : "NO") << "\n";
    for (const auto& s : rep.subgraph_scans)
        out << "  " << s.label << " proper subgraph scan over " << s.subgraphs
            << " subgraphs: " << (s.all_nonoccurring ? "all non-occurring" : "FAILED") << "\n";
    for (const auto& s : rep.subset_scans)
        out << "  " << s.label << " vertex-set case " << s.case_name << ": "
            << (s.matched ? "survivors as expected" : "MISMATCH") << "\n";
    return out.str();
}

bool Checklist::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.pass; });
}

}  // namespace pcdg
