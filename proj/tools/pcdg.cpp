// command-line front end: enumeration, classification, per-graph status and
// admissibility traces, recipe construction, DOT rendering, full verification
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "pcdg/classify.hpp"
#include "pcdg/dot.hpp"

using namespace pcdg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;

std::map<std::string, Graph> load_labels(const std::string& data_dir) {
    std::map<std::string, Graph> out;
    for (const char* f : {"appendix_a.g6", "appendix_b.g6", "appendix_c.g6"})
        for (const auto& e : load_labeled_graph6(data_dir + "/" + f)) out.emplace(e.label, e.graph);
    return out;
}

Graph resolve_graph(const std::string& arg, const std::string& data_dir) {
    if (!arg.empty() && (arg[0] == 'A' || arg[0] == 'B' || arg[0] == 'C')) {
        auto labels = load_labels(data_dir);
        auto it = labels.find(arg);
        if (it != labels.end()) return it->second;
    }
    return from_graph6(arg);
}

void print_trace(const AdmissibilityTrace& tr) {
    for (const auto& e : tr.entries)
        std::cout << "  " << e.operation << " -> " << e.graph6 << "  "
                  << verdict_name(e.status.verdict)
                  << (e.status.reason.empty() ? "" : "  [" + e.status.reason + "]") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"seven-vertex prime character degree graph classifier"};
    app.require_subcommand(1);
    app.fallthrough();  // --data-dir may follow the subcommand
    std::string data_dir = "./data";
    app.add_option("--data-dir", data_dir, "directory with the curated data files")
        ->capture_default_str();

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "list non-isomorphic graphs of an order");
    int order = 7;
    bool connected = false;
    cmd_enum->add_option("--order", order, "graph order, 1..7")->required();
    cmd_enum->add_flag("--connected", connected, "restrict to connected graphs");

    // classify
    auto* cmd_classify = app.add_subcommand("classify", "classify all 85 eligible graphs");
    bool as_json = false, as_text = false;
    cmd_classify->add_flag("--json", as_json, "machine-readable report");
    cmd_classify->add_flag("--text", as_text, "human-readable report (default)");

    // status
    auto* cmd_status = app.add_subcommand("status", "verdict for one graph");
    std::string status_arg;
    cmd_status->add_option("graph", status_arg, "graph6 string or label")->required();

    // admissible
    auto* cmd_adm = app.add_subcommand("admissible", "admissibility of a vertex, with trace");
    std::string adm_arg;
    int adm_vertex = 0;
    bool strong = false;
    cmd_adm->add_option("graph", adm_arg, "graph6 string or label")->required();
    cmd_adm->add_option("vertex", adm_vertex, "vertex index")->required();
    cmd_adm->add_flag("--strong", strong, "check strong admissibility");

    // verify-paper
    app.add_subcommand("verify-paper", "run the full verification checklist");

    // render
    auto* cmd_render = app.add_subcommand("render", "emit DOT for a graph");
    std::string render_arg;
    bool with_labels = false;
    cmd_render->add_option("graph", render_arg, "graph6 string or label")->required();
    cmd_render->add_flag("--labels", with_labels, "prime labels (construction labels only)");

    // construct
    auto* cmd_construct = app.add_subcommand("construct", "rebuild a graph from its recipe");
    std::string construct_label;
    cmd_construct->add_option("label", construct_label, "recipe label, e.g. B3 or G1")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_enum->parsed()) {
            GraphCatalog cat = connected ? enumerate_connected(order) : enumerate_all(order);
            for (const Graph& g : cat.graphs) std::cout << to_graph6(g) << "\n";
            std::cerr << cat.graphs.size() << (connected ? " connected" : "")
                      << " graphs of order " << order << "\n";
            return kExitOk;
        }

        if (cmd_classify->parsed()) {
            ClassificationReport rep = classify_all(data_dir);
            std::cout << (as_json && !as_text ? report_to_json(rep) : report_to_text(rep));
            return kExitOk;
        }

        if (cmd_status->parsed()) {
            Graph g = resolve_graph(status_arg, data_dir);
            KnowledgeBase kb = KnowledgeBase::load(data_dir + "/knowledge_base.facts");
            // rule-by-rule trace, then the chain verdict
            const std::pair<const char*, std::optional<Status> (*)(const Graph&)> rules[] = {
                {"palfy", rule_palfy},           {"odd-cycle", rule_odd_cycle},
                {"disconnected", rule_disconnected}, {"cut-vertices", rule_cut_vertices},
                {"diameter3", rule_diameter3},   {"gamma-kt", rule_gamma_kt},
            };
            for (auto [name, rule] : rules) {
                auto rs = rule(g);
                std::cout << "  " << name << ": "
                          << (rs ? std::string(verdict_name(rs->verdict)) + "  [" + rs->reason + "]"
                                 : std::string("-"))
                          << "\n";
            }
            if (const Fact* f = kb.find(g))
                std::cout << "  kb: " << verdict_name(f->verdict) << "  [" << f->source << "]\n";
            else
                std::cout << "  kb: -\n";
            Status s = status(g, kb);
            std::cout << to_graph6(g) << "  " << verdict_name(s.verdict);
            if (!s.reason.empty()) std::cout << "  [" << s.reason << "]";
            std::cout << "\n";
            return kExitOk;
        }

        if (cmd_adm->parsed()) {
            Graph g = resolve_graph(adm_arg, data_dir);
            KnowledgeBase kb = KnowledgeBase::load(data_dir + "/knowledge_base.facts");
            auto oracle = make_oracle(kb);
            auto tr = strong ? is_strongly_admissible(g, adm_vertex, oracle)
                             : is_admissible(g, adm_vertex, oracle);
            print_trace(tr);
            std::cout << "vertex " << adm_vertex << (strong ? " strongly" : "")
                      << (tr.admissible ? " admissible" : " NOT admissible") << "\n";
            return kExitOk;
        }

        if (app.get_subcommand("verify-paper")->parsed()) {
            Checklist list = verify_paper(data_dir);
            for (const auto& item : list.items)
                std::cout << (item.pass ? "PASS" : "FAIL") << "  " << item.name << "  ("
                          << item.millis << " ms)  " << item.detail << "\n";
            std::cout << (list.all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
            return list.all_pass() ? kExitOk : kExitVerifyFail;
        }

        if (cmd_render->parsed()) {
            if (with_labels) {
                KnowledgeBase kb = KnowledgeBase::load(data_dir + "/knowledge_base.facts");
                for (const auto& res : build_occurring_catalog(data_dir, kb)) {
                    if (res.label != render_arg || !res.labeling) continue;
                    std::vector<std::string> names;
                    for (uint64_t p : *res.labeling) names.push_back(std::to_string(p));
                    std::cout << render_dot(res.graph, names);
                    return kExitOk;
                }
                std::cerr << "no prime labeling for " << render_arg << "\n";
                return kExitInputError;
            }
            std::cout << render_dot(resolve_graph(render_arg, data_dir));
            return kExitOk;
        }

        if (cmd_construct->parsed()) {
            KnowledgeBase kb = KnowledgeBase::load(data_dir + "/knowledge_base.facts");
            for (const auto& res : build_occurring_catalog(data_dir, kb)) {
                if (res.label != construct_label) continue;
                std::cout << res.label << "  " << to_graph6(res.graph) << "  recipe: " << res.recipe
                          << "\n";
                if (res.cd) {
                    std::cout << "cd = {";
                    bool first = true;
                    for (const auto& d : res.cd->degrees()) {
                        std::cout << (first ? "" : ", ") << d.to_string();
                        first = false;
                    }
                    std::cout << "}\n";
                }
                return kExitOk;
            }
            std::cerr << "no recipe for label " << construct_label << "\n";
            return kExitInputError;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
