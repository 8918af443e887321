#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "orb/catalog.hpp"
#include "orb/graph.hpp"
#include "orb/io.hpp"
#include "orb/verifier.hpp"

using namespace orb;

namespace {

struct ResolvedInstance {
    FiniteGroup group;
    const CatalogEntry* entry = nullptr; // set when the group came from the catalog
};

ResolvedInstance resolve_group(const std::vector<CatalogEntry>& cat, const std::string& spec) {
    for (const auto& e : cat)
        if (e.name == spec) return {e.group, &e};
    if (std::filesystem::exists(spec)) return {parse_group(read_file(spec)), nullptr};
    throw InputError("group \"" + spec + "\" is neither a catalog name nor a readable file");
}

ActionSpec resolve_action(const ResolvedInstance& inst, const std::string& spec,
                          long long budget) {
    if (inst.entry)
        for (const auto& a : inst.entry->actions)
            if (a.name == spec) return a.action;
    if (spec == "inner") return inner_action(inst.group);
    if (spec == "full_aut") return full_aut(inst.group, budget);
    if (std::filesystem::exists(spec)) return parse_action(inst.group, read_file(spec), budget);
    throw InputError("action \"" + spec + "\" is neither a known action name nor a readable file");
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

int cmd_list(const std::vector<CatalogEntry>& cat) {
    for (const auto& e : cat) {
        std::cout << e.name << " (order " << e.group.order() << ")\n";
        for (const auto& a : e.actions) {
            std::cout << "  " << a.name;
            if (a.expected.shape) std::cout << "  shape=" << *a.expected.shape;
            if (a.expected.theorem_case) std::cout << "  case=" << *a.expected.theorem_case;
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_analyze(const std::vector<CatalogEntry>& cat, const std::string& group_spec,
                const std::string& action_spec, const std::string& dot_path,
                const std::string& json_path, long long budget) {
    ResolvedInstance inst = resolve_group(cat, group_spec);
    ActionSpec action = resolve_action(inst, action_spec, budget);
    AnalysisReport report = analyze(inst.group, action);
    std::cout << report_json(report);
    if (!dot_path.empty() || !json_path.empty()) {
        OrbitPartition orbits = orbit_partition(inst.group, action);
        CommutingGraph graph = build_graph(inst.group, orbits, action.name);
        graph.group_name = inst.group.name();
        if (!dot_path.empty()) write_file(dot_path, export_dot(graph));
        if (!json_path.empty()) write_file(json_path, export_json(graph));
    }
    return 0;
}

int cmd_verify(const std::vector<CatalogEntry>& cat, int threads) {
    bool ok = true;
    for (const auto& o : verify_catalog(cat, threads)) {
        if (o.mismatches.empty()) {
            std::cout << "ok    " << o.entry << "/" << o.action << "  shape=" << o.report.shape
                      << "  case=" << o.report.theorem_case.tag << "\n";
            continue;
        }
        ok = false;
        std::cout << "FAIL  " << o.entry << "/" << o.action << "\n";
        for (const auto& m : o.mismatches) std::cout << "      " << m << "\n";
    }
    CorollaryReport scans = corollary_scans(cat);
    for (const auto& item : scans.items) {
        std::cout << (item.status == "fail" ? "FAIL  " : item.status == "skip" ? "skip  " : "ok    ")
                  << item.id << (item.detail.empty() ? "" : "  " + item.detail) << "\n";
    }
    if (!scans.all_pass()) ok = false;
    std::cout << (ok ? "verify: all checks passed\n" : "verify: FAILURES above\n");
    return ok ? 0 : 1;
}

int cmd_refute(const std::vector<CatalogEntry>& cat, const std::string& group_spec,
               long long budget) {
    ResolvedInstance inst = resolve_group(cat, group_spec);
    auto witness = refute_by_aut_clique(inst.group, budget);
    if (!witness) {
        std::cout << "no refuting clique: no four pairwise-commuting elements of "
                  << inst.group.name() << " lie in four distinct Aut-orbits\n";
        return 0;
    }
    std::cout << "refuted: elements";
    for (int x : *witness) std::cout << " " << x;
    std::cout << " of orders";
    for (int x : *witness) std::cout << " " << inst.group.element_order(x);
    std::cout << " commute pairwise and lie in four distinct Aut-orbits,\n"
              << "so no subgroup of Aut can turn the orbit graph into an F-graph\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbit commuting-graph analyzer"};
    app.require_subcommand(1);
    app.fallthrough(); // allow --budget/--threads after the subcommand name
    long long budget = 50'000'000;
    int threads = 1;
    app.add_option("--budget", budget, "node budget for automorphism searches");
    app.add_option("--threads", threads, "worker threads for verify");

    CLI::App* cat_cmd = app.add_subcommand("catalog", "catalog operations");
    std::string cat_verb;
    cat_cmd->add_option("verb", cat_verb, "only \"list\" is supported")->required();

    CLI::App* an = app.add_subcommand("analyze", "analyze one group/action instance");
    std::string group_spec, action_spec, dot_path, json_path;
    an->add_option("--group", group_spec, "catalog name or group JSON file")->required();
    an->add_option("--action", action_spec,
                   "action name (catalog, \"inner\", \"full_aut\") or action JSON file")
        ->required();
    an->add_option("--dot", dot_path, "write the orbit graph in DOT format");
    an->add_option("--json", json_path, "write the orbit graph in JSON format");

    CLI::App* ver = app.add_subcommand("verify", "run the full catalog verification");
    bool all = false;
    ver->add_flag("--all", all, "verify every catalog entry and run the corollary scans");

    CLI::App* ref = app.add_subcommand("refute", "search for an orbit-clique obstruction");
    std::string refute_spec;
    ref->add_option("--group", refute_spec, "catalog name or group JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        std::vector<CatalogEntry> cat = paper_catalog(budget);
        if (cat_cmd->parsed()) {
            if (cat_verb != "list") throw InputError("catalog: only \"list\" is supported");
            return cmd_list(cat);
        }
        if (an->parsed())
            return cmd_analyze(cat, group_spec, action_spec, dot_path, json_path, budget);
        if (ver->parsed()) {
            if (!all) throw InputError("verify: pass --all");
            return cmd_verify(cat, threads);
        }
        if (ref->parsed()) return cmd_refute(cat, refute_spec, budget);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const AutBudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ClosureTooLarge& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
