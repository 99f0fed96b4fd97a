// Command-line surface for the total dominator coloring library.
//
// Exit codes: 0 success, 1 input or parse error, 2 verification failure or
// oracle disagreement, 3 node budget exceeded.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tdc/tdc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerify = 2;
constexpr int kExitBudget = 3;

struct SolveOutcome {
    int chi_td;
    std::string cls;
    std::string method;
    tdc::Coloring witness;
};

SolveOutcome solve_exact(const tdc::Graph& g, const tdc::SearchLimits& limits) {
    tdc::SolveResult r = tdc::chi_td_exact(g, limits);
    return {r.value, "general", "exact", r.witness};
}

// Recognizers in fixed precedence: cograph, chain, split, tree. A graph in
// several classes (complete bipartite graphs are both cographs and chain
// graphs) takes the first, cheapest formula.
std::optional<SolveOutcome> solve_by_class(const tdc::Graph& g, const tdc::SearchLimits& limits) {
    tdc::detail::require_isolate_free(g, "solve");
    if (tdc::is_cograph(g)) {
        auto f = tdc::fast_solve_for_class(g, tdc::GenSpec::Class::Cograph, limits);
        return SolveOutcome{f.value, "cograph", f.method, f.witness};
    }
    if (tdc::is_chain_graph(g)) {
        auto f = tdc::fast_solve_for_class(g, tdc::GenSpec::Class::Chain, limits);
        return SolveOutcome{f.value, "chain", f.method, f.witness};
    }
    if (tdc::is_split_graph(g) && tdc::is_connected(g)) {
        auto f = tdc::fast_solve_for_class(g, tdc::GenSpec::Class::Split, limits);
        return SolveOutcome{f.value, "split", f.method, f.witness};
    }
    if (tdc::is_tree(g) && g.n() <= 18) {
        auto f = tdc::fast_solve_for_class(g, tdc::GenSpec::Class::Tree, limits);
        return SolveOutcome{f.value, "tree", f.method, f.witness};
    }
    return std::nullopt;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"total dominator coloring toolkit"};
    app.require_subcommand(1);

    std::string graph_path, coloring_path, format = "edgelist", method = "auto", mode = "td";
    std::string cls_name = "any", out_format = "edgelist";
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    int n = 8, count = 20, max_n = 10;
    int k_min = 1, k_max = 0;
    double edge_prob = 0.5;
    bool connected = false;

    auto* solve = app.add_subcommand("solve", "compute chi_td of a graph");
    solve->add_option("file", graph_path)->required();
    solve->add_option("--format", format)->check(CLI::IsMember({"edgelist", "graph6"}));
    solve->add_option("--method", method)->check(CLI::IsMember({"auto", "exact", "class"}));
    solve->add_option("--budget", budget, "node budget (0 = unlimited)");

    auto* verify = app.add_subcommand("verify", "verify a coloring file against a graph");
    verify->add_option("graph", graph_path)->required();
    verify->add_option("coloring", coloring_path)->required();
    verify->add_option("--format", format)->check(CLI::IsMember({"edgelist", "graph6"}));
    verify->add_option("--mode", mode)->check(CLI::IsMember({"td", "dominator", "proper"}));

    auto* analyze = app.add_subcommand("analyze", "full class analysis of a TD-coloring");
    analyze->add_option("graph", graph_path)->required();
    analyze->add_option("coloring", coloring_path)->required();
    analyze->add_option("--format", format)->check(CLI::IsMember({"edgelist", "graph6"}));

    auto* classify = app.add_subcommand("classify-tree", "three-way tree classification");
    classify->add_option("graph", graph_path)->required();
    classify->add_option("--format", format)->check(CLI::IsMember({"edgelist", "graph6"}));
    classify->add_option("--budget", budget, "node budget (0 = unlimited)");

    auto* gen = app.add_subcommand("gen", "generate a seeded instance");
    gen->add_option("--class", cls_name)->check(CLI::IsMember({"tree", "cograph", "chain", "split", "bipartite", "any"}));
    gen->add_option("--n", n)->required();
    gen->add_option("--seed", seed)->each([&](const std::string&) { seed_given = true; });
    gen->add_option("--out-format", out_format)->check(CLI::IsMember({"edgelist", "graph6"}));
    gen->add_option("--k-min", k_min, "chain: minimum block count");
    gen->add_option("--k-max", k_max, "chain: maximum block count (0 = n/2)");
    gen->add_option("--edge-prob", edge_prob);
    gen->add_flag("--connected", connected, "bipartite: force connectivity");

    auto* oracle = app.add_subcommand("oracle", "compare a class solver against the exact solver");
    oracle->add_option("--class", cls_name)->required()->check(CLI::IsMember({"tree", "cograph", "chain", "split"}));
    oracle->add_option("--count", count);
    oracle->add_option("--max-n", max_n);
    oracle->add_option("--seed", seed)->each([&](const std::string&) { seed_given = true; });
    oracle->add_option("--budget", budget, "node budget per solve (0 = unlimited)");

    auto* extract = app.add_subcommand("extract-tdset", "one vertex per class of a TD-coloring");
    extract->add_option("graph", graph_path)->required();
    extract->add_option("coloring", coloring_path)->required();
    extract->add_option("--format", format)->check(CLI::IsMember({"edgelist", "graph6"}));

    CLI11_PARSE(app, argc, argv);

    tdc::SearchLimits limits{budget};
    try {
        if (*solve) {
            tdc::Graph g = tdc::load_graph_file(graph_path, tdc::parse_format_name(format));
            SolveOutcome out{0, "", "", tdc::Coloring()};
            if (method == "exact") {
                out = solve_exact(g, limits);
            } else {
                auto by_class = solve_by_class(g, limits);
                if (by_class) {
                    out = *by_class;
                } else if (method == "class") {
                    std::cerr << "solve: graph matches no supported class\n";
                    return kExitInput;
                } else {
                    out = solve_exact(g, limits);
                }
            }
            tdc::ojson j;
            j["chi_td"] = out.chi_td;
            j["class"] = out.cls;
            j["method"] = out.method;
            j["coloring"] = out.witness.colors();
            std::cout << j.dump() << "\n";
            return kExitOk;
        }
        if (*verify) {
            tdc::Graph g = tdc::load_graph_file(graph_path, tdc::parse_format_name(format));
            tdc::Coloring c = tdc::load_coloring_file(coloring_path);
            std::optional<int> violation;
            if (mode == "td")
                violation = tdc::first_td_violation(g, c);
            else if (mode == "dominator")
                violation = tdc::first_dominator_violation(g, c);
            else
                violation = tdc::first_proper_violation(g, c);
            tdc::ojson j;
            j["mode"] = mode;
            j["valid"] = !violation.has_value();
            if (violation) j["first_violating_vertex"] = *violation;
            std::cout << j.dump() << "\n";
            return violation ? kExitVerify : kExitOk;
        }
        if (*analyze) {
            tdc::Graph g = tdc::load_graph_file(graph_path, tdc::parse_format_name(format));
            tdc::Coloring c = tdc::load_coloring_file(coloring_path);
            if (auto v = tdc::first_td_violation(g, c)) {
                std::cerr << "analyze: not a TD-coloring (vertex " << *v << ")\n";
                return kExitVerify;
            }
            std::cout << tdc::analysis_to_json(tdc::analyze(g, c)).dump() << "\n";
            return kExitOk;
        }
        if (*classify) {
            tdc::Graph g = tdc::load_graph_file(graph_path, tdc::parse_format_name(format));
            tdc::TreeClassification cl = tdc::classify_tree(g, /*cross_check=*/false, limits);
            std::cout << tdc::classification_to_json(cl).dump() << "\n";
            return kExitOk;
        }
        if (*gen) {
            tdc::GenSpec spec;
            spec.cls = tdc::parse_class_name(cls_name);
            spec.n = n;
            spec.seed = seed_given ? seed : tdc::default_seed();
            spec.chain_k_min = k_min;
            spec.chain_k_max = k_max;
            spec.edge_probability = edge_prob;
            spec.require_connected = connected;
            tdc::Graph g = tdc::generate(spec);
            if (out_format == "edgelist")
                std::cout << tdc::serialize_edge_list(g);
            else
                std::cout << tdc::serialize_graph6(g) << "\n";
            return kExitOk;
        }
        if (*oracle) {
            auto reports = tdc::oracle_compare(tdc::parse_class_name(cls_name), count, max_n,
                                               seed_given ? seed : tdc::default_seed(), limits);
            bool any_disagree = false, any_budget = false;
            std::cout << "id\tn\tclass\tfast\texact\tagree\tms\n";
            for (const auto& r : reports) {
                any_disagree |= (!r.budget_exceeded && !r.agree);
                any_budget |= r.budget_exceeded;
                std::cout << r.id << '\t' << r.n << '\t' << r.detected_class << '\t';
                if (r.fast_value)
                    std::cout << *r.fast_value;
                else
                    std::cout << '-';
                std::cout << '\t';
                if (r.exact_value)
                    std::cout << *r.exact_value;
                else
                    std::cout << '-';
                std::cout << '\t' << (r.budget_exceeded ? "budget" : (r.agree ? "yes" : "NO")) << '\t' << r.wall_ms
                          << "\n";
            }
            int agreed = 0;
            for (const auto& r : reports)
                if (!r.budget_exceeded && r.agree) ++agreed;
            std::cout << "agreed " << agreed << "/" << reports.size() << "\n";
            if (any_disagree) return kExitVerify;
            if (any_budget) return kExitBudget;
            return kExitOk;
        }
        if (*extract) {
            tdc::Graph g = tdc::load_graph_file(graph_path, tdc::parse_format_name(format));
            tdc::Coloring c = tdc::load_coloring_file(coloring_path);
            if (auto v = tdc::first_td_violation(g, c)) {
                std::cerr << "extract-tdset: not a TD-coloring (vertex " << *v << ")\n";
                return kExitVerify;
            }
            std::cout << tdc::vertex_set_to_json(tdc::extract_td_set(g, c)).dump() << "\n";
            return kExitOk;
        }
    } catch (const tdc::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const tdc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const tdc::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const tdc::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
