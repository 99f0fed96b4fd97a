#pragma once

// Fast-solver-versus-exact-solver comparison harness. Every generated
// instance is solved by the class-specific method and by the exact search;
// reports carry both values and an agreement flag. A blown node budget is
// surfaced per instance, never as a global failure.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tdc/chain.hpp"
#include "tdc/cograph.hpp"
#include "tdc/errors.hpp"
#include "tdc/exact.hpp"
#include "tdc/generate.hpp"
#include "tdc/graph.hpp"
#include "tdc/split.hpp"
#include "tdc/trees.hpp"

namespace tdc {

struct OracleReport {
    int id = 0;
    int n = 0;
    std::string detected_class;
    std::string method;
    std::optional<int> fast_value;
    std::optional<int> exact_value;
    bool agree = false;
    bool budget_exceeded = false;
    std::string note;
    double wall_ms = 0.0;
    std::string witness_path; // empty unless witnesses are exported
};

struct FastSolve {
    int value;
    Coloring witness;
    std::string method;
};

// Class-specific solve used by the harness and the CLI's auto mode.
inline FastSolve fast_solve_for_class(const Graph& g, GenSpec::Class cls, const SearchLimits& limits = {}) {
    switch (cls) {
    case GenSpec::Class::Cograph: {
        auto [value, witness] = chi_td_cograph(g);
        return {value, witness, "cograph-formula"};
    }
    case GenSpec::Class::Chain: {
        auto [value, witness] = chi_td_chain(g);
        return {value, witness, "chain-partition"};
    }
    case GenSpec::Class::Split: {
        auto [value, witness] = chi_td_split(g, limits);
        return {value, witness, "split-equivalence"};
    }
    case GenSpec::Class::Tree: {
        TreeClassification cl = classify_tree(g, /*cross_check=*/false, limits);
        Coloring witness;
        if (cl.tier == TreeTier::GammaTPlus1) {
            witness = coloring_from_certificate(g, *cl.certificate);
        } else {
            witness = chi_td_exact(g, limits).witness;
        }
        return {cl.chi_td, witness, "tree-classifier"};
    }
    default:
        throw PreconditionError(std::string("no class solver for ") + class_name(cls));
    }
}

inline std::vector<OracleReport> oracle_compare(GenSpec::Class cls, int count, int max_n, std::uint64_t seed,
                                                const SearchLimits& limits = {}) {
    if (cls == GenSpec::Class::Bipartite || cls == GenSpec::Class::Any)
        throw PreconditionError("oracle_compare: class has no fast solver");
    std::vector<OracleReport> reports;
    Rng master(seed);
    for (int id = 0; id < count; ++id) {
        GenSpec spec;
        spec.cls = cls;
        spec.n = master.uniform(2, std::max(2, max_n));
        spec.seed = master.next();
        Graph g = generate(spec);

        OracleReport rep;
        rep.id = id;
        rep.n = g.n();
        rep.detected_class = class_name(cls);
        auto start = std::chrono::steady_clock::now();
        try {
            FastSolve fast = fast_solve_for_class(g, cls, limits);
            rep.fast_value = fast.value;
            rep.method = fast.method;
            rep.exact_value = chi_td_exact(g, limits).value;
            rep.agree = *rep.fast_value == *rep.exact_value;
            if (!rep.agree) rep.note = "disagreement";
        } catch (const BudgetError& e) {
            rep.budget_exceeded = true;
            rep.note = e.what();
        }
        rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        reports.push_back(std::move(rep));
    }
    return reports;
}

} // namespace tdc
