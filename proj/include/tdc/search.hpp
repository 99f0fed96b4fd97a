#pragma once

// Node budgets for the exponential searches. A zero budget means unlimited.
// Budgets are node counts, not wall clock, so runs are reproducible.

#include <cstdint>

#include "tdc/errors.hpp"

namespace tdc {

struct SearchLimits {
    std::uint64_t max_nodes = 0; // 0 = unlimited
};

namespace detail {

struct NodeCounter {
    std::uint64_t used = 0;
    std::uint64_t max_nodes = 0;

    explicit NodeCounter(const SearchLimits& lim) : max_nodes(lim.max_nodes) {}

    void tick() {
        ++used;
        if (max_nodes != 0 && used > max_nodes)
            throw BudgetError("search node budget exceeded (" + std::to_string(max_nodes) + " nodes)");
    }
};

} // namespace detail

} // namespace tdc
