#pragma once

#include <cstddef>

namespace mforge {

/// Resource limits for the exact solvers. These are configuration, not
/// constants: every limit can be raised per call or through the environment.
struct Budget {
    /// States any single minor search may visit before giving up.
    std::size_t max_states = 5'000'000;
    /// Largest order for the subset DPs behind treewidth and pathwidth.
    int max_width_order = 16;
    /// Largest order for exact clique / independence search.
    int max_exact_order = 40;
    /// Largest order for searches over the full minor lattice (connectivity).
    int max_lattice_order = 10;
    /// Largest order for exhaustive graph enumeration.
    int max_enumeration_order = 10;
    /// Worker threads for sweeps that fan out over independent graphs.
    int jobs = 1;

    /// Defaults overridden by MFORGE_BUDGET_STATES and MFORGE_JOBS.
    static Budget from_env();
};

} // namespace mforge
