// Per-set support bounds and the per-closed-set breakpoint tables that make
// the confidence-dependent bound reusable across confidence thresholds.

#ifndef RULEBASIS_BOUNDS_HPP
#define RULEBASIS_BOUNDS_HPP

#include "rulebasis/lattice.hpp"

namespace rulebasis {

// Fills max_superset_sup / min_gen_subset_sup / min_closed_subset_sup and the
// subset adjacency lists of every closed entry from the FC/FG lists alone.
// Generator-side min_subset_sup values are produced by the miner (or read
// back from disk) and are left untouched.
void annotate_bounds(LatticeIndex& index);

// Cached accessors, by itemset. max_superset_sup insists on a frequent
// closed argument; the subset-side bounds are total over frequent sets and
// fall back to a scan for sets outside FC/FG.
Bound max_superset_sup(const LatticeIndex& index, const Itemset& x);
Bound min_gen_subset_sup(const LatticeIndex& index, const Itemset& x);
Bound min_closed_subset_sup(const LatticeIndex& index, const Itemset& x);

// Largest support among minimal-generator proper subsets Y of the closed set
// with gamma * sup(Y) <= sup(X); zero when no generator qualifies. The result
// is zero or at least sup(X). Requires 0 < gamma <= 1.
Bound max_qualifying_gen_sup(const LatticeIndex& index, std::uint32_t closed_id,
                             const Rational& gamma);

// One row per closed set: the distinct supports of its generator proper
// subsets in descending order y_1 > ... > y_k, which induce the confidence
// breakpoints p_0 = 0, p_i = sup(X)/y_i. p is strictly increasing and
// p_k <= 1; the row of {} is empty, every other row has k >= 1 because {} is
// always a generator.
struct BreakpointRow {
    std::uint32_t sup_count = 0;       // sup(X), denominator n implied
    std::vector<std::uint32_t> y;      // descending distinct generator supports
};

struct BreakpointTable {
    Rational tau;
    std::uint32_t n = 0;
    std::vector<BreakpointRow> rows;   // aligned with LatticeIndex::closed

    // Stepwise evaluation: gamma in (p_i, p_{i+1}] yields y_{i+1}, gamma
    // above the last breakpoint yields zero. Agrees with
    // max_qualifying_gen_sup for every gamma in (0,1], breakpoints included.
    Bound lookup(std::uint32_t closed_id, const Rational& gamma) const;
};

BreakpointTable build_breakpoint_table(const LatticeIndex& index);

}  // namespace rulebasis

#endif
