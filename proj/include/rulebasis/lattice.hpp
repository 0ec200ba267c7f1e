// Closure operator, frequent closed sets and frequent minimal generators.

#ifndef RULEBASIS_LATTICE_HPP
#define RULEBASIS_LATTICE_HPP

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rulebasis/dataset.hpp"
#include "rulebasis/rational.hpp"

namespace rulebasis {

// Intersection of all transactions containing x. Extensive, idempotent and
// monotone; the largest superset of x with the same support. When no
// transaction contains x the intersection is vacuous and the whole universe
// is returned.
Itemset closure(const TransactionDB& db, const Itemset& x);

struct SupportedSet {
    Itemset set;
    Support sup;
};

struct ClosedEntry {
    Itemset set;
    Support sup;
    // max support among proper frequent closed supersets (zero when none)
    Bound max_superset_sup = Bound::zero();
    // min support among minimal-generator proper subsets (infinite for {})
    Bound min_gen_subset_sup = Bound::infinite();
    // min support among closed proper subsets (infinite when none)
    Bound min_closed_subset_sup = Bound::infinite();
    std::vector<std::uint32_t> gen_subsets;     // generator ids, proper subsets
    std::vector<std::uint32_t> closed_subsets;  // closed ids, proper subsets
};

struct GenEntry {
    Itemset set;
    Support sup;
    // min support among generator proper subsets (infinite for {})
    Bound min_subset_sup = Bound::infinite();
    std::uint32_t closure_id = 0;  // closed set with the same tidset
};

// All frequent closed sets and frequent minimal generators at one support
// threshold, with supports, closure links and the per-set bounds. Both lists
// are in ascending (cardinality, lexicographic) order. Immutable once built.
//
// `db` is empty when the index was reloaded from disk; rule generation does
// not need it, closure queries do.
struct LatticeIndex {
    Rational tau;
    std::uint32_t n = 0;
    std::vector<std::string> item_names;
    std::vector<ClosedEntry> closed;
    std::vector<GenEntry> generators;
    std::shared_ptr<const TransactionDB> db;

    std::optional<std::uint32_t> find_closed(const Itemset& s) const;
    std::optional<std::uint32_t> find_generator(const Itemset& s) const;
    const TransactionDB& dataset() const;  // throws std::logic_error when detached

    // smallest integer count c with c/n >= tau
    std::uint32_t min_count() const;

    bool is_frequent(const Support& s) const { return compare(s, tau) >= 0; }

    std::string set_name(const Itemset& s) const;  // "{a b c}" for diagnostics

    void rebuild_lookup();  // called by mine() / the index loader

private:
    std::unordered_map<Itemset, std::uint32_t, ItemsetHash> closed_by_set_;
    std::unordered_map<Itemset, std::uint32_t, ItemsetHash> gen_by_set_;
};

// Enumerates FC and FG exactly, with exact supports, and fills every bound.
// Requires 0 < tau <= 1.
LatticeIndex mine(std::shared_ptr<const TransactionDB> db, const Rational& tau);
LatticeIndex mine(const TransactionDB& db, const Rational& tau);  // copies the db

// sup(x) > max-superset-support test; agrees with closure(x) == x for every
// frequent x whose support is given exactly.
bool is_closed_via_bounds(const SupportedSet& x, const LatticeIndex& index);

}  // namespace rulebasis

#endif
