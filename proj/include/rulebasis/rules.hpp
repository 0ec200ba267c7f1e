// Association rules, the cover relation, and the basis generators:
// complete representative rules, their two-phase variant, the known
// incomplete filter reconstruction, and the closure-based basis.

#ifndef RULEBASIS_RULES_HPP
#define RULEBASIS_RULES_HPP

#include <string>
#include <vector>

#include "rulebasis/bounds.hpp"
#include "rulebasis/lattice.hpp"

namespace rulebasis {

// X -> Y with Y nonempty and disjoint from X; empty antecedents are allowed.
// sup is the support of X union Y; confidence is sup.count/antecedent_count,
// held as exact integers.
struct Rule {
    Itemset antecedent;
    Itemset consequent;
    Support sup;
    std::uint32_t antecedent_count = 0;

    Itemset item_union() const { return antecedent.set_union(consequent); }
    Rational confidence() const {
        return Rational(sup.count, antecedent_count);
    }

    friend bool operator==(const Rule& a, const Rule& b) {
        return a.antecedent == b.antecedent && a.consequent == b.consequent;
    }
    friend bool operator!=(const Rule& a, const Rule& b) { return !(a == b); }
};

enum class Provenance {
    complete,        // representative rules, confidence-specific bound
    two_phase,       // representative rules via the breakpoint table
    heuristic,       // reconstruction of the incomplete filter
    closure_basis,   // the basis under closure-based redundancy
    oracle_all,      // every rule above both thresholds, by definition
    oracle_representative,
    oracle_closure_basis,
};
std::string_view provenance_name(Provenance p);

struct RuleSet {
    Rational tau;
    Rational gamma;
    Provenance provenance = Provenance::complete;
    std::vector<Rule> rules;  // sorted by (union lex, antecedent lex)

    std::size_t size() const { return rules.size(); }
    bool contains(const Rule& r) const;
};

// (union lexicographic, antecedent lexicographic); a total order because the
// pair (union, antecedent) determines the consequent.
void sort_canonical(std::vector<Rule>& rules);

// rp lies in the cover set of r: rp's antecedent extends r's and rp's union
// shrinks r's. Covered rules never beat the covering rule on either support
// or confidence.
bool covers(const Rule& r, const Rule& rp);

// rp is closure-based redundant with respect to r:
// r.X is contained in the closure of rp.X, and rp's union is contained in
// the closure of r's union. Needs the dataset behind the index.
bool closure_covers(const LatticeIndex& index, const Rule& r, const Rule& rp);

// equal antecedent closures and equal union closures
bool closure_equivalent(const LatticeIndex& index, const Rule& r, const Rule& rp);

// Closed sets from which at least one representative rule arises:
// gamma * max_qualifying_gen_sup(X) > max_superset_sup(X). Returns closed
// ids, ascending.
std::vector<std::uint32_t> representative_sources(const LatticeIndex& index,
                                                  const Rational& gamma);

// Complete representative-rule generator: for every source X, emit
// X0 -> X\X0 for each generator X0 inside the antecedent support window
// max_superset_sup(X)/gamma < sup(X0) <= sup(X)/gamma < min_subset_sup(X0).
RuleSet representative_rules(const LatticeIndex& index, const Rational& gamma);

// Same output for every gamma, but source detection reuses the
// support-only breakpoint table. Throws when the table belongs to a
// different threshold or dataset size than the index.
RuleSet representative_rules(const LatticeIndex& index, const BreakpointTable& table,
                             const Rational& gamma);

// Reconstruction of the incomplete source filter
// sup(X) >= gamma * min_gen_subset_sup(X) > max_superset_sup(X), with the
// same antecedent window. Always a subset of the complete output, and
// sometimes a proper one; kept for comparison.
RuleSet representative_rules_heuristic(const LatticeIndex& index, const Rational& gamma);

// Closed sets from which at least one closure-basis rule arises: the source
// test above plus max_qualifying_gen_sup(X) > sup(X).
std::vector<std::uint32_t> closure_basis_sources(const LatticeIndex& index,
                                                 const Rational& gamma);

// Basis under closure-based redundancy: antecedents are proper *closed*
// subsets X0 of each source, inside the window
// max_superset_sup(X)/gamma < sup(X0) <= sup(X)/gamma < min_closed_subset_sup(X0).
// Every emitted rule has confidence strictly below 1.
RuleSet closure_basis_rules(const LatticeIndex& index, const Rational& gamma);

}  // namespace rulebasis

#endif
