#include "rulebasis/rules.hpp"

#include <algorithm>
#include <stdexcept>

namespace rulebasis {

namespace {

void check_gamma(const Rational& gamma) {
    if (gamma.is_zero() || compare_scaled(gamma, 1, 1) > 0)
        throw std::invalid_argument("confidence must lie in (0,1], got " + gamma.str());
}

// Antecedent window shared by every generator
// (the representative one over minimal generators, the closure basis over
// closed sets): with c1 = mxs/gamma and c2 = sup(X)/gamma,
//   c1 < sup(X0) <= c2 < min_subset_bound(X0).
bool antecedent_in_window(std::uint32_t s0, const Bound& min_subset, std::uint32_t sx,
                          const Bound& mxs, const Rational& gamma) {
    if (!mxs.is_zero() && compare_scaled(gamma, s0, mxs.count()) <= 0) return false;  // c1 < s0
    if (compare_scaled(gamma, s0, sx) > 0) return false;                              // s0 <= c2
    if (!min_subset.is_infinite() &&
        compare_scaled(gamma, min_subset.count(), sx) <= 0)                           // c2 < bound
        return false;
    return true;
}

Rule make_rule(const Itemset& antecedent, const ClosedEntry& x, std::uint32_t antecedent_count) {
    return Rule{antecedent, x.set.set_minus(antecedent), x.sup, antecedent_count};
}

// true when gamma * mxgs > mxs, i.e. X yields at least one representative rule
bool source_test(const Bound& mxgs, const Bound& mxs, const Rational& gamma) {
    return compare_scaled(gamma, mxgs, mxs) > 0;
}

RuleSet emit_representative(const LatticeIndex& index, const Rational& gamma,
                            const std::vector<std::uint32_t>& sources, Provenance prov) {
    RuleSet out;
    out.tau = index.tau;
    out.gamma = gamma;
    out.provenance = prov;
    for (std::uint32_t id : sources) {
        const ClosedEntry& x = index.closed[id];
        for (std::uint32_t g : x.gen_subsets) {
            const GenEntry& gen = index.generators[g];
            if (antecedent_in_window(gen.sup.count, gen.min_subset_sup, x.sup.count,
                                     x.max_superset_sup, gamma))
                out.rules.push_back(make_rule(gen.set, x, gen.sup.count));
        }
    }
    sort_canonical(out.rules);
    return out;
}

}  // namespace

std::string_view provenance_name(Provenance p) {
    switch (p) {
        case Provenance::complete: return "complete";
        case Provenance::two_phase: return "twophase";
        case Provenance::heuristic: return "heuristic";
        case Provenance::closure_basis: return "bstar";
        case Provenance::oracle_all: return "oracle-ar";
        case Provenance::oracle_representative: return "oracle-rr";
        case Provenance::oracle_closure_basis: return "oracle-bstar";
    }
    return "?";
}

bool RuleSet::contains(const Rule& r) const {
    return std::find(rules.begin(), rules.end(), r) != rules.end();
}

void sort_canonical(std::vector<Rule>& rules) {
    std::vector<std::pair<Itemset, std::size_t>> keyed;
    keyed.reserve(rules.size());
    for (std::size_t i = 0; i < rules.size(); ++i) keyed.emplace_back(rules[i].item_union(), i);
    std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return lex_less(a.first, b.first);
        return lex_less(rules[a.second].antecedent, rules[b.second].antecedent);
    });
    std::vector<Rule> sorted;
    sorted.reserve(rules.size());
    for (const auto& [u, i] : keyed) sorted.push_back(std::move(rules[i]));
    rules = std::move(sorted);
}

bool covers(const Rule& r, const Rule& rp) {
    return r.antecedent.subset_of(rp.antecedent) &&
           rp.item_union().subset_of(r.item_union());
}

bool closure_covers(const LatticeIndex& index, const Rule& r, const Rule& rp) {
    const TransactionDB& db = index.dataset();
    return r.antecedent.subset_of(closure(db, rp.antecedent)) &&
           rp.item_union().subset_of(closure(db, r.item_union()));
}

bool closure_equivalent(const LatticeIndex& index, const Rule& r, const Rule& rp) {
    const TransactionDB& db = index.dataset();
    return closure(db, r.antecedent) == closure(db, rp.antecedent) &&
           closure(db, r.item_union()) == closure(db, rp.item_union());
}

std::vector<std::uint32_t> representative_sources(const LatticeIndex& index,
                                                  const Rational& gamma) {
    check_gamma(gamma);
    std::vector<std::uint32_t> out;
    for (std::uint32_t id = 0; id < index.closed.size(); ++id) {
        if (index.closed[id].set.empty()) continue;
        const Bound mxgs = max_qualifying_gen_sup(index, id, gamma);
        if (source_test(mxgs, index.closed[id].max_superset_sup, gamma)) out.push_back(id);
    }
    return out;
}

RuleSet representative_rules(const LatticeIndex& index, const Rational& gamma) {
    return emit_representative(index, gamma, representative_sources(index, gamma),
                               Provenance::complete);
}

RuleSet representative_rules(const LatticeIndex& index, const BreakpointTable& table,
                             const Rational& gamma) {
    check_gamma(gamma);
    if (table.tau != index.tau || table.n != index.n || table.rows.size() != index.closed.size())
        throw std::invalid_argument(
            "breakpoint table does not belong to this index (min-support " + table.tau.str() +
            " vs " + index.tau.str() + ")");
    std::vector<std::uint32_t> sources;
    for (std::uint32_t id = 0; id < index.closed.size(); ++id) {
        if (index.closed[id].set.empty()) continue;
        const Bound mxgs = table.lookup(id, gamma);
        if (source_test(mxgs, index.closed[id].max_superset_sup, gamma)) sources.push_back(id);
    }
    RuleSet out = emit_representative(index, gamma, sources, Provenance::two_phase);
    return out;
}

RuleSet representative_rules_heuristic(const LatticeIndex& index, const Rational& gamma) {
    check_gamma(gamma);
    std::vector<std::uint32_t> sources;
    for (std::uint32_t id = 0; id < index.closed.size(); ++id) {
        const ClosedEntry& x = index.closed[id];
        if (x.set.empty()) continue;
        // sup(X) >= gamma * kmns(X) > mxs(X); an infinite kmns fails the
        // left inequality, so such sets never pass
        const Bound& kmns = x.min_gen_subset_sup;
        if (kmns.is_infinite()) continue;
        if (compare_scaled(gamma, kmns, static_cast<std::uint64_t>(x.sup.count)) > 0) continue;
        if (compare_scaled(gamma, kmns, x.max_superset_sup) <= 0) continue;
        sources.push_back(id);
    }
    return emit_representative(index, gamma, sources, Provenance::heuristic);
}

std::vector<std::uint32_t> closure_basis_sources(const LatticeIndex& index,
                                                 const Rational& gamma) {
    check_gamma(gamma);
    std::vector<std::uint32_t> out;
    for (std::uint32_t id = 0; id < index.closed.size(); ++id) {
        const ClosedEntry& x = index.closed[id];
        if (x.set.empty()) continue;
        const Bound mxgs = max_qualifying_gen_sup(index, id, gamma);
        if (!source_test(mxgs, x.max_superset_sup, gamma)) continue;
        if (!mxgs.is_finite() || mxgs.count() <= x.sup.count) continue;  // mxgs > sup(X)
        out.push_back(id);
    }
    return out;
}

RuleSet closure_basis_rules(const LatticeIndex& index, const Rational& gamma) {
    RuleSet out;
    out.tau = index.tau;
    out.gamma = gamma;
    out.provenance = Provenance::closure_basis;
    for (std::uint32_t id : closure_basis_sources(index, gamma)) {
        const ClosedEntry& x = index.closed[id];
        for (std::uint32_t c : x.closed_subsets) {
            const ClosedEntry& x0 = index.closed[c];
            // the window over closed antecedents uses the minimum support of
            // *closed* proper subsets; sup(X0) > sup(X) holds for every
            // closed proper subset, so confidence stays below 1
            if (antecedent_in_window(x0.sup.count, x0.min_closed_subset_sup, x.sup.count,
                                     x.max_superset_sup, gamma))
                out.rules.push_back(make_rule(x0.set, x, x0.sup.count));
        }
    }
    sort_canonical(out.rules);
    return out;
}

}  // namespace rulebasis
