#include "rulebasis/oracle.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rulebasis {

namespace {

// All-subset support table over item masks, by a superset-sum over the exact
// transaction masks: sup[m] = #transactions whose mask contains m.
struct MaskTable {
    std::uint32_t m = 0;
    std::uint32_t n = 0;
    std::vector<std::uint32_t> sup;
    std::vector<std::uint32_t> tx_masks;
    mutable std::vector<std::int64_t> clos;  // -1 until computed

    explicit MaskTable(const TransactionDB& db) {
        if (db.item_count() > kOracleItemCap)
            throw std::invalid_argument("oracle refuses " + std::to_string(db.item_count()) +
                                        " items (cap " + std::to_string(kOracleItemCap) + ")");
        m = db.item_count();
        n = db.transaction_count();
        sup.assign(std::size_t{1} << m, 0);
        clos.assign(std::size_t{1} << m, -1);
        tx_masks.reserve(n);
        for (std::uint32_t t = 0; t < n; ++t) {
            std::uint32_t mask = 0;
            for (ItemId id : db.transaction(t)) mask |= 1u << id;
            tx_masks.push_back(mask);
            ++sup[mask];
        }
        for (std::uint32_t bit = 0; bit < m; ++bit)
            for (std::uint32_t s = 0; s < sup.size(); ++s)
                if (!(s & (1u << bit))) sup[s] += sup[s | (1u << bit)];
    }

    std::uint32_t closure_of(std::uint32_t mask) const {
        if (clos[mask] >= 0) return static_cast<std::uint32_t>(clos[mask]);
        std::uint32_t acc = (std::uint32_t{1} << m) - 1;  // universe when nothing contains mask
        if (sup[mask] > 0) {
            for (std::uint32_t tm : tx_masks)
                if ((mask & ~tm) == 0) acc &= tm;
        }
        clos[mask] = acc;
        return acc;
    }
};

Itemset mask_to_set(std::uint32_t mask) {
    std::vector<ItemId> ids;
    for (std::uint32_t b = 0; b < 32; ++b)
        if (mask & (1u << b)) ids.push_back(b);
    return Itemset(std::move(ids));
}

struct MaskRule {
    std::uint32_t x;  // antecedent
    std::uint32_t u;  // antecedent | consequent
};

std::vector<MaskRule> enumerate_ar_masks(const MaskTable& tab, const Rational& tau,
                                         const Rational& gamma) {
    std::vector<MaskRule> out;
    const std::uint32_t full = (std::uint32_t{1} << tab.m) - 1;
    for (std::uint32_t u = 1; u <= full; ++u) {
        const std::uint32_t su = tab.sup[u];
        if (compare(Support{su, tab.n}, tau) < 0) continue;
        // antecedents are the proper submasks of u, the empty one included
        std::uint32_t x = u;
        do {
            x = (x - 1) & u;
            if (compare_scaled(gamma, tab.sup[x], su) <= 0)  // conf >= gamma
                out.push_back({x, u});
        } while (x != 0);
    }
    return out;
}

RuleSet to_ruleset(const MaskTable& tab, const std::vector<MaskRule>& rules, const Rational& tau,
                   const Rational& gamma, Provenance prov) {
    RuleSet out;
    out.tau = tau;
    out.gamma = gamma;
    out.provenance = prov;
    out.rules.reserve(rules.size());
    for (const MaskRule& r : rules)
        out.rules.push_back(Rule{mask_to_set(r.x), mask_to_set(r.u & ~r.x),
                                 Support{tab.sup[r.u], tab.n}, tab.sup[r.x]});
    sort_canonical(out.rules);
    return out;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

RuleSet all_rules(const TransactionDB& db, const Rational& tau, const Rational& gamma) {
    const MaskTable tab(db);
    return to_ruleset(tab, enumerate_ar_masks(tab, tau, gamma), tau, gamma,
                      Provenance::oracle_all);
}

RuleSet representative_rules_bruteforce(const TransactionDB& db, const Rational& tau,
                                        const Rational& gamma) {
    const MaskTable tab(db);
    const std::vector<MaskRule> ar = enumerate_ar_masks(tab, tau, gamma);
    std::vector<MaskRule> rr;
    for (const MaskRule& r : ar) {
        bool covered = false;
        for (const MaskRule& c : ar) {
            if (c.x == r.x && c.u == r.u) continue;
            if ((c.x & ~r.x) == 0 && (r.u & ~c.u) == 0) {  // c.x <= r.x, r.u <= c.u
                covered = true;
                break;
            }
        }
        if (!covered) rr.push_back(r);
    }
    return to_ruleset(tab, rr, tau, gamma, Provenance::oracle_representative);
}

RuleSet closure_basis_bruteforce(const TransactionDB& db, const Rational& tau,
                                 const Rational& gamma) {
    const MaskTable tab(db);
    const std::vector<MaskRule> ar = enumerate_ar_masks(tab, tau, gamma);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> classes;  // (closure X, closure U)
    for (const MaskRule& r : ar) {
        if (tab.sup[r.u] == tab.sup[r.x]) continue;  // full implication
        const std::uint32_t cx = tab.closure_of(r.x);
        const std::uint32_t cu = tab.closure_of(r.u);
        bool redundant = false;
        for (const MaskRule& c : ar) {
            if (c.x == r.x && c.u == r.u) continue;
            // skip closure-equivalent witnesses
            if (tab.closure_of(c.x) == cx && tab.closure_of(c.u) == cu) continue;
            // r redundant wrt c: c.x inside closure(r.x), r.u inside closure(c.u)
            if ((c.x & ~cx) == 0 && (r.u & ~tab.closure_of(c.u)) == 0) {
                redundant = true;
                break;
            }
        }
        if (!redundant) classes.emplace_back(cx, cu);
    }
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    std::vector<MaskRule> canon;
    canon.reserve(classes.size());
    for (const auto& [cx, cu] : classes) canon.push_back({cx, cu});
    return to_ruleset(tab, canon, tau, gamma, Provenance::oracle_closure_basis);
}

TransactionDB random_db(std::uint64_t seed, std::uint32_t max_items,
                        std::uint32_t max_transactions) {
    if (max_items < 1 || max_items > 6)
        throw std::invalid_argument("random_db: max_items must lie in [1,6]");
    if (max_transactions < 1 || max_transactions > 12)
        throw std::invalid_argument("random_db: max_transactions must lie in [1,12]");

    std::uint64_t state = seed * 0x2545f4914f6cdd1dull + 0x1234567890abcdefull;
    const std::uint32_t m = 1 + static_cast<std::uint32_t>(splitmix64(state) % max_items);
    const std::uint32_t rows = 1 + static_cast<std::uint32_t>(splitmix64(state) % max_transactions);
    const std::uint32_t density = 20 + static_cast<std::uint32_t>(splitmix64(state) % 66);

    std::string text;
    bool any = false;
    for (std::uint32_t t = 0; t < rows; ++t) {
        std::string line;
        for (std::uint32_t i = 0; i < m; ++i) {
            if (splitmix64(state) % 100 < density) {
                if (!line.empty()) line += ' ';
                line += static_cast<char>('a' + i);
            }
        }
        if (line.empty()) continue;  // basket files cannot carry empty rows
        any = true;
        text += line;
        text += '\n';
    }
    if (!any) text = "a\n";
    return TransactionDB::from_text(text, Format::basket, "<random>");
}

namespace {

const std::string kDemo6 =
    "a b c d e f\n"
    "a b c d e\n"
    "a b\n"
    "a c\n"
    "b c\n"
    "a d\n";

std::string repeat_lines(std::initializer_list<std::pair<const char*, int>> parts) {
    std::string out;
    for (const auto& [line, times] : parts)
        for (int i = 0; i < times; ++i) {
            out += line;
            out += '\n';
        }
    return out;
}

const std::string kEdge13 = repeat_lines({{"a b c", 8}, {"a b", 1}, {"a", 3}, {"b", 1}});
const std::string kEdge35 = repeat_lines({{"a b c d e", 2}, {"a b c d", 3}, {"a", 15}, {"b", 15}});
const std::string kSeesaw10 = repeat_lines({{"a b", 8}, {"a", 1}, {"b", 1}});

}  // namespace

std::string_view fixture_name(Fixture f) {
    switch (f) {
        case Fixture::demo6: return "demo6";
        case Fixture::edge13: return "edge13";
        case Fixture::edge35: return "edge35";
        case Fixture::seesaw10: return "seesaw10";
    }
    return "?";
}

const std::string& fixture_basket(Fixture f) {
    switch (f) {
        case Fixture::demo6: return kDemo6;
        case Fixture::edge13: return kEdge13;
        case Fixture::edge35: return kEdge35;
        case Fixture::seesaw10: return kSeesaw10;
    }
    throw std::logic_error("unknown fixture");
}

TransactionDB fixture_db(Fixture f) {
    return TransactionDB::from_text(fixture_basket(f), Format::basket,
                                    std::string(fixture_name(f)));
}

RuleSetDiff diff_rules(const RuleSet& actual, const RuleSet& expected) {
    RuleSetDiff d;
    for (const Rule& r : expected.rules)
        if (!actual.contains(r)) d.missing.push_back(r);
    for (const Rule& r : actual.rules)
        if (!expected.contains(r)) d.extra.push_back(r);
    return d;
}

OracleReport compare_generators(const TransactionDB& db, const LatticeIndex& index,
                                const BreakpointTable& table, const Rational& gamma) {
    OracleReport rep;
    rep.ar = all_rules(db, index.tau, gamma);
    rep.rr = representative_rules_bruteforce(db, index.tau, gamma);
    rep.bstar = closure_basis_bruteforce(db, index.tau, gamma);

    const RuleSet complete = representative_rules(index, gamma);
    const RuleSet two_phase = representative_rules(index, table, gamma);
    const RuleSet heuristic = representative_rules_heuristic(index, gamma);
    const RuleSet basis = closure_basis_rules(index, gamma);

    rep.complete_diff = diff_rules(complete, rep.rr);
    rep.two_phase_diff = diff_rules(two_phase, complete);
    rep.basis_diff = diff_rules(basis, rep.bstar);
    for (const Rule& r : heuristic.rules)
        if (!complete.contains(r)) rep.heuristic_extra.push_back(r);
    return rep;
}

namespace {

std::string describe_rule(const LatticeIndex& index, const Rule& r) {
    return index.set_name(r.antecedent) + " -> " + index.set_name(r.consequent);
}

void report_failure(std::ostream& out, const LatticeIndex& index, const char* what,
                    const RuleSetDiff& d) {
    for (const Rule& r : d.missing)
        out << "    " << what << " missing: " << describe_rule(index, r) << "\n";
    for (const Rule& r : d.extra)
        out << "    " << what << " extra:   " << describe_rule(index, r) << "\n";
}

// one database against the whole threshold grid; returns (cases, failures)
std::pair<std::uint64_t, std::uint64_t> check_db(const TransactionDB& db, const std::string& name,
                                                 std::ostream& out) {
    static const Rational gammas[] = {
        Rational(3, 10), Rational(4, 10), Rational(1, 2),  Rational(2, 3),
        Rational(7, 10), Rational(3, 4),  Rational(8, 10), Rational(1, 1),
    };
    std::uint64_t cases = 0, failures = 0;
    auto shared = std::make_shared<const TransactionDB>(db);
    const Rational taus[] = {Rational(1, db.transaction_count()), Rational(15, 100),
                             Rational(1, 2)};
    for (const Rational& tau : taus) {
        const LatticeIndex index = mine(shared, tau);
        const BreakpointTable table = build_breakpoint_table(index);
        for (const Rational& gamma : gammas) {
            ++cases;
            const OracleReport rep = compare_generators(db, index, table, gamma);
            if (!rep.ok()) {
                ++failures;
                out << "  FAIL " << name << " min-support=" << tau.str()
                    << " confidence=" << gamma.str() << "\n";
                report_failure(out, index, "complete", rep.complete_diff);
                report_failure(out, index, "twophase", rep.two_phase_diff);
                report_failure(out, index, "bstar", rep.basis_diff);
                for (const Rule& r : rep.heuristic_extra)
                    out << "    heuristic extra: " << describe_rule(index, r) << "\n";
            }
        }
    }
    return {cases, failures};
}

}  // namespace

VerifySummary run_equivalence_suite(const VerifySpec& spec, std::ostream& out) {
    VerifySummary sum;
    const auto run_one = [&](const TransactionDB& db, const std::string& name) {
        const auto [cases, failures] = check_db(db, name, out);
        sum.cases += cases;
        sum.failures += failures;
        out << (failures == 0 ? "PASS " : "FAIL ") << name << " (n=" << db.transaction_count()
            << ", m=" << db.item_count() << "): " << cases << " cases, " << failures
            << " failures\n";
    };

    for (Fixture f : {Fixture::demo6, Fixture::edge13, Fixture::edge35, Fixture::seesaw10})
        run_one(fixture_db(f), std::string(fixture_name(f)));

    for (std::uint32_t t = 0; t < spec.trials; ++t) {
        const std::uint64_t seed = spec.seed + t;
        run_one(random_db(seed, spec.max_items, spec.max_transactions),
                "random-" + std::to_string(seed));
    }

    out << "summary: " << sum.cases << " cases, " << sum.failures << " failures\n";
    return sum;
}

}  // namespace rulebasis
