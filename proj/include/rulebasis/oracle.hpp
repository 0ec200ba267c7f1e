// Brute-force reference generators, straight from the definitions, plus the
// equivalence harness that checks the fast generators against them on small
// instances.

#ifndef RULEBASIS_ORACLE_HPP
#define RULEBASIS_ORACLE_HPP

#include <cstdint>
#include <iosfwd>

#include "rulebasis/rules.hpp"

namespace rulebasis {

// Hard cap for the exhaustive enumerations below; larger inputs are refused
// outright rather than silently crawling.
inline constexpr std::uint32_t kOracleItemCap = 16;

// Every rule X -> Y over disjoint pairs with Y nonempty that meets both
// thresholds. O(3^m); throws std::invalid_argument above the item cap.
RuleSet all_rules(const TransactionDB& db, const Rational& tau, const Rational& gamma);

// The rules of all_rules that lie in no other rule's cover set.
RuleSet representative_rules_bruteforce(const TransactionDB& db, const Rational& tau,
                                        const Rational& gamma);

// The confidence<1 rules of all_rules that are closure-based redundant only
// with respect to closure-equivalent rules, collapsed to the one
// representative per equivalence class that has a closed antecedent and a
// closed union.
RuleSet closure_basis_bruteforce(const TransactionDB& db, const Rational& tau,
                                 const Rational& gamma);

// Deterministic small database from a seed. Items are single letters drawn
// from a..f; empty transactions are dropped and at least one nonempty
// transaction is guaranteed. Requires max_items in [1,6] and
// max_transactions in [1,12].
TransactionDB random_db(std::uint64_t seed, std::uint32_t max_items = 6,
                        std::uint32_t max_transactions = 12);

// Bundled verification datasets (also shipped under data/):
//   demo6    6x6 matrix whose lattice exercises every generator
//   edge13   13 transactions where the heuristic filter loses a rule
//   edge35   35 transactions separating the two subset-side bounds
//   seesaw10 10 transactions where lowering confidence shrinks the basis
enum class Fixture { demo6, edge13, edge35, seesaw10 };
std::string_view fixture_name(Fixture f);
const std::string& fixture_basket(Fixture f);
TransactionDB fixture_db(Fixture f);

struct RuleSetDiff {
    std::vector<Rule> missing;  // expected but absent
    std::vector<Rule> extra;    // present but unexpected
    bool empty() const { return missing.empty() && extra.empty(); }
};

// Set difference in both directions; rule identity is (antecedent, consequent).
RuleSetDiff diff_rules(const RuleSet& actual, const RuleSet& expected);

struct OracleReport {
    RuleSet ar, rr, bstar;           // definitional ground truth
    RuleSetDiff complete_diff;       // complete generator vs rr
    RuleSetDiff two_phase_diff;      // two-phase generator vs complete
    RuleSetDiff basis_diff;          // closure-basis generator vs bstar
    std::vector<Rule> heuristic_extra;  // heuristic rules outside complete

    bool ok() const {
        return complete_diff.empty() && two_phase_diff.empty() && basis_diff.empty() &&
               heuristic_extra.empty();
    }
};

// Runs all four fast generators against the brute force at one (tau, gamma).
OracleReport compare_generators(const TransactionDB& db, const LatticeIndex& index,
                                const BreakpointTable& table, const Rational& gamma);

struct VerifySpec {
    std::uint64_t seed = 1;
    std::uint32_t trials = 100;
    std::uint32_t max_items = 6;
    std::uint32_t max_transactions = 12;
};

struct VerifySummary {
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    bool ok() const { return failures == 0; }
};

// Fixture databases plus `trials` random ones, each over the standard
// threshold grid (min-support 1/n, 0.15, 0.5 x the eight confidence values).
// Prints one line per database and a final summary.
VerifySummary run_equivalence_suite(const VerifySpec& spec, std::ostream& out);

}  // namespace rulebasis

#endif
