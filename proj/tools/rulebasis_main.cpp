// rulebasis command line: mine closed sets and generators, emit rule bases,
// persist/reload the support-only index, and check the fast generators
// against the brute-force reference.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rulebasis/index_io.hpp"
#include "rulebasis/oracle.hpp"

namespace {

using namespace rulebasis;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct MineArgs {
    std::string input;
    std::string format = "basket";
    std::string min_support;
    std::string out;
    std::string save_index;
};

struct RulesArgs {
    std::string input;
    std::string format = "basket";
    std::string min_support;
    std::string confidence;
    std::string algorithm = "complete";
    std::string load_index;
    std::string out;
    bool json = false;
};

struct VerifyArgs {
    std::uint32_t trials = 100;
    std::uint64_t seed = 1;
    std::uint32_t max_items = 6;
    std::uint32_t max_transactions = 12;
};

// min-support accepts a rational/decimal/percent in (0,1] or an absolute
// count of at least 2, which is normalized to count/n
Rational parse_min_support(const std::string& text, std::uint32_t n) {
    const bool plain_integer = !text.empty() &&
                               text.find_first_not_of("0123456789") == std::string::npos;
    Rational r = Rational::parse(text);
    if (plain_integer && r.den() == 1 && r.num() >= 2) {
        if (r.num() > n)
            throw ParseError("absolute min-support " + text + " exceeds the " +
                             std::to_string(n) + " transactions");
        return Rational(r.num(), n);
    }
    if (r.is_zero() || compare_scaled(r, 1, 1) > 0)
        throw ParseError("min-support must lie in (0,1], got " + text);
    return r;
}

Rational parse_confidence(const std::string& text) {
    Rational r = Rational::parse(text);
    if (r.is_zero() || compare_scaled(r, 1, 1) > 0)
        throw ParseError("confidence must lie in (0,1], got " + text);
    return r;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw ParseError("cannot write '" + path + "'");
    return file;
}

void print_supported(std::ostream& out, const LatticeIndex& index, const Itemset& s,
                     const Support& sup) {
    out << index.set_name(s) << "\t" << sup.str() << "\n";
}

int cmd_mine(const MineArgs& args) {
    auto db = std::make_shared<const TransactionDB>(
        TransactionDB::load_file(args.input, parse_format(args.format)));
    const Rational tau = parse_min_support(args.min_support, db->transaction_count());
    const LatticeIndex index = mine(db, tau);
    const BreakpointTable table = build_breakpoint_table(index);

    std::ofstream file;
    std::ostream& out = open_output(args.out, file);
    out << "transactions: " << index.n << "\n";
    out << "items: " << index.item_names.size() << "\n";
    out << "min-support: " << tau.str() << " (count " << index.min_count() << ")\n";
    out << "closed sets: " << index.closed.size() << "\n";
    for (const ClosedEntry& c : index.closed) print_supported(out, index, c.set, c.sup);
    out << "generators: " << index.generators.size() << "\n";
    for (const GenEntry& g : index.generators) print_supported(out, index, g.set, g.sup);

    if (!args.save_index.empty()) save_index_file(index, table, args.save_index);
    return kExitOk;
}

int cmd_rules(const RulesArgs& args) {
    const Rational gamma = parse_confidence(args.confidence);

    std::optional<LatticeIndex> index;
    std::optional<BreakpointTable> table;
    if (!args.load_index.empty()) {
        if (!args.input.empty())
            throw ParseError("pass either --input or --load-index, not both");
        auto [i, t] = load_index_file(args.load_index);
        if (!args.min_support.empty()) {
            const Rational requested = parse_min_support(args.min_support, i.n);
            if (requested != i.tau)
                throw ParseError("--min-support " + requested.str() +
                                 " does not match the loaded index (" + i.tau.str() + ")");
        }
        index.emplace(std::move(i));
        table.emplace(std::move(t));
    } else {
        if (args.input.empty()) throw ParseError("either --input or --load-index is required");
        if (args.min_support.empty()) throw ParseError("--min-support is required with --input");
        auto db = std::make_shared<const TransactionDB>(
            TransactionDB::load_file(args.input, parse_format(args.format)));
        const Rational tau = parse_min_support(args.min_support, db->transaction_count());
        index.emplace(mine(db, tau));
        table.emplace(build_breakpoint_table(*index));
    }

    RuleSet rules;
    if (args.algorithm == "complete")
        rules = representative_rules(*index, gamma);
    else if (args.algorithm == "twophase")
        rules = representative_rules(*index, *table, gamma);
    else if (args.algorithm == "heuristic")
        rules = representative_rules_heuristic(*index, gamma);
    else if (args.algorithm == "bstar")
        rules = closure_basis_rules(*index, gamma);
    else
        throw ParseError("unknown algorithm '" + args.algorithm +
                         "' (expected complete, twophase, heuristic or bstar)");

    std::ofstream file;
    std::ostream& out = open_output(args.out, file);
    for (const Rule& r : rules.rules)
        out << (args.json ? rule_to_json_line(r, index->item_names)
                          : rule_to_text_line(r, index->item_names))
            << "\n";
    return kExitOk;
}

int cmd_verify(const VerifyArgs& args) {
    if (args.max_items < 1 || args.max_items > 6)
        throw ParseError("--max-items must lie in [1,6]");
    if (args.max_transactions < 1 || args.max_transactions > 12)
        throw ParseError("--max-transactions must lie in [1,12]");
    VerifySpec spec;
    spec.trials = args.trials;
    spec.seed = args.seed;
    spec.max_items = args.max_items;
    spec.max_transactions = args.max_transactions;
    const VerifySummary sum = run_equivalence_suite(spec, std::cout);
    return sum.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"concise association-rule bases from frequent closed itemsets"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "rulebasis 1.0.0");

    MineArgs mine_args;
    CLI::App* mine_cmd = app.add_subcommand(
        "mine", "enumerate frequent closed sets and minimal generators");
    mine_cmd->add_option("--input", mine_args.input, "transaction file")->required();
    mine_cmd->add_option("--format", mine_args.format, "basket or csv-matrix (default basket)");
    mine_cmd->add_option("--min-support", mine_args.min_support,
                         "threshold in (0,1] as rational/decimal/percent, or absolute count")
        ->required();
    mine_cmd->add_option("--out", mine_args.out, "write the listing here instead of stdout");
    mine_cmd->add_option("--save-index", mine_args.save_index,
                         "persist the index and breakpoint table as one JSON document");

    RulesArgs rules_args;
    CLI::App* rules_cmd = app.add_subcommand("rules", "generate a rule basis");
    rules_cmd->add_option("--input", rules_args.input, "transaction file");
    rules_cmd->add_option("--format", rules_args.format, "basket or csv-matrix (default basket)");
    rules_cmd->add_option("--min-support", rules_args.min_support, "support threshold");
    rules_cmd->add_option("--confidence", rules_args.confidence, "confidence threshold in (0,1]")
        ->required();
    rules_cmd->add_option("--algorithm", rules_args.algorithm,
                          "complete | twophase | heuristic | bstar (default complete)");
    rules_cmd->add_option("--load-index", rules_args.load_index,
                          "reuse a saved index instead of mining");
    rules_cmd->add_option("--out", rules_args.out, "write rules here instead of stdout");
    rules_cmd->add_flag("--json", rules_args.json, "one JSON object per rule");

    VerifyArgs verify_args;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "check the fast generators against the brute-force reference");
    verify_cmd->add_option("--trials", verify_args.trials, "number of random databases");
    verify_cmd->add_option("--seed", verify_args.seed, "seed of the first random database");
    verify_cmd->add_option("--max-items", verify_args.max_items, "random database item cap (<=6)");
    verify_cmd->add_option("--max-transactions", verify_args.max_transactions,
                           "random database transaction cap (<=12)");

    try {
        app.parse(argc, argv);
        if (mine_cmd->parsed()) return cmd_mine(mine_args);
        if (rules_cmd->parsed()) return cmd_rules(rules_args);
        if (verify_cmd->parsed()) return cmd_verify(verify_args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;  // prints help/version/error
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
