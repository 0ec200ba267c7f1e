#include <doctest.h>

#include <sstream>

#include "rulebasis/index_io.hpp"
#include "test_support.hpp"

using namespace rulebasis;
using namespace testsup;

namespace {

std::string serialize_rules(const RuleSet& rules, const std::vector<std::string>& names) {
    std::string out;
    for (const Rule& r : rules.rules) {
        out += rule_to_json_line(r, names);
        out += '\n';
    }
    return out;
}

}  // namespace

TEST_CASE("saved index reproduces every generator byte for byte") {
    for (Fixture f : {Fixture::demo6, Fixture::edge13, Fixture::edge35, Fixture::seesaw10}) {
        const TransactionDB db = fixture_db(f);
        for (const Rational& tau : {Rational(1, db.transaction_count()), Rational(15, 100)}) {
            const LatticeIndex index = mine(db, tau);
            const BreakpointTable table = build_breakpoint_table(index);

            std::ostringstream doc;
            save_index(index, table, doc);
            std::istringstream in(doc.str());
            const auto [loaded, loaded_table] = load_index(in);

            CHECK(loaded.tau == index.tau);
            CHECK(loaded.n == index.n);
            CHECK(loaded.item_names == index.item_names);

            for (const Rational& g : {Rational(4, 10), Rational(2, 3), Rational(1, 1)}) {
                CHECK(serialize_rules(representative_rules(index, g), index.item_names) ==
                      serialize_rules(representative_rules(loaded, g), loaded.item_names));
                CHECK(serialize_rules(representative_rules(index, table, g), index.item_names) ==
                      serialize_rules(representative_rules(loaded, loaded_table, g),
                                      loaded.item_names));
                CHECK(serialize_rules(representative_rules_heuristic(index, g),
                                      index.item_names) ==
                      serialize_rules(representative_rules_heuristic(loaded, g),
                                      loaded.item_names));
                CHECK(serialize_rules(closure_basis_rules(index, g), index.item_names) ==
                      serialize_rules(closure_basis_rules(loaded, g), loaded.item_names));
            }
        }
    }
}

TEST_CASE("a reloaded index is detached from its dataset") {
    const TransactionDB db = demo6();
    const LatticeIndex index = mine(db, Rational(15, 100));
    std::ostringstream doc;
    save_index(index, build_breakpoint_table(index), doc);
    std::istringstream in(doc.str());
    const auto [loaded, table] = load_index(in);
    CHECK_THROWS_AS(loaded.dataset(), std::logic_error);
    // rule generation works regardless
    CHECK(closure_basis_rules(loaded, Rational(4, 10)).size() == 8);
    (void)table;
}

TEST_CASE("index documents reject tampering") {
    const TransactionDB db = demo6();
    const LatticeIndex index = mine(db, Rational(15, 100));
    std::ostringstream doc;
    save_index(index, build_breakpoint_table(index), doc);
    const std::string good = doc.str();

    auto load_text = [](std::string text) {
        std::istringstream in(text);
        return load_index(in);
    };

    CHECK_THROWS_AS(load_text("not json"), ParseError);
    CHECK_THROWS_AS(load_text("{\"format\":\"other\"}"), ParseError);
    CHECK_THROWS_AS(load_text(R"({"format":"rulebasis-index","version":2})"), ParseError);

    std::string bad = good;
    const auto pos = bad.find("\"max_superset_count\": 2");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 23, "\"max_superset_count\": 3");
    CHECK_THROWS_AS(load_text(bad), ParseError);
}

TEST_CASE("rule json lines") {
    const TransactionDB db = demo6();
    Rule r;
    r.antecedent = set_of(db, "b");
    r.consequent = set_of(db, "acde");
    r.sup = Support{2, 6};
    r.antecedent_count = 4;
    CHECK(rule_to_json_line(r, db.item_names()) ==
          R"({"antecedent":["b"],"consequent":["a","c","d","e"],"support_count":2,"n":6,"confidence":"1/2"})");

    const Rule back = rule_from_json_line(rule_to_json_line(r, db.item_names()), db);
    CHECK(back == r);
    CHECK(back.sup == r.sup);
    CHECK(back.antecedent_count == r.antecedent_count);
    CHECK(back.confidence() == Rational(1, 2));

    // confidence-1 rules serialize with an explicit denominator
    Rule full;
    full.antecedent = set_of(db, "f");
    full.consequent = set_of(db, "abcde");
    full.sup = Support{1, 6};
    full.antecedent_count = 1;
    const std::string line = rule_to_json_line(full, db.item_names());
    CHECK(line.find("\"confidence\":\"1/1\"") != std::string::npos);
    CHECK(rule_from_json_line(line, db) == full);

    CHECK_THROWS_AS(rule_from_json_line("{}", db), ParseError);
    CHECK_THROWS_AS(rule_from_json_line("nope", db), ParseError);
    CHECK_THROWS_AS(
        rule_from_json_line(
            R"({"antecedent":["b"],"consequent":["b"],"support_count":2,"n":6,"confidence":"1/2"})",
            db),
        ParseError);
    CHECK_THROWS_AS(
        rule_from_json_line(
            R"({"antecedent":["b"],"consequent":[],"support_count":2,"n":6,"confidence":"1/2"})",
            db),
        ParseError);
    CHECK_THROWS_AS(
        rule_from_json_line(
            R"({"antecedent":["b"],"consequent":["a"],"support_count":3,"n":6,"confidence":"2/5"})",
            db),
        ParseError);
}

TEST_CASE("json round trip preserves exact values on generated rules") {
    for (std::uint64_t seed = 1400; seed < 1420; ++seed) {
        const TransactionDB db = random_db(seed);
        const LatticeIndex index = mine(db, Rational(1, db.transaction_count()));
        for (const Rule& r : representative_rules(index, Rational(1, 2)).rules) {
            const Rule back = rule_from_json_line(rule_to_json_line(r, db.item_names()), db);
            CHECK(back == r);
            CHECK(back.sup == r.sup);
            CHECK(back.antecedent_count == r.antecedent_count);
        }
    }
}

TEST_CASE("text lines follow the bracketed confidence/support style") {
    const TransactionDB db = demo6();
    Rule r;
    r.antecedent = set_of(db, "b");
    r.consequent = set_of(db, "acde");
    r.sup = Support{2, 6};
    r.antecedent_count = 4;
    CHECK(rule_to_text_line(r, db.item_names()) == "[c:0.50, s:33.33] b ⇒ a c d e");

    Rule empty_ant;
    empty_ant.antecedent = Itemset{};
    empty_ant.consequent = set_of(db, "ad");
    empty_ant.sup = Support{3, 6};
    empty_ant.antecedent_count = 6;
    CHECK(rule_to_text_line(empty_ant, db.item_names()) == "[c:0.50, s:50.00] {} ⇒ a d");
}
