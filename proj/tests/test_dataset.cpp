#include <doctest.h>

#include <fstream>
#include <sstream>

#include "rulebasis/dataset.hpp"
#include "test_support.hpp"

using namespace rulebasis;
using namespace testsup;

TEST_CASE("itemset basics") {
    Itemset s({3, 1, 2, 1});
    CHECK(s.size() == 3);
    CHECK(s.ids() == std::vector<ItemId>{1, 2, 3});
    CHECK(s.contains(2));
    CHECK(!s.contains(0));
    CHECK(Itemset({1, 2}).subset_of(s));
    CHECK(Itemset({1, 2}).proper_subset_of(s));
    CHECK(!s.proper_subset_of(s));
    CHECK(s.subset_of(s));
    CHECK(Itemset({0, 4}).disjoint_with(s));
    CHECK(!Itemset({0, 3}).disjoint_with(s));
    CHECK(Itemset({1, 2}).set_union(Itemset({2, 5})) == Itemset({1, 2, 5}));
    CHECK(s.set_minus(Itemset({2})) == Itemset({1, 3}));
    CHECK(s.set_intersect(Itemset({2, 3, 4})) == Itemset({2, 3}));
    CHECK(Itemset{}.empty());
    CHECK(Itemset{}.subset_of(s));

    // {} < {a} < {a,b} < {b}
    CHECK(lex_less(Itemset{}, Itemset({0})));
    CHECK(lex_less(Itemset({0}), Itemset({0, 1})));
    CHECK(lex_less(Itemset({0, 1}), Itemset({1})));
    // cardinality first in enumeration order
    CHECK(card_lex_less(Itemset({1}), Itemset({0, 1})));
    CHECK(card_lex_less(Itemset({0, 1}), Itemset({0, 2})));
}

TEST_CASE("csv matrix fixture loads with deterministic ids") {
    const TransactionDB db = TransactionDB::load_file(data_path("demo6.csv"), Format::csv_matrix);
    CHECK(db.transaction_count() == 6);
    CHECK(db.item_count() == 6);
    CHECK(db.item_names() == std::vector<std::string>{"a", "b", "c", "d", "e", "f"});
    const TidSet f = db.tidlist(*db.item_id("f"));
    CHECK(f.count() == 1);
    CHECK(f.contains(0));
}

TEST_CASE("duplicate items inside one basket line collapse") {
    const TransactionDB db = TransactionDB::from_text("a a b\n", Format::basket);
    CHECK(db.transaction_count() == 1);
    CHECK(db.item_count() == 2);
    CHECK(db.support(db.itemset_of({"a", "b"})).count == 1);
    CHECK(db.transaction(0).size() == 2);
}

TEST_CASE("thirteen-transaction fixture") {
    const TransactionDB db = edge13();
    CHECK(db.transaction_count() == 13);
    CHECK(db.tidlist(*db.item_id("c")).count() == 8);
    CHECK(db.support(db.itemset_of({"a", "b"})).count == 9);
}

TEST_CASE("support queries on the demo db") {
    const TransactionDB db = demo6();
    CHECK(db.support(Itemset{}) == Support{6, 6});
    CHECK(db.support(set_of(db, "abcdef")) == Support{1, 6});
    CHECK(db.support(set_of(db, "ab")) == Support{3, 6});
    CHECK_THROWS_AS(db.support(Itemset({42})), std::out_of_range);
}

TEST_CASE("support is anti-monotone and empty set counts everything") {
    for (std::uint64_t seed : {11u, 22u, 33u, 44u, 55u}) {
        const TransactionDB db = random_db(seed);
        CHECK(db.support(Itemset{}).count == db.transaction_count());
        Rng rng(seed);
        for (int i = 0; i < 50; ++i) {
            const Itemset y = random_subset(rng, db.item_count());
            Itemset x = y;
            if (!y.empty() && (rng.next() & 1))
                x = y.set_minus(Itemset({y.ids()[rng.below(static_cast<std::uint32_t>(y.size()))]}));
            CHECK(db.support(x).count >= db.support(y).count);
        }
    }
}

TEST_CASE("basket and csv forms of the same data answer identically") {
    const TransactionDB csv = TransactionDB::load_file(data_path("demo6.csv"), Format::csv_matrix);
    const TransactionDB basket =
        TransactionDB::load_file(data_path("demo6.basket"), Format::basket);
    REQUIRE(csv.item_count() == basket.item_count());
    REQUIRE(csv.transaction_count() == basket.transaction_count());
    for (const Itemset& x : all_itemsets(csv))
        CHECK(csv.support(x) == basket.support(x));
}

TEST_CASE("column order does not change item ids") {
    const std::string reordered =
        "f,e,d,c,b,a\n"
        "1,1,1,1,1,1\n"
        "0,1,1,1,1,1\n"
        "0,0,0,0,1,1\n"
        "0,0,0,1,0,1\n"
        "0,0,0,1,1,0\n"
        "0,0,1,0,0,1\n";
    const TransactionDB a = TransactionDB::from_text(reordered, Format::csv_matrix);
    const TransactionDB b = TransactionDB::load_file(data_path("demo6.csv"), Format::csv_matrix);
    CHECK(a.item_names() == b.item_names());
    for (const Itemset& x : all_itemsets(a)) CHECK(a.support(x) == b.support(x));
}

TEST_CASE("crlf and blank lines are tolerated") {
    const TransactionDB db =
        TransactionDB::from_text("a b\r\n\r\n\nb c\r\n", Format::basket);
    CHECK(db.transaction_count() == 2);
    CHECK(db.item_count() == 3);
    const TransactionDB csv =
        TransactionDB::from_text("a,b\r\n1,0\r\n\r\n0,1\r\n", Format::csv_matrix);
    CHECK(csv.transaction_count() == 2);
}

TEST_CASE("loader errors carry the line number") {
    CHECK_THROWS_WITH_AS(TransactionDB::from_text("a,b\n1,0\n1\n", Format::csv_matrix, "f.csv"),
                         doctest::Contains("f.csv:3"), ParseError);
    CHECK_THROWS_WITH_AS(TransactionDB::from_text("a,b\n1,x\n", Format::csv_matrix, "f.csv"),
                         doctest::Contains("not 0/1"), ParseError);
    CHECK_THROWS_WITH_AS(TransactionDB::from_text("a,b\n1,0,1\n", Format::csv_matrix, "f.csv"),
                         doctest::Contains("f.csv:2"), ParseError);
    CHECK_THROWS_WITH_AS(TransactionDB::from_text("", Format::basket, "x"),
                         doctest::Contains("no transactions"), ParseError);
    CHECK_THROWS_WITH_AS(TransactionDB::from_text("\n\n", Format::basket, "x"),
                         doctest::Contains("no transactions"), ParseError);
    CHECK_THROWS_WITH_AS(TransactionDB::from_text("a,b\n", Format::csv_matrix, "x"),
                         doctest::Contains("no transactions"), ParseError);
    CHECK_THROWS_WITH_AS(TransactionDB::from_text("a b,c\n", Format::basket, "x"),
                         doctest::Contains("comma"), ParseError);
    CHECK_THROWS_WITH_AS(TransactionDB::from_text("a,a\n1,1\n", Format::csv_matrix, "x"),
                         doctest::Contains("duplicate"), ParseError);
    CHECK_THROWS_AS(TransactionDB::load_file("/nonexistent/path.dat", Format::basket), ParseError);
    CHECK_THROWS_AS(parse_format("tsv"), ParseError);
}

TEST_CASE("checked-in fixture files match the bundled datasets") {
    for (Fixture f : {Fixture::demo6, Fixture::edge13, Fixture::edge35, Fixture::seesaw10}) {
        std::ifstream in(data_path(std::string(fixture_name(f)) + ".basket"));
        REQUIRE(in.good());
        std::stringstream buf;
        buf << in.rdbuf();
        CHECK(buf.str() == fixture_basket(f));
    }
}
