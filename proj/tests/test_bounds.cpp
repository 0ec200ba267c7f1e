#include <doctest.h>

#include "rulebasis/bounds.hpp"
#include "test_support.hpp"

using namespace rulebasis;
using namespace testsup;

namespace {

Bound direct_mxgs(const LatticeIndex& index, std::uint32_t id, const Rational& gamma) {
    return max_qualifying_gen_sup(index, id, gamma);
}

// the gamma grid the step function must agree on: every breakpoint, its
// one-step neighbours at the same denominator, and seeded random rationals
std::vector<Rational> gamma_grid(const LatticeIndex& index, const BreakpointTable& table,
                                 std::uint64_t seed) {
    std::vector<Rational> grid{Rational(1, 1)};
    for (std::uint32_t id = 0; id < index.closed.size(); ++id) {
        const std::uint32_t sx = index.closed[id].sup.count;
        for (std::uint32_t y : table.rows[id].y) {
            const Rational p(sx, y);  // the breakpoint sup(X)/y_i
            grid.push_back(p);
            if (p.num() > 1) grid.push_back(Rational(p.num() - 1, p.den()));
            if (p.num() + 1 <= p.den()) grid.push_back(Rational(p.num() + 1, p.den()));
        }
    }
    Rng rng(seed);
    for (int i = 0; i < 40; ++i) {
        const std::int64_t den = 1 + rng.below(300);
        const std::int64_t num = 1 + rng.below(static_cast<std::uint32_t>(den));
        grid.emplace_back(num, den);
    }
    return grid;
}

}  // namespace

TEST_CASE("superset-side bound on the demo db") {
    const TransactionDB db = demo6();
    const LatticeIndex index = mine(db, Rational(15, 100));
    CHECK(max_superset_sup(index, set_of(db, "abcde")) == Bound::finite(1));
    CHECK(max_superset_sup(index, set_of(db, "abcdef")) == Bound::zero());
    CHECK(max_superset_sup(index, set_of(db, "ab")) == Bound::finite(2));
    // only frequent closed sets are accepted
    CHECK_THROWS_AS(max_superset_sup(index, set_of(db, "d")), std::invalid_argument);
}

TEST_CASE("subset-side bounds on the counterexample fixtures") {
    const TransactionDB a = edge13();
    const LatticeIndex ia = mine(a, Rational(7, 100));
    CHECK(max_superset_sup(ia, set_of(a, "ab")) == Bound::finite(8));
    CHECK(min_gen_subset_sup(ia, set_of(a, "ab")) == Bound::finite(10));
    CHECK(min_closed_subset_sup(ia, set_of(a, "ab")) == Bound::finite(10));

    const TransactionDB b = edge35();
    const LatticeIndex ib = mine(b, Rational(5, 100));
    CHECK(min_gen_subset_sup(ib, set_of(b, "abcd")) == Bound::finite(5));
    CHECK(min_closed_subset_sup(ib, set_of(b, "abcd")) == Bound::finite(20));
    CHECK(max_superset_sup(ib, set_of(b, "abcd")) == Bound::finite(2));

    const TransactionDB d = demo6();
    const LatticeIndex id = mine(d, Rational(15, 100));
    CHECK(min_gen_subset_sup(id, set_of(d, "abcde")) == Bound::finite(2));
    CHECK(min_gen_subset_sup(id, Itemset{}) == Bound::infinite());
    CHECK(min_closed_subset_sup(id, Itemset{}) == Bound::infinite());
    // total over frequent sets that are neither closed nor generators
    CHECK(min_gen_subset_sup(id, set_of(d, "ad")) == Bound::finite(3));
    CHECK(min_gen_subset_sup(id, set_of(d, "abd")) == Bound::finite(2));
}

TEST_CASE("confidence-bounded generator support") {
    const TransactionDB db = demo6();
    const LatticeIndex index = mine(db, Rational(15, 100));
    const std::uint32_t abcde = *index.find_closed(set_of(db, "abcde"));
    CHECK(direct_mxgs(index, abcde, Rational(4, 10)) == Bound::finite(5));
    // gamma at most sup(X) lets the empty generator in, so the value is 1
    CHECK(direct_mxgs(index, abcde, Rational(1, 3)) == Bound::finite(6));
    const std::uint32_t ab = *index.find_closed(set_of(db, "ab"));
    CHECK(direct_mxgs(index, ab, Rational(4, 10)) == Bound::finite(6));

    const TransactionDB e13 = edge13();
    const LatticeIndex i13 = mine(e13, Rational(7, 100));
    const std::uint32_t abid = *i13.find_closed(set_of(e13, "ab"));
    CHECK(direct_mxgs(i13, abid, Rational(95, 100)) == Bound::zero());
    CHECK(direct_mxgs(i13, abid, Rational(7, 10)) == Bound::finite(12));

    CHECK_THROWS_AS(direct_mxgs(index, abcde, Rational(0, 1)), std::invalid_argument);
    CHECK_THROWS_AS(direct_mxgs(index, abcde, Rational(2, 1)), std::invalid_argument);
}

TEST_CASE("breakpoint rows carry descending distinct supports") {
    const TransactionDB db = demo6();
    const LatticeIndex index = mine(db, Rational(15, 100));
    const BreakpointTable table = build_breakpoint_table(index);

    const std::uint32_t abcde = *index.find_closed(set_of(db, "abcde"));
    CHECK(table.rows[abcde].y == std::vector<std::uint32_t>{6, 5, 4, 3, 2});
    // induced breakpoints: 0 < 1/3 < 2/5 < 1/2 < 2/3 < 1

    const std::uint32_t abcdef = *index.find_closed(set_of(db, "abcdef"));
    CHECK(table.rows[abcdef].y == std::vector<std::uint32_t>{6, 5, 4, 3, 2, 1});
    CHECK(Rational(table.rows[abcdef].sup_count, table.rows[abcdef].y.front()) ==
          Rational(1, 6));  // first breakpoint

    const std::uint32_t empty = *index.find_closed(Itemset{});
    CHECK(table.rows[empty].y.empty());

    // single-transaction database: one row with y = (1) and breakpoints (0, 1]
    const TransactionDB one = TransactionDB::from_text("a\n", Format::basket);
    const LatticeIndex ione = mine(one, Rational(1, 1));
    const BreakpointTable tone = build_breakpoint_table(ione);
    REQUIRE(ione.closed.size() == 1);
    CHECK(tone.rows[0].y == std::vector<std::uint32_t>{1});
    CHECK(tone.lookup(0, Rational(1, 1)) == Bound::finite(1));
    CHECK(tone.lookup(0, Rational(1, 100)) == Bound::finite(1));
}

TEST_CASE("table lookup intervals are left-open right-closed") {
    const TransactionDB db = demo6();
    const LatticeIndex index = mine(db, Rational(15, 100));
    const BreakpointTable table = build_breakpoint_table(index);
    const std::uint32_t abcde = *index.find_closed(set_of(db, "abcde"));
    CHECK(table.lookup(abcde, Rational(4, 10)) == Bound::finite(5));
    CHECK(table.lookup(abcde, Rational(2, 5)) == Bound::finite(5));   // exact breakpoint
    CHECK(table.lookup(abcde, Rational(1, 3)) == Bound::finite(6));   // exact first breakpoint
    CHECK(table.lookup(abcde, Rational(41, 100)) == Bound::finite(4));
    CHECK(table.lookup(abcde, Rational(1, 1)) == Bound::finite(2));   // last interval
    const std::uint32_t a = *index.find_closed(set_of(db, "a"));
    // above the last breakpoint of {a} (5/6 < 6/6... p_max = 1 here), use edge13
    const TransactionDB e13 = edge13();
    const LatticeIndex i13 = mine(e13, Rational(7, 100));
    const BreakpointTable t13 = build_breakpoint_table(i13);
    const std::uint32_t abid = *i13.find_closed(set_of(e13, "ab"));
    CHECK(t13.lookup(abid, Rational(95, 100)) == Bound::zero());
    (void)a;
}

TEST_CASE("step function equals the direct bound on a breakpoint-covering grid") {
    for (Fixture f : {Fixture::demo6, Fixture::edge13, Fixture::edge35, Fixture::seesaw10}) {
        const TransactionDB db = fixture_db(f);
        for (const Rational& tau :
             {Rational(1, db.transaction_count()), Rational(15, 100), Rational(1, 2)}) {
            const LatticeIndex index = mine(db, tau);
            const BreakpointTable table = build_breakpoint_table(index);
            for (const Rational& g : gamma_grid(index, table, 42 + db.transaction_count())) {
                for (std::uint32_t id = 0; id < index.closed.size(); ++id) {
                    if (index.closed[id].set.empty()) continue;
                    CHECK(table.lookup(id, g) == direct_mxgs(index, id, g));
                }
            }
        }
    }
}

TEST_CASE("bound inequalities hold across the random corpus") {
    for (std::uint64_t seed = 900; seed < 960; ++seed) {
        const TransactionDB db = random_db(seed);
        const Rational tau(1, db.transaction_count());
        const LatticeIndex index = mine(db, tau);
        const BreakpointTable table = build_breakpoint_table(index);

        for (const ClosedEntry& x : index.closed) {
            // superset bound below own support
            if (!x.max_superset_sup.is_zero())
                CHECK(x.max_superset_sup.count() < x.sup.count);
            // own support at most the generator-subset minimum
            if (x.min_gen_subset_sup.is_finite())
                CHECK(x.sup.count <= x.min_gen_subset_sup.count());
            // generator-subset minimum at most the closed-subset minimum
            CHECK(compare(x.min_gen_subset_sup, x.min_closed_subset_sup) <= 0);
            // equality when the closed set is its own minimal generator
            if (index.find_generator(x.set))
                CHECK(x.min_gen_subset_sup == x.min_closed_subset_sup);

            // alternative form: minimum over generators whose closure is a
            // proper subset equals the direct closed-subset minimum
            Bound alt = Bound::infinite();
            for (const GenEntry& g : index.generators) {
                const Itemset& cl = index.closed[g.closure_id].set;
                if (cl.proper_subset_of(x.set) &&
                    (alt.is_infinite() || g.sup.count < alt.count()))
                    alt = Bound::finite(g.sup.count);
            }
            CHECK(alt == x.min_closed_subset_sup);
        }

        // every frequent set sits between the one-sided bounds
        for (const Itemset& x : all_itemsets(db)) {
            const Support s = db.support(x);
            if (compare(s, tau) < 0) continue;
            const Bound kmns = min_gen_subset_sup(index, x);
            if (kmns.is_finite()) CHECK(s.count <= kmns.count());
            const Bound bmns = min_closed_subset_sup(index, x);
            CHECK(compare(kmns, bmns) <= 0);
            // free iff strictly below the generator-subset minimum
            const bool is_free = index.find_generator(x).has_value();
            const bool strictly_below = kmns.is_infinite() || s.count < kmns.count();
            CHECK(is_free == strictly_below);
        }

        // the step function is non-increasing in gamma and lands in {0} u [sup, 1]
        for (std::uint32_t id = 0; id < index.closed.size(); ++id) {
            if (index.closed[id].set.empty()) continue;
            Bound prev = Bound::infinite();
            for (int num = 1; num <= 20; ++num) {
                const Bound cur = table.lookup(id, Rational(num, 20));
                CHECK(compare(cur, prev) <= 0);
                if (cur.is_finite()) {
                    CHECK(cur.count() >= index.closed[id].sup.count);
                    CHECK(cur.count() <= db.transaction_count());
                }
                prev = cur;
            }
        }
    }
}
