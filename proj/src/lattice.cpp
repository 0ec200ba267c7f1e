#include "rulebasis/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "rulebasis/bounds.hpp"

namespace rulebasis {

Itemset closure(const TransactionDB& db, const Itemset& x) {
    const TidSet tids = db.tidset(x);
    if (tids.count() == 0) return db.universe();

    // count item occurrences over the covered transactions; an item belongs
    // to the closure iff it occurs in all of them
    const std::uint32_t cover = tids.count();
    std::vector<std::uint32_t> cnt(db.item_count(), 0);
    for (std::uint32_t t = 0; t < db.transaction_count(); ++t) {
        if (!tids.contains(t)) continue;
        for (ItemId id : db.transaction(t)) ++cnt[id];
    }
    std::vector<ItemId> out;
    for (ItemId id = 0; id < db.item_count(); ++id)
        if (cnt[id] == cover) out.push_back(id);
    return Itemset(std::move(out));
}

std::optional<std::uint32_t> LatticeIndex::find_closed(const Itemset& s) const {
    auto it = closed_by_set_.find(s);
    if (it == closed_by_set_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::uint32_t> LatticeIndex::find_generator(const Itemset& s) const {
    auto it = gen_by_set_.find(s);
    if (it == gen_by_set_.end()) return std::nullopt;
    return it->second;
}

const TransactionDB& LatticeIndex::dataset() const {
    if (!db) throw std::logic_error("index was reloaded from disk and carries no dataset");
    return *db;
}

std::uint32_t LatticeIndex::min_count() const {
    // smallest c with c * tau.den >= tau.num * n
    const auto need = static_cast<__int128>(tau.num()) * n;
    return static_cast<std::uint32_t>((need + tau.den() - 1) / tau.den());
}

std::string LatticeIndex::set_name(const Itemset& s) const {
    std::string out = "{";
    bool first = true;
    for (ItemId id : s) {
        if (!first) out += ' ';
        out += item_names.at(id);
        first = false;
    }
    out += '}';
    return out;
}

void LatticeIndex::rebuild_lookup() {
    closed_by_set_.clear();
    gen_by_set_.clear();
    for (std::uint32_t i = 0; i < closed.size(); ++i) closed_by_set_.emplace(closed[i].set, i);
    for (std::uint32_t i = 0; i < generators.size(); ++i) gen_by_set_.emplace(generators[i].set, i);
}

namespace {

// Depth-first enumeration of frequent closed sets by closure extension with
// a prefix-preservation check, so each closed set is reached exactly once.
// Items are handled through their positions in the frequent-item list.
class ClosedMiner {
public:
    ClosedMiner(const TransactionDB& db, std::uint32_t min_count)
        : db_(db), min_count_(min_count) {
        for (ItemId id = 0; id < db.item_count(); ++id)
            if (db.tidlist(id).count() >= min_count_) freq_.push_back(id);
        tx_.resize(db.transaction_count());
        std::vector<std::uint32_t> pos(db.item_count(), npos);
        for (std::uint32_t p = 0; p < freq_.size(); ++p) pos[freq_[p]] = p;
        for (std::uint32_t t = 0; t < db.transaction_count(); ++t)
            for (ItemId id : db.transaction(t))
                if (pos[id] != npos) tx_[t].push_back(pos[id]);
    }

    std::vector<SupportedSet> run() {
        std::vector<std::uint32_t> all(db_.transaction_count());
        for (std::uint32_t t = 0; t < all.size(); ++t) all[t] = t;
        const std::vector<std::uint32_t> root = items_in_all(all);
        recurse(root, all, 0);
        return std::move(out_);
    }

private:
    static constexpr std::uint32_t npos = ~std::uint32_t{0};

    std::vector<std::uint32_t> items_in_all(const std::vector<std::uint32_t>& tids) const {
        std::vector<std::uint32_t> cnt(freq_.size(), 0);
        for (std::uint32_t t : tids)
            for (std::uint32_t p : tx_[t]) ++cnt[p];
        std::vector<std::uint32_t> c;
        for (std::uint32_t p = 0; p < freq_.size(); ++p)
            if (cnt[p] == tids.size()) c.push_back(p);
        return c;
    }

    void recurse(const std::vector<std::uint32_t>& c, const std::vector<std::uint32_t>& tids,
                 std::uint32_t first_ext) {
        emit(c, static_cast<std::uint32_t>(tids.size()));

        std::vector<std::uint32_t> cnt(freq_.size(), 0);
        for (std::uint32_t t : tids)
            for (std::uint32_t p : tx_[t]) ++cnt[p];

        for (std::uint32_t p = first_ext; p < freq_.size(); ++p) {
            if (cnt[p] < min_count_ || cnt[p] == tids.size()) continue;  // infrequent or in c
            if (std::binary_search(c.begin(), c.end(), p)) continue;

            std::vector<std::uint32_t> sub;
            sub.reserve(cnt[p]);
            const TidSet& have = db_.tidlist(freq_[p]);
            for (std::uint32_t t : tids)
                if (have.contains(t)) sub.push_back(t);

            const std::vector<std::uint32_t> ext = items_in_all(sub);
            if (!prefix_preserved(c, ext, p)) continue;
            recurse(ext, sub, p + 1);
        }
    }

    // ext and c must agree on every position below p
    static bool prefix_preserved(const std::vector<std::uint32_t>& c,
                                 const std::vector<std::uint32_t>& ext, std::uint32_t p) {
        auto ce = std::lower_bound(c.begin(), c.end(), p);
        auto ee = std::lower_bound(ext.begin(), ext.end(), p);
        return std::distance(c.begin(), ce) == std::distance(ext.begin(), ee) &&
               std::equal(c.begin(), ce, ext.begin());
    }

    void emit(const std::vector<std::uint32_t>& c, std::uint32_t count) {
        std::vector<ItemId> ids;
        ids.reserve(c.size());
        for (std::uint32_t p : c) ids.push_back(freq_[p]);
        out_.push_back({Itemset(std::move(ids)), Support{count, db_.transaction_count()}});
    }

    const TransactionDB& db_;
    std::uint32_t min_count_;
    std::vector<ItemId> freq_;
    std::vector<std::vector<std::uint32_t>> tx_;  // transactions as positions
    std::vector<SupportedSet> out_;
};

struct LevelGen {
    std::vector<ItemId> ids;        // sorted
    std::uint32_t count = 0;
    std::uint32_t min_subset = 0;   // min support count among (k-1)-subsets
    std::vector<std::uint32_t> tids;
};

struct IdVecHash {
    std::size_t operator()(const std::vector<ItemId>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (ItemId id : v) {
            h ^= id + 1;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Levelwise ascent over the downward-closed family of frequent minimal
// generators: a k-set is free iff its support is strictly below the support
// of each of its (k-1)-subsets, and those must all be free themselves.
std::vector<GenEntry> mine_generators(const TransactionDB& db, std::uint32_t min_count) {
    const std::uint32_t n = db.transaction_count();
    std::vector<GenEntry> out;
    out.push_back({Itemset{}, Support{n, n}, Bound::infinite(), 0});

    std::vector<LevelGen> level;
    for (ItemId id = 0; id < db.item_count(); ++id) {
        const std::uint32_t c = db.tidlist(id).count();
        if (c >= min_count && c < n)
            level.push_back({{id}, c, n, db.tidlist(id).to_vector()});
    }

    while (!level.empty()) {
        for (const LevelGen& g : level)
            out.push_back({Itemset(g.ids), Support{g.count, n}, Bound::finite(g.min_subset), 0});

        std::unordered_map<std::vector<ItemId>, std::uint32_t, IdVecHash> counts;
        counts.reserve(level.size() * 2);
        for (const LevelGen& g : level) counts.emplace(g.ids, g.count);

        std::vector<LevelGen> next;
        // join pairs sharing their (k-1)-prefix; `level` is sorted because it
        // is produced in sorted order at every step
        for (std::size_t i = 0; i < level.size(); ++i) {
            for (std::size_t j = i + 1; j < level.size(); ++j) {
                const auto& a = level[i].ids;
                const auto& b = level[j].ids;
                if (!std::equal(a.begin(), a.end() - 1, b.begin())) break;

                std::vector<ItemId> cand = a;
                cand.push_back(b.back());

                // every (k-1)-subset must itself be a frequent generator
                std::uint32_t min_subset = std::min(level[i].count, level[j].count);
                bool all_free = true;
                std::vector<ItemId> sub;
                for (std::size_t drop = 0; drop + 2 < cand.size(); ++drop) {
                    sub = cand;
                    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
                    auto it = counts.find(sub);
                    if (it == counts.end()) {
                        all_free = false;
                        break;
                    }
                    min_subset = std::min(min_subset, it->second);
                }
                if (!all_free) continue;

                const TidSet& have = db.tidlist(b.back());
                std::vector<std::uint32_t> tids;
                tids.reserve(level[i].tids.size());
                for (std::uint32_t t : level[i].tids)
                    if (have.contains(t)) tids.push_back(t);

                const auto c = static_cast<std::uint32_t>(tids.size());
                if (c >= min_count && c < min_subset)
                    next.push_back({std::move(cand), c, min_subset, std::move(tids)});
            }
        }
        level = std::move(next);
    }
    return out;
}

}  // namespace

LatticeIndex mine(std::shared_ptr<const TransactionDB> db, const Rational& tau) {
    if (tau.is_zero() || compare_scaled(tau, 1, 1) > 0)
        throw std::invalid_argument("min-support must lie in (0,1], got " + tau.str());

    LatticeIndex index;
    index.tau = tau;
    index.n = db->transaction_count();
    index.item_names = db->item_names();
    index.db = db;

    const std::uint32_t min_count = index.min_count();

    std::vector<SupportedSet> closed = ClosedMiner(*db, min_count).run();
    std::sort(closed.begin(), closed.end(),
              [](const SupportedSet& a, const SupportedSet& b) {
                  return card_lex_less(a.set, b.set);
              });
    index.closed.reserve(closed.size());
    for (SupportedSet& s : closed) {
        ClosedEntry e;
        e.set = std::move(s.set);
        e.sup = s.sup;
        index.closed.push_back(std::move(e));
    }

    std::vector<GenEntry> gens = mine_generators(*db, min_count);
    std::sort(gens.begin(), gens.end(),
              [](const GenEntry& a, const GenEntry& b) { return card_lex_less(a.set, b.set); });
    index.generators = std::move(gens);

    index.rebuild_lookup();

    // closure links: the closure of a generator is the unique closed set
    // with the same tidset
    for (GenEntry& g : index.generators) {
        const Itemset cl = closure(*db, g.set);
        auto id = index.find_closed(cl);
        if (!id || index.closed[*id].sup.count != g.sup.count)
            throw std::logic_error("generator closure missing from the closed-set list");
        g.closure_id = *id;
    }

    annotate_bounds(index);
    return index;
}

LatticeIndex mine(const TransactionDB& db, const Rational& tau) {
    return mine(std::make_shared<const TransactionDB>(db), tau);
}

bool is_closed_via_bounds(const SupportedSet& x, const LatticeIndex& index) {
    // max support among proper frequent closed supersets of an arbitrary
    // frequent set; not cached, so this stays total over frequent sets
    Bound mxs = Bound::zero();
    for (const ClosedEntry& z : index.closed) {
        if (z.set.size() <= x.set.size() || !x.set.subset_of(z.set)) continue;
        if (mxs.is_zero() || z.sup.count > mxs.count()) mxs = Bound::finite(z.sup.count);
    }
    if (mxs.is_zero()) return x.sup.count > 0;
    return x.sup.count > mxs.count();
}

}  // namespace rulebasis
