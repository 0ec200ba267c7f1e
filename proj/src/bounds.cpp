#include "rulebasis/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace rulebasis {

namespace {

// Word masks over the items that occur in FC/FG, for fast subset tests.
class MaskSpace {
public:
    explicit MaskSpace(const LatticeIndex& index) {
        std::vector<std::uint32_t> pos(index.item_names.size(), npos);
        std::uint32_t next = 0;
        auto visit = [&](const Itemset& s) {
            for (ItemId id : s)
                if (pos[id] == npos) pos[id] = next++;
        };
        for (const auto& c : index.closed) visit(c.set);
        for (const auto& g : index.generators) visit(g.set);
        words_ = (next + 63) / 64;
        pos_ = std::move(pos);
    }

    std::vector<std::uint64_t> mask_of(const Itemset& s) const {
        std::vector<std::uint64_t> m(words_, 0);
        for (ItemId id : s) {
            const std::uint32_t p = pos_[id];
            m[p >> 6] |= std::uint64_t{1} << (p & 63);
        }
        return m;
    }

    std::size_t words() const { return words_; }

    static bool subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t w) {
        for (std::size_t i = 0; i < w; ++i)
            if (a[i] & ~b[i]) return false;
        return true;
    }

private:
    static constexpr std::uint32_t npos = ~std::uint32_t{0};
    std::vector<std::uint32_t> pos_;
    std::size_t words_ = 1;
};

void min_into(Bound& b, std::uint32_t count) {
    if (b.is_infinite() || count < b.count()) b = Bound::finite(count);
}

void max_into(Bound& b, std::uint32_t count) {
    if (b.is_zero() || count > b.count()) b = Bound::finite(count);
}

}  // namespace

void annotate_bounds(LatticeIndex& index) {
    const MaskSpace space(index);
    const std::size_t w = space.words();

    std::vector<std::uint64_t> cm;
    cm.reserve(index.closed.size() * w);
    for (const auto& c : index.closed) {
        const auto m = space.mask_of(c.set);
        cm.insert(cm.end(), m.begin(), m.end());
    }

    for (auto& c : index.closed) {
        c.max_superset_sup = Bound::zero();
        c.min_gen_subset_sup = Bound::infinite();
        c.min_closed_subset_sup = Bound::infinite();
        c.gen_subsets.clear();
        c.closed_subsets.clear();
    }

    // superset candidates come from an inverted index: only closed sets
    // containing the probe's rarest member item need a real subset test
    std::vector<std::vector<std::uint32_t>> by_item(index.item_names.size());
    for (std::uint32_t j = 0; j < index.closed.size(); ++j)
        for (ItemId id : index.closed[j].set) by_item[id].push_back(j);

    const auto rarest_item = [&](const Itemset& s) {
        ItemId best = *s.begin();
        for (ItemId id : s)
            if (by_item[id].size() < by_item[best].size()) best = id;
        return best;
    };

    const auto for_each_closed_superset = [&](const Itemset& s,
                                              const std::vector<std::uint64_t>& mask, auto&& fn) {
        if (s.empty()) {
            for (std::uint32_t j = 0; j < index.closed.size(); ++j)
                if (!index.closed[j].set.empty()) fn(j);
            return;
        }
        for (std::uint32_t j : by_item[rarest_item(s)]) {
            if (index.closed[j].set.size() <= s.size()) continue;
            if (MaskSpace::subset(mask.data(), &cm[j * w], w)) fn(j);
        }
    };

    for (std::uint32_t i = 0; i < index.closed.size(); ++i) {
        const ClosedEntry& sub = index.closed[i];
        std::vector<std::uint64_t> mask(cm.begin() + i * w, cm.begin() + (i + 1) * w);
        for_each_closed_superset(sub.set, mask, [&](std::uint32_t j) {
            index.closed[j].closed_subsets.push_back(i);
            min_into(index.closed[j].min_closed_subset_sup, sub.sup.count);
            max_into(index.closed[i].max_superset_sup, index.closed[j].sup.count);
        });
    }

    for (std::uint32_t g = 0; g < index.generators.size(); ++g) {
        const GenEntry& gen = index.generators[g];
        for_each_closed_superset(gen.set, space.mask_of(gen.set), [&](std::uint32_t j) {
            index.closed[j].gen_subsets.push_back(g);
            min_into(index.closed[j].min_gen_subset_sup, gen.sup.count);
        });
    }
}

namespace {

Bound scan_min_gen_subset(const LatticeIndex& index, const Itemset& x) {
    Bound b = Bound::infinite();
    for (const GenEntry& g : index.generators)
        if (g.set.proper_subset_of(x)) min_into(b, g.sup.count);
    return b;
}

Bound scan_min_closed_subset(const LatticeIndex& index, const Itemset& x) {
    Bound b = Bound::infinite();
    for (const ClosedEntry& c : index.closed)
        if (c.set.proper_subset_of(x)) min_into(b, c.sup.count);
    return b;
}

}  // namespace

Bound max_superset_sup(const LatticeIndex& index, const Itemset& x) {
    auto id = index.find_closed(x);
    if (!id)
        throw std::invalid_argument("max_superset_sup: " + index.set_name(x) +
                                    " is not a frequent closed set of this index");
    return index.closed[*id].max_superset_sup;
}

Bound min_gen_subset_sup(const LatticeIndex& index, const Itemset& x) {
    if (auto id = index.find_closed(x)) return index.closed[*id].min_gen_subset_sup;
    if (auto id = index.find_generator(x)) {
        // min over generator proper subsets; the miner's per-level value
        // already is exactly that
        return index.generators[*id].min_subset_sup;
    }
    return scan_min_gen_subset(index, x);
}

Bound min_closed_subset_sup(const LatticeIndex& index, const Itemset& x) {
    if (auto id = index.find_closed(x)) return index.closed[*id].min_closed_subset_sup;
    return scan_min_closed_subset(index, x);
}

Bound max_qualifying_gen_sup(const LatticeIndex& index, std::uint32_t closed_id,
                             const Rational& gamma) {
    if (gamma.is_zero() || compare_scaled(gamma, 1, 1) > 0)
        throw std::invalid_argument("confidence must lie in (0,1], got " + gamma.str());
    const ClosedEntry& x = index.closed.at(closed_id);
    Bound best = Bound::zero();
    for (std::uint32_t g : x.gen_subsets) {
        const std::uint32_t c = index.generators[g].sup.count;
        if (compare_scaled(gamma, c, x.sup.count) <= 0) max_into(best, c);
    }
    return best;
}

BreakpointTable build_breakpoint_table(const LatticeIndex& index) {
    BreakpointTable table;
    table.tau = index.tau;
    table.n = index.n;
    table.rows.resize(index.closed.size());
    for (std::uint32_t i = 0; i < index.closed.size(); ++i) {
        const ClosedEntry& x = index.closed[i];
        BreakpointRow& row = table.rows[i];
        row.sup_count = x.sup.count;
        if (x.set.empty()) continue;
        row.y.reserve(x.gen_subsets.size());
        for (std::uint32_t g : x.gen_subsets) row.y.push_back(index.generators[g].sup.count);
        std::sort(row.y.begin(), row.y.end(), std::greater<>());
        // ties collapse to one breakpoint so that p stays strictly increasing
        row.y.erase(std::unique(row.y.begin(), row.y.end()), row.y.end());
    }
    return table;
}

Bound BreakpointTable::lookup(std::uint32_t closed_id, const Rational& gamma) const {
    if (gamma.is_zero() || compare_scaled(gamma, 1, 1) > 0)
        throw std::invalid_argument("confidence must lie in (0,1], got " + gamma.str());
    const BreakpointRow& row = rows.at(closed_id);
    // smallest i with gamma <= p_i = sup(X)/y_i, i.e. gamma * y_i <= sup(X);
    // y is descending, so p is ascending and this is a partition point
    auto it = std::partition_point(row.y.begin(), row.y.end(), [&](std::uint32_t yi) {
        return compare_scaled(gamma, yi, row.sup_count) > 0;
    });
    if (it == row.y.end()) return Bound::zero();
    return Bound::finite(*it);
}

}  // namespace rulebasis
