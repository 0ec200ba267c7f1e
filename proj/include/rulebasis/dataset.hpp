// Transaction databases: interned items, per-item tid sets, exact support.

#ifndef RULEBASIS_DATASET_HPP
#define RULEBASIS_DATASET_HPP

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rulebasis/rational.hpp"

namespace rulebasis {

using ItemId = std::uint32_t;

// A set of item ids, stored sorted and duplicate-free.
class Itemset {
public:
    Itemset() = default;
    Itemset(std::initializer_list<ItemId> ids) : Itemset(std::vector<ItemId>(ids)) {}
    explicit Itemset(std::vector<ItemId> ids);  // sorts and dedupes

    static Itemset sorted_unique(std::vector<ItemId> ids) { return Itemset(std::move(ids)); }

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    const std::vector<ItemId>& ids() const { return ids_; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    bool contains(ItemId id) const;
    bool subset_of(const Itemset& other) const;
    bool proper_subset_of(const Itemset& other) const {
        return size() < other.size() && subset_of(other);
    }
    bool disjoint_with(const Itemset& other) const;

    Itemset set_union(const Itemset& other) const;
    Itemset set_minus(const Itemset& other) const;
    Itemset set_intersect(const Itemset& other) const;

    friend bool operator==(const Itemset& a, const Itemset& b) { return a.ids_ == b.ids_; }
    friend bool operator!=(const Itemset& a, const Itemset& b) { return !(a == b); }

private:
    std::vector<ItemId> ids_;
};

// id-sequence lexicographic order; {} < {a} < {a,b} < {b}
bool lex_less(const Itemset& a, const Itemset& b);
// ascending cardinality, ties broken lexicographically (enumeration order)
bool card_lex_less(const Itemset& a, const Itemset& b);

struct ItemsetHash {
    std::size_t operator()(const Itemset& s) const;
};

// Set of transaction indices as a fixed-width bitset.
class TidSet {
public:
    TidSet() = default;
    explicit TidSet(std::uint32_t n) : n_(n), words_((n + 63) / 64, 0) {}
    static TidSet full(std::uint32_t n);

    std::uint32_t universe() const { return n_; }
    void insert(std::uint32_t tid) { words_[tid >> 6] |= std::uint64_t{1} << (tid & 63); }
    bool contains(std::uint32_t tid) const {
        return (words_[tid >> 6] >> (tid & 63)) & 1;
    }
    std::uint32_t count() const;
    void intersect_with(const TidSet& other);
    std::vector<std::uint32_t> to_vector() const;

private:
    std::uint32_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

enum class Format { basket, csv_matrix };

// "basket" / "csv-matrix"; anything else is a ParseError.
Format parse_format(std::string_view name);
std::string_view format_name(Format f);

// Immutable after construction; every query is read-only.
class TransactionDB {
public:
    // basket: whitespace-separated tokens per line, one transaction per line.
    // csv-matrix: header row of item names, body rows of 0/1 cells.
    // Both: UTF-8, LF or CRLF, blank lines ignored, duplicate items within a
    // transaction collapsed. Item ids are assigned by ascending lexicographic
    // order of the token strings, so they do not depend on input order.
    static TransactionDB load_basket(std::istream& in, const std::string& origin = "<stream>");
    static TransactionDB load_csv_matrix(std::istream& in, const std::string& origin = "<stream>");
    static TransactionDB load_file(const std::filesystem::path& path, Format format);
    static TransactionDB from_text(const std::string& text, Format format,
                                   const std::string& origin = "<text>");

    std::uint32_t transaction_count() const { return n_; }
    std::uint32_t item_count() const { return static_cast<std::uint32_t>(names_.size()); }

    const std::string& item_name(ItemId id) const;
    std::optional<ItemId> item_id(std::string_view name) const;
    const std::vector<std::string>& item_names() const { return names_; }

    // Throws std::out_of_range when the set mentions an unknown item id.
    Support support(const Itemset& x) const;

    // Transactions containing every member of x (all transactions for {}).
    TidSet tidset(const Itemset& x) const;
    const TidSet& tidlist(ItemId id) const;

    // Item ids of one transaction, ascending.
    const std::vector<ItemId>& transaction(std::uint32_t tid) const { return tx_[tid]; }

    Itemset itemset_of(std::initializer_list<std::string_view> names) const;
    Itemset itemset_of_names(const std::vector<std::string>& names) const;

    // Universe as an itemset (used as the closure of sets that appear in no
    // transaction).
    Itemset universe() const;

private:
    TransactionDB() = default;
    static TransactionDB build(std::vector<std::vector<std::string>> raw_tx,
                               std::vector<std::string> names, const std::string& origin);

    std::uint32_t n_ = 0;
    std::vector<std::string> names_;           // sorted, names_[id] == name of id
    std::vector<TidSet> tidlists_;             // per item
    std::vector<std::vector<ItemId>> tx_;      // per transaction, sorted ids
};

}  // namespace rulebasis

#endif
