#include "rulebasis/dataset.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace rulebasis {

namespace {

[[noreturn]] void parse_fail(const std::string& origin, std::size_t line, const std::string& why) {
    throw ParseError(origin + ":" + std::to_string(line) + ": " + why);
}

// strips a trailing '\r' so CRLF input behaves like LF
void chomp(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

Itemset::Itemset(std::vector<ItemId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool Itemset::contains(ItemId id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool Itemset::subset_of(const Itemset& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

bool Itemset::disjoint_with(const Itemset& other) const {
    auto a = ids_.begin();
    auto b = other.ids_.begin();
    while (a != ids_.end() && b != other.ids_.end()) {
        if (*a == *b) return false;
        (*a < *b) ? ++a : ++b;
    }
    return true;
}

Itemset Itemset::set_union(const Itemset& other) const {
    std::vector<ItemId> out;
    out.reserve(ids_.size() + other.ids_.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                   std::back_inserter(out));
    Itemset r;
    r.ids_ = std::move(out);
    return r;
}

Itemset Itemset::set_minus(const Itemset& other) const {
    std::vector<ItemId> out;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out));
    Itemset r;
    r.ids_ = std::move(out);
    return r;
}

Itemset Itemset::set_intersect(const Itemset& other) const {
    std::vector<ItemId> out;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                          std::back_inserter(out));
    Itemset r;
    r.ids_ = std::move(out);
    return r;
}

bool lex_less(const Itemset& a, const Itemset& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool card_lex_less(const Itemset& a, const Itemset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
}

std::size_t ItemsetHash::operator()(const Itemset& s) const {
    std::size_t h = 1469598103934665603ull;
    for (ItemId id : s) {
        h ^= id + 1;
        h *= 1099511628211ull;
    }
    return h;
}

TidSet TidSet::full(std::uint32_t n) {
    TidSet t(n);
    for (std::uint32_t i = 0; i < n / 64; ++i) t.words_[i] = ~std::uint64_t{0};
    if (n % 64) t.words_[n / 64] = (std::uint64_t{1} << (n % 64)) - 1;
    return t;
}

std::uint32_t TidSet::count() const {
    std::uint32_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::uint32_t>(std::popcount(w));
    return c;
}

void TidSet::intersect_with(const TidSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
}

std::vector<std::uint32_t> TidSet::to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for (std::uint32_t t = 0; t < n_; ++t)
        if (contains(t)) out.push_back(t);
    return out;
}

Format parse_format(std::string_view name) {
    if (name == "basket") return Format::basket;
    if (name == "csv-matrix") return Format::csv_matrix;
    throw ParseError("unknown format '" + std::string(name) + "' (expected basket or csv-matrix)");
}

std::string_view format_name(Format f) {
    return f == Format::basket ? "basket" : "csv-matrix";
}

TransactionDB TransactionDB::build(std::vector<std::vector<std::string>> raw_tx,
                                   std::vector<std::string> names, const std::string& origin) {
    if (raw_tx.empty()) throw ParseError(origin + ": no transactions");

    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());

    std::map<std::string, ItemId> by_name;
    for (ItemId id = 0; id < names.size(); ++id) by_name.emplace(names[id], id);

    TransactionDB db;
    db.n_ = static_cast<std::uint32_t>(raw_tx.size());
    db.names_ = std::move(names);
    db.tidlists_.assign(db.names_.size(), TidSet(db.n_));
    db.tx_.resize(db.n_);

    for (std::uint32_t t = 0; t < db.n_; ++t) {
        std::vector<ItemId>& row = db.tx_[t];
        row.reserve(raw_tx[t].size());
        for (const std::string& tok : raw_tx[t]) row.push_back(by_name.at(tok));
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        for (ItemId id : row) db.tidlists_[id].insert(t);
    }
    return db;
}

TransactionDB TransactionDB::load_basket(std::istream& in, const std::string& origin) {
    std::vector<std::vector<std::string>> raw;
    std::vector<std::string> names;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        chomp(line);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) {
            if (tok.find(',') != std::string::npos)
                parse_fail(origin, lineno, "token contains a comma: '" + tok + "'");
            toks.push_back(tok);
        }
        if (toks.empty()) continue;  // blank line
        for (const std::string& t : toks) names.push_back(t);
        raw.push_back(std::move(toks));
    }
    return build(std::move(raw), std::move(names), origin);
}

TransactionDB TransactionDB::load_csv_matrix(std::istream& in, const std::string& origin) {
    std::string line;
    std::size_t lineno = 0;

    std::vector<std::string> names;
    while (std::getline(in, line)) {
        ++lineno;
        chomp(line);
        if (trim(line).empty()) continue;
        std::istringstream hs(line);
        std::string cell;
        while (std::getline(hs, cell, ',')) {
            std::string name = trim(cell);
            if (name.empty()) parse_fail(origin, lineno, "empty item name in header");
            if (name.find(' ') != std::string::npos || name.find('\t') != std::string::npos)
                parse_fail(origin, lineno, "item name contains whitespace: '" + name + "'");
            names.push_back(name);
        }
        break;
    }
    if (names.empty()) throw ParseError(origin + ": no transactions");
    {
        std::vector<std::string> dedup = names;
        std::sort(dedup.begin(), dedup.end());
        if (std::adjacent_find(dedup.begin(), dedup.end()) != dedup.end())
            parse_fail(origin, lineno, "duplicate item name in header");
    }

    std::vector<std::vector<std::string>> raw;
    while (std::getline(in, line)) {
        ++lineno;
        chomp(line);
        if (trim(line).empty()) continue;
        std::istringstream rs(line);
        std::string cell;
        std::vector<std::string> present;
        std::size_t col = 0;
        while (std::getline(rs, cell, ',')) {
            if (col >= names.size())
                parse_fail(origin, lineno, "row has more cells than the header");
            std::string v = trim(cell);
            if (v == "1")
                present.push_back(names[col]);
            else if (v != "0")
                parse_fail(origin, lineno, "cell is not 0/1: '" + v + "'");
            ++col;
        }
        if (col != names.size())
            parse_fail(origin, lineno, "row has " + std::to_string(col) + " cells, expected " +
                                           std::to_string(names.size()));
        raw.push_back(std::move(present));
    }
    return build(std::move(raw), std::move(names), origin);
}

TransactionDB TransactionDB::load_file(const std::filesystem::path& path, Format format) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    return format == Format::basket ? load_basket(in, path.string())
                                    : load_csv_matrix(in, path.string());
}

TransactionDB TransactionDB::from_text(const std::string& text, Format format,
                                       const std::string& origin) {
    std::istringstream in(text);
    return format == Format::basket ? load_basket(in, origin) : load_csv_matrix(in, origin);
}

const std::string& TransactionDB::item_name(ItemId id) const {
    if (id >= names_.size()) throw std::out_of_range("unknown item id " + std::to_string(id));
    return names_[id];
}

std::optional<ItemId> TransactionDB::item_id(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<ItemId>(it - names_.begin());
}

Support TransactionDB::support(const Itemset& x) const {
    return Support{tidset(x).count(), n_};
}

TidSet TransactionDB::tidset(const Itemset& x) const {
    if (x.empty()) return TidSet::full(n_);
    TidSet acc = tidlist(*x.begin());
    for (auto it = std::next(x.begin()); it != x.end(); ++it) acc.intersect_with(tidlist(*it));
    return acc;
}

const TidSet& TransactionDB::tidlist(ItemId id) const {
    if (id >= tidlists_.size()) throw std::out_of_range("unknown item id " + std::to_string(id));
    return tidlists_[id];
}

Itemset TransactionDB::itemset_of(std::initializer_list<std::string_view> names) const {
    std::vector<ItemId> ids;
    for (std::string_view nm : names) {
        auto id = item_id(nm);
        if (!id) throw std::out_of_range("unknown item '" + std::string(nm) + "'");
        ids.push_back(*id);
    }
    return Itemset(std::move(ids));
}

Itemset TransactionDB::itemset_of_names(const std::vector<std::string>& names) const {
    std::vector<ItemId> ids;
    for (const std::string& nm : names) {
        auto id = item_id(nm);
        if (!id) throw std::out_of_range("unknown item '" + nm + "'");
        ids.push_back(*id);
    }
    return Itemset(std::move(ids));
}

Itemset TransactionDB::universe() const {
    std::vector<ItemId> all(names_.size());
    for (ItemId i = 0; i < all.size(); ++i) all[i] = i;
    return Itemset(std::move(all));
}

}  // namespace rulebasis
