#include "rulebasis/index_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rulebasis {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json items_json(const Itemset& s) {
    ordered_json a = ordered_json::array();
    for (ItemId id : s) a.push_back(id);
    return a;
}

Itemset items_from_json(const ordered_json& a, std::size_t item_count, const std::string& origin) {
    std::vector<ItemId> ids;
    for (const auto& v : a) {
        const auto id = v.get<std::uint64_t>();
        if (id >= item_count) throw ParseError(origin + ": item id out of range");
        ids.push_back(static_cast<ItemId>(id));
    }
    return Itemset(std::move(ids));
}

[[noreturn]] void corrupt(const std::string& origin, const std::string& why) {
    throw ParseError(origin + ": " + why);
}

}  // namespace

void save_index(const LatticeIndex& index, const BreakpointTable& table, std::ostream& out) {
    ordered_json doc;
    doc["format"] = "rulebasis-index";
    doc["version"] = 1;
    doc["n"] = index.n;
    doc["min_support"] = index.tau.str();
    doc["items"] = index.item_names;

    ordered_json closed = ordered_json::array();
    for (std::uint32_t i = 0; i < index.closed.size(); ++i) {
        const ClosedEntry& c = index.closed[i];
        ordered_json e;
        e["items"] = items_json(c.set);
        e["count"] = c.sup.count;
        e["max_superset_count"] =
            c.max_superset_sup.is_zero() ? 0 : c.max_superset_sup.count();
        e["breakpoints"] = table.rows[i].y;
        closed.push_back(std::move(e));
    }
    doc["closed"] = std::move(closed);

    ordered_json gens = ordered_json::array();
    for (const GenEntry& g : index.generators) {
        ordered_json e;
        e["items"] = items_json(g.set);
        e["count"] = g.sup.count;
        if (g.min_subset_sup.is_infinite())
            e["min_subset_count"] = nullptr;
        else
            e["min_subset_count"] = g.min_subset_sup.count();
        e["closure"] = g.closure_id;
        gens.push_back(std::move(e));
    }
    doc["generators"] = std::move(gens);

    out << doc.dump(2) << "\n";
}

void save_index_file(const LatticeIndex& index, const BreakpointTable& table,
                     const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path.string() + "'");
    save_index(index, table, out);
}

std::pair<LatticeIndex, BreakpointTable> load_index(std::istream& in, const std::string& origin) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        corrupt(origin, std::string("not valid JSON: ") + e.what());
    }
    try {
        if (doc.at("format") != "rulebasis-index") corrupt(origin, "not a rulebasis index file");
        if (doc.at("version") != 1) corrupt(origin, "unsupported index version");

        LatticeIndex index;
        index.n = doc.at("n").get<std::uint32_t>();
        if (index.n == 0) corrupt(origin, "n must be positive");
        index.tau = Rational::parse(doc.at("min_support").get<std::string>());
        index.item_names = doc.at("items").get<std::vector<std::string>>();

        BreakpointTable table;
        table.tau = index.tau;
        table.n = index.n;

        for (const auto& e : doc.at("closed")) {
            ClosedEntry c;
            c.set = items_from_json(e.at("items"), index.item_names.size(), origin);
            c.sup = Support{e.at("count").get<std::uint32_t>(), index.n};
            BreakpointRow row;
            row.sup_count = c.sup.count;
            row.y = e.at("breakpoints").get<std::vector<std::uint32_t>>();
            index.closed.push_back(std::move(c));
            table.rows.push_back(std::move(row));
        }
        std::vector<std::uint32_t> stored_mxs;
        for (const auto& e : doc.at("closed"))
            stored_mxs.push_back(e.at("max_superset_count").get<std::uint32_t>());

        for (const auto& e : doc.at("generators")) {
            GenEntry g;
            g.set = items_from_json(e.at("items"), index.item_names.size(), origin);
            g.sup = Support{e.at("count").get<std::uint32_t>(), index.n};
            const auto& min_sub = e.at("min_subset_count");
            g.min_subset_sup =
                min_sub.is_null() ? Bound::infinite() : Bound::finite(min_sub.get<std::uint32_t>());
            g.closure_id = e.at("closure").get<std::uint32_t>();
            if (g.closure_id >= index.closed.size()) corrupt(origin, "closure id out of range");
            if (index.closed[g.closure_id].sup.count != g.sup.count)
                corrupt(origin, "generator support disagrees with its closure");
            index.generators.push_back(std::move(g));
        }

        index.rebuild_lookup();
        annotate_bounds(index);

        // the superset-side bound is list-derivable; a stored value that
        // disagrees means the document was edited or truncated
        for (std::uint32_t i = 0; i < index.closed.size(); ++i) {
            const Bound& b = index.closed[i].max_superset_sup;
            const std::uint32_t recomputed = b.is_zero() ? 0 : b.count();
            if (recomputed != stored_mxs[i]) corrupt(origin, "max_superset_count mismatch");
        }
        return {std::move(index), std::move(table)};
    } catch (const nlohmann::json::exception& e) {
        corrupt(origin, std::string("malformed index document: ") + e.what());
    }
}

std::pair<LatticeIndex, BreakpointTable> load_index_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    return load_index(in, path.string());
}

std::string rule_to_json_line(const Rule& r, const std::vector<std::string>& item_names) {
    ordered_json doc;
    ordered_json ant = ordered_json::array();
    for (ItemId id : r.antecedent) ant.push_back(item_names.at(id));
    ordered_json con = ordered_json::array();
    for (ItemId id : r.consequent) con.push_back(item_names.at(id));
    doc["antecedent"] = std::move(ant);
    doc["consequent"] = std::move(con);
    doc["support_count"] = r.sup.count;
    doc["n"] = r.sup.n;
    doc["confidence"] = r.confidence().str() + (r.confidence().den() == 1 ? "/1" : "");
    return doc.dump();
}

Rule rule_from_json_line(const std::string& line, const TransactionDB& db) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("not a JSON rule line: ") + e.what());
    }
    try {
        Rule r;
        r.antecedent = db.itemset_of_names(doc.at("antecedent").get<std::vector<std::string>>());
        r.consequent = db.itemset_of_names(doc.at("consequent").get<std::vector<std::string>>());
        r.sup = Support{doc.at("support_count").get<std::uint32_t>(),
                        doc.at("n").get<std::uint32_t>()};
        if (r.consequent.empty()) throw ParseError("rule consequent is empty");
        if (!r.antecedent.disjoint_with(r.consequent))
            throw ParseError("rule sides are not disjoint");
        const Rational conf = Rational::parse(doc.at("confidence").get<std::string>());
        if (conf.is_zero()) throw ParseError("zero confidence");
        // recover the antecedent count from the exact confidence
        const std::uint64_t ac = static_cast<std::uint64_t>(r.sup.count) * conf.den() / conf.num();
        r.antecedent_count = static_cast<std::uint32_t>(ac);
        if (r.antecedent_count == 0 || Rational(r.sup.count, r.antecedent_count) != conf)
            throw ParseError("confidence does not match support_count");
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed rule line: ") + e.what());
    }
}

std::string rule_to_text_line(const Rule& r, const std::vector<std::string>& item_names) {
    const double conf = static_cast<double>(r.sup.count) / r.antecedent_count;
    const double pct = 100.0 * r.sup.count / r.sup.n;
    char head[64];
    std::snprintf(head, sizeof(head), "[c:%.2f, s:%.2f] ", conf, pct);
    std::string out = head;
    if (r.antecedent.empty()) {
        out += "{}";
    } else {
        bool first = true;
        for (ItemId id : r.antecedent) {
            if (!first) out += ' ';
            out += item_names.at(id);
            first = false;
        }
    }
    out += " ⇒ ";
    bool first = true;
    for (ItemId id : r.consequent) {
        if (!first) out += ' ';
        out += item_names.at(id);
        first = false;
    }
    return out;
}

}  // namespace rulebasis
