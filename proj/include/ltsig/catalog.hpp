#pragma once

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ltsig/errors.hpp"
#include "ltsig/seifert.hpp"

namespace ltsig {

struct CatalogEntry {
    std::string name;
    SeifertMatrix matrix;
    std::string source;  // "builtin" or the originating file path

    KnotSpec knot() const { return KnotSpec{name, matrix}; }
};

inline const std::vector<CatalogEntry>& builtin_catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;
        v.push_back({"unknot", SeifertMatrix(std::vector<std::vector<mpz_class>>{}), "builtin"});
        for (auto [p, q] : {std::pair<long, long>{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}}) {
            KnotSpec k = torus_knot(p, q);
            v.push_back({k.name, k.matrix, "builtin"});
        }
        return v;
    }();
    return entries;
}

inline const std::map<std::string, std::string>& catalog_aliases() {
    static const std::map<std::string, std::string> aliases = {{"trefoil", "T(2,3)"}};
    return aliases;
}

/// Parse a catalog file: a JSON array of {"name": str, "seifert_matrix":
/// [[int]]} objects.  Duplicate names within the file are rejected; every
/// matrix must pass Seifert validation.
inline std::vector<CatalogEntry> parse_catalog_json(const std::string& text,
                                                    const std::string& source) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        raise(errc::parse_error, std::string(e.what()));
    }
    if (!doc.is_array()) raise(errc::parse_error, "catalog must be a JSON array");

    std::vector<CatalogEntry> out;
    std::set<std::string> seen;
    for (const auto& item : doc) {
        if (!item.is_object() || !item.contains("name") || !item.contains("seifert_matrix"))
            raise(errc::parse_error, "each entry needs \"name\" and \"seifert_matrix\"");
        if (!item["name"].is_string()) raise(errc::parse_error, "\"name\" must be a string");
        std::string name = item["name"].get<std::string>();
        if (name.empty()) raise(errc::validation_error, "entry with empty name");
        if (!seen.insert(name).second)
            raise(errc::duplicate_name, "entry '" + name + "' appears twice");

        const auto& rows = item["seifert_matrix"];
        if (!rows.is_array())
            raise(errc::parse_error, "entry '" + name + "': seifert_matrix must be an array");
        std::vector<std::vector<mpz_class>> entries;
        for (const auto& row : rows) {
            if (!row.is_array())
                raise(errc::parse_error, "entry '" + name + "': matrix rows must be arrays");
            std::vector<mpz_class> r;
            for (const auto& v : row) {
                if (!v.is_number_integer())
                    raise(errc::parse_error,
                          "entry '" + name + "': matrix entries must be integers");
                r.emplace_back(static_cast<long>(v.get<std::int64_t>()));
            }
            entries.push_back(std::move(r));
        }
        if (!entries.empty() && entries.size() != entries.front().size())
            raise(errc::validation_error, "entry '" + name + "': matrix is not square");
        try {
            out.push_back({name, SeifertMatrix(std::move(entries)), source});
        } catch (const Error& e) {
            raise(errc::validation_error,
                  "entry '" + name + "': " + std::string(e.what()));
        } catch (const std::invalid_argument& e) {
            raise(errc::validation_error, "entry '" + name + "': " + std::string(e.what()));
        }
    }
    return out;
}

/// Built-in entries plus the given file, rejecting any name collision with
/// the builtins or their aliases.
inline std::vector<CatalogEntry> merge_with_builtins(std::vector<CatalogEntry> extra) {
    std::vector<CatalogEntry> all = builtin_catalog();
    std::set<std::string> names;
    for (const auto& e : all) names.insert(e.name);
    for (const auto& [alias, target] : catalog_aliases()) names.insert(alias);
    for (auto& e : extra) {
        if (!names.insert(e.name).second)
            raise(errc::duplicate_name, "entry '" + e.name + "' collides with an existing name");
        all.push_back(std::move(e));
    }
    return all;
}

inline std::vector<CatalogEntry> load_catalog(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(errc::io_error, "cannot open catalog file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return merge_with_builtins(parse_catalog_json(text.str(), path));
}

/// Deterministic JSON rendering of catalog entries, loadable by
/// parse_catalog_json.
inline std::string emit_catalog_json(const std::vector<CatalogEntry>& entries) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : e.matrix.rows()) {
            nlohmann::ordered_json r = nlohmann::ordered_json::array();
            for (const auto& v : row) r.push_back(v.get_si());
            rows.push_back(std::move(r));
        }
        arr.push_back({{"name", e.name}, {"seifert_matrix", std::move(rows)}});
    }
    return arr.dump(2) + "\n";
}

inline const CatalogEntry& find_knot(const std::vector<CatalogEntry>& catalog,
                                     const std::string& name) {
    std::string wanted = name;
    auto alias = catalog_aliases().find(name);
    if (alias != catalog_aliases().end()) wanted = alias->second;
    for (const auto& e : catalog)
        if (e.name == wanted || e.name == name) return e;
    raise(errc::unknown_knot, "no catalog entry named '" + name + "'");
}

}  // namespace ltsig
