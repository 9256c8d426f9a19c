#include "octarep/table_io.hpp"

#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace octarep {

namespace {

using nlohmann::ordered_json;

template <typename Label>
std::string emit(const std::string& group, int n, const std::vector<Label>& labels,
                 const std::vector<std::vector<long long>>& values) {
    ordered_json j;
    j["group"] = group;
    j["n"] = n;
    ordered_json names = ordered_json::array();
    for (const Label& l : labels) names.push_back(l.str());
    j["labels"] = names;
    j["classes"] = names;
    j["values"] = values;
    return j.dump(2) + "\n";
}

}  // namespace

std::string table_to_json(const HypCharacterTable& table) {
    return emit("B", table.n(), table.labels(), table.values());
}

std::string table_to_json(const SymCharacterTable& table) {
    std::vector<std::vector<long long>> values;
    int k = static_cast<int>(table.labels().size());
    values.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        std::vector<long long> row;
        row.reserve(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j) row.push_back(table.value_at(i, j));
        values.push_back(std::move(row));
    }
    return emit("S", table.n(), table.labels(), values);
}

ParsedTable parse_table_json(const std::string& text) {
    ParsedTable out;
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        out.group = j.at("group").get<std::string>();
        out.n = j.at("n").get<int>();
        out.labels = j.at("labels").get<std::vector<std::string>>();
        out.classes = j.at("classes").get<std::vector<std::string>>();
        out.values = j.at("values").get<std::vector<std::vector<long long>>>();
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("character table parse: ") + e.what());
    }
    if (out.group != "B" && out.group != "S")
        throw std::runtime_error("character table parse: unknown group " + out.group);
    if (out.n < 0) throw std::runtime_error("character table parse: negative n");

    std::vector<std::string> expected;
    if (out.group == "B")
        for (const Bipartition& bp : bipartitions_of(out.n)) expected.push_back(bp.str());
    else
        for (const Partition& p : partitions_of(out.n)) expected.push_back(p.str());
    if (out.labels != expected || out.classes != expected)
        throw std::runtime_error("character table parse: non-canonical label set");
    if (out.values.size() != expected.size())
        throw std::runtime_error("character table parse: wrong row count");
    for (const auto& row : out.values)
        if (row.size() != expected.size())
            throw std::runtime_error("character table parse: ragged matrix");
    return out;
}

TableCache::TableCache(std::optional<std::filesystem::path> dir, bool quiet)
    : dir_(std::move(dir)), quiet_(quiet) {
    if (dir_ && !std::filesystem::is_directory(*dir_)) {
        warn("cache directory " + dir_->string() +
             " does not exist; computing tables in memory only");
        dir_.reset();
    }
}

std::filesystem::path TableCache::path_for(char group, int n) const {
    if (!dir_) throw std::logic_error("TableCache::path_for: no cache directory");
    return *dir_ / (std::string(1, group) + std::to_string(n) + ".json");
}

void TableCache::warn(const std::string& message) const {
    if (!quiet_) std::fprintf(stderr, "warning: %s\n", message.c_str());
}

std::string TableCache::load_file(const std::filesystem::path& p) const {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + p.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void TableCache::store_file(const std::filesystem::path& p, const std::string& text) const {
    static std::atomic<unsigned> counter{0};
    std::filesystem::path tmp =
        p.parent_path() / (p.filename().string() + ".tmp" + std::to_string(counter++));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << text;
        if (!out.flush()) throw std::runtime_error("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, p);
}

const HypCharacterTable& TableCache::hyp(int n) {
    std::scoped_lock lock(mutex_);
    if (auto it = hyp_.find(n); it != hyp_.end()) return it->second;

    if (dir_) {
        std::filesystem::path p = path_for('B', n);
        if (std::filesystem::exists(p)) {
            try {
                ParsedTable parsed = parse_table_json(load_file(p));
                if (parsed.group != "B" || parsed.n != n)
                    throw std::runtime_error("file " + p.string() + " holds another table");
                auto [it, ok] = hyp_.emplace(
                    n, HypCharacterTable::from_values(n, std::move(parsed.values)));
                return it->second;
            } catch (const std::exception& e) {
                warn(std::string("corrupt cache file ") + p.string() + " (" + e.what() +
                     "); recomputing");
            }
        }
    }

    auto [it, ok] = hyp_.emplace(n, HypCharacterTable::build(n));
    if (dir_) {
        try {
            store_file(path_for('B', n), table_to_json(it->second));
        } catch (const std::exception& e) {
            warn(std::string("cache store failed: ") + e.what());
        }
    }
    return it->second;
}

const SymCharacterTable& TableCache::sym(int n) {
    std::scoped_lock lock(mutex_);
    if (auto it = sym_.find(n); it != sym_.end()) return it->second;

    if (dir_) {
        std::filesystem::path p = path_for('S', n);
        if (std::filesystem::exists(p)) {
            try {
                ParsedTable parsed = parse_table_json(load_file(p));
                if (parsed.group != "S" || parsed.n != n)
                    throw std::runtime_error("file " + p.string() + " holds another table");
                auto [it, ok] = sym_.emplace(
                    n, SymCharacterTable::from_values(n, std::move(parsed.values)));
                return it->second;
            } catch (const std::exception& e) {
                warn(std::string("corrupt cache file ") + p.string() + " (" + e.what() +
                     "); recomputing");
            }
        }
    }

    auto [it, ok] = sym_.emplace(n, SymCharacterTable(n));
    if (dir_) {
        try {
            store_file(path_for('S', n), table_to_json(it->second));
        } catch (const std::exception& e) {
            warn(std::string("cache store failed: ") + e.what());
        }
    }
    return it->second;
}

}  // namespace octarep
