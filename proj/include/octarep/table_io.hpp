// JSON persistence for character tables and the on-disk cache in front of
// their construction.
//
// Schema: {"group": "B"|"S", "n": int, "labels": [canonical strings],
//          "classes": [canonical strings], "values": row-major integer matrix}.

#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "octarep/hypchar.hpp"
#include "octarep/symchar.hpp"

namespace octarep {

std::string table_to_json(const HypCharacterTable& table);
std::string table_to_json(const SymCharacterTable& table);

// Validated parse of either schema; throws std::runtime_error on anything
// malformed, including labels that disagree with the canonical orders.
struct ParsedTable {
    std::string group;
    int n = 0;
    std::vector<std::string> labels;
    std::vector<std::string> classes;
    std::vector<std::vector<long long>> values;
};

ParsedTable parse_table_json(const std::string& text);

// Lazy store of character tables, optionally persisted as <dir>/B<n>.json and
// <dir>/S<n>.json. Misses compute and then store; corrupt files are
// recomputed and overwritten with a warning; a configured-but-missing
// directory downgrades to in-memory operation with a warning. Writes go to a
// unique temporary which is then renamed, so concurrent readers never see a
// partial file. All methods are safe to call from several threads.
class TableCache {
public:
    explicit TableCache(std::optional<std::filesystem::path> dir, bool quiet = false);

    const HypCharacterTable& hyp(int n);
    const SymCharacterTable& sym(int n);

    std::filesystem::path path_for(char group, int n) const;
    bool persistent() const { return dir_.has_value(); }

private:
    std::string load_file(const std::filesystem::path& p) const;
    void store_file(const std::filesystem::path& p, const std::string& text) const;
    void warn(const std::string& message) const;

    std::optional<std::filesystem::path> dir_;
    bool quiet_ = false;
    std::mutex mutex_;
    std::map<int, HypCharacterTable> hyp_;
    std::map<int, SymCharacterTable> sym_;
};

}  // namespace octarep
