// Command-line surface: decompositions, character tables (with the on-disk
// cache), restriction matrices, extension search, the (n, m) sweep, and the
// acceptance suite. Exit codes for `extend`: 0 feasible, 3 infeasible,
// 4 resource limit; usage errors exit nonzero through the parser.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "octarep/branching.hpp"
#include "octarep/parkingspace.hpp"
#include "octarep/sweep.hpp"
#include "octarep/table_io.hpp"
#include "octarep/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace octarep;

struct GlobalOpts {
    std::string cache_dir;
    std::string format = "text";
    bool quiet = false;

    TableCache make_cache() const {
        std::optional<std::filesystem::path> dir;
        if (!cache_dir.empty()) dir = cache_dir;
        return TableCache(dir, quiet);
    }
};

void print_multiplicities(const MultiplicityVector& v, const GlobalOpts& g) {
    if (g.format == "json") {
        ordered_json j = ordered_json::object();
        for (const auto& [label, count] : v.entries()) j[label.str()] = count;
        std::cout << j.dump() << '\n';
    } else {
        for (const auto& [label, count] : v.entries())
            std::cout << label.str() << " : " << count << '\n';
    }
}

template <typename Table>
void print_table_text(const Table& table) {
    const auto& labels = table.labels();
    size_t width = 0;
    for (const auto& l : labels) width = std::max(width, l.str().size());
    std::vector<size_t> col(labels.size(), 0);
    for (size_t j = 0; j < labels.size(); ++j) {
        col[j] = labels[j].str().size();
        for (size_t i = 0; i < labels.size(); ++i)
            col[j] = std::max(col[j], std::to_string(table.value_at(static_cast<int>(i),
                                                                   static_cast<int>(j)))
                                          .size());
    }
    std::cout << std::setw(static_cast<int>(width)) << "" << ' ';
    for (size_t j = 0; j < labels.size(); ++j)
        std::cout << std::setw(static_cast<int>(col[j])) << labels[j].str() << ' ';
    std::cout << '\n';
    for (size_t i = 0; i < labels.size(); ++i) {
        std::cout << std::setw(static_cast<int>(width)) << labels[i].str() << ' ';
        for (size_t j = 0; j < labels.size(); ++j)
            std::cout << std::setw(static_cast<int>(col[j]))
                      << table.value_at(static_cast<int>(i), static_cast<int>(j)) << ' ';
        std::cout << '\n';
    }
}

int cmd_decompose(int n, int m, const GlobalOpts& g) {
    print_multiplicities(parking_decomposition(ParkingSpec(n, m)), g);
    return 0;
}

int cmd_character_table(const std::string& group, int n, const GlobalOpts& g) {
    TableCache cache = g.make_cache();
    if (group == "B") {
        const HypCharacterTable& t = cache.hyp(n);
        if (g.format == "json")
            std::cout << table_to_json(t);
        else
            print_table_text(t);
    } else {
        const SymCharacterTable& t = cache.sym(n);
        if (g.format == "json")
            std::cout << table_to_json(t);
        else
            print_table_text(t);
    }
    return 0;
}

int cmd_restriction_matrix(int n, int m, const GlobalOpts& g) {
    RestrictionMatrix r = build_restriction_matrix(n, m);
    if (g.format == "json") {
        ordered_json j;
        j["n"] = r.n;
        j["m"] = r.m;
        ordered_json rows = ordered_json::array();
        for (const auto& b : r.row_index) rows.push_back(b.str());
        ordered_json cols = ordered_json::array();
        for (const auto& b : r.col_index) cols.push_back(b.str());
        j["rows"] = rows;
        j["cols"] = cols;
        j["entries"] = r.entries;
        std::cout << j.dump() << '\n';
        return 0;
    }
    size_t width = 0;
    for (const auto& b : r.row_index) width = std::max(width, b.str().size());
    std::cout << std::setw(static_cast<int>(width)) << "" << "  columns:";
    for (const auto& b : r.col_index) std::cout << ' ' << b.str();
    std::cout << '\n';
    for (size_t i = 0; i < r.entries.size(); ++i) {
        std::cout << std::setw(static_cast<int>(width)) << r.row_index[i].str() << "  ";
        for (int e : r.entries[i]) std::cout << ' ' << e;
        std::cout << '\n';
    }
    return 0;
}

int status_exit_code(FeasStatus s) {
    switch (s) {
        case FeasStatus::feasible: return 0;
        case FeasStatus::infeasible: return 3;
        case FeasStatus::resource_limit: return 4;
    }
    return 1;
}

int cmd_extend(int n, int m, const std::string& strategy, const std::string& space,
               const SolveBudget& budget, const GlobalOpts& g) {
    ExtendStrategy st = strategy == "tilde" ? ExtendStrategy::tilde
                        : strategy == "ilp" ? ExtendStrategy::ilp
                                            : ExtendStrategy::automatic;
    EncodingSpace sp =
        space == "character" ? EncodingSpace::character : EncodingSpace::multiplicity;
    ExtensionResult r = find_extension(n, m, st, sp, budget);

    if (r.extension && !verify_extension(*r.extension, ParkingSpec(n, m)).ok) {
        std::cerr << "error: witness failed verification at print time\n";
        return 1;
    }
    if (!g.quiet) {
        if (g.format == "json") {
            ordered_json j;
            j["n"] = n;
            j["m"] = m;
            j["status"] = status_name(r.status);
            j["method"] = r.method;
            j["nodes"] = r.nodes;
            if (!r.note.empty()) j["note"] = r.note;
            if (r.extension) {
                ordered_json w = ordered_json::object();
                for (const auto& [label, count] : r.extension->entries())
                    w[label.str()] = count;
                j["witness"] = w;
            }
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "status: " << status_name(r.status) << '\n'
                      << "method: " << r.method << '\n';
            if (!r.note.empty()) std::cout << "note: " << r.note << '\n';
            if (r.nodes > 0) std::cout << "nodes: " << r.nodes << '\n';
            if (r.extension) {
                std::cout << "witness:\n";
                for (const auto& [label, count] : r.extension->entries())
                    std::cout << "  " << label.str() << " : " << count << '\n';
            }
        }
    }
    return status_exit_code(r.status);
}

int cmd_sweep(int n_max, int m_max, int jobs, const std::string& out_path,
              const SolveBudget& budget, const GlobalOpts& g) {
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << '\n';
        return 1;
    }
    std::vector<SweepRecord> records = run_sweep(n_max, m_max, jobs, budget);
    write_sweep_csv(out, records);
    if (!out.flush()) {
        std::cerr << "error: short write to " << out_path << '\n';
        return 1;
    }
    if (!g.quiet) {
        int feasible_count = 0;
        for (const auto& r : records)
            if (r.status == FeasStatus::feasible) ++feasible_count;
        std::cout << "wrote " << records.size() << " records to " << out_path << " ("
                  << feasible_count << " feasible)\n";
    }
    return 0;
}

int cmd_verify_paper(bool deep, const SolveBudget& budget) {
    AcceptanceOptions options;
    options.deep = deep;
    options.deep_budget = budget;
    AcceptanceReport report = run_acceptance_suite(std::cout, options);
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact decompositions and extensions of generalized parking spaces "
                 "for the signed symmetric groups"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--cache-dir", g.cache_dir, "Directory for persisted character tables")
        ->envname("OCTAREP_CACHE");
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--quiet", g.quiet, "Suppress informational output and warnings");

    int n = 1, m = 1;
    std::string group = "B";
    std::string strategy = "auto", space = "multiplicity";
    SolveBudget budget;
    int n_max = 1, m_max = 1, jobs = 1;
    std::string out_path;
    bool deep = false;

    auto positive = CLI::Range(1, 1000000);

    CLI::App* dec = app.add_subcommand("decompose", "Decomposition of C[(Z/mZ)^n]");
    dec->fallthrough();
    dec->add_option("n", n, "Rank")->required()->check(positive);
    dec->add_option("m", m, "Modulus")->required()->check(positive);

    CLI::App* tab = app.add_subcommand("character-table", "Full character table");
    tab->fallthrough();
    tab->add_option("group", group, "B or S")->required()->check(CLI::IsMember({"B", "S"}));
    tab->add_option("n", n, "Rank")->required()->check(CLI::Range(0, 8));

    CLI::App* res = app.add_subcommand("restriction-matrix",
                                       "0/1 matrix of the branching over the support");
    res->fallthrough();
    res->add_option("n", n, "Rank")->required()->check(positive);
    res->add_option("m", m, "Modulus")->required()->check(positive);

    CLI::App* ext = app.add_subcommand("extend", "Search for an extension one rank up");
    ext->fallthrough();
    ext->add_option("n", n, "Rank")->required()->check(positive);
    ext->add_option("m", m, "Modulus")->required()->check(positive);
    ext->add_option("--strategy", strategy, "auto, tilde, or ilp")
        ->check(CLI::IsMember({"auto", "tilde", "ilp"}))
        ->capture_default_str();
    ext->add_option("--space", space, "Feasibility encoding")
        ->check(CLI::IsMember({"multiplicity", "character"}))
        ->capture_default_str();
    ext->add_option("--max-nodes", budget.max_nodes, "Solver node budget")
        ->capture_default_str();
    ext->add_option("--time-limit", budget.time_limit_sec, "Solver time budget, seconds")
        ->capture_default_str();

    CLI::App* swp = app.add_subcommand("sweep", "CSV of extension results over a grid");
    swp->fallthrough();
    swp->add_option("--n-max", n_max, "Largest rank")->required()->check(positive);
    swp->add_option("--m-max", m_max, "Largest modulus")->required()->check(positive);
    swp->add_option("--jobs", jobs, "Worker threads")->check(positive)
        ->capture_default_str();
    swp->add_option("--out", out_path, "CSV destination")->required();
    swp->add_option("--max-nodes", budget.max_nodes, "Solver node budget per pair")
        ->capture_default_str();
    swp->add_option("--time-limit", budget.time_limit_sec,
                    "Solver time budget per pair, seconds")
        ->capture_default_str();

    CLI::App* ver = app.add_subcommand("verify-paper", "Run the acceptance suite");
    ver->fallthrough();
    ver->add_flag("--deep", deep, "Also probe n in {5,6,7} at m = 2n+1");
    ver->add_option("--max-nodes", budget.max_nodes, "Deep-probe node budget")
        ->capture_default_str();
    ver->add_option("--time-limit", budget.time_limit_sec,
                    "Deep-probe time budget, seconds")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*dec) return cmd_decompose(n, m, g);
        if (*tab) return cmd_character_table(group, n, g);
        if (*res) return cmd_restriction_matrix(n, m, g);
        if (*ext) return cmd_extend(n, m, strategy, space, budget, g);
        if (*swp) return cmd_sweep(n_max, m_max, jobs, out_path, budget, g);
        if (*ver) return cmd_verify_paper(deep, budget);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
