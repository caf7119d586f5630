#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"

#include "mp/analysis.hpp"
#include "mp/catalog.hpp"
#include "mp/coloring.hpp"
#include "mp/formulas.hpp"
#include "mp/mpole_io.hpp"
#include "mp/multipole.hpp"
#include "mp/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

mp::Multipole load_multipole(const std::string& path) {
    if (path == "-") return mp::parse_mpole(std::cin);
    std::ifstream in(path);
    if (!in) throw mp::MultipoleError("cannot open " + path);
    return mp::parse_mpole(in);
}

// Stable 64-bit FNV-1a, used to name catalog files.
std::string fnv1a_hex(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream oss;
    oss << std::hex << std::setw(16) << std::setfill('0') << h;
    return oss.str();
}

std::pair<int, int> parse_range(const std::string& spec) {
    auto dots = spec.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(spec);
        return {v, v};
    }
    return {std::stoi(spec.substr(0, dots)), std::stoi(spec.substr(dots + 2))};
}

int cmd_states(const std::string& file, bool as_json) {
    mp::Multipole m = load_multipole(file);
    mp::require_valid(m);
    mp::StateSet set = mp::states(m);
    if (as_json) {
        json j = json::parse(mp::stateset_json(set));
        j["schema"] = kSchemaVersion;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << mp::stateset_text(set);
    }
    return 0;
}

int cmd_formula(const std::string& seq, const std::string& m_range, int n) {
    auto [lo, hi] = parse_range(m_range);
    for (int m = lo; m <= hi; ++m) {
        mp::BigInt value;
        if (seq == "sigma") value = mp::sigma(m);
        else if (seq == "rho") value = mp::rho(m);
        else if (seq == "t") value = mp::tree_count(m);
        else if (seq == "c") value = mp::cycle_count(m);
        else if (seq == "f") value = mp::forest_count(n, m);
        else throw mp::MultipoleError("unknown sequence `" + seq + "`");
        std::cout << value.str() << "\n";
    }
    return 0;
}

int cmd_table(int max_m, bool as_json) {
    if (as_json) {
        json rows = json::array();
        for (const auto& row : mp::forest_table(max_m))
            rows.push_back({{"n", row.n},
                            {"m", row.m},
                            {"value", row.value.str()},
                            {"cycle_diagonal", row.cycle_diagonal}});
        std::cout << json{{"schema", kSchemaVersion}, {"rows", rows}}.dump() << "\n";
    } else {
        std::cout << mp::render_forest_table(max_m);
    }
    return 0;
}

int cmd_gen(const std::string& kind, int m, const std::string& shape) {
    mp::Multipole result;
    if (kind == "tree") {
        if (shape.empty()) {
            result = mp::make_path_tree(m);
        } else {
            std::vector<int> parents;
            std::istringstream iss(shape);
            std::string tok;
            while (std::getline(iss, tok, ',')) parents.push_back(std::stoi(tok));
            result = mp::make_tree(parents);
            if (result.m() != m)
                throw mp::MultipoleError("shape yields m=" + std::to_string(result.m()) +
                                         ", not " + std::to_string(m));
        }
    } else if (kind == "cycle") {
        result = mp::make_cycle(m);
    } else if (kind == "minimal") {
        result = mp::make_minimal(m);
    } else {
        throw mp::MultipoleError("unknown generator `" + kind + "`");
    }
    std::cout << mp::write_mpole_text(result);
    return 0;
}

int cmd_join(const std::string& file1, const std::string& file2,
             const std::string& pairs) {
    mp::Multipole a = load_multipole(file1);
    mp::Multipole b = load_multipole(file2);
    mp::JunctionSpec spec;
    std::istringstream iss(pairs);
    std::string tok;
    while (std::getline(iss, tok, ',')) {
        auto colon = tok.find(':');
        if (colon == std::string::npos)
            throw mp::MultipoleError("--pairs expects i:j[,i:j...]");
        spec.pairs.emplace_back(std::stoi(tok.substr(0, colon)),
                                std::stoi(tok.substr(colon + 1)));
    }
    std::cout << mp::write_mpole_text(mp::junction(a, b, spec));
    return 0;
}

int cmd_cut(const std::string& file, const std::string& edge) {
    mp::Multipole m = load_multipole(file);
    auto colon = edge.find(':');
    if (colon == std::string::npos) throw mp::MultipoleError("--edge expects u:v");
    mp::Edge e(std::stoi(edge.substr(0, colon)), std::stoi(edge.substr(colon + 1)));
    std::cout << mp::write_mpole_text(mp::cut_edge(m, e));
    return 0;
}

int cmd_catalog(int m, int n, int n_max, bool connected, bool colorable,
                const std::string& out_dir, int workers) {
    std::vector<mp::CatalogEntry> entries;
    if (n_max >= 0)
        entries = mp::generate_up_to(m, n_max, connected, colorable, workers);
    else
        entries = mp::generate({m, n, connected, colorable, {}}, workers);
    fs::create_directories(out_dir);
    json index;
    index["schema"] = kSchemaVersion;
    index["m"] = m;
    index["count"] = entries.size();
    json files = json::array();
    for (const auto& e : entries) {
        std::string name = fnv1a_hex(e.certificate) + ".mpole";
        std::ofstream out(fs::path(out_dir) / name);
        mp::write_mpole(out, e.multipole);
        files.push_back({{"file", name},
                         {"n", e.multipole.n()},
                         {"certificate", e.certificate}});
    }
    index["entries"] = files;
    std::ofstream idx(fs::path(out_dir) / "index.json");
    idx << index.dump(2) << "\n";
    std::cout << entries.size() << " entries written to " << out_dir << "\n";
    return 0;
}

int cmd_check(const std::string& kind, const std::string& file, int bound, bool as_json,
              int workers) {
    mp::Multipole m = load_multipole(file);
    mp::require_valid(m);
    mp::AnalysisVerdict verdict;
    if (kind == "complete") verdict = mp::is_color_complete(m);
    else if (kind == "closed") verdict = mp::is_color_closed(m, bound, workers);
    else if (kind == "reducible") verdict = mp::is_reducible(m, workers);
    else if (kind == "separable") verdict = mp::is_separable(m, workers);
    else throw mp::MultipoleError("unknown check `" + kind + "`");

    if (as_json) {
        json j;
        j["schema"] = kSchemaVersion;
        j["check"] = kind;
        j["verdict"] = mp::to_string(verdict.kind);
        j["holds"] = verdict.holds();
        if (verdict.bound_n_max >= 0) j["bound"] = verdict.bound_n_max;
        if (!verdict.note.empty()) j["note"] = verdict.note;
        if (verdict.witness) j["witness"] = mp::write_mpole_text(*verdict.witness);
        if (!verdict.witness_order.empty()) j["witness_order"] = verdict.witness_order;
        if (verdict.state)
            j["state"] = mp::state_to_string(*verdict.state, m.m());
        std::cout << j.dump() << "\n";
    } else {
        std::cout << mp::to_string(verdict.kind);
        if (verdict.bound_n_max >= 0) std::cout << " [n<=" << verdict.bound_n_max << "]";
        if (!verdict.note.empty()) std::cout << " (" << verdict.note << ")";
        std::cout << "\n";
        if (verdict.witness) std::cout << mp::write_mpole_text(*verdict.witness);
        if (verdict.state)
            std::cout << "state " << mp::state_to_string(*verdict.state, m.m()) << "\n";
    }
    return verdict.holds() ? 0 : 1;
}

int cmd_report_v(int max_m, int workers) {
    for (const auto& row : mp::v_lower_bound_report(max_m, workers)) {
        std::cout << "m=" << row.m << " tree_irreducible=" << (row.tree_irreducible ? "yes" : "no");
        if (row.m >= 3)
            std::cout << " cycle_irreducible=" << (row.cycle_irreducible ? "yes" : "no");
        std::cout << " v(" << row.m << ")>=" << row.implied_lower;
        if (row.known_exact) std::cout << " known=" << *row.known_exact;
        else if (row.known_lower) std::cout << " known>=" << *row.known_lower;
        std::cout << (row.consistent ? "" : " INCONSISTENT") << "\n";
    }
    return 0;
}

int cmd_verify_all(int workers) {
    auto start = std::chrono::steady_clock::now();
    auto results = mp::run_acceptance(workers);
    std::cout << mp::acceptance_report(results);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    std::cerr << "verify-all took " << elapsed << " ms\n";  // stderr keeps stdout stable
    for (const auto& r : results)
        if (!r.pass) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cubic multipole state analysis"};
    app.require_subcommand(1);
    int workers = 1;
    app.add_option("--workers", workers, "worker threads for catalog searches");

    std::string file, file2, seq, m_range, shape, pairs, edge, out_dir, kind;
    int m_value = 0, n_value = -1, n_max = -1, max_m = 8, bound = 8;
    bool as_json = false, connected = false, colorable = false;

    auto* states_cmd = app.add_subcommand("states", "print the state set of a multipole");
    states_cmd->add_option("file", file, "input .mpole file or -")->required();
    states_cmd->add_flag("--json", as_json);

    auto* formula_cmd = app.add_subcommand("formula", "evaluate a counting sequence");
    formula_cmd->add_option("seq", seq, "sigma|rho|t|c|f")->required();
    formula_cmd->add_option("--m", m_range, "m or range A..B")->required();
    formula_cmd->add_option("--n", n_value, "n (for f)");

    auto* table_cmd = app.add_subcommand("table", "forest state count table");
    table_cmd->add_option("seq", seq)->required()->check(CLI::IsMember({"f"}));
    table_cmd->add_option("--max-m", max_m)->required();
    table_cmd->add_flag("--json", as_json);

    auto* gen_cmd = app.add_subcommand("gen", "generate a standard multipole");
    gen_cmd->add_option("kind", kind, "tree|cycle|minimal")->required();
    gen_cmd->add_option("m", m_value)->required();
    gen_cmd->add_option("--shape", shape, "tree parent list, e.g. 0,0,1");

    auto* join_cmd = app.add_subcommand("join", "junction of two multipoles");
    join_cmd->add_option("file1", file)->required();
    join_cmd->add_option("file2", file2)->required();
    join_cmd->add_option("--pairs", pairs, "i:j[,i:j...]")->required();

    auto* cut_cmd = app.add_subcommand("cut", "cut one edge into two semiedges");
    cut_cmd->add_option("file", file)->required();
    cut_cmd->add_option("--edge", edge, "u:v")->required();

    auto* catalog_cmd = app.add_subcommand("catalog", "isomorph-free catalog");
    catalog_cmd->add_option("--m", m_value)->required();
    catalog_cmd->add_option("--n", n_value);
    catalog_cmd->add_option("--n-max", n_max);
    catalog_cmd->add_flag("--connected", connected);
    catalog_cmd->add_flag("--colorable", colorable);
    catalog_cmd->add_option("--out", out_dir)->required();

    auto* check_cmd = app.add_subcommand("check", "decision procedures");
    check_cmd->add_option("kind", kind, "complete|closed|reducible|separable")->required();
    check_cmd->add_option("file", file)->required();
    check_cmd->add_option("--bound", bound, "vertex bound for bounded searches");
    check_cmd->add_flag("--json", as_json);

    auto* report_cmd = app.add_subcommand("report-v", "v(m) lower bound report");
    report_cmd->add_option("--max-m", max_m)->required();

    app.add_subcommand("verify-all", "run the full verification suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (states_cmd->parsed()) return cmd_states(file, as_json);
        if (formula_cmd->parsed()) return cmd_formula(seq, m_range, n_value);
        if (table_cmd->parsed()) return cmd_table(max_m, as_json);
        if (gen_cmd->parsed()) return cmd_gen(kind, m_value, shape);
        if (join_cmd->parsed()) return cmd_join(file, file2, pairs);
        if (cut_cmd->parsed()) return cmd_cut(file, edge);
        if (catalog_cmd->parsed()) {
            if (n_value < 0 && n_max < 0)
                throw mp::MultipoleError("catalog: need --n or --n-max");
            return cmd_catalog(m_value, n_value, n_max, connected, colorable, out_dir,
                               workers);
        }
        if (check_cmd->parsed()) return cmd_check(kind, file, bound, as_json, workers);
        if (report_cmd->parsed()) return cmd_report_v(max_m, workers);
        if (app.get_subcommand("verify-all")->parsed()) return cmd_verify_all(workers);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
