// Command-line front end: construct, verify, enumerate, count, render and
// transform C4-face-magic projective grid labelings.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "facemagic/construct.hpp"
#include "facemagic/document.hpp"
#include "facemagic/formulas.hpp"
#include "facemagic/search.hpp"
#include "facemagic/transform.hpp"

using nlohmann::ordered_json;
using namespace facemagic;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitParse = 3;
constexpr int kExitBudget = 4;
constexpr int kExitUsage = 64;

RowOrder order_from_flag(const std::string& s) {
    if (s == "up") return RowOrder::Up;
    if (s == "down") return RowOrder::Down;
    throw ValidationError("--file-order must be 'up' or 'down'");
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ValidationError(std::string("bad ") + what + " entry '" + tok + "'");
        }
    }
    if (out.empty()) throw ValidationError(std::string("empty ") + what);
    return out;
}

std::vector<std::uint8_t> parse_mask(const std::string& text) {
    std::vector<std::uint8_t> mask;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw ValidationError("mask must be a string of 0s and 1s, got '" + text + "'");
        mask.push_back(c == '1');
    }
    return mask;
}

int default_workers() {
    if (const char* env = std::getenv("FACEMAGIC_WORKERS")) {
        const int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

void emit_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

struct VerifyFlags {
    bool magic = false;
    std::optional<int> S;
    int D1 = 0, D2 = 0;
    ValueClass cls = ValueClass::Other;
    std::optional<bool> balanced; // odd x odd only
    std::optional<bool> standard; // balanced magic only
};

VerifyFlags inspect(const Labeling& L) {
    VerifyFlags f;
    const MagicReport rep = verify(L);
    f.magic = rep.is_magic;
    f.S = rep.S;
    f.D1 = rep.D1;
    f.D2 = rep.D2;
    f.cls = rep.value_class;
    if (L.dims.both_odd()) {
        f.balanced = is_bicentrally_balanced(L);
        if (*f.balanced && f.magic) f.standard = is_standard(L);
    }
    return f;
}

ordered_json flags_json(const VerifyFlags& f) {
    ordered_json j;
    j["is_magic"] = f.magic;
    if (f.S) j["S"] = *f.S;
    j["D1"] = f.D1;
    j["D2"] = f.D2;
    j["value_class"] = value_class_name(f.cls);
    if (f.balanced) j["bicentrally_balanced"] = *f.balanced;
    if (f.standard) j["standard"] = *f.standard;
    return j;
}

void print_flags(const VerifyFlags& f) {
    std::cout << "is_magic=" << (f.magic ? "true" : "false") << "\n";
    std::cout << "S=" << (f.S ? std::to_string(*f.S) : "n/a") << "\n";
    std::cout << "D1=" << f.D1 << "\n";
    std::cout << "D2=" << f.D2 << "\n";
    std::cout << "value_class=" << value_class_name(f.cls) << "\n";
    std::cout << "bicentrally_balanced="
              << (f.balanced ? (*f.balanced ? "true" : "false") : "n/a") << "\n";
    std::cout << "standard=" << (f.standard ? (*f.standard ? "true" : "false") : "n/a") << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"C4-face-magic labelings of projective grid graphs"};
    app.require_subcommand(1);

    std::string command_echo;
    for (int t = 0; t < argc; ++t) {
        if (t) command_echo += ' ';
        command_echo += argv[t];
    }

    // ---- construct ----
    auto* cmd_construct = app.add_subcommand("construct", "Build an HBBL/VBBL labeling");
    std::string c_orientation, c_sequence, c_out, c_order = "up";
    cmd_construct->add_option("--orientation", c_orientation, "horizontal|vertical")->required();
    cmd_construct->add_option("--sequence", c_sequence, "comma-separated factor sequence")
        ->required();
    cmd_construct->add_option("-o,--output", c_out, "output path (default stdout)");
    cmd_construct->add_option("--file-order", c_order, "row order of the document (up|down)");

    // ---- verify ----
    auto* cmd_verify = app.add_subcommand("verify", "Verify a labeling document");
    std::string v_path, v_order = "up", v_format = "doc";
    bool v_json = false;
    cmd_verify->add_option("path", v_path)->required();
    cmd_verify->add_option("--file-order", v_order, "row order of the file (up|down)");
    cmd_verify->add_option("--format", v_format, "doc|csv");
    cmd_verify->add_flag("--json", v_json, "machine-readable report");

    // ---- enumerate ----
    auto* cmd_enumerate = app.add_subcommand("enumerate", "Exhaustively enumerate magic labelings");
    int e_m = 0, e_n = 0, e_workers = default_workers();
    long long e_budget = 0;
    std::string e_value = "all", e_pruning = "pure", e_emit_dir;
    bool e_up_to_symmetry = false, e_json = false;
    cmd_enumerate->add_option("--m", e_m)->required();
    cmd_enumerate->add_option("--n", e_n)->required();
    cmd_enumerate->add_option("--value", e_value, "all or a magic value");
    cmd_enumerate->add_flag("--up-to-symmetry", e_up_to_symmetry,
                            "report counts up to symmetries of the projective plane");
    cmd_enumerate->add_option("--pruning", e_pruning, "pure|lemma");
    cmd_enumerate->add_option("--workers", e_workers, "parallel workers");
    cmd_enumerate->add_option("--emit-dir", e_emit_dir, "write canonical representatives here");
    cmd_enumerate->add_option("--node-budget", e_budget, "abort after this many nodes (0 = off)");
    cmd_enumerate->add_flag("--json", e_json);

    // ---- count ----
    auto* cmd_count = app.add_subcommand("count", "Evaluate the counting formulas");
    int k_m = 0, k_n = 0;
    bool k_json = false;
    cmd_count->add_option("--m", k_m)->required();
    cmd_count->add_option("--n", k_n)->required();
    cmd_count->add_flag("--json", k_json);

    // ---- render ----
    auto* cmd_render = app.add_subcommand("render", "Render a labeling as text");
    std::string r_path, r_format = "ascii", r_order = "up", r_out;
    bool r_table_order = false;
    cmd_render->add_option("path", r_path)->required();
    cmd_render->add_option("--format", r_format, "ascii|csv");
    cmd_render->add_flag("--table-order", r_table_order, "CSV rows from j=n down, like the tables");
    cmd_render->add_option("--file-order", r_order, "row order of the input file (up|down)");
    cmd_render->add_option("-o,--output", r_out);

    // ---- transform ----
    auto* cmd_transform = app.add_subcommand("transform", "Apply a labeling operation");
    std::string t_path, t_out, t_order = "up";
    bool t_standardize = false, t_complement = false;
    std::string t_swap_cols, t_swap_rows, t_perm_cols, t_perm_rows, t_symmetry;
    cmd_transform->add_option("path", t_path)->required();
    cmd_transform->add_flag("--standardize", t_standardize);
    cmd_transform->add_flag("--complement", t_complement);
    cmd_transform->add_option("--swap-cols", t_swap_cols, "column swap mask, e.g. 10");
    cmd_transform->add_option("--swap-rows", t_swap_rows, "row swap mask");
    cmd_transform->add_option("--perm-cols", t_perm_cols, "parity-preserving permutation, e.g. 3,2,1");
    cmd_transform->add_option("--perm-rows", t_perm_rows);
    cmd_transform->add_option("--symmetry", t_symmetry, "R0|R90|R180|R270|H|V|D+|D-");
    cmd_transform->add_option("-o,--output", t_out);
    cmd_transform->add_option("--file-order", t_order, "row order for input and output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cmd_construct) {
            Orientation o;
            if (c_orientation == "horizontal")
                o = Orientation::Horizontal;
            else if (c_orientation == "vertical")
                o = Orientation::Vertical;
            else
                throw ValidationError("--orientation must be horizontal or vertical");
            const auto F = FactorizationSequence::make(o, parse_int_list(c_sequence, "sequence"));
            const Labeling L = construct_labeling(F);
            LabelingDocument doc;
            doc.labeling = L;
            doc.S = verify(L).S;
            doc.generator = F.to_string();
            emit_output(write_document(doc, order_from_flag(c_order)), c_out);
            return kExitOk;
        }

        if (*cmd_verify) {
            const std::string text = read_file(v_path);
            Labeling L = v_format == "csv"
                             ? parse_csv(text, order_from_flag(v_order))
                             : parse_document(text, order_from_flag(v_order)).labeling;
            const VerifyFlags f = inspect(L);
            if (v_json) {
                ordered_json j;
                j["command"] = command_echo;
                j["report"] = flags_json(f);
                std::cout << j.dump(2) << "\n";
            } else {
                print_flags(f);
            }
            return kExitOk;
        }

        if (*cmd_enumerate) {
            SearchConfig cfg;
            cfg.dims = Dims::of(e_m, e_n);
            if (e_value != "all") cfg.value_filter = std::stoi(e_value);
            if (e_pruning == "pure")
                cfg.pruning = PruningMode::Pure;
            else if (e_pruning == "lemma")
                cfg.pruning = PruningMode::LemmaAssisted;
            else
                throw ValidationError("--pruning must be pure or lemma");
            cfg.worker_count = e_workers;
            cfg.node_budget = e_budget;
            cfg.collect_solutions = false;

            const EnumerationReport rep = enumerate_all(cfg);

            if (!e_emit_dir.empty()) {
                std::filesystem::create_directories(e_emit_dir);
                for (const auto& [S, reps] : rep.representatives) {
                    int idx = 0;
                    for (const Labeling& L : reps) {
                        LabelingDocument doc;
                        doc.labeling = L;
                        doc.S = S;
                        doc.generator = "enumerate";
                        write_file(e_emit_dir + "/labeling_S" + std::to_string(S) + "_" +
                                       std::to_string(idx++) + ".txt",
                                   write_document(doc));
                    }
                }
            }

            if (e_json) {
                ordered_json j;
                j["command"] = command_echo;
                j["m"] = rep.dims.m;
                j["n"] = rep.dims.n;
                j["pruning"] = e_pruning;
                j["complete"] = rep.complete;
                ordered_json counts = ordered_json::array();
                for (const auto& [S, c] : rep.counts) {
                    ordered_json row;
                    row["S"] = S;
                    row["raw"] = c.raw;
                    row["orbits"] = c.orbits;
                    counts.push_back(row);
                }
                j["counts"] = counts;
                j["total_raw"] = rep.total_raw();
                j["total_orbits"] = rep.total_orbits();
                j["nodes_visited"] = rep.nodes_visited;
                j["wall_seconds"] = rep.wall_seconds;
                j["workers"] = rep.workers;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "dims=" << rep.dims.m << "x" << rep.dims.n << "\n";
                std::cout << "pruning=" << e_pruning << "\n";
                std::cout << "complete=" << (rep.complete ? "true" : "false") << "\n";
                for (const auto& [S, c] : rep.counts)
                    std::cout << "S=" << S << " raw=" << c.raw
                              << (e_up_to_symmetry ? " orbits=" + std::to_string(c.orbits) : "")
                              << "\n";
                std::cout << "total_raw=" << rep.total_raw() << "\n";
                if (e_up_to_symmetry) std::cout << "total_orbits=" << rep.total_orbits() << "\n";
                std::cout << "nodes=" << rep.nodes_visited << "\n";
            }
            return rep.complete ? kExitOk : kExitBudget;
        }

        if (*cmd_count) {
            const long long t_mn = tau(k_m, k_n), t_nm = tau(k_n, k_m);
            const long long b_m = beta(k_m), b_n = beta(k_n);
            const long long mid = count_value_mid(k_m, k_n);
            const long long plus = lower_bound_value_plus(k_m, k_n);
            const long long total = lower_bound_total(k_m, k_n);
            if (k_json) {
                ordered_json j;
                j["command"] = command_echo;
                j["m"] = k_m;
                j["n"] = k_n;
                j["tau_mn"] = t_mn;
                j["tau_nm"] = t_nm;
                j["beta_m"] = b_m;
                j["beta_n"] = b_n;
                j["count_value_mid"] = mid;
                j["lower_bound_value_plus"] = plus;
                j["lower_bound_total"] = total;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "tau(m,n)=" << t_mn << "\n";
                std::cout << "tau(n,m)=" << t_nm << "\n";
                std::cout << "beta(m)=" << b_m << "\n";
                std::cout << "beta(n)=" << b_n << "\n";
                std::cout << "count_value_mid=" << mid << "\n";
                std::cout << "lower_bound_value_plus=" << plus << "\n";
                std::cout << "lower_bound_total=" << total << "\n";
            }
            return kExitOk;
        }

        if (*cmd_render) {
            const Labeling L = parse_document(read_file(r_path), order_from_flag(r_order)).labeling;
            std::string out;
            if (r_format == "ascii")
                out = render_ascii(L);
            else if (r_format == "csv")
                out = write_csv(L, r_table_order ? RowOrder::Down : RowOrder::Up);
            else
                throw ValidationError("--format must be ascii or csv");
            emit_output(out, r_out);
            return kExitOk;
        }

        if (*cmd_transform) {
            const int ops = (t_standardize ? 1 : 0) + (t_complement ? 1 : 0) +
                            (!t_swap_cols.empty()) + (!t_swap_rows.empty()) +
                            (!t_perm_cols.empty()) + (!t_perm_rows.empty()) +
                            (!t_symmetry.empty());
            if (ops != 1)
                throw ValidationError("transform needs exactly one operation flag");
            const RowOrder order = order_from_flag(t_order);
            LabelingDocument doc = parse_document(read_file(t_path), order);
            Labeling L = doc.labeling;
            std::string generator;
            if (t_standardize) {
                L = standardize(L);
                generator = "standardize";
            } else if (t_complement) {
                L = complement(L);
                generator = "complement";
            } else if (!t_swap_cols.empty()) {
                L = swap_columns(L, parse_mask(t_swap_cols));
                generator = "swap-cols " + t_swap_cols;
            } else if (!t_swap_rows.empty()) {
                L = swap_rows(L, parse_mask(t_swap_rows));
                generator = "swap-rows " + t_swap_rows;
            } else if (!t_perm_cols.empty()) {
                L = permute_column_pairs(L, parse_int_list(t_perm_cols, "permutation"));
                generator = "perm-cols " + t_perm_cols;
            } else if (!t_perm_rows.empty()) {
                L = permute_row_pairs(L, parse_int_list(t_perm_rows, "permutation"));
                generator = "perm-rows " + t_perm_rows;
            } else {
                L = apply_symmetry(symmetry_from_name(t_symmetry), L);
                generator = "symmetry " + t_symmetry;
            }
            LabelingDocument out;
            out.labeling = L;
            out.S = verify(L).S; // re-verified before write
            out.generator = generator;
            emit_output(write_document(out, order), t_out);
            return kExitOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const StructureViolation& e) {
        std::cerr << "structure violation: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}
