#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mbd/domination.hpp"
#include "mbd/errors.hpp"
#include "mbd/graph.hpp"
#include "mbd/solver.hpp"
#include "mbd/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;
constexpr int kExitSize = 4;

// Replaces the two-character sequence \n with a newline so edge lists can
// be passed as a single shell argument.
std::string unescape_newlines(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '\\' && i + 1 < s.size() && s[i + 1] == 'n') {
            out += '\n';
            ++i;
        } else {
            out += s[i];
        }
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw mbd::ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// Text with an "n m" numeric header is an edge list, otherwise graph6.
mbd::Graph graph_from_text(const std::string& text) {
    std::string t = strip(text);
    if (t.find('\n') != std::string::npos ||
        t.find(' ') != std::string::npos)
        return mbd::graph_from_edge_list_text(t);
    return mbd::graph_from_graph6(t);
}

// Accepts gen:<spec>, g6:<string>, edges:<text>, file:<path>, or bare graph6.
mbd::Graph parse_graph_spec(const std::string& spec) {
    if (spec.rfind("gen:", 0) == 0) return mbd::generate(spec.substr(4));
    if (spec.rfind("g6:", 0) == 0) return mbd::graph_from_graph6(spec.substr(3));
    if (spec.rfind("edges:", 0) == 0)
        return mbd::graph_from_edge_list_text(unescape_newlines(spec.substr(6)));
    if (spec.rfind("file:", 0) == 0) return graph_from_text(read_file(spec.substr(5)));
    return mbd::graph_from_graph6(spec);
}

// Common per-subcommand graph input flags (--g6/--edges/--file/--gen).
struct GraphInput {
    std::string g6, edges, file, gen;

    void attach(CLI::App* cmd) {
        auto* a = cmd->add_option("--g6", g6, "graph6 string");
        auto* b = cmd->add_option("--edges", edges, "edge list text, \\n separates lines");
        auto* c = cmd->add_option("--file", file, "path to a graph6 or edge list file");
        auto* d = cmd->add_option("--gen", gen, "generator spec, e.g. path:4 or fig1_H");
        a->excludes(b, c, d);
        b->excludes(c, d);
        c->excludes(d);
    }

    mbd::Graph load() const {
        if (!g6.empty()) return mbd::graph_from_graph6(g6);
        if (!edges.empty())
            return mbd::graph_from_edge_list_text(unescape_newlines(edges));
        if (!file.empty()) return graph_from_text(read_file(file));
        if (!gen.empty()) return mbd::generate(gen);
        throw mbd::ParseError("no graph input given (use --g6, --edges, --file, or --gen)");
    }
};

struct CommonFlags {
    std::uint64_t node_limit = 200'000'000;
    int table_mb = 1024;
    std::string format = "text";
    unsigned seed = 1;
    CLI::Option* table_opt = nullptr;
    bool table_mb_from_env = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--node-limit", node_limit, "abort search after this many nodes");
        table_opt = cmd->add_option("--table-mb", table_mb, "transposition table memory in MiB");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--seed", seed, "seed for sampled property checks");
    }

    bool table_mb_explicit() const {
        return table_mb_from_env || (table_opt != nullptr && table_opt->count() > 0);
    }

    // MBD_TABLE_MB overrides the flag when set.
    void apply_env() {
        const char* env = std::getenv("MBD_TABLE_MB");
        if (env == nullptr) return;
        std::string s(env);
        try {
            std::size_t pos = 0;
            int v = std::stoi(s, &pos);
            if (pos != s.size() || v <= 0) throw std::invalid_argument(s);
            table_mb = v;
            table_mb_from_env = true;
        } catch (const std::exception&) {
            throw mbd::ParseError("MBD_TABLE_MB must be a positive integer, got: " + s);
        }
    }
};

mbd::Player parse_player(const std::string& s) {
    if (s == "d") return mbd::Player::Dominator;
    if (s == "s") return mbd::Player::Staller;
    throw mbd::ParseError("expected d or s, got: " + s);
}

mbd::VertexSet parse_vertex_list(const mbd::Graph& g, const std::string& text) {
    mbd::VertexSet out = 0;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = strip(item);
        if (item.empty()) continue;
        std::size_t pos = 0;
        int v = -1;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw mbd::ParseError("bad vertex: " + item);
        }
        if (pos != item.size()) throw mbd::ParseError("bad vertex: " + item);
        if (v < 0 || v >= g.order()) throw mbd::InvalidVertexError("vertex out of range: " + item);
        out |= mbd::vbit(v);
    }
    return out;
}

int run_solve(CLI::App* cmd, const GraphInput& input, const CommonFlags& common,
              const std::string& game, const std::string& objective,
              const std::string& predominated) {
    (void)cmd;
    mbd::Graph g = input.load();
    mbd::SolveConfig cfg;
    cfg.first_player = parse_player(game);
    if (objective == "mb")
        cfg.objective = mbd::Objective::MB;
    else if (objective == "smb")
        cfg.objective = mbd::Objective::SMB;
    else
        throw mbd::ParseError("expected mb or smb, got: " + objective);
    cfg.predominated = parse_vertex_list(g, predominated);
    cfg.node_limit = common.node_limit;
    cfg.table_memory_mb = common.table_mb;

    mbd::SolveStats stats;
    mbd::MoveCount value = mbd::solve(g, cfg, stats);

    std::string move = "none";
    mbd::GameState start;
    start.predominated = cfg.predominated;
    start.to_move = cfg.first_player;
    try {
        move = g.label(mbd::optimal_move(g, start, cfg));
    } catch (const mbd::NoLegalMoveError&) {
    }

    if (common.format == "json") {
        nlohmann::json j;
        j["value"] = value.to_string();
        j["move"] = move;
        j["nodes"] = stats.nodes;
        j["tt_hits"] = stats.tt_hits;
        j["elapsed_ms"] = stats.elapsed_ms;
        std::cout << j.dump() << "\n";
    } else if (common.format == "csv") {
        std::cout << "value,move,nodes,tt_hits,elapsed_ms\n"
                  << value.to_string() << ',' << move << ',' << stats.nodes << ','
                  << stats.tt_hits << ',' << stats.elapsed_ms << "\n";
    } else {
        std::cout << value.to_string() << "\n"
                  << "move: " << move << "\n"
                  << "nodes: " << stats.nodes << "  tt_hits: " << stats.tt_hits
                  << "  elapsed_ms: " << stats.elapsed_ms << "\n";
    }
    return kExitOk;
}

nlohmann::json labeling_json(const mbd::CoronaLabeling& lab) {
    nlohmann::json j;
    std::vector<int> base;
    for (int i = 0; i < lab.g_order; ++i) base.push_back(lab.base_vertex(i));
    std::vector<std::vector<int>> copies;
    for (int i = 0; i < lab.g_order; ++i) {
        std::vector<int> copy;
        for (int k = 0; k < lab.h_order; ++k) copy.push_back(lab.copy_vertex(i, k));
        copies.push_back(std::move(copy));
    }
    j["base_vertices"] = base;
    j["copy_vertices"] = copies;
    return j;
}

int run_corona(const std::string& g_spec, const std::string& h_spec,
               const std::string& out_path) {
    mbd::Graph g = parse_graph_spec(g_spec);
    mbd::Graph h = parse_graph_spec(h_spec);
    mbd::CoronaResult result = mbd::corona(g, h);
    std::string line = mbd::to_graph6(result.product);
    nlohmann::json labels = labeling_json(result.labeling);
    if (out_path.empty()) {
        std::cout << line << "\n" << labels.dump() << "\n";
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw mbd::ParseError("cannot write file: " + out_path);
        out << line << "\n";
        std::ofstream side(out_path + ".labels.json", std::ios::binary);
        if (!side) throw mbd::ParseError("cannot write file: " + out_path + ".labels.json");
        side << labels.dump() << "\n";
    }
    return kExitOk;
}

int run_batch(const CommonFlags& common) {
    std::cout << "graph6,n,gamma,outcome,mb,mb_prime,smb,smb_prime,error\n";
    std::string line;
    while (std::getline(std::cin, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        try {
            mbd::Graph g = mbd::graph_from_graph6(line);
            mbd::SolveConfig cfg;
            cfg.node_limit = common.node_limit;
            cfg.table_memory_mb = common.table_mb;
            mbd::MbdNumbers nums = mbd::all_mbd_numbers(g, cfg);
            std::cout << line << ',' << g.order() << ',' << mbd::domination_number(g) << ','
                      << mbd::to_string(nums.outcome) << ',' << nums.mb.to_string() << ','
                      << nums.mb_prime.to_string() << ',' << nums.smb.to_string() << ','
                      << nums.smb_prime.to_string() << ",\n";
        } catch (const mbd::ParseError&) {
            std::cout << "\"\",,,,,,,,ParseError\n";
        } catch (const mbd::NodeLimitError&) {
            std::cout << line << ",,,,,,,,NodeLimit\n";
        } catch (const mbd::SizeLimitError&) {
            std::cout << line << ",,,,,,,,SizeLimit\n";
        }
    }
    return kExitOk;
}

void print_reports(const std::vector<mbd::VerificationReport>& reports,
                   const std::string& format) {
    mbd::SuiteSummary sum = mbd::summarize(reports);
    if (format == "json") {
        std::string out = "{\"reports\":[";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i != 0) out += ",";
            out += reports[i].to_json();
        }
        out += "],\"summary\":{\"Pass\":" + std::to_string(sum.pass) +
               ",\"Fail\":" + std::to_string(sum.fail) +
               ",\"Unknown\":" + std::to_string(sum.unknown) +
               ",\"NotApplicable\":" + std::to_string(sum.not_applicable) + "}}";
        std::cout << out << "\n";
    } else if (format == "csv") {
        std::cout << mbd::VerificationReport::csv_header() << "\n";
        for (const auto& r : reports) std::cout << r.to_csv_row() << "\n";
        std::cerr << "Pass: " << sum.pass << "  Fail: " << sum.fail << "  Unknown: "
                  << sum.unknown << "  NotApplicable: " << sum.not_applicable << "\n";
    } else {
        for (const auto& r : reports) std::cout << r.to_text() << "\n";
        std::cout << "Pass: " << sum.pass << "  Fail: " << sum.fail << "  Unknown: "
                  << sum.unknown << "  NotApplicable: " << sum.not_applicable << "\n";
    }
}

int run_verify(const CommonFlags& common, const std::string& theorem,
               const std::string& g_spec, const std::string& h_spec,
               const std::string& t_spec, const std::string& corpus, bool stretch) {
    mbd::VerifyLimits limits;
    limits.node_limit = common.node_limit;
    limits.table_memory_mb = static_cast<std::size_t>(common.table_mb);
    if (stretch) {
        limits.node_limit = 1'000'000'000'000ULL;
        limits.max_order = 27;
        if (!common.table_mb_explicit()) limits.table_memory_mb = 2048;
    }

    std::vector<mbd::VerificationReport> reports;
    std::string h_or_t = !h_spec.empty() ? h_spec : t_spec;
    if (!g_spec.empty() || !h_or_t.empty()) {
        // Single-instance mode.
        if (theorem == "k1-corona") {
            reports.push_back(mbd::verify_k1_corona(parse_graph_spec(h_or_t), limits));
        } else if (theorem == "k2-corona") {
            reports = mbd::verify_k2_corona(parse_graph_spec(h_or_t), limits);
        } else if (mbd::selector_uses_pairs(theorem)) {
            if (g_spec.empty() || h_or_t.empty())
                throw mbd::ParseError("selector " + theorem + " needs --g and --h (or --t)");
            mbd::Graph g = parse_graph_spec(g_spec);
            mbd::Graph h = parse_graph_spec(h_or_t);
            if (theorem == "outcome") reports.push_back(mbd::verify_outcome(g, h, limits));
            else if (theorem == "smb-formula") reports.push_back(mbd::verify_smb_formula(g, h, limits));
            else if (theorem == "bounds-d") reports.push_back(mbd::verify_bounds_d(g, h, limits));
            else if (theorem == "bounds-n") reports.push_back(mbd::verify_bounds_n(g, h, limits));
            else if (theorem == "tree-pm") reports.push_back(mbd::verify_tree_pm(g, h, limits));
            else reports.push_back(mbd::verify_small_values(g, h, limits));
        } else {
            mbd::Graph g = parse_graph_spec(!g_spec.empty() ? g_spec : h_or_t);
            if (theorem == "no-draw") reports.push_back(mbd::verify_no_draw(g, limits));
            else if (theorem == "staller-bounds") reports.push_back(mbd::verify_staller_bounds(g, limits));
            else if (theorem == "ordering") reports.push_back(mbd::verify_ordering(g, limits));
            else if (theorem == "continuation")
                reports.push_back(mbd::verify_continuation(g, 500, common.seed, limits));
            else if (theorem == "no-skip") reports.push_back(mbd::verify_no_skip(g, limits));
            else throw mbd::ParseError("selector all needs a corpus, not a single instance");
        }
    } else {
        mbd::SuiteOptions options;
        options.limits = limits;
        options.seed = common.seed;
        std::vector<mbd::Graph> singles;
        if (corpus == "default") {
            singles = mbd::default_single_corpus();
        } else {
            if (theorem != "all" && mbd::selector_uses_pairs(theorem))
                throw mbd::ParseError("file corpus applies to single-graph selectors only");
            std::istringstream in(read_file(corpus));
            std::string line;
            while (std::getline(in, line)) {
                if (!line.empty() && line.back() == '\r') line.pop_back();
                if (line.empty()) continue;
                singles.push_back(mbd::graph_from_graph6(line));
            }
        }
        reports = mbd::run_suite(theorem, mbd::default_pair_corpus(), singles, options);
    }

    print_reports(reports, common.format);
    return mbd::summarize(reports).fail == 0 ? kExitOk : kExitVerifyFail;
}

int run_play(const GraphInput& input, const CommonFlags& common, const std::string& human,
             const std::string& game) {
    mbd::Graph g = input.load();
    mbd::Player human_player = parse_player(human);
    mbd::Player engine = mbd::other(human_player);
    mbd::SolveConfig cfg;
    cfg.objective = engine == mbd::Player::Dominator ? mbd::Objective::MB : mbd::Objective::SMB;
    cfg.node_limit = common.node_limit;
    cfg.table_memory_mb = common.table_mb;

    mbd::GameState state;
    state.to_move = parse_player(game);
    int dominator_moves = 0;
    int staller_moves = 0;

    auto role = [](mbd::Player p) {
        return p == mbd::Player::Dominator ? "Dominator" : "Staller";
    };
    std::cout << "game on " << g.order() << " vertices; you are " << role(human_player)
              << ", engine is " << role(engine) << "\n";
    while (true) {
        mbd::TerminalStatus status = mbd::terminal_status(g, state);
        if (status != mbd::TerminalStatus::Ongoing) {
            bool dom_won = status == mbd::TerminalStatus::DominatorWin;
            int moves = dom_won ? dominator_moves : staller_moves;
            std::cout << (dom_won ? "Dominator" : "Staller") << " wins in " << moves
                      << " moves\n";
            return kExitOk;
        }
        int v;
        if (state.to_move == engine) {
            cfg.first_player = state.to_move;
            v = mbd::optimal_move(g, state, cfg);
            std::cout << "engine (" << role(engine) << ") plays " << g.label(v) << "\n";
        } else {
            std::optional<int> choice;
            while (!choice) {
                std::cout << "your move: " << std::flush;
                std::string token;
                if (!(std::cin >> token)) {
                    std::cout << "\nsession ended\n";
                    return kExitOk;
                }
                int cand = -1;
                for (int u : mbd::vs_to_vector(g.vertices()))
                    if (g.label(u) == token) cand = u;
                if (cand < 0) {
                    try {
                        std::size_t pos = 0;
                        int parsed = std::stoi(token, &pos);
                        if (pos == token.size()) cand = parsed;
                    } catch (const std::exception&) {
                    }
                }
                bool legal = cand >= 0 && cand < g.order() &&
                             !mbd::vs_contains(state.dominator_set | state.staller_set, cand);
                if (legal)
                    choice = cand;
                else
                    std::cout << "illegal move, try again\n";
            }
            v = *choice;
        }
        if (state.to_move == mbd::Player::Dominator)
            ++dominator_moves;
        else
            ++staller_moves;
        state = mbd::apply_move(g, state, v);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maker-Breaker domination game solver"};
    // --h is a graph option below, so help stays long-form only.
    app.set_help_flag("--help", "print usage");
    app.require_subcommand(1);

    GraphInput solve_input;
    CommonFlags solve_flags;
    std::string solve_game = "d", solve_objective = "mb", solve_predominated;
    CLI::App* solve_cmd = app.add_subcommand("solve", "compute a game value");
    solve_input.attach(solve_cmd);
    solve_flags.attach(solve_cmd);
    solve_cmd->add_option("--game", solve_game, "d or s: who moves first")
        ->check(CLI::IsMember({"d", "s"}));
    solve_cmd->add_option("--objective", solve_objective, "mb or smb: whose moves are counted")
        ->check(CLI::IsMember({"mb", "smb"}));
    solve_cmd->add_option("--predominated", solve_predominated,
                          "comma-separated vertices that need no domination");

    CommonFlags corona_flags;
    std::string corona_g, corona_h, corona_out;
    CLI::App* corona_cmd = app.add_subcommand("corona", "build a corona product");
    corona_cmd->set_help_flag("--help", "print usage");
    corona_flags.attach(corona_cmd);
    corona_cmd->add_option("--g", corona_g, "first factor")->required();
    corona_cmd->add_option("--h", corona_h, "second factor")->required();
    corona_cmd->add_option("--out", corona_out, "write graph6 here plus a .labels.json sidecar");

    CommonFlags batch_flags;
    CLI::App* batch_cmd = app.add_subcommand("batch", "CSV of invariants for graph6 lines on stdin");
    batch_flags.attach(batch_cmd);

    CommonFlags verify_flags;
    std::string verify_theorem, verify_g, verify_h, verify_t, verify_corpus = "default";
    bool verify_stretch = false;
    CLI::App* verify_cmd = app.add_subcommand("verify", "check published statements");
    verify_cmd->set_help_flag("--help", "print usage");
    verify_flags.attach(verify_cmd);
    verify_cmd->add_option("--theorem", verify_theorem, "statement selector or all")->required();
    verify_cmd->add_option("--g", verify_g, "first factor for a single instance");
    verify_cmd->add_option("--h", verify_h, "second factor for a single instance");
    verify_cmd->add_option("--t", verify_t, "tree factor, alias for --h");
    verify_cmd->add_option("--corpus", verify_corpus, "default, or a graph6 file");
    verify_cmd->add_flag("--stretch", verify_stretch, "raise limits for the 27-vertex instance");

    GraphInput play_input;
    CommonFlags play_flags;
    std::string play_as = "s", play_game = "d";
    CLI::App* play_cmd = app.add_subcommand("play", "play against the engine");
    play_input.attach(play_cmd);
    play_flags.attach(play_cmd);
    play_cmd->add_option("--as", play_as, "d or s: your side")->check(CLI::IsMember({"d", "s"}));
    play_cmd->add_option("--game", play_game, "d or s: who moves first")
        ->check(CLI::IsMember({"d", "s"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (solve_cmd->parsed()) {
            solve_flags.apply_env();
            return run_solve(solve_cmd, solve_input, solve_flags, solve_game, solve_objective,
                             solve_predominated);
        }
        if (corona_cmd->parsed()) return run_corona(corona_g, corona_h, corona_out);
        if (batch_cmd->parsed()) {
            batch_flags.apply_env();
            return run_batch(batch_flags);
        }
        if (verify_cmd->parsed()) {
            verify_flags.apply_env();
            return run_verify(verify_flags, verify_theorem, verify_g, verify_h, verify_t,
                              verify_corpus, verify_stretch);
        }
        if (play_cmd->parsed()) {
            play_flags.apply_env();
            return run_play(play_input, play_flags, play_as, play_game);
        }
    } catch (const mbd::NodeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const mbd::SizeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSize;
    } catch (const mbd::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const mbd::InvalidVertexError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const mbd::InvalidEdgeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const mbd::InvalidParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const mbd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return kExitOk;
}
