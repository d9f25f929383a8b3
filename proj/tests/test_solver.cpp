#include <doctest.h>

#include <vector>

#include "mbd/domination.hpp"
#include "mbd/errors.hpp"
#include "mbd/graph.hpp"
#include "mbd/solver.hpp"
#include "oracle.hpp"

using namespace mbd;

namespace {

SolveConfig config(Objective obj, Player first) {
    SolveConfig cfg;
    cfg.objective = obj;
    cfg.first_player = first;
    cfg.table_memory_mb = 16;
    return cfg;
}

const std::vector<std::pair<Objective, Player>> kAllGames = {
    {Objective::MB, Player::Dominator},
    {Objective::MB, Player::Staller},
    {Objective::SMB, Player::Dominator},
    {Objective::SMB, Player::Staller},
};

}  // namespace

TEST_CASE("move count arithmetic") {
    CHECK(MoveCount::of(3).value() == 3);
    CHECK(MoveCount::of(0) < MoveCount::of(1));
    CHECK(MoveCount::of(62) < MoveCount::infinity());
    CHECK(MoveCount::infinity().is_infinite());
    CHECK(MoveCount::infinity() == MoveCount::infinity());
    CHECK(MoveCount::of(5).to_string() == "5");
    CHECK(MoveCount::infinity().to_string() == "inf");
    CHECK_THROWS(MoveCount::infinity().value());
    CHECK_THROWS_AS(MoveCount::of(-1), InvalidParameterError);
    CHECK_THROWS_AS(MoveCount::of(63), InvalidParameterError);
}

TEST_CASE("terminal status") {
    GameState s;
    s.dominator_set = vbit(0);
    CHECK(terminal_status(complete_graph(2), s) == TerminalStatus::DominatorWin);

    GameState t;
    t.staller_set = vbit(1);
    CHECK(terminal_status(empty_graph(2), t) == TerminalStatus::StallerWin);

    GameState u;
    u.dominator_set = vbit(0);
    u.staller_set = vbit(2);
    CHECK(terminal_status(cycle_graph(4), u) == TerminalStatus::Ongoing);

    // Predominated vertices cannot be isolation targets and need no cover.
    GameState v;
    v.staller_set = vbit(0);
    v.predominated = vbit(0);
    CHECK(terminal_status(complete_graph(1), v) == TerminalStatus::DominatorWin);
}

TEST_CASE("state validation and move application") {
    Graph p3 = path_graph(3);
    GameState s;
    s.dominator_set = vbit(0);
    s.staller_set = vbit(0);
    CHECK_THROWS_AS(validate_state(p3, s), InvalidParameterError);

    GameState t;
    t.dominator_set = vbit(5);
    CHECK_THROWS_AS(validate_state(p3, t), InvalidVertexError);

    GameState u;
    u = apply_move(p3, u, 1);
    CHECK(u.dominator_set == vbit(1));
    CHECK(u.to_move == Player::Staller);
    u = apply_move(p3, u, 0);
    CHECK(u.staller_set == vbit(0));
    CHECK(u.to_move == Player::Dominator);
    CHECK_THROWS_AS(apply_move(p3, u, 0), InvalidParameterError);
    CHECK_THROWS_AS(apply_move(p3, u, 9), InvalidVertexError);
}

TEST_CASE("staller win condition equals hitting every dominating set") {
    // Claiming all of N[v] for an undominated v is equivalent to claiming a
    // vertex of every dominating set.
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : nonisomorphic_graphs(n)) {
            auto dom_sets = oracle::all_dominating_sets(g);
            for (VertexSet s = 0; s <= g.vertices(); ++s) {
                bool hits_all = true;
                for (std::uint64_t d : dom_sets)
                    if ((d & s) == 0) {
                        hits_all = false;
                        break;
                    }
                bool isolates = false;
                for (int v = 0; v < g.order(); ++v)
                    if ((g.closed_neighborhood(v) & ~s) == 0) isolates = true;
                CHECK(hits_all == isolates);
                if (s == g.vertices()) break;
            }
        }
}

TEST_CASE("solver agrees with memoless minimax on every graph up to order 6") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : nonisomorphic_graphs(n))
            for (auto [obj, first] : kAllGames) {
                int expect = oracle::solve(g, obj, first);
                MoveCount got = solve(g, config(obj, first));
                CAPTURE(to_graph6(g));
                CAPTURE(to_string(obj));
                CAPTURE(to_string(first));
                CHECK(oracle::agrees(expect, got));
            }
}

TEST_CASE("published and hand-computed game values") {
    CHECK(solve(complete_graph(1), config(Objective::MB, Player::Dominator)) == MoveCount::of(1));
    CHECK(solve(complete_graph(1), config(Objective::MB, Player::Staller)).is_infinite());
    CHECK(solve(complete_graph(1), config(Objective::SMB, Player::Staller)) == MoveCount::of(1));

    CHECK(solve(fig1_h(), config(Objective::MB, Player::Dominator)) == MoveCount::of(3));
    CHECK(solve(hm_gadget(3), config(Objective::MB, Player::Dominator)) == MoveCount::of(4));
    CHECK(solve(hm_gadget(3), config(Objective::SMB, Player::Dominator)).is_infinite());

    CHECK(solve(path_graph(4), config(Objective::MB, Player::Dominator)) == MoveCount::of(2));
    CHECK(solve(path_graph(4), config(Objective::MB, Player::Staller)) == MoveCount::of(2));

    CHECK(solve(empty_graph(2), config(Objective::SMB, Player::Dominator)) == MoveCount::of(1));
    CHECK(solve(path_graph(3), config(Objective::SMB, Player::Staller)) == MoveCount::of(2));
}

TEST_CASE("all four numbers with consistency checks") {
    MbdNumbers k1 = all_mbd_numbers(complete_graph(1));
    CHECK(k1.mb == MoveCount::of(1));
    CHECK(k1.mb_prime.is_infinite());
    CHECK(k1.smb.is_infinite());
    CHECK(k1.smb_prime == MoveCount::of(1));
    CHECK(k1.outcome == Outcome::N);

    MbdNumbers e2 = all_mbd_numbers(empty_graph(2));
    CHECK(e2.mb.is_infinite());
    CHECK(e2.mb_prime.is_infinite());
    CHECK(e2.smb == MoveCount::of(1));
    CHECK(e2.smb_prime == MoveCount::of(1));
    CHECK(e2.outcome == Outcome::S);

    MbdNumbers p4 = all_mbd_numbers(path_graph(4));
    CHECK(p4.mb == MoveCount::of(2));
    CHECK(p4.mb_prime == MoveCount::of(2));
    CHECK(p4.smb.is_infinite());
    CHECK(p4.smb_prime.is_infinite());
    CHECK(p4.outcome == Outcome::D);

    CHECK(outcome_of(complete_graph(2)) == Outcome::D);
    CHECK(outcome_of(empty_graph(2)) == Outcome::S);
    CHECK(outcome_of(fig1_h()) == Outcome::N);
}

TEST_CASE("predominated games match the oracle") {
    for (const Graph& g : nonisomorphic_graphs(4))
        for (VertexSet a = 0; a <= g.vertices(); ++a) {
            for (auto [obj, first] : kAllGames) {
                SolveConfig cfg = config(obj, first);
                cfg.predominated = a;
                int expect = oracle::solve(g, obj, first, a);
                CAPTURE(to_graph6(g));
                CAPTURE(vs_to_string(a));
                CHECK(oracle::agrees(expect, solve(g, cfg)));
            }
            if (a == g.vertices()) break;
        }

    Graph p4 = path_graph(4);
    CHECK(solve_with_predomination(p4, vbit(0) | vbit(1),
                                   config(Objective::MB, Player::Dominator)) == MoveCount::of(1));
    CHECK(solve_with_predomination(p4, p4.vertices(),
                                   config(Objective::MB, Player::Dominator)) == MoveCount::of(0));
    CHECK(solve_with_predomination(p4, 0, config(Objective::MB, Player::Dominator)) ==
          solve(p4, config(Objective::MB, Player::Dominator)));
}

TEST_CASE("optimal move achieves the game value") {
    CHECK(optimal_move(fig1_h(), GameState{}, config(Objective::MB, Player::Dominator)) == 2);
    CHECK(optimal_move(complete_graph(2), GameState{}, config(Objective::MB, Player::Dominator)) == 0);
    GameState s_first;
    s_first.to_move = Player::Staller;
    CHECK(optimal_move(path_graph(3), s_first, config(Objective::SMB, Player::Staller)) == 1);

    GameState done;
    done.dominator_set = vbit(0);
    CHECK_THROWS_AS(optimal_move(complete_graph(2), done, config(Objective::MB, Player::Staller)),
                    NoLegalMoveError);

    // Playing the returned move preserves the minimax value.
    for (const Graph& g : nonisomorphic_graphs(4))
        for (auto [obj, first] : kAllGames) {
            SolveConfig cfg = config(obj, first);
            GameState root;
            root.to_move = first;
            if (terminal_status(g, root) != TerminalStatus::Ongoing) continue;
            MoveCount value = solve(g, cfg);
            int m = optimal_move(g, root, cfg);
            GameState child = apply_move(g, root, m);
            MoveCount after = solve_from(g, child, cfg, nullptr);
            bool counted = first == counted_player(obj);
            if (counted) {
                MoveCount shifted = after.is_infinite()
                                        ? MoveCount::infinity()
                                        : MoveCount::of(after.value() + 1);
                CHECK(value == shifted);
            } else {
                CHECK(value == after);
            }
        }
}

TEST_CASE("no draw and move ordering properties up to order 5") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : nonisomorphic_graphs(n)) {
            MoveCount mb = solve(g, config(Objective::MB, Player::Dominator));
            MoveCount mbp = solve(g, config(Objective::MB, Player::Staller));
            MoveCount smb = solve(g, config(Objective::SMB, Player::Dominator));
            MoveCount smbp = solve(g, config(Objective::SMB, Player::Staller));
            CAPTURE(to_graph6(g));
            CHECK(mb.is_infinite() != smb.is_infinite());
            CHECK(mbp.is_infinite() != smbp.is_infinite());
            CHECK(mb <= mbp);
            CHECK(smb >= smbp);
            if (!smb.is_infinite()) CHECK(smb.value() <= n / 2);
            if (!smbp.is_infinite()) CHECK(smbp.value() <= (n + 1) / 2);
            // Finite Dominator counts never exceed ceil(n/2) either.
            if (!mb.is_infinite()) CHECK(mb.value() <= (n + 1) / 2);
        }
}

TEST_CASE("passing never helps the non-counted player up to order 5") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : nonisomorphic_graphs(n))
            for (auto [obj, first] : kAllGames) {
                SolveConfig plain = config(obj, first);
                SolveConfig pass = plain;
                pass.allow_opponent_pass = true;
                CAPTURE(to_graph6(g));
                CHECK(solve(g, plain) == solve(g, pass));
            }
}

TEST_CASE("continuation monotonicity, exhaustive up to order 4") {
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : nonisomorphic_graphs(n))
            for (VertexSet a = 0; a <= g.vertices(); ++a) {
                VertexSet b = a;
                while (true) {
                    for (Player first : {Player::Dominator, Player::Staller}) {
                        SolveConfig cfg = config(Objective::MB, first);
                        cfg.predominated = a;
                        MoveCount va = solve(g, cfg);
                        cfg.predominated = b;
                        MoveCount vb = solve(g, cfg);
                        CHECK(va <= vb);
                    }
                    if (b == 0) break;
                    b = (b - 1) & a;
                }
                if (a == g.vertices()) break;
            }
}

TEST_CASE("results are independent of table size and symmetry reduction") {
    std::vector<Graph> probes = {path_graph(6), cycle_graph(5), star_graph(4), fig1_h(),
                                 double_star(2, 2)};
    for (const Graph& g : probes)
        for (auto [obj, first] : kAllGames) {
            SolveConfig tiny = config(obj, first);
            tiny.table_memory_mb = 1;
            SolveConfig roomy = config(obj, first);
            roomy.table_memory_mb = 64;
            SolveConfig plain = config(obj, first);
            plain.root_symmetry = false;
            MoveCount v = solve(g, roomy);
            CHECK(solve(g, tiny) == v);
            CHECK(solve(g, plain) == v);
        }
}

TEST_CASE("resource limits are reported as errors, not values") {
    SolveConfig starved = config(Objective::MB, Player::Dominator);
    starved.node_limit = 1;
    CHECK_THROWS_AS(solve(path_graph(6), starved), NodeLimitError);

    SolveConfig cfg = config(Objective::MB, Player::Dominator);
    CHECK_THROWS_AS(solve(path_graph(27), cfg), SizeLimitError);
    cfg.max_order = 30;
    CHECK(solve(empty_graph(27), cfg).is_infinite());
}

TEST_CASE("solve statistics are populated") {
    SolveStats stats;
    solve(path_graph(5), config(Objective::MB, Player::Dominator), stats);
    CHECK(stats.nodes > 0);
}

TEST_CASE("corona spot values against the oracle") {
    // The 3-vertex star K1 (.) 2K1: Staller moving first wins in 2, not 1.
    Graph star = corona(complete_graph(1), empty_graph(2)).product;
    CHECK(oracle::solve(star, Objective::SMB, Player::Staller) == 2);
    CHECK(solve(star, config(Objective::SMB, Player::Staller)) == MoveCount::of(2));

    Graph p4 = corona(path_graph(2), complete_graph(1)).product;
    CHECK(solve(p4, config(Objective::MB, Player::Dominator)) == MoveCount::of(2));

    // K2 (.) P3 reaches the lower end of the Dominator-start interval.
    Graph k2p3 = corona(complete_graph(2), path_graph(3)).product;
    CHECK(oracle::solve(k2p3, Objective::MB, Player::Dominator) == 2);
    CHECK(solve(k2p3, config(Objective::MB, Player::Dominator)) == MoveCount::of(2));
}
