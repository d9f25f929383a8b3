#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "mbd/graph.hpp"

namespace mbd {

enum class Player { Dominator, Staller };
enum class Objective { MB, SMB };  // whose move total the game value measures
enum class Outcome { D, S, N };
enum class TerminalStatus { DominatorWin, StallerWin, Ongoing };

constexpr Player other(Player p) {
    return p == Player::Dominator ? Player::Staller : Player::Dominator;
}

// The player whose moves are counted and minimized under the objective.
constexpr Player counted_player(Objective o) {
    return o == Objective::MB ? Player::Dominator : Player::Staller;
}

std::string to_string(Player p);
std::string to_string(Objective o);
std::string to_string(Outcome o);

// Number of moves the counted player needs, or infinity when that player
// cannot win at all.  Infinity compares greater than every finite value.
class MoveCount {
public:
    constexpr MoveCount() : v_(0) {}

    static constexpr MoveCount infinity() { return MoveCount(kInf); }
    static MoveCount of(int moves);

    bool is_infinite() const { return v_ == kInf; }
    int value() const;  // throws on infinity

    std::string to_string() const;

    friend constexpr auto operator<=>(MoveCount, MoveCount) = default;

private:
    static constexpr int kInf = 1 << 20;
    constexpr explicit MoveCount(int v) : v_(v) {}
    int v_;
};

struct GameState {
    VertexSet dominator_set = 0;
    VertexSet staller_set = 0;
    VertexSet predominated = 0;  // counts as dominated from the start, still playable
    Player to_move = Player::Dominator;
};

struct SolveConfig {
    Objective objective = Objective::MB;
    Player first_player = Player::Dominator;
    VertexSet predominated = 0;
    // Lets the player whose moves are not counted skip a turn.  Never offered
    // to the counted player, so the game still terminates.
    bool allow_opponent_pass = false;
    std::uint64_t node_limit = 200'000'000;
    int table_memory_mb = 1024;
    // Refuses larger inputs up front; raise deliberately for big instances.
    int max_order = 26;
    // Restrict the opening move to automorphism orbit representatives
    // (applies only to graphs of order <= 10 with nothing claimed).
    bool root_symmetry = true;
};

struct SolveStats {
    std::uint64_t nodes = 0;
    std::uint64_t tt_hits = 0;
    double elapsed_ms = 0.0;
};

void validate_state(const Graph& g, const GameState& s);

TerminalStatus terminal_status(const Graph& g, const GameState& s);

// Claims vertex v for s.to_move and flips the turn.
GameState apply_move(const Graph& g, const GameState& s, int v);

MoveCount solve(const Graph& g, const SolveConfig& cfg = {});
MoveCount solve(const Graph& g, const SolveConfig& cfg, SolveStats& stats);
MoveCount solve_from(const Graph& g, const GameState& state, const SolveConfig& cfg,
                     SolveStats* stats = nullptr);
MoveCount solve_with_predomination(const Graph& g, VertexSet predominated,
                                   SolveConfig cfg = {});

// Best move for state.to_move under cfg.objective: the counted player
// minimizes its own eventual total, the other player maximizes it.  Every
// legal move is evaluated; ties go to the lowest vertex index.
int optimal_move(const Graph& g, const GameState& state, const SolveConfig& cfg);

struct MbdNumbers {
    MoveCount mb;         // Dominator's total, Dominator starts
    MoveCount mb_prime;   // Dominator's total, Staller starts
    MoveCount smb;        // Staller's total, Dominator starts
    MoveCount smb_prime;  // Staller's total, Staller starts
    Outcome outcome = Outcome::D;
};

// Four solves plus internal cross-checks: per game exactly one of the two
// counts is finite, and mb <= mb_prime, smb >= smb_prime.
MbdNumbers all_mbd_numbers(const Graph& g, SolveConfig cfg = {});

Outcome outcome_of(const Graph& g, SolveConfig cfg = {});

}  // namespace mbd
