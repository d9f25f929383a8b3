#include "mbd/solver.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <new>
#include <stdexcept>
#include <vector>

namespace mbd {

std::string to_string(Player p) {
    return p == Player::Dominator ? "dominator" : "staller";
}

std::string to_string(Objective o) { return o == Objective::MB ? "MB" : "SMB"; }

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::D: return "D";
        case Outcome::S: return "S";
        default: return "N";
    }
}

MoveCount MoveCount::of(int moves) {
    if (moves < 0 || moves > kMaxVertices)
        throw InvalidParameterError("move count " + std::to_string(moves) + " out of range");
    return MoveCount(moves);
}

int MoveCount::value() const {
    if (is_infinite())
        throw InvalidParameterError("infinite move count has no numeric value");
    return v_;
}

std::string MoveCount::to_string() const {
    return is_infinite() ? "inf" : std::to_string(v_);
}

void validate_state(const Graph& g, const GameState& s) {
    if ((s.dominator_set | s.staller_set | s.predominated) & ~g.vertices())
        throw InvalidVertexError("game state references vertices outside the graph");
    if (s.dominator_set & s.staller_set)
        throw InvalidParameterError("claimed vertex sets overlap");
}

namespace {

VertexSet dominated_region(const Graph& g, const GameState& s) {
    VertexSet dominated = s.predominated;
    vs_for_each(s.dominator_set, [&](int d) { dominated |= g.closed_neighborhood(d); });
    return dominated;
}

}  // namespace

TerminalStatus terminal_status(const Graph& g, const GameState& s) {
    validate_state(g, s);
    VertexSet undom = g.vertices() & ~dominated_region(g, s);
    if (!undom) return TerminalStatus::DominatorWin;
    bool lost = false;
    vs_for_each(undom, [&](int v) {
        if (!(g.closed_neighborhood(v) & ~s.staller_set)) lost = true;
    });
    return lost ? TerminalStatus::StallerWin : TerminalStatus::Ongoing;
}

GameState apply_move(const Graph& g, const GameState& s, int v) {
    validate_state(g, s);
    g.degree(v);  // range check
    if (vs_contains(s.dominator_set | s.staller_set, v))
        throw InvalidParameterError("vertex " + std::to_string(v) + " is already claimed");
    GameState next = s;
    (next.to_move == Player::Dominator ? next.dominator_set : next.staller_set) |= vbit(v);
    next.to_move = other(next.to_move);
    return next;
}

// ---- search ----------------------------------------------------------------

namespace {

constexpr int kInfVal = 1 << 20;

inline int plus_one(int v) { return v >= kInfVal ? kInfVal : v + 1; }

enum : std::uint8_t { kFlagExact = 1, kFlagLower = 2, kFlagUpper = 3 };

struct TtEntry {
    std::uint64_t key1 = 0;
    std::uint64_t key2 = 0;
    std::uint32_t gen = 0;
    std::uint8_t value6 = 0;  // 0..62 finite, 63 infinite
    std::uint8_t flag = 0;    // 0 marks an empty slot
};

struct TransTable {
    std::vector<TtEntry> slots;
    std::uint64_t mask = 0;
    std::uint32_t gen = 0;

    // Sizes to the largest power of two fitting the budget; backs off when
    // the allocation fails.  Bumping the generation invalidates old entries.
    void prepare(std::size_t bytes) {
        std::size_t want = std::size_t{1} << 12;
        while (want * 2 * sizeof(TtEntry) <= bytes && want < (std::size_t{1} << 28))
            want <<= 1;
        while (slots.size() != want) {
            try {
                slots.assign(want, TtEntry{});
            } catch (const std::bad_alloc&) {
                if (want <= (std::size_t{1} << 12)) throw;
                want >>= 1;
                slots.clear();
                slots.shrink_to_fit();
            }
        }
        mask = want - 1;
        if (++gen == 0) {
            std::fill(slots.begin(), slots.end(), TtEntry{});
            gen = 1;
        }
    }
};

thread_local TransTable tls_table;

inline std::uint64_t hash_mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a + 0x9E3779B97F4A7C15ULL + (b << 1 | b >> 63) * 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

class Searcher {
public:
    Searcher(const Graph& g, const SolveConfig& cfg, VertexSet predominated)
        : cfg_(cfg),
          n_(g.order()),
          all_(g.vertices()),
          counted_(counted_player(cfg.objective)),
          mb_(cfg.objective == Objective::MB),
          predominated_(predominated),
          table_(tls_table) {
        for (int v = 0; v < n_; ++v) closed_[static_cast<std::size_t>(v)] = g.closed_neighborhood(v);
        table_.prepare(static_cast<std::size_t>(std::max(cfg.table_memory_mb, 1)) << 20);
        if (cfg.root_symmetry && !predominated && n_ <= 10)
            root_reps_ = automorphism_orbit_representatives(g);
    }

    int search(VertexSet dset, VertexSet sset, VertexSet undom, Player to_move, int alpha,
               int beta);

    SolveStats stats;

private:
    const SolveConfig& cfg_;
    int n_;
    VertexSet all_;
    Player counted_;
    bool mb_;
    VertexSet predominated_;
    VertexSet root_reps_ = ~VertexSet{0};
    std::array<VertexSet, kMaxVertices> closed_{};
    TransTable& table_;
};

int Searcher::search(VertexSet dset, VertexSet sset, VertexSet undom, Player to_move,
                     int alpha, int beta) {
    if (!undom) return mb_ ? 0 : kInfVal;

    if (++stats.nodes > cfg_.node_limit)
        throw NodeLimitError("search exceeded the node limit of " +
                             std::to_string(cfg_.node_limit));

    // One scan of the undominated region: checks whether Staller already
    // isolated a vertex, collects vertices she can isolate with one more
    // claim (threats), and finds her cheapest isolation target.
    VertexSet threats = 0;
    int min_free = n_ + 1;
    int target = -1;
    {
        VertexSet rest = undom;
        while (rest) {
            int v = vs_first(rest);
            rest &= rest - 1;
            int free = vs_size(closed_[static_cast<std::size_t>(v)] & ~sset);
            if (free == 0) return mb_ ? kInfVal : 0;
            if (free == 1) threats |= vbit(v);
            if (free < min_free) {
                min_free = free;
                target = v;
            }
        }
    }

    const std::uint64_t k1 = dset | (to_move == Player::Staller ? VertexSet{1} << 62 : 0);
    const std::uint64_t k2 = sset;
    TtEntry& slot = table_.slots[hash_mix(k1, k2) & table_.mask];
    if (slot.flag && slot.gen == table_.gen && slot.key1 == k1 && slot.key2 == k2) {
        int v = slot.value6 == 63 ? kInfVal : slot.value6;
        if (slot.flag == kFlagExact || (slot.flag == kFlagLower && v >= beta) ||
            (slot.flag == kFlagUpper && v <= alpha)) {
            ++stats.tt_hits;
            return v;
        }
    }

    VertexSet unclaimed = all_ & ~(dset | sset);

    // Admissible bound on the counted player's remaining moves.
    int lower;
    if (mb_) {
        int best_cover = 1;
        VertexSet rest = unclaimed;
        while (rest) {
            int u = vs_first(rest);
            rest &= rest - 1;
            best_cover = std::max(best_cover, vs_size(closed_[static_cast<std::size_t>(u)] & undom));
        }
        lower = (vs_size(undom) + best_cover - 1) / best_cover;
    } else {
        lower = min_free;
    }
    if (lower >= beta) return lower;

    // ---- candidate moves ----
    std::array<int, kMaxVertices> cand{};
    int cand_count = 0;

    if (to_move == Player::Dominator) {
        VertexSet pool = unclaimed;
        {
            VertexSet rest = unclaimed;
            while (rest) {
                int u = vs_first(rest);
                rest &= rest - 1;
                if (!(undom & ~closed_[static_cast<std::size_t>(u)])) return mb_ ? 1 : kInfVal;
            }
        }
        if (threats) {
            // Only moves dominating every threatened vertex avoid the loss.
            VertexSet killers = 0;
            VertexSet rest = unclaimed;
            while (rest) {
                int u = vs_first(rest);
                rest &= rest - 1;
                if (!(threats & ~closed_[static_cast<std::size_t>(u)])) killers |= vbit(u);
            }
            if (!killers) return mb_ ? kInfVal : 1;
            pool &= killers;
        }
        if (!(dset | sset) && !predominated_) pool &= root_reps_;

        std::array<VertexSet, kMaxVertices> cov{};
        std::array<int, kMaxVertices> us{};
        int m = 0;
        vs_for_each(pool, [&](int u) {
            us[static_cast<std::size_t>(m)] = u;
            cov[static_cast<std::size_t>(m)] = closed_[static_cast<std::size_t>(u)] & undom;
            ++m;
        });
        if (mb_) {
            // Drop u when some other candidate w covers a strict superset of
            // what u covers; on equal coverage keep the lowest index.  The
            // rule ignores drop marks, so chains resolve consistently.
            for (int i = 0; i < m; ++i) {
                if (us[static_cast<std::size_t>(i)] < 0) continue;
                for (int j = 0; j < m; ++j) {
                    if (i == j) continue;
                    VertexSet ci = cov[static_cast<std::size_t>(i)];
                    VertexSet cj = cov[static_cast<std::size_t>(j)];
                    if ((ci & ~cj) == 0 && (ci != cj || j < i)) {
                        us[static_cast<std::size_t>(i)] = -1;
                        break;
                    }
                }
            }
        }
        for (int i = 0; i < m; ++i)
            if (us[static_cast<std::size_t>(i)] >= 0) cand[static_cast<std::size_t>(cand_count++)] = i;
        std::sort(cand.begin(), cand.begin() + cand_count, [&](int a, int b) {
            int ca = vs_size(cov[static_cast<std::size_t>(a)]);
            int cb = vs_size(cov[static_cast<std::size_t>(b)]);
            if (ca != cb) return ca > cb;
            return us[static_cast<std::size_t>(a)] < us[static_cast<std::size_t>(b)];
        });
        for (int i = 0; i < cand_count; ++i)
            cand[static_cast<std::size_t>(i)] = us[static_cast<std::size_t>(cand[static_cast<std::size_t>(i)])];
    } else {
        if (threats) return mb_ ? kInfVal : 1;
        VertexSet pool = unclaimed;
        if (!(dset | sset) && !predominated_) pool &= root_reps_;
        // Claims near her cheapest isolation target first.
        VertexSet primary = closed_[static_cast<std::size_t>(target)] & pool;
        vs_for_each(primary, [&](int u) { cand[static_cast<std::size_t>(cand_count++)] = u; });
        vs_for_each(pool & ~primary, [&](int u) { cand[static_cast<std::size_t>(cand_count++)] = u; });
    }

    // ---- recurse ----
    const int alpha0 = alpha, beta0 = beta;
    int best;
    if (to_move == counted_) {
        best = kInfVal;
        for (int i = 0; i < cand_count; ++i) {
            int u = cand[static_cast<std::size_t>(i)];
            int child;
            if (to_move == Player::Dominator)
                child = search(dset | vbit(u), sset, undom & ~closed_[static_cast<std::size_t>(u)],
                               other(to_move), alpha - 1, beta - 1);
            else
                child = search(dset, sset | vbit(u), undom, other(to_move), alpha - 1, beta - 1);
            int v = plus_one(child);
            if (v < best) {
                best = v;
                if (best < beta) beta = best;
                if (best <= alpha) break;
            }
        }
    } else {
        best = 0;
        bool cut = false;
        for (int i = 0; i < cand_count && !cut; ++i) {
            int u = cand[static_cast<std::size_t>(i)];
            int v;
            if (to_move == Player::Dominator)
                v = search(dset | vbit(u), sset, undom & ~closed_[static_cast<std::size_t>(u)],
                           other(to_move), alpha, beta);
            else
                v = search(dset, sset | vbit(u), undom, other(to_move), alpha, beta);
            if (v > best) {
                best = v;
                if (best > alpha) alpha = best;
                if (best >= beta) cut = true;
            }
        }
        if (!cut && cfg_.allow_opponent_pass) {
            int v = search(dset, sset, undom, other(to_move), alpha, beta);
            best = std::max(best, v);
        }
    }

    slot.key1 = k1;
    slot.key2 = k2;
    slot.gen = table_.gen;
    slot.value6 = static_cast<std::uint8_t>(best >= kInfVal ? 63 : best);
    slot.flag = best <= alpha0 ? kFlagUpper : best >= beta0 ? kFlagLower : kFlagExact;
    return best;
}

int checked_order(const Graph& g, const SolveConfig& cfg) {
    if (g.order() > cfg.max_order)
        throw SizeLimitError("graph order " + std::to_string(g.order()) +
                             " exceeds the configured solve limit of " +
                             std::to_string(cfg.max_order));
    return g.order();
}

MoveCount to_move_count(int v) {
    return v >= kInfVal ? MoveCount::infinity() : MoveCount::of(v);
}

}  // namespace

MoveCount solve_from(const Graph& g, const GameState& state, const SolveConfig& cfg,
                     SolveStats* stats) {
    validate_state(g, state);
    checked_order(g, cfg);
    auto t0 = std::chrono::steady_clock::now();
    Searcher searcher(g, cfg, state.predominated);
    VertexSet undom = g.vertices() & ~dominated_region(g, state);
    int value = searcher.search(state.dominator_set, state.staller_set, undom, state.to_move,
                                -1, kInfVal + 1);
    if (stats) {
        *stats = searcher.stats;
        stats->elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
    }
    return to_move_count(value);
}

MoveCount solve(const Graph& g, const SolveConfig& cfg) {
    GameState start{0, 0, cfg.predominated, cfg.first_player};
    return solve_from(g, start, cfg);
}

MoveCount solve(const Graph& g, const SolveConfig& cfg, SolveStats& stats) {
    GameState start{0, 0, cfg.predominated, cfg.first_player};
    return solve_from(g, start, cfg, &stats);
}

MoveCount solve_with_predomination(const Graph& g, VertexSet predominated, SolveConfig cfg) {
    cfg.predominated = predominated;
    return solve(g, cfg);
}

int optimal_move(const Graph& g, const GameState& state, const SolveConfig& cfg) {
    validate_state(g, state);
    checked_order(g, cfg);
    if (terminal_status(g, state) != TerminalStatus::Ongoing)
        throw NoLegalMoveError("the game is already decided");
    VertexSet unclaimed = g.vertices() & ~(state.dominator_set | state.staller_set);
    if (!unclaimed) throw NoLegalMoveError("no unclaimed vertices left");

    Searcher searcher(g, cfg, state.predominated);
    VertexSet undom = g.vertices() & ~dominated_region(g, state);
    bool minimizing = state.to_move == counted_player(cfg.objective);
    int best_vertex = -1;
    int best_value = 0;
    vs_for_each(unclaimed, [&](int u) {
        int child;
        if (state.to_move == Player::Dominator)
            child = searcher.search(state.dominator_set | vbit(u), state.staller_set,
                                    undom & ~g.closed_neighborhood(u), other(state.to_move),
                                    -1, kInfVal + 1);
        else
            child = searcher.search(state.dominator_set, state.staller_set | vbit(u), undom,
                                    other(state.to_move), -1, kInfVal + 1);
        int value = minimizing ? plus_one(child) : child;
        if (best_vertex < 0 || (minimizing ? value < best_value : value > best_value)) {
            best_vertex = u;
            best_value = value;
        }
    });
    return best_vertex;
}

MbdNumbers all_mbd_numbers(const Graph& g, SolveConfig cfg) {
    auto run = [&](Objective o, Player first) {
        SolveConfig c = cfg;
        c.objective = o;
        c.first_player = first;
        return solve(g, c);
    };
    MbdNumbers r;
    r.mb = run(Objective::MB, Player::Dominator);
    r.mb_prime = run(Objective::MB, Player::Staller);
    r.smb = run(Objective::SMB, Player::Dominator);
    r.smb_prime = run(Objective::SMB, Player::Staller);

    if (r.mb.is_infinite() == r.smb.is_infinite())
        throw std::logic_error("draw detected in the game with Dominator first");
    if (r.mb_prime.is_infinite() == r.smb_prime.is_infinite())
        throw std::logic_error("draw detected in the game with Staller first");
    if (r.mb > r.mb_prime)
        throw std::logic_error("moving first hurt Dominator");
    if (r.smb < r.smb_prime)
        throw std::logic_error("moving first hurt Staller");

    bool d_first = !r.mb.is_infinite();
    bool d_second = !r.mb_prime.is_infinite();
    if (d_first && d_second) r.outcome = Outcome::D;
    else if (!d_first && !d_second) r.outcome = Outcome::S;
    else if (d_first) r.outcome = Outcome::N;
    else throw std::logic_error("second player won both games");
    return r;
}

Outcome outcome_of(const Graph& g, SolveConfig cfg) {
    auto run = [&](Player first) {
        SolveConfig c = cfg;
        c.objective = Objective::MB;
        c.first_player = first;
        return solve(g, c);
    };
    bool d_first = !run(Player::Dominator).is_infinite();
    bool d_second = !run(Player::Staller).is_infinite();
    if (d_first && d_second) return Outcome::D;
    if (!d_first && !d_second) return Outcome::S;
    if (d_first) return Outcome::N;
    throw std::logic_error("second player won both games");
}

}  // namespace mbd
