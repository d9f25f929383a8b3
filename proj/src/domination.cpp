#include "mbd/domination.hpp"

#include <algorithm>
#include <climits>

namespace mbd {

bool is_dominating_set(const Graph& g, VertexSet s) {
    if (s & ~g.vertices())
        throw InvalidVertexError("dominating set test over vertices outside the graph");
    VertexSet dominated = 0;
    vs_for_each(s, [&](int v) { dominated |= g.closed_neighborhood(v); });
    return dominated == g.vertices();
}

namespace {

struct GammaContext {
    const Graph* g;
    std::vector<VertexSet> closed;
    int best;
};

int max_cover(const GammaContext& c, VertexSet undominated) {
    int best = 0;
    for (int v = 0; v < c.g->order(); ++v)
        best = std::max(best, vs_size(c.closed[static_cast<std::size_t>(v)] & undominated));
    return best;
}

// Branches on the closed neighbourhood of the first undominated vertex.
void gamma_search(GammaContext& c, VertexSet undominated, int used) {
    if (!undominated) {
        c.best = std::min(c.best, used);
        return;
    }
    int cover = max_cover(c, undominated);
    int need = (vs_size(undominated) + cover - 1) / cover;
    if (used + need >= c.best) return;
    int v = vs_first(undominated);
    vs_for_each(c.closed[static_cast<std::size_t>(v)], [&](int u) {
        gamma_search(c, undominated & ~c.closed[static_cast<std::size_t>(u)], used + 1);
    });
}

GammaContext make_context(const Graph& g) {
    GammaContext c{&g, {}, 0};
    c.closed.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) c.closed.push_back(g.closed_neighborhood(v));
    // greedy upper bound
    VertexSet undominated = g.vertices();
    int used = 0;
    while (undominated) {
        int pick = 0, gain = -1;
        for (int v = 0; v < g.order(); ++v) {
            int cov = vs_size(c.closed[static_cast<std::size_t>(v)] & undominated);
            if (cov > gain) { gain = cov; pick = v; }
        }
        undominated &= ~c.closed[static_cast<std::size_t>(pick)];
        ++used;
    }
    c.best = used;
    return c;
}

}  // namespace

int domination_number(const Graph& g) {
    GammaContext c = make_context(g);
    gamma_search(c, g.vertices(), 0);
    return c.best;
}

namespace {

// Enumerates k-subsets in ascending lexicographic order, counting the
// dominating ones; stores up to max_sets of them.
void profile_search(const GammaContext& c, GammaSetProfile& p, std::size_t max_sets,
                    VertexSet chosen, VertexSet undominated, int next, int left) {
    if (left == 0) {
        if (undominated) return;
        ++p.count;
        if (p.sets.size() < max_sets)
            p.sets.push_back(chosen);
        else
            p.truncated = true;
        return;
    }
    int n = c.g->order();
    if (n - next < left) return;
    int cover = max_cover(c, undominated);
    if (cover > 0 && (vs_size(undominated) + cover - 1) / cover > left) return;
    for (int u = next; u <= n - left; ++u)
        profile_search(c, p, max_sets, chosen | vbit(u),
                       undominated & ~c.closed[static_cast<std::size_t>(u)], u + 1, left - 1);
}

}  // namespace

GammaSetProfile gamma_set_profile(const Graph& g, std::size_t max_sets) {
    GammaSetProfile p;
    GammaContext c = make_context(g);
    gamma_search(c, g.vertices(), 0);
    p.gamma = c.best;
    profile_search(c, p, max_sets, 0, g.vertices(), 0, p.gamma);
    return p;
}

int dominating_vertex_count(const Graph& g) {
    int count = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) ++count;
    return count;
}

bool is_strong_support(const Graph& g, int v) {
    int leaves = 0;
    vs_for_each(g.neighbors(v), [&](int u) {
        if (g.degree(u) == 1) ++leaves;
    });
    return leaves >= 2;
}

int strong_support_count(const Graph& g) {
    int count = 0;
    for (int v = 0; v < g.order(); ++v)
        if (is_strong_support(g, v)) ++count;
    return count;
}

int isolated_vertex_count(const Graph& g) {
    int count = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) ++count;
    return count;
}

namespace {

// Number of dominating sets of cardinality 2 through each vertex.
std::vector<int> pair_domination_counts(const Graph& g) {
    std::vector<int> counts(static_cast<std::size_t>(g.order()), 0);
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if ((g.closed_neighborhood(u) | g.closed_neighborhood(v)) == g.vertices()) {
                ++counts[static_cast<std::size_t>(u)];
                ++counts[static_cast<std::size_t>(v)];
            }
    return counts;
}

}  // namespace

SmallValuePredictions predict_small_values(const Graph& g) {
    SmallValuePredictions out;
    GraphStats st = graph_stats(g);
    int gamma = domination_number(g);

    if (gamma == 2) {
        // Some vertex lies in at least two minimum dominating sets.
        std::vector<int> counts = pair_domination_counts(g);
        out.mb_is_2 = std::any_of(counts.begin(), counts.end(), [](int c) { return c >= 2; });
    }
    if (gamma <= 2) {
        // At most one dominating vertex, and at least two vertices that each
        // lie in two different dominating sets of cardinality 2.
        std::vector<int> counts = pair_domination_counts(g);
        int rich = static_cast<int>(std::count_if(counts.begin(), counts.end(),
                                                  [](int c) { return c >= 2; }));
        out.mb_prime_is_2 = dominating_vertex_count(g) <= 1 && rich >= 2;
    }
    if (st.min_degree >= 1) {
        int strong = strong_support_count(g);
        out.smb_is_2 = strong >= 2;
        out.smb_prime_is_2 = strong >= 1;
        bool third = false;
        if (strong == 0 && g.order() >= 2) {
            for (int u = 0; u < g.order() && !third; ++u) {
                Graph rest = delete_vertex(g, u);
                int s = strong_support_count(rest);
                third = s >= 2 || (isolated_vertex_count(rest) == 1 && s >= 1);
            }
        }
        out.smb_prime_is_3 = third;
    }
    return out;
}

bool tree_has_perfect_matching(const Graph& t) {
    if (!is_tree(t)) throw NotATreeError("perfect matching test requires a tree");
    if (t.order() % 2 != 0) return false;
    VertexSet alive = t.vertices();
    while (alive) {
        int leaf = -1;
        bool isolated = false;
        vs_for_each(alive, [&](int v) {
            int deg = vs_size(t.neighbors(v) & alive);
            if (deg == 0) isolated = true;
            if (deg == 1 && leaf < 0) leaf = v;
        });
        // A leaf has a unique admissible partner; an isolated vertex has none.
        if (isolated) return false;
        alive &= ~(vbit(leaf) | vbit(vs_first(t.neighbors(leaf) & alive)));
    }
    return true;
}

}  // namespace mbd
