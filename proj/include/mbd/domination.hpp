#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mbd/graph.hpp"

namespace mbd {

bool is_dominating_set(const Graph& g, VertexSet s);

int domination_number(const Graph& g);

struct GammaSetProfile {
    int gamma = 0;
    std::uint64_t count = 0;       // exact number of minimum dominating sets
    std::vector<VertexSet> sets;   // lexicographic by mask-as-subset order, capped
    bool truncated = false;
};

GammaSetProfile gamma_set_profile(const Graph& g, std::size_t max_sets = 10000);

// Vertices adjacent to every other vertex.
int dominating_vertex_count(const Graph& g);

// At least two leaf neighbours.
bool is_strong_support(const Graph& g, int v);
int strong_support_count(const Graph& g);

int isolated_vertex_count(const Graph& g);

// Structural predictions of small game values.  A prediction is absent when
// the hypothesis of the corresponding characterization fails on g:
//   mb_is_2        needs gamma(g) == 2
//   mb_prime_is_2  needs gamma(g) <= 2
//   smb_is_2, smb_prime_is_2, smb_prime_is_3  need min degree >= 1
struct SmallValuePredictions {
    std::optional<bool> mb_is_2;
    std::optional<bool> mb_prime_is_2;
    std::optional<bool> smb_is_2;
    std::optional<bool> smb_prime_is_2;
    std::optional<bool> smb_prime_is_3;
};

SmallValuePredictions predict_small_values(const Graph& g);

// Greedy leaf matching, exact on trees.  Throws NotATreeError otherwise.
bool tree_has_perfect_matching(const Graph& t);

}  // namespace mbd
