#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mbd/errors.hpp"
#include "mbd/vertex_set.hpp"

namespace mbd {

// Simple undirected graph on vertices 0..n-1, n <= 62.
// Immutable after construction; adjacency is one VertexSet row per vertex.
class Graph {
public:
    explicit Graph(int n,
                   const std::vector<std::pair<int, int>>& edges = {},
                   std::vector<std::string> labels = {});

    int order() const { return n_; }
    int edge_count() const { return m_; }

    VertexSet vertices() const { return vs_full(n_); }
    VertexSet neighbors(int v) const { return adj_[check_vertex(v)]; }
    VertexSet closed_neighborhood(int v) const { return adj_[check_vertex(v)] | vbit(v); }
    bool has_edge(int u, int v) const { return vs_contains(adj_[check_vertex(u)], check_vertex(v)); }
    int degree(int v) const { return vs_size(adj_[check_vertex(v)]); }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    // Falls back to the decimal index when no labels were attached.
    std::string label(int v) const;

    std::vector<std::pair<int, int>> edges() const;

    // Structural equality on the same vertex numbering; labels are ignored.
    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int check_vertex(int v) const;

    int n_;
    int m_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

struct GraphStats {
    int order = 0;
    int edges = 0;
    int min_degree = 0;
    int max_degree = 0;
    int components = 0;
    int isolated_vertices = 0;
    int leaves = 0;
    std::vector<int> degree_sequence;  // descending
};

GraphStats graph_stats(const Graph& g);

bool is_connected(const Graph& g);

// Connected and acyclic.
bool is_tree(const Graph& g);

// Subgraph induced by `keep`; vertices are renumbered by ascending old index.
Graph induced_subgraph(const Graph& g, VertexSet keep);

Graph delete_vertex(const Graph& g, int v);

// ---- corona product ----------------------------------------------------

// Maps corona-product vertices back to their origin.
// Base copy of g occupies indices 0..n(g)-1.  The h-copy attached to base
// vertex i occupies base_offset(i) .. base_offset(i)+n(h)-1, where h-vertex
// j sits at base_offset(i)+j.
struct CoronaLabeling {
    int g_order = 0;
    int h_order = 0;

    int base_vertex(int i) const;                 // product index of g-vertex i
    int copy_vertex(int i, int j) const;          // product index of h-vertex j in copy i
    bool is_base(int p) const;
    int owner(int p) const;                       // base vertex the product vertex belongs to/attaches to
    int copy_index(int p) const;                  // j within its copy; -1 for base vertices
};

struct CoronaResult {
    Graph product;
    CoronaLabeling labeling;
};

// g o h: one copy of h per vertex of g, joined completely to that vertex.
CoronaResult corona(const Graph& g, const Graph& h);

// ---- generators ----------------------------------------------------------

Graph path_graph(int k);
Graph cycle_graph(int k);   // k >= 3
Graph complete_graph(int k);
Graph star_graph(int k);    // K_{1,k}, order k+1
Graph empty_graph(int k);   // k isolated vertices
Graph double_star(int a, int b);  // adjacent centers with a resp. b leaves

// m cycles C4 glued at one shared vertex (vertex 0); order 3m+1.
Graph hm_gadget(int m);  // m >= 2

// Fixed 8-vertex test gadget: two pendant vertices on a hub that also lies
// on two overlapping cycles.  Registered as generator "fig1_H".
Graph fig1_h();

// Parses "path:5", "double_star:2:3", "fig1_H", "Hm:3", ...
Graph generate(std::string_view spec);

// ---- serialization --------------------------------------------------------

std::string to_graph6(const Graph& g);
Graph graph_from_graph6(std::string_view s);

// First line "n m", then one "u v" line per edge.
Graph graph_from_edge_list_text(std::string_view text);
std::string to_edge_list_text(const Graph& g);

// ---- isomorphism and enumeration ------------------------------------------

// Backtracking test, supported for order <= 10.
bool is_isomorphic(const Graph& a, const Graph& b);

// True when some automorphism maps u to v.  Order <= 10.
bool has_automorphism_mapping(const Graph& g, int u, int v);

// Lowest-index representative of each automorphism orbit.  Order <= 10.
VertexSet automorphism_orbit_representatives(const Graph& g);

// All graphs of the given order up to isomorphism, vertex-augmentation
// order (deterministic).  Practical for n <= 8.
const std::vector<Graph>& nonisomorphic_graphs(int n);

// All trees of the given order up to isomorphism.  Practical for n <= 10.
const std::vector<Graph>& nonisomorphic_trees(int n);

std::vector<Graph> nonisomorphic_connected_graphs(int n);

}  // namespace mbd
