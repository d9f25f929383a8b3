#include "mbd/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace mbd {

// ---- Graph -----------------------------------------------------------------

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges,
             std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
    if (n < 1) throw InvalidParameterError("graph order must be at least 1");
    if (n > kMaxVertices)
        throw SizeLimitError("graph order " + std::to_string(n) + " exceeds limit " +
                             std::to_string(kMaxVertices));
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
        throw InvalidParameterError("label count does not match graph order");
    adj_.assign(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InvalidEdgeError("loop at vertex " + std::to_string(u));
        if (vs_contains(adj_[u], v))
            throw InvalidEdgeError("duplicate edge " + std::to_string(u) + " " +
                                   std::to_string(v));
        adj_[u] |= vbit(v);
        adj_[v] |= vbit(u);
        ++m_;
    }
}

int Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw InvalidVertexError("vertex " + std::to_string(v) + " out of range [0," +
                                 std::to_string(n_ - 1) + "]");
    return v;
}

std::string Graph::label(int v) const {
    check_vertex(v);
    if (labels_.empty()) return std::to_string(v);
    return labels_[static_cast<std::size_t>(v)];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        vs_for_each(adj_[u] & ~vs_full(u + 1), [&](int v) { out.emplace_back(u, v); });
    return out;
}

// ---- structure -------------------------------------------------------------

namespace {

VertexSet component_of(const Graph& g, int start) {
    VertexSet comp = vbit(start);
    VertexSet frontier = comp;
    while (frontier) {
        VertexSet next = 0;
        vs_for_each(frontier, [&](int v) { next |= g.neighbors(v); });
        frontier = next & ~comp;
        comp |= frontier;
    }
    return comp;
}

}  // namespace

GraphStats graph_stats(const Graph& g) {
    GraphStats s;
    s.order = g.order();
    s.edges = g.edge_count();
    s.degree_sequence.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) s.degree_sequence.push_back(g.degree(v));
    std::sort(s.degree_sequence.rbegin(), s.degree_sequence.rend());
    s.max_degree = s.degree_sequence.front();
    s.min_degree = s.degree_sequence.back();
    for (int d : s.degree_sequence) {
        if (d == 0) ++s.isolated_vertices;
        if (d == 1) ++s.leaves;
    }
    VertexSet seen = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (vs_contains(seen, v)) continue;
        seen |= component_of(g, v);
        ++s.components;
    }
    return s;
}

bool is_connected(const Graph& g) {
    return component_of(g, 0) == g.vertices();
}

bool is_tree(const Graph& g) {
    return g.edge_count() == g.order() - 1 && is_connected(g);
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
    if (keep & ~g.vertices())
        throw InvalidVertexError("induced subgraph over vertices outside the graph");
    if (!keep) throw InvalidParameterError("induced subgraph needs at least one vertex");
    std::vector<int> old_of = vs_to_vector(keep);
    std::vector<int> new_of(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < old_of.size(); ++i) new_of[static_cast<std::size_t>(old_of[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (vs_contains(keep, u) && vs_contains(keep, v))
            edges.emplace_back(new_of[static_cast<std::size_t>(u)], new_of[static_cast<std::size_t>(v)]);
    std::vector<std::string> labels;
    if (g.has_labels())
        for (int v : old_of) labels.push_back(g.label(v));
    return Graph(static_cast<int>(old_of.size()), edges, std::move(labels));
}

Graph delete_vertex(const Graph& g, int v) {
    g.degree(v);  // range check
    if (g.order() == 1) throw InvalidParameterError("cannot delete the only vertex");
    return induced_subgraph(g, g.vertices() & ~vbit(v));
}

// ---- corona ----------------------------------------------------------------

int CoronaLabeling::base_vertex(int i) const {
    if (i < 0 || i >= g_order) throw InvalidVertexError("base vertex out of range");
    return i;
}

int CoronaLabeling::copy_vertex(int i, int j) const {
    base_vertex(i);
    if (j < 0 || j >= h_order) throw InvalidVertexError("copy vertex out of range");
    return g_order + i * h_order + j;
}

bool CoronaLabeling::is_base(int p) const {
    if (p < 0 || p >= g_order + g_order * h_order)
        throw InvalidVertexError("product vertex out of range");
    return p < g_order;
}

int CoronaLabeling::owner(int p) const {
    if (is_base(p)) return p;
    return (p - g_order) / h_order;
}

int CoronaLabeling::copy_index(int p) const {
    if (is_base(p)) return -1;
    return (p - g_order) % h_order;
}

CoronaResult corona(const Graph& g, const Graph& h) {
    int ng = g.order(), nh = h.order();
    long long total = static_cast<long long>(ng) + static_cast<long long>(ng) * nh;
    if (total > kMaxVertices)
        throw SizeLimitError("corona product order " + std::to_string(total) +
                             " exceeds limit " + std::to_string(kMaxVertices));
    int n = static_cast<int>(total);
    std::vector<std::pair<int, int>> edges = g.edges();
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    CoronaLabeling lab{ng, nh};
    for (int i = 0; i < ng; ++i) {
        labels[static_cast<std::size_t>(i)] = "g" + g.label(i);
        for (int j = 0; j < nh; ++j) {
            int p = lab.copy_vertex(i, j);
            labels[static_cast<std::size_t>(p)] = labels[static_cast<std::size_t>(i)] + ":h" + h.label(j);
            edges.emplace_back(i, p);
        }
        for (auto [u, v] : h.edges())
            edges.emplace_back(lab.copy_vertex(i, u), lab.copy_vertex(i, v));
    }
    return CoronaResult{Graph(n, edges, std::move(labels)), lab};
}

// ---- generators ------------------------------------------------------------

namespace {

void require_positive(int k, const char* what) {
    if (k < 1) throw InvalidParameterError(std::string(what) + " must be positive");
}

}  // namespace

Graph path_graph(int k) {
    require_positive(k, "path order");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return Graph(k, e);
}

Graph cycle_graph(int k) {
    if (k < 3) throw InvalidParameterError("cycle order must be at least 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(k - 1, 0);
    return Graph(k, e);
}

Graph complete_graph(int k) {
    require_positive(k, "complete graph order");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
    return Graph(k, e);
}

Graph star_graph(int k) {
    require_positive(k, "star leaf count");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
    return Graph(k + 1, e);
}

Graph empty_graph(int k) {
    require_positive(k, "empty graph order");
    return Graph(k);
}

Graph double_star(int a, int b) {
    require_positive(a, "double star leaf count");
    require_positive(b, "double star leaf count");
    std::vector<std::pair<int, int>> e{{0, 1}};
    for (int i = 0; i < a; ++i) e.emplace_back(0, 2 + i);
    for (int i = 0; i < b; ++i) e.emplace_back(1, 2 + a + i);
    return Graph(2 + a + b, e);
}

Graph hm_gadget(int m) {
    if (m < 2) throw InvalidParameterError("gadget parameter must be at least 2");
    // Cycle i uses hub 0 and vertices 3i+1, 3i+2, 3i+3, with 3i+2 opposite the hub.
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < m; ++i) {
        int a = 3 * i + 1, b = 3 * i + 2, c = 3 * i + 3;
        e.emplace_back(0, a);
        e.emplace_back(a, b);
        e.emplace_back(b, c);
        e.emplace_back(c, 0);
    }
    return Graph(3 * m + 1, e);
}

Graph fig1_h() {
    return Graph(8, {{0, 2}, {1, 2}, {2, 3}, {2, 4}, {2, 7}, {3, 5}, {5, 7}, {6, 7}, {4, 6}},
                 {"h1", "h2", "h3", "h4", "h5", "h6", "h7", "h8"});
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.emplace_back(s.substr(start));
            return parts;
        }
        parts.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

int parse_int_strict(const std::string& s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("bad integer '" + s + "' in generator spec");
    return value;
}

}  // namespace

Graph generate(std::string_view spec) {
    auto parts = split(spec, ':');
    const std::string& kind = parts[0];
    auto arity = [&](std::size_t k) {
        if (parts.size() != k + 1)
            throw ParseError("generator '" + kind + "' expects " + std::to_string(k) +
                             " parameter(s)");
    };
    auto arg = [&](std::size_t i) { return parse_int_strict(parts[i]); };
    if (kind == "path") { arity(1); return path_graph(arg(1)); }
    if (kind == "cycle") { arity(1); return cycle_graph(arg(1)); }
    if (kind == "complete") { arity(1); return complete_graph(arg(1)); }
    if (kind == "star") { arity(1); return star_graph(arg(1)); }
    if (kind == "empty") { arity(1); return empty_graph(arg(1)); }
    if (kind == "double_star") { arity(2); return double_star(arg(1), arg(2)); }
    if (kind == "Hm") { arity(1); return hm_gadget(arg(1)); }
    if (kind == "fig1_H") { arity(0); return fig1_h(); }
    throw ParseError("unknown generator '" + kind + "'");
}

// ---- graph6 ----------------------------------------------------------------

std::string to_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int bitpos = 0;
    char cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            cur = static_cast<char>(cur << 1 | (g.has_edge(i, j) ? 1 : 0));
            if (++bitpos == 6) {
                out.push_back(static_cast<char>(63 + cur));
                bitpos = 0;
                cur = 0;
            }
        }
    }
    if (bitpos) out.push_back(static_cast<char>(63 + (cur << (6 - bitpos))));
    return out;
}

Graph graph_from_graph6(std::string_view s) {
    if (s.empty()) throw ParseError("empty graph6 string");
    int n = static_cast<int>(static_cast<unsigned char>(s[0])) - 63;
    if (n < 1 || n > kMaxVertices)
        throw ParseError("graph6 order byte out of supported range");
    int nbits = n * (n - 1) / 2;
    std::size_t expect = 1 + static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() != expect)
        throw ParseError("graph6 string has length " + std::to_string(s.size()) +
                         ", expected " + std::to_string(expect));
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    int i = 0, j = 1;
    for (std::size_t k = 1; k < s.size(); ++k) {
        int c = static_cast<int>(static_cast<unsigned char>(s[k])) - 63;
        if (c < 0 || c > 63) throw ParseError("graph6 byte out of range");
        for (int b = 5; b >= 0; --b, ++bit) {
            bool set = (c >> b) & 1;
            if (bit >= nbits) {
                if (set) throw ParseError("graph6 padding bits must be zero");
                continue;
            }
            if (set) edges.emplace_back(i, j);
            if (++i == j) { i = 0; ++j; }
        }
    }
    return Graph(n, edges);
}

// ---- edge list text ----------------------------------------------------------

Graph graph_from_edge_list_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (line.empty()) continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw ParseError("empty edge list");
    auto parse_pair = [](const std::string& l, const char* what) {
        std::istringstream ls(l);
        long long a = 0, b = 0;
        std::string extra;
        if (!(ls >> a >> b) || (ls >> extra))
            throw ParseError(std::string("bad ") + what + " line '" + l + "'");
        return std::pair<long long, long long>{a, b};
    };
    auto [n, m] = parse_pair(lines[0], "header");
    if (n < 1 || n > kMaxVertices) throw ParseError("edge list order out of range");
    if (m < 0) throw ParseError("negative edge count");
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw ParseError("edge list declares " + std::to_string(m) + " edges but has " +
                         std::to_string(lines.size() - 1) + " edge lines");
    std::vector<std::pair<int, int>> edges;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        auto [u, v] = parse_pair(lines[k], "edge");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge endpoint out of range in '" + lines[k] + "'");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list_text(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// ---- isomorphism -------------------------------------------------------------

namespace {

constexpr int kIsoLimit = 10;

// Extends a partial vertex map a->b position by position; order lists a's
// vertices, placed[t] is the image of order[t].
bool extend_map(const Graph& a, const Graph& b, const std::vector<int>& order,
                std::vector<int>& placed, VertexSet used, std::size_t pos) {
    if (pos == order.size()) return true;
    int u = order[pos];
    for (int w = 0; w < b.order(); ++w) {
        if (vs_contains(used, w) || b.degree(w) != a.degree(u)) continue;
        bool ok = true;
        for (std::size_t t = 0; t < pos && ok; ++t)
            ok = a.has_edge(u, order[t]) == b.has_edge(w, placed[t]);
        if (!ok) continue;
        placed[pos] = w;
        if (extend_map(a, b, order, placed, used | vbit(w), pos + 1)) return true;
    }
    return false;
}

std::vector<int> degree_descending_order(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return g.degree(x) > g.degree(y); });
    return order;
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() > kIsoLimit || b.order() > kIsoLimit)
        throw SizeLimitError("isomorphism test supported up to order 10");
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    if (graph_stats(a).degree_sequence != graph_stats(b).degree_sequence) return false;
    std::vector<int> order = degree_descending_order(a);
    std::vector<int> placed(order.size(), -1);
    return extend_map(a, b, order, placed, 0, 0);
}

bool has_automorphism_mapping(const Graph& g, int u, int v) {
    if (g.order() > kIsoLimit)
        throw SizeLimitError("automorphism search supported up to order 10");
    g.degree(u);  // range checks
    g.degree(v);
    if (u == v) return true;
    if (g.degree(u) != g.degree(v)) return false;
    std::vector<int> order{u};
    for (int w : degree_descending_order(g))
        if (w != u) order.push_back(w);
    std::vector<int> placed(order.size(), -1);
    placed[0] = v;
    // Fix u -> v, then try to complete the map.
    return extend_map(g, g, order, placed, vbit(v), 1);
}

VertexSet automorphism_orbit_representatives(const Graph& g) {
    VertexSet reps = 0, covered = 0;
    for (int u = 0; u < g.order(); ++u) {
        if (vs_contains(covered, u)) continue;
        reps |= vbit(u);
        covered |= vbit(u);
        for (int v = u + 1; v < g.order(); ++v)
            if (!vs_contains(covered, v) && has_automorphism_mapping(g, u, v))
                covered |= vbit(v);
    }
    return reps;
}

// ---- enumeration -------------------------------------------------------------

namespace {

std::uint64_t upper_triangle_key(const Graph& g, const std::vector<int>& perm) {
    std::uint64_t key = 0;
    int t = 0;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i, ++t)
            if (g.has_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
                key |= std::uint64_t{1} << t;
    return key;
}

// Minimum upper-triangle code over all vertex orders that sort degrees
// descending.  A complete isomorphism invariant for order <= 11.
std::uint64_t canonical_key(const Graph& g) {
    int n = g.order();
    if (n > 11) throw SizeLimitError("canonical form supported up to order 11");
    std::vector<int> perm = degree_descending_order(g);
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    std::size_t lo = 0;
    for (std::size_t i = 1; i <= perm.size(); ++i) {
        if (i == perm.size() || g.degree(perm[i]) != g.degree(perm[lo])) {
            blocks.emplace_back(lo, i);
            lo = i;
        }
    }
    for (auto [b, e] : blocks) std::sort(perm.begin() + static_cast<long>(b), perm.begin() + static_cast<long>(e));
    std::uint64_t best = ~std::uint64_t{0};
    while (true) {
        best = std::min(best, upper_triangle_key(g, perm));
        std::size_t b = 0;
        while (b < blocks.size() &&
               !std::next_permutation(perm.begin() + static_cast<long>(blocks[b].first),
                                      perm.begin() + static_cast<long>(blocks[b].second)))
            ++b;
        if (b == blocks.size()) break;
    }
    return best;
}

std::vector<Graph> augment_all(const std::vector<Graph>& smaller) {
    std::vector<Graph> out;
    std::unordered_set<std::uint64_t> seen;
    for (const Graph& g : smaller) {
        int n = g.order() + 1;
        std::vector<std::pair<int, int>> base_edges = g.edges();
        for (VertexSet nbrs = 0; nbrs < vbit(n - 1); ++nbrs) {
            std::vector<std::pair<int, int>> edges = base_edges;
            vs_for_each(nbrs, [&](int v) { edges.emplace_back(v, n - 1); });
            Graph cand(n, edges);
            if (seen.insert(canonical_key(cand)).second) out.push_back(std::move(cand));
        }
    }
    return out;
}

std::vector<Graph> augment_trees(const std::vector<Graph>& smaller) {
    std::vector<Graph> out;
    std::unordered_set<std::uint64_t> seen;
    for (const Graph& t : smaller) {
        int n = t.order() + 1;
        for (int attach = 0; attach < t.order(); ++attach) {
            std::vector<std::pair<int, int>> edges = t.edges();
            edges.emplace_back(attach, n - 1);
            Graph cand(n, edges);
            if (seen.insert(canonical_key(cand)).second) out.push_back(std::move(cand));
        }
    }
    return out;
}

std::mutex enum_mutex;

}  // namespace

const std::vector<Graph>& nonisomorphic_graphs(int n) {
    if (n < 1 || n > 8)
        throw SizeLimitError("graph enumeration supported for orders 1 to 8");
    std::lock_guard<std::mutex> lock(enum_mutex);
    static std::map<int, std::vector<Graph>> cache;
    if (cache.empty()) cache[1] = {Graph(1)};
    for (int k = 2; k <= n; ++k)
        if (!cache.count(k)) cache[k] = augment_all(cache[k - 1]);
    return cache[n];
}

const std::vector<Graph>& nonisomorphic_trees(int n) {
    if (n < 1 || n > 10)
        throw SizeLimitError("tree enumeration supported for orders 1 to 10");
    std::lock_guard<std::mutex> lock(enum_mutex);
    static std::map<int, std::vector<Graph>> cache;
    if (cache.empty()) cache[1] = {Graph(1)};
    for (int k = 2; k <= n; ++k)
        if (!cache.count(k)) cache[k] = augment_trees(cache[k - 1]);
    return cache[n];
}

std::vector<Graph> nonisomorphic_connected_graphs(int n) {
    std::vector<Graph> out;
    for (const Graph& g : nonisomorphic_graphs(n))
        if (is_connected(g)) out.push_back(g);
    return out;
}

}  // namespace mbd
