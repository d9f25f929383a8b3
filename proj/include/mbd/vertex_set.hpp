#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace mbd {

// Vertex subsets of graphs on at most 62 vertices, one bit per vertex.
// The two top bits stay clear so callers may fold tags into spare bits.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 62;

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

constexpr bool vs_contains(VertexSet s, int v) { return (s >> v) & 1; }

constexpr VertexSet vs_full(int n) {
    return n == 0 ? 0 : (~VertexSet{0} >> (64 - n));
}

inline int vs_size(VertexSet s) { return std::popcount(s); }

// Lowest vertex in a nonempty set.
inline int vs_first(VertexSet s) { return std::countr_zero(s); }

template <typename F>
void vs_for_each(VertexSet s, F&& f) {
    while (s) {
        f(std::countr_zero(s));
        s &= s - 1;
    }
}

inline std::vector<int> vs_to_vector(VertexSet s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(vs_size(s)));
    vs_for_each(s, [&](int v) { out.push_back(v); });
    return out;
}

inline std::string vs_to_string(VertexSet s) {
    std::string out = "{";
    bool first = true;
    vs_for_each(s, [&](int v) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    });
    out += "}";
    return out;
}

}  // namespace mbd
