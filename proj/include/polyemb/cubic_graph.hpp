#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyemb {

// Desk-scale cap; keeps vertex bitsets at two machine words.
inline constexpr int kMaxVertices = 128;

/// Fixed-capacity bitset over vertex ids 0..kMaxVertices-1.
class VertexSet {
public:
    void add(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void remove(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }
    void clear() { w_ = {0, 0}; }

    int count() const;
    bool empty() const { return w_[0] == 0 && w_[1] == 0; }

    VertexSet operator&(const VertexSet& o) const { return {w_[0] & o.w_[0], w_[1] & o.w_[1]}; }
    VertexSet operator|(const VertexSet& o) const { return {w_[0] | o.w_[0], w_[1] | o.w_[1]}; }
    bool operator==(const VertexSet&) const = default;

    /// True if this set contains no vertex outside `other`.
    bool subset_of(const VertexSet& o) const {
        return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
    }

    std::vector<int> to_vector() const;

    VertexSet() = default;
    VertexSet(std::uint64_t lo, std::uint64_t hi) : w_{lo, hi} {}

private:
    std::array<std::uint64_t, 2> w_{0, 0};
};

int intersect_count(const VertexSet& a, const VertexSet& b);

/// Simple connected 3-regular graph. The stored neighbor order at each
/// vertex is the reference rotation for the whole pipeline.
struct CubicGraph {
    int n = 0;
    std::vector<std::array<int, 3>> adj;

    bool has_edge(int u, int v) const {
        return adj[u][0] == v || adj[u][1] == v || adj[u][2] == v;
    }
    /// Index of u in adj[v], or -1.
    int slot_of(int v, int u) const {
        for (int s = 0; s < 3; ++s)
            if (adj[v][s] == u) return s;
        return -1;
    }

    bool operator==(const CubicGraph&) const = default;
};

/// Validates the CubicGraph invariants (degree 3, symmetric, simple,
/// n even and >= 4) and returns the graph. Throws std::invalid_argument.
CubicGraph make_cubic_graph(int n, std::vector<std::array<int, 3>> adj);

// ---------------------------------------------------------------------------
// graph6 I/O

enum class Graph6ErrorKind {
    malformed,    // not a valid graph6 line
    odd_order,    // decoded graph has an odd number of vertices
    not_cubic,    // decoded graph is simple but not 3-regular
    too_large,    // exceeds kMaxVertices
};

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(Graph6ErrorKind k, const std::string& msg)
        : std::runtime_error(msg), kind(k) {}
    Graph6ErrorKind kind;
};

/// Decodes one graph6 line into a CubicGraph. Neighbor lists come out in
/// ascending order; vertex ids of the encoding are preserved.
/// Tolerates a leading ">>graph6<<" header.
CubicGraph parse_graph6(std::string_view line);

/// Encodes the adjacency relation under the stored vertex order.
std::string write_graph6(const CubicGraph& g);

// ---------------------------------------------------------------------------
// Connectivity

enum class Connectivity { disconnected, one_connected, two_connected, three_connected };

/// Exact vertex-connectivity class. Cubic graphs have connectivity <= 3,
/// so a brute-force cut search is exact and cheap at desk scale.
Connectivity connectivity_class(const CubicGraph& g);

const char* to_string(Connectivity c);

// ---------------------------------------------------------------------------
// Small cycles

struct Hexagon {
    std::array<int, 6> cycle;  // canonical vertex sequence
    std::array<int, 6> third;  // third[i] = neighbor of cycle[i] off the cycle
};

struct SmallCycleSet {
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<int, 4>> quads;      // all 4-cycles
    std::vector<std::array<int, 5>> pentagons;  // induced only
    std::vector<Hexagon> hexagons;              // induced only
};

/// Complete enumeration of 3-cycles, 4-cycles, induced 5-cycles and induced
/// 6-cycles. Each cycle is stored as its canonical vertex sequence:
/// smallest vertex first, smaller of the two neighbors second.
SmallCycleSet small_cycles(const CubicGraph& g);

}  // namespace polyemb
