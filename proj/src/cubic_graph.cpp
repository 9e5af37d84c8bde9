#include "polyemb/cubic_graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace polyemb {

int VertexSet::count() const {
    return std::popcount(w_[0]) + std::popcount(w_[1]);
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    for (int v = 0; v < kMaxVertices; ++v)
        if (test(v)) out.push_back(v);
    return out;
}

int intersect_count(const VertexSet& a, const VertexSet& b) {
    VertexSet c = a & b;
    return c.count();
}

CubicGraph make_cubic_graph(int n, std::vector<std::array<int, 3>> adj) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("cubic graph needs an even vertex count >= 4");
    if (n > kMaxVertices)
        throw std::invalid_argument("vertex count exceeds supported maximum");
    if ((int)adj.size() != n)
        throw std::invalid_argument("adjacency size does not match vertex count");
    for (int v = 0; v < n; ++v) {
        const auto& nb = adj[v];
        if (nb[0] == nb[1] || nb[0] == nb[2] || nb[1] == nb[2])
            throw std::invalid_argument("parallel edge at vertex " + std::to_string(v));
        for (int u : nb) {
            if (u < 0 || u >= n)
                throw std::invalid_argument("neighbor id out of range");
            if (u == v)
                throw std::invalid_argument("loop at vertex " + std::to_string(v));
        }
    }
    CubicGraph g{n, std::move(adj)};
    for (int v = 0; v < n; ++v)
        for (int u : g.adj[v])
            if (!g.has_edge(u, v))
                throw std::invalid_argument("adjacency is not symmetric");
    return g;
}

// ---------------------------------------------------------------------------
// graph6

CubicGraph parse_graph6(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
        line.remove_suffix(1);
    if (line.empty())
        throw Graph6Error(Graph6ErrorKind::malformed, "empty graph6 line");
    for (unsigned char c : line)
        if (c < 63 || c > 126)
            throw Graph6Error(Graph6ErrorKind::malformed, "byte out of graph6 range");

    size_t pos = 0;
    auto next_byte = [&]() -> int {
        if (pos >= line.size())
            throw Graph6Error(Graph6ErrorKind::malformed, "truncated graph6 line");
        unsigned char c = line[pos++];
        if (c < 63 || c > 126)
            throw Graph6Error(Graph6ErrorKind::malformed, "byte out of graph6 range");
        return c - 63;
    };

    long long n;
    int b0 = next_byte();
    if (b0 < 63) {
        n = b0;
    } else {
        // '~' prefix: 18-bit order. A second '~' (24-bit orders) is beyond
        // the supported range anyway.
        long long b1 = next_byte();
        if (b1 == 63)
            throw Graph6Error(Graph6ErrorKind::too_large, "graph order beyond supported range");
        n = (b1 << 12) | (next_byte() << 6) | next_byte();
    }
    if (n > kMaxVertices)
        throw Graph6Error(Graph6ErrorKind::too_large,
                          "graph order " + std::to_string(n) + " exceeds supported maximum");
    if (n % 2 != 0)
        throw Graph6Error(Graph6ErrorKind::odd_order, "odd vertex count cannot be cubic");

    std::vector<std::vector<int>> nbr(n);
    int bits = 0, value = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bits == 0) {
                value = next_byte();
                bits = 6;
            }
            --bits;
            if ((value >> bits) & 1) {
                nbr[i].push_back(j);
                nbr[j].push_back(i);
            }
        }
    }
    if (pos != line.size())
        throw Graph6Error(Graph6ErrorKind::malformed, "trailing bytes after graph6 data");

    std::vector<std::array<int, 3>> adj(n);
    for (int v = 0; v < n; ++v) {
        if (nbr[v].size() != 3)
            throw Graph6Error(Graph6ErrorKind::not_cubic,
                              "vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(nbr[v].size()));
        std::sort(nbr[v].begin(), nbr[v].end());
        adj[v] = {nbr[v][0], nbr[v][1], nbr[v][2]};
    }
    return make_cubic_graph((int)n, std::move(adj));
}

std::string write_graph6(const CubicGraph& g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back((char)(g.n + 63));
    } else {
        out.push_back('~');
        out.push_back((char)(((g.n >> 12) & 63) + 63));
        out.push_back((char)(((g.n >> 6) & 63) + 63));
        out.push_back((char)((g.n & 63) + 63));
    }
    int bits = 0, value = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back((char)(value + 63));
                bits = value = 0;
            }
        }
    }
    if (bits > 0) out.push_back((char)((value << (6 - bits)) + 63));
    return out;
}

// ---------------------------------------------------------------------------
// Connectivity

namespace {

// Counts vertices reachable from `start`, skipping vertices marked in `skip`.
int reachable_count(const CubicGraph& g, int start, const VertexSet& skip) {
    std::vector<int> stack{start};
    VertexSet seen;
    seen.add(start);
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.adj[v]) {
            if (skip.test(u) || seen.test(u)) continue;
            seen.add(u);
            ++cnt;
            stack.push_back(u);
        }
    }
    return cnt;
}

bool connected_without(const CubicGraph& g, const VertexSet& removed) {
    int start = -1;
    int kept = 0;
    for (int v = 0; v < g.n; ++v) {
        if (!removed.test(v)) {
            ++kept;
            if (start < 0) start = v;
        }
    }
    if (kept == 0) return true;
    return reachable_count(g, start, removed) == kept;
}

}  // namespace

Connectivity connectivity_class(const CubicGraph& g) {
    if (!connected_without(g, VertexSet{})) return Connectivity::disconnected;
    for (int v = 0; v < g.n; ++v) {
        VertexSet cut;
        cut.add(v);
        if (!connected_without(g, cut)) return Connectivity::one_connected;
    }
    for (int v = 0; v < g.n; ++v) {
        for (int u = v + 1; u < g.n; ++u) {
            VertexSet cut;
            cut.add(v);
            cut.add(u);
            if (!connected_without(g, cut)) return Connectivity::two_connected;
        }
    }
    return Connectivity::three_connected;
}

const char* to_string(Connectivity c) {
    switch (c) {
        case Connectivity::disconnected: return "disconnected";
        case Connectivity::one_connected: return "1-connected";
        case Connectivity::two_connected: return "2-connected";
        case Connectivity::three_connected: return "3-connected";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Small cycles

namespace {

// Enumerates all cycles of length `len` in canonical form: smallest vertex
// first, second vertex smaller than last. If `induced_only`, cycles with a
// chord are dropped.
template <typename Fn>
void for_cycles(const CubicGraph& g, int len, bool induced_only, Fn&& emit) {
    std::vector<int> path(len);
    std::vector<char> used(g.n, 0);

    std::function<void(int)> extend = [&](int depth) {
        int cur = path[depth - 1];
        for (int u : g.adj[cur]) {
            if (depth == len) {
                if (u != path[0]) continue;
                if (path[1] > path[len - 1]) continue;  // reflection canon
                if (induced_only) {
                    bool chord = false;
                    for (int i = 0; i < len && !chord; ++i)
                        for (int j = i + 2; j < len; ++j) {
                            if (i == 0 && j == len - 1) continue;
                            if (g.has_edge(path[i], path[j])) {
                                chord = true;
                                break;
                            }
                        }
                    if (chord) continue;
                }
                emit(path);
                continue;
            }
            if (u <= path[0] || used[u]) continue;
            used[u] = 1;
            path[depth] = u;
            extend(depth + 1);
            used[u] = 0;
        }
    };

    for (int v = 0; v < g.n; ++v) {
        path[0] = v;
        used[v] = 1;
        extend(1);
        used[v] = 0;
    }
}

}  // namespace

SmallCycleSet small_cycles(const CubicGraph& g) {
    SmallCycleSet out;
    for_cycles(g, 3, false, [&](const std::vector<int>& c) {
        out.triangles.push_back({c[0], c[1], c[2]});
    });
    for_cycles(g, 4, false, [&](const std::vector<int>& c) {
        out.quads.push_back({c[0], c[1], c[2], c[3]});
    });
    for_cycles(g, 5, true, [&](const std::vector<int>& c) {
        out.pentagons.push_back({c[0], c[1], c[2], c[3], c[4]});
    });
    for_cycles(g, 6, true, [&](const std::vector<int>& c) {
        Hexagon h;
        for (int i = 0; i < 6; ++i) {
            h.cycle[i] = c[i];
            int prev = c[(i + 5) % 6], next = c[(i + 1) % 6];
            for (int u : g.adj[c[i]])
                if (u != prev && u != next) h.third[i] = u;
        }
        out.hexagons.push_back(h);
    });
    return out;
}

}  // namespace polyemb
