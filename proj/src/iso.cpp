#include "polyemb/iso.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace polyemb {

std::string to_hex(const CanonicalCode& code) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(code.size() * 2);
    for (unsigned char b : code) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Embedded-graph canonical form

namespace {

// BFS relabeling code from one start: scan each vertex's rotation starting
// at the dart it was discovered by, in the given direction, emitting the
// labels of the heads. New vertices get labels in discovery order.
void embedded_code_from(const std::vector<std::array<int, 3>>& rot, int start_v, int start_idx,
                        int dir, std::string& out) {
    int n = (int)rot.size();
    out.clear();
    std::vector<int> label(n, -1), entry_nb(n, -1), order;
    order.reserve(n);
    label[start_v] = 0;
    entry_nb[start_v] = rot[start_v][start_idx];
    order.push_back(start_v);
    for (int qi = 0; qi < (int)order.size(); ++qi) {
        int x = order[qi];
        int idx = 0;
        while (rot[x][idx] != entry_nb[x]) ++idx;
        for (int t = 0; t < 3; ++t) {
            int y = rot[x][((idx + dir * t) % 3 + 3) % 3];
            if (label[y] < 0) {
                label[y] = (int)order.size();
                entry_nb[y] = x;
                order.push_back(y);
            }
            out.push_back((char)label[y]);
        }
    }
}

}  // namespace

CanonicalCode canon_embedded(const RotationSystem& r, bool include_mirror) {
    int n = r.graph.n;
    std::vector<std::array<int, 3>> rot(n);
    for (int v = 0; v < n; ++v) rot[v] = r.rotation(v);
    std::string best, cur;
    for (int v = 0; v < n; ++v)
        for (int idx = 0; idx < 3; ++idx)
            for (int dir : {1, -1}) {
                if (dir < 0 && !include_mirror) continue;
                embedded_code_from(rot, v, idx, dir, cur);
                if (best.empty() || cur < best) best = cur;
            }
    std::string code;
    code.push_back((char)n);
    code.push_back(include_mirror ? 1 : 0);
    code += best;
    return code;
}

// ---------------------------------------------------------------------------
// Abstract-graph canonical form: color refinement + individualization.

namespace {

// Re-ranks arbitrary keys to dense colors 0..k-1 in key order.
template <typename Key>
void rank_colors(std::vector<Key>& keys, std::vector<int>& colors) {
    int n = (int)keys.size();
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    int rank = 0;
    for (int i = 0; i < n; ++i) {
        if (i > 0 && keys[idx[i - 1]] < keys[idx[i]]) ++rank;
        colors[idx[i]] = rank;
    }
}

void refine(const CubicGraph& g, std::vector<int>& colors) {
    for (;;) {
        std::vector<std::array<int, 4>> keys(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::array<int, 3> nb = {colors[g.adj[v][0]], colors[g.adj[v][1]], colors[g.adj[v][2]]};
            std::sort(nb.begin(), nb.end());
            keys[v] = {colors[v], nb[0], nb[1], nb[2]};
        }
        std::vector<int> next(g.n);
        rank_colors(keys, next);
        if (next == colors) return;
        colors = std::move(next);
    }
}

std::string leaf_code(const CubicGraph& g, const std::vector<int>& colors) {
    std::vector<int> perm(g.n);  // new id -> old id
    for (int v = 0; v < g.n; ++v) perm[colors[v]] = v;
    std::string code;
    code.push_back((char)g.n);
    int bits = 0, value = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | (g.has_edge(perm[i], perm[j]) ? 1 : 0);
            if (++bits == 8) {
                code.push_back((char)value);
                bits = value = 0;
            }
        }
    if (bits) code.push_back((char)(value << (8 - bits)));
    return code;
}

void canon_rec(const CubicGraph& g, std::vector<int> colors, std::string& best) {
    refine(g, colors);
    int cell_color = -1;
    int n = g.n;
    std::vector<int> count(n, 0);
    for (int v = 0; v < n; ++v) ++count[colors[v]];
    for (int c = 0; c < n; ++c)
        if (count[c] >= 2) {
            cell_color = c;
            break;
        }
    if (cell_color < 0) {
        std::string code = leaf_code(g, colors);
        if (best.empty() || code < best) best = code;
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (colors[v] != cell_color) continue;
        std::vector<int> child(n);
        for (int u = 0; u < n; ++u) child[u] = 2 * colors[u] + (u == v ? 0 : 1);
        canon_rec(g, std::move(child), best);
    }
}

}  // namespace

CanonicalCode canon_graph(const CubicGraph& g) {
    // Seed colors with the multiset of BFS distances; splits most graphs
    // before any individualization.
    std::vector<std::vector<int>> keys(g.n);
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> dist(g.n, -1);
        std::queue<int> q;
        dist[v] = 0;
        q.push(v);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int u : g.adj[x])
                if (dist[u] < 0) {
                    dist[u] = dist[x] + 1;
                    q.push(u);
                }
        }
        std::sort(dist.begin(), dist.end());
        keys[v] = std::move(dist);
    }
    std::vector<int> colors(g.n);
    rank_colors(keys, colors);
    std::string best;
    canon_rec(g, std::move(colors), best);
    return best;
}

}  // namespace polyemb
