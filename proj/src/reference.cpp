#include "polyemb/reference.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "polyemb/constructions.hpp"
#include "polyemb/iso.hpp"

namespace polyemb {

namespace {

using RotationTable = std::vector<std::array<int, 3>>;

// Visits all 2^(n-1) rotation tables with vertex 0 fixed at the reference,
// Gray-code style: one vertex rotation is swapped between consecutive
// systems. The callback receives the table and the flip bits.
template <typename Fn>
void scan_systems(const CubicGraph& g, Fn&& per_system) {
    RotationTable rot = g.adj;
    std::vector<std::uint8_t> flips(g.n, 0);
    per_system((const RotationTable&)rot, (const std::vector<std::uint8_t>&)flips);
    unsigned long long end = 1ULL << (g.n - 1);
    for (unsigned long long i = 1; i < end; ++i) {
        int v = std::countr_zero(i) + 1;
        std::swap(rot[v][1], rot[v][2]);
        flips[v] ^= 1;
        per_system((const RotationTable&)rot, (const std::vector<std::uint8_t>&)flips);
    }
}

// Walks every face of the concrete rotation table. A dart is (v, i): the
// edge from v to rot[v][i]. The face successor of the dart u -> v is the
// dart from v to the neighbor following u in the rotation at v.
template <typename FaceFn>
int walk_faces(const RotationTable& rot, FaceFn&& on_face) {
    int n = (int)rot.size();
    std::vector<std::array<char, 3>> seen(n, {0, 0, 0});
    int nfaces = 0;
    std::vector<int> walk;
    for (int v0 = 0; v0 < n; ++v0)
        for (int i0 = 0; i0 < 3; ++i0) {
            if (seen[v0][i0]) continue;
            walk.clear();
            int u = v0, i = i0;
            do {
                seen[u][i] = 1;
                walk.push_back(u);
                int w = rot[u][i];
                int back = 0;
                while (rot[w][back] != u) ++back;
                u = w;
                i = (back + 1) % 3;
            } while (!(u == v0 && i == i0));
            ++nfaces;
            on_face(walk);
        }
    return nfaces;
}

int genus_of_table(const RotationTable& rot) {
    int n = (int)rot.size();
    thread_local std::vector<char> seen;
    seen.assign(3 * n, 0);
    int f = 0;
    for (int d0 = 0; d0 < 3 * n; ++d0) {
        if (seen[d0]) continue;
        int u = d0 / 3, i = d0 % 3;
        do {
            seen[3 * u + i] = 1;
            int w = rot[u][i];
            int back = 0;
            while (rot[w][back] != u) ++back;
            u = w;
            i = (back + 1) % 3;
        } while (!seen[3 * u + i]);
        ++f;
    }
    return (2 - (n - 3 * n / 2 + f)) / 2;
}

// The two-condition test with sorted vertex lists: every face a simple
// cycle, every face pair sharing at most two vertices.
bool polyhedral_table(const RotationTable& rot) {
    std::vector<std::vector<int>> faces;
    bool simple = true;
    walk_faces(rot, [&](std::vector<int> walk) {
        std::sort(walk.begin(), walk.end());
        if (std::adjacent_find(walk.begin(), walk.end()) != walk.end()) simple = false;
        faces.push_back(std::move(walk));
    });
    if (!simple) return false;
    for (size_t a = 0; a < faces.size(); ++a)
        for (size_t b = a + 1; b < faces.size(); ++b) {
            int common = 0;
            size_t i = 0, j = 0;
            while (i < faces[a].size() && j < faces[b].size()) {
                if (faces[a][i] < faces[b][j]) ++i;
                else if (faces[a][i] > faces[b][j]) ++j;
                else { ++common; ++i; ++j; }
            }
            if (common > 2) return false;
        }
    return true;
}

void check_size(const CubicGraph& g) {
    if (g.n > 63) throw std::invalid_argument("exhaustive scan needs n <= 63");
}

}  // namespace

std::vector<RotationSystem> brute_force_polyhedral(const CubicGraph& g) {
    check_size(g);
    std::vector<RotationSystem> out;
    scan_systems(g, [&](const RotationTable& rot, const std::vector<std::uint8_t>& flips) {
        if (polyhedral_table(rot)) out.push_back(RotationSystem{g, flips});
    });
    return out;
}

int min_genus(const CubicGraph& g) {
    check_size(g);
    int best = -1;
    bool done = false;
    scan_systems(g, [&](const RotationTable& rot, const std::vector<std::uint8_t>&) {
        if (done) return;
        int genus = genus_of_table(rot);
        if (best < 0 || genus < best) {
            best = genus;
            if (best == 0) done = true;
        }
    });
    return best;
}

GenusProfile genus_profile(const CubicGraph& g) {
    check_size(g);
    GenusProfile prof;
    scan_systems(g, [&](const RotationTable& rot, const std::vector<std::uint8_t>&) {
        int genus = genus_of_table(rot);
        ++prof.counts[genus];
        ++prof.total;
        if (polyhedral_table(rot)) ++prof.polyhedral[genus];
    });
    prof.min_genus = prof.counts.begin()->first;
    return prof;
}

// ---------------------------------------------------------------------------
// Isomorph-free generation by edge insertion

namespace {

std::vector<std::pair<int, int>> edge_list(const CubicGraph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v) edges.emplace_back(u, v);
    std::sort(edges.begin(), edges.end());
    return edges;
}

// Subdivides e1 and e2 with new vertices and joins them.
CubicGraph insert_edge_pair(const CubicGraph& g, std::pair<int, int> e1, std::pair<int, int> e2) {
    int x = g.n, y = g.n + 1;
    std::vector<std::array<int, 3>> adj = g.adj;
    adj.resize(g.n + 2);
    auto redirect = [&](int from, int old_to, int new_to) {
        adj[from][g.slot_of(from, old_to)] = new_to;
    };
    redirect(e1.first, e1.second, x);
    redirect(e1.second, e1.first, x);
    redirect(e2.first, e2.second, y);
    redirect(e2.second, e2.first, y);
    adj[x] = {e1.first, e1.second, y};
    adj[y] = {e2.first, e2.second, x};
    return make_cubic_graph(g.n + 2, std::move(adj));
}

// Replaces the edge e by a diamond (K4 minus an edge) whose degree-2 ends
// take the two endpoints. Needed because edge insertion alone cannot reach
// graphs in which every edge touches a triangle pair or a diamond.
CubicGraph insert_diamond(const CubicGraph& g, std::pair<int, int> e) {
    int p = g.n, q = g.n + 1, r = g.n + 2, s = g.n + 3;
    std::vector<std::array<int, 3>> adj = g.adj;
    adj.resize(g.n + 4);
    adj[e.first][g.slot_of(e.first, e.second)] = p;
    adj[e.second][g.slot_of(e.second, e.first)] = q;
    adj[p] = {e.first, r, s};
    adj[q] = {e.second, r, s};
    adj[r] = {p, q, s};
    adj[s] = {p, q, r};
    return make_cubic_graph(g.n + 4, std::move(adj));
}

// Subdivides the edge e and hangs a K4-with-subdivided-edge off the new
// vertex. The smallest gadget behind a bridge; unreachable by the other
// two operations.
CubicGraph insert_lollipop(const CubicGraph& g, std::pair<int, int> e) {
    int m = g.n, t = g.n + 1, a = g.n + 2, b = g.n + 3, c = g.n + 4, d = g.n + 5;
    std::vector<std::array<int, 3>> adj = g.adj;
    adj.resize(g.n + 6);
    adj[e.first][g.slot_of(e.first, e.second)] = m;
    adj[e.second][g.slot_of(e.second, e.first)] = m;
    adj[m] = {e.first, e.second, t};
    adj[t] = {m, c, d};
    adj[a] = {b, c, d};
    adj[b] = {a, c, d};
    adj[c] = {a, b, t};
    adj[d] = {a, b, t};
    return make_cubic_graph(g.n + 6, std::move(adj));
}

}  // namespace

std::vector<CubicGraph> gen_cubic(int n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("connected cubic graphs need an even n >= 4");
    // level[m] holds the graphs on m vertices; each level feeds the next
    // two via edge insertion (+2 vertices) and diamond insertion (+4).
    std::map<int, std::map<CanonicalCode, CubicGraph>> levels;
    CubicGraph k4 = named_graph("k4");
    levels[4].emplace(canon_graph(k4), k4);
    for (int m = 4; m + 2 <= n; m += 2) {
        for (const auto& [code, g] : levels[m]) {
            auto edges = edge_list(g);
            for (size_t a = 0; a < edges.size(); ++a)
                for (size_t b = a + 1; b < edges.size(); ++b) {
                    CubicGraph cand = insert_edge_pair(g, edges[a], edges[b]);
                    levels[m + 2].try_emplace(canon_graph(cand), std::move(cand));
                }
            if (m + 4 <= n)
                for (const auto& e : edges) {
                    CubicGraph cand = insert_diamond(g, e);
                    levels[m + 4].try_emplace(canon_graph(cand), std::move(cand));
                }
            if (m + 6 <= n)
                for (const auto& e : edges) {
                    CubicGraph cand = insert_lollipop(g, e);
                    levels[m + 6].try_emplace(canon_graph(cand), std::move(cand));
                }
        }
    }
    std::vector<CubicGraph> out;
    out.reserve(levels[n].size());
    for (auto& [code, g] : levels[n]) out.push_back(std::move(g));
    return out;
}

}  // namespace polyemb
