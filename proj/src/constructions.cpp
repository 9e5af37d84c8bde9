#include "polyemb/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace polyemb {

namespace {

// Concrete rotation lists of a system, i.e. the stored order with flips
// applied, so the result can use them directly as its reference rotation.
std::vector<std::array<int, 3>> concrete_rotations(const RotationSystem& r) {
    std::vector<std::array<int, 3>> rot(r.graph.n);
    for (int v = 0; v < r.graph.n; ++v) rot[v] = r.rotation(v);
    return rot;
}

bool is_cyclic_rotation(const std::array<int, 3>& rot, const std::array<int, 3>& want) {
    for (int s = 0; s < 3; ++s)
        if (rot[s] == want[0])
            return rot[(s + 1) % 3] == want[1] && rot[(s + 2) % 3] == want[2];
    return false;
}

CubicGraph glue(const std::vector<std::array<int, 3>>& host_rot, int v,
                const std::vector<std::array<int, 3>>& guest_rot, int v2,
                const StarIdentification& ident) {
    int nh = (int)host_rot.size(), ng = (int)guest_rot.size();
    std::vector<int> hmap(nh, -1), gmap(ng, -1);
    int next = 0;
    for (int u = 0; u < nh; ++u)
        if (u != v) hmap[u] = next++;
    for (int u = 0; u < ng; ++u)
        if (u != v2) gmap[u] = next++;

    auto pair_of = [&](int u, bool in_host) -> int {
        const auto& h = ident.host;
        const auto& g = ident.guest;
        for (int i = 0; i < 3; ++i) {
            if (in_host && h[i] == u) return gmap[g[i]];
            if (!in_host && g[i] == u) return hmap[h[i]];
        }
        throw std::invalid_argument("identification does not cover a deleted-vertex neighbor");
    };

    std::vector<std::array<int, 3>> adj(nh + ng - 2);
    for (int u = 0; u < nh; ++u) {
        if (u == v) continue;
        for (int s = 0; s < 3; ++s) {
            int w = host_rot[u][s];
            adj[hmap[u]][s] = (w == v) ? pair_of(u, true) : hmap[w];
        }
    }
    for (int u = 0; u < ng; ++u) {
        if (u == v2) continue;
        for (int s = 0; s < 3; ++s) {
            int w = guest_rot[u][s];
            adj[gmap[u]][s] = (w == v2) ? pair_of(u, false) : gmap[w];
        }
    }
    return make_cubic_graph(nh + ng - 2, std::move(adj));
}

void check_star_args(const CubicGraph& host, int v, const CubicGraph& guest, int v2) {
    if (v < 0 || v >= host.n || v2 < 0 || v2 >= guest.n)
        throw std::invalid_argument("star product vertex out of range");
}

StarIdentification validate_ident(const CubicGraph& host, int v, const CubicGraph& guest, int v2,
                                  const StarIdentification& ident) {
    auto is_perm = [](const std::array<int, 3>& got, const std::array<int, 3>& of) {
        for (int x : got)
            if (x != of[0] && x != of[1] && x != of[2]) return false;
        return got[0] != got[1] && got[1] != got[2] && got[0] != got[2];
    };
    if (!is_perm(ident.host, host.adj[v]) || !is_perm(ident.guest, guest.adj[v2]))
        throw std::invalid_argument("identification must pair the neighbors of the deleted vertices");
    return ident;
}

}  // namespace

CubicGraph star_product(const CubicGraph& host, int v, const CubicGraph& guest, int v2,
                        const std::optional<StarIdentification>& ident) {
    check_star_args(host, v, guest, v2);
    StarIdentification id = ident ? validate_ident(host, v, guest, v2, *ident)
                                  : StarIdentification{host.adj[v], guest.adj[v2]};
    return glue(host.adj, v, guest.adj, v2, id);
}

RotationSystem star_product_embedded(const RotationSystem& host, int v,
                                     const RotationSystem& guest, int v2,
                                     const std::optional<StarIdentification>& ident) {
    check_star_args(host.graph, v, guest.graph, v2);
    auto hrot = concrete_rotations(host);
    auto grot = concrete_rotations(guest);
    StarIdentification id;
    if (ident) {
        id = validate_ident(host.graph, v, guest.graph, v2, *ident);
        // The gluing convention: rotation (a,b,c) around v pairs with
        // rotation (a',c',b') around v2.
        if (!is_cyclic_rotation(hrot[v], id.host) ||
            !is_cyclic_rotation(grot[v2], {id.guest[0], id.guest[2], id.guest[1]}))
            throw std::invalid_argument("identification does not match the embedding orientations");
    } else {
        const auto& a = hrot[v];
        const auto& b = grot[v2];
        id = StarIdentification{{a[0], a[1], a[2]}, {b[0], b[2], b[1]}};
    }
    return reference_rotation(glue(hrot, v, grot, v2, id));
}

HexTorus hex_torus(int k) {
    if (k < 3) throw std::invalid_argument("hex_torus needs k >= 3");
    int n = 2 * k * k;
    if (n > kMaxVertices) throw std::invalid_argument("hex_torus too large");
    auto zero = [&](int i, int j) { return 2 * (((i + k) % k) * k + (j + k) % k); };
    auto one = [&](int i, int j) { return zero(i, j) + 1; };
    std::vector<std::array<int, 3>> adj(n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            adj[zero(i, j)] = {one(i, j), one(i, j + 1), one(i + 1, j)};
            adj[one(i, j)] = {zero(i, j), zero(i, j - 1), zero(i - 1, j)};
        }
    HexTorus out{reference_rotation(make_cubic_graph(n, std::move(adj))), {}, {}};
    out.part.assign(n, 0);
    for (int v = 0; v < n; v += 2) {
        out.part[v + 1] = 1;
        out.part_zero.add(v);
    }
    return out;
}

CubicGraph named_graph(std::string_view name) {
    auto build = [](int n, std::vector<std::array<int, 3>> adj) {
        return make_cubic_graph(n, std::move(adj));
    };
    if (name == "k4") return build(4, {{{1, 2, 3}}, {{0, 2, 3}}, {{0, 1, 3}}, {{0, 1, 2}}});
    if (name == "prism")
        // Two triangles 0-1-2 and 3-4-5 with the matching i ~ i+3.
        return build(6, {{{1, 2, 3}}, {{0, 2, 4}}, {{0, 1, 5}}, {{4, 5, 0}}, {{3, 5, 1}}, {{3, 4, 2}}});
    if (name == "k33")
        return build(6, {{{3, 4, 5}}, {{3, 4, 5}}, {{3, 4, 5}}, {{0, 1, 2}}, {{0, 1, 2}}, {{0, 1, 2}}});
    if (name == "petersen") {
        // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i ~ i+5.
        std::vector<std::array<int, 3>> adj(10);
        for (int i = 0; i < 5; ++i) {
            adj[i] = {(i + 1) % 5, (i + 4) % 5, i + 5};
            adj[i + 5] = {(i + 2) % 5 + 5, (i + 3) % 5 + 5, i};
        }
        return build(10, std::move(adj));
    }
    if (name == "heawood") {
        // 14-cycle plus chords i ~ i+5 for even i (LCF [5,-5]^7).
        std::vector<std::array<int, 3>> adj(14);
        for (int i = 0; i < 14; ++i) {
            int chord = (i % 2 == 0) ? (i + 5) % 14 : (i + 9) % 14;
            adj[i] = {(i + 1) % 14, (i + 13) % 14, chord};
        }
        return build(14, std::move(adj));
    }
    if (name == "coxeter") {
        // Three 7-gons with steps 1, 2, 3 (vertices a=0..6, b=7..13,
        // c=14..20) and hubs 21..27 joined to one vertex of each.
        std::vector<std::array<int, 3>> adj(28);
        for (int i = 0; i < 7; ++i) {
            int a = i, b = 7 + i, c = 14 + i, hub = 21 + i;
            adj[a] = {(i + 1) % 7, (i + 6) % 7, hub};
            adj[b] = {7 + (i + 2) % 7, 7 + (i + 5) % 7, hub};
            adj[c] = {14 + (i + 3) % 7, 14 + (i + 4) % 7, hub};
            adj[hub] = {a, b, c};
        }
        return build(28, std::move(adj));
    }
    throw std::invalid_argument("unknown graph name: " + std::string(name));
}

int max_genus_bound(int n) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("vertex count must be even and >= 4");
    // Largest g >= 0 with (n + 3 - 4g)^2 >= 12n + 1 and n + 3 - 4g >= 0.
    long long target = 12LL * n + 1;
    long long s = 0;
    while ((s + 1) * (s + 1) <= target) ++s;
    long long ceil_sqrt = (s * s == target) ? s : s + 1;
    long long bound = (n + 3 - ceil_sqrt) / 4;
    return bound < 0 ? 0 : (int)bound;
}

}  // namespace polyemb
