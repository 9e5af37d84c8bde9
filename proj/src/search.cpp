#include "polyemb/search.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace polyemb {

void EmbeddingSummary::add(int genus) {
    ++per_genus[genus];
    ++total;
    has_any = true;
    multi_embedding = total >= 2;
    multi_genus = per_genus.size() >= 2;
    if (!min_search_genus || genus < *min_search_genus) min_search_genus = genus;
}

EmbeddingSummary& EmbeddingSummary::operator+=(const EmbeddingSummary& o) {
    for (auto [g, c] : o.per_genus) per_genus[g] += c;
    total += o.total;
    has_any = has_any || o.has_any;
    multi_embedding = total >= 2;
    multi_genus = per_genus.size() >= 2;
    if (o.min_search_genus && (!min_search_genus || *o.min_search_genus < *min_search_genus))
        min_search_genus = o.min_search_genus;
    return *this;
}

bool hexagon_word_allowed(int word) {
    if (word == 0 || word == 63) return true;  // facial hexagon
    if (std::popcount((unsigned)word) != 3) return false;
    for (int i = 0; i < 6; ++i) {
        int m = (1 << i) | (1 << ((i + 1) % 6)) | (1 << ((i + 2) % 6));
        if ((word & m) == m) return false;  // three attachments in a row
    }
    return true;
}

// ---------------------------------------------------------------------------
// Parity classes via union-find with parity

namespace {

struct ParityUnionFind {
    std::vector<int> parent;
    std::vector<std::uint8_t> to_parent;  // parity of v relative to parent[v]
    bool contradiction = false;

    explicit ParityUnionFind(int n) : parent(n), to_parent(n, 0) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }

    std::pair<int, int> find(int v) {
        if (parent[v] == v) return {v, 0};
        auto [root, par] = find(parent[v]);
        parent[v] = root;
        to_parent[v] ^= par;
        return {root, to_parent[v]};
    }

    // Relates flip[u] ^ flip[v] = p.
    void relate(int u, int v, int p) {
        auto [ru, pu] = find(u);
        auto [rv, pv] = find(v);
        if (ru == rv) {
            if ((pu ^ pv) != p) contradiction = true;
            return;
        }
        parent[rv] = ru;
        to_parent[rv] = (std::uint8_t)(pu ^ pv ^ p);
    }
};

// succ0(v, u): neighbor following u in the reference rotation at v.
int succ0(const CubicGraph& g, int v, int u) {
    return g.adj[v][(g.slot_of(v, u) + 1) % 3];
}

// For the cycle vertex v with neighbors prev and next in traversal order,
// the flip bit that lets the cycle pass v as a face in this direction:
// 0 iff the reference rotation already has next right after prev.
int face_bit(const CubicGraph& g, int prev, int v, int next) {
    return succ0(g, v, prev) == next ? 0 : 1;
}

template <size_t L>
void add_cycle_constraints(const CubicGraph& g, ParityUnionFind& uf, const std::array<int, L>& c) {
    std::array<int, L> d;
    for (size_t i = 0; i < L; ++i)
        d[i] = face_bit(g, c[(i + L - 1) % L], c[i], c[(i + 1) % L]);
    for (size_t i = 0; i < L; ++i)
        uf.relate(c[i], c[(i + 1) % L], d[i] ^ d[(i + 1) % L]);
}

}  // namespace

std::optional<ParityState> compute_classes(const CubicGraph& g, const SmallCycleSet& cycles) {
    ParityUnionFind uf(g.n);
    for (const auto& t : cycles.triangles) add_cycle_constraints(g, uf, t);
    if (g.n > 4)  // K4's 4-cycles are exempt from the facial requirement
        for (const auto& q : cycles.quads) add_cycle_constraints(g, uf, q);
    for (const auto& p : cycles.pentagons) add_cycle_constraints(g, uf, p);
    if (uf.contradiction) return std::nullopt;

    ParityState st;
    st.class_of.assign(g.n, -1);
    st.parity.assign(g.n, 0);
    st.flips.assign(g.n, 0);
    std::vector<std::uint8_t> root_parity(g.n, 0);  // parity of the class rep vs the uf root
    for (int v = 0; v < g.n; ++v) {
        auto [root, par] = uf.find(v);
        if (st.class_of[root] < 0) {
            st.class_of[root] = (int)st.classes.size();
            st.classes.emplace_back();
            root_parity[root] = (std::uint8_t)par;  // v is the smallest member
        }
        int c = st.class_of[root];
        st.class_of[v] = c;
        st.classes[c].push_back(v);
        st.parity[v] = (std::uint8_t)(par ^ root_parity[root]);
        st.flips[v] = st.parity[v];
    }
    return st;
}

// ---------------------------------------------------------------------------
// Search engine

namespace {

struct HexInfo {
    std::array<int, 6> verts;
    std::array<std::uint8_t, 6> base;  // side bit under all-zero flips
};

class Engine {
public:
    Engine(const CubicGraph& g, const SmallCycleSet& cycles, ParityState st)
        : rot{g, st.flips}, state(std::move(st)) {
        class_flip.assign(state.classes.size(), 0);
        class_fixed.assign(state.classes.size(), 0);
        for (size_t c = 0; c < state.classes.size(); ++c) {
            int rep = state.classes[c][0];
            class_flip[c] = state.flips[rep];  // parity[rep] == 0
            class_fixed[c] = state.fixed.test(rep);
            if (class_fixed[c])
                for (int v : state.classes[c]) fixed_verts.add(v);
        }
        build_hexagons(g, cycles);
    }

    bool propagate_all() {
        std::vector<int> seeds(hexes.size());
        for (size_t i = 0; i < hexes.size(); ++i) seeds[i] = (int)i;
        return propagate(seeds);
    }

    void export_state(ParityState& out) const {
        out.flips = rot.flips;
        out.fixed = fixed_verts;
    }

    EnumerateResult run(const SearchConfig& cfg_in) {
        cfg = cfg_in;
        // Pin the largest class (ties: smallest contained vertex) to flip 0.
        int anchor = 0;
        for (size_t c = 1; c < state.classes.size(); ++c)
            if (state.classes[c].size() > state.classes[anchor].size()) anchor = (int)c;
        result.summary = {};
        state.anchor = anchor;
        set_class(anchor, 0, true);
        // Remaining nontrivial classes in decreasing size, ties by smallest member.
        for (size_t c = 0; c < state.classes.size(); ++c)
            if ((int)c != anchor && state.classes[c].size() > 1) branch_order.push_back((int)c);
        std::stable_sort(branch_order.begin(), branch_order.end(), [&](int a, int b) {
            if (state.classes[a].size() != state.classes[b].size())
                return state.classes[a].size() > state.classes[b].size();
            return state.classes[a][0] < state.classes[b][0];
        });
        if (propagate_all()) recurse(0, 0);
        return std::move(result);
    }

    EnumerateResult result;

private:
    RotationSystem rot;
    ParityState state;
    std::vector<std::uint8_t> class_flip;
    std::vector<std::uint8_t> class_fixed;
    VertexSet fixed_verts;
    std::vector<int> branch_order;
    SearchConfig cfg;

    std::vector<HexInfo> hexes;
    std::vector<std::vector<int>> hexes_of_vertex;

    struct TrailEntry {
        int cls;
        std::uint8_t prev_flip;
        std::uint8_t prev_fixed;
    };
    std::vector<TrailEntry> trail;

    void build_hexagons(const CubicGraph& g, const SmallCycleSet& cycles) {
        hexes_of_vertex.assign(g.n, {});
        for (const auto& h : cycles.hexagons) {
            HexInfo info;
            info.verts = h.cycle;
            for (int i = 0; i < 6; ++i) {
                int v = h.cycle[i];
                int next = h.cycle[(i + 1) % 6];
                info.base[i] = (std::uint8_t)(succ0(g, v, next) == h.third[i] ? 1 : 0);
                hexes_of_vertex[v].push_back((int)hexes.size());
            }
            hexes.push_back(info);
        }
    }

    void set_class(int c, std::uint8_t val, bool fix) {
        trail.push_back({c, class_flip[c], class_fixed[c]});
        if (class_flip[c] != val) {
            class_flip[c] = val;
            for (int v : state.classes[c]) rot.flips[v] ^= 1;
        }
        if (fix && !class_fixed[c]) {
            class_fixed[c] = 1;
            for (int v : state.classes[c]) fixed_verts.add(v);
        }
    }

    void undo_to(size_t mark) {
        while (trail.size() > mark) {
            TrailEntry e = trail.back();
            trail.pop_back();
            if (class_flip[e.cls] != e.prev_flip) {
                class_flip[e.cls] = e.prev_flip;
                for (int v : state.classes[e.cls]) rot.flips[v] ^= 1;
            }
            if (class_fixed[e.cls] && !e.prev_fixed) {
                class_fixed[e.cls] = 0;
                for (int v : state.classes[e.cls]) fixed_verts.remove(v);
            }
        }
    }

    int hex_word(const HexInfo& h) const {
        int w = 0;
        for (int i = 0; i < 6; ++i)
            w |= (rot.flips[h.verts[i]] ^ h.base[i]) << i;
        return w;
    }

    // Work-queue fixpoint over the given hexagons; forced flips extend the
    // queue. False on conflict.
    bool propagate(std::vector<int> queue) {
        std::vector<std::uint8_t> queued(hexes.size(), 0);
        for (int h : queue) queued[h] = 1;
        while (!queue.empty()) {
            int hi = queue.back();
            queue.pop_back();
            queued[hi] = 0;
            const HexInfo& h = hexes[hi];
            int free_class = -1, free_mask = 0, free_count = 0;
            for (int i = 0; i < 6; ++i) {
                int c = state.class_of[h.verts[i]];
                if (class_fixed[c]) continue;
                if (c != free_class) {
                    if (free_class != -1 && free_count == 1) {
                        free_count = 2;  // a second distinct free class
                    } else if (free_class == -1) {
                        free_class = c;
                        free_count = 1;
                    }
                }
                if (c == free_class) free_mask |= 1 << i;
            }
            if (free_count >= 2) continue;
            int w = hex_word(h);
            if (free_count == 0) {
                if (!hexagon_word_allowed(w)) return false;
                continue;
            }
            bool cur_ok = hexagon_word_allowed(w);
            bool alt_ok = hexagon_word_allowed(w ^ free_mask);
            if (!cur_ok && !alt_ok) return false;
            if (cur_ok && alt_ok) continue;
            set_class(free_class, (std::uint8_t)(class_flip[free_class] ^ (alt_ok ? 1 : 0)), true);
            for (int v : state.classes[free_class])
                for (int hj : hexes_of_vertex[v])
                    if (!queued[hj]) {
                        queued[hj] = 1;
                        queue.push_back(hj);
                    }
        }
        return true;
    }

    bool propagate_from_vertices(const std::vector<int>& verts) {
        std::vector<int> seeds;
        for (int v : verts)
            for (int h : hexes_of_vertex[v]) seeds.push_back(h);
        std::sort(seeds.begin(), seeds.end());
        seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
        return propagate(std::move(seeds));
    }

    // Backtrack test at internal nodes. Complete obstruction search only
    // close to the root; elsewhere just the first obstruction found in
    // canonical scan order.
    bool fixed_obstruction_exists(int depth) {
        if (depth <= 2) {
            auto ob = find_obstruction(rot, fixed_verts);
            return ob && ob->vertex_set.subset_of(fixed_verts);
        }
        auto ob = first_obstruction(rot);
        return ob && ob->vertex_set.subset_of(fixed_verts);
    }

    void recurse(size_t bidx, int depth) {
        while (bidx < branch_order.size() && class_fixed[branch_order[bidx]]) ++bidx;
        if (bidx == branch_order.size()) {
            leaf(depth);
            return;
        }
        if (fixed_obstruction_exists(depth)) return;
        int c = branch_order[bidx];
        for (int t = 0; t < 2; ++t) {
            std::uint8_t val = (std::uint8_t)(class_flip[c] ^ t);
            size_t mark = trail.size();
            set_class(c, val, true);
            if (propagate_from_vertices(state.classes[c])) recurse(bidx + 1, depth + 1);
            undo_to(mark);
        }
    }

    void leaf(int depth) {
        auto ob = find_obstruction(rot, fixed_verts);
        std::vector<int> s;
        if (!ob) {
            record();
            for (int v = 0; v < rot.graph.n; ++v)
                if (!fixed_verts.test(v)) s.push_back(v);
        } else {
            if (ob->vertex_set.subset_of(fixed_verts)) return;  // dead branch
            for (int v : ob->vertices)
                if (!fixed_verts.test(v)) s.push_back(v);
        }
        std::vector<int> touched;
        for (size_t i = 0; i < s.size(); ++i) {
            size_t mark = trail.size();
            touched.clear();
            for (size_t j = 0; j < i; ++j) {
                int c = state.class_of[s[j]];
                set_class(c, class_flip[c], true);  // freeze at current state
                touched.push_back(s[j]);
            }
            int c = state.class_of[s[i]];
            set_class(c, (std::uint8_t)(class_flip[c] ^ 1), true);
            touched.push_back(s[i]);
            if (propagate_from_vertices(touched)) leaf(depth + 1);
            undo_to(mark);
        }
    }

    void record() {
        int g = trace_faces(rot).genus;
        if (cfg.max_genus && g > *cfg.max_genus) return;
        result.summary.add(g);
        if (!cfg.count_only) {
            result.embeddings.push_back(rot);
            if (cfg.emit_mirrors) result.embeddings.push_back(mirror(rot));
        }
    }
};

}  // namespace

bool hexagon_propagate(const CubicGraph& g, const SmallCycleSet& cycles, ParityState& state) {
    Engine e(g, cycles, state);
    bool ok = e.propagate_all();
    if (ok) e.export_state(state);
    return ok;
}

EnumerateResult enumerate_polyhedral(const CubicGraph& g, const SearchConfig& cfg) {
    EnumerateResult res;
    res.connectivity = connectivity_class(g);
    if (res.connectivity != Connectivity::three_connected) {
        res.reason = EnumerateReason::not_three_connected;
        return res;
    }
    SmallCycleSet cycles = small_cycles(g);
    auto st = compute_classes(g, cycles);
    if (!st) {
        res.parity_infeasible = true;
        return res;
    }
    Engine e(g, cycles, std::move(*st));
    EnumerateResult run_res = e.run(cfg);
    run_res.connectivity = res.connectivity;
    return run_res;
}

EmbeddingSummary summarize(const std::vector<RotationSystem>& list) {
    EmbeddingSummary s;
    for (const auto& r : list) s.add(genus(r));
    return s;
}

}  // namespace polyemb
