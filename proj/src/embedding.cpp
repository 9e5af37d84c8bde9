#include "polyemb/embedding.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

namespace polyemb {

RotationSystem reference_rotation(CubicGraph g) {
    int n = g.n;
    return RotationSystem{std::move(g), std::vector<std::uint8_t>(n, 0)};
}

std::vector<int> dart_inverse(const CubicGraph& g) {
    std::vector<int> inv(3 * g.n);
    for (int v = 0; v < g.n; ++v)
        for (int s = 0; s < 3; ++s) {
            int u = g.adj[v][s];
            inv[dart_of(v, s)] = dart_of(u, g.slot_of(u, v));
        }
    return inv;
}

FaceSet trace_faces(const RotationSystem& r) {
    const int nd = 3 * r.graph.n;
    std::vector<int> inv = dart_inverse(r.graph);
    FaceSet out;
    out.face_of.assign(nd, -1);
    for (int start = 0; start < nd; ++start) {
        if (out.face_of[start] >= 0) continue;
        Face f;
        int d = start;
        do {
            out.face_of[d] = (int)out.faces.size();
            f.darts.push_back(d);
            int tail = dart_tail(d);
            f.walk.push_back(tail);
            f.verts.add(tail);
            d = next_dart(r, inv[d]);
        } while (d != start);
        out.faces.push_back(std::move(f));
    }
    int n = r.graph.n;
    int e = 3 * n / 2;
    int chi = n - e + (int)out.faces.size();
    out.genus = (2 - chi) / 2;
    return out;
}

int genus(const RotationSystem& r) { return trace_faces(r).genus; }

bool is_polyhedral(const RotationSystem& r) {
    FaceSet fs = trace_faces(r);
    // Condition 1: no vertex twice in a facial walk.
    std::vector<int> mark(r.graph.n, -1);
    for (size_t i = 0; i < fs.faces.size(); ++i) {
        for (int v : fs.faces[i].walk) {
            if (mark[v] == (int)i) return false;
            mark[v] = (int)i;
        }
    }
    // Condition 2: no two faces share more than two vertices.
    for (size_t i = 0; i < fs.faces.size(); ++i)
        for (size_t j = i + 1; j < fs.faces.size(); ++j)
            if (intersect_count(fs.faces[i].verts, fs.faces[j].verts) > 2) return false;
    return true;
}

namespace {

// Ascending-vertex-list comparison; shorter prefix wins ties.
bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Obstruction make_repeated(const FaceSet& fs, int face, int vertex, int from, int to) {
    const auto& walk = fs.faces[face].walk;
    int len = (int)walk.size();
    Obstruction ob;
    ob.kind = Obstruction::Kind::repeated_vertex;
    ob.face_a = face;
    ob.vertex = vertex;
    for (int p = from;; p = (p + 1) % len) {
        ob.segment.push_back(walk[p]);
        if (p == to) break;
    }
    for (int v : ob.segment)
        if (!ob.vertex_set.test(v)) {
            ob.vertex_set.add(v);
        }
    ob.vertices = ob.vertex_set.to_vector();
    return ob;
}

Obstruction make_face_pair(const FaceSet& fs, int fa, int fb) {
    Obstruction ob;
    ob.kind = Obstruction::Kind::face_pair;
    ob.face_a = fa;
    ob.face_b = fb;
    ob.vertex_set = fs.faces[fa].verts | fs.faces[fb].verts;
    ob.vertices = ob.vertex_set.to_vector();
    return ob;
}

int unfixed_count(const Obstruction& ob, const VertexSet& fixed) {
    int cnt = 0;
    for (int v : ob.vertices)
        if (!fixed.test(v)) ++cnt;
    return cnt;
}

// Enumerates obstruction candidates in a fixed scan order: repeated-vertex
// segments face by face, then face pairs lexicographically. The callback
// returns true to stop early.
template <typename Fn>
void scan_obstructions(const RotationSystem& r, const FaceSet& fs, Fn&& visit) {
    const int n = r.graph.n;
    std::vector<std::vector<int>> occ(n);
    for (size_t i = 0; i < fs.faces.size(); ++i) {
        const auto& walk = fs.faces[i].walk;
        for (int v : walk) occ[v].clear();
        for (int p = 0; p < (int)walk.size(); ++p) occ[walk[p]].push_back(p);
        // Deterministic order: vertices by first occurrence.
        for (int p = 0; p < (int)walk.size(); ++p) {
            int v = walk[p];
            const auto& ps = occ[v];
            if (ps.size() < 2 || ps[0] != p) continue;
            for (size_t t = 0; t < ps.size(); ++t) {
                int from = ps[t], to = ps[(t + 1) % ps.size()];
                if (visit(make_repeated(fs, (int)i, v, from, to))) return;
            }
        }
    }
    for (size_t i = 0; i < fs.faces.size(); ++i)
        for (size_t j = i + 1; j < fs.faces.size(); ++j)
            if (intersect_count(fs.faces[i].verts, fs.faces[j].verts) >= 3)
                if (visit(make_face_pair(fs, (int)i, (int)j))) return;
}

}  // namespace

std::optional<Obstruction> find_obstruction(const RotationSystem& r, const VertexSet& fixed) {
    FaceSet fs = trace_faces(r);
    std::optional<Obstruction> best;
    int best_unfixed = -1;
    bool done = false;
    scan_obstructions(r, fs, [&](Obstruction ob) {
        int uf = unfixed_count(ob, fixed);
        if (uf == 0) {
            best = std::move(ob);
            done = true;
            return true;  // backtrack signal, stop scanning
        }
        if (!best || uf < best_unfixed ||
            (uf == best_unfixed && lex_less(ob.vertices, best->vertices))) {
            best = std::move(ob);
            best_unfixed = uf;
        }
        return false;
    });
    (void)done;
    return best;
}

std::optional<Obstruction> first_obstruction(const RotationSystem& r) {
    FaceSet fs = trace_faces(r);
    std::optional<Obstruction> first;
    scan_obstructions(r, fs, [&](Obstruction ob) {
        first = std::move(ob);
        return true;
    });
    return first;
}

bool dual_is_simple(const RotationSystem& r) {
    FaceSet fs = trace_faces(r);
    std::vector<int> inv = dart_inverse(r.graph);
    std::vector<std::pair<int, int>> dual_edges;
    for (int d = 0; d < 3 * r.graph.n; ++d) {
        if (d > inv[d]) continue;
        int fa = fs.face_of[d], fb = fs.face_of[inv[d]];
        if (fa == fb) return false;  // loop
        dual_edges.emplace_back(std::min(fa, fb), std::max(fa, fb));
    }
    std::sort(dual_edges.begin(), dual_edges.end());
    return std::adjacent_find(dual_edges.begin(), dual_edges.end()) == dual_edges.end();
}

RotationSystem mirror(RotationSystem r) {
    for (auto& f : r.flips) f ^= 1;
    return r;
}

RotationSystem petrie_switch(RotationSystem r, const VertexSet& s) {
    for (int v = 0; v < r.graph.n; ++v)
        if (s.test(v)) r.flips[v] ^= 1;
    return r;
}

bool same_embedding(const RotationSystem& a, const RotationSystem& b) {
    if (a.graph.n != b.graph.n) return false;
    for (int v = 0; v < a.graph.n; ++v) {
        auto ra = a.rotation(v);
        auto rb = b.rotation(v);
        // Compare as cyclic orders: align rb to start at ra[0].
        int pos = -1;
        for (int s = 0; s < 3; ++s)
            if (rb[s] == ra[0]) pos = s;
        if (pos < 0) return false;
        if (rb[(pos + 1) % 3] != ra[1] || rb[(pos + 2) % 3] != ra[2]) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Validators

namespace {

// Canonical form of a cyclic vertex sequence: smallest vertex first,
// smaller neighbor second (same convention as small_cycles).
std::vector<int> canonical_cycle(const std::vector<int>& c) {
    int len = (int)c.size();
    int mi = (int)(std::min_element(c.begin(), c.end()) - c.begin());
    std::vector<int> fwd(len), rev(len);
    for (int i = 0; i < len; ++i) {
        fwd[i] = c[(mi + i) % len];
        rev[i] = c[(mi - i % len + len) % len];
    }
    return fwd[1] < rev[1] ? fwd : rev;
}

template <typename Seq>
std::vector<int> to_vec(const Seq& s) {
    return std::vector<int>(s.begin(), s.end());
}

}  // namespace

bool small_cycles_facial(const RotationSystem& r, const SmallCycleSet& cycles) {
    FaceSet fs = trace_faces(r);
    std::vector<std::vector<int>> facial;
    for (const auto& f : fs.faces)
        if (f.walk.size() <= 6) facial.push_back(canonical_cycle(f.walk));
    std::sort(facial.begin(), facial.end());
    auto is_face = [&](const std::vector<int>& c) {
        return std::binary_search(facial.begin(), facial.end(), canonical_cycle(c));
    };
    for (const auto& t : cycles.triangles)
        if (!is_face(to_vec(t))) return false;
    if (r.graph.n > 4)
        for (const auto& q : cycles.quads)
            if (!is_face(to_vec(q))) return false;
    for (const auto& p : cycles.pentagons)
        if (!is_face(to_vec(p))) return false;
    return true;
}

bool hexagon_rule_holds(const RotationSystem& r, const SmallCycleSet& cycles) {
    for (const auto& h : cycles.hexagons) {
        // side bit: 1 iff the third edge at cycle[i] is right of the cycle,
        // i.e. the rotation at cycle[i] reads (next, third, prev).
        int word = 0;
        for (int i = 0; i < 6; ++i) {
            int v = h.cycle[i];
            int next = h.cycle[(i + 1) % 6];
            auto rot = r.rotation(v);
            int s = 0;
            while (rot[s] != next) ++s;
            if (rot[(s + 1) % 3] == h.third[i]) word |= 1 << i;
        }
        if (word == 0 || word == 63) continue;  // facial
        if (std::popcount((unsigned)word) != 3) return false;
        bool three_consecutive = false;
        for (int i = 0; i < 6; ++i) {
            int m = (1 << i) | (1 << ((i + 1) % 6)) | (1 << ((i + 2) % 6));
            if ((word & m) == m || (word & m) == 0) three_consecutive = true;
        }
        if (three_consecutive) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// .rot I/O

void write_rot(std::ostream& os, const RotationSystem& r) {
    os << "n " << r.graph.n << " genus " << genus(r) << '\n';
    for (int v = 0; v < r.graph.n; ++v) {
        auto rot = r.rotation(v);
        os << v << ": " << rot[0] << ' ' << rot[1] << ' ' << rot[2] << '\n';
    }
}

std::string write_rot_string(const RotationSystem& r) {
    std::ostringstream ss;
    write_rot(ss, r);
    return ss.str();
}

namespace {

std::string strip(const std::string& line) {
    std::string s = line;
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.pop_back();
    size_t b = s.find_first_not_of(" \t");
    return b == std::string::npos ? std::string{} : s.substr(b);
}

}  // namespace

RotationSystem parse_rot_block(const std::vector<std::string>& lines) {
    std::istringstream head(lines[0]);
    std::string kw_n, kw_genus;
    int n = 0, declared_genus = 0;
    head >> kw_n >> n >> kw_genus >> declared_genus;
    if (kw_n != "n" || kw_genus != "genus" || head.fail())
        throw RotError("bad .rot header: " + lines[0]);
    if (n < 4 || n > kMaxVertices) throw RotError("unsupported vertex count in .rot block");
    if ((int)lines.size() != n + 1)
        throw RotError("expected " + std::to_string(n) + " rotation lines, got " +
                       std::to_string(lines.size() - 1));

    std::vector<std::array<int, 3>> adj(n, {-1, -1, -1});
    std::vector<char> seen(n, 0);
    for (size_t i = 1; i < lines.size(); ++i) {
        std::istringstream ls(lines[i]);
        int v;
        char colon;
        int a, b, c;
        ls >> v >> colon >> a >> b >> c;
        if (ls.fail() || colon != ':') throw RotError("bad rotation line: " + lines[i]);
        std::string extra;
        if (ls >> extra) throw RotError("vertex " + std::to_string(v) + " does not have degree 3");
        if (v < 0 || v >= n) throw RotError("unknown vertex id " + std::to_string(v));
        if (seen[v]) throw RotError("duplicate rotation line for vertex " + std::to_string(v));
        seen[v] = 1;
        adj[v] = {a, b, c};
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw RotError("missing rotation line for vertex " + std::to_string(v));

    CubicGraph g;
    try {
        g = make_cubic_graph(n, std::move(adj));
    } catch (const std::invalid_argument& e) {
        throw RotError(std::string("invalid rotation block: ") + e.what());
    }
    RotationSystem r = reference_rotation(std::move(g));
    int actual = genus(r);
    if (actual != declared_genus)
        throw RotError("declared genus " + std::to_string(declared_genus) +
                       " but traced genus " + std::to_string(actual));
    return r;
}

std::vector<std::vector<std::string>> split_rot_blocks(std::istream& is) {
    std::vector<std::vector<std::string>> blocks;
    std::vector<std::string> block;
    std::string line;
    while (std::getline(is, line)) {
        std::string s = strip(line);
        if (s.empty()) {
            if (!block.empty()) blocks.push_back(std::move(block));
            block.clear();
        } else {
            block.push_back(std::move(s));
        }
    }
    if (!block.empty()) blocks.push_back(std::move(block));
    return blocks;
}

std::vector<RotationSystem> parse_rot(std::istream& is) {
    std::vector<RotationSystem> out;
    for (const auto& block : split_rot_blocks(is)) out.push_back(parse_rot_block(block));
    return out;
}

}  // namespace polyemb
