#pragma once

#include <iosfwd>
#include <optional>

#include "polyemb/cubic_graph.hpp"

namespace polyemb {

/// A combinatorial embedding of a cubic graph in an orientable surface.
/// The rotation at v is the stored neighbor order of the graph when
/// flips[v] == 0 and the reversed cyclic order when flips[v] == 1.
/// Rotations are read clockwise.
struct RotationSystem {
    CubicGraph graph;
    std::vector<std::uint8_t> flips;

    /// Actual cyclic order at v, linearized to start at adj[v][0].
    std::array<int, 3> rotation(int v) const {
        const auto& a = graph.adj[v];
        return flips[v] ? std::array<int, 3>{a[0], a[2], a[1]} : a;
    }
};

RotationSystem reference_rotation(CubicGraph g);

// Directed edges ("darts") are indexed as 3*vertex + slot, where slot
// indexes the stored adjacency. This makes the dart table independent of
// the flip bits.
inline int dart_of(int v, int slot) { return 3 * v + slot; }
inline int dart_tail(int dart) { return dart / 3; }
inline int dart_head(const CubicGraph& g, int dart) { return g.adj[dart / 3][dart % 3]; }

/// inv[d] = the oppositely directed edge of d.
std::vector<int> dart_inverse(const CubicGraph& g);

/// Next dart in rotation order around the tail of d.
inline int next_dart(const RotationSystem& r, int d) {
    int s = d % 3;
    return d - s + (r.flips[d / 3] ? (s + 2) % 3 : (s + 1) % 3);
}

struct Face {
    std::vector<int> darts;  // starts at the smallest dart of the face
    std::vector<int> walk;   // tail vertices, aligned with darts
    VertexSet verts;
};

struct FaceSet {
    std::vector<Face> faces;   // ordered by smallest dart
    std::vector<int> face_of;  // dart -> face index
    int genus = 0;
};

/// Partitions all 3n darts into faces and computes the genus from the
/// Euler formula.
FaceSet trace_faces(const RotationSystem& r);

int genus(const RotationSystem& r);

/// True iff no vertex repeats in a facial walk and no two faces share
/// more than two vertices (bitset intersection test).
bool is_polyhedral(const RotationSystem& r);

/// Witness of non-polyhedrality.
struct Obstruction {
    enum class Kind { repeated_vertex, face_pair };
    Kind kind;
    int face_a = -1;
    int face_b = -1;            // face_pair only
    int vertex = -1;            // repeated_vertex only
    std::vector<int> segment;   // facial-walk segment between the two occurrences
    std::vector<int> vertices;  // sorted vertex set of the obstruction
    VertexSet vertex_set;
};

/// None iff the embedding is polyhedral. Otherwise picks deterministically:
/// first any obstruction whose vertices are all in `fixed` (backtrack
/// signal), else the one with the fewest unfixed vertices, ties broken by
/// the lexicographically smallest vertex set.
std::optional<Obstruction> find_obstruction(const RotationSystem& r, const VertexSet& fixed);

/// Budgeted variant: the first obstruction found scanning faces in
/// canonical order (repeated-vertex segments face by face, then face
/// pairs lexicographically), without weighing alternatives.
std::optional<Obstruction> first_obstruction(const RotationSystem& r);

/// Independent polyhedrality route: builds the dual multigraph and checks
/// it has no loops and no parallel edges.
bool dual_is_simple(const RotationSystem& r);

/// Reverses the rotation at every vertex.
RotationSystem mirror(RotationSystem r);

/// Reverses the rotation exactly at the vertices in s.
RotationSystem petrie_switch(RotationSystem r, const VertexSet& s);

/// Equality as embeddings: same graph order and the same cyclic neighbor
/// order at every vertex (independent of the flip/reference split).
bool same_embedding(const RotationSystem& a, const RotationSystem& b);

// ---------------------------------------------------------------------------
// Validators for enumerated embeddings

/// Every 3-cycle, 4-cycle and induced 5-cycle is a face (4-cycles exempt
/// when the graph is K4).
bool small_cycles_facial(const RotationSystem& r, const SmallCycleSet& cycles);

/// Every induced 6-cycle is a face, or has exactly three third-edges on
/// each side with neither side's attachment vertices consecutive.
bool hexagon_rule_holds(const RotationSystem& r, const SmallCycleSet& cycles);

// ---------------------------------------------------------------------------
// .rot format: "n <count> genus <g>" header, then one line "v: a b c" per
// vertex giving the clockwise rotation. '#' starts a comment, blank lines
// separate blocks.

class RotError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_rot(std::ostream& os, const RotationSystem& r);
std::string write_rot_string(const RotationSystem& r);

/// Splits a .rot stream into blocks of stripped non-empty lines.
std::vector<std::vector<std::string>> split_rot_blocks(std::istream& is);

/// Parses one block. The header genus is re-verified against a trace.
RotationSystem parse_rot_block(const std::vector<std::string>& lines);

/// Parses every block in the stream. The header genus is re-verified.
std::vector<RotationSystem> parse_rot(std::istream& is);

}  // namespace polyemb
