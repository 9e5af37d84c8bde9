#pragma once

#include <optional>
#include <string_view>

#include "polyemb/embedding.hpp"

namespace polyemb {

/// Identification tuple for the star product: the i-th neighbor of the
/// deleted host vertex is joined to guest[i].
struct StarIdentification {
    std::array<int, 3> host;
    std::array<int, 3> guest;
};

/// Deletes v from the host and v2 from the guest and joins the hanging
/// edges by the identification. Without an explicit identification the
/// neighbors are matched in stored order. Result vertex ids: host vertices
/// except v in order, then guest vertices except v2.
CubicGraph star_product(const CubicGraph& host, int v, const CubicGraph& guest, int v2,
                        const std::optional<StarIdentification>& ident = std::nullopt);

/// Embedded star product. The new edges take the rotation slots of the
/// deleted ones, so the genera add and polyhedrality is preserved. The
/// identification must pair the rotation (a,b,c) around v with a rotation
/// (a',c',b') around v2; by default it is induced from the two rotations.
RotationSystem star_product_embedded(const RotationSystem& host, int v,
                                     const RotationSystem& guest, int v2,
                                     const std::optional<StarIdentification>& ident = std::nullopt);

struct HexTorus {
    RotationSystem rs;
    std::vector<std::uint8_t> part;  // bipartition class per vertex
    VertexSet part_zero;             // vertices of class 0
};

/// Toroidal hexagonal tiling with k*k hexagons on 2*k*k vertices (k >= 3),
/// bipartite, genus 1, polyhedral. Vertices sit on a k x k parallelogram
/// with wraparound: cell (i,j) holds a class-0 vertex 2*(i*k+j) and a
/// class-1 vertex 2*(i*k+j)+1; the class-0 vertex of cell (i,j) joins the
/// class-1 vertices of cells (i,j), (i,j+1) and (i+1,j).
HexTorus hex_torus(int k);

/// Fixed adjacency tables for k4, prism, k33, petersen, heawood, coxeter.
CubicGraph named_graph(std::string_view name);

/// Largest integer g with g <= (n - sqrt(12n+1) + 3) / 4, computed in
/// integer arithmetic. Upper bound for the genus of a polyhedral embedding
/// of a cubic graph on n vertices.
int max_genus_bound(int n);

}  // namespace polyemb
