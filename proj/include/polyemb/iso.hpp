#pragma once

#include <string>

#include "polyemb/embedding.hpp"

namespace polyemb {

/// Canonical byte string; equal codes identify isomorphic objects within
/// the chosen variant.
using CanonicalCode = std::string;

std::string to_hex(const CanonicalCode& code);

/// Canonical form of an embedded graph: lexicographic minimum over all
/// 3n start darts (and, with include_mirror, both orientations) of the
/// BFS relabeling code of the rotation system.
CanonicalCode canon_embedded(const RotationSystem& r, bool include_mirror);

/// Canonical form of the abstract graph, via color refinement plus
/// individualization backtracking. Invariant under relabeling.
CanonicalCode canon_graph(const CubicGraph& g);

}  // namespace polyemb
