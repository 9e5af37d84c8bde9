#pragma once

#include <map>

#include "polyemb/embedding.hpp"

namespace polyemb {

/// Per-genus census of all 2^(n-1) rotation systems of a graph (vertex 0's
/// rotation fixed at the reference, i.e. mirror pairs counted once).
struct GenusProfile {
    std::map<int, long long> counts;      // genus -> rotation systems
    std::map<int, long long> polyhedral;  // genus -> polyhedral ones
    int min_genus = -1;
    long long total = 0;
};

/// All polyhedral rotation systems with vertex 0 fixed at the reference
/// rotation, by plain exhaustion with an independently written face tracer
/// and pair check. This is the trust anchor for the search module and
/// deliberately shares none of its code paths.
std::vector<RotationSystem> brute_force_polyhedral(const CubicGraph& g);

/// Minimum genus over all rotation systems (exhaustive; early exit at 0).
int min_genus(const CubicGraph& g);

GenusProfile genus_profile(const CubicGraph& g);

/// All connected cubic graphs on n vertices, one per isomorphism class,
/// grown from K4 by repeated edge insertion and deduplicated by canonical
/// code. Output sorted by code.
std::vector<CubicGraph> gen_cubic(int n);

}  // namespace polyemb
