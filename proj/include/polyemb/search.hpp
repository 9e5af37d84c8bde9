#pragma once

#include <map>
#include <optional>

#include "polyemb/embedding.hpp"

namespace polyemb {

/// Per-vertex flip state organized into parity-linked equivalence classes.
/// Two vertices share a class iff they lie on a common 3-, 4- or induced
/// 5-cycle (transitive closure); the relative parity records how their
/// flip bits are linked by the requirement that those cycles be faces.
struct ParityState {
    std::vector<std::vector<int>> classes;  // members ascending; ids by smallest member
    std::vector<int> class_of;              // vertex -> class id
    std::vector<std::uint8_t> parity;       // flip relative to the class representative
    std::vector<std::uint8_t> flips;        // current flips against the reference rotation
    VertexSet fixed;                        // vertices frozen at the current depth
    int anchor = -1;                        // pinned class, -1 before the search pins one
};

/// Builds the parity classes from the small cycles. Returns nullopt when the
/// cycle constraints contradict each other, in which case the graph has no
/// polyhedral embedding in any genus.
std::optional<ParityState> compute_classes(const CubicGraph& g, const SmallCycleSet& cycles);

/// Applies the induced-6-cycle rule to every hexagon until a fixpoint:
/// when all but one class touching a hexagon is fixed and only one flip
/// state of the free class keeps the hexagon's side word admissible, the
/// forced flip is applied and the class fixed. Returns false on conflict
/// (state contents are then unspecified).
bool hexagon_propagate(const CubicGraph& g, const SmallCycleSet& cycles, ParityState& state);

/// Side word admissibility for an induced hexagon: all six third-edges on
/// one side (facial) or three per side with neither side's attachment
/// vertices consecutive on the cycle.
bool hexagon_word_allowed(int word);

struct SearchConfig {
    bool count_only = false;           // summary only, drop the systems
    std::optional<int> max_genus;      // filter emitted embeddings (and the summary)
    bool emit_mirrors = false;         // also emit the mirror of each embedding found
};

struct EmbeddingSummary {
    std::map<int, long long> per_genus;
    long long total = 0;
    bool has_any = false;
    bool multi_embedding = false;
    bool multi_genus = false;
    std::optional<int> min_search_genus;

    void add(int genus);
    EmbeddingSummary& operator+=(const EmbeddingSummary& o);
};

enum class EnumerateReason { ok, not_three_connected };

struct EnumerateResult {
    EnumerateReason reason = EnumerateReason::ok;
    Connectivity connectivity = Connectivity::three_connected;
    bool parity_infeasible = false;
    std::vector<RotationSystem> embeddings;  // up to mirror unless emit_mirrors
    EmbeddingSummary summary;                // always up to mirror
};

/// Enumerates all polyhedral embeddings of g up to mirror images by
/// obstruction-guided branch and bound over the parity classes.
EnumerateResult enumerate_polyhedral(const CubicGraph& g, const SearchConfig& cfg = {});

/// Per-genus histogram of a list of rotation systems.
EmbeddingSummary summarize(const std::vector<RotationSystem>& list);

}  // namespace polyemb
