#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hyperpath/hypergraph.hpp"

namespace hyperpath {

struct EnumerationStats {
    std::uint64_t solutions_emitted = 0;
    std::uint64_t recursion_nodes = 0;
    std::uint64_t max_depth = 0;
    std::uint64_t connectivity_checks = 0;
    std::uint64_t max_checks_between_outputs = 0;
};

/// Where one solution fell in a run: its 0-based output index, the number
/// of connectivity checks since the previous output (or since the start),
/// and the recursion depth it was emitted at.
struct EmissionInfo {
    std::uint64_t index = 0;
    std::uint64_t checks_since_last = 0;
    std::uint64_t depth = 0;
};

/// Solutions arrive as ascending arc-id sets. Return false to cancel: no
/// further sink calls happen and the enumeration unwinds.
using HyperpathSink = std::function<bool(const std::vector<ArcId>&)>;
using InstrumentedSink = std::function<bool(const std::vector<ArcId>&, const EmissionInfo&)>;

struct ContractionResult {
    DirectedHypergraph graph;        // one vertex fewer; isolated vertices kept
    std::vector<VertexId> targets;   // updated target set, outside the sources
    std::vector<ArcId> arc_origin;   // child arc id -> parent arc id
};

/**
 * Commits to arc `ak`, the include branch of the enumeration: its head
 * vertex is removed, every arc headed there is deleted, tails that used
 * the head are rewritten to use ak's tails instead, and ak's tails join
 * the target set (sources and the head itself excluded). Arcs whose
 * rewritten tail would contain their own head are dropped; no hyperpath
 * can use such an arc. Throws HeadInSources when ak's head is a source.
 */
ContractionResult contract(const DirectedHypergraph& d, const std::vector<VertexId>& sources,
                           const std::vector<VertexId>& targets, ArcId ak);

/**
 * Enumerates every S-T hyperpath of a B-hypergraph exactly once, streaming
 * each one through the sink as a set of arc ids of `d`. Depth-first binary
 * partition: each node finds one minimal hyperpath, picks the last arc of
 * its firing order, and explores "without that arc" before "committed to
 * that arc". Emission order, and therefore output, is deterministic.
 */
EnumerationStats enum_hyperpaths(const DirectedHypergraph& d, const std::vector<VertexId>& sources,
                                 const std::vector<VertexId>& targets, const InstrumentedSink& sink);
EnumerationStats enum_hyperpaths(const DirectedHypergraph& d, const std::vector<VertexId>& sources,
                                 const std::vector<VertexId>& targets, const HyperpathSink& sink);

/// Single-source, single-target convenience wrapper.
EnumerationStats enum_two_terminal(const DirectedHypergraph& d, const VertexId& s, const VertexId& t,
                                   const HyperpathSink& sink);

}  // namespace hyperpath
