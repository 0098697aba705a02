#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperpath/hypergraph.hpp"

namespace hyperpath {

/**
 * Every vertex B-reachable from `sources`: the least fixpoint of forward
 * chaining, where an arc fires once all of its tails are reached and then
 * reaches its heads. Linear in the size of the hypergraph. Names come back
 * in vertex index order.
 */
std::vector<VertexId> b_connected_set(const DirectedHypergraph& d, const std::vector<VertexId>& sources);

/// True when every target is B-reachable from the sources.
bool is_b_connected(const DirectedHypergraph& d, const std::vector<VertexId>& sources,
                    const std::vector<VertexId>& targets);

/**
 * An S-T hyperpath: an inclusion-minimal arc set whose restriction still
 * B-connects every target from the sources. `ordering` is a firing order
 * for the same arcs, each arc's tails covered by S plus the heads of
 * earlier arcs.
 */
struct Hyperpath {
    std::vector<ArcId> arc_ids;   // ascending
    std::vector<ArcId> ordering;  // firing order
};

/**
 * Finds one minimal hyperpath, or nullopt when T is not B-connected from
 * S. B-hypergraphs only. Candidate arcs are discarded greedily in
 * descending id order; an arc survives exactly when connectivity would
 * break without it. When given, `check_counter` is incremented once per
 * connectivity evaluation. Targets inside S are already satisfied and are
 * ignored; if none remain the empty hyperpath is returned at no cost.
 */
std::optional<Hyperpath> find_minimal_hyperpath(const DirectedHypergraph& d,
                                                const std::vector<VertexId>& sources,
                                                const std::vector<VertexId>& targets,
                                                std::uint64_t* check_counter = nullptr);

/// Outcome of arranging a set of arcs into a firing order.
struct LayerOrder {
    bool ok = false;
    std::vector<ArcId> order;     // fired arcs in order; all of them when ok
    std::vector<ArcId> unplaced;  // arcs that never became fireable, ascending
};

/// Greedy firing order over the given arcs: starting from S, repeatedly
/// fires the lowest-id arc whose tails are all covered.
LayerOrder layered_order(const DirectedHypergraph& d, const std::vector<VertexId>& sources,
                         const std::vector<ArcId>& arc_ids);

enum class PathVerdict {
    Valid,
    NotLayerable,        // no firing order covers every arc
    HeadCountViolation,  // a vertex heads the wrong number of arcs
    UncoveredVertex,     // a non-source, non-target vertex feeds no arc
    TargetNotCovered,    // a target outside S is never produced
};

struct PathCheck {
    PathVerdict verdict = PathVerdict::Valid;
    std::vector<ArcId> unplaced;     // filled for NotLayerable
    std::optional<VertexId> vertex;  // offending vertex for the vertex verdicts
    bool ok() const { return verdict == PathVerdict::Valid; }
};

/**
 * Structural hyperpath test for B-hypergraphs. `arc_ids` forms an S-T
 * hyperpath exactly when (1) the arcs admit a firing order, (2) within the
 * arcs' span, vertices of S head no arc and every other vertex heads
 * exactly one, (3) every span vertex outside S and T tails some arc, and
 * (4) every target outside S is some arc's head. Checks run in that order
 * and the first failure is reported.
 */
PathCheck check_hyperpath(const DirectedHypergraph& d, const std::vector<VertexId>& sources,
                          const std::vector<VertexId>& targets, const std::vector<ArcId>& arc_ids);

/// check_hyperpath collapsed to a yes/no answer.
bool verify_hyperpath(const DirectedHypergraph& d, const std::vector<VertexId>& sources,
                      const std::vector<VertexId>& targets, const std::vector<ArcId>& arc_ids);

}  // namespace hyperpath
