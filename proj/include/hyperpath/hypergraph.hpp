#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperpath/errors.hpp"

namespace hyperpath {

using VertexId = std::string;
using ArcId = int;

/**
 * One directed hyperarc. Both sides hold sorted, duplicate-free vertex
 * indexes into the owning hypergraph, and the sides never share a vertex.
 */
struct Hyperarc {
    std::vector<int> tails;
    std::vector<int> heads;
};

/// Named form of an arc, used before vertex indexes exist. Repeated names
/// within a side collapse to one.
struct ArcSpec {
    std::vector<VertexId> tails;
    std::vector<VertexId> heads;
};

enum class HypergraphClass {
    General,
    BF,  // every arc has a singleton head or a singleton tail
    B,   // every arc has a singleton head
};

/**
 * Immutable directed hypergraph over named vertices.
 *
 * Arc ids are dense, 0..arc_count()-1, in construction order, and parallel
 * arcs are distinct arcs. Vertices may be isolated. A tail-to-arcs index is
 * built once at construction, so reachability queries never pay for it
 * lazily.
 */
class DirectedHypergraph {
public:
    DirectedHypergraph() = default;

    /// Validating constructor. Vertices beyond the arcs' span stay as
    /// isolated vertices; arcs may only use declared names.
    static DirectedHypergraph build(const std::vector<VertexId>& vertices, const std::vector<ArcSpec>& arcs);

    /// Trusted constructor for callers that already hold index-form arcs.
    static DirectedHypergraph from_parts(std::vector<VertexId> vertex_names, std::vector<Hyperarc> arcs);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int arc_count() const { return static_cast<int>(arcs_.size()); }

    const VertexId& vertex_name(int v) const { return names_[static_cast<std::size_t>(v)]; }
    const std::vector<VertexId>& vertex_names() const { return names_; }

    std::optional<int> find_vertex(const VertexId& name) const;

    /// Index of a named vertex; throws UnknownVertex.
    int index_of(const VertexId& name) const;

    /// Indexes of a list of names, sorted and deduplicated.
    std::vector<int> indices_of(const std::vector<VertexId>& names) const;

    /// Arc by id; throws UnknownArcId when out of range.
    const Hyperarc& arc(ArcId id) const;
    const std::vector<Hyperarc>& arcs() const { return arcs_; }

    /// Sum of |tails| + |heads| over all arcs.
    long long total_endpoints() const { return endpoints_; }

    /// Arcs having v among their tails, ascending by id.
    const std::vector<ArcId>& arcs_with_tail(int v) const { return tail_index_[static_cast<std::size_t>(v)]; }

private:
    std::vector<VertexId> names_;
    std::unordered_map<VertexId, int> index_;
    std::vector<Hyperarc> arcs_;
    std::vector<std::vector<ArcId>> tail_index_;
    long long endpoints_ = 0;

    void finish();
};

/// Most specific class that fits: B before BF before General.
HypergraphClass classify(const DirectedHypergraph& d);

struct SubhypergraphResult {
    DirectedHypergraph graph;
    std::vector<ArcId> arc_origin;    // new arc id -> old arc id
    std::vector<int> vertex_origin;   // new vertex index -> old vertex index
};

/// Restriction to a set of arc ids; keeps exactly the endpoint vertices of
/// those arcs, in original index order. Duplicate ids collapse.
SubhypergraphResult edge_induced_subhypergraph(const DirectedHypergraph& d, const std::vector<ArcId>& arc_ids);

/// Restriction to a vertex set; keeps the arcs whose endpoints all lie
/// inside it and every listed vertex, isolated ones included.
SubhypergraphResult vertex_induced_subhypergraph(const DirectedHypergraph& d, const std::vector<VertexId>& vertices);

/**
 * Undirected hypergraph, the input side of the transversal problems.
 * Edges are sorted vertex-index sets and must be nonempty.
 */
class UndirectedHypergraph {
public:
    UndirectedHypergraph() = default;
    UndirectedHypergraph(std::vector<VertexId> vertices, const std::vector<std::vector<VertexId>>& edges);

    /// Vertex set inferred from the edges, in first-appearance order.
    static UndirectedHypergraph from_edges(const std::vector<std::vector<VertexId>>& edges);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const VertexId& vertex_name(int v) const { return names_[static_cast<std::size_t>(v)]; }
    const std::vector<VertexId>& vertex_names() const { return names_; }
    std::optional<int> find_vertex(const VertexId& name) const;
    int index_of(const VertexId& name) const;
    const std::vector<int>& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    const std::vector<int>& edges_with_vertex(int v) const { return incidence_[static_cast<std::size_t>(v)]; }

private:
    std::vector<VertexId> names_;
    std::unordered_map<VertexId, int> index_;
    std::vector<std::vector<int>> edges_;
    std::vector<std::vector<int>> incidence_;
};

}  // namespace hyperpath
