#pragma once

#include <vector>

#include "hyperpath/hypergraph.hpp"

namespace hyperpath {

/**
 * Brute-force reference solvers. Each one scans every subset of its search
 * space in ascending-cardinality order, skipping supersets of solutions
 * already found; since all four membership predicates are monotone, every
 * surviving satisfying subset is inclusion-minimal. Families come back
 * canonically sorted: by size, then lexicographically.
 *
 * The default entry points split the scan across OpenMP threads when
 * available and produce output identical to the serial twins in
 * hyperpath::serial, which exist as the plain reference implementation
 * and for benchmarking the parallel kernels against.
 *
 * `cap` bounds the scan dimension (arcs below, vertices elsewhere);
 * exceeding it, or 63, throws CapExceeded.
 */

/// All S-T hyperpaths (minimal arc sets whose restriction B-connects every
/// target), as ascending arc-id sets. Works on any directed hypergraph.
std::vector<std::vector<ArcId>> oracle_hyperpaths(const DirectedHypergraph& d,
                                                  const std::vector<VertexId>& sources,
                                                  const std::vector<VertexId>& targets,
                                                  int cap = 20);

/// All induced s-t hyperpaths: minimal vertex sets U with t B-reachable
/// from s inside the vertex-induced restriction to U. Name sets, each
/// sorted lexicographically.
std::vector<std::vector<VertexId>> oracle_induced_hyperpaths(const DirectedHypergraph& d,
                                                             const VertexId& s, const VertexId& t,
                                                             int cap = 20);

/// All minimal s-t separators: minimal X ⊆ V∖{s,t} whose removal leaves t
/// unreachable from s. Empty when even removing everything fails.
std::vector<std::vector<VertexId>> oracle_minimal_separators(const DirectedHypergraph& d,
                                                             const VertexId& s, const VertexId& t,
                                                             int cap = 20);

/// All minimal transversals of an undirected hypergraph: minimal vertex
/// sets meeting every edge. For an edgeless input this is {∅}.
std::vector<std::vector<VertexId>> oracle_minimal_transversals(const UndirectedHypergraph& h,
                                                               int cap = 20);

namespace serial {

std::vector<std::vector<ArcId>> oracle_hyperpaths(const DirectedHypergraph& d,
                                                  const std::vector<VertexId>& sources,
                                                  const std::vector<VertexId>& targets,
                                                  int cap = 20);
std::vector<std::vector<VertexId>> oracle_induced_hyperpaths(const DirectedHypergraph& d,
                                                             const VertexId& s, const VertexId& t,
                                                             int cap = 20);
std::vector<std::vector<VertexId>> oracle_minimal_separators(const DirectedHypergraph& d,
                                                             const VertexId& s, const VertexId& t,
                                                             int cap = 20);
std::vector<std::vector<VertexId>> oracle_minimal_transversals(const UndirectedHypergraph& h,
                                                               int cap = 20);

}  // namespace serial

}  // namespace hyperpath
