#pragma once

#include <cstdint>
#include <random>

#include "hyperpath/hypergraph.hpp"
#include "hyperpath/reductions.hpp"

namespace hyperpath {

struct TwoTerminalInstance {
    DirectedHypergraph graph;
    VertexId source;
    VertexId target;
};

/// Chain of k stages, each crossed through one of two relay vertices:
/// 2^k hyperpaths over 4k arcs.
TwoTerminalInstance make_diamond_chain(int k);

/// Chain of k stages, each crossed either by one relay arc or by a
/// two-tail gathering arc: 2^k hyperpaths of mixed sizes over 4k arcs.
TwoTerminalInstance make_layered_chain(int k);

/// Random B-hypergraph on `vertices` named v1..vn with `arcs` arcs of
/// tail size 1..3. Parallel arcs may occur.
DirectedHypergraph make_random_b_hypergraph(int vertices, int arcs, std::mt19937& rng);

/// Instance for bench --family random: a seeded random B-hypergraph with
/// 2*size arcs between v1 and v<size>.
TwoTerminalInstance make_random_two_terminal(int size, std::uint32_t seed);

/// Random undirected hypergraph with 1..max_edges nonempty edges over at
/// most max_vertices vertices; the vertex set is inferred from the edges.
UndirectedHypergraph make_random_hypergraph(int max_vertices, int max_edges, std::mt19937& rng);

/// Random 3-CNF; literals pick variables and signs uniformly, duplicates
/// within a clause allowed.
CnfFormula make_random_cnf(int num_vars, int num_clauses, std::mt19937& rng);

}  // namespace hyperpath
