#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperpath/hypergraph.hpp"

namespace hyperpath {

/// 3-CNF with 1-based variable indexes; a negative literal negates its
/// variable. Duplicate literals within a clause are allowed.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;
};

/// Partial truth assignment; unassigned variables count as false.
struct Assignment {
    std::map<int, bool> values;
    bool value_or_false(int var) const;
    bool satisfies(const CnfFormula& f) const;
};

/// Exhaustive satisfiability scan over all assignments, up to `cap`
/// variables (hard limit 63).
bool exhaustive_satisfiable(const CnfFormula& f, int cap = 20);

enum class PadMode {
    Clauses,          // clause count becomes a power of two
    ClausesPlusVars,  // vars + clauses + 1 becomes a power of two
};

/// Pads a formula with one fresh variable z and copies of the always-true
/// clause (z ∨ z ∨ z). Formulas that already fit come back unchanged, with
/// no dummy variable.
CnfFormula pad_to_power_of_two(const CnfFormula& f, PadMode mode);

/**
 * Satisfiability encoded as induced s-t hyperpath existence.
 *
 * Per variable the graph has a positive and a negative vertex, both fed
 * from s, plus the arc ({x_i, ~x_i}, {t}) that makes the seed path
 * {s, x_i, ~x_i, t}. Each clause vertex is fed by one arc per literal
 * occurrence, and the clause vertices jointly feed t. The formula is
 * satisfiable exactly when some minimal induced s-t hyperpath exists
 * beyond the seed family, and every such path decodes to a satisfying
 * assignment: a variable is true iff its positive vertex is on the path.
 *
 * With bounded_tail the clause count is padded to a power of two and the
 * joint arc into t is replaced by a balanced gathering tree over internal
 * d vertices, keeping every tail at size at most two.
 */
struct SatInducedInstance {
    DirectedHypergraph graph;
    VertexId source;
    VertexId target;
    CnfFormula formula;  // as encoded, padding included
    int original_vars = 0;
    int original_clauses = 0;
    std::optional<int> padding_var;
    bool bounded_tail = false;
    std::vector<std::pair<VertexId, VertexId>> variable_vertices;  // [i-1] = (x_i, ~x_i)
    std::vector<VertexId> clause_vertices;                         // [j-1] = c_j
    std::vector<std::vector<VertexId>> seed_paths;                 // canonical order
};

SatInducedInstance reduce_sat_induced(const CnfFormula& f, bool bounded_tail = false);

/// Decodes a minimal induced s-t hyperpath that is not a seed path into a
/// satisfying assignment. Throws SeedPath for seeds and NotInducedPath
/// when the vertex set is not a minimal induced path at all.
Assignment assignment_from_induced_hyperpath(const SatInducedInstance& inst,
                                             const std::vector<VertexId>& path);

/**
 * Satisfiability encoded as minimal s-t separator existence.
 *
 * Per variable: positive and negative vertices fed from s, both feeding a
 * guard vertex y_i. Each clause feeds the collector vertex c through its
 * literal vertices, and t needs c together with every guard. The seed
 * separators are {c}, every {y_i}, and every {x_i, ~x_i}; the formula is
 * satisfiable exactly when some minimal separator exists outside the seed
 * family, and every such separator decodes to a satisfying assignment:
 * a variable is true iff its positive vertex is in the separator.
 *
 * With bounded_tail the formula is padded until vars + clauses + 1 is a
 * power of two, each clause arc is split in two through a stage vertex
 * c_j (kept reachable alongside c by a feedback arc ({c}, {c_j})), and
 * the wide arc into t becomes a balanced gathering tree over internal d
 * vertices. The seed family gains every {c_j} and every {d_i}.
 */
struct SatSeparatorInstance {
    DirectedHypergraph graph;
    VertexId source;
    VertexId target;
    VertexId collector;  // the vertex every clause feeds
    CnfFormula formula;
    int original_vars = 0;
    int original_clauses = 0;
    std::optional<int> padding_var;
    bool bounded_tail = false;
    std::vector<std::pair<VertexId, VertexId>> variable_vertices;
    std::vector<VertexId> guard_vertices;                 // [i-1] = y_i
    std::vector<VertexId> clause_vertices;                // bounded variant only
    std::vector<std::vector<VertexId>> seed_separators;   // canonical order
};

SatSeparatorInstance reduce_sat_separator(const CnfFormula& f, bool bounded_tail = false);

/// Decodes a minimal s-t separator that is not a seed into a satisfying
/// assignment. Throws SeedSeparator for seeds and NotSeparator when the
/// set is not a minimal separator.
Assignment assignment_from_separator(const SatSeparatorInstance& inst,
                                     const std::vector<VertexId>& separator);

/**
 * Minimal transversals encoded as S-T hyperpaths. The directed instance
 * has one vertex per hyperedge plus s and t; H-vertex v becomes the arc
 * ({s}, E_v) over the edges containing v, and one final arc gathers every
 * edge vertex into t. T is a minimal transversal of H exactly when its
 * arcs plus the final arc form an s-t hyperpath. Inputs must have at
 * least one edge and no vertex outside every edge.
 */
struct TransversalMapping {
    DirectedHypergraph graph;
    VertexId source;
    VertexId target;
    UndirectedHypergraph hypergraph;  // the reduced input
    std::vector<ArcId> vertex_arcs;   // H-vertex index -> its ({s}, E_v) arc
    ArcId final_arc = -1;
};

TransversalMapping reduce_transversal(const UndirectedHypergraph& h);

/// Image of a vertex set under the reduction: its per-vertex arcs plus the
/// final arc, ascending.
std::vector<ArcId> hyperpath_from_transversal(const TransversalMapping& m,
                                              const std::vector<VertexId>& transversal);

/// Preimage of an arc set: drops the final arc (which must be present) and
/// maps every remaining arc back to its H-vertex, sorted by name.
std::vector<VertexId> transversal_from_hyperpath(const TransversalMapping& m,
                                                 const std::vector<ArcId>& arc_ids);

}  // namespace hyperpath
