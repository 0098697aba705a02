#pragma once

#include <string>

#include "hyperpath/hypergraph.hpp"
#include "hyperpath/reductions.hpp"

namespace hyperpath {

/**
 * Directed hypergraph text format. `#` starts a comment, blank lines are
 * skipped. An optional first content line `vertices: v1 v2 ...` declares
 * the whole vertex set (isolated vertices included); otherwise the vertex
 * set is inferred from the arcs in appearance order. Every other line is
 * one arc, `t1 t2 ... -> h1 h2 ...`, and arc ids count up in file order.
 */
DirectedHypergraph parse_dhg(const std::string& text);

/// Inverse of parse_dhg: a vertices: header plus one line per arc.
/// parse_dhg(serialize_dhg(d)) reproduces d exactly.
std::string serialize_dhg(const DirectedHypergraph& d);

/// DIMACS CNF restricted to three literals per clause: `c` comment lines,
/// a `p cnf <vars> <clauses>` header, then clauses as signed integers each
/// terminated by 0.
CnfFormula parse_cnf(const std::string& text);

/// One hyperedge per line as whitespace-separated vertex tokens; `#`
/// comments and blank lines are skipped; the vertex set is inferred.
UndirectedHypergraph parse_hg(const std::string& text);

std::string serialize_hg(const UndirectedHypergraph& h);

/// Line-oriented `key: value` sidecars describing a reduction instance;
/// keys repeat for families.
std::string metadata_text(const SatInducedInstance& inst);
std::string metadata_text(const SatSeparatorInstance& inst);
std::string metadata_text(const TransversalMapping& m);

}  // namespace hyperpath
