#include "hyperpath/reductions.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>

#include "hyperpath/connectivity.hpp"

namespace hyperpath {

namespace {

void validate(const CnfFormula& f) {
    if (f.num_vars < 1) throw MalformedCnf("formula needs at least one variable");
    if (f.clauses.empty()) throw MalformedCnf("formula needs at least one clause");
    for (const auto& clause : f.clauses) {
        for (int lit : clause) {
            if (lit == 0) throw MalformedCnf("literal 0 is not allowed");
            int var = lit < 0 ? -lit : lit;
            if (var > f.num_vars)
                throw MalformedCnf("literal " + std::to_string(lit) + " is outside 1.." +
                                   std::to_string(f.num_vars));
        }
    }
}

int next_power_of_two(int x) {
    int p = 1;
    while (p < x) p <<= 1;
    return p;
}

std::string pos_name(int i) { return "x" + std::to_string(i); }
std::string neg_name(int i) { return "~x" + std::to_string(i); }
std::string guard_name(int i) { return "y" + std::to_string(i); }
std::string clause_name(int j) { return "c" + std::to_string(j); }
std::string internal_name(int i) { return "d" + std::to_string(i); }

std::string literal_vertex(int lit) { return lit > 0 ? pos_name(lit) : neg_name(-lit); }

std::vector<VertexId> sorted_set(std::vector<VertexId> names) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

void canonicalize(std::vector<std::vector<VertexId>>& family) {
    std::sort(family.begin(), family.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
}

bool contains(const std::vector<VertexId>& sorted, const VertexId& name) {
    return std::binary_search(sorted.begin(), sorted.end(), name);
}

bool member(const std::vector<std::vector<VertexId>>& family, const std::vector<VertexId>& set) {
    return std::find(family.begin(), family.end(), set) != family.end();
}

bool induced_connects(const DirectedHypergraph& d, const std::vector<VertexId>& kept,
                      const VertexId& s, const VertexId& t) {
    SubhypergraphResult sub = vertex_induced_subhypergraph(d, kept);
    if (!sub.graph.find_vertex(s) || !sub.graph.find_vertex(t)) return false;
    return is_b_connected(sub.graph, {s}, {t});
}

}  // namespace

bool Assignment::value_or_false(int var) const {
    auto it = values.find(var);
    return it != values.end() && it->second;
}

bool Assignment::satisfies(const CnfFormula& f) const {
    for (const auto& clause : f.clauses) {
        bool ok = false;
        for (int lit : clause) {
            bool v = value_or_false(lit < 0 ? -lit : lit);
            if (lit < 0 ? !v : v) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

bool exhaustive_satisfiable(const CnfFormula& f, int cap) {
    validate(f);
    const int hard = cap < 63 ? cap : 63;
    if (f.num_vars > hard)
        throw CapExceeded("formula has " + std::to_string(f.num_vars) +
                          " variables, beyond the scan cap " + std::to_string(hard));
    const std::uint64_t total = std::uint64_t{1} << f.num_vars;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        bool all = true;
        for (const auto& clause : f.clauses) {
            bool ok = false;
            for (int lit : clause) {
                int var = lit < 0 ? -lit : lit;
                bool v = ((mask >> (var - 1)) & 1) != 0;
                if (lit < 0 ? !v : v) {
                    ok = true;
                    break;
                }
            }
            if (!ok) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

CnfFormula pad_to_power_of_two(const CnfFormula& f, PadMode mode) {
    validate(f);
    CnfFormula out = f;
    const int n = f.num_vars;
    const int m = static_cast<int>(f.clauses.size());
    if (mode == PadMode::Clauses) {
        const int target = next_power_of_two(m);
        if (target == m) return out;
        const int z = n + 1;
        out.num_vars = z;
        for (int j = m; j < target; ++j) out.clauses.push_back({z, z, z});
    } else {
        const int len = n + m + 1;
        if (next_power_of_two(len) == len) return out;
        int target = next_power_of_two(len);
        // The dummy variable itself takes a slot, and at least one dummy
        // clause must fit.
        if (target < n + m + 3) target <<= 1;
        const int z = n + 1;
        out.num_vars = z;
        const int add = target - (n + 1) - 1 - m;
        for (int j = 0; j < add; ++j) out.clauses.push_back({z, z, z});
    }
    return out;
}

SatInducedInstance reduce_sat_induced(const CnfFormula& f, bool bounded_tail) {
    validate(f);
    SatInducedInstance inst;
    inst.source = "s";
    inst.target = "t";
    inst.original_vars = f.num_vars;
    inst.original_clauses = static_cast<int>(f.clauses.size());
    inst.bounded_tail = bounded_tail;
    inst.formula = bounded_tail ? pad_to_power_of_two(f, PadMode::Clauses) : f;
    if (inst.formula.num_vars > f.num_vars) inst.padding_var = inst.formula.num_vars;

    const int n = inst.formula.num_vars;
    const int m = static_cast<int>(inst.formula.clauses.size());

    std::vector<VertexId> vertices{"s", "t"};
    for (int i = 1; i <= n; ++i) {
        inst.variable_vertices.emplace_back(pos_name(i), neg_name(i));
        vertices.push_back(pos_name(i));
        vertices.push_back(neg_name(i));
    }
    for (int j = 1; j <= m; ++j) {
        inst.clause_vertices.push_back(clause_name(j));
        vertices.push_back(clause_name(j));
    }
    if (bounded_tail)
        for (int i = 2; i <= m - 1; ++i) vertices.push_back(internal_name(i));

    std::vector<ArcSpec> arcs;
    for (int i = 1; i <= n; ++i) {
        arcs.push_back({{pos_name(i), neg_name(i)}, {"t"}});
        arcs.push_back({{"s"}, {pos_name(i)}});
        arcs.push_back({{"s"}, {neg_name(i)}});
    }
    for (int j = 1; j <= m; ++j)
        for (int lit : inst.formula.clauses[static_cast<std::size_t>(j - 1)])
            arcs.push_back({{literal_vertex(lit)}, {clause_name(j)}});

    if (!bounded_tail) {
        ArcSpec gather;
        for (int j = 1; j <= m; ++j) gather.tails.push_back(clause_name(j));
        gather.heads = {"t"};
        arcs.push_back(std::move(gather));
    } else if (m == 1) {
        arcs.push_back({{clause_name(1)}, {"t"}});
    } else {
        // Balanced gathering tree, heap indexed: slot 1 is t, slots
        // 2..m-1 are internal, slots m..2m-1 are the clause vertices.
        auto slot = [m](int idx) -> VertexId {
            if (idx == 1) return "t";
            if (idx < m) return internal_name(idx);
            return clause_name(idx - m + 1);
        };
        for (int i = 1; i <= m - 1; ++i)
            arcs.push_back({{slot(2 * i), slot(2 * i + 1)}, {slot(i)}});
    }

    inst.graph = DirectedHypergraph::build(vertices, arcs);
    if (!bounded_tail) {
        assert(inst.graph.vertex_count() == 2 * n + m + 2);
        assert(inst.graph.arc_count() == 3 * n + 3 * m + 1);
    }

    for (int i = 1; i <= n; ++i)
        inst.seed_paths.push_back(sorted_set({"s", "t", pos_name(i), neg_name(i)}));
    canonicalize(inst.seed_paths);
    return inst;
}

Assignment assignment_from_induced_hyperpath(const SatInducedInstance& inst,
                                             const std::vector<VertexId>& path) {
    std::vector<VertexId> p = sorted_set(path);
    for (const VertexId& v : p) inst.graph.index_of(v);
    if (member(inst.seed_paths, p))
        throw SeedPath("the path is one of the seed family and encodes no assignment");

    if (!contains(p, inst.source) || !contains(p, inst.target))
        throw NotInducedPath("an induced path must contain both terminals");
    if (!induced_connects(inst.graph, p, inst.source, inst.target))
        throw NotInducedPath("the target is not reachable inside the given vertex set");
    for (const VertexId& v : p) {
        if (v == inst.source || v == inst.target) continue;
        std::vector<VertexId> fewer;
        fewer.reserve(p.size() - 1);
        for (const VertexId& w : p)
            if (w != v) fewer.push_back(w);
        if (induced_connects(inst.graph, fewer, inst.source, inst.target))
            throw NotInducedPath("not minimal: vertex '" + v + "' is removable");
    }

    Assignment a;
    for (int i = 1; i <= inst.formula.num_vars; ++i) a.values[i] = contains(p, pos_name(i));
    if (!a.satisfies(inst.formula))
        throw std::logic_error("decoded assignment fails the encoded formula");
    return a;
}

SatSeparatorInstance reduce_sat_separator(const CnfFormula& f, bool bounded_tail) {
    validate(f);
    SatSeparatorInstance inst;
    inst.source = "s";
    inst.target = "t";
    inst.collector = "c";
    inst.original_vars = f.num_vars;
    inst.original_clauses = static_cast<int>(f.clauses.size());
    inst.bounded_tail = bounded_tail;
    inst.formula = bounded_tail ? pad_to_power_of_two(f, PadMode::ClausesPlusVars) : f;
    if (inst.formula.num_vars > f.num_vars) inst.padding_var = inst.formula.num_vars;

    const int n = inst.formula.num_vars;
    const int m = static_cast<int>(inst.formula.clauses.size());

    std::vector<VertexId> vertices{"s", "t", "c"};
    for (int i = 1; i <= n; ++i) {
        inst.variable_vertices.emplace_back(pos_name(i), neg_name(i));
        inst.guard_vertices.push_back(guard_name(i));
        vertices.push_back(pos_name(i));
        vertices.push_back(neg_name(i));
        vertices.push_back(guard_name(i));
    }
    if (bounded_tail) {
        for (int j = 1; j <= m; ++j) {
            inst.clause_vertices.push_back(clause_name(j));
            vertices.push_back(clause_name(j));
        }
        for (int i = 2; i <= n + m; ++i) vertices.push_back(internal_name(i));
    }

    std::vector<ArcSpec> arcs;
    for (int i = 1; i <= n; ++i) {
        arcs.push_back({{pos_name(i)}, {guard_name(i)}});
        arcs.push_back({{neg_name(i)}, {guard_name(i)}});
        arcs.push_back({{"s"}, {pos_name(i)}});
        arcs.push_back({{"s"}, {neg_name(i)}});
    }

    if (!bounded_tail) {
        for (const auto& clause : inst.formula.clauses) {
            ArcSpec a;
            for (int lit : clause) a.tails.push_back(literal_vertex(lit));
            a.heads = {"c"};
            arcs.push_back(std::move(a));
        }
        ArcSpec wide;
        wide.tails.push_back("c");
        for (int i = 1; i <= n; ++i) wide.tails.push_back(guard_name(i));
        wide.heads = {"t"};
        arcs.push_back(std::move(wide));
    } else {
        for (int j = 1; j <= m; ++j) {
            const auto& clause = inst.formula.clauses[static_cast<std::size_t>(j - 1)];
            arcs.push_back({{literal_vertex(clause[0]), literal_vertex(clause[1])}, {clause_name(j)}});
            arcs.push_back({{clause_name(j), literal_vertex(clause[2])}, {"c"}});
            // Keeps c_j exactly as reachable as c so the stage split adds
            // only {c_j} itself as a new separator.
            arcs.push_back({{"c"}, {clause_name(j)}});
        }
        // Balanced gathering tree over the leaves c, c_1..c_m, y_1..y_n.
        const int leaves = n + m + 1;
        assert(next_power_of_two(leaves) == leaves);
        auto slot = [m, leaves](int idx) -> VertexId {
            if (idx == 1) return "t";
            if (idx < leaves) return internal_name(idx);
            if (idx == leaves) return "c";
            if (idx <= leaves + m) return clause_name(idx - leaves);
            return guard_name(idx - leaves - m);
        };
        for (int i = 1; i <= leaves - 1; ++i)
            arcs.push_back({{slot(2 * i), slot(2 * i + 1)}, {slot(i)}});
    }

    inst.graph = DirectedHypergraph::build(vertices, arcs);
    if (!bounded_tail) {
        assert(inst.graph.vertex_count() == 3 * n + 3);
        assert(inst.graph.arc_count() == 4 * n + m + 1);
    }

    inst.seed_separators.push_back({"c"});
    for (int i = 1; i <= n; ++i) {
        inst.seed_separators.push_back({guard_name(i)});
        inst.seed_separators.push_back(sorted_set({pos_name(i), neg_name(i)}));
    }
    if (bounded_tail) {
        for (int j = 1; j <= m; ++j) inst.seed_separators.push_back({clause_name(j)});
        for (int i = 2; i <= n + m; ++i) inst.seed_separators.push_back({internal_name(i)});
    }
    canonicalize(inst.seed_separators);
    assert(static_cast<int>(inst.seed_separators.size()) <= inst.graph.vertex_count());
    return inst;
}

Assignment assignment_from_separator(const SatSeparatorInstance& inst,
                                     const std::vector<VertexId>& separator) {
    std::vector<VertexId> x = sorted_set(separator);
    for (const VertexId& v : x) inst.graph.index_of(v);
    if (contains(x, inst.source) || contains(x, inst.target))
        throw NotSeparator("a separator may not contain a terminal");
    if (member(inst.seed_separators, x))
        throw SeedSeparator("the separator is one of the seed family and encodes no assignment");

    std::vector<VertexId> kept;
    for (const VertexId& v : inst.graph.vertex_names())
        if (!contains(x, v)) kept.push_back(v);
    if (induced_connects(inst.graph, kept, inst.source, inst.target))
        throw NotSeparator("the set does not separate the terminals");
    for (const VertexId& v : x) {
        std::vector<VertexId> restored = kept;
        restored.push_back(v);
        if (!induced_connects(inst.graph, restored, inst.source, inst.target))
            throw NotSeparator("not minimal: vertex '" + v + "' is unnecessary");
    }

    Assignment a;
    for (int i = 1; i <= inst.formula.num_vars; ++i) a.values[i] = contains(x, pos_name(i));
    if (!a.satisfies(inst.formula))
        throw std::logic_error("decoded assignment fails the encoded formula");
    return a;
}

TransversalMapping reduce_transversal(const UndirectedHypergraph& h) {
    if (h.edge_count() == 0)
        throw EmptySide("transversal reduction needs at least one edge");
    for (int v = 0; v < h.vertex_count(); ++v)
        if (h.edges_with_vertex(v).empty())
            throw EmptySide("vertex '" + h.vertex_name(v) + "' lies in no edge");

    TransversalMapping map;
    map.source = "s";
    map.target = "t";
    map.hypergraph = h;

    auto edge_vertex = [](int e) { return "e" + std::to_string(e + 1); };
    std::vector<VertexId> vertices{"s"};
    for (int e = 0; e < h.edge_count(); ++e) vertices.push_back(edge_vertex(e));
    vertices.push_back("t");

    std::vector<ArcSpec> arcs;
    for (int v = 0; v < h.vertex_count(); ++v) {
        ArcSpec a;
        a.tails = {"s"};
        for (int e : h.edges_with_vertex(v)) a.heads.push_back(edge_vertex(e));
        map.vertex_arcs.push_back(static_cast<ArcId>(arcs.size()));
        arcs.push_back(std::move(a));
    }
    ArcSpec final_arc;
    for (int e = 0; e < h.edge_count(); ++e) final_arc.tails.push_back(edge_vertex(e));
    final_arc.heads = {"t"};
    map.final_arc = static_cast<ArcId>(arcs.size());
    arcs.push_back(std::move(final_arc));

    map.graph = DirectedHypergraph::build(vertices, arcs);
    assert(map.graph.vertex_count() == h.edge_count() + 2);
    assert(map.graph.arc_count() == h.vertex_count() + 1);
    return map;
}

std::vector<ArcId> hyperpath_from_transversal(const TransversalMapping& m,
                                              const std::vector<VertexId>& transversal) {
    std::vector<ArcId> out;
    out.reserve(transversal.size() + 1);
    for (const VertexId& name : transversal)
        out.push_back(m.vertex_arcs[static_cast<std::size_t>(m.hypergraph.index_of(name))]);
    out.push_back(m.final_arc);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<VertexId> transversal_from_hyperpath(const TransversalMapping& m,
                                                 const std::vector<ArcId>& arc_ids) {
    std::vector<ArcId> ids = arc_ids;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    bool final_seen = false;
    std::vector<VertexId> out;
    for (ArcId id : ids) {
        if (id == m.final_arc) {
            final_seen = true;
            continue;
        }
        auto it = std::find(m.vertex_arcs.begin(), m.vertex_arcs.end(), id);
        if (it == m.vertex_arcs.end())
            throw ForeignArc("arc " + std::to_string(id) + " is not part of the reduction");
        out.push_back(m.hypergraph.vertex_name(static_cast<int>(it - m.vertex_arcs.begin())));
    }
    if (!final_seen) throw MissingFinalArc("the arc gathering every edge into t is missing");
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hyperpath
