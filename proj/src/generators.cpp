#include "hyperpath/generators.hpp"

#include <algorithm>
#include <string>

namespace hyperpath {

namespace {

// rng() % n is biased in principle; for test instances it does not matter
// and it keeps the draw order obvious.
int below(std::mt19937& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint32_t>(n)); }

std::string v_name(int i) { return "v" + std::to_string(i); }

}  // namespace

TwoTerminalInstance make_diamond_chain(int k) {
    std::vector<VertexId> vertices{"v0"};
    std::vector<ArcSpec> arcs;
    for (int i = 1; i <= k; ++i) {
        const VertexId prev = v_name(i - 1);
        const VertexId here = v_name(i);
        const VertexId a = "a" + std::to_string(i);
        const VertexId b = "b" + std::to_string(i);
        vertices.push_back(a);
        vertices.push_back(b);
        vertices.push_back(here);
        arcs.push_back({{prev}, {a}});
        arcs.push_back({{a}, {here}});
        arcs.push_back({{prev}, {b}});
        arcs.push_back({{b}, {here}});
    }
    return {DirectedHypergraph::build(vertices, arcs), "v0", v_name(k)};
}

TwoTerminalInstance make_layered_chain(int k) {
    std::vector<VertexId> vertices{"v0"};
    std::vector<ArcSpec> arcs;
    for (int i = 1; i <= k; ++i) {
        const VertexId prev = v_name(i - 1);
        const VertexId here = v_name(i);
        const VertexId a = "a" + std::to_string(i);
        const VertexId b = "b" + std::to_string(i);
        vertices.push_back(a);
        vertices.push_back(b);
        vertices.push_back(here);
        arcs.push_back({{prev}, {a}});
        arcs.push_back({{prev}, {b}});
        arcs.push_back({{a}, {here}});
        arcs.push_back({{a, b}, {here}});
    }
    return {DirectedHypergraph::build(vertices, arcs), "v0", v_name(k)};
}

DirectedHypergraph make_random_b_hypergraph(int vertices, int arcs, std::mt19937& rng) {
    std::vector<VertexId> names;
    names.reserve(static_cast<std::size_t>(vertices));
    for (int i = 1; i <= vertices; ++i) names.push_back(v_name(i));

    std::vector<ArcSpec> specs;
    specs.reserve(static_cast<std::size_t>(arcs));
    for (int a = 0; a < arcs; ++a) {
        const int head = below(rng, vertices);
        const int max_tail = std::min(3, vertices - 1);
        const int tail_size = 1 + below(rng, max_tail);
        std::vector<VertexId> tails;
        while (static_cast<int>(tails.size()) < tail_size) {
            int v = below(rng, vertices);
            if (v == head) continue;
            const VertexId& name = names[static_cast<std::size_t>(v)];
            if (std::find(tails.begin(), tails.end(), name) == tails.end()) tails.push_back(name);
        }
        specs.push_back({std::move(tails), {names[static_cast<std::size_t>(head)]}});
    }
    return DirectedHypergraph::build(names, specs);
}

TwoTerminalInstance make_random_two_terminal(int size, std::uint32_t seed) {
    std::mt19937 rng(seed);
    const int n = std::max(size, 2);
    DirectedHypergraph d = make_random_b_hypergraph(n, 2 * n, rng);
    return {std::move(d), "v1", v_name(n)};
}

UndirectedHypergraph make_random_hypergraph(int max_vertices, int max_edges, std::mt19937& rng) {
    const int n = 1 + below(rng, max_vertices);
    const int m = 1 + below(rng, max_edges);
    std::vector<std::vector<VertexId>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
        const int size = 1 + below(rng, n);
        std::vector<VertexId> edge;
        for (int i = 0; i < size; ++i) edge.push_back(std::to_string(1 + below(rng, n)));
        edges.push_back(std::move(edge));
    }
    return UndirectedHypergraph::from_edges(edges);
}

CnfFormula make_random_cnf(int num_vars, int num_clauses, std::mt19937& rng) {
    CnfFormula f;
    f.num_vars = num_vars;
    for (int j = 0; j < num_clauses; ++j) {
        std::array<int, 3> clause{};
        for (int k = 0; k < 3; ++k) {
            int var = 1 + below(rng, num_vars);
            clause[static_cast<std::size_t>(k)] = (rng() & 1) ? var : -var;
        }
        f.clauses.push_back(clause);
    }
    return f;
}

}  // namespace hyperpath
