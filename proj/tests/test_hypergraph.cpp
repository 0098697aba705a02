#include "hyperpath/hypergraph.hpp"

#include <vector>

#include "doctest.h"

using namespace hyperpath;

namespace {

DirectedHypergraph and_gadget() {
    return DirectedHypergraph::build({"s", "v1", "v2", "t"},
                                     {{{"s"}, {"v1"}}, {{"s"}, {"v2"}}, {{"v1", "v2"}, {"t"}}});
}

}  // namespace

TEST_CASE("build keeps declared vertices and dense arc ids") {
    DirectedHypergraph d = and_gadget();
    CHECK(d.vertex_count() == 4);
    CHECK(d.arc_count() == 3);
    CHECK(d.vertex_name(0) == "s");
    CHECK(d.vertex_name(3) == "t");
    CHECK(d.index_of("v2") == 2);
    CHECK(d.arc(2).tails == std::vector<int>{1, 2});
    CHECK(d.arc(2).heads == std::vector<int>{3});
    CHECK(d.total_endpoints() == 7);
}

TEST_CASE("build keeps isolated vertices") {
    DirectedHypergraph d = DirectedHypergraph::build({"a", "lonely", "b"}, {{{"a"}, {"b"}}});
    CHECK(d.vertex_count() == 3);
    CHECK(d.find_vertex("lonely").has_value());
    CHECK(d.arcs_with_tail(d.index_of("lonely")).empty());
}

TEST_CASE("parallel arcs stay distinct") {
    DirectedHypergraph d =
        DirectedHypergraph::build({"a", "b"}, {{{"a"}, {"b"}}, {{"a"}, {"b"}}, {{"a"}, {"b"}}});
    CHECK(d.arc_count() == 3);
    CHECK(d.arcs_with_tail(0) == std::vector<ArcId>{0, 1, 2});
}

TEST_CASE("repeated names within a side collapse") {
    DirectedHypergraph d = DirectedHypergraph::build({"a", "b", "c"}, {{{"a", "b", "a"}, {"c", "c"}}});
    CHECK(d.arc(0).tails == std::vector<int>{0, 1});
    CHECK(d.arc(0).heads == std::vector<int>{2});
}

TEST_CASE("build rejects bad input") {
    CHECK_THROWS_AS(DirectedHypergraph::build({""}, {}), InvalidVertexId);
    CHECK_THROWS_AS(DirectedHypergraph::build({"->"}, {}), InvalidVertexId);
    CHECK_THROWS_AS(DirectedHypergraph::build({"#x"}, {}), InvalidVertexId);
    CHECK_THROWS_AS(DirectedHypergraph::build({"a", "a"}, {}), InvalidVertexId);
    CHECK_THROWS_AS(DirectedHypergraph::build({"a"}, {{{"a"}, {"b"}}}), UnknownVertex);
    CHECK_THROWS_AS(DirectedHypergraph::build({"a", "b"}, {{{}, {"b"}}}), EmptySide);
    CHECK_THROWS_AS(DirectedHypergraph::build({"a", "b"}, {{{"a"}, {}}}), EmptySide);
    CHECK_THROWS_AS(DirectedHypergraph::build({"a", "b"}, {{{"a", "b"}, {"b"}}}),
                    DisjointnessViolation);
}

TEST_CASE("lookups throw on unknown targets") {
    DirectedHypergraph d = and_gadget();
    CHECK_THROWS_AS(d.index_of("nope"), UnknownVertex);
    CHECK_THROWS_AS(d.arc(3), UnknownArcId);
    CHECK_THROWS_AS(d.arc(-1), UnknownArcId);
    CHECK_FALSE(d.find_vertex("nope").has_value());
}

TEST_CASE("indices_of sorts and deduplicates") {
    DirectedHypergraph d = and_gadget();
    CHECK(d.indices_of({"t", "v1", "t"}) == std::vector<int>{1, 3});
}

TEST_CASE("classify picks the tightest class") {
    CHECK(classify(and_gadget()) == HypergraphClass::B);
    DirectedHypergraph bf = DirectedHypergraph::build({"a", "b", "c"}, {{{"a"}, {"b", "c"}}});
    CHECK(classify(bf) == HypergraphClass::BF);
    DirectedHypergraph gen =
        DirectedHypergraph::build({"a", "b", "c", "d"}, {{{"a", "b"}, {"c", "d"}}});
    CHECK(classify(gen) == HypergraphClass::General);
    CHECK(classify(DirectedHypergraph::build({"a"}, {})) == HypergraphClass::B);
}

TEST_CASE("edge induced subhypergraph keeps only the arcs' span") {
    DirectedHypergraph d = and_gadget();
    SubhypergraphResult r = edge_induced_subhypergraph(d, {2, 0, 2});
    CHECK(r.graph.vertex_count() == 4);  // s, v1, v2, t all touched
    CHECK(r.graph.arc_count() == 2);
    CHECK(r.arc_origin == std::vector<ArcId>{0, 2});
    CHECK(r.vertex_origin == std::vector<int>{0, 1, 2, 3});

    SubhypergraphResult just_first = edge_induced_subhypergraph(d, {0});
    CHECK(just_first.graph.vertex_count() == 2);
    CHECK(just_first.graph.vertex_name(0) == "s");
    CHECK(just_first.graph.vertex_name(1) == "v1");
}

TEST_CASE("vertex induced subhypergraph keeps inside arcs and listed isolates") {
    DirectedHypergraph d = and_gadget();
    SubhypergraphResult r = vertex_induced_subhypergraph(d, {"s", "v1", "t"});
    CHECK(r.graph.vertex_count() == 3);
    CHECK(r.graph.arc_count() == 1);  // only s -> v1 survives
    CHECK(r.arc_origin == std::vector<ArcId>{0});
    CHECK(r.graph.find_vertex("t").has_value());
}

TEST_CASE("undirected hypergraph infers vertices in first appearance order") {
    UndirectedHypergraph h = UndirectedHypergraph::from_edges({{"b", "a"}, {"a", "c"}});
    CHECK(h.vertex_count() == 3);
    CHECK(h.vertex_name(0) == "b");
    CHECK(h.vertex_name(1) == "a");
    CHECK(h.vertex_name(2) == "c");
    CHECK(h.edge_count() == 2);
    CHECK(h.edge(0) == std::vector<int>{0, 1});  // sorted indexes
    CHECK(h.edges_with_vertex(h.index_of("a")) == std::vector<int>{0, 1});
}

TEST_CASE("undirected hypergraph rejects empty edges and unknown names") {
    CHECK_THROWS_AS(UndirectedHypergraph::from_edges({{}}), EmptyEdge);
    CHECK_THROWS_AS(UndirectedHypergraph({"a"}, {{"a", "b"}}), UnknownVertex);
    UndirectedHypergraph h({"a", "b"}, {{"b", "a", "b"}});
    CHECK(h.edge(0) == std::vector<int>{0, 1});
}
