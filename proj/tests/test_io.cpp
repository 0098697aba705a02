#include "hyperpath/io.hpp"

#include <random>
#include <string>

#include "doctest.h"
#include "hyperpath/generators.hpp"

using namespace hyperpath;

TEST_CASE("arc lines parse with inferred vertices") {
    DirectedHypergraph d = parse_dhg("a b -> c\nc -> d\n");
    CHECK(d.vertex_count() == 4);
    CHECK(d.vertex_name(0) == "a");  // appearance order
    CHECK(d.vertex_name(3) == "d");
    CHECK(d.arc_count() == 2);
    CHECK(d.arc(0).tails == std::vector<int>{0, 1});
}

TEST_CASE("the vertex header declares the whole set") {
    DirectedHypergraph d = parse_dhg("# comment\n\nvertices: x y z\nx -> y\n");
    CHECK(d.vertex_count() == 3);
    CHECK(d.find_vertex("z").has_value());  // declared but isolated

    CHECK_THROWS_AS(parse_dhg("x -> y\nvertices: x y\n"), SyntaxError);
    CHECK_THROWS_AS(parse_dhg("vertices: x x\n"), SyntaxError);
    CHECK_THROWS_AS(parse_dhg("vertices: x y\nx -> w\n"), UnknownVertex);
}

TEST_CASE("comments and blank lines are skipped") {
    DirectedHypergraph d = parse_dhg("a -> b # trailing words\n\n# whole line\nb -> c\n");
    CHECK(d.arc_count() == 2);
    CHECK(d.vertex_count() == 3);
}

TEST_CASE("arc syntax errors carry their position") {
    CHECK_THROWS_AS(parse_dhg("a b c\n"), SyntaxError);
    CHECK_THROWS_AS(parse_dhg("a -> b -> c\n"), SyntaxError);

    try {
        parse_dhg("a -> b\na -> b -> c\n");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 8);
    }

    CHECK_THROWS_AS(parse_dhg("s ->\n"), EmptySide);
    CHECK_THROWS_AS(parse_dhg("-> t\n"), EmptySide);
    CHECK_THROWS_AS(parse_dhg("a -> a\n"), DisjointnessViolation);
    try {
        parse_dhg("s ->\n");
    } catch (const EmptySide& e) {
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
}

TEST_CASE("directed graphs survive a round trip exactly") {
    const std::string text = "vertices: s v1 v2 t lonely\ns -> v1\ns -> v2\nv1 v2 -> t\n";
    DirectedHypergraph d = parse_dhg(text);
    CHECK(serialize_dhg(d) == text);

    std::mt19937 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        DirectedHypergraph g = make_random_b_hypergraph(2 + trial % 6, 1 + trial % 9, rng);
        std::string s = serialize_dhg(g);
        CHECK(serialize_dhg(parse_dhg(s)) == s);
    }
}

TEST_CASE("reduction outputs survive a round trip") {
    CnfFormula f{2, {{1, -2, 2}, {-1, 2, 2}}};
    for (bool bounded : {false, true}) {
        std::string ind = serialize_dhg(reduce_sat_induced(f, bounded).graph);
        CHECK(serialize_dhg(parse_dhg(ind)) == ind);
        std::string sep = serialize_dhg(reduce_sat_separator(f, bounded).graph);
        CHECK(serialize_dhg(parse_dhg(sep)) == sep);
    }
}

TEST_CASE("cnf parsing accepts the dimacs shape") {
    CnfFormula f = parse_cnf("c header comment\np cnf 2 2\n1 -2 2 0\nc mid\n-1 2 2 0\n");
    CHECK(f.num_vars == 2);
    REQUIRE(f.clauses.size() == 2);
    CHECK(f.clauses[0] == std::array<int, 3>{1, -2, 2});
    CHECK(f.clauses[1] == std::array<int, 3>{-1, 2, 2});

    CnfFormula single = parse_cnf("p cnf 1 1\n1 1 1 0\n");
    CHECK(single.num_vars == 1);
    CHECK(single.clauses.size() == 1);
}

TEST_CASE("cnf parsing rejects what it cannot encode") {
    CHECK_THROWS_AS(parse_cnf(""), SyntaxError);
    CHECK_THROWS_AS(parse_cnf("p sat 1 1\n1 1 1 0\n"), SyntaxError);
    CHECK_THROWS_AS(parse_cnf("p cnf 2 1\n1 -2 0\n"), NotThreeCnf);
    CHECK_THROWS_AS(parse_cnf("p cnf 2 1\n1 1 2 2 0\n"), NotThreeCnf);
    CHECK_THROWS_AS(parse_cnf("p cnf 1 2\n1 1 1 0\n"), HeaderMismatch);
    CHECK_THROWS_AS(parse_cnf("p cnf 1 1\n1 1 1 0\n1 1 1 0\n"), HeaderMismatch);
    CHECK_THROWS_AS(parse_cnf("p cnf 1 1\n1 1 2 0\n"), HeaderMismatch);
    CHECK_THROWS_AS(parse_cnf("p cnf 1 1\n1 1 1\n"), SyntaxError);
    CHECK_THROWS_AS(parse_cnf("p cnf 1 one\n"), SyntaxError);
}

TEST_CASE("undirected hypergraphs parse and serialize") {
    UndirectedHypergraph h = parse_hg("1 2\n# comment\n2 3\n");
    CHECK(h.vertex_count() == 3);
    CHECK(h.edge_count() == 2);
    CHECK(serialize_hg(h) == "1 2\n2 3\n");

    UndirectedHypergraph dup = parse_hg("b b b\n");
    CHECK(dup.edge(0) == std::vector<int>{0});
}

TEST_CASE("metadata sidecars name the pieces of an instance") {
    SatInducedInstance ind = reduce_sat_induced(CnfFormula{1, {{1, 1, 1}}});
    std::string meta = metadata_text(ind);
    CHECK(meta.find("format: sat-induced\n") != std::string::npos);
    CHECK(meta.find("variant: base\n") != std::string::npos);
    CHECK(meta.find("var: x1 ~x1\n") != std::string::npos);
    CHECK(meta.find("seed-path: s t x1 ~x1\n") != std::string::npos);

    SatSeparatorInstance sep = reduce_sat_separator(CnfFormula{1, {{1, 1, 1}}}, true);
    std::string sep_meta = metadata_text(sep);
    CHECK(sep_meta.find("format: sat-separator\n") != std::string::npos);
    CHECK(sep_meta.find("variant: bounded-tail\n") != std::string::npos);
    CHECK(sep_meta.find("collector: c\n") != std::string::npos);
    CHECK(sep_meta.find("dummy-var: x2\n") != std::string::npos);

    TransversalMapping m = reduce_transversal(UndirectedHypergraph::from_edges({{"1", "2"}}));
    std::string tr_meta = metadata_text(m);
    CHECK(tr_meta.find("format: transversal\n") != std::string::npos);
    CHECK(tr_meta.find("final-arc: 2\n") != std::string::npos);
    CHECK(tr_meta.find("vertex-arc: 1 0\n") != std::string::npos);
}

TEST_CASE("hyperpath instances parse from the documented examples") {
    DirectedHypergraph d = parse_dhg("vertices: s v1 v2 t\ns -> v1\ns -> v2\nv1 v2 -> t\nv1 -> t\n");
    CHECK(d.arc_count() == 4);
    CHECK(d.arc(2).tails.size() == 2);
}
