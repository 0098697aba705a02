#include "hyperpath/oracles.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "hyperpath/connectivity.hpp"
#include "hyperpath/generators.hpp"

using namespace hyperpath;

namespace {

template <class T>
bool canonically_sorted(const std::vector<std::vector<T>>& family) {
    for (std::size_t i = 1; i < family.size(); ++i) {
        const auto& a = family[i - 1];
        const auto& b = family[i];
        if (a.size() != b.size() ? a.size() > b.size() : a >= b) return false;
    }
    return true;
}

template <class T>
bool any_containment(const std::vector<std::vector<T>>& family) {
    for (const auto& small : family)
        for (const auto& big : family)
            if (&small != &big &&
                std::includes(big.begin(), big.end(), small.begin(), small.end()))
                return true;
    return false;
}

}  // namespace

TEST_CASE("hyperpath oracle finds both routes through the gadget") {
    DirectedHypergraph d = DirectedHypergraph::build(
        {"s", "v1", "v2", "t"},
        {{{"s"}, {"v1"}}, {{"s"}, {"v2"}}, {{"v1", "v2"}, {"t"}}, {{"v1"}, {"t"}}});
    auto family = oracle_hyperpaths(d, {"s"}, {"t"});
    REQUIRE(family.size() == 2);
    CHECK(family[0] == std::vector<ArcId>{0, 3});
    CHECK(family[1] == std::vector<ArcId>{0, 1, 2});
}

TEST_CASE("hyperpath oracle edge cases") {
    DirectedHypergraph d = DirectedHypergraph::build({"a", "b"}, {{{"a"}, {"b"}}});
    CHECK(oracle_hyperpaths(d, {"b"}, {"a"}).empty());
    CHECK(oracle_hyperpaths(d, {"a"}, {"a"}) == std::vector<std::vector<ArcId>>{{}});
    CHECK(oracle_hyperpaths(d, {"a"}, {}) == std::vector<std::vector<ArcId>>{{}});
}

TEST_CASE("induced oracle keeps whole vertex sets") {
    DirectedHypergraph chain =
        DirectedHypergraph::build({"s", "a", "t"}, {{{"s"}, {"a"}}, {{"a"}, {"t"}}});
    auto family = oracle_induced_hyperpaths(chain, "s", "t");
    REQUIRE(family.size() == 1);
    CHECK(family[0] == std::vector<VertexId>{"a", "s", "t"});

    DirectedHypergraph direct = DirectedHypergraph::build({"s", "t"}, {{{"s"}, {"t"}}});
    auto tight = oracle_induced_hyperpaths(direct, "s", "t");
    REQUIRE(tight.size() == 1);
    CHECK(tight[0] == std::vector<VertexId>{"s", "t"});
}

TEST_CASE("separator oracle cuts every route") {
    DirectedHypergraph diamond = DirectedHypergraph::build(
        {"s", "a", "b", "t"},
        {{{"s"}, {"a"}}, {{"s"}, {"b"}}, {{"a"}, {"t"}}, {{"b"}, {"t"}}});
    auto family = oracle_minimal_separators(diamond, "s", "t");
    REQUIRE(family.size() == 1);
    CHECK(family[0] == std::vector<VertexId>{"a", "b"});

    DirectedHypergraph direct = DirectedHypergraph::build({"s", "t"}, {{{"s"}, {"t"}}});
    CHECK(oracle_minimal_separators(direct, "s", "t").empty());

    CHECK(oracle_minimal_separators(diamond, "s", "s").empty());
}

TEST_CASE("transversal oracle hits every edge") {
    UndirectedHypergraph h = UndirectedHypergraph::from_edges({{"1", "2"}, {"2", "3"}});
    auto family = oracle_minimal_transversals(h);
    REQUIRE(family.size() == 2);
    CHECK(family[0] == std::vector<VertexId>{"2"});
    CHECK(family[1] == std::vector<VertexId>{"1", "3"});

    UndirectedHypergraph edgeless;
    CHECK(oracle_minimal_transversals(edgeless) == std::vector<std::vector<VertexId>>{{}});

    UndirectedHypergraph single = UndirectedHypergraph::from_edges({{"a"}});
    CHECK(oracle_minimal_transversals(single) == std::vector<std::vector<VertexId>>{{"a"}});
}

TEST_CASE("scans refuse oversized search spaces") {
    std::mt19937 rng(3);
    DirectedHypergraph d = make_random_b_hypergraph(5, 22, rng);
    CHECK_THROWS_AS(oracle_hyperpaths(d, {d.vertex_name(0)}, {d.vertex_name(4)}, 20), CapExceeded);
    CHECK_NOTHROW(oracle_hyperpaths(d, {d.vertex_name(0)}, {d.vertex_name(4)}, 22));
}

TEST_CASE("oracle families are canonical and containment free") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        DirectedHypergraph d = make_random_b_hypergraph(3 + trial % 4, 2 + trial % 8, rng);
        VertexId s = d.vertex_name(0);
        VertexId t = d.vertex_name(d.vertex_count() - 1);
        auto paths = oracle_hyperpaths(d, {s}, {t});
        CHECK(canonically_sorted(paths));
        CHECK_FALSE(any_containment(paths));
        for (const auto& p : paths) CHECK(verify_hyperpath(d, {s}, {t}, p));

        auto seps = oracle_minimal_separators(d, s, t);
        CHECK(canonically_sorted(seps));
        auto induced = oracle_induced_hyperpaths(d, s, t);
        CHECK(canonically_sorted(induced));
    }
}

TEST_CASE("parallel scans match the serial reference") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        DirectedHypergraph d = make_random_b_hypergraph(4 + trial % 3, 3 + trial % 10, rng);
        VertexId s = d.vertex_name(0);
        VertexId t = d.vertex_name(d.vertex_count() - 1);
        CHECK(oracle_hyperpaths(d, {s}, {t}) == serial::oracle_hyperpaths(d, {s}, {t}));
        CHECK(oracle_induced_hyperpaths(d, s, t) == serial::oracle_induced_hyperpaths(d, s, t));
        CHECK(oracle_minimal_separators(d, s, t) == serial::oracle_minimal_separators(d, s, t));

        UndirectedHypergraph h = make_random_hypergraph(6, 6, rng);
        CHECK(oracle_minimal_transversals(h) == serial::oracle_minimal_transversals(h));
    }
}
