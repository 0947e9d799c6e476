#include <doctest.h>

#include "kgk/examples.hpp"
#include "kgk/fiber.hpp"
#include "kgk/json_io.hpp"

using namespace kgk;

namespace {

std::string crossing_text() {
    GeneratedExample ex = generate_example("ex54", {2, 3, 5, 7, 1, 1});
    return graph_to_json(ex.graph, &*ex.weights);
}

}  // namespace

TEST_CASE("serialize, parse, serialize is the identity") {
    std::string once = crossing_text();
    ParsedInput parsed = parse_kgraph_json(once);
    REQUIRE(parsed.weights.has_value());
    std::string twice = graph_to_json(parsed.graph, &*parsed.weights);
    CHECK(once == twice);

    // unweighted round trip, and vertex order is canonicalized
    GeneratedExample grid = generate_example("omega", {2, 2});
    std::swap(grid.graph.vertices[0], grid.graph.vertices[5]);
    std::string a = graph_to_json(grid.graph);
    ParsedInput p2 = parse_kgraph_json(a);
    CHECK_FALSE(p2.weights.has_value());
    CHECK(graph_to_json(p2.graph) == a);
    CHECK(p2.graph.vertices[0] == "0_0");
}

TEST_CASE("parsed graphs index and validate like generated ones") {
    ParsedInput parsed = parse_kgraph_json(crossing_text());
    KGraph g = KGraph::from_spec(parsed.graph);
    CHECK(g.rank() == 2);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 4);
    CHECK(validate_graph(g).ok);
    Weights w = Weights::from_raw(g, *parsed.weights);
    CHECK(w.n(g.edge_index("mu1")) == 7);
}

TEST_CASE("malformed documents are rejected with input errors") {
    CHECK_THROWS_AS(parse_kgraph_json("{"), InputError);
    CHECK_THROWS_AS(parse_kgraph_json("[1,2]"), InputError);
    CHECK_THROWS_AS(parse_kgraph_json("\"hi\""), InputError);

    // missing and unknown keys, at several depths
    CHECK_THROWS_WITH_AS(parse_kgraph_json(R"({"vertices":[],"edges":[],"flips":[]})"),
                         "missing \"rank\" in top level", InputError);
    CHECK_THROWS_WITH_AS(
        parse_kgraph_json(R"({"rank":1,"vertices":[],"edges":[],"flips":[],"extra":0})"),
        "unexpected key \"extra\" in top level", InputError);
    CHECK_THROWS_AS(
        parse_kgraph_json(
            R"({"rank":1,"vertices":["v"],"edges":[{"id":"e","color":1,"src":"v","rng":"v","w":1}],"flips":[]})"),
        InputError);
    CHECK_THROWS_AS(
        parse_kgraph_json(
            R"({"rank":2,"vertices":["v"],"edges":[],"flips":[{"i":1,"j":2,"pairs":[],"x":0}]})"),
        InputError);

    // type mismatches
    CHECK_THROWS_AS(parse_kgraph_json(R"({"rank":"two","vertices":[],"edges":[],"flips":[]})"),
                    InputError);
    CHECK_THROWS_AS(parse_kgraph_json(R"({"rank":1.5,"vertices":[],"edges":[],"flips":[]})"),
                    InputError);
    CHECK_THROWS_AS(parse_kgraph_json(R"({"rank":1,"vertices":[3],"edges":[],"flips":[]})"),
                    InputError);
    CHECK_THROWS_AS(
        parse_kgraph_json(
            R"({"rank":2,"vertices":["v"],"edges":[],"flips":[{"i":1,"j":2,"pairs":[["a","b","c"]]}]})"),
        InputError);
    CHECK_THROWS_AS(
        parse_kgraph_json(R"({"rank":1,"vertices":["v"],"edges":[],"flips":[],"weights":[1]})"),
        InputError);
    CHECK_THROWS_AS(
        parse_kgraph_json(
            R"({"rank":1,"vertices":["v"],"edges":[],"flips":[],"weights":{"m":{},"n":{},"o":{}}})"),
        InputError);
    CHECK_THROWS_AS(
        parse_kgraph_json(
            R"({"rank":1,"vertices":["v"],"edges":[],"flips":[],"weights":{"m":{"e":"x"},"n":{}}})"),
        InputError);
}

TEST_CASE("weights survive the round trip exactly") {
    GeneratedExample ex = generate_example("ex53", {-4, 3, 5, 3});
    std::string text = graph_to_json(ex.graph, &*ex.weights);
    ParsedInput parsed = parse_kgraph_json(text);
    REQUIRE(parsed.weights.has_value());
    CHECK(parsed.weights->m == ex.weights->m);
    CHECK(parsed.weights->n == ex.weights->n);
}

TEST_CASE("fiber tables export the pair, the colors and the rows") {
    GeneratedExample ex = generate_example("ex53", {2, 5, 3, 7});
    KGraph g = KGraph::from_spec(ex.graph);
    Weights w = Weights::from_raw(g, *ex.weights);
    FiberPermutation perm = solve_fiber_congruence(g, w, g.edge_index("l1"), g.edge_index("l2"));
    std::string text = fiber_permutation_to_json(g, perm);
    CHECK(text.find("\"pair\"") != std::string::npos);
    CHECK(text.find("\"l1\"") != std::string::npos);
    CHECK(text.find("\"colors\"") != std::string::npos);
    // one row per sheet, each serialized as a flat quadruple
    CHECK(text.find("[\n      0,\n      1,\n      1,\n      1\n    ]") != std::string::npos);
    size_t rows = 0;
    for (size_t at = text.find("[\n      "); at != std::string::npos;
         at = text.find("[\n      ", at + 1))
        ++rows;
    CHECK(rows == 6);
}
