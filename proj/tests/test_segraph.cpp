#include <cstdio>
#include <set>

#include "doctest.h"
#include "qpath/segraph.hpp"

using namespace qpath;

namespace {

// one source, one sink, one bend: r1 -> w -> c1
SEGraph one_bend() {
    std::vector<Vertex> vs = {
        {"r1", 0, 1, VertexKind::source},
        {"w", 1, 1, VertexKind::inner},
        {"c1", 1, 0, VertexKind::sink},
    };
    std::vector<Edge> es = {{0, 1}, {1, 2}};
    return SEGraph(vs, es);
}

}  // namespace

TEST_CASE("one-bend graph is a valid SE-graph") {
    SEGraph g = one_bend();
    CHECK(validate(g).ok());
    CHECK(g.num_sources() == 1);
    CHECK(g.num_sinks() == 1);
    CHECK(g.inner().size() == 1);
    CHECK(g.orient(0) == EdgeOrient::H);
    CHECK(g.orient(1) == EdgeOrient::V);
}

TEST_CASE("an upward edge is rejected") {
    std::vector<Vertex> vs = {
        {"r1", 0, 1, VertexKind::source},
        {"w", 1, 1, VertexKind::inner},
        {"w2", 1, 2, VertexKind::inner},
        {"c1", 1, 0, VertexKind::sink},
    };
    std::vector<Edge> es = {{0, 1}, {2, 1}, {1, 3}};
    SEGraph g(vs, es);
    CHECK(!validate(g).ok());
}

TEST_CASE("full grids validate at several sizes") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            SEGraph g = full_grid(m, n);
            ValidationReport rep = validate(g);
            INFO(m << "x" << n << ": " << rep.str());
            CHECK(rep.ok());
            CHECK(g.num_sources() == m);
            CHECK(g.num_sinks() == n);
            CHECK(static_cast<int>(g.inner().size()) == m * n);
        }
}

TEST_CASE("source order is bottom to top and sink order is left to right") {
    SEGraph g = full_grid(3, 2);
    const auto& v = g.vertices();
    for (std::size_t i = 0; i + 1 < g.sources().size(); ++i)
        CHECK(v[g.sources()[i]].y < v[g.sources()[i + 1]].y);
    for (std::size_t j = 0; j + 1 < g.sinks().size(); ++j)
        CHECK(v[g.sinks()[j]].x < v[g.sinks()[j + 1]].x);
}

TEST_CASE("commutation table matches the path structure of the 2x2 grid") {
    SEGraph g = full_grid(2, 2);
    CommutationTable t = commutation_table(g);
    auto gen = [&](const std::string& id) { return g.generator_of(g.index_of(id)); };
    // same row, left to right: +1
    CHECK(t.lambda(gen("w1_1"), gen("w2_1")) == +1);
    CHECK(t.lambda(gen("w1_2"), gen("w2_2")) == +1);
    // same column, top to bottom: -1
    CHECK(t.lambda(gen("w1_2"), gen("w1_1")) == -1);
    CHECK(t.lambda(gen("w2_2"), gen("w2_1")) == -1);
    // diagonal pairs commute
    CHECK(t.lambda(gen("w1_2"), gen("w2_1")) == 0);
    CHECK(t.lambda(gen("w1_1"), gen("w2_2")) == 0);
}

TEST_CASE("shared coordinates agree with the commutation table") {
    // on a valid graph two inner vertices share an alpha exactly when one
    // reaches the other along V-edges, and a beta exactly when along H-edges
    for (std::uint64_t seed : {3u, 11u, 29u}) {
        SEGraph g = generate_grid_subgraph(3, 3, seed, 0.75);
        CommutationTable t = commutation_table(g);
        const auto& v = g.vertices();
        for (std::size_t a = 0; a < g.inner().size(); ++a)
            for (std::size_t b = a + 1; b < g.inner().size(); ++b) {
                int va = g.inner()[a], vb = g.inner()[b];
                int lam = t.lambda(static_cast<GeneratorId>(a), static_cast<GeneratorId>(b));
                // a precedes b canonically, so a shared column means a is
                // above b (a vertical path a -> b) and a shared row means a
                // is left of b (a horizontal path a -> b)
                CHECK((v[va].x == v[vb].x) == (lam == -1));
                CHECK((v[va].y == v[vb].y) == (lam == +1));
            }
    }
}

TEST_CASE("generated subgraphs always validate") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        SEGraph g = generate_grid_subgraph(4, 4, seed, 0.6);
        ValidationReport rep = validate(g);
        INFO("seed " << seed << ": " << rep.str());
        CHECK(rep.ok());
    }
}

TEST_CASE("generation is deterministic in the seed") {
    SEGraph a = generate_grid_subgraph(3, 4, 17, 0.7);
    SEGraph b = generate_grid_subgraph(3, 4, 17, 0.7);
    CHECK(graph_to_json_text(a) == graph_to_json_text(b));
}

TEST_CASE("all-white diagram gives the full grid") {
    SEGraph g = cauchon_graph({"..", ".."});
    CHECK(validate(g).ok());
    CHECK(g.num_sources() == 2);
    CHECK(g.num_sinks() == 2);
    CHECK(g.inner().size() == 4);
    CHECK(g.edges().size() == full_grid(2, 2).edges().size());
}

TEST_CASE("all-black diagram has nothing left") {
    CHECK_THROWS(cauchon_graph({"##", "##"}));
}

TEST_CASE("admissible black cell is skipped over") {
    // the black cell sits at the right edge, so the rule holds vacuously
    SEGraph g = cauchon_graph({"...", "..#", "..."});
    CHECK(validate(g).ok());
    CHECK(g.inner().size() == 8);
}

TEST_CASE("inadmissible black cell is reported") {
    // white above and white to the right of the middle cell
    try {
        cauchon_graph({"...", ".#.", "..."});
        FAIL("expected a rejection");
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
}

TEST_CASE("json round trip preserves the graph") {
    SEGraph g = generate_grid_subgraph(3, 3, 5, 0.8);
    SEGraph h = graph_from_json_text(graph_to_json_text(g));
    CHECK(g.vertices() == h.vertices());
    CHECK(g.edges() == h.edges());
}

TEST_CASE("file round trip") {
    SEGraph g = full_grid(2, 3);
    std::string path = "tmp_roundtrip_graph.json";
    save_graph(g, path);
    SEGraph h = load_graph(path);
    std::remove(path.c_str());
    CHECK(g.vertices() == h.vertices());
    CHECK(g.edges() == h.edges());
}

TEST_CASE("loading an invalid graph fails") {
    // edge pointing north-east
    std::string text = R"({
      "vertices": [
        {"id": "r1", "x": 0, "y": 1, "kind": "source"},
        {"id": "w", "x": 1, "y": 2, "kind": "inner"},
        {"id": "c1", "x": 1, "y": 0, "kind": "sink"}
      ],
      "edges": [
        {"tail": "r1", "head": "w"},
        {"tail": "w", "head": "c1"}
      ]
    })";
    SEGraph g = graph_from_json_text(text);
    CHECK(!validate(g).ok());
    std::string path = "tmp_bad_graph.json";
    save_graph(g, path);
    CHECK_THROWS(load_graph(path));
    std::remove(path.c_str());
}

TEST_CASE("relayout compacts coordinates without changing validity") {
    SEGraph g = generate_grid_subgraph(4, 3, 9, 0.65);
    SEGraph h = relayout(g);
    CHECK(validate(h).ok());
    CHECK(h.vertices().size() == g.vertices().size());
    CHECK(h.edges().size() == g.edges().size());
    std::set<std::int64_t> alphas;
    for (const Vertex& v : h.vertices()) alphas.insert(v.x);
    CHECK(static_cast<int>(alphas.size()) <= static_cast<int>(h.vertices().size()));
}
