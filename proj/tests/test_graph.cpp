#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <vector>

#include "liftcut/errors.hpp"
#include "liftcut/graph.hpp"
#include "liftcut/log.hpp"
#include "liftcut/rng.hpp"
#include "test_helpers.hpp"

using namespace liftcut;
using namespace testutil;

TEST_SUITE("graph") {

TEST_CASE("construction sorts, deduplicates, and symmetrizes") {
    const Graph g(3, {{1, 0}, {0, 1}, {2, 1}});
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    const auto n1 = g.neighbors(1);
    CHECK(std::vector<NodeId>(n1.begin(), n1.end()) == std::vector<NodeId>{0, 2});
    // symmetry: u in N(v) <=> v in N(u)
    for (NodeId v = 0; v < g.node_count(); ++v)
        for (NodeId u : g.neighbors(v)) {
            const auto nb = g.neighbors(u);
            CHECK(std::count(nb.begin(), nb.end(), v) == 1);
        }
}

TEST_CASE("degree sum equals twice the edge count") {
    RngStream stream(3);
    for (int rep = 0; rep < 20; ++rep) {
        const Graph g = random_connected(30, 0.1, stream);
        std::int64_t sum = 0;
        for (NodeId v = 0; v < g.node_count(); ++v) sum += g.degree(v);
        CHECK(sum == 2 * g.edge_count());
        std::int64_t max_deg = 0;
        for (NodeId v = 0; v < g.node_count(); ++v) max_deg = std::max(max_deg, g.degree(v));
        CHECK(g.max_degree() == max_deg);
    }
}

TEST_CASE("self-loops and out-of-range endpoints are rejected") {
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), ValidationError);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), ValidationError);
}

TEST_CASE("parse: single edge") {
    const Graph g = parse_edge_list("2 1\n1 2\n");
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("parse: triangle") {
    const Graph g = parse_edge_list("3 3\n1 2\n2 3\n1 3\n");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 3);
}

TEST_CASE("parse: self-loop is a validation error") {
    CHECK_THROWS_AS(parse_edge_list("3 2\n1 2\n1 1\n"), ValidationError);
}

TEST_CASE("parse: malformed line reports its number") {
    try {
        parse_edge_list("2 1\nnot an edge\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
}

TEST_CASE("parse: comments and weights are tolerated") {
    std::ostringstream warnings;
    set_warning_stream(&warnings);
    const Graph g = parse_edge_list("% header comment\n3 2\n# mid comment\n1 2 5\n2 3 -1\n");
    set_warning_stream(&std::cerr);
    CHECK(g.edge_count() == 2);
    CHECK(warnings.str().find("weight") != std::string::npos);
}

TEST_CASE("parse: out-of-range node id") {
    CHECK_THROWS(parse_edge_list("2 1\n1 3\n"));
}

TEST_CASE("round-trip through the canonical serialization") {
    RngStream stream(14);
    for (int rep = 0; rep < 10; ++rep) {
        const Graph g = random_connected(25, 0.15, stream);
        const Graph back = parse_edge_list(serialize_edge_list(g));
        CHECK(back.node_count() == g.node_count());
        CHECK(back.edges() == g.edges());
        CHECK(serialize_edge_list(back) == serialize_edge_list(g));
    }
}

TEST_CASE("generate_er: p=0 gives isolated nodes") {
    const Graph g = generate_er(5, 0.0, 123);
    CHECK(g.node_count() == 5);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("generate_er: p=1 gives the complete graph") {
    const Graph g = generate_er(5, 1.0, 9);
    CHECK(g.edge_count() == 10);
}

TEST_CASE("generate_er: deterministic per seed") {
    const Graph a = generate_er(100, 0.5, 7);
    const Graph b = generate_er(100, 0.5, 7);
    CHECK(a.edges() == b.edges());
    const Graph c = generate_er(100, 0.5, 8);
    CHECK(a.edges() != c.edges());
}

TEST_CASE("generate_er: edge count concentrates around p*n*(n-1)/2") {
    const NodeId n = 100;
    const double p = 0.3;
    const double pairs = n * (n - 1) / 2.0;
    const double stddev = std::sqrt(pairs * p * (1 - p));
    const Graph g = generate_er(n, p, 2026);
    CHECK(std::abs(static_cast<double>(g.edge_count()) - p * pairs) < 4 * stddev);
}

TEST_CASE("generate_er rejects bad p") {
    CHECK_THROWS_AS(generate_er(5, -0.1, 0), ValidationError);
    CHECK_THROWS_AS(generate_er(5, 1.1, 0), ValidationError);
}

TEST_CASE("connected_components: triangle is one component") {
    const auto comps = triangle().connected_components();
    REQUIRE(comps.size() == 1);
    CHECK(comps[0] == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("connected_components: two disjoint edges") {
    const Graph g(4, {{0, 1}, {2, 3}});
    const auto comps = g.connected_components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<NodeId>{0, 1});
    CHECK(comps[1] == std::vector<NodeId>{2, 3});
}

TEST_CASE("connected_components: edgeless graph gives singletons") {
    const Graph g(3, {});
    const auto comps = g.connected_components();
    REQUIRE(comps.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        REQUIRE(comps[i].size() == 1);
        CHECK(comps[i][0] == static_cast<NodeId>(i));
    }
}

TEST_CASE("components partition the node set") {
    RngStream stream(31);
    const Graph g(40, [&] {
        std::vector<Edge> edges;
        for (int e = 0; e < 35; ++e) {
            const NodeId u = static_cast<NodeId>(stream.next_int(0, 39));
            const NodeId v = static_cast<NodeId>(stream.next_int(0, 39));
            if (u != v) edges.push_back({std::min(u, v), std::max(u, v)});
        }
        return edges;
    }());
    std::set<NodeId> seen;
    for (const auto& comp : g.connected_components())
        for (NodeId v : comp) CHECK(seen.insert(v).second);
    CHECK(seen.size() == 40);
}

TEST_CASE("induced_subgraph relabels in the given order") {
    const Graph g(5, {{0, 1}, {1, 2}, {3, 4}});
    const std::vector<NodeId> nodes{3, 4};
    const Graph sub = g.induced_subgraph(nodes);
    CHECK(sub.node_count() == 2);
    CHECK(sub.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("degree_stats: star S3") {
    const DegreeStats s = star(3).degree_stats();
    CHECK(s.mean == doctest::Approx(1.5));
    CHECK(s.variance == doctest::Approx(0.75));
    CHECK(s.std_dev == doctest::Approx(std::sqrt(0.75)));
}

TEST_CASE("degree_stats: regular graphs have zero variance") {
    CHECK(c5().degree_stats().variance == doctest::Approx(0.0));
    CHECK(k4().degree_stats().variance == doctest::Approx(0.0));
}

TEST_CASE("degree_stats: single edge") {
    const DegreeStats s = single_edge().degree_stats();
    CHECK(s.mean == doctest::Approx(1.0));
    CHECK(s.variance == doctest::Approx(0.0));
}

TEST_CASE("degree_stats mean equals 2m/n") {
    RngStream stream(77);
    const Graph g = random_connected(33, 0.2, stream);
    CHECK(g.degree_stats().mean ==
          doctest::Approx(2.0 * static_cast<double>(g.edge_count()) / 33.0));
}

TEST_CASE("laplacian_apply: single edge") {
    const Graph g = single_edge();
    const std::vector<double> x{1.0, -1.0};
    std::vector<double> y(2);
    g.laplacian_apply(x, y);
    CHECK(y == std::vector<double>{2.0, -2.0});
}

TEST_CASE("laplacian_apply: all-ones is in the null space") {
    RngStream stream(5);
    const Graph g = random_connected(20, 0.2, stream);
    const std::vector<double> ones(20, 1.0);
    std::vector<double> y(20);
    g.laplacian_apply(ones, y);
    for (double v : y) CHECK(v == 0.0);
    // integer multiples stay exactly zero
    const std::vector<double> threes(20, 3.0);
    g.laplacian_apply(threes, y);
    for (double v : y) CHECK(v == 0.0);
}

TEST_CASE("laplacian_apply: K3 basis vector") {
    const Graph g = triangle();
    const std::vector<double> x{1.0, 0.0, 0.0};
    std::vector<double> y(3);
    g.laplacian_apply(x, y);
    CHECK(y == std::vector<double>{2.0, -1.0, -1.0});
}

TEST_CASE("laplacian_apply rejects shape mismatches") {
    const Graph g = triangle();
    std::vector<double> x(2), y(3);
    CHECK_THROWS_AS(g.laplacian_apply(x, y), ShapeError);
}

TEST_CASE("quadratic form is PSD and matches the edge-sum identity") {
    RngStream stream(41);
    for (int rep = 0; rep < 5; ++rep) {
        const Graph g = random_connected(24, 0.2, stream);
        std::vector<double> y(24);
        for (int t = 0; t < 1000; ++t) {
            const std::vector<double> x = random_box_vector(24, stream);
            g.laplacian_apply(x, y);
            double quad = 0.0;
            for (std::size_t v = 0; v < x.size(); ++v) quad += x[v] * y[v];
            double edge_sum = 0.0;
            for (const auto& [u, v] : g.edges())
                edge_sum += (x[u] - x[v]) * (x[u] - x[v]);
            CHECK(quad >= -1e-9);
            CHECK(quad == doctest::Approx(edge_sum).epsilon(1e-9));
        }
    }
}

TEST_CASE("null space of a connected graph is only the constants") {
    RngStream stream(43);
    for (int rep = 0; rep < 5; ++rep) {
        const Graph g = random_connected(16, 0.25, stream);
        std::vector<double> y(16);
        for (int t = 0; t < 1000; ++t) {
            std::vector<double> x = random_box_vector(16, stream);
            if (t % 10 == 0) x.assign(16, x[0]);  // plant constants to exercise the branch
            g.laplacian_apply(x, y);
            double norm = 0.0;
            for (double v : y) norm = std::max(norm, std::abs(v));
            if (norm < 1e-12) {
                const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
                CHECK(*hi - *lo < 1e-12);
            }
        }
    }
}

TEST_CASE("laplacian is symmetric as a bilinear form") {
    RngStream stream(47);
    const Graph g = random_connected(20, 0.3, stream);
    std::vector<double> lx(20), ly(20);
    for (int t = 0; t < 200; ++t) {
        const std::vector<double> x = random_box_vector(20, stream);
        const std::vector<double> y = random_box_vector(20, stream);
        g.laplacian_apply(x, lx);
        g.laplacian_apply(y, ly);
        double xly = 0.0, ylx = 0.0;
        for (std::size_t v = 0; v < 20; ++v) {
            xly += x[v] * ly[v];
            ylx += y[v] * lx[v];
        }
        CHECK(xly == doctest::Approx(ylx).epsilon(1e-9));
    }
}

} // TEST_SUITE graph
