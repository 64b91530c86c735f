#include <gtest/gtest.h>

#include <sstream>

#include "mekr/bijection.hpp"
#include "mekr/families.hpp"
#include "mekr/graph.hpp"
#include "oracles.hpp"

using namespace mekr;

namespace {

std::string dimacs(const GraphSpec& spec) {
    std::ostringstream os;
    export_graph(spec, ExportFormat::dimacs, os);
    return os.str();
}

}  // namespace

TEST(GraphSpec, Validation) {
    EXPECT_THROW(GraphSpec::multiset(3, 2, 3), std::invalid_argument);
    EXPECT_THROW(GraphSpec::multiset(3, 2, 0), std::invalid_argument);
    EXPECT_THROW(GraphSpec::set(3, 4), std::invalid_argument);
    EXPECT_THROW(GraphSpec::multiset(0, 2), std::invalid_argument);
    EXPECT_EQ(GraphSpec::multiset(7, 5, 2).name(), "M(7,5,2)");
}

TEST(VertexCount, Examples) {
    EXPECT_EQ(vertex_count(GraphSpec::multiset(4, 3)), 20);
    EXPECT_EQ(vertex_count(GraphSpec::set(6, 3)), 20);
    EXPECT_EQ(vertex_count(GraphSpec::multiset(2, 3)), 4);
    EXPECT_EQ(vertex_count(GraphSpec::multiset(2, 3)), oracle::multisets(2, 3).size());
}

TEST(Adjacent, Examples) {
    const auto m23 = GraphSpec::multiset(2, 3);
    EXPECT_TRUE(adjacent(m23, rank_of(m23, Multiset::from_elements(2, {1, 1, 1})),
                         rank_of(m23, Multiset::from_elements(2, {2, 2, 2}))));
    const auto m752 = GraphSpec::multiset(7, 5, 2);
    EXPECT_TRUE(adjacent(m752, rank_of(m752, Multiset::from_elements(7, {1, 1, 2, 3, 4})),
                         rank_of(m752, Multiset::from_elements(7, {1, 5, 5, 6, 7}))));
    const auto k52 = GraphSpec::set(5, 2);
    EXPECT_FALSE(adjacent(k52, rank_of(k52, Multiset::from_elements(5, {1, 2})),
                          rank_of(k52, Multiset::from_elements(5, {1, 3}))));
    EXPECT_FALSE(adjacent(k52, 3, 3));
    EXPECT_THROW(adjacent(k52, 0, 10), std::out_of_range);
}

TEST(BuildGraph, MultisetThreeTwo) {
    const auto g = build_graph(GraphSpec::multiset(3, 2));
    ASSERT_EQ(g.vertex_count(), 6u);
    // 11 12 13 22 23 33 in rank order.
    const std::vector<std::pair<std::size_t, std::size_t>> expected{{0, 3}, {0, 4}, {0, 5}, {1, 5}, {2, 3}, {3, 5}};
    EXPECT_EQ(g.edges(), expected);
}

TEST(BuildGraph, KneserFourTwoIsPerfectMatching) {
    const auto g = build_graph(GraphSpec::set(4, 2));
    EXPECT_EQ(g.vertex_count(), 6u);
    EXPECT_EQ(g.edge_count(), 3u);
    for (std::size_t v = 0; v < 6; ++v) {
        EXPECT_EQ(g.degree(v), 1u);
    }
}

TEST(BuildGraph, MultisetThreeThreeEdgeCensus) {
    const auto g = build_graph(GraphSpec::multiset(3, 3));
    EXPECT_EQ(g.vertex_count(), 10u);
    const auto objs = oracle::multisets(3, 3);
    std::size_t oracle_edges = 0;
    for (std::size_t i = 0; i < objs.size(); ++i) {
        for (std::size_t j = i + 1; j < objs.size(); ++j) {
            oracle_edges += oracle::meet(objs[i], objs[j]) < 1 ? 1 : 0;
        }
    }
    EXPECT_EQ(oracle_edges, 9u);
    EXPECT_EQ(g.edge_count(), oracle_edges);
}

TEST(BuildGraph, MatchesLazyOracleSymmetricIrreflexive) {
    for (const auto& spec : {GraphSpec::multiset(3, 3, 2), GraphSpec::multiset(4, 3, 1), GraphSpec::set(6, 3, 2),
                             GraphSpec::multiset(5, 2, 1)}) {
        const auto g = build_graph(spec);
        for (std::size_t u = 0; u < g.vertex_count(); ++u) {
            ASSERT_FALSE(g.adjacent(u, u));
            for (std::size_t v = 0; v < g.vertex_count(); ++v) {
                ASSERT_EQ(g.adjacent(u, v), g.adjacent(v, u));
                if (u != v) {
                    ASSERT_EQ(g.adjacent(u, v), adjacent(spec, u, v));
                }
            }
        }
    }
}

TEST(BuildGraph, LimitExceeded) {
    EXPECT_THROW(build_graph(GraphSpec::multiset(10, 10), 1000), limit_exceeded);
}

TEST(BuildGraph, IndependentSetsAreExactlyIntersectingFamilies) {
    for (const auto& spec : {GraphSpec::multiset(3, 2, 1), GraphSpec::multiset(2, 4, 2), GraphSpec::multiset(3, 3, 2),
                             GraphSpec::set(5, 2, 1)}) {
        const auto g = build_graph(spec);
        const auto vs = vertices(spec);
        const std::size_t n = vs.size();
        ASSERT_LE(n, 12u);
        for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
            std::vector<std::size_t> chosen;
            std::vector<Multiset> members;
            for (std::size_t i = 0; i < n; ++i) {
                if ((mask >> i) & 1U) {
                    chosen.push_back(i);
                    members.push_back(vs[i]);
                }
            }
            const Family f(spec.universe, spec.k, members);
            ASSERT_EQ(g.is_independent(chosen), is_t_intersecting_family(f, spec.t)) << spec.name() << " " << mask;
        }
    }
}

TEST(BuildGraph, KneserEmbedsAsSpanningSubgraphOfMultisetGraph) {
    for (int m = 1; m <= 7; ++m) {
        for (int k = 1; k <= 7; ++k) {
            if (multichoose(m, k) > 2000) {
                continue;
            }
            const auto kg = build_graph(GraphSpec::set(m + k - 1, k));
            const auto mg = build_graph(GraphSpec::multiset(m, k));
            std::vector<std::size_t> image(kg.vertex_count());
            for (std::size_t r = 0; r < kg.vertex_count(); ++r) {
                image[r] = rank_multiset(phi(unrank_subset(r, m + k - 1, k), m));
            }
            ASSERT_LE(kg.edge_count(), mg.edge_count());
            for (auto [u, v] : kg.edges()) {
                ASSERT_TRUE(mg.adjacent(image[u], image[v])) << m << " " << k;
            }
        }
    }
}

TEST(Export, Dimacs) {
    EXPECT_EQ(dimacs(GraphSpec::multiset(3, 2)), "p edge 6 6\ne 1 4\ne 1 5\ne 1 6\ne 2 6\ne 3 4\ne 4 6\n");
    EXPECT_EQ(dimacs(GraphSpec::set(4, 2)), "p edge 6 3\ne 1 6\ne 2 5\ne 3 4\n");
    EXPECT_EQ(dimacs(GraphSpec::multiset(1, 4, 2)), "p edge 1 0\n");
}

TEST(Export, EdgeList) {
    std::ostringstream os;
    export_graph(GraphSpec::set(4, 2), ExportFormat::edge_list, os);
    EXPECT_EQ(os.str(), "0 5\n1 4\n2 3\n");
}

TEST(Dimacs, ReadBackReproducesGraph) {
    for (const auto& spec : {GraphSpec::multiset(4, 3, 1), GraphSpec::multiset(3, 4, 2), GraphSpec::set(7, 3, 1)}) {
        const auto g = build_graph(spec);
        std::stringstream ss;
        write_dimacs(g, ss);
        const auto back = read_dimacs(ss);
        ASSERT_EQ(back.vertex_count(), g.vertex_count());
        ASSERT_EQ(back.edges(), g.edges());
    }
}

TEST(Dimacs, ToleratesCommentsAndRejectsGarbage) {
    std::istringstream ok("c a comment\np edge 3 2\ne 1 2\ne 3 2\ne 2 1\n");
    const auto g = read_dimacs(ok);
    EXPECT_EQ(g.edge_count(), 2u);
    std::istringstream bad_edge("p edge 3 1\ne 1 4\n");
    EXPECT_THROW(read_dimacs(bad_edge), std::runtime_error);
    std::istringstream no_header("e 1 2\n");
    EXPECT_THROW(read_dimacs(no_header), std::runtime_error);
    std::istringstream huge("p edge 100000 0\n");
    EXPECT_THROW(read_dimacs(huge, 1000), limit_exceeded);
}
