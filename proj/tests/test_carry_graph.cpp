#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bentlab/carry_graph.hpp"

#include <random>
#include <set>

using namespace bentlab;

TEST_CASE("vertex enumeration") {
    CHECK(CarryGraph::kVertexCount == 162);
    std::set<int> seen;
    for (int i = 0; i < CarryGraph::kVertexCount; ++i) {
        auto v = CarryGraph::vertex_at(i);
        CHECK(CarryGraph::vertex_index(v) == i);
        seen.insert(i);
    }
    CHECK(seen.size() == 162);
    CHECK_THROWS_AS((void)CarryGraph::vertex_index({3, 0, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS((void)CarryGraph::vertex_at(162), std::out_of_range);
}

TEST_CASE("arc structure") {
    CarryGraph g;
    // From each vertex the carries are forced per choice of next digits, so
    // out-degree is exactly 9.
    CHECK(g.arcs().size() == 162 * 9);

    SUBCASE("the example arc out of the origin vertex") {
        int from = CarryGraph::vertex_index({0, 0, 0, 0, 0});
        int to = CarryGraph::vertex_index({0, 0, 0, 0, 2});  // c'' = d'' = 0
        int w = -1;
        REQUIRE(g.arc_weight(from, to, &w));
        CHECK(w == 0);  // s' = 0, t' = 2
    }

    SUBCASE("arcs that would need a digit outside {0,1,2} are absent") {
        // From (2,2,-2,0,0): s' = 0-4-2-3c'' needs c'' = -2; a target with
        // c'' = 0 would give s' = -6.
        int from = CarryGraph::vertex_index({2, 2, -2, 0, 0});
        int to = CarryGraph::vertex_index({0, 0, 0, 0, 2});
        CHECK_FALSE(g.arc_weight(from, to, nullptr));
    }

    SUBCASE("v-label must alternate") {
        int from = CarryGraph::vertex_index({0, 0, 0, 0, 0});
        int to = CarryGraph::vertex_index({0, 0, 0, 0, 0});
        CHECK_FALSE(g.arc_weight(from, to, nullptr));
    }
}

TEST_CASE("every arc weight is nonpositive and zero is attained") {
    CarryGraph g;
    auto [max_w, ok] = g.verify_arcs_nonpositive();
    CHECK(ok);
    CHECK(max_w == 0);
}

TEST_CASE("deterministic construction") {
    CarryGraph a, b;
    REQUIRE(a.arcs().size() == b.arcs().size());
    for (size_t i = 0; i < a.arcs().size(); ++i) {
        CHECK(a.arcs()[i].from == b.arcs()[i].from);
        CHECK(a.arcs()[i].to == b.arcs()[i].to);
        CHECK(a.arcs()[i].weight == b.arcs()[i].weight);
    }
}

TEST_CASE("instances walk the graph and recover the weight deficit") {
    CarryGraph g;

    SUBCASE("zero instance at k = 1") {
        auto walk = instance_to_walk(0, 0, 1, g);
        CHECK(walk.vertices.size() == 3);
        CHECK(walk.vertices.front() == walk.vertices.back());
        CHECK(walk.total_weight == 0);
    }

    SUBCASE("random instances, several word lengths") {
        std::mt19937_64 rng(53);
        for (int rep = 0; rep < 2000; ++rep) {
            int k = 1 + static_cast<int>(rng() % 4);
            long long m = static_cast<long long>(carry::modulus(3, 2 * k));
            long long a = static_cast<long long>(rng() % static_cast<unsigned long long>(m));
            long long b = static_cast<long long>(rng() % static_cast<unsigned long long>(m));
            auto walk = instance_to_walk(a, b, k, g);
            REQUIRE(walk.vertices.front() == walk.vertices.back());
            REQUIRE(walk.total_weight == 4 * k - carry::genwi_check(a, b, k));
            REQUIRE(walk.total_weight <= 0);
        }
    }
}

TEST_CASE("layered generalization") {
    SUBCASE("standard pattern reproduces the standard arcs") {
        auto c = carry::uvz_constants(2);
        GeneralizedCarryGraph layered(c.u, c.v);
        CHECK(layered.layers() == 4);
        auto [max_w, ok] = layered.verify_arcs_nonpositive();
        CHECK(ok);
        CHECK(max_w == 0);

        CarryGraph standard;
        std::mt19937_64 rng(59);
        for (int rep = 0; rep < 200; ++rep) {
            long long m = static_cast<long long>(carry::modulus(3, 4));
            long long a = static_cast<long long>(rng() % static_cast<unsigned long long>(m));
            long long b = static_cast<long long>(rng() % static_cast<unsigned long long>(m));
            CHECK(layered.instance_to_walk(a, b).total_weight ==
                  instance_to_walk(a, b, 2, standard).total_weight);
        }
    }

    SUBCASE("u identically zero still has nonpositive arcs") {
        carry::DigitVector u{3, 5, {0, 0, 0, 0, 0}};
        carry::DigitVector v{3, 5, {2, 1, 0, 2, 1}};
        GeneralizedCarryGraph layered(u, v);
        auto [max_w, ok] = layered.verify_arcs_nonpositive();
        CHECK(ok);
        (void)max_w;
    }

    SUBCASE("random disjoint patterns: arc bound and walk weights") {
        std::mt19937_64 rng(61);
        for (int rep = 0; rep < 20; ++rep) {
            int n = 1 + static_cast<int>(rng() % 8);
            carry::DigitVector u{3, n, std::vector<int>(n, 0)};
            carry::DigitVector v{3, n, std::vector<int>(n, 0)};
            for (int i = 0; i < n; ++i) {
                int digit = static_cast<int>(rng() % 3);
                if (rng() % 2)
                    u.digits[i] = digit;
                else
                    v.digits[i] = digit;
            }
            // all-2s would be the zero residue; keep weights and labels aligned
            u = carry::to_digits(u.value(), 3, n);
            v = carry::to_digits(v.value(), 3, n);
            GeneralizedCarryGraph layered(u, v);
            REQUIRE(layered.verify_arcs_nonpositive().second);
            long long m = static_cast<long long>(carry::modulus(3, n));
            int bound = u.weight() + v.weight();
            for (int inst = 0; inst < 50; ++inst) {
                long long a = static_cast<long long>(rng() % static_cast<unsigned long long>(m));
                long long b = static_cast<long long>(rng() % static_cast<unsigned long long>(m));
                auto walk = layered.instance_to_walk(a, b);
                REQUIRE(walk.total_weight ==
                        bound - carry::gengenwi_check(a, b, u, v));
                REQUIRE(walk.total_weight <= 0);
            }
        }
    }

    SUBCASE("overlapping supports are rejected") {
        carry::DigitVector u{3, 2, {1, 0}};
        carry::DigitVector v{3, 2, {2, 0}};
        CHECK_THROWS_AS(GeneralizedCarryGraph(u, v), std::invalid_argument);
    }
}

TEST_CASE("dot export mentions every vertex") {
    CarryGraph g;
    auto dot = g.to_dot();
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("v161") != std::string::npos);
}
