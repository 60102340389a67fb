#include "ltc/completion.hpp"
#include "ltc/interval.hpp"
#include "ltc/search.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ltc;
using namespace ltc::test;

namespace {

const SimpleGraph p4(4, {{0, 1}, {1, 2}, {2, 3}});
const SimpleGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
const SimpleGraph claw(4, {{0, 1}, {0, 2}, {0, 3}});
const SimpleGraph tent(6, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 4}, {4, 5}});

SimpleGraph cycle(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

std::vector<SimpleGraph> connected_graphs_up_to(int max_n) {
    std::vector<SimpleGraph> out;
    for (int n = 1; n <= max_n; ++n)
        for (auto& g : graphs_up_to_iso(n))
            if (is_connected(g))
                out.push_back(g);
    return out;
}

} // namespace

TEST_CASE("check_umbrella examples") {
    CHECK_FALSE(check_umbrella(p4, {0, 1, 2, 3}));
    auto bad = check_umbrella(p4, {1, 0, 2, 3});
    REQUIRE(bad);
    CHECK(*bad == UmbrellaViolation{1, 0, 2});
    CHECK_FALSE(check_umbrella(complement(SimpleGraph(5)), {4, 2, 0, 1, 3}));
    CHECK_THROWS_AS(check_umbrella(p4, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(check_umbrella(p4, {0, 1, 1, 3}), std::invalid_argument);
}

TEST_CASE("straight_enumeration examples") {
    auto order = straight_enumeration(p4);
    REQUIRE(order);
    bool forward = *order == StraightOrder{0, 1, 2, 3};
    bool backward = *order == StraightOrder{3, 2, 1, 0};
    CHECK((forward || backward));
    CHECK_FALSE(straight_enumeration(c4));
    CHECK_FALSE(straight_enumeration(claw));
    CHECK(straight_enumeration(SimpleGraph(0)));
    CHECK(straight_enumeration(SimpleGraph(3)));
}

TEST_CASE("straight_enumeration agrees with exhaustive order search (all graphs n <= 6)") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& g : graphs_up_to_iso(n)) {
            auto order = straight_enumeration(g);
            REQUIRE(order.has_value() == straight_order_exists(g));
            if (order)
                REQUIRE(umbrella_holds(g, *order));
        }
}

TEST_CASE("straight_enumeration on random proper interval graphs up to 40 vertices") {
    // Unit interval graphs from random left endpoints.
    for (int i = 0; i < 1000; ++i) {
        int n = uniform(1, 40);
        std::vector<double> left(static_cast<std::size_t>(n));
        for (auto& x : left)
            x = std::uniform_real_distribution<double>(0.0, n / 3.0)(rng());
        SimpleGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (std::abs(left[u] - left[v]) <= 1.0)
                    g.add_edge(u, v);
        auto order = straight_enumeration(g);
        REQUIRE(order);
        REQUIRE(umbrella_holds(g, *order));
    }
}

TEST_CASE("forbidden_family examples") {
    auto c4k1 = forbidden_family(ForbiddenKind::cycle_plus_k1, 4);
    CHECK(c4k1.order() == 5);
    CHECK(c4k1.size() == 4);
    auto tk1 = forbidden_family(ForbiddenKind::tent_plus_k1);
    CHECK(tk1.order() == 7);
    CHECK(tk1.size() == 9);
    CHECK(canonical_form(induced_subgraph(tk1, {0, 1, 2, 3, 4, 5})) == canonical_form(tent));
    auto c3k1 = forbidden_family(ForbiddenKind::comp_odd_cycle_plus_k1, 1);
    CHECK(c3k1.order() == 4);
    CHECK(c3k1.size() == 3);
    CHECK(forbidden_family(ForbiddenKind::comp_even_cycle, 3) == cycle(6));
    std::vector<int> orders;
    for (int i = 1; i <= 5; ++i)
        orders.push_back(forbidden_family(ForbiddenKind::tucker_fig1, i).order());
    CHECK(orders == std::vector<int>{6, 7, 7, 7, 7});
    CHECK_THROWS_AS(forbidden_family(ForbiddenKind::cycle_plus_k1, 3), std::invalid_argument);
    CHECK_THROWS_AS(forbidden_family(ForbiddenKind::comp_even_cycle, 2), std::invalid_argument);
    CHECK_THROWS_AS(forbidden_family(ForbiddenKind::comp_odd_cycle_plus_k1, 0), std::invalid_argument);
    CHECK_THROWS_AS(forbidden_family(ForbiddenKind::tucker_fig1, 6), std::invalid_argument);
    for (auto k : {ForbiddenKind::cycle_plus_k1, ForbiddenKind::tent_plus_k1, ForbiddenKind::comp_even_cycle,
                   ForbiddenKind::comp_odd_cycle_plus_k1, ForbiddenKind::tucker_fig1})
        CHECK(forbidden_kind_from_string(to_string(k)) == k);
}

TEST_CASE("forbidden graphs are minimally non-PCA") {
    // Complements of the comp_* and Figure-1 patterns, and the C_k+K1 / tent+K1 graphs
    // themselves, are not orientable while every vertex-deleted subgraph is.
    std::vector<SimpleGraph> minimal;
    for (int k = 4; k <= 8; ++k)
        minimal.push_back(forbidden_family(ForbiddenKind::cycle_plus_k1, k));
    minimal.push_back(forbidden_family(ForbiddenKind::tent_plus_k1));
    for (int k = 3; k <= 5; ++k)
        minimal.push_back(complement(forbidden_family(ForbiddenKind::comp_even_cycle, k)));
    for (int k = 1; k <= 4; ++k)
        minimal.push_back(complement(forbidden_family(ForbiddenKind::comp_odd_cycle_plus_k1, k)));
    for (int i = 1; i <= 5; ++i)
        minimal.push_back(complement(forbidden_family(ForbiddenKind::tucker_fig1, i)));
    for (const auto& g : minimal) {
        // A disconnected C_k+K1 is orientable per component; Tucker's verdict is about the whole graph.
        CHECK_FALSE(tucker_oracle(g).is_pca);
        if (is_connected(g))
            CHECK_FALSE(is_lt_orientable(g));
        for (int v = 0; v < g.order(); ++v)
            CHECK(tucker_oracle(delete_vertex(g, v)).is_pca);
    }
}

TEST_CASE("tucker_oracle examples") {
    CHECK(tucker_oracle(p4).is_pca);
    auto prism = tucker_oracle(complement(cycle(6)));
    CHECK_FALSE(prism.is_pca);
    REQUIRE(prism.witness);
    CHECK(prism.witness->family == ForbiddenKind::comp_even_cycle);
    CHECK(prism.witness->k == 3);
    CHECK(tucker_oracle(tent).is_pca);
    CHECK_FALSE(tucker_oracle(forbidden_family(ForbiddenKind::tent_plus_k1)).is_pca);
    CHECK_THROWS_AS(tucker_oracle(SimpleGraph(tucker_max_vertices + 1)), std::length_error);
}

TEST_CASE("tucker witnesses induce the named pattern and agree with orientability (connected n <= 6)") {
    for (const auto& g : connected_graphs_up_to(6)) {
        auto verdict = tucker_oracle(g);
        REQUIRE(verdict.is_pca == is_lt_orientable(g));
        REQUIRE(verdict.is_pca == orientation_exists(PartialGraph(g, {})));
        REQUIRE(verdict.witness.has_value() == !verdict.is_pca);
        if (!verdict.witness)
            continue;
        const auto& w = *verdict.witness;
        auto pattern = forbidden_family(w.family, w.k);
        auto sub = induced_subgraph(g, w.vertices);
        bool in_complement = w.family != ForbiddenKind::cycle_plus_k1 && w.family != ForbiddenKind::tent_plus_k1;
        REQUIRE(canonical_form(in_complement ? complement(sub) : sub) == canonical_form(pattern));
    }
}

TEST_CASE("arc_balancing_vertex examples") {
    PartialGraph p3(3, {{0, 1}}, {{1, 2}});
    CHECK(arc_balancing_vertex(p3, {1, 2}) == 0);
    PartialGraph k3(3, {{0, 1}, {0, 2}}, {{1, 2}});
    CHECK_FALSE(arc_balancing_vertex(k3, {1, 2}));
    PartialGraph path4(4, {{0, 1}, {2, 3}}, {{1, 2}});
    CHECK_FALSE(arc_balancing_vertex(path4, {1, 2}));
    CHECK_THROWS_AS(arc_balancing_vertex(path4, {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(arc_balancing_vertex(path4, {0, 1}), std::invalid_argument);
}

TEST_CASE("arc_balancing_vertex matches a direct count") {
    for (int i = 0; i < 2000; ++i) {
        auto h = random_pog(random_graph(uniform(2, 9), 0.5), 0.3);
        SimpleGraph u = h.underlying();
        for (auto a : h.arcs()) {
            std::vector<int> one;
            for (int v = 0; v < h.order(); ++v)
                if (v != a.tail && v != a.head && u.adjacent(v, a.tail) != u.adjacent(v, a.head))
                    one.push_back(v);
            auto got = arc_balancing_vertex(h, a);
            REQUIRE(got.has_value() == (one.size() == 1));
            if (got)
                REQUIRE(*got == one[0]);
        }
    }
}

TEST_CASE("classify_cut_vertex examples") {
    PartialGraph path4(4, {{1, 2}}, {{0, 1}, {3, 2}});
    CHECK(classify_cut_vertex(path4, {0, 1, 2, 3}, 1) == CutVertexKind::dividing);
    CHECK(classify_cut_vertex(path4, {0, 1, 2, 3}, 2) == CutVertexKind::dividing);
    PartialGraph path5(5, {{0, 1}, {3, 4}}, {{1, 2}, {3, 2}});
    CHECK(classify_cut_vertex(path5, {0, 1, 2, 3, 4}, 1) == CutVertexKind::non_dividing);
    CHECK_THROWS_AS(classify_cut_vertex(path4, {0, 1, 2, 3}, 0), std::invalid_argument);
    CHECK_THROWS_AS(classify_cut_vertex(path4, {1, 0, 2, 3}, 1), std::invalid_argument);
    PartialGraph one_arc(4, {{1, 2}, {2, 3}}, {{0, 1}});
    CHECK_THROWS_AS(classify_cut_vertex(one_arc, {0, 1, 2, 3}, 1), std::invalid_argument);
}

TEST_CASE("complement cut-vertices sit at the ends of straight enumerations (connected n <= 7)") {
    int checked = 0;
    for (const auto& g : connected_graphs_up_to(7)) {
        auto order = straight_enumeration(g);
        if (!order)
            continue;
        int n = g.order();
        SimpleGraph co = complement(g);
        for (int v : cut_vertices(co)) {
            ++checked;
            auto at = std::find(order->begin(), order->end(), v) - order->begin();
            REQUIRE((at == 0 || at == n - 1));
            bool dominated = false;
            for (int w = 0; w < n && !dominated; ++w)
                dominated = w != v && !g.adjacent(w, v) && g.degree(w) == n - 2;
            REQUIRE(dominated);
        }
    }
    CHECK(checked > 50);
}
