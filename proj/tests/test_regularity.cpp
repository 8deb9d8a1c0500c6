#include <cmath>

#include "doctest.h"
#include "lks/host.hpp"

using namespace lks;

namespace {

Constants desk_constants(long long k) {
    // saturated desk profile used across the suite
    return make_constants(rat(1, 4), rat(1, 4), 32000, 1, k, Rat(Int("10000000000000")));
}

Graph complete_bipartite(const std::vector<int>& x, const std::vector<int>& y, int n) {
    Graph g(n);
    for (int u : x)
        for (int v : y) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("derived constants at eta = q = 1") {
    auto c = make_constants(1, 1, 500, 1, 10);
    CHECK(c.pi == 1);
    CHECK(c.epsilon == rat(1, 500000));
    CHECK(c.p == rat(1, 250));
    CHECK(c.m0 == 500);
    CHECK(c.alpha == rat(1, 250000000));
    CHECK(c.beta == c.epsilon / 500);
    CHECK(c.K == rat(12));  // (1 + 1/5) * 10
    // 4 eps + 1/m0 = 0.002008 < 0.004 = p
    CHECK(4 * c.epsilon + 1 / c.m0 == rat(251, 125000));
    CHECK(4 * c.epsilon + 1 / c.m0 < c.p);
}

TEST_CASE("derived constants at eta = q = 0.1") {
    auto c = make_constants(rat(1, 10), rat(1, 10), 500000, 1, 10);
    CHECK(c.epsilon == Rat(Int(1), Int("50000000000")));  // 2e-11
    CHECK(c.m0 == 500000);
}

TEST_CASE("constants reject inconsistent overrides and inputs") {
    ConstantOverrides ov;
    ov.p = rat(1, 1000000);  // below 4 eps + 1/m0
    CHECK_THROWS_AS((void)make_constants(1, 1, 500, 1, 10, 1, ov), Failure);
    CHECK_THROWS_AS((void)make_constants(1, 1, 100, 1, 10), Failure);  // M0 < m0
    CHECK_THROWS_AS((void)make_constants(rat(3, 2), 1, 500, 1, 10), Failure);
    CHECK_THROWS_AS((void)make_constants(1, 1, 500, 1, 0), Failure);
}

TEST_CASE("saturated desk profile keeps the qualitative chain") {
    auto c = desk_constants(100);
    CHECK(c.epsilon == rat(1, 10));
    CHECK(c.alpha == rat(1, 40));
    CHECK(c.beta == rat(1, 8));
    CHECK(c.p == rat(1, 5));
    CHECK(c.m0 == 10);
    CHECK(c.alpha < c.epsilon);
    CHECK(c.epsilon < c.p);
    CHECK(c.p < c.pi);
    CHECK(c.slack(rat(100)) == rat(100) / c.relax);
    // too much relaxation for small pi is rejected
    CHECK_THROWS_AS((void)make_constants(rat(1, 10), rat(1, 10), 500000, 1, 10, Rat(Int("10000000000000"))),
                    Failure);
}

TEST_CASE("regular pair checks on extreme pairs") {
    std::vector<int> x{0, 1, 2, 3, 4}, y{5, 6, 7, 8, 9};
    auto full = complete_bipartite(x, y, 10);
    CHECK(check_regular_pair(full, x, y, rat(1, 4), rat(1, 10), RegMode::exact).regular);
    Graph empty(10);
    CHECK(check_regular_pair(empty, x, y, rat(1, 4), rat(1, 10), RegMode::exact).regular);
}

TEST_CASE("half-complete pair yields an exact witness") {
    // edges only from the first half of X
    std::vector<int> x{0, 1, 2, 3, 4, 5}, y{6, 7, 8, 9, 10, 11};
    Graph g(12);
    for (int u : {0, 1, 2})
        for (int v : y) g.add_edge(u, v);
    auto verdict = check_regular_pair(g, x, y, rat(2, 5), rat(3, 10), RegMode::exact);
    CHECK_FALSE(verdict.regular);
    CHECK(Rat(verdict.x_sub.size()) >= rat(2, 5) * 6);
    CHECK(Rat(verdict.y_sub.size()) >= rat(2, 5) * 6);
    // witness really violates the deviation bound
    Rat dev = verdict.sub_density > verdict.pair_density ? verdict.sub_density - verdict.pair_density
                                                         : verdict.pair_density - verdict.sub_density;
    CHECK(dev >= rat(3, 10));
    // sampled mode finds it too
    auto sampled = check_regular_pair(g, x, y, rat(2, 5), rat(3, 10), RegMode::sampled, 500, 42);
    CHECK_FALSE(sampled.regular);
}

TEST_CASE("exact mode enforces the enumeration cap") {
    std::vector<int> x, y;
    for (int i = 0; i < 16; ++i) x.push_back(i);
    for (int i = 16; i < 32; ++i) y.push_back(i);
    Graph g(32);
    CHECK_THROWS_AS((void)check_regular_pair(g, x, y, rat(1, 2), rat(1, 2), RegMode::exact), Failure);
}

TEST_CASE("planted host generation and pruning") {
    auto c = desk_constants(100);

    SUBCASE("all-zero densities give an empty pruned graph") {
        auto host = gen_planted_host(4, 10, uniform_density(4, 0), 3, 9);
        auto rep = build_gp(host.g, host.part, c);
        CHECK(rep.gp.m() == 0);
        CHECK(host.g.m() > 0);  // the exceptional set still has its sparse edges
    }

    SUBCASE("density one gives the complete multipartite host") {
        auto host = gen_planted_host(3, 5, uniform_density(3, 1), 0, 9);
        CHECK(host.g.m() == 3 * 25);
        auto rep = build_gp(host.g, host.part, c);
        CHECK(rep.gp.m() == 75);
    }

    SUBCASE("pairs below the density threshold are pruned") {
        auto dm = uniform_density(3, rat(3, 10));
        dm[0][1] = dm[1][0] = c.p / 2;
        auto host = gen_planted_host(3, 40, dm, 0, 17);
        auto rep = build_gp(host.g, host.part, c);
        for (int u : host.part.clusters[0])
            for (int v : host.part.clusters[1]) CHECK_FALSE(rep.gp.has_edge(u, v));
        long long expect = host.g.m();
        for (int u : host.part.clusters[0])
            for (int v : host.part.clusters[1]) expect -= host.g.has_edge(u, v);
        CHECK(rep.gp.m() == expect);
    }

    SUBCASE("edge loss respects the closed-form bound on a planted host") {
        auto host = gen_planted_host(6, 95, uniform_density(6, rat(3, 10)), 30, 600);
        CHECK(host.part.validate(host.g, &c).empty());
        auto rep = build_gp(host.g, host.part, c);
        CHECK(rep.within_bound);
        CHECK(Rat(rep.removed_edges) <= rep.loss_bound);
    }
}

TEST_CASE("cluster graph weights") {
    auto c = desk_constants(100);

    SUBCASE("complete pair has weight s") {
        auto host = gen_planted_host(2, 6, uniform_density(2, 1), 0, 3);
        auto h = cluster_graph(build_gp(host.g, host.part, c).gp, host.part, c);
        CHECK(h.w[0][1] == 6);
        CHECK(h.wdeg(0) == 6);
    }

    SUBCASE("weight is density times s") {
        // build an exact pair with e = p s^2 by hand
        int s = 10;
        Graph g(20);
        HostPartition part;
        part.s = s;
        part.clusters = {{}, {}};
        part.cluster_of.assign(20, 0);
        for (int v = 0; v < 10; ++v) part.clusters[0].push_back(v);
        for (int v = 10; v < 20; ++v) {
            part.clusters[1].push_back(v);
            part.cluster_of[v] = 1;
        }
        long long target = to_ll(rat_floor(c.p * s * s));
        long long placed = 0;
        for (int u = 0; u < 10 && placed < target; ++u)
            for (int v = 10; v < 20 && placed < target; ++v) {
                g.add_edge(u, v);
                ++placed;
            }
        part.density = {{0, Rat(placed) / (s * s)}, {Rat(placed) / (s * s), 0}};
        part.regular = {{0, 1}, {1, 0}};
        auto h = cluster_graph(build_gp(g, part, c).gp, part, c);
        CHECK(h.w[0][1] == Rat(placed) / s);
        CHECK(h.w[0][1] == c.p * s);  // e = p s^2 exactly
    }

    SUBCASE("planted weights concentrate around density * s") {
        int s = 80;
        Rat d = rat(3, 10);
        auto host = gen_planted_host(5, s, uniform_density(5, d), 0, 12345);
        auto h = cluster_graph(build_gp(host.g, host.part, c).gp, host.part, c);
        // w = e/s with e ~ Bin(s^2, d), so sd(w) = sqrt(d(1-d))
        double sigma = std::sqrt(to_double(d) * (1 - to_double(d)));
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b) {
                CHECK(h.has_edge(a, b));
                double dev = std::abs(to_double(h.w[a][b]) - to_double(d) * s);
                CHECK(dev <= 3 * sigma);
            }
        // every retained pair carries weight at least p * s
        for (int a = 0; a < 5; ++a)
            for (int b : h.nbrs[a]) CHECK(h.w[a][b] >= c.p * s);
    }
}

TEST_CASE("typical vertices") {
    auto c = desk_constants(100);

    SUBCASE("complete pair makes every vertex typical") {
        auto host = gen_planted_host(2, 8, uniform_density(2, 1), 0, 5);
        auto gp = build_gp(host.g, host.part, c).gp;
        auto typ = typical_vertices(gp, host.part, 0, {{1, {}}}, c, false);
        CHECK(typ.size() == 8);
    }

    SUBCASE("few atypical vertices on a planted host") {
        int s = 200;
        auto host = gen_planted_host(7, s, uniform_density(7, rat(3, 10)), 0, 99);
        auto gp = build_gp(host.g, host.part, c).gp;
        Rat cap = c.alpha * s;
        for (int target = 1; target < 7; ++target) {
            auto typ = typical_vertices(gp, host.part, 0, {{target, {}}}, c, false);
            CHECK(Rat(static_cast<long long>(s - typ.size())) <= cap);
        }
        // intersection over six full-cluster targets stays large
        std::vector<TypicalTarget> six;
        for (int t = 1; t < 7; ++t) six.push_back({t, {}});
        auto typ6 = typical_vertices(gp, host.part, 0, six, c, false);
        CHECK(Rat(static_cast<long long>(typ6.size())) >= Rat(s) - 6 * c.alpha * s);
    }

    SUBCASE("subset form rejects undersized targets") {
        auto host = gen_planted_host(2, 400, uniform_density(2, rat(1, 2)), 0, 5);
        auto gp = build_gp(host.g, host.part, c).gp;
        std::vector<int> tiny{host.part.clusters[1][0]};
        CHECK_THROWS_AS((void)typical_vertices(gp, host.part, 0, {{1, tiny}}, c, true), Failure);
    }
}

TEST_CASE("sampled regularity on a planted pair finds no violation") {
    // spec-scale experiment: N=8, s=100, density 0.3, (0.25, 0.1) check
    auto host = gen_planted_host(8, 100, uniform_density(8, rat(3, 10)), 0, 2024);
    auto verdict = check_regular_pair(host.g, host.part.clusters[0], host.part.clusters[1],
                                      rat(1, 4), rat(1, 10), RegMode::sampled, 1000, 7);
    CHECK(verdict.regular);
}
