#include <sstream>

#include "doctest.h"
#include "lks/graph.hpp"
#include "lks/io.hpp"
#include "lks/rooted_tree.hpp"

using namespace lks;

namespace {

RootedTree caterpillar() {
    // spine 0-1-2-3, pendant pair {5,6} hanging off 4 which hangs off 2
    //      0-1-2-3
    //          |
    //          4
    //         / \
    //        5   6
    return RootedTree(7, 0, {-1, 0, 1, 2, 2, 4, 4});
}

// Definitional seed oracle: the tree-order-maximal vertex smaller than every w.
int seed_by_definition(const RootedTree& t, const std::vector<int>& w) {
    int best = -1;
    for (int v = 0; v < t.n(); ++v) {
        bool below_all = true;
        for (int x : w)
            if (!(t.ancestor_of(v, x) && v != x)) below_all = false;
        if (!below_all) continue;
        if (best == -1 || t.ancestor_of(best, v)) best = v;
    }
    return best;
}

}  // namespace

TEST_CASE("subtree queries") {
    auto path = path_tree(3);
    CHECK(path.subtree(1) == std::vector<int>{1, 2});
    auto any = caterpillar();
    CHECK(any.subtree(any.root()).size() == 7);
    auto star = star_tree(4);
    CHECK(star.subtree(3) == std::vector<int>{3});
    CHECK_THROWS_AS((void)star.subtree(99), Failure);
}

TEST_CASE("subtree sizes are consistent with children") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto t = random_tree(rng.range(2, 40), rng);
        for (int x = 0; x < t.n(); ++x) {
            size_t total = 1;
            for (int c : t.children(x)) total += t.subtree(c).size();
            CHECK(t.subtree(x).size() == total);
        }
    }
}

TEST_CASE("seed of a subtree") {
    auto path = path_tree(5);
    CHECK(path.seed_of({3, 4}) == 2);
    auto star = star_tree(4);
    CHECK(star.seed_of({2}) == 0);

    auto cat = caterpillar();
    CHECK(cat.seed_of({5, 6, 4}) == 2);
    CHECK(cat.seed_of({5, 6, 4}) == seed_by_definition(cat, {5, 6, 4}));

    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto t = random_tree(rng.range(3, 25), rng);
        int x = rng.range(1, t.n() - 1);
        auto w = t.subtree(x);
        CHECK(t.seed_of(w) == seed_by_definition(t, w));
        CHECK(t.seed_of(w) == t.parent(x));
    }

    CHECK_THROWS_AS((void)path.seed_of({0, 1}), Failure);   // contains root
    CHECK_THROWS_AS((void)path.seed_of({1, 3}), Failure);   // disconnected
}

TEST_CASE("seed identifies the parent of each child component") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        auto t = random_tree(rng.range(4, 30), rng);
        for (int x = 0; x < t.n(); ++x)
            for (int c : t.children(x)) CHECK(t.seed_of(t.subtree(c)) == x);
    }
}

TEST_CASE("complement and induced") {
    Graph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    CHECK(complement(k3).m() == 0);

    Rng rng(3);
    auto g = random_graph(9, rat(1, 2), rng);
    auto cc = complement(complement(g));
    CHECK(cc.m() == g.m());
    for (auto [u, v] : g.edges()) CHECK(cc.has_edge(u, v));
    for (int v = 0; v < g.n(); ++v) CHECK(g.degree(v) + complement(g).degree(v) == g.n() - 1);

    Graph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    auto mid = induced(p4, {1, 2});
    CHECK(mid.n() == 2);
    CHECK(mid.m() == 1);
}

TEST_CASE("graph text round trip with comments") {
    std::istringstream in("# host\n3 2\n0 1\n 1 2 # tail\n");
    auto g = read_graph(in);
    CHECK(g.n() == 3);
    CHECK(g.has_edge(1, 2));
    std::ostringstream out;
    write_graph(out, g);
    std::istringstream in2(out.str());
    CHECK(read_graph(in2).m() == 2);
}

TEST_CASE("tree text round trip") {
    std::istringstream in("5 0\n-1 0 1 2 3\n");
    auto t = read_tree(in);
    CHECK(t.depth(4) == 4);
    std::ostringstream out;
    write_tree(out, t);
    std::istringstream in2(out.str());
    CHECK(read_tree(in2).parent(3) == 2);

    std::istringstream bad("3 0\n-1 0 5\n");
    CHECK_THROWS_AS((void)read_tree(bad), Failure);
}

TEST_CASE("graph input validation") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), Failure);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), Failure);
    CHECK_THROWS_AS(g.add_edge(0, 3), Failure);
}
