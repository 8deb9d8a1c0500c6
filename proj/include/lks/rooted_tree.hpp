#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "lks/fail.hpp"
#include "lks/graph.hpp"
#include "lks/rng.hpp"

namespace lks {

// Rooted tree on 0..n-1 given by parent links; parent[root] = -1.
// Tree-order: u <= v iff the root->v path passes through u. Euler intervals
// (tin/tout) make tree-order comparisons O(1).
class RootedTree {
  public:
    RootedTree() = default;
    RootedTree(int n, int root, std::vector<int> parent)
        : n_(n), root_(root), parent_(std::move(parent)) {
        build();
    }

    int n() const { return n_; }
    int root() const { return root_; }
    int parent(int v) const { return parent_[v]; }
    const std::vector<int>& parents() const { return parent_; }
    const std::vector<int>& children(int v) const { return children_[v]; }
    int depth(int v) const { return depth_[v]; }
    const std::vector<int>& preorder() const { return order_; }

    // u is a (weak) tree-order ancestor of v.
    bool ancestor_of(int u, int v) const { return tin_[u] <= tin_[v] && tout_[v] <= tout_[u]; }

    // All v with x on the root->v path; contains x itself.
    std::vector<int> subtree(int x) const {
        check_vertex(x);
        std::vector<int> out;
        for (int v : order_)
            if (ancestor_of(x, v)) out.push_back(v);
        std::sort(out.begin(), out.end());
        return out;
    }

    // Seed of a subtree given by vertex set w: the parent of its shallowest
    // vertex. w must induce a connected subtree not containing the root.
    int seed_of(const std::vector<int>& w) const {
        if (w.empty()) fail_input("seed", "empty vertex set");
        std::vector<char> in(n_, 0);
        for (int v : w) {
            check_vertex(v);
            if (v == root_) fail_input("seed", "set contains the root");
            in[v] = 1;
        }
        int top = -1;
        for (int v : w)
            if (!in[parent_[v]]) {
                if (top != -1) fail_input("seed", "set is not connected in the tree");
                top = v;
            }
        // exactly one vertex with parent outside => connected (parent links
        // from every other member stay inside and terminate at top)
        return parent_[top];
    }

    Graph as_graph() const {
        Graph g(n_);
        for (int v = 0; v < n_; ++v)
            if (v != root_) g.add_edge(v, parent_[v]);
        return g;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) fail_input("tree", "vertex " + std::to_string(v) + " out of range");
    }

  private:
    void build() {
        if (n_ <= 0) fail_input("tree", "empty tree");
        if (static_cast<int>(parent_.size()) != n_) fail_input("tree", "parent array size mismatch");
        if (root_ < 0 || root_ >= n_ || parent_[root_] != -1)
            fail_input("tree", "root must have parent -1");
        children_.assign(n_, {});
        int roots = 0;
        for (int v = 0; v < n_; ++v) {
            if (parent_[v] == -1) {
                ++roots;
                continue;
            }
            if (parent_[v] < 0 || parent_[v] >= n_) fail_input("tree", "parent out of range");
            children_[parent_[v]].push_back(v);
        }
        if (roots != 1) fail_input("tree", "exactly one root required");
        depth_.assign(n_, -1);
        tin_.assign(n_, 0);
        tout_.assign(n_, 0);
        order_.clear();
        order_.reserve(n_);
        int timer = 0;
        std::vector<std::pair<int, int>> stack{{root_, 0}};
        depth_[root_] = 0;
        while (!stack.empty()) {
            auto& [v, ci] = stack.back();
            if (ci == 0) {
                tin_[v] = timer++;
                order_.push_back(v);
            }
            if (ci < static_cast<int>(children_[v].size())) {
                int c = children_[v][ci++];
                depth_[c] = depth_[v] + 1;
                stack.push_back({c, 0});
            } else {
                tout_[v] = timer;
                stack.pop_back();
            }
        }
        for (int v = 0; v < n_; ++v)
            if (depth_[v] < 0) fail_input("tree", "parent links are disconnected or cyclic");
    }

    int n_ = 0;
    int root_ = -1;
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::vector<int> depth_, tin_, tout_, order_;
};

// Uniform random labeled tree (Pruefer decode), rooted at 0.
inline RootedTree random_tree(int n, Rng& rng) {
    if (n <= 0) fail_input("random_tree", "need at least one vertex");
    if (n == 1) return RootedTree(1, 0, {-1});
    std::vector<int> code(n - 2);
    for (auto& c : code) c = static_cast<int>(rng.below(n));
    std::vector<int> deg(n, 1);
    for (int c : code) ++deg[c];
    Graph g(n);
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int c : code) {
        g.add_edge(leaf, c);
        if (--deg[c] == 1 && c < ptr) {
            leaf = c;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    g.add_edge(leaf, n - 1);

    std::vector<int> parent(n, -1);
    std::vector<int> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u))
            if (!seen[v]) {
                seen[v] = 1;
                parent[v] = u;
                stack.push_back(v);
            }
    }
    return RootedTree(n, 0, parent);
}

inline RootedTree path_tree(int n) {
    std::vector<int> parent(n);
    parent[0] = -1;
    for (int i = 1; i < n; ++i) parent[i] = i - 1;
    return RootedTree(n, 0, parent);
}

inline RootedTree star_tree(int leaves) {
    std::vector<int> parent(leaves + 1, 0);
    parent[0] = -1;
    return RootedTree(leaves + 1, 0, parent);
}

}  // namespace lks
