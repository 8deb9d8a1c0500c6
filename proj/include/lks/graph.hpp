#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lks/fail.hpp"
#include "lks/rng.hpp"

namespace lks {

// n-bit set packed into words; hosts stay small enough that dense rows are fine.
class Bits {
  public:
    Bits() : n_(0) {}
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    void set(int i) { w_[i >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    int size() const { return n_; }

    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }

    // |this & other|
    int count_and(const Bits& other) const {
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += __builtin_popcountll(w_[i] & other.w_[i]);
        return c;
    }

    // |this & a & ~b|
    int count_and_not(const Bits& a, const Bits& b) const {
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i)
            c += __builtin_popcountll(w_[i] & a.w_[i] & ~b.w_[i]);
        return c;
    }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }

  private:
    int n_;
    std::vector<std::uint64_t> w_;
};

// Simple undirected graph, vertices 0..n-1. Sorted neighbor lists for
// iteration plus bit rows for O(1) membership; the containment search and
// the embedder both lean on the bit rows.
class Graph {
  public:
    Graph() : n_(0) {}
    explicit Graph(int n) : n_(n), adj_(n), rows_(n, Bits(n)) {
        if (n < 0) fail_input("graph", "negative vertex count");
    }

    int n() const { return n_; }
    int m() const { return m_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) fail_input("graph", "loop at vertex " + std::to_string(u));
        if (rows_[u].test(v)) fail_input("graph", "parallel edge " + std::to_string(u) + "-" + std::to_string(v));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        rows_[u].set(v);
        rows_[v].set(u);
        ++m_;
        sorted_ = false;
    }

    bool has_edge(int u, int v) const { return u != v && rows_[u].test(v); }

    const std::vector<int>& neighbors(int v) const {
        if (!sorted_) {
            for (auto& a : adj_) std::sort(a.begin(), a.end());
            sorted_ = true;
        }
        return adj_[v];
    }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const Bits& row(int v) const { return rows_[v]; }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        es.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) es.emplace_back(u, v);
        return es;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) fail_input("graph", "vertex " + std::to_string(v) + " out of range");
    }

  private:
    int n_;
    int m_ = 0;
    mutable std::vector<std::vector<int>> adj_;
    std::vector<Bits> rows_;
    mutable bool sorted_ = true;
};

inline Graph complement(const Graph& g) {
    Graph c(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

// Induced subgraph on keep (need not be sorted); out_map[i] = original id of new vertex i.
inline Graph induced(const Graph& g, std::vector<int> keep, std::vector<int>* out_map = nullptr) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> pos(g.n(), -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        g.check_vertex(keep[i]);
        pos[keep[i]] = static_cast<int>(i);
    }
    Graph h(static_cast<int>(keep.size()));
    for (int u : keep)
        for (int v : g.neighbors(u))
            if (u < v && pos[v] >= 0) h.add_edge(pos[u], pos[v]);
    if (out_map) *out_map = keep;
    return h;
}

// Disjoint union of m copies of g.
inline Graph disjoint_copies(const Graph& g, int m) {
    if (m < 1) fail_input("amplify", "copy count must be >= 1");
    Graph h(g.n() * m);
    for (int c = 0; c < m; ++c)
        for (auto [u, v] : g.edges()) h.add_edge(c * g.n() + u, c * g.n() + v);
    return h;
}

inline Graph random_graph(int n, const Rat& p, Rng& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) g.add_edge(u, v);
    return g;
}

inline std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s}, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u))
                if (!seen[v]) {
                    seen[v] = 1;
                    comp.push_back(v);
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace lks
