#include "lks/matching.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "lks/fail.hpp"

namespace lks {
namespace {

class BlossomSolver {
  public:
    explicit BlossomSolver(const Graph& g) : g_(g), n_(g.n()), mate_(n_, -1) {}

    std::vector<int> solve() {
        for (int v = 0; v < n_; ++v)
            if (mate_[v] == -1)
                for (int u : g_.neighbors(v))
                    if (mate_[u] == -1) {
                        mate_[v] = u;
                        mate_[u] = v;
                        break;
                    }
        for (int v = 0; v < n_; ++v)
            if (mate_[v] == -1) augment_from(v);
        return mate_;
    }

  private:
    int lca(int a, int b) {
        std::vector<char> seen(n_, 0);
        for (;;) {
            a = base_[a];
            seen[a] = 1;
            if (mate_[a] == -1) break;
            a = parent_[mate_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = 1;
            in_blossom_[base_[mate_[v]]] = 1;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    int find_exposed(int root) {
        visited_.assign(n_, 0);
        parent_.assign(n_, -1);
        base_.resize(n_);
        std::iota(base_.begin(), base_.end(), 0);
        visited_[root] = 1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                    int b = lca(v, to);
                    in_blossom_.assign(n_, 0);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < n_; ++i)
                        if (in_blossom_[base_[i]]) {
                            base_[i] = b;
                            if (!visited_[i]) {
                                visited_[i] = 1;
                                queue.push_back(i);
                            }
                        }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] == -1) return to;
                    visited_[mate_[to]] = 1;
                    queue.push_back(mate_[to]);
                }
            }
        }
        return -1;
    }

    void augment_from(int root) {
        int v = find_exposed(root);
        while (v != -1) {
            int pv = parent_[v], next = mate_[pv];
            mate_[v] = pv;
            mate_[pv] = v;
            v = next;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> mate_, parent_, base_;
    std::vector<char> visited_, in_blossom_;
};

}  // namespace

std::vector<int> max_matching(const Graph& g) { return BlossomSolver(g).solve(); }

bool is_factor_critical(const Graph& g) {
    if (g.n() % 2 == 0) return false;
    std::vector<int> all(g.n());
    std::iota(all.begin(), all.end(), 0);
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> keep;
        for (int u : all)
            if (u != v) keep.push_back(u);
        if (!has_perfect_matching(induced(g, keep))) return false;
    }
    return true;
}

namespace {

// Absorber gadget: a maximum matching of g covering all of forced exists
// iff g plus (n - 2*nu) vertices adjacent to everything outside forced has
// a perfect matching.
bool coverable_by_maximum(const Graph& g, int nu, const std::vector<char>& forced,
                          std::vector<int>* out_mate = nullptr) {
    int n = g.n(), d = n - 2 * nu;
    Graph h(n + d);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    for (int z = 0; z < d; ++z)
        for (int v = 0; v < n; ++v)
            if (!forced[v]) h.add_edge(n + z, v);
    auto mate = max_matching(h);
    if (2 * matching_size(mate) != n + d) return false;
    if (out_mate) *out_mate = std::move(mate);
    return true;
}

}  // namespace

std::vector<int> max_matching_weighted_preference(const Graph& g, const std::vector<int>& favored) {
    int n = g.n();
    int nu = matching_size(max_matching(g));
    std::vector<char> forced(n, 0);
    std::vector<int> fav = favored;
    std::sort(fav.begin(), fav.end());
    for (int y : fav) {
        g.check_vertex(y);
        if (forced[y]) continue;
        forced[y] = 1;
        if (!coverable_by_maximum(g, nu, forced)) forced[y] = 0;
    }
    std::vector<int> gadget_mate;
    if (!coverable_by_maximum(g, nu, forced, &gadget_mate))
        fail_violation("preference_matching", "greedy forced set became uncoverable");
    std::vector<int> mate(n, -1);
    for (int v = 0; v < n; ++v)
        if (gadget_mate[v] >= 0 && gadget_mate[v] < n) mate[v] = gadget_mate[v];
    if (matching_size(mate) != nu)
        fail_violation("preference_matching", "restricted matching is not maximum");
    return mate;
}

GEDecomposition gallai_edmonds(const Graph& g) {
    int n = g.n();
    std::vector<char> alive(n, 1);
    std::vector<int> separator;

    auto alive_vertices = [&] {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (alive[v]) vs.push_back(v);
        return vs;
    };

    std::vector<std::vector<int>> comps;
    for (;;) {
        std::vector<int> map;
        Graph sub = induced(g, alive_vertices(), &map);
        comps.clear();
        for (auto& c : components(sub)) {
            std::vector<int> orig;
            for (int v : c) orig.push_back(map[v]);
            comps.push_back(std::move(orig));
        }
        int peel = -1;
        for (auto& comp : comps) {
            Graph k = induced(g, comp);
            if (is_factor_critical(k)) continue;
            // Gallai: a connected non-factor-critical graph has an essential
            // vertex (one covered by every maximum matching).
            int knu = matching_size(max_matching(k));
            for (size_t i = 0; i < comp.size() && peel == -1; ++i) {
                std::vector<int> rest;
                for (size_t j = 0; j < comp.size(); ++j)
                    if (j != i) rest.push_back(comp[j]);
                if (matching_size(max_matching(induced(g, rest))) == knu - 1) peel = comp[i];
            }
            if (peel == -1) fail_violation("gallai_edmonds", "no essential vertex in non-critical component");
            break;
        }
        if (peel == -1) break;
        separator.push_back(peel);
        alive[peel] = 0;
    }

    GEDecomposition d;
    d.separator = separator;
    std::sort(d.separator.begin(), d.separator.end());
    d.component_sets = comps;

    // Any maximum matching matches the separator into distinct components.
    auto mate = max_matching(g);
    std::vector<char> in_sep(n, 0);
    for (int s : d.separator) in_sep[s] = 1;
    for (int s : d.separator) {
        if (mate[s] < 0 || in_sep[mate[s]])
            fail_violation("gallai_edmonds", "maximum matching does not route separator into components");
        d.witness.emplace_back(s, mate[s]);
    }
    verify_gallai_edmonds(g, d);
    return d;
}

void verify_gallai_edmonds(const Graph& g, const GEDecomposition& d) {
    std::vector<int> comp_of(g.n(), -1);
    for (size_t i = 0; i < d.component_sets.size(); ++i)
        for (int v : d.component_sets[i]) comp_of[v] = static_cast<int>(i);
    for (int s : d.separator)
        if (comp_of[s] != -1) fail_violation("gallai_edmonds", "separator vertex inside a component");
    int placed = static_cast<int>(d.separator.size());
    for (auto& c : d.component_sets) placed += static_cast<int>(c.size());
    if (placed != g.n()) fail_violation("gallai_edmonds", "separator and components do not partition V");
    for (auto& c : d.component_sets)
        if (!is_factor_critical(induced(g, c)))
            fail_violation("gallai_edmonds", "component is not factor-critical");
    std::vector<char> used_comp(d.component_sets.size(), 0), covered(g.n(), 0);
    for (auto [s, t] : d.witness) {
        if (!g.has_edge(s, t)) fail_violation("gallai_edmonds", "witness edge missing from graph");
        if (comp_of[t] < 0 || used_comp[comp_of[t]])
            fail_violation("gallai_edmonds", "witness does not hit distinct components");
        used_comp[comp_of[t]] = 1;
        covered[s] = 1;
    }
    for (int s : d.separator)
        if (!covered[s]) fail_violation("gallai_edmonds", "witness does not cover separator");
}

}  // namespace lks
