#pragma once

#include <utility>
#include <vector>

#include "lks/graph.hpp"

namespace lks {

// mate[v] = matched partner or -1. Edmonds blossom, O(V^3).
std::vector<int> max_matching(const Graph& g);

inline int matching_size(const std::vector<int>& mate) {
    int c = 0;
    for (size_t v = 0; v < mate.size(); ++v)
        if (mate[v] >= 0 && mate[v] > static_cast<int>(v)) ++c;
    return c;
}

inline bool has_perfect_matching(const Graph& g) {
    return 2 * matching_size(max_matching(g)) == g.n();
}

// G - v has a perfect matching for every v.
bool is_factor_critical(const Graph& g);

// Among maximum matchings, one covering as many favored vertices as
// possible. Matroid greedy over coverable vertex sets; each feasibility
// test is a perfect-matching check on an absorber-extended graph.
std::vector<int> max_matching_weighted_preference(const Graph& g, const std::vector<int>& favored);

struct GEDecomposition {
    std::vector<int> separator;                    // S
    std::vector<std::vector<int>> component_sets;  // components of G - S, factor-critical
    std::vector<std::pair<int, int>> witness;      // matches S into distinct components
};

// Separator whose removal leaves only factor-critical components, matched
// into distinct components by the witness. Output is re-verified, not trusted.
GEDecomposition gallai_edmonds(const Graph& g);

// Throws Failure{violation} when any structural property fails.
void verify_gallai_edmonds(const Graph& g, const GEDecomposition& d);

}  // namespace lks
