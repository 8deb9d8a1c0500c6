#pragma once

#include <utility>
#include <vector>

#include "lks/host.hpp"
#include "lks/rational.hpp"

namespace lks {

// Outcome of the matching-structure search on a weighted cluster graph:
// either the matching covers every neighbor of both anchors (case a) or it
// covers the neighbors of anchor_a while anchor_b keeps half its weighted
// degree inside L plus the matching (case b).
struct MatchingStructure {
    int anchor_a = -1, anchor_b = -1;
    bool case_a = true;
    std::vector<std::pair<int, int>> matching;  // may touch the anchors; strip before embedding
    std::vector<int> set_l;                     // clusters with wdeg >= K
    std::vector<int> l_prime;                   // set_l minus matched clusters minus anchors
};

// Requires |L| > N/2. Runs the constructive search: Gallai-Edmonds on the
// unweighted skeleton (low-degree-side internal edges ignored), a maximum
// matching preferring low-degree vertices, a maximal extension, then the
// case tests with an exchange loop as a capped safety net.
MatchingStructure find_structure(const WeightedClusterGraph& h, const Rat& K);

// Independent re-check of every case condition; throws Failure{violation}.
void verify_structure(const WeightedClusterGraph& h, const Rat& K, const MatchingStructure& s);

// Remove matching edges incident with either anchor.
std::vector<std::pair<int, int>> strip_anchors(const std::vector<std::pair<int, int>>& m, int a, int b);

// Test helper: wrap an explicit weight matrix.
WeightedClusterGraph cluster_graph_from_weights(const std::vector<std::vector<Rat>>& w, int s = 1);

}  // namespace lks
