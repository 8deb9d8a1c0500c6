#pragma once

#include <utility>
#include <vector>

#include "lks/host.hpp"
#include "lks/rational.hpp"

namespace lks {

// Two-target number partition instance. alpha values may be zero (used for
// degree-only entries); beta values must be positive unless alpha is not.
struct PartitionInstance {
    Rat a, b, delta;
    std::vector<std::pair<Rat, Rat>> items;  // (alpha_i, beta_i)

    Rat sum_alpha() const;
    Rat sum_beta() const;
    bool feasible() const;  // a/sum_alpha + b/sum_beta <= 1
};

struct NumberSplit {
    std::vector<int> side_a, side_b;  // item indices
    std::vector<int> order;           // items sorted by alpha/beta ascending
    int cut = -1;                     // side_b = order[0..cut], side_a = rest
};

// Ratio-sorted cut: side_a gets the largest suffix whose alpha-sum fits
// under a. Guarantees sum_a(alpha) > a - delta and sum_b(beta) >= b, both
// re-verified on output.
NumberSplit partition_numbers(const PartitionInstance& inst);

// Same instance re-cut at an explicit position (for callers that need both
// sides above explicit targets on coarse instances).
NumberSplit cut_at(const PartitionInstance& inst, const std::vector<int>& order, int cut);

struct MatchingSplit {
    std::vector<int> edges_a, edges_b;  // indices into the stripped matching
    Rat deg_a, deg_b;                   // anchor degrees into the chosen sides
    Rat mu_a, mu_b;                     // per-edge budget slack
};

// Case-1 split of the matching so each anchor keeps room for its side's
// pieces plus margin. Throws input on the degree precondition, and
// infeasible/violation (by profile) when no cut meets the targets.
MatchingSplit partition_case1(const WeightedClusterGraph& h,
                              const std::vector<std::pair<int, int>>& matching, int anchor_a,
                              int anchor_b, long long size_a, long long size_b,
                              const Constants& c);

struct MatchingSplitCase2 {
    std::vector<int> edges_f, edges_b;  // M_F and the B-side remainder
    Rat deg_f_a;                        // anchor_a degree into edges_f
    Rat deg_b_side;                     // anchor_b degree into edges_b plus all of l_prime
    Rat mu_b;                           // pi k / (40 (m_B + |L'|)), profile-scaled
};

MatchingSplitCase2 partition_case2(const WeightedClusterGraph& h,
                                   const std::vector<std::pair<int, int>>& matching, int anchor_a,
                                   int anchor_b, const std::vector<int>& l_prime, long long size_f,
                                   long long size_bar_b, const Constants& c);

struct TbSplit {
    std::vector<int> into_matching;  // family indices embedded through the matching share
    std::vector<int> into_lprime;    // families routed through high-degree free clusters
    Rat threshold;                   // the margin used while growing the matching side
};

// Greedy largest-first split of the bar-B families under the degree budget;
// asserts the free-cluster degree consequence when the remainder is nonempty.
TbSplit split_tb(const Rat& deg_mb, const Rat& deg_lprime, const std::vector<long long>& sizes,
                 int m_b, int l_count, const Constants& c);

}  // namespace lks
