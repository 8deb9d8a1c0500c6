#include "lks/numbers.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lks/fail.hpp"

namespace lks {

Rat PartitionInstance::sum_alpha() const {
    Rat s = 0;
    for (auto& [al, be] : items) s += al;
    return s;
}

Rat PartitionInstance::sum_beta() const {
    Rat s = 0;
    for (auto& [al, be] : items) s += be;
    return s;
}

bool PartitionInstance::feasible() const {
    Rat sa = sum_alpha(), sb = sum_beta();
    if (a < 0 || b < 0) return false;
    if (sa == 0 && a > 0) return false;
    if (sb == 0 && b > 0) return false;
    Rat lhs = 0;
    if (sa > 0) lhs += a / sa;
    if (sb > 0) lhs += b / sb;
    return lhs <= 1;
}

namespace {

void validate_instance(const PartitionInstance& inst) {
    if (inst.delta <= 0) fail_input("partition_numbers", "delta must be positive");
    for (auto& [al, be] : inst.items) {
        if (al < 0 || be < 0) fail_input("partition_numbers", "negative entry");
        if (al > inst.delta || be > inst.delta) fail_input("partition_numbers", "entry above delta");
        if (al == 0 && be == 0) fail_input("partition_numbers", "entry with both values zero");
    }
    if (!inst.feasible()) fail_input("partition_numbers", "capacity condition fails");
}

std::vector<int> ratio_order(const PartitionInstance& inst) {
    std::vector<int> order(inst.items.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        const auto& [ai, bi] = inst.items[i];
        const auto& [aj, bj] = inst.items[j];
        Rat lhs = ai * bj, rhs = aj * bi;  // alpha_i/beta_i vs alpha_j/beta_j
        if (lhs != rhs) return lhs < rhs;
        return i < j;
    });
    return order;
}

}  // namespace

NumberSplit cut_at(const PartitionInstance& inst, const std::vector<int>& order, int cut) {
    NumberSplit out;
    out.order = order;
    out.cut = cut;
    for (int pos = 0; pos < static_cast<int>(order.size()); ++pos)
        (pos <= cut ? out.side_b : out.side_a).push_back(order[pos]);
    std::sort(out.side_a.begin(), out.side_a.end());
    std::sort(out.side_b.begin(), out.side_b.end());
    return out;
}

NumberSplit partition_numbers(const PartitionInstance& inst) {
    validate_instance(inst);
    auto order = ratio_order(inst);
    int m = static_cast<int>(order.size());
    // smallest cut whose alpha-suffix fits under a; cut -1 = everything to side_a
    std::vector<Rat> suffix(m + 1, 0);
    for (int pos = m - 1; pos >= 0; --pos)
        suffix[pos] = suffix[pos + 1] + inst.items[order[pos]].first;
    // the largest alpha-suffix fitting under a; ties push items with no
    // alpha contribution down into the beta side
    int cut = m - 1;
    for (int pos = -1; pos < m; ++pos)
        if (inst.a >= suffix[pos + 1]) {
            cut = pos;
            while (cut + 1 < m && suffix[cut + 2] == suffix[cut + 1]) ++cut;
            break;
        }
    auto out = cut_at(inst, order, cut);

    Rat got_a = 0, got_b = 0;
    for (int i : out.side_a) got_a += inst.items[i].first;
    for (int i : out.side_b) got_b += inst.items[i].second;
    if (!(got_a > inst.a - inst.delta))
        fail_violation("partition_numbers", "alpha side fell short of a - delta");
    if (!(got_b >= inst.b)) fail_violation("partition_numbers", "beta side fell short of b");
    return out;
}

namespace {

// Shared tail of the two matching splits: prefer the guarantee cut; when the
// instance is too coarse for it, slide to the first cut meeting both explicit
// targets.
NumberSplit cut_meeting_targets(const PartitionInstance& inst, const Rat& target_a,
                                const Rat& target_b, bool strict_b, const Constants& c,
                                const std::string& stage) {
    auto split = partition_numbers(inst);
    auto eval = [&](const NumberSplit& s, Rat& ga, Rat& gb) {
        ga = 0;
        gb = 0;
        for (int i : s.side_a) ga += inst.items[i].first;
        for (int i : s.side_b) gb += inst.items[i].second;
    };
    Rat ga, gb;
    eval(split, ga, gb);
    if (ga > target_a && (strict_b ? gb > target_b : gb >= target_b)) return split;
    for (int cut = -1; cut < static_cast<int>(inst.items.size()); ++cut) {
        auto cand = cut_at(inst, split.order, cut);
        eval(cand, ga, gb);
        if (ga > target_a && (strict_b ? gb > target_b : gb >= target_b)) return cand;
    }
    std::string msg = "no cut meets both side targets";
    if (c.paper_profile()) fail_violation(stage, msg);
    fail_infeasible(stage, msg);
}

Rat edge_degree(const WeightedClusterGraph& h, int v, const std::pair<int, int>& e) {
    return h.w[v][e.first] + h.w[v][e.second];
}

}  // namespace

MatchingSplit partition_case1(const WeightedClusterGraph& h,
                              const std::vector<std::pair<int, int>>& matching, int anchor_a,
                              int anchor_b, long long size_a, long long size_b,
                              const Constants& c) {
    PartitionInstance inst;
    inst.delta = Rat(2) * h.s;
    Rat deg_a_total = 0, deg_b_total = 0;
    for (auto& e : matching) {
        Rat da = edge_degree(h, anchor_a, e), db = edge_degree(h, anchor_b, e);
        inst.items.emplace_back(da, db);
        deg_a_total += da;
        deg_b_total += db;
    }
    Rat hypothesis = (1 + c.pi / 10) * Rat(c.k);
    if (deg_a_total < hypothesis || deg_b_total < hypothesis)
        fail_input("partition_case1", "anchor degrees into the matching below (1 + pi/10) k");
    Rat margin20 = c.slack(c.pi * c.k / 20), margin40 = c.slack(c.pi * c.k / 40);
    inst.a = Rat(size_a) + margin20;
    inst.b = Rat(size_b) + margin20;

    // a side with nothing to host only needs a vacuous share
    Rat target_a = size_a > 0 ? Rat(size_a) + margin40 : Rat(-1);
    Rat target_b = size_b > 0 ? Rat(size_b) + margin40 : Rat(-1);
    if (size_a == 0) inst.a = 0;
    if (size_b == 0) inst.b = 0;
    auto split = cut_meeting_targets(inst, target_a, target_b, true, c, "partition_case1");
    MatchingSplit out;
    out.edges_a = split.side_a;
    out.edges_b = split.side_b;
    for (int i : out.edges_a) out.deg_a += inst.items[i].first;
    for (int i : out.edges_b) out.deg_b += inst.items[i].second;
    out.mu_a = out.edges_a.empty() ? Rat(0) : c.slack(c.pi * c.k / 40) / static_cast<long long>(out.edges_a.size());
    out.mu_b = out.edges_b.empty() ? Rat(0) : c.slack(c.pi * c.k / 40) / static_cast<long long>(out.edges_b.size());
    return out;
}

MatchingSplitCase2 partition_case2(const WeightedClusterGraph& h,
                                   const std::vector<std::pair<int, int>>& matching, int anchor_a,
                                   int anchor_b, const std::vector<int>& l_prime, long long size_f,
                                   long long size_bar_b, const Constants& c) {
    PartitionInstance inst;
    inst.delta = Rat(2) * h.s;
    Rat deg_a_total = 0, deg_b_matching = 0, deg_b_lprime = 0;
    for (auto& e : matching) {
        inst.items.emplace_back(edge_degree(h, anchor_a, e), edge_degree(h, anchor_b, e));
        deg_a_total += inst.items.back().first;
        deg_b_matching += inst.items.back().second;
    }
    int m = static_cast<int>(matching.size());
    for (int cl : l_prime) {
        inst.items.emplace_back(Rat(0), h.w[anchor_b][cl]);
        deg_b_lprime += h.w[anchor_b][cl];
    }
    if (deg_a_total < (1 + c.pi / 10) * Rat(c.k))
        fail_input("partition_case2", "anchor_a degree into the matching below (1 + pi/10) k");
    if (deg_b_matching + deg_b_lprime < (1 + c.pi / 10) * Rat(c.k) / 2)
        fail_input("partition_case2", "anchor_b degree below (1 + pi/10) k / 2");

    Rat margin20 = c.slack(c.pi * c.k / 20), margin40 = c.slack(c.pi * c.k / 40);
    inst.a = Rat(size_f) + margin20;
    inst.b = Rat(size_bar_b) + margin40;

    // side_b's beta target counts only assigned items, but the verified
    // inequality below counts all of l_prime, matching how it is consumed
    auto split = cut_meeting_targets(inst, Rat(size_f) + margin40, inst.b, false, c,
                                     "partition_case2");

    MatchingSplitCase2 out;
    for (int i : split.side_a)
        if (i < m) out.edges_f.push_back(i);
    for (int i : split.side_b)
        if (i < m) out.edges_b.push_back(i);
    for (int i : out.edges_f) out.deg_f_a += inst.items[i].first;
    for (int i : out.edges_b) out.deg_b_side += inst.items[i].second;
    out.deg_b_side += deg_b_lprime;

    if (!(out.deg_f_a > Rat(size_f) + margin40)) {
        if (c.paper_profile()) fail_violation("partition_case2", "F-side degree target missed");
        fail_infeasible("partition_case2", "F-side degree target missed");
    }
    if (!(out.deg_b_side >= Rat(size_bar_b) + margin40)) {
        if (c.paper_profile()) fail_violation("partition_case2", "B-side degree target missed");
        fail_infeasible("partition_case2", "B-side degree target missed");
    }
    int denom = static_cast<int>(out.edges_b.size()) + static_cast<int>(l_prime.size());
    out.mu_b = denom == 0 ? Rat(0) : c.slack(c.pi * c.k / 40) / denom;
    return out;
}

TbSplit split_tb(const Rat& deg_mb, const Rat& deg_lprime, const std::vector<long long>& sizes,
                 int m_b, int l_count, const Constants& c) {
    TbSplit out;
    int denom = m_b + l_count;
    out.threshold = denom == 0 ? Rat(0) : c.slack(c.pi * c.k * m_b / (40 * denom));

    std::vector<int> order(sizes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (sizes[i] != sizes[j]) return sizes[i] > sizes[j];
        return i < j;
    });
    long long taken = 0;
    for (int i : order) {
        if (deg_mb >= Rat(taken + sizes[i]) + out.threshold) {
            taken += sizes[i];
            out.into_matching.push_back(i);
        } else {
            out.into_lprime.push_back(i);
        }
    }
    std::sort(out.into_matching.begin(), out.into_matching.end());
    std::sort(out.into_lprime.begin(), out.into_lprime.end());

    if (!out.into_lprime.empty()) {
        long long rest = 0;
        for (int i : out.into_lprime) rest += sizes[i];
        Rat margin = denom == 0 ? Rat(0) : c.slack(c.pi * c.k * l_count / (80 * denom));
        Rat bound = Rat(rest) + margin;
        if (!c.paper_profile()) bound -= c.beta * c.k;  // greedy granularity correction
        if (!(deg_lprime >= bound))
            fail_violation("split_tb", "free-cluster degree consequence failed");
    }
    return out;
}

}  // namespace lks
