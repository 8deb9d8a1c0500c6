#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lks/graph.hpp"
#include "lks/rational.hpp"
#include "lks/rng.hpp"

namespace lks {

// Optional replacements for the derived constants. Only way to produce an
// inconsistent parameterization, which make_constants rejects.
struct ConstantOverrides {
    std::optional<Rat> epsilon, alpha, beta, p, m0;
};

// Derived constants plus the relaxation profile. relax == 1 reproduces the
// exact derivations; relax > 1 scales the tolerance constants up (capped at
// desk-scale ceilings) and divides every slack margin by relax. The
// procedures themselves are profile-invariant; only the quantitative
// guarantees weaken, and per-instance verification adjudicates those.
struct Constants {
    Rat eta, q, pi;
    long long M0 = 0, N0 = 0, k = 0;
    Rat relax = 1;

    // raw derived values
    Rat epsilon0, alpha0, m00, beta0, p0;
    // effective (profile-adjusted) values
    Rat epsilon, alpha, m0, beta, p;

    Rat n0;
    Rat K;  // weighted-degree threshold (1 + pi/5) k, never profile-scaled

    bool paper_profile() const { return relax == 1; }
    // slack margins shrink with the profile
    Rat slack(const Rat& v) const { return v / relax; }
};

Constants make_constants(const Rat& eta, const Rat& q, long long M0, long long N0, long long k,
                         const Rat& relax = 1, const ConstantOverrides& ov = {});

struct HostPartition {
    int s = 0;
    std::vector<std::vector<int>> clusters;   // V_1..V_N stored 0-indexed
    std::vector<int> exceptional;             // V_0
    std::vector<std::vector<Rat>> density;    // e(V_i,V_j) / s^2, actual counts
    std::vector<std::vector<char>> regular;   // pair verdicts
    std::vector<int> cluster_of;              // vertex -> cluster index, -1 for V_0

    int N() const { return static_cast<int>(clusters.size()); }
    // Structural checks; returns human-readable warnings for the soft
    // invariants (irregular-pair budget, exceptional-set size).
    std::vector<std::string> validate(const Graph& g, const Constants* c = nullptr) const;
};

struct WeightedClusterGraph {
    int N = 0;
    int s = 0;
    std::vector<std::vector<Rat>> w;     // weight 0 = no edge
    std::vector<std::vector<int>> nbrs;

    bool has_edge(int a, int b) const { return w[a][b] != 0; }
    Rat wdeg(int v) const;
    Rat wdeg_into(int v, const std::vector<int>& targets) const;
};

enum class RegMode { exact, sampled };

struct RegularityVerdict {
    bool regular = true;
    // witness sub-pair when not regular
    std::vector<int> x_sub, y_sub;
    Rat pair_density, sub_density;
};

// (alpha, eps)-regularity of the bipartite pair (X, Y) in g. Exact mode
// enumerates every large-enough sub-pair (|X|+|Y| <= exact_cap); sampled
// mode tries `trials` random sub-pairs.
RegularityVerdict check_regular_pair(const Graph& g, const std::vector<int>& x,
                                     const std::vector<int>& y, const Rat& alpha, const Rat& eps,
                                     RegMode mode, int trials = 1000, std::uint64_t seed = 0,
                                     int exact_cap = 26);

struct GpReport {
    Graph gp;
    long long removed_edges = 0;
    Rat loss_bound;       // (1/(2m) + 2 eps + p/2) n^2
    bool within_bound = true;
};

// Prunes intra-cluster edges, exceptional-set edges, irregular pairs and
// sparse pairs; reports the edge loss against the closed-form bound.
// m_param defaults to the effective m0.
GpReport build_gp(const Graph& g, const HostPartition& part, const Constants& c,
                  std::optional<Rat> m_param = std::nullopt);

WeightedClusterGraph cluster_graph(const Graph& gp, const HostPartition& part, const Constants& c);

// Typicality of vertices of cluster x. Targets are (cluster, vertex subset)
// pairs in distinct clusters != x; full-cluster form uses deviation
// eps*|targets|*s, subset form 2*eps*|targets|*s and requires each subset
// to have size >= alpha*s.
struct TypicalTarget {
    int cluster;
    std::vector<int> verts;  // empty means the full cluster
};

std::vector<int> typical_vertices(const Graph& gp, const HostPartition& part, int x,
                                  const std::vector<TypicalTarget>& targets, const Constants& c,
                                  bool subset_form);

struct PlantedHost {
    Graph g;
    HostPartition part;
};

// Desk-scale stand-in for a regularity partition: every inter-cluster pair
// is an independent-coin bipartite graph with the prescribed density, the
// exceptional set gets a few arbitrary edges, densities are recorded from
// actual counts and verdicts from sampled checks.
PlantedHost gen_planted_host(int N, int s, const std::vector<std::vector<Rat>>& density,
                             int v0_size, std::uint64_t seed, int sample_trials = 200);

inline std::vector<std::vector<Rat>> uniform_density(int N, const Rat& d) {
    std::vector<std::vector<Rat>> m(N, std::vector<Rat>(N, d));
    for (int i = 0; i < N; ++i) m[i][i] = 0;
    return m;
}

}  // namespace lks
