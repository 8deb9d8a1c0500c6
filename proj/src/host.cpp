#include "lks/host.hpp"

#include <algorithm>
#include <numeric>

#include "lks/fail.hpp"

namespace lks {

namespace {

Rat cap_at(const Rat& v, const Rat& ceiling) { return v < ceiling ? v : ceiling; }

}  // namespace

Constants make_constants(const Rat& eta, const Rat& q, long long M0, long long N0, long long k,
                         const Rat& relax, const ConstantOverrides& ov) {
    if (eta <= 0 || eta > 1 || q <= 0 || q > 1) fail_input("constants", "eta, q must lie in (0, 1]");
    if (k < 1) fail_input("constants", "k must be >= 1");
    if (relax < 1) fail_input("constants", "relax factor must be >= 1");

    Constants c;
    c.eta = eta;
    c.q = q;
    c.M0 = M0;
    c.N0 = N0;
    c.k = k;
    c.relax = relax;
    c.pi = std::min(eta, q);

    Rat pi2 = c.pi * c.pi, pi4 = pi2 * pi2, pi5 = pi4 * c.pi;
    c.epsilon0 = ov.epsilon.value_or(pi4 * q / 500000);
    c.alpha0 = ov.alpha.value_or(pi5 * q / Rat(Int(250000000)));
    c.m00 = ov.m0.value_or(Rat(500) / (q * pi2));
    c.p0 = ov.p.value_or(pi2 * q / 250);
    if (Rat(M0) < c.m00) fail_input("constants", "M0 must be at least m0 = " + rat_str(c.m00));
    c.beta0 = ov.beta.value_or(c.epsilon0 / M0);

    // effective values: scaled toward desk ceilings
    c.epsilon = cap_at(c.epsilon0 * relax, rat(1, 10));
    c.alpha = cap_at(c.alpha0 * relax, rat(1, 40));
    c.beta = cap_at(c.beta0 * relax, rat(1, 8));
    c.p = cap_at(c.p0 * relax, rat(1, 5));
    c.m0 = std::max(Rat(c.m00 / relax), Rat(10));

    Rat denom = c.p0 / 2 - 7 * c.alpha0;
    if (denom <= 0) fail_input("constants", "p/2 - 7 alpha must be positive");
    c.n0 = std::max(Rat(N0), Rat(9 * c.epsilon0 / denom));
    c.K = (1 + c.pi / 5) * Rat(k);

    if (c.paper_profile()) {
        // 4 eps + 1/m0 < p < pi^2 / 250
        if (!(4 * c.epsilon + 1 / c.m0 < c.p))
            fail_input("constants", "edge-loss inequality violated: 4 eps + 1/m0 >= p");
        if (!(c.p <= pi2 / 250))
            fail_input("constants", "p exceeds pi^2/250");
    } else {
        // qualitative chain survives relaxation
        if (!(c.alpha < c.epsilon && c.epsilon < c.p && c.p < c.pi))
            fail_input("constants",
                       "relaxed profile breaks alpha < eps < p < pi; lower relax or raise eta, q");
    }
    if (!(c.alpha > 0 && c.beta > 0)) fail_input("constants", "alpha, beta must be positive");
    return c;
}

std::vector<std::string> HostPartition::validate(const Graph& g, const Constants* c) const {
    std::vector<std::string> warnings;
    int n = g.n();
    std::vector<char> seen(n, 0);
    if (static_cast<int>(cluster_of.size()) != n) fail_input("partition", "cluster_of size mismatch");
    int i = 0;
    for (auto& cl : clusters) {
        if (static_cast<int>(cl.size()) != s) fail_input("partition", "cluster size != s");
        for (int v : cl) {
            g.check_vertex(v);
            if (seen[v]) fail_input("partition", "vertex in two parts");
            seen[v] = 1;
            if (cluster_of[v] != i) fail_input("partition", "cluster_of inconsistent");
        }
        ++i;
    }
    for (int v : exceptional) {
        g.check_vertex(v);
        if (seen[v]) fail_input("partition", "vertex in two parts");
        seen[v] = 1;
        if (cluster_of[v] != -1) fail_input("partition", "cluster_of inconsistent for V_0");
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) fail_input("partition", "vertex not covered by the partition");
    int N = this->N();
    if (static_cast<int>(density.size()) != N || static_cast<int>(regular.size()) != N)
        fail_input("partition", "density/regular matrix size mismatch");
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            if (density[a][b] != density[b][a]) fail_input("partition", "density matrix not symmetric");
            if (density[a][b] < 0 || density[a][b] > 1) fail_input("partition", "density outside [0,1]");
        }
    if (c) {
        if (Rat(static_cast<long long>(exceptional.size())) > c->epsilon * n)
            warnings.push_back("exceptional set exceeds eps * n");
        long long irregular = 0;
        for (int a = 0; a < N; ++a)
            for (int b = a + 1; b < N; ++b)
                if (!regular[a][b]) ++irregular;
        if (Rat(irregular) > c->epsilon * N * N)
            warnings.push_back("more than eps * N^2 irregular pairs");
    }
    return warnings;
}

Rat WeightedClusterGraph::wdeg(int v) const {
    Rat sum = 0;
    for (int u : nbrs[v]) sum += w[v][u];
    return sum;
}

Rat WeightedClusterGraph::wdeg_into(int v, const std::vector<int>& targets) const {
    Rat sum = 0;
    for (int u : targets)
        if (u != v) sum += w[v][u];
    return sum;
}

namespace {

// bit rows of X against Y positions, for subset density counting
std::vector<std::vector<std::uint64_t>> adjacency_rows(const Graph& g, const std::vector<int>& x,
                                                       const std::vector<int>& y) {
    size_t words = (y.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(x.size(), std::vector<std::uint64_t>(words, 0));
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j)
            if (g.has_edge(x[i], y[j])) rows[i][j >> 6] |= 1ULL << (j & 63);
    return rows;
}

long long count_pair_edges(const Graph& g, const std::vector<int>& x, const std::vector<int>& y) {
    long long e = 0;
    for (int u : x)
        for (int v : y) e += g.has_edge(u, v);
    return e;
}

}  // namespace

RegularityVerdict check_regular_pair(const Graph& g, const std::vector<int>& x,
                                     const std::vector<int>& y, const Rat& alpha, const Rat& eps,
                                     RegMode mode, int trials, std::uint64_t seed, int exact_cap) {
    if (x.empty() || y.empty()) fail_input("regular_pair", "empty side");
    for (int u : x)
        for (int v : y)
            if (u == v) fail_input("regular_pair", "sides are not disjoint");

    int nx = static_cast<int>(x.size()), ny = static_cast<int>(y.size());
    RegularityVerdict out;
    out.pair_density = Rat(count_pair_edges(g, x, y)) / (Rat(nx) * ny);

    auto size_ok = [&](int cnt, int total) { return Rat(cnt) >= alpha * total; };
    auto collect = [&](std::uint64_t mask, const std::vector<int>& side) {
        std::vector<int> out_set;
        for (size_t i = 0; i < side.size(); ++i)
            if ((mask >> i) & 1) out_set.push_back(side[i]);
        return out_set;
    };

    if (mode == RegMode::exact) {
        if (nx + ny > exact_cap)
            fail_input("regular_pair", "pair too large for exact enumeration (cap " +
                                           std::to_string(exact_cap) + "); use sampled mode");
        auto rows = adjacency_rows(g, x, y);
        // esum over X-subsets for a fixed Y-mask, built by low-bit recurrence
        std::vector<int> ycount(nx);
        std::vector<int> esum(1u << nx);
        for (std::uint64_t ymask = 1; ymask < (1ULL << ny); ++ymask) {
            int ysz = __builtin_popcountll(ymask);
            if (!size_ok(ysz, ny)) continue;
            for (int i = 0; i < nx; ++i) ycount[i] = __builtin_popcountll(rows[i][0] & ymask);
            for (std::uint32_t xmask = 1; xmask < (1u << nx); ++xmask) {
                int low = __builtin_ctz(xmask);
                esum[xmask] = esum[xmask & (xmask - 1)] + ycount[low];
                int xsz = __builtin_popcount(xmask);
                if (!size_ok(xsz, nx)) continue;
                Rat d_sub = Rat(esum[xmask]) / (Rat(xsz) * ysz);
                Rat dev = d_sub > out.pair_density ? d_sub - out.pair_density : out.pair_density - d_sub;
                if (!(dev < eps)) {
                    out.regular = false;
                    out.x_sub = collect(xmask, x);
                    out.y_sub = collect(ymask, y);
                    out.sub_density = d_sub;
                    return out;
                }
            }
        }
        return out;
    }

    Rng rng(seed);
    auto sample_side = [&](const std::vector<int>& side) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            std::vector<int> sub;
            for (int v : side)
                if (rng.below(2)) sub.push_back(v);
            if (size_ok(static_cast<int>(sub.size()), static_cast<int>(side.size())) && !sub.empty())
                return sub;
        }
        return side;  // alpha too close to 1; fall back to the full side
    };
    for (int t = 0; t < trials; ++t) {
        auto xs = sample_side(x);
        auto ys = sample_side(y);
        Rat d_sub = Rat(count_pair_edges(g, xs, ys)) / (Rat(xs.size()) * Rat(ys.size()));
        Rat dev = d_sub > out.pair_density ? d_sub - out.pair_density : out.pair_density - d_sub;
        if (!(dev < eps)) {
            out.regular = false;
            out.x_sub = xs;
            out.y_sub = ys;
            out.sub_density = d_sub;
            return out;
        }
    }
    return out;
}

GpReport build_gp(const Graph& g, const HostPartition& part, const Constants& c,
                  std::optional<Rat> m_param) {
    int n = g.n();
    GpReport rep{Graph(n), 0, Rat(0), true};
    for (auto [u, v] : g.edges()) {
        int cu = part.cluster_of[u], cv = part.cluster_of[v];
        if (cu < 0 || cv < 0 || cu == cv) continue;
        if (!part.regular[cu][cv]) continue;
        if (part.density[cu][cv] < c.p) continue;
        rep.gp.add_edge(u, v);
    }
    rep.removed_edges = g.m() - rep.gp.m();
    Rat m = m_param.value_or(c.m0);
    if (m <= 0) fail_input("build_gp", "loss-bound parameter m must be positive");
    rep.loss_bound = (1 / (2 * m) + 2 * c.epsilon + c.p / 2) * Rat(n) * n;
    rep.within_bound = Rat(rep.removed_edges) <= rep.loss_bound;
    return rep;
}

WeightedClusterGraph cluster_graph(const Graph& gp, const HostPartition& part, const Constants& c) {
    WeightedClusterGraph h;
    h.N = part.N();
    h.s = part.s;
    h.w.assign(h.N, std::vector<Rat>(h.N, 0));
    h.nbrs.assign(h.N, {});
    for (int a = 0; a < h.N; ++a)
        for (int b = a + 1; b < h.N; ++b) {
            if (!part.regular[a][b] || part.density[a][b] < c.p) continue;
            long long e = count_pair_edges(gp, part.clusters[a], part.clusters[b]);
            if (e == 0) continue;
            h.w[a][b] = h.w[b][a] = Rat(e) / part.s;
            h.nbrs[a].push_back(b);
            h.nbrs[b].push_back(a);
        }
    return h;
}

std::vector<int> typical_vertices(const Graph& gp, const HostPartition& part, int x,
                                  const std::vector<TypicalTarget>& targets, const Constants& c,
                                  bool subset_form) {
    if (x < 0 || x >= part.N()) fail_input("typical", "cluster index out of range");
    int s = part.s;
    Rat deviation = (subset_form ? 2 : 1) * c.epsilon * static_cast<long long>(targets.size()) * s;

    std::vector<std::vector<int>> target_sets;
    Rat xdeg = 0;  // weighted degree of the cluster into the target family
    for (auto& t : targets) {
        if (t.cluster == x || t.cluster < 0 || t.cluster >= part.N())
            fail_input("typical", "target must be a distinct cluster");
        const auto& verts = t.verts.empty() ? part.clusters[t.cluster] : t.verts;
        if (subset_form && Rat(static_cast<long long>(verts.size())) < c.alpha * s)
            fail_input("typical", "subset-form target smaller than alpha * s");
        long long e = 0;
        for (int v : verts) e += count_pair_edges(gp, {v}, part.clusters[x]);
        xdeg += Rat(e) / s;
        target_sets.push_back(verts);
    }

    std::vector<int> out;
    for (int v : part.clusters[x]) {
        long long deg = 0;
        for (auto& verts : target_sets)
            for (int u : verts) deg += gp.has_edge(v, u);
        if (Rat(deg) > xdeg - deviation) out.push_back(v);
    }
    return out;
}

PlantedHost gen_planted_host(int N, int s, const std::vector<std::vector<Rat>>& density,
                             int v0_size, std::uint64_t seed, int sample_trials) {
    if (N < 1 || s < 1 || v0_size < 0) fail_input("gen_host", "bad dimensions");
    if (static_cast<int>(density.size()) != N) fail_input("gen_host", "density matrix must be N x N");
    for (auto& row : density) {
        if (static_cast<int>(row.size()) != N) fail_input("gen_host", "density matrix must be N x N");
        for (auto& d : row)
            if (d < 0 || d > 1) fail_input("gen_host", "density outside [0,1]");
    }

    int n = N * s + v0_size;
    PlantedHost host{Graph(n), {}};
    auto& part = host.part;
    part.s = s;
    part.cluster_of.assign(n, -1);
    for (int i = 0; i < N; ++i) {
        std::vector<int> cl(s);
        std::iota(cl.begin(), cl.end(), i * s);
        for (int v : cl) part.cluster_of[v] = i;
        part.clusters.push_back(std::move(cl));
    }
    for (int v = N * s; v < n; ++v) part.exceptional.push_back(v);

    Rng rng(seed);
    part.density.assign(N, std::vector<Rat>(N, 0));
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) {
            const Rat& d = density[a][b];
            long long edges = 0;
            if (d > 0) {
                bool always = d >= 1;
                std::uint64_t threshold = 0;
                if (!always)
                    threshold = static_cast<std::uint64_t>((numerator(d) << 64) / denominator(d));
                for (int u : part.clusters[a])
                    for (int v : part.clusters[b])
                        if (always || rng.next() < threshold) {
                            host.g.add_edge(u, v);
                            ++edges;
                        }
            }
            part.density[a][b] = part.density[b][a] = Rat(edges) / (Rat(s) * s);
        }

    // a few arbitrary sparse edges off the exceptional set
    for (int v = N * s; v < n; ++v)
        for (int t = 0; t < 3; ++t) {
            int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(N) * s));
            if (!host.g.has_edge(u, v)) host.g.add_edge(u, v);
        }

    part.regular.assign(N, std::vector<char>(N, 0));
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) {
            auto verdict = check_regular_pair(host.g, part.clusters[a], part.clusters[b], rat(1, 10),
                                              rat(1, 10), RegMode::sampled, sample_trials, rng.next());
            part.regular[a][b] = part.regular[b][a] = verdict.regular;
        }
    return host;
}

}  // namespace lks
