#include "lks/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lks/fail.hpp"

namespace lks {

namespace {

// Components of the tree minus a seed set, each keyed by its top vertex.
std::vector<Family> tree_pieces(const RootedTree& t, const std::vector<char>& is_seed) {
    std::vector<Family> pieces;
    std::vector<int> piece_of(t.n(), -1);
    for (int v : t.preorder()) {
        if (is_seed[v]) continue;
        int p = t.parent(v);
        if (p >= 0 && !is_seed[p]) {
            piece_of[v] = piece_of[p];
            pieces[piece_of[v]].verts.push_back(v);
        } else {
            piece_of[v] = static_cast<int>(pieces.size());
            Family f;
            f.seed = p;  // -1 only if the root is not a seed (rejected later)
            f.verts.push_back(v);
            pieces.push_back(std::move(f));
        }
    }
    for (auto& f : pieces) std::sort(f.verts.begin(), f.verts.end());
    return pieces;
}

}  // namespace

Decomposition decompose(const RootedTree& t, long long k, const Rat& beta) {
    if (t.n() - 1 > k) fail_input("decompose", "tree has more than k edges");
    Rat betak = beta * k;
    if (betak < 2) fail_input("decompose", "beta * k below 2 degenerates the seed bound");

    int n = t.n();
    // Deepest-first peel: a vertex whose remaining subtree exceeds beta*k
    // becomes a cut vertex and its strict subtree is detached. Processing in
    // reverse BFS order matches the one-at-a-time extraction with the
    // deepest-qualifier tie-break.
    std::vector<int> order(t.preorder());  // parents precede children
    std::vector<long long> rem(n, 1);
    std::vector<char> is_x(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        if (Rat(rem[v]) > betak) {
            is_x[v] = 1;
            rem[v] = 1;
        }
        if (v != t.root()) rem[t.parent(v)] += rem[v];
    }
    is_x[t.root()] = 1;  // the process always ends at the root

    Decomposition d;
    for (int v = 0; v < n; ++v)
        if (is_x[v]) d.extracted.push_back(v);

    // parity split of the cut vertices
    std::vector<char> is_seed(n, 0), seed_side_a(n, 0);
    for (int v : d.extracted) {
        is_seed[v] = 1;
        seed_side_a[v] = t.depth(v) % 2 == 0;
    }

    // boundary augmentation: inside each piece, vertices adjacent to an
    // opposite-parity cut vertex become seeds of their own parity class
    auto prelim = tree_pieces(t, is_seed);
    for (auto& f : prelim) {
        bool side_a = seed_side_a[f.seed];
        for (int v : f.verts) {
            bool touches_other = false;
            int p = t.parent(v);
            if (p >= 0 && is_seed[p] && seed_side_a[p] != side_a) touches_other = true;
            for (int c : t.children(v))
                if (is_seed[c] && seed_side_a[c] != side_a) touches_other = true;
            if (touches_other) {
                is_seed[v] = 1;
                seed_side_a[v] = t.depth(v) % 2 == 0;
            }
        }
    }

    for (int v = 0; v < n; ++v) {
        if (!is_seed[v]) continue;
        (seed_side_a[v] ? d.seeds_a : d.seeds_b).push_back(v);
    }

    d.families = tree_pieces(t, is_seed);
    for (auto& f : d.families) {
        f.side_a = seed_side_a[f.seed];
        (f.side_a ? d.size_a : d.size_b) += static_cast<long long>(f.verts.size());
    }
    verify_decomposition(t, d, k, beta);
    return d;
}

void verify_decomposition(const RootedTree& t, const Decomposition& d, long long k,
                          const Rat& beta) {
    int n = t.n();
    auto bad = [&](const std::string& c) { fail_violation("decomposition", "condition " + c); };
    Rat betak = beta * k;

    std::vector<int> side(n, 0);  // 0 free, 1 side-a seed, 2 side-b seed
    for (int v : d.seeds_a) side[v] = 1;
    for (int v : d.seeds_b) {
        if (side[v]) bad("(I): seed sets intersect");
        side[v] = 2;
    }

    // (II): fixed parity per side, root among the seeds. The root sits in
    // seeds_a unless the sides were renamed.
    int root_side = d.swapped ? 2 : 1;
    if (side[t.root()] != root_side) bad("(II): root not in its seed class");
    for (int v = 0; v < n; ++v)
        if (side[v]) {
            bool even = t.depth(v) % 2 == 0;
            bool root_parity_side = side[v] == root_side;
            if (even != root_parity_side) bad("(II): seed parity mismatch");
        }

    // (III): families are exactly the components of the tree minus seeds
    std::vector<int> fam_of(n, -1);
    long long covered = 0;
    for (size_t i = 0; i < d.families.size(); ++i) {
        const auto& f = d.families[i];
        if (f.verts.empty()) bad("(III): empty family");
        for (int v : f.verts) {
            if (side[v] || fam_of[v] != -1) bad("(III): family overlaps a seed or another family");
            fam_of[v] = static_cast<int>(i);
            ++covered;
        }
    }
    if (covered + static_cast<long long>(d.seeds_a.size() + d.seeds_b.size()) != n)
        bad("(III): seeds and families do not span the tree");
    for (int v = 0; v < n; ++v) {
        int p = t.parent(v);
        if (p < 0) continue;
        if (fam_of[v] >= 0 && fam_of[p] >= 0 && fam_of[v] != fam_of[p])
            bad("(III): two families are adjacent");
    }

    long long sa = 0, sb = 0;
    for (const auto& f : d.families) {
        // (IV): small pieces with a seed just above their top vertex
        if (Rat(static_cast<long long>(f.verts.size())) > betak) bad("(IV): family exceeds beta*k");
        int expect_seed = t.seed_of(f.verts);
        if (expect_seed != f.seed || !side[f.seed]) bad("(IV): family seed wrong or not a seed");
        bool seed_is_a = side[f.seed] == 1;
        if (f.side_a != seed_is_a) bad("(IV): family side tag mismatch");
        (f.side_a ? sa : sb) += static_cast<long long>(f.verts.size());
        // (VI): no edge from the piece to the opposite seed class
        int opposite = f.side_a ? 2 : 1;
        for (int v : f.verts) {
            int p = t.parent(v);
            if (p >= 0 && side[p] == opposite) bad("(VI): family touches the opposite seed class");
            for (int c : t.children(v))
                if (side[c] == opposite) bad("(VI): family touches the opposite seed class");
        }
    }
    if (sa != d.size_a || sb != d.size_b) bad("size bookkeeping");

    // (V)
    Rat cap = Rat(2) / beta;
    if (!(Rat(static_cast<long long>(d.seeds_a.size())) < cap) ||
        !(Rat(static_cast<long long>(d.seeds_b.size())) < cap))
        bad("(V): seed class too large");
    // peel bound: each extraction except the root's costs beta*k - 1 vertices
    if (betak > 2 && !(Rat(static_cast<long long>(d.extracted.size())) <= Rat(k) / (betak - 1) + 1))
        bad("(V): extraction count exceeds k/(beta k - 1) + 1");
}

void classify_bar(Decomposition& d, const RootedTree& t, bool allow_swap) {
    int n = t.n();
    std::vector<char> is_seed(n, 0);
    for (int v : d.seeds_a) is_seed[v] = 1;
    for (int v : d.seeds_b) is_seed[v] = 1;

    long long bar_a = 0, bar_b = 0;
    for (auto& f : d.families) {
        f.bar = true;
        for (int v : f.verts) {
            int p = t.parent(v);
            if (p >= 0 && is_seed[p] && p != f.seed) f.bar = false;
            for (int c : t.children(v))
                if (is_seed[c] && c != f.seed) f.bar = false;
        }
        if (f.bar) (f.side_a ? bar_a : bar_b) += static_cast<long long>(f.verts.size());
    }
    if (allow_swap && bar_a < bar_b) {
        std::swap(d.seeds_a, d.seeds_b);
        std::swap(d.size_a, d.size_b);
        for (auto& f : d.families) f.side_a = !f.side_a;
        d.swapped = !d.swapped;
    }
    d.bar_classified = true;
}

SwitchedDecomposition switch_decomposition(const Decomposition& d, const RootedTree& t) {
    if (!d.bar_classified) fail_input("switch", "bar classification must run first");
    int n = t.n();
    std::vector<char> is_seed_b(n, 0);
    for (int v : d.seeds_b) is_seed_b[v] = 1;

    SwitchedDecomposition sd;
    sd.swapped = d.swapped;
    sd.seeds_abar = d.seeds_a;
    sd.seeds_b = d.seeds_b;

    for (const auto& f : d.families) {
        if (f.side_a) {
            (f.bar ? sd.fam_bar_a : sd.fam_f).push_back(f);
            continue;
        }
        if (f.bar) {
            sd.fam_bar_b.push_back(f);
            continue;
        }
        // boundary vertices adjacent to the B-side seed class move over
        std::vector<char> boundary(n, 0);
        std::vector<int> keep;
        for (int v : f.verts) {
            bool adj_b = false;
            int p = t.parent(v);
            if (p >= 0 && is_seed_b[p]) adj_b = true;
            for (int c : t.children(v))
                if (is_seed_b[c]) adj_b = true;
            if (adj_b) {
                boundary[v] = 1;
                sd.seeds_abar.push_back(v);
            } else {
                keep.push_back(v);
            }
        }
        // remaining pieces of this family join the A side
        std::vector<char> blocked(n, 1);
        for (int v : keep) blocked[v] = 0;
        std::vector<int> piece_of(n, -1);
        std::vector<Family> pieces;
        for (int v : t.preorder()) {
            if (blocked[v]) continue;
            int p = t.parent(v);
            if (p >= 0 && !blocked[p]) {
                piece_of[v] = piece_of[p];
                pieces[piece_of[v]].verts.push_back(v);
            } else {
                piece_of[v] = static_cast<int>(pieces.size());
                Family nf;
                nf.seed = p;
                nf.side_a = true;
                nf.verts.push_back(v);
                pieces.push_back(std::move(nf));
            }
        }
        for (auto& nf : pieces) {
            std::sort(nf.verts.begin(), nf.verts.end());
            sd.fam_f.push_back(std::move(nf));
        }
    }

    std::sort(sd.seeds_abar.begin(), sd.seeds_abar.end());
    for (const auto& f : sd.fam_f) sd.size_f += static_cast<long long>(f.verts.size());
    for (const auto& f : sd.fam_bar_b) sd.size_bar_b += static_cast<long long>(f.verts.size());
    return sd;
}

void verify_switched(const RootedTree& t, const SwitchedDecomposition& sd, long long k,
                     const Rat& beta) {
    int n = t.n();
    auto bad = [&](const std::string& c) { fail_violation("switched", c); };
    Rat betak = beta * k;

    std::vector<int> side(n, 0);
    for (int v : sd.seeds_abar) side[v] = 1;
    for (int v : sd.seeds_b) {
        if (side[v]) bad("seed classes intersect");
        side[v] = 2;
    }
    int root_side = sd.swapped ? 2 : 1;
    if (side[t.root()] != root_side) bad("root missing from its seed class");
    for (int v = 0; v < n; ++v)
        if (side[v] && ((t.depth(v) % 2 == 0) != (side[v] == root_side)))
            bad("seed parity mismatch");

    // seed budget: the switch at most triples one side
    if (!(Rat(static_cast<long long>(sd.seeds_abar.size() + sd.seeds_b.size())) <= Rat(8) / beta))
        bad("total seed count exceeds 8/beta");

    std::vector<int> fam_of(n, -1);
    long long covered = 0, sf = 0, sbb = 0;
    auto place = [&](const std::vector<Family>& fams, int tag) {
        for (const auto& f : fams) {
            if (f.verts.empty()) bad("empty family");
            if (Rat(static_cast<long long>(f.verts.size())) > betak) bad("family exceeds beta*k");
            if (t.seed_of(f.verts) != f.seed) bad("family seed mismatch");
            int want_side = tag == 2 ? 2 : 1;
            if (side[f.seed] != want_side) bad("family seeded on the wrong side");
            for (int v : f.verts) {
                if (side[v] || fam_of[v] != -1) bad("family overlaps");
                fam_of[v] = 1;
                ++covered;
            }
            // adjacency discipline: bar pieces touch no second seed, nobody
            // touches the opposite class
            for (int v : f.verts) {
                int p = t.parent(v);
                if (p >= 0 && side[p]) {
                    if (tag != 0 && p != f.seed) bad("bar family touches a second seed");
                    if (side[p] == (tag == 2 ? 1 : 2)) bad("family touches the opposite class");
                }
                for (int c : t.children(v))
                    if (side[c]) {
                        if (tag != 0 && c != f.seed) bad("bar family touches a second seed");
                        if (side[c] == (tag == 2 ? 1 : 2)) bad("family touches the opposite class");
                    }
            }
            if (tag == 2) sbb += static_cast<long long>(f.verts.size());
            if (tag == 0) sf += static_cast<long long>(f.verts.size());
        }
    };
    place(sd.fam_f, 0);
    place(sd.fam_bar_a, 1);
    place(sd.fam_bar_b, 2);
    if (covered + static_cast<long long>(sd.seeds_abar.size() + sd.seeds_b.size()) != n)
        bad("seeds and families do not span the tree");
    if (sf != sd.size_f || sbb != sd.size_bar_b) bad("size bookkeeping");

    // the embedding order is well-founded: every non-root seed hangs off a
    // family or another seed
    for (int v = 0; v < n; ++v)
        if (side[v] && v != t.root()) {
            int p = t.parent(v);
            if (p < 0) bad("non-root seed without parent");
        }
}

}  // namespace lks
