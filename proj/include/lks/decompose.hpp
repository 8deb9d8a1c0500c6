#pragma once

#include <vector>

#include "lks/rational.hpp"
#include "lks/rooted_tree.hpp"

namespace lks {

struct Family {
    int seed = -1;             // the unique vertex just above the piece
    std::vector<int> verts;    // sorted
    bool side_a = true;        // seed lies in seeds_a
    bool bar = false;          // touches no seed besides its own
};

// Seeds plus small pieces spanning the tree. seeds_a holds the root's
// parity class unless swapped is set (bar classification may rename the
// sides so the bar-A side is the larger one).
struct Decomposition {
    std::vector<int> seeds_a, seeds_b;
    std::vector<Family> families;
    long long size_a = 0, size_b = 0;  // total piece vertices per side
    std::vector<int> extracted;        // the x-vertices, before augmentation
    bool swapped = false;
    bool bar_classified = false;
};

// Iterative peel of deepest oversized subtrees, then boundary augmentation.
// Requires beta * k >= 2 and t.n() - 1 <= k.
Decomposition decompose(const RootedTree& t, long long k, const Rat& beta);

// Conditions (I)-(VI); throws Failure{violation} naming the failed one.
void verify_decomposition(const RootedTree& t, const Decomposition& d, long long k, const Rat& beta);

// Flags bar families; when allow_swap, renames sides so that the bar pieces
// on side A carry at least as many vertices as those on side B.
void classify_bar(Decomposition& d, const RootedTree& t, bool allow_swap = true);

struct SwitchedDecomposition {
    std::vector<int> seeds_abar, seeds_b;
    std::vector<Family> fam_f;       // embedded through anchor A's matching share
    std::vector<Family> fam_bar_a;   // postponed to the final phase
    std::vector<Family> fam_bar_b;   // B-side single-seed pieces
    long long size_f = 0, size_bar_b = 0;
    bool swapped = false;
};

// Moves the B-adjacent boundary of every non-bar B-side piece into the
// A-side seed set and splits the remains into fresh A-side pieces.
SwitchedDecomposition switch_decomposition(const Decomposition& d, const RootedTree& t);

void verify_switched(const RootedTree& t, const SwitchedDecomposition& sd, long long k,
                     const Rat& beta);

}  // namespace lks
