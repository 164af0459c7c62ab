#pragma once

#include <string>
#include <vector>

#include "mtheta/groups.hpp"

namespace mtheta::weyl {

using groups::WeylElement;

// Monomial matrix of Sp_{2l} with w_{i,2i-1} = 1 on the first l rows,
// completed uniquely to a symplectic Weyl element.
WeylElement weyl_interleaving(long l);

// The block-monomial element of Sp_{2(l+r)} with corner placements
// eps1(i, 2i-1) = 1 for i <= (r+1)/2 and eps2(i + (r+3)/2, 2i+2) = 1 for
// 0 <= i <= (r-3)/2, identity in the middle.
WeylElement weyl_corner_blocks(long r, long l);

// The cuspidality Weyl element of Sp_{2n+k(r-1)}, k = 2*alpha + beta: block
// bands of I_alpha and I_beta placed by the anchor rules, identity in the
// middle, mirrored bottom band.
WeylElement weyl_cusp(long alpha, long beta, long r, long n);

// Labeled block-diagonal pattern; blocks are ordered and sized.
struct BlockPattern {
    struct Block {
        std::string label;
        long size;
    };
    std::vector<Block> blocks;

    long total() const;
};

// Block-permutation Weyl element w with w diag(src) w^{-1} = diag(dst) for
// every scalar instantiation of the labels, minimizing the inversion count
// of the induced coordinate permutation (equal-label blocks are matched in
// order, which is both minimal and lexicographically first). Signs are
// completed lexicographically.
WeylElement shortest_conjugator(const BlockPattern& src, const BlockPattern& dst);

// Coordinate permutation induced by a conjugator candidate; exposed for the
// minimality checks. perm[p] = destination position of source position p
// (0-based).
std::vector<long> conjugator_permutation(const BlockPattern& src, const BlockPattern& dst);

long long inversion_count(const std::vector<long>& perm);

// Exhaustive minimum of the inversion count over every block matching that
// respects labels and sizes; exponential, intended for small patterns only.
long long min_inversions_brute_force(const BlockPattern& src, const BlockPattern& dst);

}  // namespace mtheta::weyl
