#pragma once

#include <utility>
#include <vector>

#include "mtheta/groups.hpp"

namespace mtheta::orbits {

using scalars::Rat;

using Partition = std::vector<long>;  // weakly decreasing positive parts

// Partition of 2n whose odd parts have even multiplicity.
bool is_symplectic_partition(const Partition& parts, long two_n);

enum class OrbitComparison { Less, Greater, Equal, Incomparable };

// Partial-sum dominance verdict; both partitions must have the same total.
OrbitComparison dominance(const Partition& lhs, const Partition& rhs);

// The orbit (r^alpha beta) / (r^{alpha-1} (r-1) (beta+1)) attached to
// Sp_{2l} and odd r, per the parity of alpha in 2l = alpha r + beta.
Partition o_c(long r, long two_l);

Partition transpose_partition(const Partition& parts);

// Dimension of the nilpotent orbit of sp_{2n} attached to a symplectic
// partition: 2n^2 + n - (1/2) sum (lambda^t_i)^2 - (1/2) #{odd parts}.
long long orbit_dim(const Partition& parts, long two_n);

// Independent oracle: builds a standard nilpotent of sp_{2n} with the given
// Jordan type and computes dim sp_{2n} minus the exact nullity of ad_X on
// sp_{2n} over Q.
long long centralizer_dim_oracle(const Partition& parts, long two_n);

Rat gk_dim(const Partition& parts, long two_n);

// Both sides of the dimension bookkeeping identity at (r, k, n), as exact
// rationals: {dim Sp_{2n} + dim U_{k,r1,n} + dim sigma,
//             dim pi + dim Theta^(2) + dim Theta^(r)} with the generic
// conventions dim pi = n^2, dim Theta^(2) = nk, dim sigma = maximal-unipotent
// dimension of SO_k, dim Theta^(r) = gk_dim(o_c(r, 2n + k(r-1))).
std::pair<Rat, Rat> dimension_equation(long r, long k, long n);

enum class DualFamily { SO, Sp };

struct DualGroupDescriptor {
    DualFamily family;  // over C
    long size;          // matrix size of the dual group
    bool operator==(const DualGroupDescriptor& o) const {
        return family == o.family && size == o.size;
    }
};

enum class CoveredFamily { Sp, SOodd, SOeven };

// L-group of the r-fold cover, per the parity table.
DualGroupDescriptor dual_group(CoveredFamily family, long size, long r);

// Composite orbit data (m^2 1^t) o (tail): a head of two equal parts padded
// by ones, composed with a partition of the padding. Stored as the pair; the
// combinatorial content is the combined partition.
struct CompositePartition {
    long head_part;  // m, repeated twice in the head
    long two_n;      // total of the head (and of the combined partition)
    Partition tail;  // partition of two_n - 2m with parts at most m

    CompositePartition(long m, long total, Partition tail_parts);

    // sorted concatenation (m, m, tail...), a symplectic partition of 2n
    Partition combined() const;
};

// Splits a symplectic partition whose two leading parts agree into its
// composite form; throws if the leading parts differ.
CompositePartition split_leading_pair(const Partition& parts, long two_n);

// All symplectic partitions of 2n, in lexicographically decreasing order.
std::vector<Partition> symplectic_partitions(long two_n);

// The standard nilpotent used by the oracle (exposed for tests).
groups::Matrix<Rat> standard_sp_nilpotent(const Partition& parts, long two_n);

}  // namespace mtheta::orbits
