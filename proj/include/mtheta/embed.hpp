#pragma once

#include <utility>
#include <vector>

#include "mtheta/unipotent.hpp"

namespace mtheta::embed {

using groups::is_zero;
using groups::one_like;
using groups::zero_like;

using groups::GroupElement;
using groups::GroupTag;
using groups::HeisenbergElement;
using groups::Matrix;
using scalars::MuR;
using unipotent::UabcShape;

// Coordinate bookkeeping for the tensor product embedding: position p
// (1-based) of the symplectic basis of F^k (x) F^{2n} corresponds to the pure
// tensor e_i (x) f_j returned here. The first nk positions run through
// j <= n with i outermost; the mirrored half is arranged so that the product
// form is exactly the anti-diagonal form of Sp_{2nk}.
struct TensorIndex {
    long i;  // 1-based index in F^k
    long j;  // 1-based index in F^{2n}
};

inline TensorIndex tensor_index(long p, long k, long n) {
    long nk = n * k;
    if (p < 1 || p > 2 * nk) throw std::invalid_argument("tensor position out of range");
    if (p <= nk) return {(p - 1) / n + 1, (p - 1) % n + 1};
    long q = 2 * nk + 1 - p;
    return {k - (q - 1) / n, 2 * n - (q - 1) % n};
}

// iota_1: the tensor product embedding SO_k x Sp_{2n} -> Sp_{2nk}. The image
// of (1, g) is g acting diagonally on the k tensor slots and the image of
// (h, 1) scatters h entrywise; both are expressed in the fixed symplectic
// basis above.
template <class K>
GroupElement<K> iota1(const GroupElement<K>& h, const GroupElement<K>& g) {
    if (h.tag() != GroupTag::SO || g.tag() != GroupTag::Sp)
        throw std::invalid_argument("iota1 expects an SO element and an Sp element");
    long k = h.size();
    long two_n = g.size();
    long n = two_n / 2;
    long big = 2 * n * k;
    K one = one_like(g.matrix().sample());
    Matrix<K> m = Matrix<K>::zero(big, big, one);
    std::vector<TensorIndex> idx(static_cast<size_t>(big) + 1);
    for (long p = 1; p <= big; ++p) idx[static_cast<size_t>(p)] = tensor_index(p, k, n);
    for (long p = 1; p <= big; ++p)
        for (long q = 1; q <= big; ++q) {
            const auto& a = idx[static_cast<size_t>(p)];
            const auto& b = idx[static_cast<size_t>(q)];
            const K& hv = h.matrix().at(a.i - 1, b.i - 1);
            if (is_zero(hv)) continue;
            const K& gv = g.matrix().at(a.j - 1, b.j - 1);
            if (is_zero(gv)) continue;
            m.at(p - 1, q - 1) = hv * gv;
        }
    return GroupElement<K>(std::move(m), GroupTag::Sp);
}

// iota_2: diag(h, ..., h, g, h*, ..., h*) with h and h* each (r-1)/2 times;
// h* is forced by the form (and equals h for h in SO_k).
template <class K>
GroupElement<K> iota2(const GroupElement<K>& h, const GroupElement<K>& g, long r) {
    if (h.tag() != GroupTag::SO || g.tag() != GroupTag::Sp)
        throw std::invalid_argument("iota2 expects an SO element and an Sp element");
    if (r < 1 || r % 2 == 0) throw std::invalid_argument("iota2 requires odd r");
    long r1 = (r - 1) / 2;
    long k = h.size();
    long two_n = g.size();
    long big = two_n + k * (r - 1);
    Matrix<K> m = Matrix<K>::identity(big, one_like(g.matrix().sample()));
    Matrix<K> hstar = groups::star_block(h.matrix());
    for (long t = 0; t < r1; ++t) m.set_block(t * k, t * k, h.matrix());
    m.set_block(r1 * k, r1 * k, g.matrix());
    for (long t = 0; t < r1; ++t) {
        long off = r1 * k + two_n + t * k;
        m.set_block(off, off, hstar);
    }
    return GroupElement<K>(std::move(m), GroupTag::Sp);
}

// Element of an r-fold cover: a base point and a root of unity.
template <class K>
struct CoverElement {
    GroupElement<K> base;
    MuR epsilon;
};

template <class K>
CoverElement<K> iota2_cover(const CoverElement<K>& hc, const CoverElement<K>& gc, long r) {
    if (hc.epsilon.order() != r || gc.epsilon.order() != r)
        throw std::invalid_argument("cover degree mismatch");
    return CoverElement<K>{iota2(hc.base, gc.base, r),
                           scalars::mu_r_mul(hc.epsilon, gc.epsilon)};
}

// Diagonal weights (1, ..., 1, 2, 1, ..., 1) entering the Heisenberg
// projection: the middle coordinate is doubled when a is odd.
inline long heisenberg_trace_weight(long row, long a) {
    return (a % 2 == 1 && 2 * row + 1 == a) ? 2 : 1;
}

// Projection of U_{a,b,c} onto H_{2ac+1}: trivial on the coordinate blocks
// and the residual factor, and on u'(Y, Z) given by reading the rows of Y
// bottom-up (row first-halves fill X, weighted row second-halves fill Y) with
// z = (1/2) tr of the weighted Z. The weights make the map a homomorphism
// for both parities of a.
template <class K>
HeisenbergElement<K> l_map(const GroupElement<K>& u, const UabcShape& s) {
    auto f = unipotent::factorize(u, s);
    long a = s.a, c = s.c;
    K one = one_like(u.matrix().sample());
    K half = one / (one + one);
    HeisenbergElement<K> out = groups::heisenberg_identity(a * c, one);
    for (long beta = 1; beta <= a; ++beta) {
        long row = a - beta;  // rows bottom-up
        K w = heisenberg_trace_weight(row, a) == 2 ? one + one : one;
        for (long t = 0; t < c; ++t) {
            out.x[static_cast<size_t>((beta - 1) * c + t)] = f.y.at(row, t);
            out.y[static_cast<size_t>((beta - 1) * c + t)] = w * f.y.at(row, c + t);
        }
    }
    K z = zero_like(one);
    for (long i = 0; i < a; ++i) {
        K w = heisenberg_trace_weight(i, a) == 2 ? one + one : one;
        z = z + w * f.z.at(i, i);
    }
    out.z = half * z;
    return out;
}

// True iff conjugation by iota2(h, g) fixes the character of U_{k,r1,n} on a
// spanning set of coordinate generators.
template <class K>
bool stabilizes_psi(const GroupElement<K>& h, const GroupElement<K>& g, long r) {
    if (r < 3 || r % 2 == 0) throw std::invalid_argument("stabilizes_psi requires odd r >= 3");
    long k = h.size();
    long n = g.size() / 2;
    UabcShape s(k, (r - 1) / 2, n);
    GroupElement<K> m = iota2(h, g, r);
    GroupElement<K> minv = m.inverse();
    K one = one_like(g.matrix().sample());
    for (const auto& pos : unipotent::u_root_positions(s)) {
        GroupElement<K> gen = unipotent::root_subgroup(pos.kind, pos.i, pos.j, one, s.ambient());
        GroupElement<K> conj = m * gen * minv;
        K before = unipotent::psi_u(gen, s);
        K after = [&] {
            try {
                return unipotent::psi_u(conj, s);
            } catch (const std::invalid_argument&) {
                throw std::invalid_argument("conjugate left the unipotent group");
            }
        }();
        if (before != after) return false;
    }
    return true;
}

}  // namespace mtheta::embed
