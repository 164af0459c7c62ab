#pragma once

#include "mtheta/embed.hpp"
#include "mtheta/rng.hpp"

namespace mtheta::sampling {

using groups::GroupElement;
using groups::GroupTag;
using groups::HeisenbergElement;
using groups::Matrix;
using scalars::Fp;
using scalars::PAdic;
using scalars::Rat;
using unipotent::UabcShape;

inline Fp random_fp(long p, Rng& rng) { return Fp(static_cast<long>(rng.below(static_cast<std::uint64_t>(p))), p); }

inline Fp random_fp_nonzero(long p, Rng& rng) {
    return Fp(1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(p - 1))), p);
}

inline Matrix<Fp> random_fp_matrix(long rows, long cols, long p, Rng& rng) {
    Matrix<Fp> m = Matrix<Fp>::zero(rows, cols, Fp(0, p));
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) m.at(i, j) = random_fp(p, rng);
    return m;
}

// Random element of Mat_a^0 (persymmetric matrices) over F_p.
inline Matrix<Fp> random_mat0(long a, long p, Rng& rng) {
    Matrix<Fp> z = Matrix<Fp>::zero(a, a, Fp(0, p));
    for (long i = 0; i < a; ++i)
        for (long j = 0; j < a; ++j) {
            long mi = a - 1 - j, mj = a - 1 - i;
            if (std::make_pair(mi, mj) < std::make_pair(i, j)) {
                z.at(i, j) = z.at(mi, mj);
            } else {
                z.at(i, j) = random_fp(p, rng);
            }
        }
    return z;
}

// Random symplectic matrix over F_p: a product of root subgroup elements and
// a diagonal torus element.
inline GroupElement<Fp> random_sp(long two_m, long p, Rng& rng, long steps = 0) {
    if (steps == 0) steps = 3 * two_m;
    auto roots = unipotent::positive_root_positions(two_m);
    Matrix<Fp> acc = Matrix<Fp>::identity(two_m, Fp(1, p));
    for (long s = 0; s < steps; ++s) {
        const auto& rp = roots[rng.below(roots.size())];
        Fp t = random_fp(p, rng);
        bool lower = rng.below(2) == 1;
        auto m = unipotent::root_subgroup(rp.kind, rp.i, rp.j, t, two_m).matrix();
        acc = acc * (lower ? m.transpose() : m);
    }
    Matrix<Fp> torus = Matrix<Fp>::zero(two_m, two_m, Fp(0, p));
    for (long i = 0; i < two_m / 2; ++i) {
        Fp t = random_fp_nonzero(p, rng);
        torus.at(i, i) = t;
        torus.at(two_m - 1 - i, two_m - 1 - i) = t.inverse();
    }
    return GroupElement<Fp>(acc * torus, GroupTag::Sp);
}

// One-parameter element of SO_k for the anti-diagonal form: exp of
// t (e_{ij} - e_{k+1-j, k+1-i}); the square term appears only when the pair
// overlaps itself.
inline Matrix<Fp> so_one_param(long i, long j, const Fp& t, long k) {
    if (i == j || i + j == k + 1) throw std::invalid_argument("invalid SO root position");
    long p = t.modulus();
    Matrix<Fp> m = Matrix<Fp>::identity(k, Fp(1, p));
    long i2 = k + 1 - j, j2 = k + 1 - i;
    m.at(i - 1, j - 1) = m.at(i - 1, j - 1) + t;
    m.at(i2 - 1, j2 - 1) = m.at(i2 - 1, j2 - 1) - t;
    Fp half = Fp(1, p) / Fp(2, p);
    if (j == i2) m.at(i - 1, j2 - 1) = m.at(i - 1, j2 - 1) - half * t * t;
    if (i == j2) m.at(i2 - 1, j - 1) = m.at(i2 - 1, j - 1) - half * t * t;
    return m;
}

inline GroupElement<Fp> random_so(long k, long p, Rng& rng, long steps = 0) {
    if (steps == 0) steps = 3 * k;
    std::vector<std::pair<long, long>> positions;
    for (long i = 1; i <= k; ++i)
        for (long j = 1; j <= k; ++j)
            if (i != j && i + j != k + 1) positions.push_back({i, j});
    Matrix<Fp> acc = Matrix<Fp>::identity(k, Fp(1, p));
    if (!positions.empty())
        for (long s = 0; s < steps; ++s) {
            const auto& [i, j] = positions[rng.below(positions.size())];
            acc = acc * so_one_param(i, j, random_fp(p, rng), k);
        }
    Matrix<Fp> torus = Matrix<Fp>::identity(k, Fp(1, p));
    for (long i = 0; i < k / 2; ++i) {
        Fp t = random_fp_nonzero(p, rng);
        torus.at(i, i) = t;
        torus.at(k - 1 - i, k - 1 - i) = t.inverse();
    }
    return GroupElement<Fp>(acc * torus, GroupTag::SO);
}

// Random element of U_{a,b,c}(F_p) as a product over its root subgroups.
inline GroupElement<Fp> random_u(const UabcShape& s, long p, Rng& rng) {
    Matrix<Fp> acc = Matrix<Fp>::identity(s.ambient(), Fp(1, p));
    for (const auto& rp : unipotent::u_root_positions(s)) {
        Fp t = random_fp(p, rng);
        acc = acc * unipotent::root_subgroup(rp.kind, rp.i, rp.j, t, s.ambient()).matrix();
    }
    return GroupElement<Fp>(std::move(acc), GroupTag::Sp);
}

inline HeisenbergElement<Fp> random_heisenberg(long l, long p, Rng& rng) {
    HeisenbergElement<Fp> h = groups::heisenberg_identity(l, Fp(0, p));
    for (long i = 0; i < l; ++i) {
        h.x[static_cast<size_t>(i)] = random_fp(p, rng);
        h.y[static_cast<size_t>(i)] = random_fp(p, rng);
    }
    h.z = random_fp(p, rng);
    return h;
}

// Random nonzero p-adic scalar with small valuation and p-unit part.
inline PAdic random_padic(long p, Rng& rng) {
    long v = rng.range(-3, 3);
    long num = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(p - 1))) +
               p * static_cast<long>(rng.below(3));
    long den = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(p - 1)));
    Rat u(num, den);
    u.canonicalize();
    return PAdic(v, u, p);
}

inline PAdic random_padic_rth_power(long p, long r, Rng& rng) { return random_padic(p, rng).pow(r); }

}  // namespace mtheta::sampling
