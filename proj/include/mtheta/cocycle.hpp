#pragma once

#include <vector>

#include "mtheta/scalars.hpp"

namespace mtheta::cocycle {

using scalars::Fp;
using scalars::MuR;
using scalars::PAdic;
using scalars::Rat;

// Tame r-th power Hilbert symbol (a, b)_r over Q_p, for p coprime to r and
// r dividing p - 1. The unit (-1)^{v(a)v(b)} a^{v(b)} b^{-v(a)} is reduced
// mod p and raised to (p-1)/r; the resulting r-th root of unity is written
// as a power of g^{(p-1)/r} with g the smallest primitive root mod p.
MuR hilbert_tame(const PAdic& a, const PAdic& b, long p, long r);

// Value of the tame symbol inside F_p^x (the same data as an element of mu_r,
// before taking the discrete log).
Fp hilbert_tame_value(const PAdic& a, const PAdic& b, long p, long r);

// Quadratic Hilbert symbol over Q_p, p odd, as an element of mu_2.
MuR hilbert_quadratic(const PAdic& a, const PAdic& b, long p);

enum class TorusAmbient { GL, Sp };

// Diagonal torus element; for the Sp tag the entries come in mirrored
// (t, t^{-1}) pairs under the anti-diagonal form.
struct TorusElement {
    std::vector<PAdic> diagonal;
    TorusAmbient ambient;

    TorusElement(std::vector<PAdic> diag, TorusAmbient amb);
    long size() const { return static_cast<long>(diagonal.size()); }
};

// diag(a, a^{-1}, ..., a, a^{-1}) as a torus element of Sp_{2l}.
TorusElement t_torus(const PAdic& a, long two_l);

// Torus element of SO_k from the first [k/2] entries (middle entry 1 when k
// is odd, mirrored inverses at the end).
std::vector<PAdic> so_torus_diagonal(const std::vector<PAdic>& firsts, long k);

// Torus element of Sp_{2n} from the first n entries.
std::vector<PAdic> sp_torus_diagonal(const std::vector<PAdic>& firsts);

// Diagonal 2-cocycle sigma(s, t) = prod_{i<j} (s_i, t_j)_r^{-1}.
MuR torus_cocycle(const TorusElement& s, const TorusElement& t, long r, long p);

// Checks the block identity
//   sigma_{2n+k(r-1)}(iota2(h1,g1), iota2(h2,g2)) = sigma_k(h1,h2)^{r-1} sigma_{2n}(g1,g2)
// on torus elements; cross-block terms collapse through the determinant-one
// precondition on each block.
bool block_compat_check(const std::vector<PAdic>& h1, const std::vector<PAdic>& h2,
                        const std::vector<PAdic>& g1, const std::vector<PAdic>& g2,
                        long r, long p);

}  // namespace mtheta::cocycle
