#include "mtheta/cocycle.hpp"

#include <stdexcept>

namespace mtheta::cocycle {

using scalars::mu_r_mul;
using scalars::pow_mod;
using scalars::smallest_primitive_root;

namespace {

void require_tame(long p, long r) {
    if (!scalars::is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (r < 2) throw std::invalid_argument("symbol degree must be at least 2");
    if (r % p == 0) throw std::invalid_argument("tame symbol requires p coprime to r");
    if ((p - 1) % r != 0) throw std::invalid_argument("no r-th roots in residue field");
}

}  // namespace

Fp hilbert_tame_value(const PAdic& a, const PAdic& b, long p, long r) {
    require_tame(p, r);
    if (a.prime() != p || b.prime() != p) throw std::invalid_argument("p-adic prime mismatch");
    long va = a.valuation(), vb = b.valuation();
    Fp ua = a.residue_unit(), ub = b.residue_unit();
    long sign_exp = (va % 2 != 0 && vb % 2 != 0) ? 1 : 0;
    Fp unit = Fp(sign_exp ? -1 : 1, p) * ua.pow(vb) * ub.pow(-va);
    return unit.pow((p - 1) / r);
}

MuR hilbert_tame(const PAdic& a, const PAdic& b, long p, long r) {
    Fp w = hilbert_tame_value(a, b, p, r);
    long g = smallest_primitive_root(p);
    long zeta = pow_mod(g, (p - 1) / r, p);
    long acc = 1;
    for (long t = 0; t < r; ++t) {
        if (acc == w.residue()) return MuR(t, r);
        acc = static_cast<long>(static_cast<unsigned __int128>(acc) * zeta % p);
    }
    throw std::logic_error("tame symbol value is not an r-th root of unity");
}

MuR hilbert_quadratic(const PAdic& a, const PAdic& b, long p) {
    if (!scalars::is_odd_prime(p)) throw std::invalid_argument("p = 2 is unsupported");
    if (a.prime() != p || b.prime() != p) throw std::invalid_argument("p-adic prime mismatch");
    auto legendre_exp = [p](const Fp& u) {
        return u.pow((p - 1) / 2).residue() == 1 ? 0L : 1L;
    };
    long va = a.valuation(), vb = b.valuation();
    long e = va * vb * ((p - 1) / 2) + va * legendre_exp(b.residue_unit()) +
             vb * legendre_exp(a.residue_unit());
    return MuR(e, 2);
}

TorusElement::TorusElement(std::vector<PAdic> diag, TorusAmbient amb)
    : diagonal(std::move(diag)), ambient(amb) {
    if (diagonal.empty()) throw std::invalid_argument("empty torus element");
    if (ambient == TorusAmbient::Sp) {
        long n = size();
        if (n % 2 != 0) throw std::invalid_argument("Sp torus needs even size");
        for (long i = 0; i < n / 2; ++i)
            if (!(diagonal[static_cast<size_t>(n - 1 - i)] ==
                  diagonal[static_cast<size_t>(i)].inverse()))
                throw std::invalid_argument("Sp torus entries must come in (t, t^{-1}) mirrored pairs");
    }
}

TorusElement t_torus(const PAdic& a, long two_l) {
    if (two_l <= 0 || two_l % 2 != 0) throw std::invalid_argument("t(a) needs positive even size");
    std::vector<PAdic> diag;
    diag.reserve(static_cast<size_t>(two_l));
    for (long i = 0; i < two_l / 2; ++i) {
        diag.push_back(a);
        diag.push_back(a.inverse());
    }
    return TorusElement(std::move(diag), TorusAmbient::Sp);
}

std::vector<PAdic> so_torus_diagonal(const std::vector<PAdic>& firsts, long k) {
    long k1 = k / 2;
    if (static_cast<long>(firsts.size()) != k1)
        throw std::invalid_argument("SO torus needs [k/2] leading entries");
    std::vector<PAdic> diag = firsts;
    if (k % 2 == 1) diag.push_back(PAdic::one(firsts.front().prime()));
    for (long i = k1 - 1; i >= 0; --i) diag.push_back(firsts[static_cast<size_t>(i)].inverse());
    return diag;
}

std::vector<PAdic> sp_torus_diagonal(const std::vector<PAdic>& firsts) {
    std::vector<PAdic> diag = firsts;
    for (long i = static_cast<long>(firsts.size()) - 1; i >= 0; --i)
        diag.push_back(firsts[static_cast<size_t>(i)].inverse());
    return diag;
}

MuR torus_cocycle(const TorusElement& s, const TorusElement& t, long r, long p) {
    if (s.size() != t.size()) throw std::invalid_argument("torus size mismatch");
    if (s.ambient != t.ambient) throw std::invalid_argument("torus ambient mismatch");
    MuR acc(0, r);
    for (long i = 0; i < s.size(); ++i)
        for (long j = i + 1; j < t.size(); ++j)
            acc = mu_r_mul(acc, hilbert_tame(s.diagonal[static_cast<size_t>(i)],
                                             t.diagonal[static_cast<size_t>(j)], p, r)
                                    .inverse());
    return acc;
}

namespace {

MuR plain_cocycle(const std::vector<PAdic>& s, const std::vector<PAdic>& t, long r, long p) {
    MuR acc(0, r);
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j)
            acc = mu_r_mul(acc, hilbert_tame(s[i], t[j], p, r).inverse());
    return acc;
}

void require_det_one(const std::vector<PAdic>& diag, const char* what) {
    long v = 0;
    Rat u(1);
    for (const auto& d : diag) {
        v += d.valuation();
        u *= d.unit();
    }
    u.canonicalize();
    if (v != 0 || u != 1) throw std::invalid_argument(std::string(what) + " block determinant must be 1");
}

}  // namespace

bool block_compat_check(const std::vector<PAdic>& h1, const std::vector<PAdic>& h2,
                        const std::vector<PAdic>& g1, const std::vector<PAdic>& g2,
                        long r, long p) {
    if (h1.size() != h2.size() || g1.size() != g2.size())
        throw std::invalid_argument("block size mismatch");
    if (g1.size() % 2 != 0) throw std::invalid_argument("Sp block needs even size");
    require_det_one(h1, "SO");
    require_det_one(h2, "SO");
    require_det_one(g1, "Sp");
    require_det_one(g2, "Sp");

    long r1 = (r - 1) / 2;
    auto embed = [&](const std::vector<PAdic>& h, const std::vector<PAdic>& g) {
        std::vector<PAdic> big;
        for (long t = 0; t < r1; ++t) big.insert(big.end(), h.begin(), h.end());
        big.insert(big.end(), g.begin(), g.end());
        // h* = h for SO torus blocks: reversed inverses reproduce the block
        for (long t = 0; t < r1; ++t)
            for (long i = static_cast<long>(h.size()) - 1; i >= 0; --i)
                big.push_back(h[static_cast<size_t>(i)].inverse());
        return big;
    };

    MuR lhs = plain_cocycle(embed(h1, g1), embed(h2, g2), r, p);
    MuR rhs = mu_r_mul(plain_cocycle(h1, h2, r, p).pow(r - 1), plain_cocycle(g1, g2, r, p));
    return lhs == rhs;
}

}  // namespace mtheta::cocycle
