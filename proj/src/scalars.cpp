#include "mtheta/scalars.hpp"

#include <utility>
#include <vector>

namespace mtheta::scalars {

std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

long val_p(const Rat& x, long p) {
    if (!is_odd_prime(p) && p != 2) throw std::invalid_argument("valuation prime must be prime");
    if (x == 0) throw std::domain_error("valuation of zero");
    mpz_class pz(p), tmp;
    long vnum = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.get_num().get_mpz_t(), pz.get_mpz_t()));
    long vden = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.get_den().get_mpz_t(), pz.get_mpz_t()));
    return vnum - vden;
}

bool is_odd_prime(long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

Fp::Fp(long residue, long p) : r_(residue), p_(p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("prime field modulus must be an odd prime");
    r_ %= p_;
    if (r_ < 0) r_ += p_;
}

Fp Fp::operator*(const Fp& o) const {
    check(o.p_);
    auto prod = static_cast<unsigned __int128>(r_) * static_cast<unsigned __int128>(o.r_);
    return Fp(static_cast<long>(prod % static_cast<unsigned __int128>(p_)), p_);
}

Fp Fp::inverse() const {
    if (r_ == 0) throw std::domain_error("inverse of zero in prime field");
    // extended Euclid
    long a = r_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
        long q = a / b;
        long t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    return Fp(x0, p_);
}

Fp Fp::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Fp acc(1, p_), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Fp unit_part(const Rat& x, long p) {
    if (x == 0) throw std::domain_error("unit part of zero");
    long v = val_p(x, p);
    mpz_class pz(p), num = x.get_num(), den = x.get_den(), tmp;
    mpz_remove(num.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
    mpz_remove(den.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
    (void)v;
    mpz_class nr = num % pz, dr = den % pz;
    long n = nr.get_si(), d = dr.get_si();
    return Fp(n, p) * Fp(d, p).inverse();
}

MuR::MuR(long exponent, long order) : e_(exponent), r_(order) {
    if (r_ < 1) throw std::invalid_argument("mu_r order must be positive");
    e_ %= r_;
    if (e_ < 0) e_ += r_;
}

MuR MuR::pow(long k) const {
    long e = (e_ % r_) * (k % r_) % r_;
    return MuR(e, r_);
}

MuR mu_r_mul(const MuR& a, const MuR& b) {
    if (a.order() != b.order()) throw std::invalid_argument("mu_r order mismatch");
    return MuR(a.exponent() + b.exponent(), a.order());
}

PAdic::PAdic(long valuation, Rat unit, long p) : v_(valuation), u_(std::move(unit)), p_(p) {
    if (!is_odd_prime(p_)) throw std::invalid_argument("p-adic scalar requires an odd prime");
    if (u_ == 0) throw std::domain_error("p-adic unit must be nonzero");
    if (val_p(u_, p_) != 0) throw std::invalid_argument("p-adic unit part must have valuation zero");
}

PAdic PAdic::from_rational(const Rat& x, long p) {
    if (x == 0) throw std::domain_error("p-adic scalar of zero");
    long v = val_p(x, p);
    Rat pv(1);
    Rat pq(p);
    for (long i = 0; i < (v >= 0 ? v : -v); ++i) pv *= pq;
    Rat u = (v >= 0) ? Rat(x / pv) : Rat(x * pv);
    u.canonicalize();
    return PAdic(v, u, p);
}

PAdic PAdic::operator*(const PAdic& o) const {
    if (p_ != o.p_) throw std::invalid_argument("p-adic prime mismatch");
    Rat u = u_ * o.u_;
    u.canonicalize();
    return PAdic(v_ + o.v_, u, p_);
}

PAdic PAdic::inverse() const {
    Rat u = 1 / u_;
    u.canonicalize();
    return PAdic(-v_, u, p_);
}

PAdic PAdic::pow(long e) const {
    if (e == 0) return one(p_);
    if (e < 0) return inverse().pow(-e);
    PAdic acc = one(p_), base = *this;
    long k = e;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Rat PAdic::to_rational() const {
    Rat pv(1), pq(p_);
    for (long i = 0; i < (v_ >= 0 ? v_ : -v_); ++i) pv *= pq;
    Rat out = (v_ >= 0) ? Rat(u_ * pv) : Rat(u_ / pv);
    out.canonicalize();
    return out;
}

long pow_mod(long base, long exp, long p) {
    base %= p;
    if (base < 0) base += p;
    unsigned __int128 acc = 1, b = static_cast<unsigned __int128>(base);
    while (exp > 0) {
        if (exp & 1) acc = acc * b % static_cast<unsigned __int128>(p);
        b = b * b % static_cast<unsigned __int128>(p);
        exp >>= 1;
    }
    return static_cast<long>(acc);
}

long smallest_primitive_root(long p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("primitive root requires an odd prime");
    long phi = p - 1;
    std::vector<long> prime_factors;
    long m = phi;
    for (long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) prime_factors.push_back(m);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : prime_factors) {
            if (pow_mod(g, phi / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

}  // namespace mtheta::scalars
