#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mtheta::scalars {

using Int = mpz_class;
using Rat = mpq_class;  // always kept canonical: positive denominator, gcd 1

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rat& q);

// p-adic valuation of a nonzero rational.
long val_p(const Rat& x, long p);

bool is_odd_prime(long p);

// ---------------------------------------------------------------------------
// Prime field F_p, p an odd prime. Residues are stored reduced to [0, p).
// Mixing elements of different moduli is an error, not a coercion.
// ---------------------------------------------------------------------------
class Fp {
public:
    Fp(long residue, long p);

    long residue() const { return r_; }
    long modulus() const { return p_; }

    Fp operator+(const Fp& o) const { return Fp(norm(r_ + o.check(p_).r_), p_); }
    Fp operator-(const Fp& o) const { return Fp(norm(r_ - o.check(p_).r_), p_); }
    Fp operator-() const { return Fp(norm(-r_), p_); }
    Fp operator*(const Fp& o) const;
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }
    Fp inverse() const;
    Fp pow(long e) const;

    bool operator==(const Fp& o) const { return p_ == o.p_ && r_ == o.r_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }
    bool is_zero() const { return r_ == 0; }

private:
    const Fp& check(long p) const {
        if (p != p_) throw std::invalid_argument("prime field modulus mismatch");
        return *this;
    }
    long norm(long v) const {
        v %= p_;
        return v < 0 ? v + p_ : v;
    }
    long r_;
    long p_;
};

// Reduction mod p of x * p^{-val_p(x)}; x must be nonzero.
Fp unit_part(const Rat& x, long p);

// ---------------------------------------------------------------------------
// mu_r: r-th roots of unity as residues in Z/rZ under addition of exponents.
// ---------------------------------------------------------------------------
class MuR {
public:
    MuR(long exponent, long order);

    long exponent() const { return e_; }
    long order() const { return r_; }

    MuR inverse() const { return MuR(r_ - e_, r_); }
    MuR pow(long k) const;
    bool is_identity() const { return e_ == 0; }

    bool operator==(const MuR& o) const { return r_ == o.r_ && e_ == o.e_; }
    bool operator!=(const MuR& o) const { return !(*this == o); }

private:
    long e_;
    long r_;
};

MuR mu_r_mul(const MuR& a, const MuR& b);

// ---------------------------------------------------------------------------
// Nonzero element of Q_p, stored as p^v * u with u a p-unit rational.
// ---------------------------------------------------------------------------
class PAdic {
public:
    PAdic(long valuation, Rat unit, long p);

    static PAdic from_rational(const Rat& x, long p);
    static PAdic one(long p) { return PAdic(0, Rat(1), p); }

    long valuation() const { return v_; }
    const Rat& unit() const { return u_; }
    long prime() const { return p_; }

    PAdic operator*(const PAdic& o) const;
    PAdic inverse() const;
    PAdic pow(long e) const;
    Fp residue_unit() const { return unit_part(u_, p_); }
    Rat to_rational() const;

    bool operator==(const PAdic& o) const {
        return p_ == o.p_ && v_ == o.v_ && u_ == o.u_;
    }

private:
    long v_;
    Rat u_;
    long p_;
};

// Smallest primitive root mod p; fixes the identification of mu_r with Z/rZ.
long smallest_primitive_root(long p);

long pow_mod(long base, long exp, long p);

}  // namespace mtheta::scalars
