#pragma once

#include <vector>

#include "mtheta/groups.hpp"

namespace mtheta::unipotent {

using groups::is_zero;
using groups::one_like;
using groups::zero_like;

using groups::GroupElement;
using groups::GroupTag;
using groups::Matrix;

// Shape parameters of U_{a,b,c}, the unipotent radical of the parabolic of
// Sp_{2(ab+c)} with Levi GL_a x ... x GL_a x Sp_{2c} (b copies of GL_a).
struct UabcShape {
    long a;
    long b;
    long c;

    UabcShape(long a_, long b_, long c_) : a(a_), b(b_), c(c_) {
        if (a < 1 || b < 1 || c < 0) throw std::invalid_argument("invalid U_{a,b,c} shape");
    }

    long ambient() const { return 2 * (a * b + c); }
    long half() const { return a * b + c; }

    // Levi block index of 1-based coordinate p: blocks 1..b of size a, then
    // the middle block (when c > 0), then the mirrored GL_a blocks.
    long levi_block(long p) const {
        long ab = a * b;
        if (p <= ab) return (p - 1) / a + 1;
        if (p <= ab + 2 * c) return b + 1;
        long mid = c > 0 ? 1 : 0;
        return b + mid + (p - ab - 2 * c - 1) / a + 1;
    }
};

// tZ J_a = J_a Z, i.e. Z symmetric about the anti-diagonal.
template <class K>
bool is_mat0(const Matrix<K>& z) {
    if (!z.is_square()) return false;
    long a = z.rows();
    for (long p = 0; p < a; ++p)
        for (long q = 0; q < a; ++q)
            if (z.at(a - 1 - q, p) != z.at(a - 1 - p, q)) return false;
    return true;
}

// The i-th coordinate subgroup element u^i(X): X in the i-th superdiagonal
// a x a block, mirrored block forced by the form.
template <class K>
GroupElement<K> u_coordinate(const UabcShape& s, long i, const Matrix<K>& x) {
    if (i < 1 || i > s.b - 1) throw std::invalid_argument("coordinate index out of range");
    if (x.rows() != s.a || x.cols() != s.a) throw std::invalid_argument("coordinate block must be a x a");
    long n = s.ambient();
    K one = one_like(x.sample());
    Matrix<K> m = Matrix<K>::identity(n, one);
    long r0 = s.a * (i - 1);
    long c0 = s.a * i;
    m.set_block(r0, c0, x);
    // X* = -J_a tX J_a in the mirrored slot
    Matrix<K> j = groups::anti_identity(s.a, one);
    m.set_block(n - c0 - s.a, n - r0 - s.a, -(j * x.transpose() * j));
    return GroupElement<K>(std::move(m), GroupTag::Sp);
}

// u'(Y, Z): Y in Mat_{a x 2c}, Z in Mat_a^0. The displayed corner block is
// Z + (1/2) Y S_c tY J_a, the unique completion for which the matrix is
// symplectic and Z = 0 gives the centre; Y* = S_c tY J_a.
template <class K>
GroupElement<K> u_prime(const UabcShape& s, const Matrix<K>& y, const Matrix<K>& z) {
    if (y.rows() != s.a || y.cols() != 2 * s.c) throw std::invalid_argument("Y must be a x 2c");
    if (z.rows() != s.a || z.cols() != s.a) throw std::invalid_argument("Z must be a x a");
    if (!is_mat0(z)) throw std::invalid_argument("Z must satisfy tZ J = J Z");
    K one = one_like(z.sample());
    K half = one / (one + one);
    long n = s.ambient();
    long r0 = s.a * (s.b - 1);
    Matrix<K> m = Matrix<K>::identity(n, one);
    Matrix<K> sc = groups::symplectic_form(2 * s.c, one);
    Matrix<K> j = groups::anti_identity(s.a, one);
    Matrix<K> ystar = sc * y.transpose() * j;
    Matrix<K> corner = z + (y * sc * y.transpose() * j).scaled(half);
    m.set_block(r0, r0 + s.a, y);
    m.set_block(r0, r0 + s.a + 2 * s.c, corner);
    m.set_block(r0 + s.a, r0 + s.a + 2 * s.c, ystar);
    return GroupElement<K>(std::move(m), GroupTag::Sp);
}

template <class K>
struct UabcFactorization {
    Matrix<K> y;                  // a x 2c
    Matrix<K> z;                  // a x a, in Mat_a^0
    std::vector<Matrix<K>> xs;    // b-1 coordinate blocks, each a x a
    GroupElement<K> u1;           // residual factor

    GroupElement<K> reassemble(const UabcShape& s) const {
        GroupElement<K> acc = u_prime(s, y, z);
        for (long i = 0; i < static_cast<long>(xs.size()); ++i)
            acc = acc * u_coordinate(s, i + 1, xs[static_cast<size_t>(i)]);
        return acc * u1;
    }
};

template <class K>
bool in_unipotent_radical(const Matrix<K>& m, const UabcShape& s) {
    long n = s.ambient();
    if (!m.is_square() || m.rows() != n) return false;
    K one = one_like(m.sample());
    for (long p = 0; p < n; ++p)
        for (long q = 0; q < n; ++q) {
            bool diag = p == q;
            if (diag && m.at(p, q) != one) return false;
            if (!diag && s.levi_block(p + 1) >= s.levi_block(q + 1) && !is_zero(m.at(p, q)))
                return false;
        }
    return groups::is_symplectic(m, n);
}

// Unique factorization u = u'(Y,Z) u^1(X_1) ... u^{b-1}(X_{b-1}) u_1. The
// coordinates are read off block by block and stripped by inverse
// multiplication; the readoff positions are disjoint so no order ambiguity
// arises.
template <class K>
UabcFactorization<K> factorize(const GroupElement<K>& u, const UabcShape& s) {
    const Matrix<K>& m = u.matrix();
    if (!in_unipotent_radical(m, s))
        throw std::invalid_argument("element is not upper-unipotent of the U_{a,b,c} pattern");
    K one = one_like(m.sample());
    K half = one / (one + one);
    long r0 = s.a * (s.b - 1);

    Matrix<K> y = m.block(r0, r0 + s.a, s.a, 2 * s.c);
    Matrix<K> corner = m.block(r0, r0 + s.a + 2 * s.c, s.a, s.a);
    Matrix<K> sc = groups::symplectic_form(2 * s.c, one);
    Matrix<K> j = groups::anti_identity(s.a, one);
    Matrix<K> z = corner - (y * sc * y.transpose() * j).scaled(half);

    Matrix<K> rest = u_prime(s, y, z).matrix().inverse() * m;
    std::vector<Matrix<K>> xs;
    for (long i = 1; i <= s.b - 1; ++i) {
        Matrix<K> xi = rest.block(s.a * (i - 1), s.a * i, s.a, s.a);
        rest = u_coordinate(s, i, xi).matrix().inverse() * rest;
        xs.push_back(std::move(xi));
    }

    // The residual factor must have empty coordinate and (Y, Z) slots.
    for (long i = 1; i <= s.b - 1; ++i)
        if (!rest.block(s.a * (i - 1), s.a * i, s.a, s.a).is_zero_matrix())
            throw std::logic_error("factorization residue has a coordinate block");
    if (!rest.block(r0, r0 + s.a, s.a, 2 * s.c).is_zero_matrix() ||
        !rest.block(r0, r0 + s.a + 2 * s.c, s.a, s.a).is_zero_matrix())
        throw std::logic_error("factorization residue has (Y, Z) entries");

    return UabcFactorization<K>{std::move(y), std::move(z), std::move(xs),
                                GroupElement<K>(std::move(rest), GroupTag::Sp)};
}

// Argument of the character of U_{a,b,c}: tr(X_1 + ... + X_{b-1}).
template <class K>
K psi_u(const GroupElement<K>& u, const UabcShape& s) {
    auto f = factorize(u, s);
    K acc = zero_like(u.matrix().sample());
    for (const auto& x : f.xs) acc = acc + x.trace();
    return acc;
}

// A character of U_{a,b,c} given by its additive argument: a weighted sum of
// the coordinate-block traces. Characters are equal when their weight data
// agree; the (Y, Z) coordinates and the residual factor are ignored.
template <class K>
class CoordinateCharacter {
public:
    CoordinateCharacter(UabcShape shape, std::vector<K> weights)
        : shape_(shape), weights_(std::move(weights)) {
        if (static_cast<long>(weights_.size()) != shape_.b - 1)
            throw std::invalid_argument("one weight per coordinate block expected");
    }

    // the standard character: every coordinate block weighted by 1
    static CoordinateCharacter standard(const UabcShape& shape, const K& one) {
        return CoordinateCharacter(shape, std::vector<K>(shape.b - 1, one));
    }

    const UabcShape& shape() const { return shape_; }

    K evaluate(const GroupElement<K>& u) const {
        auto f = factorize(u, shape_);
        K acc = zero_like(u.matrix().sample());
        for (size_t i = 0; i < weights_.size(); ++i)
            acc = acc + weights_[i] * f.xs[i].trace();
        return acc;
    }

    bool operator==(const CoordinateCharacter& o) const {
        return shape_.a == o.shape_.a && shape_.b == o.shape_.b && shape_.c == o.shape_.c &&
               weights_ == o.weights_;
    }

private:
    UabcShape shape_;
    std::vector<K> weights_;
};

// Trace of the top-left alpha x alpha block of Z in Mat_k^0.
template <class K>
K psi_alpha(const Matrix<K>& z, long alpha) {
    if (!z.is_square() || !is_mat0(z)) throw std::invalid_argument("Z must lie in Mat_k^0");
    if (alpha < 0 || 2 * alpha > z.rows())
        throw std::invalid_argument("alpha must be at most k/2");
    return z.block(0, 0, alpha, alpha).trace();
}

enum class RootKind { Long, Short };

// One-parameter root subgroups of Sp_{2l}: I + t e_{i,2l+1-i} for the long
// roots, I + t e'_{i,j} for the short ones, with the e' sign forced by the
// form. Indices are 1-based.
template <class K>
GroupElement<K> root_subgroup(RootKind kind, long i, long j, const K& t, long two_l) {
    if (two_l % 2 != 0 || two_l <= 0) throw std::invalid_argument("ambient size must be even");
    if (i < 1 || i > two_l || j < 1 || j > two_l || i == j)
        throw std::invalid_argument("root indices out of range");
    K one = one_like(t);
    Matrix<K> m = Matrix<K>::identity(two_l, one);
    if (kind == RootKind::Long) {
        if (j != two_l + 1 - i) throw std::invalid_argument("long root requires j = 2l+1-i");
        m.at(i - 1, j - 1) = t;
    } else {
        if (i + j == two_l + 1) throw std::invalid_argument("short root requires i + j != 2l+1");
        int sgn = -groups::half_sign(i, two_l) * groups::half_sign(j, two_l);
        m.at(i - 1, j - 1) = t;
        m.at(two_l - j, two_l - i) = sgn > 0 ? t : -t;
    }
    return GroupElement<K>(std::move(m), GroupTag::Sp);
}

struct RootPosition {
    long i;  // 1-based row
    long j;  // 1-based column
    RootKind kind;
};

// Canonical list of the positive root positions of Sp_{2l} (one entry per
// mirrored pair of short-root slots).
std::vector<RootPosition> positive_root_positions(long two_l);

// The subset supported inside U_{a,b,c}.
std::vector<RootPosition> u_root_positions(const UabcShape& s);

}  // namespace mtheta::unipotent
