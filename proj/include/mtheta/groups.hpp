#pragma once

#include <vector>

#include "mtheta/matrix.hpp"

namespace mtheta::groups {

using scalars::Rat;

// J_m: ones on the anti-diagonal.
template <class K>
Matrix<K> anti_identity(long m, const K& one) {
    Matrix<K> j = Matrix<K>::zero(m, m, one);
    for (long i = 0; i < m; ++i) j.at(i, m - 1 - i) = one;
    return j;
}

// The alternating form [[0, J_m], [-J_m, 0]] defining Sp_{2m}.
template <class K>
Matrix<K> symplectic_form(long two_m, const K& one) {
    if (two_m % 2 != 0) throw std::invalid_argument("symplectic form needs even size");
    long m = two_m / 2;
    Matrix<K> s = Matrix<K>::zero(two_m, two_m, one);
    for (long i = 0; i < m; ++i) {
        s.at(i, two_m - 1 - i) = one;
        s.at(two_m - 1 - i, i) = -one;
    }
    return s;
}

// Sign of coordinate i (1-based) under the alternating form: +1 on the first
// half, -1 on the second.
inline int half_sign(long i, long n) { return 2 * i <= n ? 1 : -1; }

template <class K>
bool is_symplectic(const Matrix<K>& m, long two_m) {
    if (!m.is_square() || m.rows() != two_m)
        throw std::invalid_argument("is_symplectic: wrong matrix size");
    if (two_m % 2 != 0) throw std::invalid_argument("is_symplectic: odd size");
    Matrix<K> s = symplectic_form(two_m, one_like(m.sample()));
    return m.transpose() * s * m == s;
}

template <class K>
bool is_special_orthogonal(const Matrix<K>& m, long k) {
    if (!m.is_square() || m.rows() != k)
        throw std::invalid_argument("is_special_orthogonal: wrong matrix size");
    Matrix<K> j = anti_identity(k, one_like(m.sample()));
    if (m.transpose() * j * m != j) return false;
    return m.determinant() == one_like(m.sample());
}

enum class GroupTag { GL, Sp, SO };

// Exact matrix tagged with its ambient group; membership is checked once at
// construction. Products stay inside the group, so operator* does not
// re-validate; use raw matrices for intermediate work outside the group.
template <class K>
class GroupElement {
public:
    GroupElement(Matrix<K> m, GroupTag tag) : mat_(std::move(m)), tag_(tag) {
        switch (tag_) {
            case GroupTag::GL:
                if (is_zero(mat_.determinant()))
                    throw std::invalid_argument("GL element must be invertible");
                break;
            case GroupTag::Sp:
                if (!is_symplectic(mat_, mat_.rows()))
                    throw std::invalid_argument("matrix is not symplectic");
                break;
            case GroupTag::SO:
                if (!is_special_orthogonal(mat_, mat_.rows()))
                    throw std::invalid_argument("matrix is not special orthogonal");
                break;
        }
    }

    const Matrix<K>& matrix() const { return mat_; }
    GroupTag tag() const { return tag_; }
    long size() const { return mat_.rows(); }

    GroupElement operator*(const GroupElement& o) const {
        if (tag_ != o.tag_ || size() != o.size())
            throw std::invalid_argument("group element product across different groups");
        return GroupElement(mat_ * o.mat_, tag_, unchecked{});
    }

    GroupElement inverse() const { return GroupElement(mat_.inverse(), tag_, unchecked{}); }

    bool operator==(const GroupElement& o) const { return tag_ == o.tag_ && mat_ == o.mat_; }

private:
    struct unchecked {};
    GroupElement(Matrix<K> m, GroupTag tag, unchecked) : mat_(std::move(m)), tag_(tag) {}

    Matrix<K> mat_;
    GroupTag tag_;
};

template <class K>
GroupElement<K> commutator(const GroupElement<K>& u, const GroupElement<K>& v) {
    if (u.size() != v.size() || u.tag() != v.tag())
        throw std::invalid_argument("commutator across different groups");
    return u * v * u.inverse() * v.inverse();
}

// Dual of a GL_d block under the anti-diagonal pairing: the block that must
// mirror g for diag(..., g, ..., g*, ...) to stay symplectic.
template <class K>
Matrix<K> star_block(const Matrix<K>& g) {
    if (!g.is_square()) throw std::invalid_argument("star of non-square block");
    Matrix<K> j = anti_identity(g.rows(), one_like(g.sample()));
    return j * g.transpose().inverse() * j;
}

// t(a) = diag(a, a^{-1}, ..., a, a^{-1}) in Sp_{2l}.
template <class K>
GroupElement<K> t_element(const K& a, long two_l) {
    if (two_l % 2 != 0 || two_l <= 0) throw std::invalid_argument("t(a) needs positive even size");
    if (is_zero(a)) throw std::invalid_argument("t(0) is not invertible");
    K ainv = one_like(a) / a;
    Matrix<K> m = Matrix<K>::zero(two_l, two_l, a);
    for (long i = 0; i < two_l; i += 2) {
        m.at(i, i) = a;
        m.at(i + 1, i + 1) = ainv;
    }
    return GroupElement<K>(std::move(m), GroupTag::Sp);
}

// ---------------------------------------------------------------------------
// Heisenberg group H_{2l+1}: triples (X, Y, z) with X, Y row vectors of
// length l and multiplication twisted by half the symplectic pairing.
// ---------------------------------------------------------------------------
template <class K>
struct HeisenbergElement {
    std::vector<K> x;
    std::vector<K> y;
    K z;

    long l() const { return static_cast<long>(x.size()); }

    bool operator==(const HeisenbergElement& o) const {
        return x == o.x && y == o.y && z == o.z;
    }
};

template <class K>
HeisenbergElement<K> heisenberg_identity(long l, const K& domain_sample) {
    K zero = zero_like(domain_sample);
    return HeisenbergElement<K>{std::vector<K>(l, zero), std::vector<K>(l, zero), zero};
}

// X1 J_l tY2 with J_l reversing coordinates.
template <class K>
K reversed_dot(const std::vector<K>& a, const std::vector<K>& b, const K& domain_sample) {
    K acc = zero_like(domain_sample);
    long l = static_cast<long>(a.size());
    for (long i = 0; i < l; ++i) acc = acc + a[i] * b[l - 1 - i];
    return acc;
}

template <class K>
HeisenbergElement<K> heisenberg_mul(const HeisenbergElement<K>& u, const HeisenbergElement<K>& v) {
    if (u.l() != v.l()) throw std::invalid_argument("Heisenberg size mismatch");
    K one = one_like(u.z);
    K half = one / (one + one);
    K cocycle = half * (reversed_dot(u.x, v.y, u.z) - reversed_dot(u.y, v.x, u.z));
    HeisenbergElement<K> out = u;
    for (long i = 0; i < u.l(); ++i) {
        out.x[i] = u.x[i] + v.x[i];
        out.y[i] = u.y[i] + v.y[i];
    }
    out.z = u.z + v.z + cocycle;
    return out;
}

template <class K>
HeisenbergElement<K> heisenberg_inverse(const HeisenbergElement<K>& u) {
    HeisenbergElement<K> out = u;
    for (auto& c : out.x) c = -c;
    for (auto& c : out.y) c = -c;
    out.z = -u.z;
    return out;
}

// tau(X, Y, z): the unipotent embedding of H_{2l+1} into Sp_{2l+2}, with
// X* = -J_l tX and Y* = (1/2) J_l tY.
template <class K>
GroupElement<K> tau_embed(const HeisenbergElement<K>& u) {
    long l = u.l();
    long n = 2 * l + 2;
    K one = one_like(u.z);
    K half = one / (one + one);
    Matrix<K> m = Matrix<K>::identity(n, one);
    for (long i = 0; i < l; ++i) {
        m.at(0, 1 + i) = u.x[i];
        m.at(0, 1 + l + i) = half * u.y[i];
        m.at(1 + i, n - 1) = half * u.y[l - 1 - i];         // Y* = (1/2) J tY
        m.at(1 + l + i, n - 1) = -u.x[l - 1 - i];           // X* = -J tX
    }
    m.at(0, n - 1) = u.z;
    return GroupElement<K>(std::move(m), GroupTag::Sp);
}

// ---------------------------------------------------------------------------
// Modulus characters, tracked purely as exponent ledgers.
// ---------------------------------------------------------------------------

// Exponent e with delta_B(t) = |a|^e for the torus element of Sp_{2N} whose
// i-th coordinate is a^{pattern[i]}; the Borel weight on coordinate i is
// 2(N - i) + 2.
long long borel_modulus_exponent(const std::vector<long>& pattern, long n_rank);

enum class ClassicalFamily { Sp, SO };

// Half-modulus exponent of the GL_1 factor of the (1, rest) maximal
// parabolic: n for Sp_{2n}, k/2 - 1 for SO_k.
Rat parabolic_half_modulus_exponent(ClassicalFamily family, long size);

// ---------------------------------------------------------------------------
// Weyl elements: monomial matrices with entries in {0, +1, -1} lying in the
// symplectic group. Stored over Q; cast entrywise to other domains as needed.
// ---------------------------------------------------------------------------
class WeylElement {
public:
    explicit WeylElement(Matrix<Rat> m);

    const Matrix<Rat>& matrix() const { return mat_; }
    long size() const { return mat_.rows(); }

    // Column of the unique nonzero entry in row i, and its sign.
    long column_of_row(long i) const;
    int sign_of_row(long i) const;

    WeylElement inverse() const { return WeylElement(mat_.inverse()); }

    bool operator==(const WeylElement& o) const { return mat_ == o.mat_; }

private:
    Matrix<Rat> mat_;
};

struct WeylPin {
    long row;   // 0-based
    long col;   // 0-based
    int sign;   // +1, -1, or 0 to leave the sign to the completion
};

// Completes a partial monomial placement to a symplectic Weyl element:
// mirrored entries are forced by the form, remaining free signs are chosen
// lexicographically (+1 first, row by row). Unpinned rows, if any, are filled
// greedily with the smallest unused mirror-consistent column. Throws on
// overlapping or inconsistent pins.
WeylElement complete_weyl(long size, const std::vector<WeylPin>& pins);

}  // namespace mtheta::groups
