#include "mtheta/orbits.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mtheta::orbits {

using groups::Matrix;

bool is_symplectic_partition(const Partition& parts, long two_n) {
    long sum = 0;
    std::map<long, long> mult;
    for (size_t t = 0; t < parts.size(); ++t) {
        if (parts[t] <= 0) return false;
        if (t > 0 && parts[t] > parts[t - 1]) return false;
        sum += parts[t];
        ++mult[parts[t]];
    }
    if (sum != two_n) return false;
    for (const auto& [part, m] : mult)
        if (part % 2 == 1 && m % 2 == 1) return false;
    return true;
}

OrbitComparison dominance(const Partition& lhs, const Partition& rhs) {
    long total_l = std::accumulate(lhs.begin(), lhs.end(), 0L);
    long total_r = std::accumulate(rhs.begin(), rhs.end(), 0L);
    if (total_l != total_r) throw std::invalid_argument("dominance requires equal totals");
    size_t n = std::max(lhs.size(), rhs.size());
    bool ge = true, le = true;
    long pl = 0, pr = 0;
    for (size_t i = 0; i < n; ++i) {
        pl += i < lhs.size() ? lhs[i] : 0;
        pr += i < rhs.size() ? rhs[i] : 0;
        if (pl < pr) ge = false;
        if (pl > pr) le = false;
    }
    if (ge && le) return OrbitComparison::Equal;
    if (ge) return OrbitComparison::Greater;
    if (le) return OrbitComparison::Less;
    return OrbitComparison::Incomparable;
}

Partition o_c(long r, long two_l) {
    if (r <= 1 || r % 2 == 0) throw std::invalid_argument("o_c requires odd r > 1");
    if (two_l <= 0 || two_l % 2 != 0) throw std::invalid_argument("o_c requires positive even 2l");
    long alpha = two_l / r;
    long beta = two_l - alpha * r;
    Partition parts;
    if (alpha % 2 == 0) {
        parts.assign(static_cast<size_t>(alpha), r);
        if (beta > 0) parts.push_back(beta);
    } else {
        parts.assign(static_cast<size_t>(alpha - 1), r);
        parts.push_back(r - 1);
        parts.push_back(beta + 1);
        std::sort(parts.begin(), parts.end(), std::greater<long>());
    }
    return parts;
}

Partition transpose_partition(const Partition& parts) {
    if (parts.empty()) return {};
    Partition t(static_cast<size_t>(parts[0]), 0);
    for (long p : parts)
        for (long j = 0; j < p; ++j) ++t[static_cast<size_t>(j)];
    return t;
}

long long orbit_dim(const Partition& parts, long two_n) {
    if (!is_symplectic_partition(parts, two_n))
        throw std::invalid_argument("not a symplectic partition of 2n");
    long long n = two_n / 2;
    long long sq = 0;
    for (long c : transpose_partition(parts)) sq += static_cast<long long>(c) * c;
    long long odd = 0;
    for (long p : parts)
        if (p % 2 == 1) ++odd;
    return 2 * n * n + n - sq / 2 - odd / 2;
}

namespace {

// sp_{2n} in entry terms: M_{pq} = -sign(p) sign(q) M_{q~ p~} with x~ the
// mirrored index; a basis has one generator per orbit of that involution.
std::vector<Matrix<Rat>> sp_basis(long two_n) {
    std::vector<Matrix<Rat>> basis;
    for (long p = 1; p <= two_n; ++p)
        for (long q = 1; q <= two_n; ++q) {
            long pm = two_n + 1 - q, qm = two_n + 1 - p;
            if (std::make_pair(pm, qm) < std::make_pair(p, q)) continue;
            Matrix<Rat> b = Matrix<Rat>::zero(two_n, two_n, Rat(1));
            b.at(p - 1, q - 1) = Rat(1);
            if (pm != p || qm != q) {
                int s = -groups::half_sign(p, two_n) * groups::half_sign(q, two_n);
                b.at(pm - 1, qm - 1) = Rat(s);
            }
            basis.push_back(std::move(b));
        }
    return basis;
}

}  // namespace

Matrix<Rat> standard_sp_nilpotent(const Partition& parts, long two_n) {
    if (!is_symplectic_partition(parts, two_n))
        throw std::invalid_argument("not a symplectic partition of 2n");
    Matrix<Rat> x = Matrix<Rat>::zero(two_n, two_n, Rat(1));
    long low = 0;  // count of low coordinates already assigned

    // Maps internal coordinate t (1-based, summand of size 2s) to a global
    // coordinate so the restricted form is the standard one.
    auto place = [&](long t, long s) {
        if (t <= s) return low + t;
        return two_n + 1 - (low + (2 * s + 1 - t));
    };
    auto add_entry = [&](long ti, long tj, long s, const Rat& v) {
        x.at(place(ti, s) - 1, place(tj, s) - 1) = v;
    };

    Partition sorted = parts;
    std::sort(sorted.begin(), sorted.end(), std::greater<long>());
    std::vector<long> odd_stash;
    for (long part : sorted) {
        if (part % 2 == 0) {
            // single symplectic Jordan block of even size part = 2m
            long m = part / 2;
            for (long i = 1; i < m; ++i) {
                add_entry(i, i + 1, m, Rat(1));
                // mirrored slot carries -1, both indices in the low half
                add_entry(2 * m - i, 2 * m + 1 - i, m, Rat(-1));
            }
            add_entry(m, m + 1, m, Rat(1));
            low += m;
        } else {
            odd_stash.push_back(part);
        }
    }
    for (size_t t = 0; t + 1 < odd_stash.size(); t += 2) {
        // paired odd blocks (d, d): gl_d Jordan block and its dual
        long d = odd_stash[t];
        for (long i = 1; i < d; ++i) {
            add_entry(i, i + 1, d, Rat(1));
            // dual block -J tA J: entry at mirrored slots
            add_entry(2 * d - i, 2 * d + 1 - i, d, Rat(-1));
        }
        low += d;
    }

    Matrix<Rat> s = groups::symplectic_form(two_n, Rat(1));
    if (!(x.transpose() * s + s * x).is_zero_matrix())
        throw std::logic_error("standard nilpotent left sp_{2n}");
    return x;
}

long long centralizer_dim_oracle(const Partition& parts, long two_n) {
    Matrix<Rat> x = standard_sp_nilpotent(parts, two_n);
    auto basis = sp_basis(two_n);
    long dim_sp = static_cast<long>(basis.size());
    Matrix<Rat> system = Matrix<Rat>::zero(two_n * two_n, dim_sp, Rat(1));
    for (long col = 0; col < dim_sp; ++col) {
        Matrix<Rat> img = x * basis[static_cast<size_t>(col)] - basis[static_cast<size_t>(col)] * x;
        for (long p = 0; p < two_n; ++p)
            for (long q = 0; q < two_n; ++q)
                system.at(p * two_n + q, col) = img.at(p, q);
    }
    long long nullity = dim_sp - system.rank();
    return static_cast<long long>(dim_sp) - nullity;  // orbit dimension
}

Rat gk_dim(const Partition& parts, long two_n) {
    Rat g(static_cast<long>(orbit_dim(parts, two_n)), 2);
    g.canonicalize();
    return g;
}

std::pair<Rat, Rat> dimension_equation(long r, long k, long n) {
    if (r <= 1 || r % 2 == 0) throw std::invalid_argument("dimension_equation requires odd r > 1");
    if (k < 2 || n < 1) throw std::invalid_argument("dimension_equation requires k >= 2, n >= 1");
    long r1 = (r - 1) / 2;
    auto dim_sp = [](long rank) { return static_cast<long long>(rank) * (2 * rank + 1); };
    long long dim_sp2n = dim_sp(n);
    long big_rank = k * r1 + n;
    long long dim_levi = static_cast<long long>(r1) * k * k + dim_sp2n;
    Rat dim_u(static_cast<long>(dim_sp(big_rank) - dim_levi), 2);
    dim_u.canonicalize();
    long a = k / 2;
    long long dim_sigma = (k % 2 == 1) ? static_cast<long long>(a) * a
                                       : static_cast<long long>(a) * a - a;
    Rat lhs = Rat(static_cast<long>(dim_sp2n)) + dim_u + Rat(static_cast<long>(dim_sigma));

    long long dim_pi = static_cast<long long>(n) * n;
    long long dim_theta2 = static_cast<long long>(n) * k;
    long two_l = 2 * n + k * (r - 1);
    Rat dim_theta_r = gk_dim(o_c(r, two_l), two_l);
    Rat rhs = Rat(static_cast<long>(dim_pi)) + Rat(static_cast<long>(dim_theta2)) + dim_theta_r;
    return {lhs, rhs};
}

DualGroupDescriptor dual_group(CoveredFamily family, long size, long r) {
    if (r < 1) throw std::invalid_argument("cover degree must be positive");
    switch (family) {
        case CoveredFamily::Sp: {
            if (size % 2 != 0 || size <= 0) throw std::invalid_argument("Sp size must be even");
            return r % 2 == 1 ? DualGroupDescriptor{DualFamily::SO, size + 1}
                              : DualGroupDescriptor{DualFamily::Sp, size};
        }
        case CoveredFamily::SOodd: {
            if (size % 2 != 1 || size < 3) throw std::invalid_argument("odd SO size expected");
            return r % 2 == 1 ? DualGroupDescriptor{DualFamily::Sp, size - 1}
                              : DualGroupDescriptor{DualFamily::SO, size};
        }
        case CoveredFamily::SOeven: {
            if (size % 2 != 0 || size < 2) throw std::invalid_argument("even SO size expected");
            return DualGroupDescriptor{DualFamily::SO, size};
        }
    }
    throw std::logic_error("unknown family");
}

CompositePartition::CompositePartition(long m, long total, Partition tail_parts)
    : head_part(m), two_n(total), tail(std::move(tail_parts)) {
    if (m < 1) throw std::invalid_argument("composite head part must be positive");
    long tail_total = std::accumulate(tail.begin(), tail.end(), 0L);
    if (tail_total != two_n - 2 * m)
        throw std::invalid_argument("composite tail must fill the head padding");
    for (size_t t = 0; t < tail.size(); ++t) {
        if (tail[t] <= 0 || tail[t] > m)
            throw std::invalid_argument("composite tail parts must lie in [1, m]");
        if (t > 0 && tail[t] > tail[t - 1])
            throw std::invalid_argument("composite tail must be weakly decreasing");
    }
    if (!is_symplectic_partition(combined(), two_n))
        throw std::invalid_argument("combined composite partition is not symplectic");
}

Partition CompositePartition::combined() const {
    Partition out{head_part, head_part};
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

CompositePartition split_leading_pair(const Partition& parts, long two_n) {
    if (!is_symplectic_partition(parts, two_n))
        throw std::invalid_argument("not a symplectic partition of 2n");
    if (parts.size() < 2 || parts[0] != parts[1])
        throw std::invalid_argument("leading parts must form a pair");
    return CompositePartition(parts[0], two_n, Partition(parts.begin() + 2, parts.end()));
}

namespace {

void enumerate(long remaining, long max_part, Partition& acc, std::vector<Partition>& out, long two_n) {
    if (remaining == 0) {
        if (is_symplectic_partition(acc, two_n)) out.push_back(acc);
        return;
    }
    for (long p = std::min(max_part, remaining); p >= 1; --p) {
        acc.push_back(p);
        enumerate(remaining - p, p, acc, out, two_n);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> symplectic_partitions(long two_n) {
    if (two_n <= 0 || two_n % 2 != 0) throw std::invalid_argument("2n must be positive and even");
    std::vector<Partition> out;
    Partition acc;
    enumerate(two_n, two_n, acc, out, two_n);
    return out;
}

}  // namespace mtheta::orbits
