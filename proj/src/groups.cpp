#include "mtheta/groups.hpp"

#include <map>
#include <set>

namespace mtheta::groups {

long long borel_modulus_exponent(const std::vector<long>& pattern, long n_rank) {
    if (static_cast<long>(pattern.size()) != n_rank)
        throw std::invalid_argument("pattern length must equal the rank");
    long long e = 0;
    for (long i = 0; i < n_rank; ++i)
        e += static_cast<long long>(pattern[i]) * (2 * (n_rank - (i + 1)) + 2);
    return e;
}

Rat parabolic_half_modulus_exponent(ClassicalFamily family, long size) {
    switch (family) {
        case ClassicalFamily::Sp: {
            if (size % 2 != 0 || size <= 0)
                throw std::invalid_argument("Sp size must be even and positive");
            return Rat(size / 2);
        }
        case ClassicalFamily::SO: {
            if (size < 2) throw std::invalid_argument("SO size must be at least 2");
            Rat e(size - 2, 2);
            e.canonicalize();
            return e;
        }
    }
    throw std::logic_error("unknown family");
}

WeylElement::WeylElement(Matrix<Rat> m) : mat_(std::move(m)) {
    if (!mat_.is_square()) throw std::invalid_argument("Weyl element must be square");
    long n = mat_.rows();
    std::vector<int> col_used(n, 0);
    for (long i = 0; i < n; ++i) {
        long hits = 0;
        for (long j = 0; j < n; ++j) {
            const Rat& v = mat_.at(i, j);
            if (v == 0) continue;
            if (v != 1 && v != -1)
                throw std::invalid_argument("Weyl element entries must be 0 or +-1");
            ++hits;
            ++col_used[j];
        }
        if (hits != 1) throw std::invalid_argument("Weyl element needs one entry per row");
    }
    for (long j = 0; j < n; ++j)
        if (col_used[j] != 1) throw std::invalid_argument("Weyl element needs one entry per column");
    if (!is_symplectic(mat_, n)) throw std::invalid_argument("Weyl element is not symplectic");
}

long WeylElement::column_of_row(long i) const {
    for (long j = 0; j < size(); ++j)
        if (mat_.at(i, j) != 0) return j;
    throw std::logic_error("monomial row without entry");
}

int WeylElement::sign_of_row(long i) const {
    return mat_.at(i, column_of_row(i)) > 0 ? 1 : -1;
}

WeylElement complete_weyl(long size, const std::vector<WeylPin>& pins) {
    if (size <= 0 || size % 2 != 0) throw std::invalid_argument("Weyl element size must be even");
    // 1-based placement maps; sign 0 = sign still free.
    std::map<long, std::pair<long, int>> row_to;  // row -> (col, sign)
    std::set<long> cols_taken;

    auto sigma = [size](long i1) { return half_sign(i1, size); };

    auto place = [&](long r1, long c1, int sgn) {
        auto it = row_to.find(r1);
        if (it != row_to.end()) {
            if (it->second.first != c1 || (sgn != 0 && it->second.second != 0 && it->second.second != sgn))
                throw std::invalid_argument("inconsistent Weyl placements");
            if (sgn != 0) it->second.second = sgn;
            return;
        }
        if (cols_taken.count(c1)) throw std::invalid_argument("overlapping Weyl placements");
        row_to[r1] = {c1, sgn};
        cols_taken.insert(c1);
    };

    for (const auto& p : pins) {
        long r1 = p.row + 1, c1 = p.col + 1;
        if (r1 < 1 || r1 > size || c1 < 1 || c1 > size)
            throw std::invalid_argument("Weyl placement out of range");
        if (p.sign != 1 && p.sign != -1 && p.sign != 0)
            throw std::invalid_argument("Weyl sign must be +1, -1, or 0 (free)");
        place(r1, c1, p.sign);
        // Mirrored column is forced; the mirrored sign follows once this
        // row's sign is known, so leave it free here.
        place(size + 1 - r1, size + 1 - c1, 0);
    }

    // Fill any remaining rows greedily with the smallest unused column.
    for (long r1 = 1; r1 <= size; ++r1) {
        if (row_to.count(r1)) continue;
        long c1 = 1;
        while (cols_taken.count(c1) || cols_taken.count(size + 1 - c1)) ++c1;
        if (c1 > size) throw std::logic_error("no column left for Weyl completion");
        place(r1, c1, 0);
        place(size + 1 - r1, size + 1 - c1, 0);
    }

    // Resolve signs: the form pairs row i with row size+1-i through
    // eps_i * eps_{mirror} * sigma(i) = sigma(col(i)). Free pairs take +1 on
    // the first-half row.
    std::vector<int> sign(size + 1, 0);
    std::vector<long> col(size + 1, 0);
    for (auto& [r1, pc] : row_to) {
        col[r1] = pc.first;
        sign[r1] = pc.second;
    }
    for (long r1 = 1; 2 * r1 <= size; ++r1) {
        long m1 = size + 1 - r1;
        int rel = sigma(col[r1]) * sigma(r1);  // eps_r * eps_m must equal this
        if (sign[r1] == 0 && sign[m1] == 0) {
            sign[r1] = 1;
            sign[m1] = rel;
        } else if (sign[r1] != 0 && sign[m1] == 0) {
            sign[m1] = rel * sign[r1];
        } else if (sign[r1] == 0) {
            sign[r1] = rel * sign[m1];
        } else if (sign[r1] * sign[m1] != rel) {
            throw std::invalid_argument("inconsistent Weyl sign placements");
        }
    }

    Matrix<Rat> m = Matrix<Rat>::zero(size, size, Rat(1));
    for (long r1 = 1; r1 <= size; ++r1) m.at(r1 - 1, col[r1] - 1) = Rat(sign[r1]);
    return WeylElement(std::move(m));
}

}  // namespace mtheta::groups
