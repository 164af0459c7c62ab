// Acceptance gate: one pass/fail line per criterion, exit 1 on any failure.
// Every tolerance here is exact equality of integers or rationals.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mtheta/cocycle.hpp"
#include "mtheta/orbits.hpp"
#include "mtheta/sampling.hpp"
#include "mtheta/verify.hpp"
#include "mtheta/weyl.hpp"

using namespace mtheta;
using groups::Matrix;
using orbits::OrbitComparison;
using orbits::Partition;
using scalars::Rat;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, bool ok) {
    std::printf("criterion-%02d %s: %s\n", number, ok ? "PASS" : "FAIL", what.c_str());
    if (!ok) ++failures;
}

bool suite_passes(const std::string& name, long p, std::uint64_t seed, long iters) {
    return verify::run_suite(name, p, seed, iters).all_pass();
}

bool dimension_equation_grid() {
    for (long r : {3L, 5L, 7L, 9L})
        for (long k = 2; k <= 12; ++k) {
            auto [lhs, rhs] = orbits::dimension_equation(r, k, k / 2);
            if (lhs != rhs) return false;
        }
    auto anchor = [](long r, long k, long n, long v) {
        auto [lhs, rhs] = orbits::dimension_equation(r, k, n);
        return lhs == Rat(v) && rhs == Rat(v);
    };
    return anchor(3, 3, 1, 16) && anchor(3, 4, 2, 38) && anchor(5, 3, 1, 46);
}

bool ledger_grid() {
    for (long r = 3; r <= 13; r += 2)
        for (long k = 2; k <= 10; ++k)
            for (long n = 1; n <= 10; ++n) {
                long r1 = (r - 1) / 2;
                long long sum = k + (r1 - 1) * (2 * k - 2) + r1 * (r1 * k + 2 * n - 2) -
                                (r1 - 1) * (k - 2);
                for (long j = 1; j <= r1 - 1; ++j) sum += j * k + j * (k - 4);
                if (sum != static_cast<long long>(r1) * (2 * n + (k - 1) * (r - 1))) return false;
            }
    return true;
}

bool borel_grid() {
    for (long r = 3; r <= 13; r += 2)
        for (long k = 2; k <= 10; ++k)
            for (long n = 1; n <= 10; ++n) {
                long r1 = (r - 1) / 2;
                long rank = n + k * r1;
                std::vector<long> pattern(static_cast<size_t>(rank), 0);
                for (long i = 0; i < r; ++i) pattern[static_cast<size_t>(i)] = -1;
                Rat value =
                    Rat(static_cast<long>(groups::borel_modulus_exponent(pattern, rank))) * Rat(r - 1, 2 * r);
                value.canonicalize();
                if (value != Rat(-r1 * (2 * n + (k - 1) * (r - 1)))) return false;
            }
    return true;
}

bool delta_product_grid() {
    using groups::ClassicalFamily;
    for (long r = 3; r <= 13; r += 2)
        for (long k = 2; k <= 10; ++k)
            for (long n = 1; n <= 10; ++n) {
                Rat target = Rat(1) - Rat(k, 2) + Rat(n);
                target.canonicalize();
                Rat a_exp = groups::parabolic_half_modulus_exponent(ClassicalFamily::Sp, 2 * n) +
                            Rat(1) - Rat(k, 2);
                a_exp.canonicalize();
                Rat b_exp =
                    groups::parabolic_half_modulus_exponent(ClassicalFamily::SO, k) - Rat(n);
                b_exp.canonicalize();
                if (a_exp != target || b_exp != -target) return false;
            }
    return true;
}

bool exponent_equation_solutions() {
    for (long r = 3; r <= 13; r += 2) {
        std::vector<long> sols;
        for (long l = 1; l <= 200; ++l) {
            Rat lhs = Rat(l) * Rat(l + 1) * Rat(r - 1, 2 * r);
            lhs.canonicalize();
            Rat rhs(l * l, 2);
            rhs.canonicalize();
            if (lhs == rhs) sols.push_back(l);
        }
        if (sols != std::vector<long>{r - 1}) return false;
    }
    return true;
}

bool o_c_bookkeeping() {
    for (long r = 3; r <= 13; r += 2)
        for (long two_l = 2; two_l <= 60; two_l += 2)
            if (!orbits::is_symplectic_partition(orbits::o_c(r, two_l), two_l)) return false;
    return orbits::o_c(3, 4) == Partition{2, 2} && orbits::o_c(5, 4) == Partition{4};
}

bool oracle_agreement() {
    for (long two_n = 2; two_n <= 12; two_n += 2)
        for (const auto& parts : orbits::symplectic_partitions(two_n))
            if (orbits::orbit_dim(parts, two_n) != orbits::centralizer_dim_oracle(parts, two_n))
                return false;
    return true;
}

bool incomparability() {
    if (orbits::dominance({8, 1, 1, 1, 1}, {3, 3, 3, 3}) != OrbitComparison::Incomparable)
        return false;
    long incomparable_cells = 0;
    for (long r : {3L, 5L, 7L})
        for (long m = r; m <= r + 2; ++m)
            for (long two_l = 2 * m + 4; two_l <= 2 * m + 14; two_l += 2) {
                Partition orbit{2 * m + 2};
                for (long t = 0; t < two_l - 2 * m - 2; ++t) orbit.push_back(1);
                auto oc = orbits::o_c(r, two_l);
                auto verdict = orbits::dominance(orbit, oc);
                // the large orbit is never below the conjectured one
                if (verdict == OrbitComparison::Less || verdict == OrbitComparison::Equal)
                    return false;
                // independent partial-sum oracle for the incomparable cells
                bool dominates = true;
                long lhs = 0, rhs = 0;
                for (size_t j = 0; j < oc.size(); ++j) {
                    lhs += j < orbit.size() ? orbit[j] : 0;
                    rhs += oc[j];
                    if (lhs < rhs) dominates = false;
                }
                if (!dominates) {
                    ++incomparable_cells;
                    if (verdict != OrbitComparison::Incomparable) return false;
                }
            }
    return incomparable_cells >= 20;
}

bool weyl_criterion() {
    if (!suite_passes("weyl", 7, 0, 50)) return false;
    // the r = 7 cusp element against a direct transcription of the block
    // layout: I_alpha anchors in w1 at (alpha(i-1)+1, k(i-1)+1), in w2 at
    // (alpha r1 + alpha(i-1)+1, k(i-1)+1), and I_beta anchors in w1 at
    // (alpha(r-1) + beta(i-1)+1, k(i-1)+alpha+1), everything else zero.
    for (auto [alpha, beta] : std::vector<std::pair<long, long>>{{1, 1}, {2, 1}, {1, 2}}) {
        const long r = 7, r1 = 3, n = 2;
        long k = 2 * alpha + beta;
        long band = k * r1;
        auto w = weyl::weyl_cusp(alpha, beta, r, n).matrix();
        Matrix<Rat> w1 = Matrix<Rat>::zero(band, band, Rat(1));
        Matrix<Rat> w2 = Matrix<Rat>::zero(band, band, Rat(1));
        for (long i = 1; i <= r1; ++i) {
            for (long t = 0; t < alpha; ++t) {
                w1.at(alpha * (i - 1) + t, k * (i - 1) + t) = Rat(1);
                w2.at(alpha * r1 + alpha * (i - 1) + t, k * (i - 1) + t) = Rat(1);
            }
            for (long t = 0; t < beta; ++t)
                w1.at(alpha * (r - 1) + beta * (i - 1) + t, k * (i - 1) + alpha + t) = Rat(1);
        }
        if (w.block(0, 0, band, band) != w1) return false;
        if (w.block(0, band + 2 * n, band, band) != w2) return false;
        if (w.block(band, band, 2 * n, 2 * n) != Matrix<Rat>::identity(2 * n, Rat(1)))
            return false;
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "dimension equation, odd r in {3,5,7,9}, k in 2..12, n = [k/2], exact",
              dimension_equation_grid());
    criterion(2, "exponent ledger equals r1(2n+(k-1)(r-1)) on the full grid", ledger_grid());
    criterion(3, "Borel modulus exponent equals -r1(2n+(k-1)(r-1)) on the full grid",
              borel_grid());
    criterion(4, "half-modulus product exponent equals 1-k/2+n as exact rationals",
              delta_product_grid());
    criterion(5, "l(l+1)(r-1)/(2r) = l^2/2 has solution set {r-1} for odd r <= 13",
              exponent_equation_solutions());
    criterion(6, "o_c(r, 2l) symplectic for odd r <= 13, 2l <= 60; o_c(3,4) = (2,2), o_c(5,4) = (4)",
              o_c_bookkeeping());
    criterion(7, "closed orbit-dimension formula matches the centralizer oracle, 2n <= 12",
              oracle_agreement());
    criterion(8, "(8,1,1,1,1) vs (3,3,3,3) incomparable, plus the sampled m >= r grid",
              incomparability());
    criterion(9, "cocycle suite: 2-cocycle identity, block compatibility, r-th power "
                 "triviality, symbol laws",
              suite_passes("cocycle", 7, 0, 1000) && suite_passes("cocycle", 13, 1, 100));
    criterion(10, "embedding suite: homomorphisms, symplectic images, commutation, "
                  "character stabilization",
              suite_passes("embed", 7, 0, 200));
    criterion(11, "Heisenberg suite: associativity, tau and l homomorphisms, centre to centre",
              suite_passes("heisenberg", 7, 0, 500));
    criterion(12, "Weyl suite: r = 7 cusp block layout, symplectic elements, conjugator checks",
              weyl_criterion());

    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
