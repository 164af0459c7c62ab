#include <doctest.h>

#include <algorithm>

#include "mtheta/orbits.hpp"

using namespace mtheta;
using orbits::OrbitComparison;
using orbits::Partition;
using scalars::Rat;

TEST_CASE("symplectic partition predicate") {
    CHECK(orbits::is_symplectic_partition({2, 1, 1}, 4));
    CHECK(!orbits::is_symplectic_partition({3, 1}, 4));
    // ((r-1)^k 1^{2n}) with r = 5, k = 3, 2n = 2
    CHECK(orbits::is_symplectic_partition({4, 4, 4, 1, 1}, 14));
    CHECK(!orbits::is_symplectic_partition({2, 3}, 5));
    CHECK(!orbits::is_symplectic_partition({2, 0}, 2));
}

TEST_CASE("dominance order") {
    CHECK(orbits::dominance({4}, {2, 2}) == OrbitComparison::Greater);
    CHECK(orbits::dominance({2, 2}, {4}) == OrbitComparison::Less);
    CHECK(orbits::dominance({8, 1, 1, 1, 1}, {3, 3, 3, 3}) == OrbitComparison::Incomparable);
    CHECK(orbits::dominance({3, 3, 2}, {3, 3, 2}) == OrbitComparison::Equal);
    CHECK_THROWS_AS(orbits::dominance({2}, {2, 2}), std::invalid_argument);
}

TEST_CASE("conjectured orbit o_c") {
    CHECK(orbits::o_c(3, 4) == Partition{2, 2});
    CHECK(orbits::o_c(5, 4) == Partition{4});
    CHECK(orbits::o_c(3, 8) == Partition{3, 3, 2});
    for (long r = 3; r <= 13; r += 2)
        for (long two_l = 2; two_l <= 60; two_l += 2)
            CHECK(orbits::is_symplectic_partition(orbits::o_c(r, two_l), two_l));
    CHECK_THROWS_AS(orbits::o_c(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(orbits::o_c(3, 5), std::invalid_argument);
}

TEST_CASE("orbit dimensions") {
    CHECK(orbits::orbit_dim({1, 1, 1, 1}, 4) == 0);
    CHECK(orbits::orbit_dim({2}, 2) == 2);
    CHECK(orbits::orbit_dim({3, 3, 2}, 8) == 24);
    CHECK_THROWS_AS(orbits::orbit_dim({3, 1}, 4), std::invalid_argument);
}

namespace {

// Test-only oracle: Jordan type of a nilpotent matrix from the ranks of its
// powers (multiplicity of parts >= j is rank X^{j-1} - rank X^j).
orbits::Partition jordan_type(const mtheta::groups::Matrix<Rat>& x) {
    long n = x.rows();
    std::vector<long> ranks{n};  // rank of X^0
    auto power = x;
    while (true) {
        long r = power.rank();
        ranks.push_back(r);
        if (r == 0) break;
        power = power * x;
    }
    orbits::Partition parts;
    for (size_t j = 1; j < ranks.size(); ++j) {
        long count_ge_j = ranks[j - 1] - ranks[j];
        for (long t = 0; t < count_ge_j; ++t) {
            if (j == 1)
                parts.push_back(1);
            else
                ++parts[static_cast<size_t>(t)];
        }
    }
    std::sort(parts.begin(), parts.end(), std::greater<long>());
    return parts;
}

}  // namespace

TEST_CASE("standard nilpotent has the requested Jordan type") {
    for (long two_n = 2; two_n <= 10; two_n += 2)
        for (const auto& parts : orbits::symplectic_partitions(two_n)) {
            auto x = orbits::standard_sp_nilpotent(parts, two_n);
            orbits::Partition sorted = parts;
            std::sort(sorted.begin(), sorted.end(), std::greater<long>());
            CHECK(jordan_type(x) == sorted);
        }
}

TEST_CASE("centralizer oracle agrees with the closed formula") {
    CHECK(orbits::centralizer_dim_oracle({1, 1, 1, 1}, 4) == 0);
    CHECK(orbits::centralizer_dim_oracle({2, 2}, 4) == 6);
    CHECK(orbits::centralizer_dim_oracle({2, 1, 1}, 4) == 4);
    for (long two_n = 2; two_n <= 8; two_n += 2)
        for (const auto& parts : orbits::symplectic_partitions(two_n))
            CHECK(orbits::orbit_dim(parts, two_n) == orbits::centralizer_dim_oracle(parts, two_n));
}

TEST_CASE("Gelfand-Kirillov dimension") {
    CHECK(orbits::gk_dim({1, 1, 1, 1}, 4) == Rat(0));
    CHECK(orbits::gk_dim({3, 3, 2}, 8) == Rat(12));
    // the minimal orbit of Sp_{2N} has half-dimension N
    for (long N : {2L, 3L, 4L}) {
        Partition minimal{2};
        for (long t = 0; t < 2 * N - 2; ++t) minimal.push_back(1);
        CHECK(orbits::gk_dim(minimal, 2 * N) == Rat(N));
    }
}

TEST_CASE("dimension equation anchors") {
    auto check_eq = [](long r, long k, long n, long both) {
        auto [lhs, rhs] = orbits::dimension_equation(r, k, n);
        CHECK(lhs == Rat(both));
        CHECK(rhs == Rat(both));
    };
    check_eq(3, 3, 1, 16);
    check_eq(3, 4, 2, 38);
    check_eq(5, 3, 1, 46);
}

TEST_CASE("dual group parity table") {
    using orbits::CoveredFamily;
    using orbits::DualFamily;
    auto d1 = orbits::dual_group(CoveredFamily::Sp, 6, 3);
    CHECK(d1.family == DualFamily::SO);
    CHECK(d1.size == 7);
    auto d2 = orbits::dual_group(CoveredFamily::Sp, 6, 2);
    CHECK(d2.family == DualFamily::Sp);
    CHECK(d2.size == 6);
    auto d3 = orbits::dual_group(CoveredFamily::SOodd, 7, 3);
    CHECK(d3.family == DualFamily::Sp);
    CHECK(d3.size == 6);
    auto d4 = orbits::dual_group(CoveredFamily::SOodd, 7, 2);
    CHECK(d4.family == DualFamily::SO);
    CHECK(d4.size == 7);
    auto d5 = orbits::dual_group(CoveredFamily::SOeven, 6, 5);
    CHECK(d5.family == DualFamily::SO);
    CHECK(d5.size == 6);
}

TEST_CASE("composite partitions") {
    // (3,3,2,2) of 10 split as (3^2) o (2,2)
    auto comp = orbits::split_leading_pair({3, 3, 2, 2}, 10);
    CHECK(comp.head_part == 3);
    CHECK(comp.tail == Partition{2, 2});
    CHECK(comp.combined() == Partition{3, 3, 2, 2});
    CHECK(orbits::CompositePartition(3, 10, {2, 2}).combined() == Partition{3, 3, 2, 2});
    // tail parts must not exceed the head part
    CHECK_THROWS_AS(orbits::CompositePartition(2, 10, {3, 3}), std::invalid_argument);
    // combined partition must stay symplectic
    CHECK_THROWS_AS(orbits::CompositePartition(3, 9, {3}), std::invalid_argument);
    CHECK_THROWS_AS(orbits::split_leading_pair({4, 2, 2}, 8), std::invalid_argument);
}

TEST_CASE("partition enumeration") {
    auto parts4 = orbits::symplectic_partitions(4);
    // (4), (2,2), (2,1,1), (1,1,1,1)
    CHECK(parts4.size() == 4);
    for (const auto& p : parts4) CHECK(orbits::is_symplectic_partition(p, 4));
}
