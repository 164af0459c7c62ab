#include <doctest.h>

#include "mtheta/groups.hpp"
#include "mtheta/sampling.hpp"

using namespace mtheta;
using groups::GroupElement;
using groups::GroupTag;
using groups::Matrix;
using scalars::Fp;
using scalars::Rat;

namespace {

Matrix<Rat> diag(std::vector<Rat> entries) {
    long n = static_cast<long>(entries.size());
    Matrix<Rat> m = Matrix<Rat>::zero(n, n, Rat(1));
    for (long i = 0; i < n; ++i) m.at(i, i) = entries[static_cast<size_t>(i)];
    return m;
}

}  // namespace

TEST_CASE("symplectic membership") {
    CHECK(groups::is_symplectic(Matrix<Rat>::identity(4, Rat(1)), 4));
    CHECK(groups::is_symplectic(diag({Rat(2), scalars::rat(1, 2), Rat(2), scalars::rat(1, 2)}), 4));
    CHECK(!groups::is_symplectic(diag({Rat(2), Rat(1), Rat(1), Rat(1)}), 4));
    CHECK_THROWS_AS(groups::is_symplectic(Matrix<Rat>::identity(4, Rat(1)), 6),
                    std::invalid_argument);
}

TEST_CASE("special orthogonal membership") {
    CHECK(groups::is_special_orthogonal(Matrix<Rat>::identity(3, Rat(1)), 3));
    CHECK(groups::is_special_orthogonal(diag({Rat(3), Rat(1), scalars::rat(1, 3)}), 3));
    // the swap preserves the form but has determinant -1
    Matrix<Rat> swap2 = groups::anti_identity(2, Rat(1));
    CHECK(!groups::is_special_orthogonal(swap2, 2));
}

TEST_CASE("t(a) is the alternating torus element") {
    CHECK(groups::t_element(Rat(1), 4).matrix() == Matrix<Rat>::identity(4, Rat(1)));
    CHECK(groups::t_element(Rat(2), 4).matrix() ==
          diag({Rat(2), scalars::rat(1, 2), Rat(2), scalars::rat(1, 2)}));
    CHECK(groups::t_element(Rat(2), 6) * groups::t_element(Rat(3), 6) ==
          groups::t_element(Rat(6), 6));
    CHECK_THROWS(groups::t_element(Rat(0), 4));
}

TEST_CASE("heisenberg multiplication") {
    auto e = groups::heisenberg_identity(1, Rat(0));
    groups::HeisenbergElement<Rat> u{{Rat(1)}, {Rat(0)}, Rat(0)};
    groups::HeisenbergElement<Rat> v{{Rat(0)}, {Rat(1)}, Rat(0)};
    CHECK(groups::heisenberg_mul(e, u) == u);
    auto uv = groups::heisenberg_mul(u, v);
    CHECK(uv.x == std::vector<Rat>{Rat(1)});
    CHECK(uv.y == std::vector<Rat>{Rat(1)});
    CHECK(uv.z == scalars::rat(1, 2));
    // four-fold commutator product
    auto comm = groups::heisenberg_mul(
        groups::heisenberg_mul(uv, groups::heisenberg_inverse(u)), groups::heisenberg_inverse(v));
    CHECK(comm.x == std::vector<Rat>{Rat(0)});
    CHECK(comm.y == std::vector<Rat>{Rat(0)});
    CHECK(comm.z == Rat(1));

    groups::HeisenbergElement<Rat> wrong{{Rat(1), Rat(0)}, {Rat(0), Rat(0)}, Rat(0)};
    CHECK_THROWS_AS(groups::heisenberg_mul(u, wrong), std::invalid_argument);
}

TEST_CASE("tau embeds the Heisenberg group") {
    auto e = groups::heisenberg_identity(2, Rat(0));
    CHECK(groups::tau_embed(e).matrix() == Matrix<Rat>::identity(6, Rat(1)));

    groups::HeisenbergElement<Rat> u{{Rat(1)}, {Rat(0)}, Rat(0)};
    auto tu = groups::tau_embed(u);
    CHECK(tu.matrix().at(0, 1) == Rat(1));
    CHECK(tu.matrix().at(2, 3) == Rat(-1));  // X* = -J tX
    CHECK(groups::is_symplectic(tu.matrix(), 4));

    groups::HeisenbergElement<Rat> v{{Rat(0)}, {Rat(2)}, Rat(7)};
    auto tv = groups::tau_embed(v);
    CHECK(tv.matrix().at(0, 2) == Rat(1));  // (1/2) Y block
    CHECK(tv.matrix().at(1, 3) == Rat(1));  // Y* = (1/2) J tY
    CHECK(tv.matrix().at(0, 3) == Rat(7));

    Rng rng(11);
    for (int it = 0; it < 200; ++it) {
        auto a = sampling::random_heisenberg(2, 7, rng);
        auto b = sampling::random_heisenberg(2, 7, rng);
        CHECK(groups::tau_embed(a) * groups::tau_embed(b) ==
              groups::tau_embed(groups::heisenberg_mul(a, b)));
    }
}

TEST_CASE("symplectic closure on random products") {
    Rng rng(5);
    for (long two_m = 2; two_m <= 12; two_m += 2) {
        for (int it = 0; it < 200; ++it) {
            auto a = sampling::random_sp(two_m, 7, rng);
            auto b = sampling::random_sp(two_m, 7, rng);
            CHECK(groups::is_symplectic((a * b).matrix(), two_m));
        }
    }
}

TEST_CASE("borel modulus exponent ledger") {
    CHECK(groups::borel_modulus_exponent({1}, 1) == 2);
    CHECK(groups::borel_modulus_exponent({1, 1}, 2) == 6);
    CHECK_THROWS_AS(groups::borel_modulus_exponent({1, 1}, 3), std::invalid_argument);
    for (long r = 3; r <= 13; r += 2)
        for (long k = 2; k <= 10; ++k)
            for (long n = 1; n <= 10; ++n) {
                long r1 = (r - 1) / 2;
                long rank = n + k * r1;
                std::vector<long> pattern(static_cast<size_t>(rank), 0);
                for (long i = 0; i < r; ++i) pattern[static_cast<size_t>(i)] = -1;
                Rat value = Rat(static_cast<long>(groups::borel_modulus_exponent(pattern, rank))) * Rat(r - 1, 2 * r);
                value.canonicalize();
                CHECK(value == Rat(-r1 * (2 * n + (k - 1) * (r - 1))));
            }
}

TEST_CASE("half modulus exponents of the (1, rest) parabolics") {
    using groups::ClassicalFamily;
    CHECK(groups::parabolic_half_modulus_exponent(ClassicalFamily::Sp, 6) == Rat(3));
    CHECK(groups::parabolic_half_modulus_exponent(ClassicalFamily::SO, 6) == Rat(2));
    CHECK(groups::parabolic_half_modulus_exponent(ClassicalFamily::SO, 5) == scalars::rat(3, 2));
}

TEST_CASE("weyl element invariants") {
    std::vector<groups::WeylPin> pins = {{0, 1, +1}, {1, 3, +1}};
    auto w = groups::complete_weyl(4, pins);
    CHECK(groups::is_symplectic(w.matrix(), 4));
    // inverse equals the form-twisted transpose
    auto s = groups::symplectic_form(4, Rat(1));
    CHECK(w.matrix().inverse() == s.inverse() * w.matrix().transpose() * s);
    CHECK_THROWS(groups::complete_weyl(4, {{0, 1, +1}, {1, 1, +1}}));

    Matrix<Rat> bad = Matrix<Rat>::identity(4, Rat(1));
    bad.at(0, 0) = Rat(2);
    CHECK_THROWS(groups::WeylElement(bad));
}

TEST_CASE("weyl completion from random first-half placements") {
    Rng rng(17);
    for (int it = 0; it < 100; ++it) {
        long half = 2 + static_cast<long>(rng.below(4));
        long n = 2 * half;
        // pick a random assignment of column pairs {c, n+1-c} to the
        // first-half rows, with a random side and sign for each
        std::vector<long> pair_ids(half);
        for (long i = 0; i < half; ++i) pair_ids[static_cast<size_t>(i)] = i + 1;
        for (long i = half - 1; i > 0; --i)
            std::swap(pair_ids[static_cast<size_t>(i)],
                      pair_ids[rng.below(static_cast<std::uint64_t>(i + 1))]);
        std::vector<groups::WeylPin> pins;
        for (long row = 0; row < half; ++row) {
            long c = pair_ids[static_cast<size_t>(row)];
            long col = rng.below(2) ? c : n + 1 - c;
            pins.push_back({row, col - 1, rng.below(2) ? 1 : -1});
        }
        auto w = groups::complete_weyl(n, pins);
        CHECK(groups::is_symplectic(w.matrix(), n));
        for (const auto& p : pins) CHECK(w.matrix().at(p.row, p.col) == Rat(p.sign));
    }
}

TEST_CASE("group element construction validates membership") {
    CHECK_THROWS(GroupElement<Rat>(diag({Rat(2), Rat(1), Rat(1), Rat(1)}), GroupTag::Sp));
    CHECK_THROWS(GroupElement<Rat>(groups::anti_identity(2, Rat(1)), GroupTag::SO));
    auto g = GroupElement<Rat>(Matrix<Rat>::identity(4, Rat(1)), GroupTag::Sp);
    CHECK((g * g.inverse()).matrix() == Matrix<Rat>::identity(4, Rat(1)));
}
