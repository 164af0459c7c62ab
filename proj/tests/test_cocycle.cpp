#include <doctest.h>

#include "mtheta/cocycle.hpp"
#include "mtheta/sampling.hpp"

using namespace mtheta;
using cocycle::TorusAmbient;
using cocycle::TorusElement;
using scalars::Fp;
using scalars::MuR;
using scalars::PAdic;
using scalars::Rat;

TEST_CASE("tame hilbert symbol") {
    const long p = 7, r = 3;
    auto one = PAdic::one(p);
    auto b = PAdic::from_rational(Rat(3), p);
    CHECK(cocycle::hilbert_tame(one, b, p, r).is_identity());

    Rng rng(1);
    for (int it = 0; it < 50; ++it) {
        auto a = sampling::random_padic(p, rng);
        // (a, -a) = 1
        CHECK(cocycle::hilbert_tame(a, PAdic::from_rational(Rat(-1), p) * a, p, r).is_identity());
    }

    // (7, 3)_3 over Q_7: the unit is 3^{-1}, and 5^2 = 4 mod 7
    auto seven = PAdic::from_rational(Rat(7), p);
    auto three = PAdic::from_rational(Rat(3), p);
    CHECK(cocycle::hilbert_tame_value(seven, three, p, r) == Fp(4, p));
    // 4 = (3^2)^2 with zeta = 3^2 the fixed generator of mu_3 in F_7
    CHECK(cocycle::hilbert_tame(seven, three, p, r) == MuR(2, 3));

    CHECK_THROWS_WITH_AS(cocycle::hilbert_tame(seven, three, 7, 5),
                         "no r-th roots in residue field", std::invalid_argument);
}

TEST_CASE("quadratic hilbert symbol") {
    const long p = 7;
    auto one = PAdic::one(p);
    auto b = PAdic::from_rational(Rat(3), p);
    CHECK(cocycle::hilbert_quadratic(one, b, p).is_identity());
    // (7, 3)_2 = legendre(3 mod 7) = -1
    auto seven = PAdic::from_rational(Rat(7), p);
    CHECK(cocycle::hilbert_quadratic(seven, b, p) == MuR(1, 2));
    Rng rng(2);
    for (int it = 0; it < 100; ++it) {
        auto x = sampling::random_padic(p, rng);
        auto y = sampling::random_padic(p, rng);
        auto z = sampling::random_padic(p, rng);
        CHECK(cocycle::hilbert_quadratic(x, y * z, p) ==
              scalars::mu_r_mul(cocycle::hilbert_quadratic(x, y, p),
                                cocycle::hilbert_quadratic(x, z, p)));
    }
}

TEST_CASE("hilbert symbol bilinearity, antisymmetry, Steinberg") {
    const long p = 13, r = 3;
    Rng rng(3);
    for (int it = 0; it < 200; ++it) {
        auto a = sampling::random_padic(p, rng);
        auto b = sampling::random_padic(p, rng);
        auto c = sampling::random_padic(p, rng);
        CHECK(cocycle::hilbert_tame(a, b * c, p, r) ==
              scalars::mu_r_mul(cocycle::hilbert_tame(a, b, p, r),
                                cocycle::hilbert_tame(a, c, p, r)));
        CHECK(scalars::mu_r_mul(cocycle::hilbert_tame(a, b, p, r),
                                cocycle::hilbert_tame(b, a, p, r))
                  .is_identity());
        Rat av = a.to_rational();
        Rat om = 1 - av;
        om.canonicalize();
        if (om != 0)
            CHECK(cocycle::hilbert_tame(a, PAdic::from_rational(om, p), p, r).is_identity());
    }
}

TEST_CASE("tame symbol at r = 2 coincides with the quadratic symbol") {
    Rng rng(8);
    for (long p : {7L, 13L}) {
        for (int it = 0; it < 200; ++it) {
            auto a = sampling::random_padic(p, rng);
            auto b = sampling::random_padic(p, rng);
            CHECK(cocycle::hilbert_tame(a, b, p, 2).exponent() ==
                  cocycle::hilbert_quadratic(a, b, p).exponent());
        }
    }
}

TEST_CASE("torus cocycle") {
    const long p = 7, r = 3;
    Rng rng(4);
    auto id4 = cocycle::t_torus(PAdic::one(p), 4);
    auto t2 = cocycle::t_torus(sampling::random_padic(p, rng), 4);
    CHECK(cocycle::torus_cocycle(id4, t2, r, p).is_identity());

    for (int it = 0; it < 50; ++it) {
        auto a1 = sampling::random_padic_rth_power(p, r, rng);
        auto a2 = sampling::random_padic_rth_power(p, r, rng);
        CHECK(cocycle::torus_cocycle(cocycle::t_torus(a1, 6), cocycle::t_torus(a2, 6), r, p)
                  .is_identity());
    }

    for (int it = 0; it < 100; ++it) {
        auto rand_torus = [&] {
            std::vector<PAdic> firsts{sampling::random_padic(p, rng),
                                      sampling::random_padic(p, rng)};
            return TorusElement(cocycle::sp_torus_diagonal(firsts), TorusAmbient::Sp);
        };
        auto a = rand_torus(), b = rand_torus(), c = rand_torus();
        auto mul = [](const TorusElement& x, const TorusElement& y) {
            std::vector<PAdic> d;
            for (long i = 0; i < x.size(); ++i)
                d.push_back(x.diagonal[static_cast<size_t>(i)] *
                            y.diagonal[static_cast<size_t>(i)]);
            return TorusElement(std::move(d), TorusAmbient::Sp);
        };
        auto lhs = scalars::mu_r_mul(cocycle::torus_cocycle(a, b, r, p),
                                     cocycle::torus_cocycle(mul(a, b), c, r, p));
        auto rhs = scalars::mu_r_mul(cocycle::torus_cocycle(a, mul(b, c), r, p),
                                     cocycle::torus_cocycle(b, c, r, p));
        CHECK(lhs == rhs);
    }

    // malformed Sp torus is rejected
    std::vector<PAdic> bad{PAdic::from_rational(Rat(3), p), PAdic::from_rational(Rat(3), p)};
    CHECK_THROWS_AS(TorusElement(bad, TorusAmbient::Sp), std::invalid_argument);
}

TEST_CASE("block compatibility of the cocycle") {
    const long p = 7, r = 3;
    Rng rng(5);
    for (int it = 0; it < 50; ++it) {
        auto h1 = cocycle::so_torus_diagonal({sampling::random_padic(p, rng)}, 3);
        auto h2 = cocycle::so_torus_diagonal({sampling::random_padic(p, rng)}, 3);
        auto g1 = cocycle::sp_torus_diagonal({sampling::random_padic(p, rng)});
        auto g2 = cocycle::sp_torus_diagonal({sampling::random_padic(p, rng)});
        CHECK(cocycle::block_compat_check(h1, h2, g1, g2, r, p));

        auto sk = cocycle::torus_cocycle(TorusElement(h1, TorusAmbient::GL),
                                         TorusElement(h2, TorusAmbient::GL), r, p);
        CHECK(sk.pow(r - 1) == sk.inverse());
    }

    // determinant-one precondition
    std::vector<PAdic> off{PAdic::from_rational(Rat(3), p), PAdic::from_rational(Rat(3), p),
                           PAdic::from_rational(Rat(3), p)};
    auto g = cocycle::sp_torus_diagonal({sampling::random_padic(p, rng)});
    CHECK_THROWS_AS(cocycle::block_compat_check(off, off, g, g, r, p), std::invalid_argument);
}
