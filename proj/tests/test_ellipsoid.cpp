#include <doctest.h>

#include "ellipsoid.hpp"
#include "errors.hpp"
#include "verify.hpp"

using namespace hartogs;

namespace {

constexpr double kLambda = M_SQRT2;

ExponentVec ones(int n) { return ExponentVec(n, Exponent(1)); }

} // namespace

TEST_CASE("membership verdicts") {
    EllipsoidDomain ball{ones(2)};
    CVec pythagoras{C(0.6, 0), C(0.8, 0)};
    CHECK(ep_membership(ball, pythagoras, 1e-9, kLambda) == EpVerdict::Boundary);
    CVec origin{C(0, 0), C(0, 0)};
    CHECK(ep_membership(ball, origin, 1e-9, kLambda) == EpVerdict::Interior);

    EllipsoidDomain e22{{Exponent(2), Exponent(2)}};
    CVec outside{C(0.9, 0), C(0.9, 0)};
    CHECK(ep_membership(e22, outside, 1e-9, kLambda) == EpVerdict::Outside);
}

TEST_CASE("existence decisions") {
    ExponentVec p{Exponent(2), Exponent(2)}, q{Exponent(1, 2), Exponent(1, 2)};
    auto sigma = ep_exists(p, q);
    REQUIRE(sigma.has_value());
    CHECK(*sigma == Perm{0, 1});

    CHECK(ep_exists(p, p).has_value());
    CHECK_FALSE(ep_exists({Exponent(2), Exponent(3)}, {Exponent(2), Exponent(2)}).has_value());
}

TEST_CASE("canonical map is the plain power map") {
    auto m = ep_canonical({Exponent(4), Exponent(2)}, {Exponent(2), Exponent(1)});
    REQUIRE(m.has_value());
    CVec z{C(0.5, 0.1), C(-0.2, 0.3)};
    CVec y = m->eval(z, kLambda);
    CHECK(std::abs(y[0] - z[0] * z[0]) < 1e-15);
    CHECK(std::abs(y[1] - z[1] * z[1]) < 1e-15);
    CHECK(m->fixes_origin());
    // Power exponents combine to p_sigma/q.
    CHECK(m->r == std::vector<long long>{2, 2});
    CHECK(m->alpha == std::vector<long long>{1, 1});
}

TEST_CASE("canonical power vector equals p_sigma/q for integer data") {
    // q has no entry 1, p, q natural: the factorization collapses to a power
    // map followed by nothing else.
    ExponentVec p{Exponent(8), Exponent(6)}, q{Exponent(2), Exponent(3)};
    auto m = ep_canonical(p, q);
    REQUIRE(m.has_value());
    for (int j = 0; j < 2; ++j)
        CHECK(m->r[j] == ext_ratio(p[m->sigma[j]], q[j]).ratio.num());
}

TEST_CASE("automorphism worked example on E_(1,2)") {
    ExponentVec p{Exponent(1), Exponent(2)};
    Vec a(1);
    a << C(0.5, 0);
    EllipsoidAut aut = EllipsoidAut::make(p, BallAut::centered(a), {C(1, 0)}, {0, 1});
    CVec z{C(0.5, 0), C(0.3, 0)};
    CVec y = aut.eval(z, kLambda);
    CHECK(std::abs(y[0]) < 1e-14);
    double expected = 0.3 * std::sqrt(std::sqrt(0.75) / 0.75);
    CHECK(std::abs(y[1] - C(expected, 0)) < 1e-13);
}

TEST_CASE("identity automorphism and eval guard") {
    ExponentVec p{Exponent(1), Exponent(3, 2)};
    EllipsoidAut id = EllipsoidAut::identity(p);
    CVec z{C(0.3, 0.2), C(0.4, -0.1)};
    CVec y = id.eval(z, kLambda);
    for (int j = 0; j < 2; ++j) CHECK(std::abs(y[j] - z[j]) < 1e-15);

    CVec far{C(2, 0), C(0, 0)};
    CHECK_THROWS_AS(id.eval(far, kLambda), Error);
}

TEST_CASE("automorphisms preserve the boundary sum") {
    std::mt19937_64 seeds(43);
    ExponentVec p{Exponent(1), Exponent(1), Exponent(5, 2)};
    for (int trial = 0; trial < 10; ++trial) {
        EllipsoidAut aut = random_ellipsoid_aut(p, seeds(), false);
        auto boundary = sample_ellipsoid(p, true, 50, seeds(), kLambda);
        for (const CVec& z : boundary) {
            double s = sum_abs_pow(aut.eval(z, kLambda), p, kLambda);
            CHECK(std::abs(s - 1.0) < 1e-10);
        }
        // interior stays interior
        auto inner = sample_ellipsoid(p, false, 20, seeds(), kLambda);
        for (const CVec& z : inner)
            CHECK(sum_abs_pow(aut.eval(z, kLambda), p, kLambda) < 1.0);
    }
}

TEST_CASE("automorphism group operations") {
    std::mt19937_64 seeds(47);
    ExponentVec p{Exponent(1), Exponent(1), Exponent(2), Exponent(2)};
    for (int trial = 0; trial < 10; ++trial) {
        EllipsoidAut f = random_ellipsoid_aut(p, seeds(), false);
        EllipsoidAut g = random_ellipsoid_aut(p, seeds(), false);
        EllipsoidAut fg = EllipsoidAut::compose(f, g, kLambda);
        EllipsoidAut finv = f.inverse(kLambda);
        auto pts = sample_ellipsoid(p, false, 25, seeds(), kLambda);
        for (const CVec& z : pts) {
            CVec lhs = fg.eval(z, kLambda);
            CVec rhs = f.eval(g.eval(z, kLambda), kLambda);
            CVec back = finv.eval(f.eval(z, kLambda), kLambda);
            for (int j = 0; j < 4; ++j) {
                CHECK(std::abs(lhs[j] - rhs[j]) < 1e-10);
                CHECK(std::abs(back[j] - z[j]) < 1e-10);
            }
        }
    }
}

TEST_CASE("proper maps send boundary to boundary and interior to interior") {
    ExponentVec p{Exponent(2), Exponent(2)}, q{Exponent(1, 2), Exponent(1, 2)};
    std::mt19937_64 seeds(53);

    // Recentered middle automorphism: psi_{(2,2)} o phi o psi_{(2,2)}.
    Vec a(2);
    a << C(0.3, 0), C(0, 0);
    EllipsoidAut phi = EllipsoidAut::make(ones(2), BallAut::centered(a),
                                          {}, {0, 1});
    EllipsoidProperMap m = EllipsoidProperMap::make(p, q, {0, 1}, {2, 2}, phi);
    CHECK_FALSE(m.fixes_origin());

    for (const CVec& z : sample_ellipsoid(p, true, 100, seeds(), kLambda)) {
        double s = sum_abs_pow(m.eval(z, kLambda), q, kLambda);
        CHECK(std::abs(s - 1.0) < 1e-10);
    }
    for (const CVec& z : sample_ellipsoid(p, false, 100, seeds(), kLambda)) {
        double s = sum_abs_pow(m.eval(z, kLambda), q, kLambda);
        CHECK(s < 1.0);
    }
}

TEST_CASE("descriptor invariants are enforced") {
    ExponentVec p{Exponent(2), Exponent(2)}, q{Exponent(1, 2), Exponent(1, 2)};
    // r not dividing p_sigma/q
    CHECK_THROWS_AS(EllipsoidProperMap::make(p, q, {0, 1}, {3, 3}, EllipsoidAut::identity(q)),
                    Error);
    // phi on the wrong ellipsoid
    CHECK_THROWS_AS(EllipsoidProperMap::make(p, q, {0, 1}, {4, 4}, EllipsoidAut::identity(q)),
                    Error);
    // p_sigma/q not natural
    CHECK_FALSE(ep_exists({Exponent(3, 2), Exponent(2)}, {Exponent(1), Exponent(3)}).has_value());
}
