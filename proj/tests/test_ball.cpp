#include <doctest.h>

#include "ball.hpp"
#include "errors.hpp"

using namespace hartogs;

namespace {

Vec cvec2(C a, C b) {
    Vec v(2);
    v << a, b;
    return v;
}

} // namespace

TEST_CASE("centered automorphism satisfies the matrix identity and kills its center") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        int k = 1 + static_cast<int>(rng() % 4);
        Vec a = random_ball_point(k, rng, 0.95);
        BallAut h = BallAut::centered(a);
        CHECK(h.identity_residual() < 1e-12);
        CHECK(h.eval(a).norm() < 1e-12);
        // random unitary twist stays in the family
        Mat u = random_unitary(k, rng);
        BallAut hu = BallAut::centered_with_unitary(u, a);
        CHECK(hu.identity_residual() < 1e-12);
        CHECK(hu.eval(a).norm() < 1e-12);
    }
}

TEST_CASE("a = 0 gives a unitary Q") {
    BallAut h = BallAut::centered(Vec::Zero(3));
    CHECK((h.Q - Mat::Identity(3, 3)).norm() == 0.0);
    CHECK(h.fixes_origin());
}

TEST_CASE("worked half-center example") {
    BallAut h = BallAut::centered(cvec2(C(0.5, 0), C(0, 0)));
    CHECK(h.identity_residual() < 1e-12);
    CHECK(h.eval(cvec2(C(0.5, 0), C(0, 0))).norm() < 1e-14);
    // Q00 = 1/s with s = sqrt(3)/2.
    CHECK(std::abs(h.Q(0, 0) - C(2.0 / std::sqrt(3.0), 0)) < 1e-13);
    CHECK(std::abs(h.Q(1, 1) - C(1, 0)) < 1e-14);
    CHECK(std::abs(h.Q(0, 1)) < 1e-14);
}

TEST_CASE("ball maps into the ball") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        int k = 1 + static_cast<int>(rng() % 3);
        BallAut h = BallAut::centered_with_unitary(random_unitary(k, rng),
                                                   random_ball_point(k, rng, 0.9));
        for (int s = 0; s < 50; ++s) {
            Vec z = random_ball_point(k, rng, 0.999);
            CHECK(h.eval(z).norm() < 1.0);
        }
    }
}

TEST_CASE("compose and inverse act pointwise") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        int k = 1 + static_cast<int>(rng() % 3);
        BallAut f = BallAut::centered_with_unitary(random_unitary(k, rng),
                                                   random_ball_point(k, rng, 0.7));
        BallAut g = BallAut::centered_with_unitary(random_unitary(k, rng),
                                                   random_ball_point(k, rng, 0.7));
        BallAut fg = BallAut::compose(f, g);
        BallAut finv = f.inverse();
        CHECK(fg.identity_residual() < 1e-11);
        CHECK(finv.identity_residual() < 1e-11);
        for (int s = 0; s < 20; ++s) {
            Vec z = random_ball_point(k, rng, 0.9);
            CHECK((fg.eval(z) - f.eval(g.eval(z))).norm() < 1e-11);
            CHECK((finv.eval(f.eval(z)) - z).norm() < 1e-11);
        }
    }
}

TEST_CASE("center too close to the sphere is rejected") {
    Vec a = cvec2(C(1.0 - 1e-10, 0), C(0, 0));
    CHECK_THROWS_AS(BallAut::centered(a), Error);
}
