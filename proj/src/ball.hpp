#pragma once

#include <Eigen/Dense>

#include "cplx.hpp"

namespace hartogs {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Unit-ball automorphism in the Stein normal form
//   H(z) = sqrt(1 - |a|^2) / (1 - <z,a>) * Q (z - a),
// where Q satisfies conj(Q) (I - conj(a) a^T) Q^T = I. H(a) = 0.
struct BallAut {
    Vec a;  // center sent to the origin
    Mat Q;

    int dim() const { return static_cast<int>(a.size()); }

    Vec eval(const Vec& z) const;

    // Scalar factor sqrt(1-|a|^2)/(1 - <z,a>); shared by the ellipsoid
    // automorphism formula. Has positive real part on the ball.
    C radial_factor(const Vec& z) const;

    // Residual of the defining matrix identity, Frobenius norm.
    double identity_residual() const;

    bool fixes_origin(double tol = 1e-13) const { return a.size() == 0 || a.norm() <= tol; }

    // True if some Q entry mixes two coordinates (off-diagonal weight).
    bool mixes_coordinates(double tol = 1e-13) const;

    BallAut inverse() const;
    static BallAut compose(const BallAut& outer, const BallAut& inner);

    // Q = principal square root of (I - a a^H)^{-1}; closed form for the
    // rank-one perturbation of the identity. Throws if |a| >= 1 - 1e-9.
    static BallAut centered(const Vec& a);

    // Q = U * Q0 with U unitary; stays in the family since U^H U = I.
    static BallAut centered_with_unitary(const Mat& U, const Vec& a);

    static BallAut identity(int k);
};

Mat random_unitary(int k, std::mt19937_64& rng);
Vec random_ball_point(int k, std::mt19937_64& rng, double max_norm = 0.95);

} // namespace hartogs
