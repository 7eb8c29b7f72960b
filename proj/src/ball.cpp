#include "ball.hpp"

#include "errors.hpp"

namespace hartogs {

namespace {

double center_s(const Vec& a) {
    return std::sqrt(1.0 - a.squaredNorm());
}

// Projective representation: (k+1)x(k+1) matrix ((M u)(v c)) acting as
// z -> (M z + u)/(v z + c). The Stein form embeds as M = sQ, u = -sQa,
// v = -a^H, c = 1; composition is the matrix product.
Mat to_projective(const BallAut& h) {
    const int k = h.dim();
    const double s = center_s(h.a);
    Mat t(k + 1, k + 1);
    t.topLeftCorner(k, k) = s * h.Q;
    t.topRightCorner(k, 1) = -s * (h.Q * h.a);
    t.bottomLeftCorner(1, k) = -h.a.adjoint();
    t(k, k) = C(1, 0);
    return t;
}

BallAut from_projective(Mat t) {
    const int k = static_cast<int>(t.rows()) - 1;
    if (std::abs(t(k, k)) < 1e-14)
        throw Error(Errc::internal, "projective matrix with vanishing corner");
    t /= t(k, k);
    BallAut out;
    out.a = -t.bottomLeftCorner(1, k).adjoint();
    if (out.a.norm() >= 1.0)
        throw Error(Errc::internal, "projective matrix is not a ball automorphism");
    const double s = center_s(out.a);
    out.Q = t.topLeftCorner(k, k) / s;
    return out;
}

} // namespace

Vec BallAut::eval(const Vec& z) const {
    if (dim() == 0) return Vec(0);
    return radial_factor(z) * (Q * (z - a));
}

C BallAut::radial_factor(const Vec& z) const {
    if (dim() == 0) return C(1, 0);
    C inner = (z.array() * a.conjugate().array()).sum();
    return center_s(a) / (C(1, 0) - inner);
}

double BallAut::identity_residual() const {
    const int k = dim();
    if (k == 0) return 0.0;
    Mat inner = Mat::Identity(k, k) - a.conjugate() * a.transpose();
    Mat lhs = Q.conjugate() * inner * Q.transpose();
    return (lhs - Mat::Identity(k, k)).norm();
}

bool BallAut::mixes_coordinates(double tol) const {
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            if (i != j && std::abs(Q(i, j)) > tol) return true;
    return false;
}

BallAut BallAut::inverse() const {
    if (dim() == 0) return *this;
    Mat t = to_projective(*this);
    return from_projective(t.inverse());
}

BallAut BallAut::compose(const BallAut& outer, const BallAut& inner) {
    if (outer.dim() != inner.dim())
        throw Error(Errc::dimension_mismatch, "ball automorphism dimensions differ");
    if (outer.dim() == 0) return outer;
    return from_projective(to_projective(outer) * to_projective(inner));
}

BallAut BallAut::centered(const Vec& a) {
    const int k = static_cast<int>(a.size());
    if (a.norm() >= 1.0 - 1e-9)
        throw Error(Errc::center_too_close, "ball center too close to the sphere");
    BallAut out;
    out.a = a;
    out.Q = Mat::Identity(k, k);
    const double t = a.squaredNorm();
    if (t > 0) {
        // ((I - a a^H)^{-1})^{1/2} = I + (1-s)/(s t) a a^H with s = sqrt(1-t).
        const double s = std::sqrt(1.0 - t);
        out.Q += ((1.0 - s) / (s * t)) * (a * a.adjoint());
    }
    return out;
}

BallAut BallAut::centered_with_unitary(const Mat& U, const Vec& a) {
    BallAut base = centered(a);
    base.Q = U * base.Q;
    return base;
}

BallAut BallAut::identity(int k) {
    BallAut out;
    out.a = Vec::Zero(k);
    out.Q = Mat::Identity(k, k);
    return out;
}

Mat random_unitary(int k, std::mt19937_64& rng) {
    if (k == 0) return Mat(0, 0);
    std::normal_distribution<double> g(0.0, 1.0);
    Mat z(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) z(i, j) = C(g(rng), g(rng));
    Eigen::HouseholderQR<Mat> qr(z);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < k; ++j) {
        C d = r(j, j);
        q.col(j) *= (std::abs(d) > 0 ? d / std::abs(d) : C(1, 0));
    }
    return q;
}

Vec random_ball_point(int k, std::mt19937_64& rng, double max_norm) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Vec z(k);
    for (int i = 0; i < k; ++i) z(i) = C(g(rng), g(rng));
    double norm = z.norm();
    if (norm == 0) return Vec::Zero(k);
    double radius = max_norm * std::pow(u(rng), 1.0 / (2 * k));
    return z * (radius / norm);
}

} // namespace hartogs
