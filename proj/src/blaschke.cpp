#include "blaschke.hpp"

#include <string>

#include "errors.hpp"

namespace hartogs {

C BlaschkeProduct::eval(C t) const {
    C v = unimodular;
    for (const BlaschkeZero& z : zeros) {
        C factor = (t - z.alpha) / (C(1, 0) - std::conj(z.alpha) * t);
        for (int i = 0; i < z.mult; ++i) v *= factor;
    }
    return v;
}

int BlaschkeProduct::degree() const {
    int d = 0;
    for (const BlaschkeZero& z : zeros) d += z.mult;
    return d;
}

bool BlaschkeProduct::vanishes_at_zero(double tol) const {
    for (const BlaschkeZero& z : zeros)
        if (std::abs(z.alpha) <= tol) return true;
    return false;
}

bool BlaschkeProduct::valid(std::string* why) const {
    for (const BlaschkeZero& z : zeros) {
        if (std::abs(z.alpha) >= 1.0) {
            if (why) *why = "blaschke zero outside the open disc";
            return false;
        }
        if (z.mult < 1) {
            if (why) *why = "blaschke multiplicity must be >= 1";
            return false;
        }
    }
    if (!is_unimodular(unimodular, 1e-12)) {
        if (why) *why = "blaschke constant not unimodular";
        return false;
    }
    return true;
}

C DiscMoebius::eval(C t) const {
    return eta * (t - alpha) / (C(1, 0) - std::conj(alpha) * t);
}

namespace {

// 2x2 matrix ((a b)(c d)) acting as t -> (a t + b)/(c t + d).
struct M2 {
    C a, b, c, d;
};

M2 as_matrix(const DiscMoebius& m) {
    return M2{m.eta, -m.eta * m.alpha, -std::conj(m.alpha), C(1, 0)};
}

DiscMoebius from_matrix(const M2& m) {
    if (std::abs(m.a) == 0.0)
        throw Error(Errc::internal, "degenerate disc moebius");
    DiscMoebius out;
    out.alpha = -m.b / m.a;
    out.eta = m.a / m.d;
    if (std::abs(out.alpha) >= 1.0 || !is_unimodular(out.eta, 1e-9))
        throw Error(Errc::internal, "matrix is not a disc automorphism");
    out.eta /= std::abs(out.eta);
    return out;
}

} // namespace

DiscMoebius DiscMoebius::inverse() const {
    M2 m = as_matrix(*this);
    return from_matrix(M2{m.d, -m.b, -m.c, m.a});
}

DiscMoebius DiscMoebius::compose(const DiscMoebius& outer, const DiscMoebius& inner) {
    M2 f = as_matrix(outer), g = as_matrix(inner);
    return from_matrix(M2{f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d,
                          f.c * g.a + f.d * g.c, f.c * g.b + f.d * g.d});
}

} // namespace hartogs
