#pragma once

#include "cplx.hpp"

namespace hartogs {

struct BlaschkeZero {
    C alpha;      // |alpha| < 1
    int mult = 1; // >= 1
};

// Finite Blaschke product u * prod ((t - alpha)/(1 - conj(alpha) t))^mult.
// An empty zero list is the unimodular constant u.
struct BlaschkeProduct {
    std::vector<BlaschkeZero> zeros;
    C unimodular{1.0, 0.0};

    C eval(C t) const;
    int degree() const;
    bool vanishes_at_zero(double tol = 1e-14) const;
    bool is_constant() const { return degree() == 0; }
    bool valid(std::string* why = nullptr) const;
};

// The single Moebius factor eta * (t - alpha)/(1 - conj(alpha) t); the disc
// automorphisms. Closed under composition and inversion.
struct DiscMoebius {
    C alpha{0.0, 0.0};
    C eta{1.0, 0.0};

    C eval(C t) const;
    bool fixes_origin(double tol = 1e-14) const { return std::abs(alpha) <= tol; }
    DiscMoebius inverse() const;
    static DiscMoebius compose(const DiscMoebius& outer, const DiscMoebius& inner);
    static DiscMoebius rotation(C eta) { return DiscMoebius{C(0, 0), eta}; }
};

} // namespace hartogs
