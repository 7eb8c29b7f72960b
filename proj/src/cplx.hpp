#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace hartogs {

using C = std::complex<double>;
using CVec = std::vector<C>;

inline bool is_unimodular(C z, double tol = 1e-12) {
    return std::abs(std::abs(z) - 1.0) <= tol;
}

// z^x on the principal branch, z^n exactly for integer n. All fractional
// powers of a w-coordinate inside a map must come through the same principal
// log so that integer-total exponents recombine into single-valued values.
inline C principal_pow(C z, double x) {
    double n = std::nearbyint(x);
    if (n == x && std::abs(x) <= 64) {
        if (x == 0) return C(1, 0);
        C r(1, 0);
        C base = x > 0 ? z : C(1, 0) / z;
        for (long long i = 0; i < std::llabs(static_cast<long long>(n)); ++i) r *= base;
        return r;
    }
    return std::exp(x * std::log(z));
}

inline C unit_phase(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
    double t = ang(rng);
    return C(std::cos(t), std::sin(t));
}

// Independent per-sample stream so sweeps stay deterministic however the
// samples are scheduled.
inline std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL + index * 0xbf58476d1ce4e5b9ULL);
    x ^= x >> 30; x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27; x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return std::mt19937_64(x);
}

} // namespace hartogs
