#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rational.hpp"

namespace hartogs {

// Exponents are exact values r * L^t with r a positive rational and t in {0,1},
// for one fixed formal transcendental L. Keeping L symbolic makes every
// rationality / integrality test exactly decidable while still covering the
// irrational-exponent branches of the mapping theorems. Numerics substitute a
// concrete value for L (default sqrt(2)) only at evaluation time.
struct Exponent {
    Rational ratio{1};   // > 0, lowest terms
    int lambda_pow = 0;  // 0 or 1

    Exponent() = default;
    Exponent(Rational r, int pow = 0);
    Exponent(long long n, long long d = 1, int pow = 0) : Exponent(Rational(n, d), pow) {}

    bool operator==(const Exponent& o) const {
        return ratio == o.ratio && lambda_pow == o.lambda_pow;
    }

    double value(double lambda) const {
        return lambda_pow ? ratio.value() * lambda : ratio.value();
    }

    // is this exponent a natural number (so 1/exponent tests, q in N, ...)
    bool is_natural() const { return lambda_pow == 0 && ratio.is_integer() && ratio.num() >= 1; }

    std::string str() const;
};

using ExponentVec = std::vector<Exponent>;

double sum_abs_pow(std::span<const std::complex<double>> z, const ExponentVec& p, double lambda);

// Quotient of two exponents: r * L^d with d in {-1,0,1}.
struct ExtRatio {
    Rational ratio{1};
    int lambda_deg = 0;

    bool operator==(const ExtRatio& o) const {
        return ratio == o.ratio && lambda_deg == o.lambda_deg;
    }
};

ExtRatio ext_ratio(const Exponent& a, const Exponent& b);

// ratio in N at L-degree 0
bool is_nat(const ExtRatio& r);

// One term of an integer linear combination sum c_i * r_i.
struct LinTerm {
    long long coeff;
    ExtRatio r;
};

// True iff the combination is an integer: the L-degree +-1 parts must cancel
// exactly (1, L, 1/L are Q-linearly independent for transcendental L) and the
// degree-0 part must be integral.
bool is_int_diff(std::span<const LinTerm> terms);

// The integer value when is_int_diff holds.
std::optional<long long> int_diff_value(std::span<const LinTerm> terms);

struct KlWitness {
    long long k = 0;
    long long l = 0;
};

// Smallest (l, then k), both >= 1, with l*qp_dst - k*qp_src an integer.
// qp_src = q/p of the source triangle, qp_dst = q~/p~ of the target.
std::optional<KlWitness> solve_kl(const ExtRatio& qp_src, const ExtRatio& qp_dst);

// Smallest r >= 1 with (r*qt - q)/pt[j] integral for every j, if one exists.
std::optional<long long> solve_r(const Exponent& q, const Exponent& qt, const ExponentVec& pt);

// A period of the solve_r predicate: if no r in [1, P] works, none does.
// Exposed so tests can check periodicity independently.
long long solve_r_period(const Exponent& q, const Exponent& qt, const ExponentVec& pt);

// String form used everywhere in the JSON interfaces: "a", "a/b", "a*L", "a/b*L".
Exponent parse_exponent(const std::string& s);
std::string format_exponent(const Exponent& e);

ExponentVec parse_exponent_vec(const std::vector<std::string>& items);

} // namespace hartogs
