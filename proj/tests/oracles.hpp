#pragma once

// Brute-force reference implementations. Everything here scans exhaustively
// and independently re-derives its own search bounds, so the fast deciders
// can be checked against first principles.

#include <algorithm>
#include <optional>
#include <vector>

#include "exponent.hpp"
#include "hartogs_domain.hpp"
#include "matching.hpp"

namespace oracle {

using namespace hartogs;

// Lexicographically minimal (l, k), scanning l exhaustively up to a derived
// bound. Rational case: l = den(dst), k = den(src) is always a witness, so
// scanning that box is conclusive. Equal nonzero lambda-degree: the graded
// parts must cancel exactly, so k is determined by l and a witness has
// l <= num(src)*den(dst). Mismatched degrees carry no witness at all since
// 1, L, 1/L are Q-linearly independent.
inline std::optional<KlWitness> solve_kl(const ExtRatio& qp_src, const ExtRatio& qp_dst) {
    if (qp_src.lambda_deg != qp_dst.lambda_deg) return std::nullopt;
    if (qp_src.lambda_deg == 0) {
        for (long long l = 1; l <= qp_dst.ratio.den(); ++l)
            for (long long k = 1; k <= qp_src.ratio.den(); ++k) {
                LinTerm terms[2] = {{l, qp_dst}, {-k, qp_src}};
                if (is_int_diff(terms)) return KlWitness{k, l};
            }
        return std::nullopt;
    }
    for (long long l = 1; l <= qp_src.ratio.num() * qp_dst.ratio.den(); ++l) {
        Rational k = Rational(l) * qp_dst.ratio / qp_src.ratio;
        if (!k.is_integer() || k.num() < 1) continue;
        LinTerm terms[2] = {{l, qp_dst}, {-k.num(), qp_src}};
        if (is_int_diff(terms)) return KlWitness{k.num(), l};
    }
    return std::nullopt;
}

inline std::vector<Perm> perm_matchings(const ExponentVec& a, const ExponentVec& b) {
    const int n = static_cast<int>(a.size());
    Perm sigma = identity_perm(n);
    std::vector<Perm> out;
    std::sort(sigma.begin(), sigma.end());
    do {
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) ok = is_nat(ext_ratio(a[sigma[j]], b[j]));
        if (ok) out.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

inline bool r_condition(long long r, const Exponent& q, const Exponent& qt, const ExponentVec& pt) {
    for (const Exponent& ptj : pt) {
        LinTerm terms[2] = {{r, ext_ratio(qt, ptj)}, {-1, ext_ratio(q, ptj)}};
        if (!is_int_diff(terms)) return false;
    }
    return true;
}

// Own period bound: per coordinate, clearing denominators in
// (r a/b - c/d) * f/e gives f (r a d - c b) = 0 mod (b d e); the predicate is
// b*d*e periodic. lambda-graded coordinates admit at most one r, bounded by
// (c b)/(a d) <= c*b.
inline long long r_scan_bound(const Exponent& q, const Exponent& qt, const ExponentVec& pt) {
    long long bound = 1;
    for (const Exponent& ptj : pt) {
        long long b = qt.ratio.den(), d = q.ratio.den(), e = ptj.ratio.num();
        bound = lcm_ll(bound, b * d * e);
        bound = std::max(bound, q.ratio.num() * qt.ratio.den());
    }
    return bound;
}

inline std::optional<long long> solve_r(const Exponent& q, const Exponent& qt,
                                        const ExponentVec& pt) {
    long long bound = r_scan_bound(q, qt, pt);
    for (long long r = 1; r <= bound; ++r)
        if (r_condition(r, q, qt, pt)) return r;
    return std::nullopt;
}

inline bool exists_proper(const HartogsDomain& src, const HartogsDomain& dst) {
    const int n = src.n(), m = src.m();
    if (n == 1 && m == 1)
        return oracle::solve_kl(ext_ratio(src.q[0], src.p[0]), ext_ratio(dst.q[0], dst.p[0]))
            .has_value();
    if (n == 1) {
        if (!is_nat(ext_ratio(src.p[0], dst.p[0]))) return false;
        return !oracle::perm_matchings(src.q, dst.q).empty();
    }
    if (m == 1) {
        if (oracle::perm_matchings(src.p, dst.p).empty()) return false;
        return oracle::solve_r(src.q[0], dst.q[0], dst.p).has_value();
    }
    return !oracle::perm_matchings(src.p, dst.p).empty() &&
           !oracle::perm_matchings(src.q, dst.q).empty();
}

} // namespace oracle
