#include "exponent.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "errors.hpp"

namespace hartogs {

Exponent::Exponent(Rational r, int pow) : ratio(r), lambda_pow(pow) {
    if (!ratio.is_positive()) throw Error(Errc::invalid_descriptor, "exponent must be positive");
    if (pow != 0 && pow != 1) throw Error(Errc::invalid_descriptor, "exponent lambda power must be 0 or 1");
}

std::string Exponent::str() const { return format_exponent(*this); }

double sum_abs_pow(std::span<const std::complex<double>> z, const ExponentVec& p, double lambda) {
    double s = 0.0;
    for (size_t j = 0; j < z.size(); ++j)
        s += std::pow(std::norm(z[j]), p[j].value(lambda));
    return s;
}

ExtRatio ext_ratio(const Exponent& a, const Exponent& b) {
    return ExtRatio{a.ratio / b.ratio, a.lambda_pow - b.lambda_pow};
}

bool is_nat(const ExtRatio& r) {
    return r.lambda_deg == 0 && r.ratio.is_integer() && r.ratio.num() >= 1;
}

bool is_int_diff(std::span<const LinTerm> terms) {
    return int_diff_value(terms).has_value();
}

std::optional<long long> int_diff_value(std::span<const LinTerm> terms) {
    Rational by_deg[3]; // degrees -1, 0, +1
    for (const LinTerm& t : terms) {
        if (t.r.lambda_deg < -1 || t.r.lambda_deg > 1)
            throw Error(Errc::invalid_descriptor, "ext ratio degree out of range");
        by_deg[t.r.lambda_deg + 1] = by_deg[t.r.lambda_deg + 1] + Rational(t.coeff) * t.r.ratio;
    }
    if (!by_deg[0].is_zero() || !by_deg[2].is_zero()) return std::nullopt;
    if (!by_deg[1].is_integer()) return std::nullopt;
    return by_deg[1].num();
}

std::optional<KlWitness> solve_kl(const ExtRatio& qp_src, const ExtRatio& qp_dst) {
    // Degrees must agree: a term at a nonzero L-degree can only be cancelled by
    // the other one at the same degree.
    if (qp_src.lambda_deg != qp_dst.lambda_deg) return std::nullopt;

    if (qp_src.lambda_deg != 0) {
        // l * dst = k * src exactly; with dst = a/b, src = c/d the minimal
        // solution is l = cb/g, k = ad/g, g = gcd(cb, ad).
        long long a = qp_dst.ratio.num(), b = qp_dst.ratio.den();
        long long c = qp_src.ratio.num(), d = qp_src.ratio.den();
        __int128 cb = (__int128)c * b, ad = (__int128)a * d;
        __int128 g = cb;
        { __int128 x = ad; while (x != 0) { __int128 t = g % x; g = x; x = t; } }
        long long l = (long long)(cb / g), k = (long long)(ad / g);
        return KlWitness{k, l};
    }

    // Both rational. Writing dst = a/b, src = c/d (lowest terms), l = b always
    // admits some k (l*dst integral, k = d clears the rest), so searching
    // l in [1, b], k in [1, d] finds the lexicographically minimal witness.
    long long b = qp_dst.ratio.den();
    long long d = qp_src.ratio.den();
    for (long long l = 1; l <= b; ++l) {
        for (long long k = 1; k <= d; ++k) {
            LinTerm terms[2] = {{l, qp_dst}, {-k, qp_src}};
            if (is_int_diff(terms)) return KlWitness{k, l};
        }
    }
    // Unreachable: l = b, k = d always satisfies the condition.
    throw Error(Errc::internal, "solve_kl missed its guaranteed witness");
}

namespace {

// Per-coordinate constraint on r derived from (r*qt - q)/pt_j in Z.
struct RConstraint {
    enum Kind { always, never, fixed, periodic } kind = always;
    long long fixed_r = 0;   // kind == fixed
    long long period = 1;    // kind == periodic: predicate has this period
};

RConstraint analyze(const Exponent& q, const Exponent& qt, const Exponent& ptj) {
    ExtRatio t1 = ext_ratio(qt, ptj); // coefficient of r
    ExtRatio t2 = ext_ratio(q, ptj);  // subtracted constant
    if (t1.lambda_deg != t2.lambda_deg) return {RConstraint::never};
    if (t1.lambda_deg != 0) {
        // r * t1 = t2 exactly; a single candidate if the quotient is natural.
        Rational rr = t2.ratio / t1.ratio;
        if (rr.is_integer() && rr.num() >= 1) return {RConstraint::fixed, rr.num()};
        return {RConstraint::never};
    }
    // Rational case: with qt = a/b, q = c/d, ptj = e/f the condition reads
    // f*(r*a*d - c*b) = 0 (mod b*d*e). Shifting r by b*d*e shifts the left
    // side by f*a*d*(b*d*e), a multiple of the modulus, so b*d*e is a period.
    long long b = qt.ratio.den(), d = q.ratio.den(), e = ptj.ratio.num();
    __int128 per = (__int128)b * d * e;
    if (per > INT64_MAX) throw std::overflow_error("solve_r period overflow");
    return {RConstraint::periodic, 0, (long long)per};
}

bool holds_at(long long r, const Exponent& q, const Exponent& qt, const ExponentVec& pt) {
    for (const Exponent& ptj : pt) {
        LinTerm terms[2] = {{r, ext_ratio(qt, ptj)}, {-1, ext_ratio(q, ptj)}};
        if (!is_int_diff(terms)) return false;
    }
    return true;
}

} // namespace

long long solve_r_period(const Exponent& q, const Exponent& qt, const ExponentVec& pt) {
    long long period = 1;
    for (const Exponent& ptj : pt) {
        RConstraint c = analyze(q, qt, ptj);
        if (c.kind == RConstraint::periodic) period = lcm_ll(period, c.period);
    }
    return period;
}

std::optional<long long> solve_r(const Exponent& q, const Exponent& qt, const ExponentVec& pt) {
    std::optional<long long> forced;
    for (const Exponent& ptj : pt) {
        RConstraint c = analyze(q, qt, ptj);
        if (c.kind == RConstraint::never) return std::nullopt;
        if (c.kind == RConstraint::fixed) {
            if (forced && *forced != c.fixed_r) return std::nullopt;
            forced = c.fixed_r;
        }
    }
    if (forced) {
        return holds_at(*forced, q, qt, pt) ? forced : std::nullopt;
    }
    long long period = solve_r_period(q, qt, pt);
    for (long long r = 1; r <= period; ++r)
        if (holds_at(r, q, qt, pt)) return r;
    return std::nullopt;
}

Exponent parse_exponent(const std::string& s) {
    std::string body = s;
    int pow = 0;
    if (body.size() >= 2 && (body.substr(body.size() - 2) == "*L" || body.substr(body.size() - 2) == "*l")) {
        pow = 1;
        body = body.substr(0, body.size() - 2);
    }
    auto slash = body.find('/');
    try {
        size_t used = 0;
        long long num = std::stoll(body.substr(0, slash), &used);
        long long den = 1;
        if (slash == std::string::npos) {
            if (used != body.size()) throw std::invalid_argument(s);
        } else {
            if (used != slash) throw std::invalid_argument(s);
            std::string dpart = body.substr(slash + 1);
            den = std::stoll(dpart, &used);
            if (used != dpart.size()) throw std::invalid_argument(s);
        }
        if (num <= 0 || den <= 0) throw std::invalid_argument(s);
        return Exponent(Rational(num, den), pow);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(Errc::parse_error, "bad exponent string: '" + s + "'");
    }
}

std::string format_exponent(const Exponent& e) {
    std::string s = e.ratio.str();
    if (e.lambda_pow == 1) s += "*L";
    return s;
}

ExponentVec parse_exponent_vec(const std::vector<std::string>& items) {
    if (items.empty()) throw Error(Errc::parse_error, "exponent vector must be nonempty");
    ExponentVec v;
    v.reserve(items.size());
    for (const std::string& s : items) v.push_back(parse_exponent(s));
    return v;
}

} // namespace hartogs
