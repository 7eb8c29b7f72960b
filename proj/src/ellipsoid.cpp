#include "ellipsoid.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace hartogs {

EpVerdict ep_membership(const EllipsoidDomain& e, std::span<const C> z, double tol, double lambda) {
    if (static_cast<int>(z.size()) != e.dim())
        throw Error(Errc::dimension_mismatch, "point dimension does not match ellipsoid");
    double s = sum_abs_pow(z, e.p, lambda);
    if (std::abs(s - 1.0) <= tol) return EpVerdict::Boundary;
    return s < 1.0 ? EpVerdict::Interior : EpVerdict::Outside;
}

namespace {

const Exponent kOne{1, 1, 0};

std::vector<int> normalization_order(const ExponentVec& p) {
    std::vector<int> idx(p.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
        return (p[i] == kOne) > (p[j] == kOne);
    });
    return idx;
}

int count_ones(const ExponentVec& p) {
    int k = 0;
    for (const Exponent& e : p) k += (e == kOne);
    return k;
}

// Deterministic interior reference point with all coordinates nonzero and
// generic phases; used to pin the rotation parameters after composition.
CVec reference_point(const ExponentVec& p, double lambda) {
    const int n = static_cast<int>(p.size());
    CVec z(n);
    for (int j = 0; j < n; ++j) {
        double share = 0.5 / n;
        double radius = std::pow(share, 1.0 / (2.0 * p[j].value(lambda)));
        double angle = 0.37 + 0.71 * j;
        z[j] = radius * C(std::cos(angle), std::sin(angle));
    }
    return z;
}

} // namespace

CVec EllipsoidAut::eval(std::span<const C> z, double lambda) const {
    const int n = dim();
    if (static_cast<int>(z.size()) != n)
        throw Error(Errc::dimension_mismatch, "point dimension does not match automorphism");
    if (sum_abs_pow(z, p, lambda) > 1.0 + 1e-7)
        throw Error(Errc::not_in_domain, "point lies outside the closed ellipsoid");
    Vec zn(n);
    for (int i = 0; i < n; ++i) zn(i) = z[norm[i]];

    CVec yn(n);
    if (k > 0) {
        Vec ball = H.eval(zn.head(k));
        for (int i = 0; i < k; ++i) yn[i] = ball(i);
    }
    C radial = H.radial_factor(zn.head(k));
    for (int i = k; i < n; ++i) {
        double power = 1.0 / p[norm[i]].value(lambda);
        yn[i] = zetas[i - k] * zn(sigma[i]) * principal_pow(radial, power);
    }

    CVec y(n);
    for (int i = 0; i < n; ++i) y[norm[i]] = yn[i];
    return y;
}

EllipsoidAut EllipsoidAut::identity(const ExponentVec& p) {
    EllipsoidAut a;
    a.p = p;
    a.norm = normalization_order(p);
    a.k = count_ones(p);
    a.H = BallAut::identity(a.k);
    a.zetas.assign(p.size() - a.k, C(1, 0));
    a.sigma = identity_perm(static_cast<int>(p.size()));
    return a;
}

EllipsoidAut EllipsoidAut::make(const ExponentVec& p, const BallAut& ball, const CVec& zetas,
                                const Perm& sigma_original) {
    const int n = static_cast<int>(p.size());
    EllipsoidAut a;
    a.p = p;
    a.norm = normalization_order(p);
    a.k = count_ones(p);
    if (ball.dim() != a.k)
        throw Error(Errc::invalid_descriptor, "ball automorphism dimension must equal the count of exponent-one slots");
    if (static_cast<int>(zetas.size()) != n - a.k)
        throw Error(Errc::invalid_descriptor, "need one unimodular factor per non-ball slot");
    for (C zeta : zetas)
        if (!is_unimodular(zeta, 1e-12))
            throw Error(Errc::invalid_descriptor, "rotation factor is not unimodular");
    if (!perm_fixes(p, sigma_original))
        throw Error(Errc::invalid_descriptor, "permutation must fix the exponent vector");
    if (ball.identity_residual() > 1e-10)
        throw Error(Errc::invalid_descriptor, "ball matrix violates its defining identity");

    // Transport sigma to normalized indices. A permutation fixing p keeps
    // exponent-one slots among themselves, and there the evaluation formula
    // never consults sigma (the unitary part of H subsumes it), so the stored
    // permutation is normalized to the identity on the ball block.
    Perm inv_norm = inverse_perm(a.norm);
    Perm sn(n);
    for (int i = 0; i < n; ++i)
        sn[i] = i < a.k ? i : inv_norm[sigma_original[a.norm[i]]];
    a.H = ball;
    a.sigma = sn;
    a.zetas = zetas;
    return a;
}

EllipsoidAut EllipsoidAut::inverse(double lambda) const {
    EllipsoidAut inv;
    inv.p = p;
    inv.norm = norm;
    inv.k = k;
    inv.H = H.inverse();
    inv.sigma = inverse_perm(sigma);
    inv.zetas.assign(zetas.size(), C(1, 0));

    // The rotation parts of the inverse differ from 1/zeta by a constant
    // phase coming from the radial factors; one evaluation pins them.
    CVec zstar = reference_point(p, lambda);
    CVec fw = eval(zstar, lambda);
    CVec back = inv.eval(fw, lambda);
    const int n = dim();
    for (int i = k; i < n; ++i) {
        int orig = norm[i];
        C ratio = zstar[orig] / back[orig];
        if (!is_unimodular(ratio, 1e-8))
            throw Error(Errc::internal, "ellipsoid inverse refit drifted off the unit circle");
        inv.zetas[i - k] = ratio / std::abs(ratio);
    }
    return inv;
}

EllipsoidAut EllipsoidAut::compose(const EllipsoidAut& outer, const EllipsoidAut& inner, double lambda) {
    if (outer.p.size() != inner.p.size())
        throw Error(Errc::dimension_mismatch, "automorphism dimensions differ");
    for (size_t j = 0; j < outer.p.size(); ++j)
        if (!(outer.p[j] == inner.p[j]))
            throw Error(Errc::invalid_descriptor, "automorphisms live on different ellipsoids");

    EllipsoidAut c;
    c.p = outer.p;
    c.norm = outer.norm;
    c.k = outer.k;
    c.H = BallAut::compose(outer.H, inner.H);
    c.sigma = compose_perm(inner.sigma, outer.sigma);
    c.zetas.assign(outer.zetas.size(), C(1, 0));

    CVec zstar = reference_point(c.p, lambda);
    CVec expect = outer.eval(inner.eval(zstar, lambda), lambda);
    CVec got = c.eval(zstar, lambda);
    const int n = c.dim();
    for (int i = c.k; i < n; ++i) {
        int orig = c.norm[i];
        C ratio = expect[orig] / got[orig];
        if (!is_unimodular(ratio, 1e-8))
            throw Error(Errc::internal, "ellipsoid composition refit drifted off the unit circle");
        c.zetas[i - c.k] = ratio / std::abs(ratio);
    }
    return c;
}

std::string EllipsoidAut::describe_family() const {
    std::string s = "ball block of dimension " + std::to_string(k);
    s += ", " + std::to_string(dim() - k) + " rotation slot(s)";
    return s;
}

EllipsoidAut random_ellipsoid_aut(const ExponentVec& p, std::uint64_t seed, bool fix_origin) {
    std::mt19937_64 rng(seed);
    const int n = static_cast<int>(p.size());
    std::vector<int> order = normalization_order(p);
    const int k = count_ones(p);

    Mat u = random_unitary(k, rng);
    Vec a = Vec::Zero(k);
    if (!fix_origin && k > 0) a = random_ball_point(k, rng, 0.6);
    BallAut ball = BallAut::centered_with_unitary(u, a);

    CVec zetas(n - k);
    for (C& z : zetas) z = unit_phase(rng);

    // Random permutation within equal-exponent classes; exponent-one slots
    // stay put (the unitary already mixes them).
    Perm sigma = identity_perm(n);
    std::vector<bool> done(n, false);
    for (int i = 0; i < n; ++i) {
        if (done[i] || p[i] == kOne) continue;
        std::vector<int> cls;
        for (int j = i; j < n; ++j)
            if (!done[j] && p[j] == p[i]) { cls.push_back(j); done[j] = true; }
        std::vector<int> shuffled = cls;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (size_t t = 0; t < cls.size(); ++t) sigma[cls[t]] = shuffled[t];
    }
    return EllipsoidAut::make(p, ball, zetas, sigma);
}

EllipsoidProperMap EllipsoidProperMap::make(const ExponentVec& p, const ExponentVec& q,
                                            const Perm& sigma, const std::vector<long long>& r,
                                            const EllipsoidAut& phi) {
    const int n = static_cast<int>(p.size());
    if (q.size() != p.size() || sigma.size() != p.size() || r.size() != p.size())
        throw Error(Errc::dimension_mismatch, "map descriptor sizes disagree");
    EllipsoidProperMap m;
    m.p = p;
    m.q = q;
    m.sigma = sigma;
    m.r = r;
    m.phi = phi;
    m.alpha.resize(n);
    m.intermediate.resize(n);
    std::vector<bool> hit(n, false);
    for (int j = 0; j < n; ++j) {
        if (sigma[j] < 0 || sigma[j] >= n || hit[sigma[j]])
            throw Error(Errc::invalid_descriptor, "sigma is not a permutation");
        hit[sigma[j]] = true;
        if (r[j] < 1) throw Error(Errc::invalid_descriptor, "power vector entries must be >= 1");
        if (!is_nat(ext_ratio(p[sigma[j]], q[j])))
            throw Error(Errc::invalid_descriptor, "p_sigma/q must be a vector of naturals");
        Exponent qr(q[j].ratio * Rational(r[j]), q[j].lambda_pow);
        ExtRatio outer = ext_ratio(p[sigma[j]], qr);
        if (!is_nat(outer))
            throw Error(Errc::invalid_descriptor, "p_sigma/(q r) must be a vector of naturals");
        m.alpha[j] = outer.ratio.num();
        m.intermediate[j] = Exponent(p[sigma[j]].ratio / Rational(r[j]), p[sigma[j]].lambda_pow);
    }
    if (phi.p.size() != m.intermediate.size())
        throw Error(Errc::invalid_descriptor, "phi dimension does not match the intermediate ellipsoid");
    for (int j = 0; j < n; ++j)
        if (!(phi.p[j] == m.intermediate[j]))
            throw Error(Errc::invalid_descriptor, "phi is not an automorphism of the intermediate ellipsoid");
    return m;
}

CVec EllipsoidProperMap::eval(std::span<const C> z, double lambda) const {
    const int n = dim();
    if (static_cast<int>(z.size()) != n)
        throw Error(Errc::dimension_mismatch, "point dimension does not match map");
    CVec u(n);
    for (int j = 0; j < n; ++j) u[j] = principal_pow(z[sigma[j]], static_cast<double>(r[j]));
    CVec v = phi.eval(u, lambda);
    CVec y(n);
    for (int j = 0; j < n; ++j) y[j] = principal_pow(v[j], static_cast<double>(alpha[j]));
    return y;
}

std::optional<Perm> ep_exists(const ExponentVec& p, const ExponentVec& q) {
    if (p.size() != q.size())
        throw Error(Errc::dimension_mismatch, "ellipsoid dimensions differ");
    return first_matching(p, q);
}

std::optional<EllipsoidProperMap> ep_canonical(const ExponentVec& p, const ExponentVec& q) {
    std::optional<Perm> sigma = ep_exists(p, q);
    if (!sigma) return std::nullopt;
    const int n = static_cast<int>(p.size());
    std::vector<long long> r(n);
    for (int j = 0; j < n; ++j) r[j] = ext_ratio(p[(*sigma)[j]], q[j]).ratio.num();
    // r = p_sigma/q makes the intermediate ellipsoid E_q and the outer power
    // trivial, so the canonical representative is the plain power map.
    return EllipsoidProperMap::make(p, q, *sigma, r, EllipsoidAut::identity(q));
}

long long ep_map_degree(const EllipsoidProperMap& m) {
    long long d = 1;
    for (size_t j = 0; j < m.r.size(); ++j) d *= m.r[j] * m.alpha[j];
    return d;
}

} // namespace hartogs
