#include "hartogs_aut.hpp"

#include "errors.hpp"

namespace hartogs {

namespace {

bool qp_natural(const HartogsDomain& d) {
    return is_nat(ext_ratio(d.q[0], d.p[0]));
}

// Diagonal rotation z_j -> factors[j] z_j as an ellipsoid automorphism.
EllipsoidAut diag_rotation(const ExponentVec& p, const CVec& factors) {
    EllipsoidAut a = EllipsoidAut::identity(p);
    Mat q = Mat::Identity(a.k, a.k);
    for (int i = 0; i < a.k; ++i) q(i, i) = factors[a.norm[i]];
    a.H.Q = q;
    for (int i = a.k; i < a.dim(); ++i) a.zetas[i - a.k] = factors[a.norm[i]];
    return a;
}

// xi^x for real x on the principal branch of the argument of xi.
C phase_pow(C xi, double x) {
    return std::exp(C(0, 1) * (x * std::arg(xi)));
}

CVec w_power_factors(const HartogsDomain& d, C xi, double sign, double lambda) {
    CVec f(d.n());
    for (int j = 0; j < d.n(); ++j)
        f[j] = phase_pow(xi, sign * d.q[0].value(lambda) / d.p[j].value(lambda));
    return f;
}

} // namespace

const char* HartogsAut::regime() const {
    switch (form.index()) {
        case 0: return "11";
        case 1: return "1m";
        case 2: return "n1";
        default: return "nm";
    }
}

ZW HartogsAut::eval(const ZW& pt, double lambda) const {
    ZW out;
    if (const auto* a = std::get_if<Aut11>(&form)) {
        C z = pt.z.at(0), w = pt.w.at(0);
        ExtRatio c = ext_ratio(dom.q[0], dom.p[0]);
        if (is_nat(c)) {
            if (std::abs(w) == 0.0)
                throw Error(Errc::branch_pole, "w = 0 is a pole of the conjugation factors");
            C wc = principal_pow(w, static_cast<double>(c.ratio.num()));
            out.z = {wc * a->phi.eval(z / wc)};
        } else {
            // phi fixes 0, so the conjugating powers cancel exactly.
            out.z = {a->phi.eta * z};
        }
        out.w = {a->xi * w};
        return out;
    }
    if (const auto* a = std::get_if<Aut1m>(&form)) {
        out.z = {a->zeta * pt.z.at(0)};
        out.w = a->h.eval(pt.w, lambda);
        return out;
    }
    if (const auto* a = std::get_if<AutN1>(&form)) {
        C w = pt.w.at(0);
        if (std::abs(w) == 0.0)
            throw Error(Errc::branch_pole, "w = 0 is a pole of the conjugation factors");
        C logw = std::log(w);
        const int n = dom.n();
        CVec t(n);
        for (int j = 0; j < n; ++j) {
            double cj = dom.q[0].value(lambda) / dom.p[j].value(lambda);
            t[j] = pt.z[j] * std::exp(-cj * logw);
        }
        CVec y = a->g.eval(t, lambda);
        out.z.resize(n);
        for (int j = 0; j < n; ++j) {
            double cj = dom.q[0].value(lambda) / dom.p[j].value(lambda);
            out.z[j] = y[j] * std::exp(cj * logw);
        }
        out.w = {a->xi * w};
        return out;
    }
    const auto& a = std::get<AutNM>(form);
    out.z = a.g.eval(pt.z, lambda);
    out.w = a.h.eval(pt.w, lambda);
    return out;
}

AutFamilyInfo aut_family(const HartogsDomain& d) {
    AutFamilyInfo info;
    const int n = d.n(), m = d.m();
    info.regime = (n == 1 && m == 1) ? "11" : (n == 1 ? "1m" : (m == 1 ? "n1" : "nm"));
    const Exponent one{1, 1, 0};
    for (const Exponent& e : d.p) info.ball_dim_z += (e == one);
    for (const Exponent& e : d.q) info.ball_dim_w += (e == one);
    if (info.regime == "11") info.phi_must_fix_origin = !qp_natural(d);
    if (info.regime == "n1")
        info.recentering_allowed = d.q[0].is_natural() && info.ball_dim_z > 0;

    auto classes = [](const ExponentVec& p) {
        std::vector<std::vector<int>> out;
        std::vector<bool> done(p.size(), false);
        for (size_t i = 0; i < p.size(); ++i) {
            if (done[i]) continue;
            std::vector<int> cls;
            for (size_t j = i; j < p.size(); ++j)
                if (!done[j] && p[j] == p[i]) { cls.push_back(static_cast<int>(j)); done[j] = true; }
            if (cls.size() > 1) out.push_back(cls);
        }
        return out;
    };
    info.z_classes = classes(d.p);
    info.w_classes = classes(d.q);
    return info;
}

HartogsAut aut_identity(const HartogsDomain& d) {
    HartogsAut a;
    a.dom = d;
    const int n = d.n(), m = d.m();
    if (n == 1 && m == 1) a.form = Aut11{};
    else if (n == 1) a.form = Aut1m{C(1, 0), EllipsoidAut::identity(d.q)};
    else if (m == 1) a.form = AutN1{EllipsoidAut::identity(d.p), C(1, 0)};
    else a.form = AutNM{EllipsoidAut::identity(d.p), EllipsoidAut::identity(d.q)};
    return a;
}

HartogsAut aut_sample(const HartogsDomain& d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    HartogsAut a;
    a.dom = d;
    const int n = d.n(), m = d.m();
    if (n == 1 && m == 1) {
        Aut11 f;
        f.xi = unit_phase(rng);
        if (qp_natural(d)) {
            std::uniform_real_distribution<double> rad(0.0, 0.6);
            f.phi.alpha = rad(rng) * unit_phase(rng);
        }
        f.phi.eta = unit_phase(rng);
        a.form = f;
        return a;
    }
    if (n == 1) {
        a.form = Aut1m{unit_phase(rng), random_ellipsoid_aut(d.q, rng(), true)};
        return a;
    }
    if (m == 1) {
        bool fix_origin = !d.q[0].is_natural();
        a.form = AutN1{random_ellipsoid_aut(d.p, rng(), fix_origin), unit_phase(rng)};
        return a;
    }
    a.form = AutNM{random_ellipsoid_aut(d.p, rng(), true), random_ellipsoid_aut(d.q, rng(), true)};
    return a;
}

HartogsAut aut_compose(const HartogsAut& outer, const HartogsAut& inner, double lambda) {
    if (!(outer.dom == inner.dom))
        throw Error(Errc::dimension_mismatch, "automorphisms of different triangles");
    HartogsAut c;
    c.dom = outer.dom;
    if (const auto* ao = std::get_if<Aut11>(&outer.form)) {
        const auto& ai = std::get<Aut11>(inner.form);
        Aut11 f;
        f.xi = ao->xi * ai.xi;
        ExtRatio qp = ext_ratio(c.dom.q[0], c.dom.p[0]);
        if (is_nat(qp)) {
            // (outer o inner) conjugates outer's phi by the rotation xi_inner^{q/p}.
            C xic = principal_pow(ai.xi, static_cast<double>(qp.ratio.num()));
            DiscMoebius mid = DiscMoebius::compose(
                DiscMoebius::rotation(xic),
                DiscMoebius::compose(ao->phi, DiscMoebius::rotation(C(1, 0) / xic)));
            f.phi = DiscMoebius::compose(mid, ai.phi);
        } else {
            f.phi = DiscMoebius::rotation(ao->phi.eta * ai.phi.eta);
        }
        c.form = f;
        return c;
    }
    if (const auto* ao = std::get_if<Aut1m>(&outer.form)) {
        const auto& ai = std::get<Aut1m>(inner.form);
        c.form = Aut1m{ao->zeta * ai.zeta, EllipsoidAut::compose(ao->h, ai.h, lambda)};
        return c;
    }
    if (const auto* ao = std::get_if<AutN1>(&outer.form)) {
        const auto& ai = std::get<AutN1>(inner.form);
        // Passing the inner xi through the conjugating powers leaves diagonal
        // rotations on both sides of the outer g.
        EllipsoidAut din = diag_rotation(c.dom.p, w_power_factors(c.dom, ai.xi, -1.0, lambda));
        EllipsoidAut dout = diag_rotation(c.dom.p, w_power_factors(c.dom, ai.xi, +1.0, lambda));
        EllipsoidAut g = EllipsoidAut::compose(
            dout, EllipsoidAut::compose(ao->g, EllipsoidAut::compose(din, ai.g, lambda), lambda),
            lambda);
        c.form = AutN1{std::move(g), ao->xi * ai.xi};
        return c;
    }
    const auto& ao = std::get<AutNM>(outer.form);
    const auto& ai = std::get<AutNM>(inner.form);
    c.form = AutNM{EllipsoidAut::compose(ao.g, ai.g, lambda),
                   EllipsoidAut::compose(ao.h, ai.h, lambda)};
    return c;
}

HartogsAut aut_invert(const HartogsAut& a, double lambda) {
    HartogsAut inv;
    inv.dom = a.dom;
    if (const auto* f = std::get_if<Aut11>(&a.form)) {
        Aut11 g;
        g.xi = std::conj(f->xi);
        ExtRatio qp = ext_ratio(a.dom.q[0], a.dom.p[0]);
        if (is_nat(qp)) {
            C xic = principal_pow(f->xi, static_cast<double>(qp.ratio.num()));
            g.phi = DiscMoebius::compose(
                DiscMoebius::rotation(C(1, 0) / xic),
                DiscMoebius::compose(f->phi.inverse(), DiscMoebius::rotation(xic)));
        } else {
            g.phi = DiscMoebius::rotation(std::conj(f->phi.eta));
        }
        inv.form = g;
        return inv;
    }
    if (const auto* f = std::get_if<Aut1m>(&a.form)) {
        inv.form = Aut1m{std::conj(f->zeta), f->h.inverse(lambda)};
        return inv;
    }
    if (const auto* f = std::get_if<AutN1>(&a.form)) {
        // Inverse parameters: g' = diag(xi^{-q/p}) o g^{-1} o diag(xi^{+q/p}).
        EllipsoidAut pre = diag_rotation(a.dom.p, w_power_factors(a.dom, f->xi, +1.0, lambda));
        EllipsoidAut post = diag_rotation(a.dom.p, w_power_factors(a.dom, f->xi, -1.0, lambda));
        EllipsoidAut g = EllipsoidAut::compose(
            post, EllipsoidAut::compose(f->g.inverse(lambda), pre, lambda), lambda);
        inv.form = AutN1{std::move(g), std::conj(f->xi)};
        return inv;
    }
    const auto& f = std::get<AutNM>(a.form);
    inv.form = AutNM{f.g.inverse(lambda), f.h.inverse(lambda)};
    return inv;
}

ValidationResult validate_aut(const HartogsAut& a) {
    ValidationResult res;
    auto check = [&](bool ok, const std::string& msg) {
        if (!ok) { res.ok = false; res.violations.push_back(msg); }
    };
    const int n = a.dom.n(), m = a.dom.m();
    if (const auto* f = std::get_if<Aut11>(&a.form)) {
        check(n == 1 && m == 1, "regime 11 requires n = m = 1");
        check(is_unimodular(f->xi, 1e-9), "xi must be unimodular");
        check(is_unimodular(f->phi.eta, 1e-9), "phi phase must be unimodular");
        check(std::abs(f->phi.alpha) < 1.0, "phi center must lie in the disc");
        if (!qp_natural(a.dom))
            check(f->phi.fixes_origin(1e-12), "phi must fix 0 when q/p is not natural");
        return res;
    }
    if (const auto* f = std::get_if<Aut1m>(&a.form)) {
        check(n == 1 && m >= 2, "regime 1m requires n = 1, m >= 2");
        check(is_unimodular(f->zeta, 1e-9), "zeta must be unimodular");
        check(f->h.fixes_origin(), "h must fix the origin");
        check(f->h.p == a.dom.q, "h must act on E_q");
        return res;
    }
    if (const auto* f = std::get_if<AutN1>(&a.form)) {
        check(n >= 2 && m == 1, "regime n1 requires n >= 2, m = 1");
        check(is_unimodular(f->xi, 1e-9), "xi must be unimodular");
        check(f->g.p == a.dom.p, "g must act on E_p");
        if (f->g.mixes_or_recenters())
            check(a.dom.q[0].is_natural(),
                  "recentering or mixing g requires q natural for single-valuedness");
        return res;
    }
    const auto& f = std::get<AutNM>(a.form);
    check(n >= 2 && m >= 2, "regime nm requires n, m >= 2");
    check(f.g.fixes_origin(), "g must fix the origin");
    check(f.h.fixes_origin(), "h must fix the origin");
    check(f.g.p == a.dom.p, "g must act on E_p");
    check(f.h.p == a.dom.q, "h must act on E_q");
    return res;
}

} // namespace hartogs
