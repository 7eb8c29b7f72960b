#include "hartogs_map.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace hartogs {

namespace {

void require_equidimensional(const HartogsDomain& src, const HartogsDomain& dst) {
    if (src.n() != dst.n() || src.m() != dst.m())
        throw Error(Errc::dimension_mismatch, "triangles are not equidimensional");
}

ExtRatio qp_ratio(const HartogsDomain& d) { return ext_ratio(d.q[0], d.p[0]); }

std::vector<C> nth_roots(C value, long long n) {
    std::vector<C> out;
    out.reserve(static_cast<size_t>(n));
    double mod = std::pow(std::abs(value), 1.0 / static_cast<double>(n));
    double arg = std::arg(value) / static_cast<double>(n);
    for (long long t = 0; t < n; ++t) {
        double a = arg + 2.0 * M_PI * static_cast<double>(t) / static_cast<double>(n);
        out.push_back(mod * C(std::cos(a), std::sin(a)));
    }
    return out;
}

bool monomial_ellipsoid_part(const EllipsoidProperMap& m) {
    return m.phi.fixes_origin() && !m.phi.H.mixes_coordinates();
}

} // namespace

std::optional<ExistenceWitness> exists_proper(const HartogsDomain& src, const HartogsDomain& dst) {
    require_equidimensional(src, dst);
    const int n = src.n(), m = src.m();
    if (n == 1 && m == 1) {
        auto kl = solve_kl(qp_ratio(src), qp_ratio(dst));
        if (!kl) return std::nullopt;
        return ExistenceWitness{WitnessKL{kl->k, kl->l}};
    }
    if (n == 1) {
        ExtRatio ppt = ext_ratio(src.p[0], dst.p[0]);
        if (!is_nat(ppt)) return std::nullopt;
        auto sigma = first_matching(src.q, dst.q);
        if (!sigma) return std::nullopt;
        return ExistenceWitness{WitnessKSigma{ppt.ratio.num(), *sigma}};
    }
    if (m == 1) {
        auto sigma = first_matching(src.p, dst.p);
        if (!sigma) return std::nullopt;
        auto r = solve_r(src.q[0], dst.q[0], dst.p);
        if (!r) return std::nullopt;
        return ExistenceWitness{WitnessSigmaR{*sigma, *r}};
    }
    auto sigma = first_matching(src.p, dst.p);
    if (!sigma) return std::nullopt;
    auto tau = first_matching(src.q, dst.q);
    if (!tau) return std::nullopt;
    return ExistenceWitness{WitnessSigmaTau{*sigma, *tau}};
}

const char* HartogsProperMap::case_tag() const {
    switch (form.index()) {
        case 0: return "11";
        case 1: return "1m";
        case 2: return "n1";
        default: return "nm";
    }
}

ZW eval_map(const HartogsProperMap& m, const ZW& pt, double lambda) {
    ZW out;
    if (const auto* c = std::get_if<Case11>(&m.form)) {
        C z = pt.z.at(0), w = pt.w.at(0);
        if (std::abs(w) == 0.0)
            throw Error(Errc::branch_pole, "w = 0 is a pole of the w-power factors");
        C g = c->zeta * principal_pow(z, static_cast<double>(c->k)) *
              principal_pow(w, static_cast<double>(c->b));
        if (c->blaschke) {
            C t = principal_pow(z, static_cast<double>(c->pprime)) *
                  principal_pow(w, -static_cast<double>(c->qprime));
            g *= c->blaschke->eval(t);
        }
        out.z = {g};
        out.w = {c->xi * principal_pow(w, static_cast<double>(c->l))};
        return out;
    }
    if (const auto* c = std::get_if<Case1m>(&m.form)) {
        out.z = {c->zeta * principal_pow(pt.z.at(0), static_cast<double>(c->k))};
        out.w = c->h.eval(pt.w, lambda);
        return out;
    }
    if (const auto* c = std::get_if<CaseN1>(&m.form)) {
        C w = pt.w.at(0);
        if (std::abs(w) == 0.0)
            throw Error(Errc::branch_pole, "w = 0 is a pole of the w-power factors");
        // All w-powers share one principal log so integer total exponents
        // recombine into single-valued values.
        C logw = std::log(w);
        const int n = m.src.n();
        CVec t(n);
        for (int j = 0; j < n; ++j) {
            double cj = m.src.q[0].value(lambda) / m.src.p[j].value(lambda);
            t[j] = pt.z[j] * std::exp(-cj * logw);
        }
        CVec y = c->f.eval(t, lambda);
        out.z.resize(n);
        for (int j = 0; j < n; ++j) {
            double ej = static_cast<double>(c->r) * m.dst.q[0].value(lambda) / m.dst.p[j].value(lambda);
            out.z[j] = y[j] * std::exp(ej * logw);
        }
        out.w = {c->xi * principal_pow(w, static_cast<double>(c->r))};
        return out;
    }
    const auto& c = std::get<CaseNM>(m.form);
    out.z = c.g.eval(pt.z, lambda);
    out.w = c.h.eval(pt.w, lambda);
    return out;
}

Sums image_sums(const HartogsProperMap& m, const ZW& pt, double lambda) {
    const Sums s = domain_sums(m.src, pt, lambda);
    if (const auto* c = std::get_if<Case11>(&m.form)) {
        double az = std::abs(pt.z[0]), aw = std::abs(pt.w[0]);
        double pt_dst = m.dst.p[0].value(lambda), qt_dst = m.dst.q[0].value(lambda);
        double sw = std::exp(2.0 * qt_dst * c->l * std::log(aw));
        double sz;
        if (az == 0.0 && c->k > 0) {
            sz = 0.0;
        } else {
            double logg = c->b * std::log(aw);
            if (c->k > 0) logg += c->k * std::log(az);
            if (c->blaschke) {
                C t = principal_pow(pt.z[0], static_cast<double>(c->pprime)) *
                      principal_pow(pt.w[0], -static_cast<double>(c->qprime));
                logg += std::log(std::abs(c->blaschke->eval(t)));
            }
            sz = std::exp(2.0 * pt_dst * logg);
        }
        return Sums{sz, sw};
    }
    if (const auto* c = std::get_if<Case1m>(&m.form)) {
        double az = std::abs(pt.z[0]);
        double pt_dst = m.dst.p[0].value(lambda);
        double sz = az == 0.0 ? 0.0 : std::exp(2.0 * pt_dst * c->k * std::log(az));
        double sw = c->h.preserves_sums() ? s.sw
                                          : sum_abs_pow(c->h.eval(pt.w, lambda), m.dst.q, lambda);
        return Sums{sz, sw};
    }
    if (const auto* c = std::get_if<CaseN1>(&m.form)) {
        if (!c->f.preserves_sums()) {
            ZW img = eval_map(m, pt, lambda);
            return domain_sums(m.dst, img, lambda);
        }
        double logw = std::log(std::abs(pt.w[0]));
        double q_src = m.src.q[0].value(lambda), qt_dst = m.dst.q[0].value(lambda);
        double sw = std::exp(2.0 * qt_dst * c->r * logw);
        double st = s.sz * std::exp(-2.0 * q_src * logw);
        return Sums{sw * st, sw};
    }
    const auto& c = std::get<CaseNM>(m.form);
    if (c.g.preserves_sums() && c.h.preserves_sums()) return s;
    ZW img = eval_map(m, pt, lambda);
    return domain_sums(m.dst, img, lambda);
}

namespace {

void check(ValidationResult& res, bool ok, const std::string& msg) {
    if (!ok) {
        res.ok = false;
        res.violations.push_back(msg);
    }
}

void validate_ellipsoid_part(ValidationResult& res, const EllipsoidProperMap& part,
                             const ExponentVec& from, const ExponentVec& to, const char* name) {
    check(res, part.p == from, std::string(name) + ": source exponents do not match");
    check(res, part.q == to, std::string(name) + ": target exponents do not match");
    // Re-derive the arithmetic invariants (descriptors may come from JSON).
    try {
        EllipsoidProperMap::make(part.p, part.q, part.sigma, part.r, part.phi);
    } catch (const Error& e) {
        check(res, false, std::string(name) + ": " + e.what());
    }
}

} // namespace

ValidationResult validate_proper_form(const HartogsProperMap& m) {
    ValidationResult res;
    const int n = m.src.n(), mm = m.src.m();
    if (m.dst.n() != n || m.dst.m() != mm) {
        check(res, false, "domains are not equidimensional");
        return res;
    }

    if (const auto* c = std::get_if<Case11>(&m.form)) {
        check(res, n == 1 && mm == 1, "case 11 requires n = m = 1");
        if (!res.ok) return res;
        check(res, is_unimodular(c->zeta, 1e-9), "zeta must be unimodular");
        check(res, is_unimodular(c->xi, 1e-9), "xi must be unimodular");
        check(res, c->l >= 1, "l must be a positive integer");
        LinTerm terms[2] = {{c->l, qp_ratio(m.dst)}, {-c->k, qp_ratio(m.src)}};
        auto b = int_diff_value(terms);
        check(res, b.has_value(), "l qt/pt - k q/p must be an integer");
        if (b) check(res, *b == c->b, "stored w-exponent disagrees with l qt/pt - k q/p");
        if (c->blaschke) {
            check(res, c->k >= 0, "k' must be a nonnegative integer");
            std::string why;
            check(res, c->blaschke->valid(&why), "blaschke factor invalid: " + why);
            check(res, !c->blaschke->vanishes_at_zero(), "blaschke factor must not vanish at 0");
            check(res, !(c->blaschke->is_constant() && c->k == 0),
                  "constant blaschke factor requires k' > 0");
            check(res, c->pprime >= 1 && c->qprime >= 1, "p', q' must be positive integers");
            check(res, std::gcd(c->pprime, c->qprime) == 1, "p', q' must be coprime");
            ExtRatio qp = qp_ratio(m.src);
            check(res, qp.lambda_deg == 0, "a blaschke factor requires q/p rational");
            check(res, qp.lambda_deg == 0 && qp.ratio == Rational(c->qprime, c->pprime),
                  "q'/p' must equal q/p");
        } else {
            check(res, c->k >= 1, "without a blaschke factor k must be a positive integer");
        }
        return res;
    }

    if (const auto* c = std::get_if<Case1m>(&m.form)) {
        check(res, n == 1 && mm >= 2, "case 1m requires n = 1, m >= 2");
        if (!res.ok) return res;
        check(res, is_unimodular(c->zeta, 1e-9), "zeta must be unimodular");
        ExtRatio ppt = ext_ratio(m.src.p[0], m.dst.p[0]);
        check(res, is_nat(ppt), "p/pt must be a natural number");
        check(res, is_nat(ppt) && ppt.ratio.num() == c->k, "k must equal p/pt");
        validate_ellipsoid_part(res, c->h, m.src.q, m.dst.q, "h");
        check(res, c->h.fixes_origin(), "h must fix the origin");
        return res;
    }

    if (const auto* c = std::get_if<CaseN1>(&m.form)) {
        check(res, n >= 2 && mm == 1, "case n1 requires n >= 2, m = 1");
        if (!res.ok) return res;
        check(res, is_unimodular(c->xi, 1e-9), "xi must be unimodular");
        check(res, c->r >= 1, "r must be a positive integer");
        validate_ellipsoid_part(res, c->f, m.src.p, m.dst.p, "f");
        for (int j = 0; j < n; ++j) {
            LinTerm terms[2] = {{c->r, ext_ratio(m.dst.q[0], m.dst.p[j])},
                                {-1, ext_ratio(m.src.q[0], m.dst.p[j])}};
            check(res, is_int_diff(terms), "(r qt - q)/pt_j must be an integer for every j");
        }
        // Single-valuedness constraint for maps whose ellipsoid factor
        // recenters or mixes coordinates: monomials expand with a w^{-q}
        // per factor and a constant term, so q and the r qt/pt_j for the
        // reciprocal-natural target slots must all be natural.
        if (c->f.phi.mixes_or_recenters()) {
            check(res, m.src.q[0].is_natural(),
                  "a recentering or mixing ellipsoid factor requires q natural");
            for (int j = 0; j < n; ++j) {
                const Exponent& ptj = m.dst.p[j];
                bool recip_nat = ptj.lambda_pow == 0 && ptj.ratio.num() == 1;
                if (!recip_nat) continue;
                Exponent rqt(m.dst.q[0].ratio * Rational(c->r), m.dst.q[0].lambda_pow);
                check(res, is_nat(ext_ratio(rqt, ptj)),
                      "r qt/pt_j must be natural when 1/pt_j is natural and the factor mixes");
            }
        }
        return res;
    }

    const auto& c = std::get<CaseNM>(m.form);
    check(res, n >= 2 && mm >= 2, "case nm requires n, m >= 2");
    if (!res.ok) return res;
    validate_ellipsoid_part(res, c.g, m.src.p, m.dst.p, "g");
    validate_ellipsoid_part(res, c.h, m.src.q, m.dst.q, "h");
    check(res, c.g.fixes_origin(), "g must fix the origin");
    check(res, c.h.fixes_origin(), "h must fix the origin");
    return res;
}

std::optional<HartogsProperMap> canonical_proper(const HartogsDomain& src, const HartogsDomain& dst) {
    auto witness = exists_proper(src, dst);
    if (!witness) return std::nullopt;
    HartogsProperMap m;
    m.src = src;
    m.dst = dst;
    const int n = src.n(), mm = src.m();
    if (n == 1 && mm == 1) {
        const auto& w = std::get<WitnessKL>(*witness);
        LinTerm terms[2] = {{w.l, qp_ratio(dst)}, {-w.k, qp_ratio(src)}};
        Case11 c;
        c.k = w.k;
        c.l = w.l;
        c.b = *int_diff_value(terms);
        m.form = c;
        return m;
    }
    if (n == 1) {
        const auto& w = std::get<WitnessKSigma>(*witness);
        Case1m c{C(1, 0), w.k, *ep_canonical(src.q, dst.q)};
        m.form = std::move(c);
        return m;
    }
    if (mm == 1) {
        const auto& w = std::get<WitnessSigmaR>(*witness);
        CaseN1 c{C(1, 0), w.r, *ep_canonical(src.p, dst.p)};
        m.form = std::move(c);
        return m;
    }
    CaseNM c{*ep_canonical(src.p, dst.p), *ep_canonical(src.q, dst.q)};
    m.form = std::move(c);
    return m;
}

long long map_degree(const HartogsProperMap& m) {
    if (const auto* c = std::get_if<Case11>(&m.form)) {
        long long zdeg = c->k;
        if (c->blaschke) zdeg += c->pprime * c->blaschke->degree();
        return c->l * zdeg;
    }
    if (const auto* c = std::get_if<Case1m>(&m.form)) return c->k * ep_map_degree(c->h);
    if (const auto* c = std::get_if<CaseN1>(&m.form)) return c->r * ep_map_degree(c->f);
    const auto& c = std::get<CaseNM>(m.form);
    return ep_map_degree(c.g) * ep_map_degree(c.h);
}

namespace {

// Enumerate root combinations: counter over digits with radix degs[i].
bool advance_counter(std::vector<long long>& ctr, const std::vector<long long>& degs) {
    for (size_t i = 0; i < ctr.size(); ++i) {
        if (++ctr[i] < degs[i]) return true;
        ctr[i] = 0;
    }
    return false;
}

// A monomial map sends each output slot j to c_j * x_{s(j)}^{d_j}. Probe
// with one nonzero coordinate at a time to read off s(j), d_j, and c_j,
// which also absorbs any slot permutation hidden inside phi.
struct MonomialShape {
    std::vector<int> source;       // s(j)
    std::vector<long long> degree; // d_j
    CVec phase;                    // c_j
};

MonomialShape probe_monomial(const std::function<CVec(const CVec&)>& fn, int n) {
    MonomialShape shape;
    shape.source.assign(n, -1);
    shape.degree.assign(n, 0);
    shape.phase.assign(n, C(0, 0));
    const double t = 0.5;
    for (int s = 0; s < n; ++s) {
        CVec unit(n, C(0, 0));
        unit[s] = C(t, 0);
        CVec img = fn(unit);
        for (int j = 0; j < n; ++j) {
            if (std::abs(img[j]) < 1e-250) continue;
            shape.source[j] = s;
            shape.degree[j] = std::llround(std::log(std::abs(img[j])) / std::log(t));
            shape.phase[j] = img[j] / principal_pow(C(t, 0), static_cast<double>(shape.degree[j]));
        }
    }
    for (int j = 0; j < n; ++j)
        if (shape.source[j] < 0 || shape.degree[j] < 1)
            throw Error(Errc::internal, "monomial probe failed");
    return shape;
}

// Per-source-coordinate candidate lists for a monomial ellipsoid map.
std::vector<std::vector<C>> invert_monomial_part(const EllipsoidProperMap& part,
                                                 const CVec& y, double lambda) {
    const int n = part.dim();
    MonomialShape shape =
        probe_monomial([&](const CVec& x) { return part.eval(x, lambda); }, n);
    std::vector<std::vector<C>> choices(n);
    for (int j = 0; j < n; ++j)
        choices[shape.source[j]] = nth_roots(y[j] / shape.phase[j], shape.degree[j]);
    return choices;
}

} // namespace

long long fiber_count(const HartogsProperMap& m, const ZW& target, double lambda, double tol) {
    // Collect candidate values per coordinate, then verify each combination by
    // reevaluating the map; this keeps branch bookkeeping out of the counting.
    std::vector<std::vector<C>> z_choices(m.src.n()), w_choices(m.src.m());

    if (const auto* c = std::get_if<Case11>(&m.form)) {
        if (c->blaschke)
            throw Error(Errc::invalid_descriptor, "fiber counting supports monomial first components only");
        long long count = 0;
        for (C w : nth_roots(target.w[0] / c->xi, c->l)) {
            C rhs = target.z[0] / (c->zeta * principal_pow(w, static_cast<double>(c->b)));
            for (C z : nth_roots(rhs, std::max<long long>(c->k, 1))) {
                ZW cand{{z}, {w}};
                ZW img = eval_map(m, cand, lambda);
                if (std::abs(img.z[0] - target.z[0]) <= tol && std::abs(img.w[0] - target.w[0]) <= tol &&
                    membership(m.src, cand, tol, lambda) == Verdict::Interior)
                    ++count;
            }
        }
        return count;
    }

    if (const auto* c = std::get_if<Case1m>(&m.form)) {
        if (!monomial_ellipsoid_part(c->h))
            throw Error(Errc::invalid_descriptor, "fiber counting supports monomial parts only");
        z_choices[0] = nth_roots(target.z[0] / c->zeta, c->k);
        w_choices = invert_monomial_part(c->h, target.w, lambda);
    } else if (const auto* cn = std::get_if<CaseN1>(&m.form)) {
        if (!monomial_ellipsoid_part(cn->f))
            throw Error(Errc::invalid_descriptor, "fiber counting supports monomial parts only");
        const int n = m.src.n();
        MonomialShape shape =
            probe_monomial([&](const CVec& x) { return cn->f.eval(x, lambda); }, n);
        long long count = 0;
        for (C w : nth_roots(target.w[0] / cn->xi, cn->r)) {
            // G_j = phase_j * z_{s(j)}^{d_j} * w^{e_j - d_j q/p_{s(j)}}.
            C logw = std::log(w);
            std::vector<std::vector<C>> zc(n);
            for (int j = 0; j < n; ++j) {
                int s = shape.source[j];
                long long deg = shape.degree[j];
                double cj = m.src.q[0].value(lambda) / m.src.p[s].value(lambda);
                double ej = static_cast<double>(cn->r) * m.dst.q[0].value(lambda) /
                            m.dst.p[j].value(lambda);
                C rhs = target.z[j] / (shape.phase[j] * std::exp((ej - deg * cj) * logw));
                zc[s] = nth_roots(rhs, deg);
            }
            std::vector<long long> degs(n), ctr(n, 0);
            for (int j = 0; j < n; ++j) degs[j] = static_cast<long long>(zc[j].size());
            do {
                ZW cand;
                cand.z.resize(n);
                for (int j = 0; j < n; ++j) cand.z[j] = zc[j][ctr[j]];
                cand.w = {w};
                ZW img = eval_map(m, cand, lambda);
                double err = std::abs(img.w[0] - target.w[0]);
                for (int j = 0; j < n; ++j) err = std::max(err, std::abs(img.z[j] - target.z[j]));
                if (err <= tol && membership(m.src, cand, tol, lambda) == Verdict::Interior) ++count;
            } while (advance_counter(ctr, degs));
        }
        return count;
    } else {
        const auto& c = std::get<CaseNM>(m.form);
        if (!monomial_ellipsoid_part(c.g) || !monomial_ellipsoid_part(c.h))
            throw Error(Errc::invalid_descriptor, "fiber counting supports monomial parts only");
        z_choices = invert_monomial_part(c.g, target.z, lambda);
        w_choices = invert_monomial_part(c.h, target.w, lambda);
    }

    // Cartesian product of the per-coordinate candidates.
    std::vector<std::vector<C>> all = z_choices;
    all.insert(all.end(), w_choices.begin(), w_choices.end());
    std::vector<long long> degs(all.size()), ctr(all.size(), 0);
    for (size_t i = 0; i < all.size(); ++i) {
        if (all[i].empty()) return 0;
        degs[i] = static_cast<long long>(all[i].size());
    }
    long long count = 0;
    do {
        ZW cand;
        cand.z.resize(m.src.n());
        cand.w.resize(m.src.m());
        for (int j = 0; j < m.src.n(); ++j) cand.z[j] = all[j][ctr[j]];
        for (int j = 0; j < m.src.m(); ++j) cand.w[j] = all[m.src.n() + j][ctr[m.src.n() + j]];
        ZW img = eval_map(m, cand, lambda);
        double err = 0;
        for (int j = 0; j < m.src.n(); ++j) err = std::max(err, std::abs(img.z[j] - target.z[j]));
        for (int j = 0; j < m.src.m(); ++j) err = std::max(err, std::abs(img.w[j] - target.w[j]));
        if (err <= tol && membership(m.src, cand, tol, lambda) == Verdict::Interior) ++count;
    } while (advance_counter(ctr, degs));
    return count;
}

bool is_rigid(const HartogsDomain& d) {
    return d.n() >= 2 && d.m() >= 2;
}

std::optional<HartogsProperMap> degree_witness(const HartogsDomain& d) {
    const int n = d.n(), m = d.m();
    if (n == 1 && m == 1) {
        // (z^2, w^2): k = l = 2 gives integer w-exponent 0 for any exponents.
        HartogsProperMap mp;
        mp.src = mp.dst = d;
        Case11 c;
        c.k = 2;
        c.l = 2;
        c.b = 0;
        mp.form = c;
        return mp;
    }
    if (m == 1 && n >= 2) {
        // r = 2 needs (2q - q)/p_j = q/p_j integral for every j.
        for (int j = 0; j < n; ++j)
            if (!is_nat(ext_ratio(d.q[0], d.p[j]))) return std::nullopt;
        HartogsProperMap mp;
        mp.src = mp.dst = d;
        CaseN1 c{C(1, 0), 2, *ep_canonical(d.p, d.p)};
        mp.form = std::move(c);
        return mp;
    }
    // n = 1, m >= 2: the first component is pinned to degree p/p = 1 and the
    // w-part is an origin-fixing self-map, hence an automorphism; no
    // non-injective witness exists in the characterized family.
    return std::nullopt;
}

} // namespace hartogs
