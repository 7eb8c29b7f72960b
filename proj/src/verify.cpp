#include "verify.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace hartogs {

namespace {

// Positive weights summing to `total`, one modulus per coordinate.
std::vector<double> split_total(std::mt19937_64& rng, int n, double total) {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    std::vector<double> w(n);
    double s = 0;
    for (double& x : w) { x = u(rng); s += x; }
    for (double& x : w) x *= total / s;
    return w;
}

CVec coords_for_sum(std::mt19937_64& rng, const ExponentVec& p, double target, double lambda) {
    const int n = static_cast<int>(p.size());
    std::vector<double> parts = split_total(rng, n, target);
    CVec z(n);
    for (int j = 0; j < n; ++j) {
        double radius = std::pow(parts[j], 1.0 / (2.0 * p[j].value(lambda)));
        z[j] = radius * unit_phase(rng);
    }
    return z;
}

} // namespace

std::vector<ZW> sample_hartogs(const HartogsDomain& d, Verdict region, std::size_t count,
                               std::uint64_t seed, double lambda, const SampleWindow& win) {
    if (count < 1) throw Error(Errc::empty_region, "sample count must be >= 1");
    if (region != Verdict::Interior && region != Verdict::OnK && region != Verdict::OnL)
        throw Error(Errc::empty_region, "samples exist for Interior, OnK, OnL only");
    std::vector<ZW> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::mt19937_64 rng = stream_rng(seed, i);
        std::uniform_real_distribution<double> lev(win.level_min, win.level_max);
        std::uniform_real_distribution<double> rat(win.ratio_min, win.ratio_max);
        double sw, sz;
        switch (region) {
            case Verdict::Interior: sw = lev(rng); sz = rat(rng) * sw; break;
            case Verdict::OnK:      sw = lev(rng); sz = sw; break;
            default:                sw = 1.0; sz = rat(rng); break;
        }
        ZW pt;
        pt.w = coords_for_sum(rng, d.q, sw, lambda);
        pt.z = coords_for_sum(rng, d.p, sz, lambda);
        out.push_back(std::move(pt));
    }
    return out;
}

std::vector<CVec> sample_ellipsoid(const ExponentVec& p, bool boundary, std::size_t count,
                                   std::uint64_t seed, double lambda, const SampleWindow& win) {
    if (count < 1) throw Error(Errc::empty_region, "sample count must be >= 1");
    std::vector<CVec> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::mt19937_64 rng = stream_rng(seed, i);
        std::uniform_real_distribution<double> lev(win.level_min, win.level_max);
        double s = boundary ? 1.0 : lev(rng);
        out.push_back(coords_for_sum(rng, p, s, lambda));
    }
    return out;
}

namespace {

void require_on_k(const ExponentVec& p, const Exponent& q, const CVec& z, C w, double lambda,
                  double tol) {
    HartogsDomain d{p, {q}};
    ZW pt{z, {w}};
    if (membership(d, pt, tol, lambda) != Verdict::OnK)
        throw Error(Errc::not_on_k, "point is not on the cone part K of the boundary");
}

} // namespace

double levi_form(const ExponentVec& p, const Exponent& q, const CVec& z, C w,
                 const CVec& X, C Y, double lambda, double on_k_tol) {
    require_on_k(p, q, z, w, lambda, on_k_tol);
    double s = 0.0;
    for (size_t j = 0; j < p.size(); ++j) {
        double pj = p[j].value(lambda);
        s += pj * pj * std::pow(std::norm(z[j]), pj - 1.0) * std::norm(X[j]);
    }
    double qv = q.value(lambda);
    s -= qv * qv * std::pow(std::norm(w), qv - 1.0) * std::norm(Y);
    return s;
}

C levi_tangent(const ExponentVec& p, const Exponent& q, const CVec& z, C w,
               const CVec& X, double lambda) {
    double qv = q.value(lambda);
    C acc(0, 0);
    for (size_t j = 0; j < p.size(); ++j) {
        double pj = p[j].value(lambda);
        acc += pj * std::conj(z[j]) * std::pow(std::norm(z[j]), pj - 1.0) * X[j];
    }
    return acc / (qv * std::conj(w) * std::pow(std::norm(w), qv - 1.0));
}

std::pair<double, double> levi_restricted_identity(const ExponentVec& p, const Exponent& q,
                                                   const CVec& z, C w, const CVec& X,
                                                   double lambda, double on_k_tol) {
    C Y = levi_tangent(p, q, z, w, X, lambda);
    double lhs = levi_form(p, q, z, w, X, Y, lambda, on_k_tol);
    double rhs = 0.0;
    const int n = static_cast<int>(p.size());
    for (int j = 0; j < n; ++j) {
        double pj = p[j].value(lambda);
        for (int k = j + 1; k < n; ++k) {
            double pk = p[k].value(lambda);
            double cross = std::norm(pj * z[k] * X[j] - pk * z[j] * X[k]);
            rhs += std::pow(std::norm(z[j]), pj - 1.0) * std::pow(std::norm(z[k]), pk - 1.0) * cross;
        }
    }
    rhs /= std::pow(std::norm(w), q.value(lambda));
    return {lhs, rhs};
}

CVec levi_kernel_direction(const ExponentVec& p, const CVec& z, double lambda) {
    CVec X(z.size());
    for (size_t j = 0; j < z.size(); ++j) X[j] = z[j] / p[j].value(lambda);
    return X;
}

EvalFn map_eval_fn(const HartogsProperMap& m, double lambda) {
    return [m, lambda](const ZW& pt) { return eval_map(m, pt, lambda); };
}

EvalFn aut_eval_fn(const HartogsAut& a, double lambda) {
    return [a, lambda](const ZW& pt) { return a.eval(pt, lambda); };
}

namespace {

ZW shift_coord(const ZW& pt, int idx, C delta) {
    ZW out = pt;
    if (idx < static_cast<int>(pt.z.size())) out.z[idx] += delta;
    else out.w[idx - pt.z.size()] += delta;
    return out;
}

double max_abs_diff(const ZW& a, const ZW& b, double scale) {
    double m = 0;
    for (size_t j = 0; j < a.z.size(); ++j) m = std::max(m, std::abs(a.z[j] - b.z[j]) * scale);
    for (size_t j = 0; j < a.w.size(); ++j) m = std::max(m, std::abs(a.w[j] - b.w[j]) * scale);
    return m;
}

} // namespace

VerificationReport check_holomorphy_fd(const EvalFn& fn, const std::vector<ZW>& samples,
                                       double h, double tol) {
    VerificationReport rep;
    rep.property = "wirtinger_fd";
    rep.samples = samples.size();
    rep.tolerance = tol;
    double worst = 0.0;
    for (const ZW& pt : samples) {
        const int dims = static_cast<int>(pt.z.size() + pt.w.size());
        for (int idx = 0; idx < dims; ++idx) {
            // d/d conj(x) = (d/dRe + i d/dIm)/2 by central differences.
            ZW fpx = fn(shift_coord(pt, idx, C(h, 0)));
            ZW fmx = fn(shift_coord(pt, idx, C(-h, 0)));
            ZW fpy = fn(shift_coord(pt, idx, C(0, h)));
            ZW fmy = fn(shift_coord(pt, idx, C(0, -h)));
            auto count = fpx.z.size() + fpx.w.size();
            for (size_t out = 0; out < count; ++out) {
                auto pick = [&](const ZW& v) {
                    return out < v.z.size() ? v.z[out] : v.w[out - v.z.size()];
                };
                C dx = (pick(fpx) - pick(fmx)) / (2.0 * h);
                C dy = (pick(fpy) - pick(fmy)) / (2.0 * h);
                C wirt = 0.5 * (dx + C(0, 1) * dy);
                worst = std::max(worst, std::abs(wirt));
            }
        }
    }
    rep.worst_residual = worst;
    rep.pass = worst < tol;
    return rep;
}

VerificationReport check_boundary_invariance(const EvalFn& fn, const HartogsDomain& src,
                                             const HartogsDomain& dst, Verdict region,
                                             std::size_t count, std::uint64_t seed, double lambda,
                                             double tol) {
    VerificationReport rep;
    rep.property = region == Verdict::OnK ? "k_to_k" : "l_to_l";
    if (src.n() == 1 && src.m() == 1) rep.property += "_extrapolated";
    rep.samples = count;
    rep.seed = seed;
    rep.tolerance = tol;
    SampleWindow win;
    win.level_min = 0.70;
    win.level_max = 0.95;
    double worst = 0.0;
    bool ok = true;
    for (const ZW& pt : sample_hartogs(src, region, count, seed, lambda, win)) {
        ZW img = fn(pt);
        Sums s = domain_sums(dst, img, lambda);
        double residual = region == Verdict::OnK ? std::abs(s.sz - s.sw) : std::abs(s.sw - 1.0);
        worst = std::max(worst, residual);
        ok = ok && classify(s, tol) == region;
    }
    rep.worst_residual = worst;
    rep.pass = ok && worst <= tol;
    return rep;
}

namespace {

VerificationReport interior_report(std::size_t count, std::uint64_t seed, double tol) {
    VerificationReport rep;
    rep.property = "interior_to_interior";
    rep.samples = count;
    rep.seed = seed;
    rep.tolerance = tol;
    return rep;
}

} // namespace

VerificationReport check_interior_soundness(const HartogsProperMap& m, std::size_t count,
                                            std::uint64_t seed, double lambda, double tol) {
    VerificationReport rep = interior_report(count, seed, tol);
    double worst = 0.0;
    for (const ZW& pt : sample_hartogs(m.src, Verdict::Interior, count, seed, lambda)) {
        Sums s = image_sums(m, pt, lambda);
        worst = std::max(worst, std::max(s.sz / s.sw, s.sw));
    }
    rep.worst_residual = worst;
    rep.pass = worst <= 1.0 - tol;
    return rep;
}

VerificationReport check_interior_soundness_fn(const EvalFn& fn, const HartogsDomain& src,
                                               const HartogsDomain& dst, std::size_t count,
                                               std::uint64_t seed, double lambda, double tol) {
    VerificationReport rep = interior_report(count, seed, tol);
    double worst = 0.0;
    for (const ZW& pt : sample_hartogs(src, Verdict::Interior, count, seed, lambda)) {
        Sums s = domain_sums(dst, fn(pt), lambda);
        worst = std::max(worst, std::max(s.sz / s.sw, s.sw));
    }
    rep.worst_residual = worst;
    rep.pass = worst <= 1.0 - tol;
    return rep;
}

VerificationReport check_properness_ray(const EvalFn& fn, const HartogsDomain& src,
                                        const HartogsDomain& dst, Verdict toward,
                                        std::size_t ray_count, std::size_t steps,
                                        std::uint64_t seed, double lambda) {
    if (steps < 8) throw Error(Errc::invalid_descriptor, "ray check needs at least 8 steps");
    VerificationReport rep;
    rep.property = toward == Verdict::OnK ? "ray_gap_k" : "ray_gap_l";
    rep.samples = ray_count * steps;
    rep.seed = seed;
    rep.tolerance = 0.01; // minimal acceptable decay exponent
    double worst_gamma = 1e9;
    for (std::size_t ray = 0; ray < ray_count; ++ray) {
        std::mt19937_64 rng = stream_rng(seed, ray);
        // Fixed direction per ray, boundary gap halving per step.
        std::vector<double> zparts = split_total(rng, src.n(), 1.0);
        std::vector<double> wparts = split_total(rng, src.m(), 1.0);
        CVec zph(src.n()), wph(src.m());
        for (C& c : zph) c = unit_phase(rng);
        for (C& c : wph) c = unit_phase(rng);

        double sx = 0.0, sxx = 0.0, sy = 0.0, sxy = 0.0;
        for (std::size_t i = 1; i <= steps; ++i) {
            double gap = 0.5 * std::pow(0.5, static_cast<double>(i));
            double sw = toward == Verdict::OnL ? 1.0 - gap : 0.7;
            double sz = toward == Verdict::OnL ? 0.5 * sw : (1.0 - gap) * sw;
            ZW pt;
            pt.z.resize(src.n());
            pt.w.resize(src.m());
            for (int j = 0; j < src.n(); ++j)
                pt.z[j] = std::pow(zparts[j] * sz, 1.0 / (2.0 * src.p[j].value(lambda))) * zph[j];
            for (int j = 0; j < src.m(); ++j)
                pt.w[j] = std::pow(wparts[j] * sw, 1.0 / (2.0 * src.q[j].value(lambda))) * wph[j];
            Sums s = domain_sums(dst, fn(pt), lambda);
            double img_gap = std::max(1e-300, std::min(1.0 - s.sw, 1.0 - s.sz / s.sw));
            double x = std::log(gap), y = std::log(img_gap);
            sx += x; sxx += x * x; sy += y; sxy += x * y;
        }
        double nsteps = static_cast<double>(steps);
        double gamma = (nsteps * sxy - sx * sy) / (nsteps * sxx - sx * sx);
        worst_gamma = std::min(worst_gamma, gamma);
    }
    rep.worst_residual = worst_gamma;
    rep.pass = worst_gamma > rep.tolerance;
    return rep;
}

namespace {

std::vector<VerificationReport> run_suite_fn(const EvalFn& fn, const HartogsDomain& src,
                                             const HartogsDomain& dst, const std::string& suite,
                                             const SuiteConfig& cfg,
                                             const HartogsProperMap* map_for_fast_path) {
    std::vector<VerificationReport> reports;
    bool all = suite == "all";
    if (all || suite == "interior") {
        reports.push_back(map_for_fast_path
                              ? check_interior_soundness(*map_for_fast_path, cfg.count, cfg.seed,
                                                         cfg.lambda, cfg.tol_interior)
                              : check_interior_soundness_fn(fn, src, dst, cfg.count, cfg.seed,
                                                            cfg.lambda, cfg.tol_interior));
    }
    if (all || suite == "boundary") {
        reports.push_back(check_boundary_invariance(fn, src, dst, Verdict::OnK, cfg.count,
                                                    cfg.seed + 1, cfg.lambda, cfg.tol_boundary));
        reports.push_back(check_boundary_invariance(fn, src, dst, Verdict::OnL, cfg.count,
                                                    cfg.seed + 2, cfg.lambda, cfg.tol_boundary));
    }
    if (all || suite == "holomorphy") {
        SampleWindow win;
        win.level_max = 0.7;
        auto samples = sample_hartogs(src, Verdict::Interior, std::min<std::size_t>(cfg.count, 50),
                                      cfg.seed + 3, cfg.lambda, win);
        VerificationReport rep = check_holomorphy_fd(fn, samples, 1e-5);
        rep.seed = cfg.seed + 3;
        reports.push_back(rep);
    }
    if (all || suite == "ray") {
        reports.push_back(check_properness_ray(fn, src, dst, Verdict::OnK, 5, 12, cfg.seed + 4,
                                               cfg.lambda));
        reports.push_back(check_properness_ray(fn, src, dst, Verdict::OnL, 5, 12, cfg.seed + 5,
                                               cfg.lambda));
    }
    if (reports.empty())
        throw Error(Errc::parse_error, "unknown suite: " + suite);
    return reports;
}

} // namespace

std::vector<VerificationReport> run_suite(const HartogsProperMap& m, const std::string& suite,
                                          const SuiteConfig& cfg) {
    return run_suite_fn(map_eval_fn(m, cfg.lambda), m.src, m.dst, suite, cfg, &m);
}

std::vector<VerificationReport> run_suite(const HartogsAut& a, const std::string& suite,
                                          const SuiteConfig& cfg) {
    return run_suite_fn(aut_eval_fn(a, cfg.lambda), a.dom, a.dom, suite, cfg, nullptr);
}

} // namespace hartogs
