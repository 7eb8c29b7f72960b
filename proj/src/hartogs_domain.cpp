#include "hartogs_domain.hpp"

#include "errors.hpp"

namespace hartogs {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Interior: return "interior";
        case Verdict::OnK: return "on_k";
        case Verdict::OnL: return "on_l";
        case Verdict::Origin: return "origin";
        case Verdict::Outside: return "outside";
    }
    return "?";
}

Sums domain_sums(const HartogsDomain& d, const ZW& pt, double lambda) {
    if (static_cast<int>(pt.z.size()) != d.n() || static_cast<int>(pt.w.size()) != d.m())
        throw Error(Errc::dimension_mismatch, "point dimensions do not match domain");
    return Sums{sum_abs_pow(pt.z, d.p, lambda), sum_abs_pow(pt.w, d.q, lambda)};
}

Verdict classify(const Sums& s, double tol) {
    if (std::abs(s.sw - 1.0) <= tol)
        return s.sz <= s.sw + tol ? Verdict::OnL : Verdict::Outside;
    if (s.sw > 1.0) return Verdict::Outside;
    if (std::abs(s.sz - s.sw) <= tol)
        return s.sz <= tol ? Verdict::Origin : Verdict::OnK;
    return s.sz < s.sw ? Verdict::Interior : Verdict::Outside;
}

Verdict membership(const HartogsDomain& d, const ZW& pt, double tol, double lambda) {
    return classify(domain_sums(d, pt, lambda), tol);
}

} // namespace hartogs
