#pragma once

#include <variant>

#include "hartogs_map.hpp"

namespace hartogs {

// Automorphism families of the four dimension regimes:
//   n = m = 1:   (w^{q/p} phi(z w^{-q/p}), xi w), phi a disc automorphism
//                (a rotation unless q/p is a natural number)
//   n = 1, m>1:  (zeta z, h(w)), h in Aut(E_q) fixing 0
//   n > 1, m=1:  (w^{q/p_j} g_j(z w^{-q/p}), xi w), g in Aut(E_p)
//                (origin-fixing unless q is a natural number)
//   n, m > 1:    (g(z), h(w)), both fixing 0
struct Aut11 { DiscMoebius phi; C xi{1, 0}; };
struct Aut1m { C zeta{1, 0}; EllipsoidAut h; };
struct AutN1 { EllipsoidAut g; C xi{1, 0}; };
struct AutNM { EllipsoidAut g, h; };

struct HartogsAut {
    HartogsDomain dom;
    std::variant<Aut11, Aut1m, AutN1, AutNM> form;

    ZW eval(const ZW& pt, double lambda) const;
    const char* regime() const;
};

// Machine-readable description of the free parameters of Aut(F_{p,q}).
struct AutFamilyInfo {
    std::string regime;               // "11", "1m", "n1", "nm"
    bool phi_must_fix_origin = false; // 11: q/p not natural
    bool recentering_allowed = false; // n1: q natural and exponent-one slots present
    int ball_dim_z = 0;               // exponent-one slots on the z side
    int ball_dim_w = 0;               // exponent-one slots on the w side
    std::vector<std::vector<int>> z_classes, w_classes; // permutable slot classes
};

AutFamilyInfo aut_family(const HartogsDomain& d);

HartogsAut aut_sample(const HartogsDomain& d, std::uint64_t seed);

HartogsAut aut_identity(const HartogsDomain& d);

HartogsAut aut_compose(const HartogsAut& outer, const HartogsAut& inner, double lambda);
HartogsAut aut_invert(const HartogsAut& a, double lambda);

// Checks the family constraints (unimodularity, origin conditions, the
// single-valuedness requirement for recentered g when m = 1).
ValidationResult validate_aut(const HartogsAut& a);

} // namespace hartogs
