#pragma once

#include <variant>

#include "blaschke.hpp"
#include "ellipsoid.hpp"
#include "hartogs_domain.hpp"

namespace hartogs {

// Existence witnesses, one shape per dimension regime.
struct WitnessKL { long long k = 0, l = 0; };
struct WitnessKSigma { long long k = 0; Perm sigma; };
struct WitnessSigmaR { Perm sigma; long long r = 0; };
struct WitnessSigmaTau { Perm sigma, tau; };
using ExistenceWitness = std::variant<WitnessKL, WitnessKSigma, WitnessSigmaR, WitnessSigmaTau>;

// Throws on non-equidimensional input; nullopt when no proper map exists.
std::optional<ExistenceWitness> exists_proper(const HartogsDomain& src, const HartogsDomain& dst);

// n = m = 1:  (zeta z^k w^b [B(z^p' w^-q')], xi w^l) with b = l qt/pt - k q/p in Z.
struct Case11 {
    C zeta{1, 0}, xi{1, 0};
    long long k = 1;   // plays the role of k' when a Blaschke factor is present
    long long l = 1;
    long long b = 0;
    std::optional<BlaschkeProduct> blaschke;
    long long pprime = 0, qprime = 0; // coprime, q'/p' = q/p; only with a Blaschke factor
};

// n = 1, m >= 2:  (zeta z^k, h(w)) with k = p/pt and h proper, h(0) = 0.
struct Case1m {
    C zeta{1, 0};
    long long k = 1;
    EllipsoidProperMap h;
};

// n >= 2, m = 1:  components w^{r qt/pt_j} f_j(z_1 w^{-q/p_1}, ...), xi w^r.
struct CaseN1 {
    C xi{1, 0};
    long long r = 1;
    EllipsoidProperMap f;
};

// n, m >= 2:  (g(z), h(w)), both proper and fixing the origin.
struct CaseNM {
    EllipsoidProperMap g, h;
};

struct HartogsProperMap {
    HartogsDomain src, dst;
    std::variant<Case11, Case1m, CaseN1, CaseNM> form;

    const char* case_tag() const;
};

ZW eval_map(const HartogsProperMap& m, const ZW& pt, double lambda);

// Image modulus sums; uses the sum-preservation of origin-fixing factors when
// available, otherwise evaluates the map.
Sums image_sums(const HartogsProperMap& m, const ZW& pt, double lambda);

struct ValidationResult {
    bool ok = true;
    std::vector<std::string> violations;
};

ValidationResult validate_proper_form(const HartogsProperMap& m);

// Deterministic representative built from the existence witness: unimodular
// parameters 1, automorphism parts the identity, minimal k/l/r.
std::optional<HartogsProperMap> canonical_proper(const HartogsDomain& src, const HartogsDomain& dst);

// Generic covering degree of the closed form.
long long map_degree(const HartogsProperMap& m);

// Number of source preimages of `target`; supported for maps whose first
// components are monomial (every canonical map and every rigidity witness).
long long fiber_count(const HartogsProperMap& m, const ZW& target, double lambda, double tol);

bool is_rigid(const HartogsDomain& d);

// A validated non-injective proper self-map, when one exists in the
// characterized families (always for n = m = 1; for m = 1, n >= 2 exactly
// when q/p_j is a natural number for every j). Nullopt otherwise.
std::optional<HartogsProperMap> degree_witness(const HartogsDomain& d);

} // namespace hartogs
