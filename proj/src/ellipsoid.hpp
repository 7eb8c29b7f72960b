#pragma once

#include "ball.hpp"
#include "exponent.hpp"
#include "matching.hpp"

namespace hartogs {

struct EllipsoidDomain {
    ExponentVec p;
    int dim() const { return static_cast<int>(p.size()); }
};

enum class EpVerdict { Interior, Boundary, Outside };

EpVerdict ep_membership(const EllipsoidDomain& e, std::span<const C> z, double tol, double lambda);

// Automorphism of E_p. Normalized coordinates put the exponent-one slots
// first; `norm[i]` is the original index sitting in normalized slot i. The
// ball automorphism acts on the first k normalized slots, every other slot
// gets a rotation, a slot permutation within equal exponents, and the
// radial correction factor raised to 1/p_j.
struct EllipsoidAut {
    ExponentVec p;           // original order
    std::vector<int> norm;   // normalized slot -> original index
    int k = 0;               // number of exponent-one slots
    BallAut H;               // on normalized slots [0,k)
    CVec zetas;              // normalized slots [k,n)
    Perm sigma;              // on normalized indices; identity on the ball block

    int dim() const { return static_cast<int>(p.size()); }

    CVec eval(std::span<const C> z, double lambda) const;

    bool fixes_origin() const { return H.fixes_origin(); }
    // Recentering or genuine coordinate mixing in the ball block.
    bool mixes_or_recenters() const { return !H.fixes_origin() || H.mixes_coordinates(); }

    EllipsoidAut inverse(double lambda) const;
    static EllipsoidAut compose(const EllipsoidAut& outer, const EllipsoidAut& inner, double lambda);

    static EllipsoidAut identity(const ExponentVec& p);

    // Validates and assembles; sigma_original indexes original coordinates and
    // must fix the exponent vector. Its action on the exponent-one slots is
    // folded into H.
    static EllipsoidAut make(const ExponentVec& p, const BallAut& ball, const CVec& zetas,
                             const Perm& sigma_original);

    std::string describe_family() const;
};

EllipsoidAut random_ellipsoid_aut(const ExponentVec& p, std::uint64_t seed, bool fix_origin);

// Proper holomorphic map E_p -> E_q in the factored form
//   power map by alpha  o  phi  o  power map by r  o  sigma,
// with p_sigma/q in N^n, r in N^n, alpha = p_sigma/(q r) in N^n and phi an
// automorphism of the intermediate ellipsoid E_{p_sigma/r}.
struct EllipsoidProperMap {
    ExponentVec p, q;
    Perm sigma;
    std::vector<long long> r;
    EllipsoidAut phi;
    std::vector<long long> alpha;   // outer powers, cached
    ExponentVec intermediate;       // exponents of E_{p_sigma/r}, cached

    int dim() const { return static_cast<int>(p.size()); }

    CVec eval(std::span<const C> z, double lambda) const;

    bool fixes_origin() const { return phi.fixes_origin(); }
    // Origin-fixing phi keeps sum |.|^{2p} invariant through the whole chain,
    // so image sums equal source sums pointwise.
    bool preserves_sums() const { return phi.fixes_origin(); }

    static EllipsoidProperMap make(const ExponentVec& p, const ExponentVec& q, const Perm& sigma,
                                   const std::vector<long long>& r, const EllipsoidAut& phi);
};

std::optional<Perm> ep_exists(const ExponentVec& p, const ExponentVec& q);

std::optional<EllipsoidProperMap> ep_canonical(const ExponentVec& p, const ExponentVec& q);

// Degree of the map as a branched cover (product of the power exponents).
long long ep_map_degree(const EllipsoidProperMap& m);

} // namespace hartogs
