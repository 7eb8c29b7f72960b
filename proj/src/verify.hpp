#pragma once

#include <functional>

#include "hartogs_aut.hpp"
#include "hartogs_map.hpp"

namespace hartogs {

struct VerificationReport {
    std::string property;
    std::size_t samples = 0;
    double worst_residual = 0.0;
    bool pass = false;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
};

// Level/ratio windows for the modulus sums of generated points. Boundary
// sweeps sit high in the window so that images of desk-scale power maps stay
// above the verdict tolerance.
struct SampleWindow {
    double level_min = 0.25;
    double level_max = 0.90;
    double ratio_min = 0.10;
    double ratio_max = 0.90;
};

// Deterministic points with the requested membership verdict. Boundary levels
// are hit by distributing modulus weights exactly, not by rejection.
std::vector<ZW> sample_hartogs(const HartogsDomain& d, Verdict region, std::size_t count,
                               std::uint64_t seed, double lambda, const SampleWindow& win = {});

std::vector<CVec> sample_ellipsoid(const ExponentVec& p, bool boundary, std::size_t count,
                                   std::uint64_t seed, double lambda, const SampleWindow& win = {});

// Levi form of the defining function sum |z|^{2p} - |w|^{2q} at a K point of
// a triangle with m = 1, evaluated on the tangent pair (X, Y).
double levi_form(const ExponentVec& p, const Exponent& q, const CVec& z, C w,
                 const CVec& X, C Y, double lambda, double on_k_tol = 1e-9);

// The Y completing X to a complex-tangent vector at the K point.
C levi_tangent(const ExponentVec& p, const Exponent& q, const CVec& z, C w,
               const CVec& X, double lambda);

// lhs: Levi form with the induced tangent Y; rhs: the sum-of-squares form
// (1/|w|^{2q}) sum_{j<k} |z_j|^{2(p_j-1)} |z_k|^{2(p_k-1)} |p_j z_k X_j - p_k z_j X_k|^2.
std::pair<double, double> levi_restricted_identity(const ExponentVec& p, const Exponent& q,
                                                   const CVec& z, C w, const CVec& X,
                                                   double lambda, double on_k_tol = 1e-9);

// Direction annihilating the restricted Levi form: X_j = t z_j / p_j.
CVec levi_kernel_direction(const ExponentVec& p, const CVec& z, double lambda);

using EvalFn = std::function<ZW(const ZW&)>;

EvalFn map_eval_fn(const HartogsProperMap& m, double lambda);
EvalFn aut_eval_fn(const HartogsAut& a, double lambda);

// Central-difference Wirtinger residual max_j |d F / d conj(x_j)| over the
// samples; holomorphic maps sit at round-off, conjugations near 1.
VerificationReport check_holomorphy_fd(const EvalFn& fn, const std::vector<ZW>& samples,
                                       double h, double tol = 1e-5);

// Samples of `region` must land on the same stratum of dst.
VerificationReport check_boundary_invariance(const EvalFn& fn, const HartogsDomain& src,
                                             const HartogsDomain& dst, Verdict region,
                                             std::size_t count, std::uint64_t seed, double lambda,
                                             double tol = 1e-8);

// Interior samples must map to interior points with relative margin > tol:
// s~_z / s~_w and s~_w both below 1 - tol.
VerificationReport check_interior_soundness(const HartogsProperMap& m, std::size_t count,
                                            std::uint64_t seed, double lambda, double tol = 1e-10);
VerificationReport check_interior_soundness_fn(const EvalFn& fn, const HartogsDomain& src,
                                               const HartogsDomain& dst, std::size_t count,
                                               std::uint64_t seed, double lambda,
                                               double tol = 1e-10);

// Boundary-gap decay along rays: fits image_gap ~ C * gap^gamma and requires
// gamma > 0 on every ray (worst fitted gamma is reported as the residual).
VerificationReport check_properness_ray(const EvalFn& fn, const HartogsDomain& src,
                                        const HartogsDomain& dst, Verdict toward,
                                        std::size_t ray_count, std::size_t steps,
                                        std::uint64_t seed, double lambda);

struct SuiteConfig {
    std::size_t count = 200;
    std::uint64_t seed = 42;
    double lambda = M_SQRT2;
    double tol_boundary = 1e-8;
    double tol_interior = 1e-10;
};

std::vector<VerificationReport> run_suite(const HartogsProperMap& m, const std::string& suite,
                                          const SuiteConfig& cfg);
std::vector<VerificationReport> run_suite(const HartogsAut& a, const std::string& suite,
                                          const SuiteConfig& cfg);

} // namespace hartogs
