#pragma once

#include "cplx.hpp"
#include "exponent.hpp"

namespace hartogs {

// Point of C^n x C^m split into the two variable groups.
struct ZW {
    CVec z, w;
};

// The generalized Hartogs triangle { sum |z_j|^{2p_j} < sum |w_j|^{2q_j} < 1 }.
struct HartogsDomain {
    ExponentVec p, q;

    int n() const { return static_cast<int>(p.size()); }
    int m() const { return static_cast<int>(q.size()); }

    bool operator==(const HartogsDomain& o) const { return p == o.p && q == o.q; }
};

// Boundary splits into the origin, the cone part K (equal sums, below 1) and
// the cylinder part L (outer sum 1). Corner points with both sums 1 report
// OnL so the verdicts stay a partition.
enum class Verdict { Interior, OnK, OnL, Origin, Outside };

const char* verdict_name(Verdict v);

struct Sums {
    double sz = 0.0, sw = 0.0;
};

Sums domain_sums(const HartogsDomain& d, const ZW& pt, double lambda);

Verdict classify(const Sums& s, double tol);

Verdict membership(const HartogsDomain& d, const ZW& pt, double tol, double lambda);

} // namespace hartogs
