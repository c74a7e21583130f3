#pragma once

#include <functional>
#include <vector>

#include "cdc/bigint.hpp"

namespace cdc {

/// Gaussian binomial [n r]_q, the number of r-dim subspaces of GF(q)^n.
/// Zero when r < 0 or r > n.
Int gaussian_binomial(long n, long r, unsigned q);

/// K_q = prod_{j>=1} (1 - q^{-j}), truncated once the next factor is within
/// 1e-15 of 1.  Used only in inequality checks, never in exact counts.
double kq_constant(unsigned q);

/// Scheme coefficients of the Grassmann association scheme on E_r(q,n):
/// c_j = J(1,j-1,j), b_j = J(1,j+1,j), a_j = N_C(1) - b_j - c_j.
struct SchemeCoefficients {
    std::vector<Int> a, b, c;  // index 0..r
};

/// Upper bounds (or exact values) for A_C(q,n,r,d), the maximum cardinality
/// of a CDC with minimum injection distance d.  Any valid upper bound may be
/// plugged into the ball-union bound.
struct AcBound {
    std::function<Int(unsigned d)> upper;

    /// [n r] at d <= 1, the anticode quotient [n r-d+1]/[r r-d+1] floored for
    /// 2 <= d <= r, and 1 beyond d = r.
    static AcBound anticode_default(unsigned q, unsigned n, unsigned r);
};

/// Cached counting data for one Grassmannian E_r(q,n): sphere and ball sizes,
/// multiplicities, scheme coefficients, and the intersection-number tables
/// computed by the two independent routes.
class GrassmannProfile {
public:
    GrassmannProfile(unsigned q, unsigned n, unsigned r);

    unsigned q() const { return q_; }
    unsigned n() const { return n_; }
    unsigned r() const { return r_; }

    const Int& whole() const { return whole_; }        // [n r]_q
    const Int& sphere(unsigned d) const;               // N_C(d)
    const Int& ball(unsigned t) const;                 // V_C(t)
    const Int& mu(unsigned i) const;                   // [n i] - [n i-1]
    const SchemeCoefficients& coeffs() const { return coeffs_; }
    double kq() const { return kq_; }

    /// q-Eberlein polynomial E_j(i); signed.
    const Int& eberlein(unsigned j, unsigned i) const;

    /// J_C(u,s,d) via the Eberlein eigenvalue expansion; the division by
    /// [n r] N_C(d) is asserted exact.
    const Int& intersection_number(unsigned u, unsigned s, unsigned d) const;

    /// J_C(u,s,d) via the three-term recursion; divisions by c_{u+1} are
    /// asserted exact.
    const Int& intersection_number_recursive(unsigned u, unsigned s, unsigned d) const;

    /// I_C(u,s,d) = sum_{i<=u, j<=s} J_C(i,j,d), the volume of the
    /// intersection of two balls at center distance d.
    Int ball_intersection(unsigned u, unsigned s, unsigned d) const;

    /// (exact lower bound q^{t(n-t)}, real upper bound K_q^{-2} q^{t(n-t)})
    /// for V_C(t); requires r <= n/2.
    std::pair<Int, double> vc_bounds(unsigned t) const;

private:
    void build_eberlein() const;
    void build_recursive() const;

    unsigned q_, n_, r_;
    Int whole_;
    std::vector<Int> sphere_, ball_, mu_;
    SchemeCoefficients coeffs_;
    double kq_;
    mutable std::vector<Int> eb_;        // (r+1) x (r+1), row-major E_j(i)
    mutable std::vector<Int> jc_;        // (r+1)^3 Eberlein route
    mutable std::vector<Int> jc_rec_;    // (r+1)^3 recursion route
    mutable bool eb_built_ = false, rec_built_ = false;
};

/// Upper bound B_C(K, rho) on the volume of the union of any K balls of
/// radius rho in E_r(q,n), via the greedy ordering argument.  `ac` supplies
/// upper bounds on A_C.
Int union_volume_bound(const GrassmannProfile& g, const Int& K, unsigned rho, const AcBound& ac);

}  // namespace cdc
