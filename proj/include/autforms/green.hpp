#pragma once

#include <vector>

#include "autforms/specfun.hpp"
#include "autforms/hyperbolic.hpp"

namespace autforms {

struct GreenParams {
    cx alpha{2.5, 0.0};
    int ell = 0;
    long c_max = 30;  // coset truncation of the automorphic sum

    void validate_free() const {
        if (ell < 0) throw domain_error("GreenParams: ell must be >= 0");
        if (!(alpha.real() > ell + 1.0))
            throw domain_error("GreenParams: requires Re alpha > ell + 1");
    }
    void validate_automorphic() const {
        validate_free();
        if (!(alpha.real() > 1.0)) throw domain_error("GreenParams: requires Re alpha > 1");
    }
};

struct PointPair {
    Point z, w;
};

// radial factor p_{alpha,ell}(rho): hypergeometric closed form for rho >= 1,
// Mellin-Barnes contour for rho < 1 (the two agree on the overlap).
cx p_green(const GreenParams& gp, double rho);
// individual routes, exposed for the overlap cross-check
cx p_green_hyp_route(const GreenParams& gp, double rho);
cx p_green_mb_route(const GreenParams& gp, double rho);

// H_ell(z,w) = ((conj z - w)/(conj w - z))^ell
cx h_factor(int ell, const Point& z, const Point& w);

// free-space Green function g_{alpha,ell}(z,w) = p(rho) H_ell
cx green_free(const GreenParams& gp, const PointPair& pair);

// LHS of the resolvent identity on power functions:
// int_0^inf ( int_R g(z, u+iv) du ) v^{nu - 3/2} dv  at z = iy.
cx horocycle_integral(const GreenParams& gp, double y, cx nu);
// its closed RHS, y^{1/2+nu}/((alpha-1/2)^2 - nu^2)
cx horocycle_closed(const GreenParams& gp, double y, cx nu);

// Both sides of the annulus integral: LHS by 2-D quadrature over the
// hyperbolic annulus 1 <= |z| <= a of p_alpha(rho(z, b z)), RHS closed.
struct AnnulusCheck {
    cx lhs, rhs;
};
AnnulusCheck annulus_integral_check(cx alpha, double a, double b);

// k(nu) = 1/((alpha-1/2)^2 - nu^2) - 1/((beta-1/2)^2 - nu^2)
cx k_spectral(cx alpha, cx beta, cx nu);

struct AutomorphicGreenValue {
    cx value;
    double est_tail;
};

// truncated automorphic Green function: cosets with c <= c_max, adaptive
// Gamma_inf-translates; refuses nearly singular pairs.
AutomorphicGreenValue automorphic_green(const GreenParams& gp, const PointPair& pair);
AutomorphicGreenValue automorphic_green_serial(const GreenParams& gp, const PointPair& pair);

// same sum over an explicit set of group elements (tests use matched sets)
cx automorphic_green_over(const GreenParams& gp, const PointPair& pair,
                          const std::vector<GroupElement>& gammas);

}  // namespace autforms
