#pragma once

#include <vector>

#include "autforms/core.hpp"
#include "autforms/quadrature.hpp"

namespace autforms {

// nu together with the weight index ell (weight = 2 ell) and the character
// sign delta; mu of the Whittaker factor is delta*ell.
struct SpectralParameter {
    cx nu{0.0, 0.0};
    int ell = 0;
    int delta = +1;
};

// Gamma function, Spouge approximation with reflection.  Relative error
// below 1e-13 for |s| <= 60 away from poles.
cx cgamma(cx s);

// log Gamma, principal branch on the cut plane.
cx clgamma(cx s);

// Gamma(a)/Gamma(b).  Returns 0 when b is a pole of Gamma and a is not;
// throws when a is a pole and b is not.
cx cgamma_ratio(cx a, cx b);

// Logarithmic derivative of Gamma.
cx digamma(cx s);

// Riemann zeta by Euler-Maclaurin with reflection for Re s < 0.
// Valid through |Im s| ~ 1e4 with relative error <= 1e-10.
cx riemann_zeta(cx s);

// zeta'(s), by differentiating the Euler-Maclaurin formula termwise.
cx riemann_zeta_deriv(cx s);

// K-Bessel of complex order via the cosh integral representation.
// Underflows to zero for y > 700.
cx bessel_K(cx nu, double y);

// J-Bessel of complex order; power series (compensated) for moderate y,
// Hankel asymptotics beyond.  Intended for |Re nu| <= 8.
cx bessel_J(cx nu, double y);

// I-Bessel of complex order (series / asymptotic).
cx bessel_I(cx nu, double y);

// Gauss hypergeometric 2F1(a,b;c;xi).  Series / Pfaff / Mellin-Barnes
// depending on xi; throws on the branch cut xi >= 1 real and when c is a
// nonpositive integer.
cx hyp2f1(cx a, cx b, cx c, cx xi);

// Whittaker W_{mu,nu}(y).
//
// Generic parameters go through the Mellin-Barnes integral with a scanned
// contour offset and residue corrections for poles to its right.  When
// 1/2 - mu + nu or 1/2 - mu - nu is a nonpositive integer the contour cannot
// separate the pole families and the function degenerates to
// (-1)^k k! y^{nu'+1/2} e^{-y/2} L_k^{(2 nu')}(y); that closed form is used.
// A nu-circle average stabilizes the rare 2*nu-near-integer pole collisions.
class WhittakerEvaluator {
  public:
    WhittakerEvaluator(cx mu, cx nu, double rel_tol = 1e-12);

    cx operator()(double y) const;

    bool laguerre_branch() const { return laguerre_; }
    cx mu() const { return mu_; }
    cx nu() const { return nu_; }

  private:
    void build_laguerre(cx nu_eff, long k0);
    void build_contour(double rel_tol);
    void build_series();
    cx eval_series(double y) const;

    cx mu_, nu_;
    bool laguerre_ = false;
    // Laguerre branch: W = e^{-y/2} y^{pow_} sum poly_[j] y^j
    std::vector<cx> poly_;
    cx pow_{0.0, 0.0};
    // small-y branch: W = e^{-y/2} (y^{1/2+nu} sum ser_c_[k] y^k
    //                              + y^{1/2-nu} sum ser_d_[k] y^k)
    std::vector<cx> ser_c_, ser_d_;
    double y_switch_ = 5.0;
    // Mellin-Barnes branch
    double c_ = -0.5;
    double h_ = 0.02;
    std::vector<double> node_t_;
    std::vector<cx> node_w_;
    struct Residue {
        cx p;
        cx coef;
    };
    std::vector<Residue> residues_;
    // nu-circle averaging
    std::vector<WhittakerEvaluator> sub_;
};

cx whittaker_W(cx mu, cx nu, double y);

// Independent route for tests: the real integral representation
//   W = y^{1/2-nu} e^{-y/2} / Gamma(1/2-mu-nu) *
//       int_0^inf e^{-y rho} rho^{-(mu+nu)-1/2} (1+rho)^{mu-nu-1/2} drho,
// requiring Re(mu+nu) < 1/2 (either sign of nu is used).
cx whittaker_W_integral_oracle(cx mu, cx nu, double y);

}  // namespace autforms
