#pragma once

#include <functional>
#include <vector>

#include "autforms/core.hpp"

namespace autforms {

// Point of the upper half plane, z = x + iy with y > 0.
struct Point {
    double x = 0.0;
    double y = 1.0;

    Point() = default;
    Point(double x_, double y_) : x(x_), y(y_) {
        if (!(y > 0.0)) throw domain_error("Point: y must be positive");
    }
    explicit Point(cx z) : Point(z.real(), z.imag()) {}
    cx z() const { return {x, y}; }
};

// Element of PSL(2,R) as a unit-determinant 2x2 matrix with the sign fixed
// by the convention c > 0, or c == 0 and d > 0.
struct GroupElement {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    GroupElement() = default;
    GroupElement(double a_, double b_, double c_, double d_);

    static GroupElement identity() { return {}; }
    static GroupElement n_of(double x) { return {1.0, x, 0.0, 1.0}; }               // n[x]
    static GroupElement a_of(double y);                                             // a[y]
    static GroupElement k_of(double theta);                                         // k[theta]
    static GroupElement weyl() { return k_of(0.5 * PI); }

    GroupElement operator*(const GroupElement& o) const;
    GroupElement inverse() const { return {d, -b, -c, a}; }
    double det() const { return a * d - b * c; }
    double trace_abs() const { return std::abs(a + d); }
};

struct IwasawaCoords {
    double x = 0.0;
    double y = 1.0;
    double theta = 0.0;  // in [0, pi)
};

struct CartanCoords {
    double tau1 = 0.0;  // in [0, pi)
    double u = 1.0;     // >= 1
    double tau2 = 0.0;  // in [0, pi)
};

// Moebius action g(z) = (az+b)/(cz+d).
Point moebius(const GroupElement& g, const Point& z);

// j(g,z) = cz + d for the canonical representative.
cx jfactor(const GroupElement& g, const Point& z);

// rho(z1,z2) = |z1-z2|^2/(4 y1 y2), the point-pair invariant.
double rho_invariant(const Point& z1, const Point& z2);

// hyperbolic distance d = 2 arcsinh sqrt(rho)
double distance(const Point& z1, const Point& z2);

IwasawaCoords iwasawa(const GroupElement& g);
GroupElement from_iwasawa(const IwasawaCoords& c);

// g = k[tau1] a[u] k[tau2], u >= 1; tau2 = 0 when u == 1.
CartanCoords cartan(const GroupElement& g);
GroupElement from_cartan(const CartanCoords& c);

// k[theta] h = n[xi] a[u] k[vartheta] for h = n[alpha] a[beta] k[tau].
struct RightTranslateCoords {
    double xi, u, vartheta;
};
RightTranslateCoords right_translate_coords(double theta, const GroupElement& h);

// J: n[x]a[y]k[theta] -> n[-x]a[y]k[-theta], i.e. (a,b,c,d) -> (a,-b,-c,d).
GroupElement involution_J(const GroupElement& g);

// One representative per coset of Gamma_inf\Gamma with 0 <= c <= c_max:
// the coprime pairs (c,d), d reduced mod c with the smallest nonnegative a.
// c = 0 contributes the identity.
std::vector<GroupElement> enumerate_cosets(long c_max);

enum class MaassOp { EPlus, EMinus, W, Omega };

struct MaassResult {
    cx value;
    double richardson_delta;  // |step h result - step h/2 result|
};

// Apply a Maass operator (or the Casimir operator) to a sampled scalar
// field by 4th-order central differences with one Richardson refinement.
// The step is scaled by y internally.
MaassResult maass_apply(const std::function<cx(const GroupElement&)>& f, MaassOp op,
                        const GroupElement& g, double step = 1e-3);

// Same on Iwasawa coordinates directly (used where the sign of theta matters
// beyond the canonical representative).
MaassResult maass_apply_coords(const std::function<cx(double, double, double)>& f, MaassOp op,
                               double x, double y, double theta, double step = 1e-3);

}  // namespace autforms
