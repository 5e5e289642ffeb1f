#include "autforms/hyperbolic.hpp"

#include <cmath>
#include <numeric>

namespace autforms {

namespace {
// fold an angle into [0, pi); functions on G have period pi in theta
double mod_pi(double t) {
    double r = t - PI * std::floor(t / PI);
    if (r >= PI) r -= PI;
    if (r < 0.0) r += PI;
    return r;
}
}  // namespace

GroupElement::GroupElement(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
    double det = a * d - b * c;
    if (std::abs(det - 1.0) > 1e-12 * std::max(1.0, std::abs(a * d) + std::abs(b * c)))
        throw domain_error("GroupElement: determinant must be 1");
    if (c < 0.0 || (c == 0.0 && d < 0.0)) {
        a = -a;
        b = -b;
        c = -c;
        d = -d;
    }
}

GroupElement GroupElement::a_of(double y) {
    if (!(y > 0.0)) throw domain_error("a[y]: y must be positive");
    double r = std::sqrt(y);
    return {r, 0.0, 0.0, 1.0 / r};
}

GroupElement GroupElement::k_of(double theta) {
    return {std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta)};
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Point moebius(const GroupElement& g, const Point& z) {
    cx w = (cx(g.a, 0.0) * z.z() + g.b) / (cx(g.c, 0.0) * z.z() + g.d);
    return Point(w);
}

cx jfactor(const GroupElement& g, const Point& z) { return cx(g.c, 0.0) * z.z() + g.d; }

double rho_invariant(const Point& z1, const Point& z2) {
    double dx = z1.x - z2.x, dy = z1.y - z2.y;
    return (dx * dx + dy * dy) / (4.0 * z1.y * z2.y);
}

double distance(const Point& z1, const Point& z2) {
    return 2.0 * std::asinh(std::sqrt(rho_invariant(z1, z2)));
}

IwasawaCoords iwasawa(const GroupElement& g) {
    double den = g.c * g.c + g.d * g.d;
    IwasawaCoords out;
    out.x = (g.a * g.c + g.b * g.d) / den;
    out.y = 1.0 / den;
    // exp(2 i theta) = j(g,-i)/j(g,i) = (d - ci)/(d + ci)
    out.theta = mod_pi(-std::atan2(g.c, g.d));
    return out;
}

GroupElement from_iwasawa(const IwasawaCoords& c) {
    if (!(c.y > 0.0)) throw domain_error("from_iwasawa: y must be positive");
    double r = std::sqrt(c.y), ct = std::cos(c.theta), st = std::sin(c.theta);
    return {r * ct - c.x * st / r, r * st + c.x * ct / r, -st / r, ct / r};
}

CartanCoords cartan(const GroupElement& g) {
    CartanCoords out;
    // g g^t = k[tau1] a[u^2] k[-tau1]
    double m11 = g.a * g.a + g.b * g.b;
    double m12 = g.a * g.c + g.b * g.d;
    double m22 = g.c * g.c + g.d * g.d;
    if (std::abs(m12) < 1e-15 && std::abs(m11 - m22) < 1e-15) {
        // g in K
        out.u = 1.0;
        out.tau2 = 0.0;
        out.tau1 = mod_pi(std::atan2(-g.c, g.d));
        return out;
    }
    double phi = 0.5 * std::atan2(2.0 * m12, m11 - m22);
    double tau1 = -phi;
    GroupElement B = GroupElement::k_of(-tau1) * g;  // = a[u] k[tau2]
    double u = B.a * B.a + B.b * B.b;
    double tau2 = std::atan2(B.b, B.a);
    if (u < 1.0) {  // wrong eigenvalue order: shift by the Weyl element
        tau1 += 0.5 * PI;
        u = 1.0 / u;
        tau2 -= 0.5 * PI;
        B = GroupElement::k_of(-tau1) * g;
        u = B.a * B.a + B.b * B.b;
        tau2 = std::atan2(B.b, B.a);
    }
    out.tau1 = mod_pi(tau1);
    out.u = u;
    out.tau2 = mod_pi(tau2);
    return out;
}

GroupElement from_cartan(const CartanCoords& c) {
    return GroupElement::k_of(c.tau1) * GroupElement::a_of(c.u) * GroupElement::k_of(c.tau2);
}

RightTranslateCoords right_translate_coords(double theta, const GroupElement& h) {
    IwasawaCoords hc = iwasawa(h);
    double alpha = hc.x, beta = hc.y, tau = hc.theta;
    double ct = std::cos(theta), st = std::sin(theta);
    double re = ct - alpha * st, im = beta * st;
    RightTranslateCoords out;
    out.u = beta / (re * re + im * im);
    out.vartheta = mod_pi(tau + std::atan2(im, re));
    out.xi = iwasawa(GroupElement::k_of(theta) * h).x;
    return out;
}

GroupElement involution_J(const GroupElement& g) { return {g.a, -g.b, -g.c, g.d}; }

std::vector<GroupElement> enumerate_cosets(long c_max) {
    if (c_max < 1) throw domain_error("enumerate_cosets: c_max must be >= 1");
    std::vector<GroupElement> out;
    out.push_back(GroupElement::identity());
    for (long c = 1; c <= c_max; ++c) {
        for (long d = 0; d < c; ++d) {
            if (std::gcd(c, d) != 1) continue;
            // smallest nonnegative a with a d == 1 (mod c); b = (a d - 1)/c
            long a = 0;
            if (c == 1) {
                a = 0;
            } else {
                long t = 0, newt = 1, r = c, newr = d % c;
                while (newr != 0) {
                    long q = r / newr;
                    long tmp = t - q * newt;
                    t = newt;
                    newt = tmp;
                    tmp = r - q * newr;
                    r = newr;
                    newr = tmp;
                }
                a = ((t % c) + c) % c;  // d^{-1} mod c
            }
            long b = (a * d - 1) / c;
            out.emplace_back(static_cast<double>(a), static_cast<double>(b), static_cast<double>(c),
                             static_cast<double>(d));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
namespace {

struct CoordField {
    const std::function<cx(double, double, double)>& f;
    double x, y, theta;
    cx at(double dx, double dy, double dt) const { return f(x + dx, y + dy, theta + dt); }
};

// 4th-order central differences on a coordinate field
cx op_once(const CoordField& F, MaassOp op, double h) {
    auto d1 = [&](int axis) {
        auto ev = [&](double s) {
            return F.at(axis == 0 ? s : 0.0, axis == 1 ? s : 0.0, axis == 2 ? s : 0.0);
        };
        return (-ev(2 * h) + 8.0 * ev(h) - 8.0 * ev(-h) + ev(-2 * h)) / (12.0 * h);
    };
    const double y = F.y, th = F.theta;
    switch (op) {
        case MaassOp::W:
            return d1(2);
        case MaassOp::EPlus: {
            cx ph = std::exp(cx(0.0, 2.0 * th));
            return ph * (cx(0.0, 2.0 * y) * d1(0) + 2.0 * y * d1(1) - cx(0.0, 1.0) * d1(2));
        }
        case MaassOp::EMinus: {
            cx ph = std::exp(cx(0.0, -2.0 * th));
            return ph * (cx(0.0, -2.0 * y) * d1(0) + 2.0 * y * d1(1) + cx(0.0, 1.0) * d1(2));
        }
        case MaassOp::Omega: {
            auto d2 = [&](int axis) {
                auto ev = [&](double s) {
                    return F.at(axis == 0 ? s : 0.0, axis == 1 ? s : 0.0, axis == 2 ? s : 0.0);
                };
                return (-ev(2 * h) + 16.0 * ev(h) - 30.0 * ev(0.0) + 16.0 * ev(-h) - ev(-2 * h)) /
                       (12.0 * h * h);
            };
            // mixed d/dx d/dtheta, 4th order in each direction
            auto dxt = [&]() {
                auto dth = [&](double sx) {
                    auto ev = [&](double st) { return F.at(sx, 0.0, st); };
                    return (-ev(2 * h) + 8.0 * ev(h) - 8.0 * ev(-h) + ev(-2 * h)) / (12.0 * h);
                };
                return (-dth(2 * h) + 8.0 * dth(h) - 8.0 * dth(-h) + dth(-2 * h)) / (12.0 * h);
            };
            return -y * y * (d2(0) + d2(1)) + y * dxt();
        }
    }
    return 0.0;
}

}  // namespace

MaassResult maass_apply_coords(const std::function<cx(double, double, double)>& f, MaassOp op,
                               double x, double y, double theta, double step) {
    CoordField F{f, x, y, theta};
    double h = step * y;
    h = std::min(h, 0.2 * y);  // keep y - 2h positive with margin
    cx v1 = op_once(F, op, h);
    cx v2 = op_once(F, op, 0.5 * h);
    MaassResult r;
    r.richardson_delta = std::abs(v2 - v1);
    r.value = (16.0 * v2 - v1) / 15.0;
    return r;
}

MaassResult maass_apply(const std::function<cx(const GroupElement&)>& f, MaassOp op,
                        const GroupElement& g, double step) {
    IwasawaCoords c = iwasawa(g);
    auto fc = [&](double x, double y, double t) { return f(from_iwasawa({x, y, t})); };
    return maass_apply_coords(fc, op, c.x, c.y, c.theta, step);
}

}  // namespace autforms
