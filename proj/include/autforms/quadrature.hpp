#pragma once

#include <functional>
#include <vector>

#include "autforms/core.hpp"

namespace autforms {

// Contour offsets, truncation heights, node counts and tolerances for the
// Mellin-Barnes and oscillatory integrals.  Passed by value everywhere.
struct QuadratureSpec {
    double contour_offset = -0.5;
    double truncation_height = 40.0;
    int node_count = 2400;
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;

    void validate() const {
        if (node_count < 16) throw domain_error("QuadratureSpec: node_count must be >= 16");
        if (abs_tol <= 0 || rel_tol <= 0) throw domain_error("QuadratureSpec: tolerances must be positive");
    }
};

// tanh-sinh rule on (-1,1); levels: n nodes per side at step h.
struct TanhSinhRule {
    std::vector<double> t;  // abscissae in (-1,1)
    std::vector<double> w;
    explicit TanhSinhRule(int n = 160, double h = 0.0);
};

// integral of f over (a,b); endpoint singularities of integrable algebraic
// or logarithmic type are handled by the rule.
cx tanh_sinh(const std::function<cx(double)>& f, double a, double b, int n = 160);

// integral over (0, inf) of a function decaying at least algebraically,
// via the exp-sinh substitution x = exp(sinh u).
cx exp_sinh_halfline(const std::function<cx(double)>& f, double scale = 1.0, int n = 220);

// Gauss-Legendre nodes/weights on [-1,1], computed by Newton iteration.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

// integral of f over [a,b] with an n-point Gauss-Legendre rule.
cx gauss_legendre_int(const std::function<cx(double)>& f, double a, double b, int n = 48);

// Uniform trapezoid of f over [a,b] with n+1 nodes (periodic/spectral use).
cx trapezoid_uniform(const std::function<cx(double)>& f, double a, double b, int n);

}  // namespace autforms
