#pragma once

#include <string>
#include <vector>

#include "autforms/hyperbolic.hpp"
#include "autforms/specfun.hpp"

namespace autforms {

// A primitive hyperbolic conjugacy class bucket: all prime classes of one
// trace, with their common norm and the class count as multiplicity.
struct ConjClass {
    long trace = 3;
    double norm = 0.0;  // N = lambda^2, lambda = (t + sqrt(t^2-4))/2
    GroupElement representative;
    long multiplicity = 1;
};

double class_norm(long trace);

// all primitive classes with N < x_max, one ConjClass per trace, sorted by
// norm; multiplicities from the reduction cycles of indefinite forms of
// discriminant t^2 - 4, with matrix-imprimitive cycles removed.
std::vector<ConjClass> enumerate_pseudo_primes(double x_max);
std::vector<ConjClass> enumerate_pseudo_primes_serial(double x_max);

// Brute-force oracle: enumerate integer matrices of trace t with bounded
// entries, merge under conjugation by the group generators, count orbits.
// Returns (number of classes, one representative per class).
struct OracleClasses {
    long trace;
    long count;                          // all classes of this trace
    long primitive_count;                // classes that are not proper powers
    std::vector<GroupElement> reps;      // one per class
};
OracleClasses census_bruteforce(long trace, long entry_bound = 40);

// psi_Gamma(x) = sum_{n>=1} sum_{N(pi) < x^{1/n}} log N(pi)
double psi_gamma(double x);
// pi_Gamma(x): count of pseudo-primes (with multiplicity) below x
long pi_gamma(double x);
// logarithmic integral li(x) = PV int_0^x dt/log t
double log_integral(double x);

// zeta_Gamma'(s)/zeta_Gamma(s) (Re s > 1), truncated at N < x_max
struct TruncatedValue {
    cx value;
    double est_tail;
};
TruncatedValue selberg_zeta_logderiv(cx s, double x_max);
TruncatedValue selberg_zeta(cx s, double x_max);

// identity contribution -(1/6)(psi(alpha) - psi(beta))
cx identity_term(cx alpha, cx beta);

// elliptic contribution T_alpha(w2) + sum_j T_alpha(w3^j), closed form
cx elliptic_term(cx alpha);
// single orbital integral, closed form (41.14)
cx elliptic_T_closed(cx alpha, int m, int j);
// quadrature oracle of the orbital integral (41.5)
cx elliptic_T_quadrature(cx alpha, int m, int j);

// parabolic contribution: the closed digamma/zeta form of (39.13)+(39.14)
cx parabolic_term(cx alpha, cx beta);
// contour-quadrature cross-check of the phi'/phi integral with the 1/nu
// regularizer, truncated at |Im nu| = height
cx parabolic_phi_integral_quadrature(cx alpha, cx beta, double height = 200.0);
cx parabolic_phi_integral_closed(cx alpha, cx beta);

// W(s) of the Selberg zeta completion, and Psi_Gamma(s)
cx w_term(cx s);
// closed trigonometric combination equal to W(1/2+eta) + W(1/2-eta)
cx w_antisymmetry_rhs(cx eta);
TruncatedValue psi_capital(cx s, double x_max);

// spectral parameters r (nu = i r), ingested from a text file
struct SpectralDataset {
    std::vector<double> r;
    std::string source;
    static SpectralDataset load(const std::string& path);
};

struct TraceFormulaReport {
    double geometric;   // Psi(alpha)/(2 alpha - 1) - Psi(beta)/(2 beta - 1)
    double spectral;    // dataset sum + Weyl tail model
    double gap;
    double tail_estimate;
};
TraceFormulaReport trace_formula_check(cx alpha, cx beta, const SpectralDataset& data, double x_max);

struct WeylReport {
    long count;
    double prediction;  // K^2/12
};
WeylReport weyl_report(const SpectralDataset& data, double K);

struct FunctionalEquationFactors {
    cx chi_p, chi_e, chi_1;
};
FunctionalEquationFactors functional_equation_factors(cx s);

// CSV writers (atomic: tmp file + rename)
void write_census_csv(const std::string& path, const std::vector<ConjClass>& classes);
void write_counting_csv(const std::string& path, const std::vector<double>& xs);

}  // namespace autforms
