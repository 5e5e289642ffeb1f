#pragma once

#include <string>
#include <vector>

#include "autforms/core.hpp"

namespace autforms {

// One verified identity: |residual| against its pinned tolerance.
struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    bool skipped = false;

    static CheckResult of(std::string name, double residual, double tol) {
        CheckResult r;
        r.name = std::move(name);
        r.residual = residual;
        r.tol = tol;
        r.pass = residual <= tol;
        return r;
    }
    static CheckResult skip(std::string name) {
        CheckResult r;
        r.name = std::move(name);
        r.skipped = true;
        r.pass = true;
        return r;
    }
};

// Whittaker ODE and both recurrences of the W-function on a log grid.
std::vector<CheckResult> check_recurrences();
// W-orthogonality integral, discrete norms, Kirillov Gram matrices.
std::vector<CheckResult> check_orthogonality();
// local functional equation, Mellin identities, Bessel-transform identities.
std::vector<CheckResult> check_bessel();
// Eisenstein direct-vs-Fourier, functional equation, scattering zero.
std::vector<CheckResult> check_eisenstein();
// Green-function routes, asymptotics, resolvent and annulus identities.
std::vector<CheckResult> check_green();
// elliptic orbital integrals and the coefficient identity.
std::vector<CheckResult> check_elliptic();
// census vs oracle and the pseudo-prime counting envelope.
std::vector<CheckResult> check_pgt();
// W-antisymmetry and chi-factor identities of the Selberg zeta completion.
std::vector<CheckResult> check_zeta_factors();
// optional: trace formula against an ingested spectral dataset.
std::vector<CheckResult> check_trace_formula(const std::string& eigenfile);

std::vector<CheckResult> check_all(const std::string& eigenfile = "");

}  // namespace autforms
