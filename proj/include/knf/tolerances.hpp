#pragma once

#include <cstdint>

#include "knf/errors.hpp"

namespace knf {

/// All numerical thresholds in one place. Every module takes one of these
/// (usually defaulted) instead of scattering magic constants.
struct ToleranceConfig {
    // matrix core
    double tol_recon = 1e-9;    // decomposition reconstruction, relative
    double tol_normal = 1e-9;   // normality residual gate, relative to 1+||m||^2
    double tol_unitary = 1e-9;  // basis unitarity residual
    double tol_herm = 1e-10;    // Hermitian symmetry gate
    double tol_sing = 1e-12;    // smallest singular value / eigenvalue cutoff
    double tol_det = 1e-9;      // |det - 1| for SL membership
    double tol_real = 1e-11;    // max imaginary entry for real-field members

    // groups / flow
    double tol_rel = 1e-9;   // relation residual for a validated representation
    double tol_mu = 1e-8;    // moment-map norm, relative to 1+kn_value
    double tol_member = 1e-5;  // generator-normality gate for scaling, relative

    // quotient separation
    double tol_orbit = 1e-6;  // unitary orbit distance for same_point
    double tol_sep = 1e-6;    // invariant-vector gap for different_point

    // caps (not tolerances; allowed to exceed 1)
    double cond_cap = 1e10;  // eigenbasis condition above which a matrix is defective
    double diag_cap = 1e6;   // conjugator norm above which degeneration is suspected

    int max_iters = 10000;
    std::uint64_t seed = 0;

    void validate() const {
        auto in_unit = [](double t) { return t > 0.0 && t < 1.0; };
        if (!in_unit(tol_recon) || !in_unit(tol_normal) || !in_unit(tol_unitary) ||
            !in_unit(tol_herm) || !in_unit(tol_sing) || !in_unit(tol_det) ||
            !in_unit(tol_real) || !in_unit(tol_rel) || !in_unit(tol_mu) ||
            !in_unit(tol_member) || !in_unit(tol_orbit) || !in_unit(tol_sep))
            throw ParseError("tolerances must lie in (0, 1)");
        if (cond_cap < 1.0 || diag_cap < 1.0)
            throw ParseError("caps must be >= 1");
        if (max_iters < 1) throw ParseError("max_iters must be >= 1");
    }
};

}  // namespace knf
