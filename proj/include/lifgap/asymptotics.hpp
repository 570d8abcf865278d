#pragma once

#include <complex>
#include <limits>
#include <vector>

#include "lifgap/lifshitz.hpp"

namespace lifgap {

enum class NernstVerdict { Satisfied, Violated, Inconclusive };

struct NernstPoint {
    double T = 0.0;
    double free_energy = 0.0;        // numeric F(a, T)
    double entropy = 0.0;            // -dF/dT, numeric
    double entropy_fit_input = 0.0;  // after subtracting the known ln-kappa term
    double free_energy_asym = 0.0;   // low-T expansion (NaN outside validity)
    double entropy_asym = 0.0;       // low-T expansion (NaN outside validity)
};

struct AsymptoticReport {
    ModelKind model = ModelKind::IdealMetal;
    double gap = 0.0;
    std::vector<NernstPoint> ladder;  // descending temperatures
    double intercept = 0.0;           // fitted s0 of s0 + s2 T^2
    double intercept_scale = 0.0;     // k_B zeta(3) rho / (2 pi a^2)
    double predicted_T0_entropy = 0.0;  // Drude-interpolation zero-T value
    NernstVerdict verdict = NernstVerdict::Inconclusive;
    bool converged = true;
};

/// Low-temperature free energy for the infrared-optics impedance:
/// E(a) plus the cubic/quartic bracket in T/T_eff with skin-depth
/// corrections.  E(a) is computed numerically from the same model unless a
/// finite energy_hint is given.  Requires T/T_eff < 0.1 and rho < 0.1.
double free_energy_lowT_ir(double gap, double T, double omega_p,
                           double energy_hint =
                               std::numeric_limits<double>::quiet_NaN());

/// Matching low-temperature entropy; -d/dT of the expression above.
double entropy_lowT_ir(double gap, double T, double omega_p);

struct DrudeZeroModeTerms {
    double f_drude = 0.0;    // -zeta(3) k_B T / (8 pi a^2)
    double f_ir = 0.0;       // infrared-optics l = 0 term, by quadrature
    double delta_f = 0.0;    // f_drude - f_ir
};
/// Zero-Matsubara-frequency free-energy terms of the Drude and
/// infrared-optics impedances.  Requires rho < 0.5.
DrudeZeroModeTerms drude_zero_mode_terms(double gap, double T, double omega_p);

struct EntropyT0 {
    double quadrature = 0.0;  // exact integral form
    double series = 0.0;      // k_B zeta3 rho (1 - 6 rho) / (2 pi a^2)
};
/// Residual zero-temperature entropy of the Drude-impedance interpolation.
/// Requires rho < 0.1.  Positive: the Nernst heat theorem is violated.
EntropyT0 entropy_drude_T0(double gap, double omega_p);

/// Numerical Nernst-heat-theorem test: entropy ladder by temperature
/// differentiation of the Matsubara free energy, T->0 intercept fit on the
/// three lowest temperatures, verdict against the Drude zero-T prediction.
AsymptoticReport nernst_test(const ResponseModel& model, double gap,
                             std::vector<double> temperature_ladder);

// Perturbation-expansion building blocks (infrared-optics impedance).
double I0_closed(double x);  // -2 [Li3(e^-x) + x Li2(e^-x)]
double I1_closed(double x);  // 8 [Li3 + x Li2 - x^2 ln(1 - e^-x)]

/// Boundary function Phi(x) of the dimensionless free-energy integrand for
/// the infrared-optics impedance, analytically continued along y = x + u.
std::complex<double> phi_ir(std::complex<double> x, double rho);

}  // namespace lifgap
