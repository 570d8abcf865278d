#pragma once

#include "lifgap/lifshitz.hpp"

namespace lifgap {

/// Two plates at different temperatures across a vacuum gap.
struct HeatConfig {
    double gap = 0.0;  // m
    double T1 = 0.0;   // K, plate 1
    double T2 = 0.0;   // K, plate 2
    ResponseModel plate1 = ResponseModel::ideal_metal();
    ResponseModel plate2 = ResponseModel::ideal_metal();
};

struct HeatFluxResult {
    double total = 0.0;  // W/m^2, positive = net flow from plate 1 to 2
    double pw = 0.0, ew = 0.0;
    double pw_te = 0.0, pw_tm = 0.0;
    double ew_te = 0.0, ew_tm = 0.0;
    bool dissipationless = false;  // Re Z = 0 model: flux vanishes identically
    bool converged = true;
};

/// Radiated power per unit area through the propagating/evanescent spectra
/// with Fresnel (permittivity-form) reflection coefficients.
HeatFluxResult heat_flux_dielectric(const HeatConfig& cfg,
                                    const Accuracy& acc = {});

/// Same decomposition with Leontovich (impedance-form) coefficients.
HeatFluxResult heat_flux_impedance(const HeatConfig& cfg,
                                   const Accuracy& acc = {});

/// Single-integral impedance form (the B_TE/B_TM kernel); algebraically
/// identical to heat_flux_impedance and kept as an independent route.
double heat_flux_impedance_direct(const HeatConfig& cfg,
                                  const Accuracy& acc = {});

/// S_TE,EW / S_total.  Returns NaN (flag) when the total vanishes.
double te_ew_fraction(const HeatFluxResult& r);

/// Kirchhoff radiative flux of a single surface at temperature T (W/m^2).
double kirchhoff_flux(double T, const ResponseModel& m,
                      const Accuracy& acc = {}, bool impedance_form = true);

/// Emittivity e(T) = Phi(T) / (sigma_SB T^4), in [0, 1].
double emittivity(double T, const ResponseModel& m, const Accuracy& acc = {},
                  bool impedance_form = true);

}  // namespace lifgap
