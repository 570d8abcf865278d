#pragma once

#include "lifgap/materials.hpp"
#include "lifgap/numerics.hpp"
#include "lifgap/reflection.hpp"

namespace lifgap {

enum class Formulation { ImaginaryAxis, RealAxis };

/// Two plates separated by a vacuum gap.
struct Geometry {
    double gap = 0.0;          // m
    double temperature = 0.0;  // K
    ResponseModel plate1 = ResponseModel::ideal_metal();
    ResponseModel plate2 = ResponseModel::ideal_metal();

    double omega_c() const { return consts::c / (2.0 * gap); }
    double t_eff() const { return consts::hbar * omega_c() / consts::k_B; }
    /// small thermal parameter kappa = 4 pi k_B a T / (hbar c) = 2 pi T/T_eff
    double kappa() const {
        return 4.0 * consts::pi * consts::k_B * gap * temperature /
               (consts::hbar * consts::c);
    }
};

/// Below 200 nm the Leontovich boundary condition is no longer a good
/// approximation for metals; callers surface this as a warning.
bool impedance_gap_warning(const Geometry& g);

/// Numerical effort knobs shared by the lifshitz-level routines.
struct Accuracy {
    double sum_tol = 1e-12;       // Matsubara tail
    double quad_tol = 1e-10;      // imaginary-axis quadrature
    double real_tol = 1e-6;       // real-axis outer quadrature
    int max_subdiv = 40000;
};

struct ZeroPointParts {
    double energy = 0.0;    // E(a), J/m^2
    double pressure = 0.0;  // P0(a), Pa
    bool converged = true;
};

struct ThermalCorrection {
    double pressure = 0.0;     // Delta P, Pa
    double free_energy = 0.0;  // Delta F, J/m^2 (imaginary-axis route only)
    Formulation formulation = Formulation::ImaginaryAxis;
    bool converged = true;
};

struct PressureBreakdown {
    double total = 0.0;       // Pa
    double zero_point = 0.0;  // Pa
    double thermal = 0.0;     // Pa
    double te_ew = 0.0, te_pw = 0.0, tm_ew = 0.0, tm_pw = 0.0;
    double ratio_to_ideal = 0.0;
    bool converged = true;
};

struct FreeEnergyBreakdown {
    double total = 0.0;       // J/m^2
    double zero_point = 0.0;  // E(a)
    double thermal = 0.0;     // Delta F
    bool converged = true;
};

struct IdealReference {
    double dP = 0.0;     // thermal correction for ideal plates, Pa
    double dP_te = 0.0;  // TE half
};

/// Matsubara-sum free energy per unit area (J/m^2), T > 0.
double free_energy_matsubara(const Geometry& g, const Accuracy& acc = {},
                             bool* converged = nullptr);

/// Matsubara-sum pressure (Pa, negative = attraction), T > 0.
double pressure_matsubara(const Geometry& g, const Accuracy& acc = {},
                          bool* converged = nullptr);

/// Zero-point parts E(a) and P0(a) from the imaginary-axis integrals.
/// Temperature enters only through material parameters.
ZeroPointParts zero_point_parts(const Geometry& g, const Accuracy& acc = {});

/// Thermal corrections Delta P and Delta F.  The imaginary-axis route is
/// the difference of the Matsubara quantity and the zero-point part; the
/// real-axis route integrates the thermally excited spectrum directly.
ThermalCorrection thermal_correction(const Geometry& g, Formulation f,
                                     const Accuracy& acc = {});

/// Real-axis decomposition of Delta P into TE/TM x PW/EW channels.
PressureBreakdown channel_decomposition(const Geometry& g,
                                        const Accuracy& acc = {});

/// FreeEnergyBreakdown convenience wrapper (imaginary axis).
FreeEnergyBreakdown free_energy_breakdown(const Geometry& g,
                                          const Accuracy& acc = {});

/// Thermal correction for ideal-metal plates (polylog closed form per
/// Matsubara term minus the closed-form P0).  The evanescent contribution
/// vanishes identically.
IdealReference ideal_metal_reference(double gap, double temperature);

/// Closed forms for ideal metals, used as benchmarks.
double ideal_metal_energy(double gap);     // -pi^2 hbar c / (720 a^3)
double ideal_metal_pressure0(double gap);  // -pi^2 hbar c / (240 a^4)

}  // namespace lifgap
