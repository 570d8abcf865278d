#pragma once

#include <complex>

#include "lifgap/materials.hpp"

namespace lifgap {

/// One point of the (frequency, transverse wavenumber) spectrum.  The same
/// struct serves both axes; the functions below say which one `freq` means.
struct SpectralPoint {
    double freq = 0.0;    // xi (imaginary axis) or omega (real axis), rad/s
    double k_perp = 0.0;  // rad/m
};

/// TM/TE reflection amplitudes, real on the imaginary frequency axis.
struct ReflectionPair {
    double tm = 0.0;
    double te = 0.0;
};

struct ComplexReflectionPair {
    std::complex<double> tm{0.0, 0.0};
    std::complex<double> te{0.0, 0.0};
};

/// Longitudinal wavenumbers.  Imaginary axis: (q, k) both real positive.
/// Real axis: (k_z, s), k_z real for propagating waves and +i q for
/// evanescent ones, s on the Im s >= 0 branch.
struct Wavenumbers {
    std::complex<double> vacuum;  // q or k_z
    std::complex<double> medium;  // k or s
};
Wavenumbers longitudinal_wavenumbers_imag(const SpectralPoint& p,
                                          const ResponseModel& m, double T);
Wavenumbers longitudinal_wavenumbers_real(const SpectralPoint& p,
                                          const ResponseModel& m, double T);

/// Permittivity-form coefficients on the imaginary axis.  The TE sign
/// convention is r_TE = (k - q)/(k + q); only products of two plates and
/// moduli enter observables.  The point's freq may be 0: each model's exact
/// algebraic zero-frequency limit is used, never a numerical one.
ReflectionPair reflect_imag_eps(const SpectralPoint& p, const ResponseModel& m,
                                double T);

/// Impedance-form coefficients on the imaginary axis (same zero-frequency
/// guarantee).
ReflectionPair reflect_imag_impedance(const SpectralPoint& p,
                                      const ResponseModel& m, double T);

/// Coefficients on the real axis in the two forms.
ComplexReflectionPair reflect_real_eps(const SpectralPoint& p,
                                       const ResponseModel& m, double T);
ComplexReflectionPair reflect_real_impedance(const SpectralPoint& p,
                                             const ResponseModel& m, double T);

/// Natural-formalism dispatch: permittivity-bearing models go through the
/// Fresnel form, impedance models through the Leontovich form.
ReflectionPair reflect_imag(const SpectralPoint& p, const ResponseModel& m,
                            double T);
ComplexReflectionPair reflect_real(const SpectralPoint& p,
                                   const ResponseModel& m, double T);

}  // namespace lifgap
