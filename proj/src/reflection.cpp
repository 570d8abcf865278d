#include "lifgap/reflection.hpp"

#include <cmath>
#include <limits>

namespace lifgap {

using consts::c;
using std::complex;

namespace {

// s = sqrt(eps w^2/c^2 - kperp^2) on the Im s >= 0 branch.  The principal
// square root already lands there for passive media (Im eps >= 0); for a
// negative real argument the +0 imaginary part selects +i |.|.
complex<double> medium_root(const complex<double>& eps, double omega,
                            double k_perp) {
    const complex<double> arg =
        eps * (omega / c) * (omega / c) - k_perp * k_perp;
    complex<double> s = std::sqrt(complex<double>(arg.real(), arg.imag() + 0.0));
    if (s.imag() < 0.0) s = -s;
    return s;
}

}  // namespace

Wavenumbers longitudinal_wavenumbers_imag(const SpectralPoint& p,
                                          const ResponseModel& m, double T) {
    Wavenumbers w;
    const double q = std::hypot(p.k_perp, p.freq / c);
    w.vacuum = q;
    w.medium = q;
    if (p.freq > 0.0) {
        double eps;
        if (m.is_permittivity_form()) {
            eps = m.eps_imag(p.freq, T);
        } else {
            const double z = m.impedance_imag(p.freq, T);
            eps = z != 0.0 ? 1.0 / (z * z)
                           : std::numeric_limits<double>::infinity();
        }
        w.medium = std::isinf(eps)
                       ? std::numeric_limits<double>::infinity()
                       : std::sqrt(p.k_perp * p.k_perp +
                                   eps * p.freq * p.freq / (c * c));
    }
    return w;
}

Wavenumbers longitudinal_wavenumbers_real(const SpectralPoint& p,
                                          const ResponseModel& m, double T) {
    Wavenumbers w;
    const double w2 = (p.freq / c) * (p.freq / c) - p.k_perp * p.k_perp;
    if (w2 >= 0.0)
        w.vacuum = std::sqrt(w2);  // propagating
    else
        w.vacuum = complex<double>(0.0, std::sqrt(-w2));  // evanescent, +iq
    w.medium = medium_root(m.eps_real(p.freq, T), p.freq, p.k_perp);
    return w;
}

ReflectionPair reflect_imag_eps(const SpectralPoint& p, const ResponseModel& m,
                                double T) {
    if (!m.is_permittivity_form() && m.kind() != ModelKind::IdealMetal)
        throw model_mismatch_error("reflect_imag_eps: impedance-only model");
    ReflectionPair r;
    if (m.kind() == ModelKind::IdealMetal) {
        // eps -> inf limit of the Fresnel form
        r.tm = 1.0;
        r.te = 1.0;
        return r;
    }
    const double wp = m.params().omega_p;
    if (p.freq == 0.0) {
        // exact algebraic limits: the l = 0 term is never evaluated
        // numerically
        r.tm = 1.0;
        if (m.kind() == ModelKind::PlasmaEps) {
            const double k0 = std::hypot(p.k_perp, wp / c);
            r.te = (k0 - p.k_perp) / (k0 + p.k_perp);
        } else {
            r.te = 0.0;  // Drude: eps xi^2 -> 0
        }
        return r;
    }
    const double eps = m.eps_imag(p.freq, T);
    const double q = std::hypot(p.k_perp, p.freq / c);
    const double k =
        std::sqrt(p.k_perp * p.k_perp + eps * p.freq * p.freq / (c * c));
    r.tm = (eps * q - k) / (eps * q + k);
    r.te = (k - q) / (k + q);
    return r;
}

ReflectionPair reflect_imag_impedance(const SpectralPoint& p,
                                      const ResponseModel& m, double T) {
    ReflectionPair r;
    if (m.kind() == ModelKind::IdealMetal) {
        r.tm = 1.0;
        r.te = 1.0;
        return r;
    }
    if (p.freq == 0.0) {
        r.tm = 1.0;
        switch (m.kind()) {
            case ModelKind::DrudeEps:
            case ModelKind::DrudeZ:
            case ModelKind::NormalSkinZ:
                // Z(i xi) ~ sqrt(xi): c q Z / xi diverges
                r.te = -1.0;
                break;
            default: {
                // Z(i xi) ~ xi / omega_p
                const double u = c * p.k_perp / m.params().omega_p;
                r.te = (1.0 - u) / (1.0 + u);
                break;
            }
        }
        return r;
    }
    const double z = m.impedance_imag(p.freq, T);
    const double q = std::hypot(p.k_perp, p.freq / c);
    r.tm = (c * q - z * p.freq) / (c * q + z * p.freq);
    r.te = (p.freq - c * q * z) / (p.freq + c * q * z);
    return r;
}

ComplexReflectionPair reflect_real_eps(const SpectralPoint& p,
                                       const ResponseModel& m, double T) {
    ComplexReflectionPair r;
    if (m.kind() == ModelKind::IdealMetal) {
        r.tm = 1.0;
        r.te = 1.0;
        return r;
    }
    const complex<double> eps = m.eps_real(p.freq, T);
    const Wavenumbers w = longitudinal_wavenumbers_real(p, m, T);
    r.tm = (eps * w.vacuum - w.medium) / (eps * w.vacuum + w.medium);
    r.te = (w.medium - w.vacuum) / (w.medium + w.vacuum);
    return r;
}

ComplexReflectionPair reflect_real_impedance(const SpectralPoint& p,
                                             const ResponseModel& m, double T) {
    ComplexReflectionPair r;
    if (m.kind() == ModelKind::IdealMetal) {
        r.tm = 1.0;
        r.te = 1.0;
        return r;
    }
    const complex<double> z = m.impedance_real(p.freq, T);
    const double w2 = (p.freq / c) * (p.freq / c) - p.k_perp * p.k_perp;
    complex<double> kz;
    if (w2 >= 0.0)
        kz = std::sqrt(w2);
    else
        kz = complex<double>(0.0, std::sqrt(-w2));
    r.tm = (c * kz - z * p.freq) / (c * kz + z * p.freq);
    r.te = (p.freq - c * kz * z) / (p.freq + c * kz * z);
    return r;
}

ReflectionPair reflect_imag(const SpectralPoint& p, const ResponseModel& m,
                            double T) {
    if (m.is_permittivity_form()) return reflect_imag_eps(p, m, T);
    return reflect_imag_impedance(p, m, T);
}

ComplexReflectionPair reflect_real(const SpectralPoint& p,
                                   const ResponseModel& m, double T) {
    if (m.is_permittivity_form()) return reflect_real_eps(p, m, T);
    return reflect_real_impedance(p, m, T);
}

}  // namespace lifgap
