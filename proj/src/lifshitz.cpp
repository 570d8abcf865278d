#include "lifgap/lifshitz.hpp"

#include <algorithm>
#include <cmath>

namespace lifgap {

using consts::c;
using consts::hbar;
using consts::k_B;
using consts::pi;
using std::complex;

namespace {

struct PairProducts {
    double tm = 0.0;
    double te = 0.0;
};

// r^(1) r^(2) per polarization at the dimensionless point (zeta, y);
// zeta = 0 routes through the exact algebraic limits.
PairProducts products_imag(const Geometry& g, double zeta, double y) {
    const double a = g.gap;
    const double xi = zeta * c / (2.0 * a);
    const double kperp =
        std::sqrt(std::max(0.0, y * y - zeta * zeta)) / (2.0 * a);
    const SpectralPoint pt{xi, kperp};
    const ReflectionPair r1 = reflect_imag(pt, g.plate1, g.temperature);
    const ReflectionPair r2 = reflect_imag(pt, g.plate2, g.temperature);
    return {r1.tm * r2.tm, r1.te * r2.te};
}

// y * sum_pol ln(1 - Pi e^-y); the clamp guards the unphysical pole of the
// Zp extrapolation at very large y, where the weight is ~e^-60
double f_integrand(const Geometry& g, double zeta, double y) {
    const PairProducts p = products_imag(g, zeta, y);
    const double ey = std::exp(-y);
    double v = 0.0;
    for (double prod : {p.tm, p.te}) {
        double x = prod * ey;
        if (x > 1.0 - 1e-14) x = 1.0 - 1e-14;
        v += y * std::log1p(-x);
    }
    return v;
}

// y^2 * sum_pol Pi e^-y / (1 - Pi e^-y)
double p_integrand(const Geometry& g, double zeta, double y) {
    const PairProducts p = products_imag(g, zeta, y);
    const double ey = std::exp(-y);
    double v = 0.0;
    for (double prod : {p.tm, p.te}) {
        double x = prod * ey;
        if (x > 1.0 - 1e-14) x = 1.0 - 1e-14;
        v += y * y * x / (1.0 - x);
    }
    return v;
}

enum class Kernel { FreeEnergy, Pressure };

double inner_integral(const Geometry& g, double zeta, Kernel k,
                      const Accuracy& acc, bool* ok) {
    QuadratureSpec spec;
    spec.rel_tol = acc.quad_tol * 0.01;
    spec.abs_floor = 0.0;
    spec.max_subdiv = 400;
    spec.decay_scale = 1.0;
    auto f = [&](double u) {
        const double y = zeta + u;
        return k == Kernel::FreeEnergy ? f_integrand(g, zeta, y)
                                       : p_integrand(g, zeta, y);
    };
    const QuadResult r = integrate_semi_infinite(f, spec);
    if (!r.converged && ok) *ok = false;
    return r.value;
}

}  // namespace

bool impedance_gap_warning(const Geometry& g) {
    const bool imp1 = !g.plate1.is_permittivity_form() &&
                      g.plate1.kind() != ModelKind::IdealMetal;
    const bool imp2 = !g.plate2.is_permittivity_form() &&
                      g.plate2.kind() != ModelKind::IdealMetal;
    return (imp1 || imp2) && g.gap < 2e-7;
}

double free_energy_matsubara(const Geometry& g, const Accuracy& acc,
                             bool* converged) {
    if (!(g.temperature > 0.0))
        throw std::domain_error("free_energy_matsubara: T must be positive");
    bool ok = true;
    const double kappa = g.kappa();
    SumSpec ss;
    ss.rel_tol = acc.sum_tol;
    const SumResult s = matsubara_sum(
        [&](std::size_t l) {
            return inner_integral(g, kappa * double(l), Kernel::FreeEnergy,
                                  acc, &ok);
        },
        ss);
    if (!s.converged) ok = false;
    if (converged) *converged = ok;
    return k_B * g.temperature / (8.0 * pi * g.gap * g.gap) * s.value;
}

double pressure_matsubara(const Geometry& g, const Accuracy& acc,
                          bool* converged) {
    if (!(g.temperature > 0.0))
        throw std::domain_error("pressure_matsubara: T must be positive");
    bool ok = true;
    const double kappa = g.kappa();
    SumSpec ss;
    ss.rel_tol = acc.sum_tol;
    const SumResult s = matsubara_sum(
        [&](std::size_t l) {
            return inner_integral(g, kappa * double(l), Kernel::Pressure, acc,
                                  &ok);
        },
        ss);
    if (!s.converged) ok = false;
    if (converged) *converged = ok;
    return -k_B * g.temperature / (8.0 * pi * g.gap * g.gap * g.gap) * s.value;
}

ZeroPointParts zero_point_parts(const Geometry& g, const Accuracy& acc) {
    ZeroPointParts zp;
    bool ok = true;
    QuadratureSpec outer;
    outer.rel_tol = acc.quad_tol;
    outer.max_subdiv = 4000;
    outer.decay_scale = 1.0;
    const QuadResult e = integrate_semi_infinite(
        [&](double zeta) {
            return inner_integral(g, zeta, Kernel::FreeEnergy, acc, &ok);
        },
        outer);
    const QuadResult p = integrate_semi_infinite(
        [&](double zeta) {
            return inner_integral(g, zeta, Kernel::Pressure, acc, &ok);
        },
        outer);
    const double a = g.gap;
    zp.energy = hbar * c / (32.0 * pi * pi * a * a * a) * e.value;
    zp.pressure = -hbar * c / (32.0 * pi * pi * a * a * a * a) * p.value;
    zp.converged = ok && e.converged && p.converged;
    return zp;
}

// ---------------------------------------------------------------- real axis

namespace {

enum class Pol { TM, TE };

complex<double> product_real(const Geometry& g, double omega, double kperp,
                             Pol pol) {
    const SpectralPoint pt{omega, kperp};
    const ComplexReflectionPair r1 = reflect_real(pt, g.plate1, g.temperature);
    const ComplexReflectionPair r2 = reflect_real(pt, g.plate2, g.temperature);
    return pol == Pol::TM ? r1.tm * r2.tm : r1.te * r2.te;
}

// Re [1 - e^{-2 i kz a}/Pi]^{-1} on the propagating branch
double pw_kernel(const Geometry& g, double omega, double kz, Pol pol) {
    const double kperp =
        std::sqrt(std::max(0.0, (omega / c) * (omega / c) - kz * kz));
    const complex<double> prod = product_real(g, omega, kperp, pol);
    const complex<double> ph = std::polar(1.0, -2.0 * kz * g.gap);
    const complex<double> den = prod - ph;
    if (den == complex<double>(0.0, 0.0)) return 0.0;
    return (prod / den).real();
}

// Im [1 - e^{2 q a}/Pi]^{-1} on the evanescent branch, computed without
// large exponentials
double ew_kernel(const Geometry& g, double omega, double q, Pol pol) {
    const double kperp = std::hypot(omega / c, q);
    const complex<double> prod = product_real(g, omega, kperp, pol);
    const double e2 = std::exp(-2.0 * q * g.gap);
    const complex<double> den = 1.0 - prod * e2;
    if (den == complex<double>(0.0, 0.0)) return 0.0;
    return (-prod * e2 / den).imag();
}

// surface-mode location estimate for the TM evanescent resonance
double ew_resonance_guess(const Geometry& g, double omega) {
    auto zmag = [&](const ResponseModel& m) {
        if (m.kind() == ModelKind::IdealMetal) return 0.0;
        return std::abs(m.impedance_real(omega, g.temperature));
    };
    const double z = std::max(zmag(g.plate1), zmag(g.plate2));
    if (z <= 0.0) return 0.0;
    return std::sqrt(2.0 * z * omega / (c * g.gap));
}

std::vector<double> pw_breakpoints(const Geometry& g, double omega) {
    std::vector<double> bp;
    const double kmax = omega / c;
    const double step = pi / g.gap;
    for (double kz = step; kz < kmax; kz += step) bp.push_back(kz);
    return bp;
}

struct RealAxisState {
    double max_inner = 0.0;
    bool flagged = false;
    void note(const QuadResult& r) {
        max_inner = std::max(max_inner, std::abs(r.value));
        if (!r.converged && std::abs(r.value) > 1e-9 * max_inner)
            flagged = true;
    }
};

double channel_inner(const Geometry& g, double omega, Pol pol, bool evanescent,
                     const Accuracy& acc, RealAxisState& st) {
    QuadratureSpec spec;
    spec.rel_tol = 1e-7;
    spec.max_subdiv = evanescent ? 2 * acc.max_subdiv / 4 : acc.max_subdiv / 4;
    if (evanescent) {
        const double qmax = 40.0 / (2.0 * g.gap);
        const double qs = ew_resonance_guess(g, omega);
        if (qs > 0.0 && qs < qmax)
            spec.breakpoints = {0.5 * qs, qs, 2.0 * qs};
        const QuadResult r = integrate_interval(
            [&](double q) {
                return q * q * ew_kernel(g, omega, q, pol);
            },
            0.0, qmax, spec);
        st.note(r);
        return r.value;
    }
    const double kmax = omega / c;
    spec.breakpoints = pw_breakpoints(g, omega);
    const QuadResult r = integrate_interval(
        [&](double kz) { return kz * kz * pw_kernel(g, omega, kz, pol); },
        0.0, kmax, spec);
    st.note(r);
    return r.value;
}

// k-perp sweep across both branches in one pass (bi-6 form)
double merged_inner(const Geometry& g, double omega, const Accuracy& acc,
                    RealAxisState& st) {
    const double kc = omega / c;
    const double qmax = 40.0 / (2.0 * g.gap);
    const double kperp_max = std::hypot(kc, qmax);
    QuadratureSpec spec;
    spec.rel_tol = 1e-7;
    spec.max_subdiv = acc.max_subdiv / 2;
    spec.breakpoints.push_back(kc);
    for (double kz : pw_breakpoints(g, omega)) {
        const double kp = std::sqrt(std::max(0.0, kc * kc - kz * kz));
        if (kp > 0.0) spec.breakpoints.push_back(kp);
    }
    const double qs = ew_resonance_guess(g, omega);
    if (qs > 0.0 && qs < qmax) {
        spec.breakpoints.push_back(std::hypot(kc, 0.5 * qs));
        spec.breakpoints.push_back(std::hypot(kc, qs));
        spec.breakpoints.push_back(std::hypot(kc, 2.0 * qs));
    }
    auto f = [&](double kperp) {
        double v = 0.0;
        if (kperp < kc) {
            const double kz = std::sqrt(kc * kc - kperp * kperp);
            for (Pol pol : {Pol::TM, Pol::TE})
                v += kz * pw_kernel(g, omega, kz, pol);
        } else {
            const double q = std::sqrt(kperp * kperp - kc * kc);
            for (Pol pol : {Pol::TM, Pol::TE})
                v -= q * ew_kernel(g, omega, q, pol);
        }
        return kperp * v;
    };
    const QuadResult r = integrate_interval(f, 0.0, kperp_max, spec);
    st.note(r);
    return r.value;
}

std::vector<double> omega_breakpoints(const Geometry& g, double omega_max) {
    std::vector<double> bp;
    for (double f = 1e-9; f < 0.9; f *= 10.0) bp.push_back(f * omega_max);
    bp.push_back(0.5 * omega_max);
    const double mode = pi * c / g.gap;
    for (double w = mode; w < omega_max; w += mode) bp.push_back(w);
    for (const ResponseModel* m : {&g.plate1, &g.plate2}) {
        if (m->kind() == ModelKind::Zt) {
            bp.push_back(ev_to_rad_s(m->zt_beta_ev()));
            bp.push_back(ev_to_rad_s(0.125));
        }
    }
    return bp;
}

double bose(double omega, double T) {
    return 1.0 / std::expm1(hbar * omega / (k_B * T));
}

}  // namespace

ThermalCorrection thermal_correction(const Geometry& g, Formulation f,
                                     const Accuracy& acc) {
    if (!(g.temperature > 0.0))
        throw std::domain_error("thermal_correction: T must be positive");
    ThermalCorrection tc;
    tc.formulation = f;
    if (f == Formulation::ImaginaryAxis) {
        bool ok1 = true;
        const double p = pressure_matsubara(g, acc, &ok1);
        const double fe = free_energy_matsubara(g, acc, &ok1);
        const ZeroPointParts zp = zero_point_parts(g, acc);
        tc.pressure = p - zp.pressure;
        tc.free_energy = fe - zp.energy;
        tc.converged = ok1 && zp.converged;
        return tc;
    }
    RealAxisState st;
    const double omega_max = 40.0 * k_B * g.temperature / hbar;
    QuadratureSpec outer;
    outer.rel_tol = acc.real_tol;
    outer.max_subdiv = acc.max_subdiv;
    outer.breakpoints = omega_breakpoints(g, omega_max);
    const QuadResult r = integrate_interval(
        [&](double w) { return bose(w, g.temperature) * merged_inner(g, w, acc, st); },
        0.0, omega_max, outer);
    tc.pressure = -hbar / (pi * pi) * r.value;
    tc.free_energy = 0.0;
    tc.converged = r.converged && !st.flagged;
    return tc;
}

FreeEnergyBreakdown free_energy_breakdown(const Geometry& g,
                                          const Accuracy& acc) {
    FreeEnergyBreakdown fb;
    bool ok = true;
    fb.total = free_energy_matsubara(g, acc, &ok);
    const ZeroPointParts zp = zero_point_parts(g, acc);
    fb.zero_point = zp.energy;
    fb.thermal = fb.total - zp.energy;
    fb.converged = ok && zp.converged;
    return fb;
}

PressureBreakdown channel_decomposition(const Geometry& g,
                                        const Accuracy& acc) {
    if (!(g.temperature > 0.0))
        throw std::domain_error("channel_decomposition: T must be positive");
    PressureBreakdown pb;
    RealAxisState st;
    const double omega_max = 40.0 * k_B * g.temperature / hbar;
    QuadratureSpec outer;
    outer.rel_tol = acc.real_tol;
    outer.max_subdiv = acc.max_subdiv;
    outer.breakpoints = omega_breakpoints(g, omega_max);

    auto sweep = [&](Pol pol, bool evanescent) {
        const QuadResult r = integrate_interval(
            [&](double w) {
                return bose(w, g.temperature) *
                       channel_inner(g, w, pol, evanescent, acc, st);
            },
            0.0, omega_max, outer);
        if (!r.converged) st.flagged = true;
        const double pref = hbar / (pi * pi);
        return evanescent ? pref * r.value : -pref * r.value;
    };
    pb.tm_pw = sweep(Pol::TM, false);
    pb.te_pw = sweep(Pol::TE, false);
    pb.tm_ew = sweep(Pol::TM, true);
    pb.te_ew = sweep(Pol::TE, true);
    pb.thermal = pb.tm_pw + pb.te_pw + pb.tm_ew + pb.te_ew;

    const ZeroPointParts zp = zero_point_parts(g, acc);
    pb.zero_point = zp.pressure;
    pb.total = pb.zero_point + pb.thermal;
    const IdealReference ref = ideal_metal_reference(g.gap, g.temperature);
    pb.ratio_to_ideal = ref.dP != 0.0 ? pb.thermal / ref.dP : 0.0;
    pb.converged = zp.converged && !st.flagged;
    return pb;
}

IdealReference ideal_metal_reference(double gap, double temperature) {
    if (!(gap > 0.0) || !(temperature > 0.0))
        throw std::domain_error("ideal_metal_reference: need a > 0, T > 0");
    const double kappa =
        4.0 * pi * k_B * gap * temperature / (hbar * c);
    auto G = [](double z) {
        const double ez = std::exp(-z);
        return z * z * (-std::log1p(-ez)) + 2.0 * z * polylog(2, ez) +
               2.0 * polylog(3, ez);
    };
    double sum = consts::zeta3;  // half-weighted l = 0 term, G(0)/2
    for (std::size_t l = 1; l < 2000000; ++l) {
        const double t = G(kappa * double(l));
        sum += t;
        if (t < 1e-16 * sum) break;
    }
    const double p_mats =
        -k_B * temperature / (4.0 * pi * gap * gap * gap) * sum;
    const double dp = p_mats - ideal_metal_pressure0(gap);
    return {dp, 0.5 * dp};
}

double ideal_metal_energy(double gap) {
    return -pi * pi * hbar * c / (720.0 * gap * gap * gap);
}

double ideal_metal_pressure0(double gap) {
    return -pi * pi * hbar * c / (240.0 * gap * gap * gap * gap);
}

}  // namespace lifgap
