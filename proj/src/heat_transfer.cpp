#include "lifgap/heat_transfer.hpp"

#include <cmath>

namespace lifgap {

using consts::c;
using consts::hbar;
using consts::k_B;
using consts::pi;
using std::complex;

namespace {

double bose_diff(double omega, double T1, double T2) {
    double b1 = T1 > 0.0 ? 1.0 / std::expm1(hbar * omega / (k_B * T1)) : 0.0;
    double b2 = T2 > 0.0 ? 1.0 / std::expm1(hbar * omega / (k_B * T2)) : 0.0;
    return b1 - b2;
}

enum class Pol { TM, TE };

struct PlatePair {
    const HeatConfig* cfg;
    bool impedance_form;

    complex<double> r(int plate, Pol pol, double omega, double kperp) const {
        const SpectralPoint pt{omega, kperp};
        const ResponseModel& m = plate == 1 ? cfg->plate1 : cfg->plate2;
        const double T = plate == 1 ? cfg->T1 : cfg->T2;
        const ComplexReflectionPair rr = impedance_form
                                             ? reflect_real_impedance(pt, m, T)
                                             : reflect_real_eps(pt, m, T);
        return pol == Pol::TM ? rr.tm : rr.te;
    }
};

// [1 - |r1|^2][1 - |r2|^2] / |1 - r1 r2 e^{2 i kz a}|^2
double pw_kernel(const PlatePair& pp, double omega, double kz, Pol pol,
                 double gap) {
    const double kperp =
        std::sqrt(std::max(0.0, (omega / c) * (omega / c) - kz * kz));
    const complex<double> r1 = pp.r(1, pol, omega, kperp);
    const complex<double> r2 = pp.r(2, pol, omega, kperp);
    const complex<double> ph = std::polar(1.0, 2.0 * kz * gap);
    const double den = std::norm(1.0 - r1 * r2 * ph);
    if (den == 0.0) return 0.0;
    return (1.0 - std::norm(r1)) * (1.0 - std::norm(r2)) / den;
}

// Im r1 Im r2 e^{-2qa} / |1 - r1 r2 e^{-2qa}|^2
double ew_kernel(const PlatePair& pp, double omega, double q, Pol pol,
                 double gap) {
    const double kperp = std::hypot(omega / c, q);
    const complex<double> r1 = pp.r(1, pol, omega, kperp);
    const complex<double> r2 = pp.r(2, pol, omega, kperp);
    const double e2 = std::exp(-2.0 * q * gap);
    const double den = std::norm(1.0 - r1 * r2 * e2);
    if (den == 0.0) return 0.0;
    return r1.imag() * r2.imag() * e2 / den;
}

double ew_resonance_guess(const HeatConfig& cfg, double omega) {
    auto zmag = [&](const ResponseModel& m, double T) {
        if (m.kind() == ModelKind::IdealMetal) return 0.0;
        return std::abs(m.impedance_real(omega, T));
    };
    const double z =
        std::max(zmag(cfg.plate1, cfg.T1), zmag(cfg.plate2, cfg.T2));
    if (z <= 0.0) return 0.0;
    return std::sqrt(2.0 * z * omega / (c * cfg.gap));
}

std::vector<double> omega_breakpoints(const HeatConfig& cfg, double omega_max) {
    std::vector<double> bp;
    for (double f = 1e-8; f < 0.9; f *= 10.0) bp.push_back(f * omega_max);
    bp.push_back(0.5 * omega_max);
    const double mode = pi * c / cfg.gap;
    for (double w = mode; w < omega_max; w += mode) bp.push_back(w);
    for (const ResponseModel* m : {&cfg.plate1, &cfg.plate2}) {
        if (m->kind() == ModelKind::Zt) {
            bp.push_back(ev_to_rad_s(m->zt_beta_ev()));
            bp.push_back(ev_to_rad_s(0.125));
        }
    }
    return bp;
}

HeatFluxResult heat_flux(const HeatConfig& cfg, const Accuracy& acc,
                         bool impedance_form) {
    if (!(cfg.gap > 0.0)) throw std::domain_error("heat_flux: gap must be positive");
    if (cfg.T1 < 0.0 || cfg.T2 < 0.0)
        throw std::domain_error("heat_flux: negative temperature");
    HeatFluxResult out;
    if (cfg.T1 == cfg.T2) return out;  // Bose factors cancel exactly

    const PlatePair pp{&cfg, impedance_form};
    bool flagged = false;
    const double omega_max = 40.0 * k_B * std::max(cfg.T1, cfg.T2) / hbar;
    QuadratureSpec outer;
    outer.rel_tol = acc.real_tol;
    outer.max_subdiv = acc.max_subdiv;
    outer.breakpoints = omega_breakpoints(cfg, omega_max);

    auto sweep = [&](Pol pol, bool evanescent) {
        auto inner = [&](double omega) {
            QuadratureSpec spec;
            spec.rel_tol = 1e-7;
            spec.max_subdiv = acc.max_subdiv / 4;
            QuadResult r;
            if (evanescent) {
                const double qmax = 40.0 / (2.0 * cfg.gap);
                const double qs = ew_resonance_guess(cfg, omega);
                if (qs > 0.0 && qs < qmax)
                    spec.breakpoints = {0.5 * qs, qs, 2.0 * qs};
                r = integrate_interval(
                    [&](double q) {
                        return q * ew_kernel(pp, omega, q, pol, cfg.gap);
                    },
                    0.0, qmax, spec);
            } else {
                r = integrate_interval(
                    [&](double kz) {
                        return kz * pw_kernel(pp, omega, kz, pol, cfg.gap);
                    },
                    0.0, omega / c, spec);
            }
            if (!r.converged) flagged = true;
            return r.value;
        };
        const QuadResult r = integrate_interval(
            [&](double w) {
                return w * bose_diff(w, cfg.T1, cfg.T2) * inner(w);
            },
            0.0, omega_max, outer);
        if (!r.converged) flagged = true;
        const double pref = evanescent ? hbar / (pi * pi)
                                       : hbar / (4.0 * pi * pi);
        return pref * r.value;
    };

    out.pw_tm = sweep(Pol::TM, false);
    out.pw_te = sweep(Pol::TE, false);
    out.ew_tm = sweep(Pol::TM, true);
    out.ew_te = sweep(Pol::TE, true);
    out.pw = out.pw_tm + out.pw_te;
    out.ew = out.ew_tm + out.ew_te;
    out.total = out.pw + out.ew;
    out.converged = !flagged;
    return out;
}

}  // namespace

HeatFluxResult heat_flux_dielectric(const HeatConfig& cfg,
                                    const Accuracy& acc) {
    return heat_flux(cfg, acc, /*impedance_form=*/false);
}

HeatFluxResult heat_flux_impedance(const HeatConfig& cfg,
                                   const Accuracy& acc) {
    auto re_z_vanishes = [&](const ResponseModel& m, double T) {
        if (m.kind() == ModelKind::IdealMetal) return true;
        if (m.kind() == ModelKind::PlasmaEps || m.kind() == ModelKind::InfraredZ) {
            // Re Z = 0 below the plasma frequency: thermal spectrum sees a
            // dissipationless surface
            return true;
        }
        (void)T;
        return false;
    };
    if (re_z_vanishes(cfg.plate1, cfg.T1) || re_z_vanishes(cfg.plate2, cfg.T2)) {
        HeatFluxResult out;
        out.dissipationless = true;
        return out;
    }
    return heat_flux(cfg, acc, /*impedance_form=*/true);
}

double heat_flux_impedance_direct(const HeatConfig& cfg, const Accuracy& acc) {
    if (cfg.T1 == cfg.T2) return 0.0;
    bool flagged = false;
    const double omega_max = 40.0 * k_B * std::max(cfg.T1, cfg.T2) / hbar;
    QuadratureSpec outer;
    outer.rel_tol = acc.real_tol;
    outer.max_subdiv = acc.max_subdiv;
    outer.breakpoints = omega_breakpoints(cfg, omega_max);

    auto inner = [&](double omega) {
        const complex<double> z1 = cfg.plate1.impedance_real(omega, cfg.T1);
        const complex<double> z2 = cfg.plate2.impedance_real(omega, cfg.T2);
        auto kernel = [&](complex<double> kz, double weight) {
            // B_TE and B_TM of the impedance correlator form, with the
            // e^{2 i kz a} factor absorbed stably for evanescent kz
            const complex<double> u1 = kz * c * z1 / omega;
            const complex<double> u2 = kz * c * z2 / omega;
            const complex<double> v1 = kz * c / omega + z1;
            const complex<double> v2 = kz * c / omega + z2;
            const complex<double> w1 = kz * c / omega - z1;
            const complex<double> w2 = kz * c / omega - z2;
            const complex<double> ph =
                kz.imag() == 0.0
                    ? std::polar(1.0, 2.0 * kz.real() * cfg.gap)
                    : complex<double>(std::exp(-2.0 * kz.imag() * cfg.gap), 0.0);
            const double bte =
                std::norm((1.0 + u1) * (1.0 + u2) - (1.0 - u1) * (1.0 - u2) * ph);
            const double btm = std::norm(v1 * v2 - w1 * w2 * ph);
            const double kz2 = std::norm(kz);
            const double eterm = std::abs(ph);
            double s = 0.0;
            if (bte > 0.0) s += 1.0 / bte;
            if (btm > 0.0) s += 1.0 / btm;
            return weight * kz2 * eterm * s;
        };
        QuadratureSpec spec;
        spec.rel_tol = 1e-7;
        spec.max_subdiv = acc.max_subdiv / 4;
        const double kc = omega / c;
        const double qmax = 40.0 / (2.0 * cfg.gap);
        const double qs = ew_resonance_guess(cfg, omega);
        spec.breakpoints.push_back(kc);
        if (qs > 0.0 && qs < qmax)
            spec.breakpoints.push_back(std::hypot(kc, qs));
        const QuadResult r = integrate_interval(
            [&](double kperp) {
                complex<double> kz;
                if (kperp < kc)
                    kz = std::sqrt(kc * kc - kperp * kperp);
                else
                    kz = complex<double>(0.0,
                                         std::sqrt(kperp * kperp - kc * kc));
                return kernel(kz, kperp);
            },
            0.0, std::hypot(kc, qmax), spec);
        if (!r.converged) flagged = true;
        return z1.real() * z2.real() * r.value / omega;
    };

    const QuadResult r = integrate_interval(
        [&](double w) { return bose_diff(w, cfg.T1, cfg.T2) * inner(w); },
        0.0, omega_max, outer);
    (void)flagged;
    return 4.0 * hbar * c * c / (pi * pi) * r.value;
}

double te_ew_fraction(const HeatFluxResult& r) {
    if (r.total == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return r.ew_te / r.total;
}

double kirchhoff_flux(double T, const ResponseModel& m, const Accuracy& acc,
                      bool impedance_form) {
    if (!(T > 0.0)) throw std::domain_error("kirchhoff_flux: T must be positive");
    const double omega_max = 40.0 * k_B * T / hbar;
    QuadratureSpec outer;
    outer.rel_tol = acc.real_tol;
    outer.max_subdiv = acc.max_subdiv;
    for (double f = 1e-6; f < 0.9; f *= 10.0)
        outer.breakpoints.push_back(f * omega_max);
    if (m.kind() == ModelKind::Zt) {
        outer.breakpoints.push_back(ev_to_rad_s(m.zt_beta_ev()));
        outer.breakpoints.push_back(ev_to_rad_s(0.125));
    }

    auto inner = [&](double omega) {
        QuadratureSpec spec;
        spec.rel_tol = 1e-8;
        spec.max_subdiv = 2000;
        const QuadResult r = integrate_interval(
            [&](double p) {
                const double kperp = (omega / c) * std::sqrt(
                    std::max(0.0, 1.0 - p * p));
                const SpectralPoint pt{omega, kperp};
                const ComplexReflectionPair rr =
                    impedance_form ? reflect_real_impedance(pt, m, T)
                                   : reflect_real_eps(pt, m, T);
                const double s = (1.0 - std::norm(rr.tm)) +
                                 (1.0 - std::norm(rr.te));
                return p * s;
            },
            0.0, 1.0, spec);
        return r.value;
    };
    const QuadResult r = integrate_interval(
        [&](double w) {
            const double b = 1.0 / std::expm1(hbar * w / (k_B * T));
            return hbar * w * w * w * b * inner(w);
        },
        0.0, omega_max, outer);
    return r.value / (4.0 * pi * pi * c * c);
}

double emittivity(double T, const ResponseModel& m, const Accuracy& acc,
                  bool impedance_form) {
    return kirchhoff_flux(T, m, acc, impedance_form) /
           (consts::sigma_sb * T * T * T * T);
}

}  // namespace lifgap
