#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace lifgap {

/// Controls for the adaptive quadrature engine.
///
/// `breakpoints` mark interior locations the integrator must not straddle
/// with a single panel; callers pass analytically known resonance positions
/// there (cavity-mode and surface-mode locations on the real frequency
/// axis).  `decay_scale` is the e-folding length of the integrand on a
/// semi-infinite domain and fixes the tail transform.
struct QuadratureSpec {
    double rel_tol = 1e-8;
    double abs_floor = 0.0;
    int max_subdiv = 2000;
    std::vector<double> breakpoints;
    double decay_scale = 1.0;
};

/// Matsubara summation controls.
struct SumSpec {
    double rel_tol = 1e-10;
    std::size_t max_terms = 100000;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
    std::size_t evaluations = 0;
};

struct SumResult {
    double value = 0.0;
    bool converged = true;
    std::size_t terms = 0;
};

struct DerivResult {
    double value = 0.0;
    double error = 0.0;
};

/// Integral of f over (a, b) by globally adaptive Gauss-Kronrod 7/15.
/// Non-convergence after max_subdiv panel splits is flagged, never silent.
QuadResult integrate_interval(const std::function<double(double)>& f,
                              double a, double b,
                              const QuadratureSpec& spec = {});

/// Integral of f over (0, inf).  The head (0, ~60 decay scales) is
/// integrated directly with the spec's breakpoints; the tail is mapped to a
/// finite interval through u -> L + scale*u/(1-u).
QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   const QuadratureSpec& spec = {});

/// Complex-valued counterpart used for boundary functions evaluated off the
/// real axis (real integration variable).
struct ComplexQuadResult {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
    bool converged = true;
};
ComplexQuadResult integrate_semi_infinite_complex(
    const std::function<std::complex<double>(double)>& f,
    const QuadratureSpec& spec = {});

/// Primed Matsubara sum: term(0)/2 + sum_{l>=1} term(l), truncated when a
/// geometric tail bound drops below rel_tol * |partial sum|.
SumResult matsubara_sum(const std::function<double(std::size_t)>& term,
                        const SumSpec& spec = {});

/// Abel-Plana boundary correction
///     i * Int_0^inf [Phi(i kappa t) - Phi(-i kappa t)] / (e^{2 pi t} - 1) dt
/// for Phi analytic in the right half-plane and real on the positive real
/// axis (so Phi(-iz) = conj Phi(iz) and the result is real).
double abel_plana_correction(
    const std::function<std::complex<double>(std::complex<double>)>& phi,
    double kappa, const QuadratureSpec& spec = {});

/// d f / dT by central differences with one Richardson step.
/// h0 <= 0 selects the default max(1e-3*T, 0.01 K).
/// Throws std::domain_error when T is too small for the stencil.
DerivResult ddT(const std::function<double(double)>& f, double T,
                double h0 = 0.0);

/// Li_n(x) for n in {2, 3} and x in [0, 1], accurate to ~1e-13.
double polylog(int n, double x);

}  // namespace lifgap
