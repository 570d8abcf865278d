#pragma once

namespace lifgap {

// CODATA 2018. Frequencies are rad/s throughout; sigma0 is the Gaussian
// static conductivity in 1/s, so eps_N = 4 pi sigma0 / omega without
// further unit factors.
namespace consts {

inline constexpr double hbar = 1.054571817e-34;     // J s
inline constexpr double c = 2.99792458e8;           // m/s
inline constexpr double k_B = 1.380649e-23;         // J/K
inline constexpr double hbar_ev = 6.582119569e-16;  // eV s

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double zeta3 = 1.202056903159594285399738161511450;

// Stefan-Boltzmann constant pi^2 k_B^4 / (60 hbar^3 c^3), W m^-2 K^-4
inline constexpr double sigma_sb = 5.670374419184431e-8;

}  // namespace consts

/// Photon energy in eV -> angular frequency in rad/s.
inline constexpr double ev_to_rad_s(double energy_ev) {
    return energy_ev / consts::hbar_ev;
}

/// Angular frequency in rad/s -> photon energy in eV.
inline constexpr double rad_s_to_ev(double omega) {
    return omega * consts::hbar_ev;
}

/// First Matsubara frequency xi_1 = 2 pi k_B T / hbar.
inline constexpr double matsubara_xi1(double temperature) {
    return 2.0 * consts::pi * consts::k_B * temperature / consts::hbar;
}

}  // namespace lifgap
