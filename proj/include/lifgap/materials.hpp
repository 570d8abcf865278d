#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "lifgap/constants.hpp"

namespace lifgap {

/// Raised when a response model is asked for a quantity it does not define
/// (for instance a permittivity from an impedance-only model).
struct model_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Bulk parameters of one plate.  Frequencies in rad/s, sigma0 in 1/s
/// (Gaussian units), tau in s, Debye temperature in K.
struct PlateParams {
    double omega_p = 0.0;
    double gamma300 = 0.0;
    double sigma0 = 0.0;
    double tau = 0.0;
    double debye_T = 0.0;
};

/// Temperature dependence of the relaxation frequency gamma(T):
/// linear above debye_T/4, T^5 (Bloch-Grueneisen) below it, T^2 below the
/// liquid-helium band edge T_he, plus an optional impurity residual.
/// Coefficients follow from continuity and gamma(300 K) = gamma300.
struct RelaxationLaw {
    double gamma300 = 0.0;
    double debye_T = 165.0;
    double T_he = 10.0;
    double gamma_residual = 0.0;

    double gamma(double T) const;
};

/// Tabulated real part of the surface impedance, photon energy in eV.
class OpticalTable {
public:
    OpticalTable() = default;
    OpticalTable(std::vector<double> omega_ev, std::vector<double> re_z);

    /// Parses a two-column text file ('#' comments allowed), sorts rows,
    /// and rejects duplicates and negative Re Z entries.
    static OpticalTable load(const std::string& path);

    double min_omega_ev() const { return omega_ev_.front(); }
    double max_omega_ev() const { return omega_ev_.back(); }
    std::size_t size() const { return omega_ev_.size(); }

    /// Linear interpolation; throws std::out_of_range outside coverage.
    double interpolate(double w_ev) const;

private:
    std::vector<double> omega_ev_;
    std::vector<double> re_z_;
};

enum class ModelKind {
    IdealMetal,
    PlasmaEps,
    InfraredZ,
    DrudeEps,
    DrudeZ,
    NormalSkinZ,
    Zp,
    Zt,
};

enum class Regime { InfraredOptics, NormalSkin, Neither };

/// One material response model: a tagged variant over the model family
/// plus everything needed to evaluate eps and Z on either frequency axis.
class ResponseModel {
public:
    static ResponseModel ideal_metal();
    static ResponseModel plasma_eps(const PlateParams& p);
    static ResponseModel infrared_z(const PlateParams& p);
    static ResponseModel drude_eps(const PlateParams& p, const RelaxationLaw& law);
    static ResponseModel drude_z(const PlateParams& p, const RelaxationLaw& law);
    static ResponseModel normal_skin_z(const PlateParams& p, const RelaxationLaw& law);
    /// C in 1/eV^2
    static ResponseModel zp(const PlateParams& p, double C_ev2);
    /// B dimensionless, beta in eV (0.08 <= beta <= 0.125)
    static ResponseModel zt(const PlateParams& p, double B, double beta_ev,
                            OpticalTable table);

    ModelKind kind() const { return kind_; }
    const PlateParams& params() const { return params_; }
    const RelaxationLaw& relaxation() const { return law_; }
    double zp_C_ev2() const { return C_ev2_; }
    double zt_B() const { return B_; }
    double zt_beta_ev() const { return beta_ev_; }

    /// gamma(T) for models carrying a relaxation law, gamma300 otherwise.
    double gamma(double T) const;
    /// sigma0(T) through the link sigma0 = omega_p^2 / (4 pi gamma(T));
    /// models constructed from a measured sigma0 scale it by gamma300/gamma(T).
    double sigma0(double T) const;

    bool is_permittivity_form() const {
        return kind_ == ModelKind::PlasmaEps || kind_ == ModelKind::DrudeEps;
    }
    bool is_dissipative() const;

    /// eps(i xi).  Returns +infinity for the ideal metal (callers branch).
    /// Impedance-only models raise model_mismatch_error.
    double eps_imag(double xi, double T) const;

    /// Z(i xi), real on the imaginary axis; Z = 0 for the ideal metal.
    double impedance_imag(double xi, double T) const;

    /// Z(omega) on the real axis.
    std::complex<double> impedance_real(double omega, double T) const;

    /// eps(omega) on the real axis; impedance-only models return 1/Z^2.
    std::complex<double> eps_real(double omega, double T) const;

private:
    ResponseModel() = default;
    ModelKind kind_ = ModelKind::IdealMetal;
    PlateParams params_{};
    RelaxationLaw law_{};
    double C_ev2_ = 0.0;
    double B_ = 0.0;
    double beta_ev_ = 0.0;
    OpticalTable table_{};
    bool sigma0_supplied_ = false;
};

/// sigma(omega) = sigma0 / (1 - i tau omega).
std::complex<double> ac_conductivity(double sigma0, double tau, double omega);

/// Frequency-regime classifier from the skin-depth / mean-free-path
/// inequalities.  mean_free_path in m, v_fermi in m/s.
Regime classify_regime(double omega, double T, const PlateParams& p,
                       double v_fermi, double mean_free_path);

/// Convenience alias for OpticalTable::load.
OpticalTable load_optical_table(const std::string& path);

// Default gold parameter sets
namespace gold {

inline constexpr double omega_p_ev = 9.0;
inline constexpr double gamma_300K = 5.32e13;   // rad/s
inline constexpr double debye_temperature = 165.0;  // K
inline constexpr double fermi_velocity = 1.78e6;    // m/s
inline constexpr double sigma0_300K = 3e17;     // 1/s
inline constexpr double tau_300K = 1.88e-14;    // s
inline constexpr double zt_B = 0.00389;
inline constexpr double zp_C_ev2 = 0.004;

/// omega_p = 9.0 eV, gamma(300 K) = 5.32e13 rad/s; sigma0 and tau derived.
PlateParams infrared_params();
/// sigma0 = 3e17 1/s, tau = 1.88e-14 s; omega_p derived (about 9.32 eV).
PlateParams normal_skin_params();
RelaxationLaw relaxation();

}  // namespace gold

}  // namespace lifgap
