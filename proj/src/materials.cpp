#include "lifgap/materials.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace lifgap {

using consts::c;
using consts::pi;
using std::complex;

namespace {

void check_positive(double v, const char* name) {
    if (!(v > 0.0)) throw std::invalid_argument(std::string(name) + " must be positive");
}

// omega_p^2 = 4 pi gamma sigma0 must hold when the caller supplies all three
void check_param_relation(const PlateParams& p) {
    check_positive(p.omega_p, "omega_p");
    if (p.gamma300 < 0.0) throw std::invalid_argument("gamma300 must be nonnegative");
    if (p.tau != 0.0) check_positive(p.tau, "tau");
    if (p.sigma0 != 0.0) check_positive(p.sigma0, "sigma0");
    if (p.gamma300 > 0.0 && p.tau > 0.0) {
        if (std::abs(p.gamma300 * p.tau - 1.0) > 1e-6)
            throw std::invalid_argument("tau and gamma300 are inconsistent");
    }
    if (p.gamma300 > 0.0 && p.sigma0 > 0.0) {
        const double lhs = p.omega_p * p.omega_p;
        const double rhs = 4.0 * pi * p.gamma300 * p.sigma0;
        if (std::abs(lhs - rhs) > 1e-6 * lhs)
            throw std::invalid_argument(
                "omega_p^2 = 4 pi gamma sigma0 violated beyond 1e-6");
    }
}

}  // namespace

double RelaxationLaw::gamma(double T) const {
    if (T < 0.0) throw std::domain_error("gamma(T): negative temperature");
    const double Tb = debye_T / 4.0;
    double g;
    if (T >= Tb) {
        g = gamma300 * T / 300.0;
    } else {
        const double g_b = gamma300 * Tb / 300.0;
        if (T >= T_he) {
            g = g_b * std::pow(T / Tb, 5);
        } else {
            const double g_he = g_b * std::pow(T_he / Tb, 5);
            g = g_he * (T / T_he) * (T / T_he);
        }
    }
    return g + gamma_residual;
}

OpticalTable::OpticalTable(std::vector<double> omega_ev, std::vector<double> re_z)
    : omega_ev_(std::move(omega_ev)), re_z_(std::move(re_z)) {
    if (omega_ev_.size() != re_z_.size())
        throw std::invalid_argument("optical table: column length mismatch");
    if (omega_ev_.size() < 2)
        throw std::invalid_argument("optical table: need at least 2 rows");
    std::vector<std::size_t> idx(omega_ev_.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [this](std::size_t a, std::size_t b) {
        return omega_ev_[a] < omega_ev_[b];
    });
    std::vector<double> w(idx.size()), z(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        w[i] = omega_ev_[idx[i]];
        z[i] = re_z_[idx[i]];
    }
    omega_ev_ = std::move(w);
    re_z_ = std::move(z);
    for (std::size_t i = 0; i < omega_ev_.size(); ++i) {
        if (re_z_[i] < 0.0)
            throw std::invalid_argument("optical table: negative Re Z row");
        if (i > 0 && !(omega_ev_[i] > omega_ev_[i - 1]))
            throw std::invalid_argument("optical table: duplicate frequency");
    }
}

OpticalTable OpticalTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("optical table: cannot open " + path);
    std::vector<double> w, z;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        std::istringstream ss(line);
        double a, b;
        if (!(ss >> a)) continue;  // blank or comment-only line
        if (!(ss >> b))
            throw std::runtime_error("optical table: parse error at line " +
                                     std::to_string(lineno));
        double extra;
        if (ss >> extra)
            throw std::runtime_error("optical table: too many columns at line " +
                                     std::to_string(lineno));
        w.push_back(a);
        z.push_back(b);
    }
    if (w.empty()) throw std::runtime_error("optical table: empty file " + path);
    return OpticalTable(std::move(w), std::move(z));
}

double OpticalTable::interpolate(double w_ev) const {
    if (w_ev < omega_ev_.front() || w_ev > omega_ev_.back())
        throw std::out_of_range("optical table: frequency outside coverage");
    auto it = std::upper_bound(omega_ev_.begin(), omega_ev_.end(), w_ev);
    if (it == omega_ev_.end()) return re_z_.back();
    if (it == omega_ev_.begin()) return re_z_.front();
    const std::size_t i = static_cast<std::size_t>(it - omega_ev_.begin());
    const double t = (w_ev - omega_ev_[i - 1]) / (omega_ev_[i] - omega_ev_[i - 1]);
    return re_z_[i - 1] + t * (re_z_[i] - re_z_[i - 1]);
}

ResponseModel ResponseModel::ideal_metal() {
    ResponseModel m;
    m.kind_ = ModelKind::IdealMetal;
    return m;
}

ResponseModel ResponseModel::plasma_eps(const PlateParams& p) {
    check_param_relation(p);
    ResponseModel m;
    m.kind_ = ModelKind::PlasmaEps;
    m.params_ = p;
    return m;
}

ResponseModel ResponseModel::infrared_z(const PlateParams& p) {
    check_param_relation(p);
    ResponseModel m;
    m.kind_ = ModelKind::InfraredZ;
    m.params_ = p;
    return m;
}

ResponseModel ResponseModel::drude_eps(const PlateParams& p, const RelaxationLaw& law) {
    check_param_relation(p);
    ResponseModel m;
    m.kind_ = ModelKind::DrudeEps;
    m.params_ = p;
    m.law_ = law;
    return m;
}

ResponseModel ResponseModel::drude_z(const PlateParams& p, const RelaxationLaw& law) {
    check_param_relation(p);
    ResponseModel m;
    m.kind_ = ModelKind::DrudeZ;
    m.params_ = p;
    m.law_ = law;
    return m;
}

ResponseModel ResponseModel::normal_skin_z(const PlateParams& p, const RelaxationLaw& law) {
    check_param_relation(p);
    if (!(p.sigma0 > 0.0))
        throw std::invalid_argument("normal-skin impedance needs sigma0");
    ResponseModel m;
    m.kind_ = ModelKind::NormalSkinZ;
    m.params_ = p;
    m.law_ = law;
    m.sigma0_supplied_ = true;
    return m;
}

ResponseModel ResponseModel::zp(const PlateParams& p, double C_ev2) {
    check_param_relation(p);
    if (C_ev2 < 0.0) throw std::invalid_argument("Zp: C must be nonnegative");
    ResponseModel m;
    m.kind_ = ModelKind::Zp;
    m.params_ = p;
    m.C_ev2_ = C_ev2;
    return m;
}

ResponseModel ResponseModel::zt(const PlateParams& p, double B, double beta_ev,
                                OpticalTable table) {
    check_param_relation(p);
    if (beta_ev < 0.08 || beta_ev > 0.125)
        throw std::invalid_argument("Zt: beta must lie in [0.08, 0.125] eV");
    if (B < 0.0) throw std::invalid_argument("Zt: B must be nonnegative");
    if (table.min_omega_ev() > 0.125)
        throw std::invalid_argument("Zt: optical table must reach down to 0.125 eV");
    ResponseModel m;
    m.kind_ = ModelKind::Zt;
    m.params_ = p;
    m.B_ = B;
    m.beta_ev_ = beta_ev;
    m.table_ = std::move(table);
    return m;
}

double ResponseModel::gamma(double T) const {
    switch (kind_) {
        case ModelKind::DrudeEps:
        case ModelKind::DrudeZ:
        case ModelKind::NormalSkinZ:
            return law_.gamma(T);
        default:
            return params_.gamma300;
    }
}

double ResponseModel::sigma0(double T) const {
    if (sigma0_supplied_) {
        const double g = law_.gamma(T);
        if (g <= 0.0) return std::numeric_limits<double>::infinity();
        return params_.sigma0 * law_.gamma300 / g;
    }
    const double g = gamma(T);
    if (g <= 0.0) return std::numeric_limits<double>::infinity();
    return params_.omega_p * params_.omega_p / (4.0 * pi * g);
}

bool ResponseModel::is_dissipative() const {
    switch (kind_) {
        case ModelKind::IdealMetal:
        case ModelKind::PlasmaEps:
        case ModelKind::InfraredZ:
            return false;
        default:
            return true;
    }
}

double ResponseModel::eps_imag(double xi, double T) const {
    if (!(xi > 0.0)) throw std::domain_error("eps_imag: xi must be positive");
    switch (kind_) {
        case ModelKind::IdealMetal:
            return std::numeric_limits<double>::infinity();
        case ModelKind::PlasmaEps:
            return 1.0 + params_.omega_p * params_.omega_p / (xi * xi);
        case ModelKind::DrudeEps:
            return 1.0 + params_.omega_p * params_.omega_p /
                             (xi * (xi + law_.gamma(T)));
        default:
            throw model_mismatch_error("eps_imag: impedance-only model");
    }
}

double ResponseModel::impedance_imag(double xi, double T) const {
    if (xi < 0.0) throw std::domain_error("impedance_imag: xi must be nonnegative");
    const double wp = params_.omega_p;
    switch (kind_) {
        case ModelKind::IdealMetal:
            return 0.0;
        case ModelKind::PlasmaEps:
        case ModelKind::InfraredZ:
        case ModelKind::Zt:
            // Zt on the imaginary axis keeps only the infrared-optics part;
            // the Hilbert transform of the small real part is omitted.
            return xi / std::sqrt(wp * wp + xi * xi);
        case ModelKind::DrudeEps:
        case ModelKind::DrudeZ: {
            if (xi == 0.0) return 0.0;
            const double eps_d = 1.0 + wp * wp / (xi * (xi + law_.gamma(T)));
            return 1.0 / std::sqrt(eps_d);
        }
        case ModelKind::NormalSkinZ:
            // real-positive analytic continuation of (1-i) sqrt(w/(8 pi s0))
            return std::sqrt(xi / (4.0 * pi * sigma0(T)));
        case ModelKind::Zp: {
            const double c_rad = C_ev2_ * consts::hbar_ev * consts::hbar_ev;
            return -c_rad * xi * xi + xi / std::sqrt(wp * wp + xi * xi);
        }
    }
    return 0.0;
}

complex<double> ResponseModel::impedance_real(double omega, double T) const {
    if (!(omega > 0.0)) throw std::domain_error("impedance_real: omega must be positive");
    const double wp = params_.omega_p;
    // -i omega / sqrt(wp^2 - w^2); above wp the root continues to
    // -i sqrt(w^2 - wp^2), giving a real positive impedance.
    auto zi = [wp](double w) -> complex<double> {
        if (w < wp) return {0.0, -w / std::sqrt(wp * wp - w * w)};
        return {w / std::sqrt(w * w - wp * wp), 0.0};
    };
    switch (kind_) {
        case ModelKind::IdealMetal:
            return {0.0, 0.0};
        case ModelKind::PlasmaEps:
        case ModelKind::InfraredZ:
            return zi(omega);
        case ModelKind::DrudeEps:
        case ModelKind::DrudeZ:
            return 1.0 / std::sqrt(eps_real(omega, T));
        case ModelKind::NormalSkinZ: {
            const double x = std::sqrt(omega / (8.0 * pi * sigma0(T)));
            return {x, -x};
        }
        case ModelKind::Zp: {
            const double w_ev = rad_s_to_ev(omega);
            return complex<double>(C_ev2_ * w_ev * w_ev, 0.0) + zi(omega);
        }
        case ModelKind::Zt: {
            const double w_ev = rad_s_to_ev(omega);
            double re;
            if (w_ev <= beta_ev_) {
                re = B_ * std::sin(pi * w_ev * w_ev / (2.0 * beta_ev_ * beta_ev_));
            } else if (w_ev <= 0.125) {
                re = B_;
            } else {
                re = table_.interpolate(w_ev);
            }
            return complex<double>(re, 0.0) + zi(omega);
        }
    }
    return {0.0, 0.0};
}

complex<double> ResponseModel::eps_real(double omega, double T) const {
    if (!(omega > 0.0)) throw std::domain_error("eps_real: omega must be positive");
    const double wp = params_.omega_p;
    switch (kind_) {
        case ModelKind::IdealMetal:
            return {std::numeric_limits<double>::infinity(), 0.0};
        case ModelKind::PlasmaEps:
            return {1.0 - wp * wp / (omega * omega), 0.0};
        case ModelKind::DrudeEps:
        case ModelKind::DrudeZ: {
            const complex<double> den =
                omega * complex<double>(omega, law_.gamma(T));
            return 1.0 - wp * wp / den;
        }
        case ModelKind::NormalSkinZ:
            return {0.0, 4.0 * pi * sigma0(T) / omega};
        default: {
            const complex<double> z = impedance_real(omega, T);
            return 1.0 / (z * z);
        }
    }
}

complex<double> ac_conductivity(double sigma0, double tau, double omega) {
    if (omega < 0.0) throw std::domain_error("ac_conductivity: omega must be nonnegative");
    return sigma0 / complex<double>(1.0, -tau * omega);
}

Regime classify_regime(double omega, double T, const PlateParams& p,
                       double v_fermi, double mean_free_path) {
    check_positive(omega, "omega");
    check_positive(T, "T");
    check_positive(v_fermi, "v_fermi");
    check_positive(mean_free_path, "mean_free_path");
    const double margin = 5.0;
    const double delta_i = c / p.omega_p;
    // Infrared optics: v_F/w << delta_i << l and w << omega_p.  The margin
    // is applied to the frequency condition only; for gold at 300 K the
    // skin-depth chain is satisfied with barely a factor 1.5.
    if (margin * omega <= p.omega_p && v_fermi / omega < delta_i &&
        delta_i < mean_free_path)
        return Regime::InfraredOptics;
    if (p.sigma0 > 0.0) {
        const double delta_n = c / std::sqrt(2.0 * pi * p.sigma0 * omega);
        if (margin * mean_free_path <= delta_n &&
            margin * mean_free_path <= v_fermi / omega)
            return Regime::NormalSkin;
    }
    return Regime::Neither;
}

OpticalTable load_optical_table(const std::string& path) {
    return OpticalTable::load(path);
}

namespace gold {

PlateParams infrared_params() {
    PlateParams p;
    p.omega_p = ev_to_rad_s(omega_p_ev);
    p.gamma300 = gamma_300K;
    p.sigma0 = p.omega_p * p.omega_p / (4.0 * pi * p.gamma300);
    p.tau = 1.0 / p.gamma300;
    p.debye_T = debye_temperature;
    return p;
}

PlateParams normal_skin_params() {
    PlateParams p;
    p.sigma0 = sigma0_300K;
    p.tau = tau_300K;
    p.gamma300 = 1.0 / tau_300K;
    p.omega_p = std::sqrt(4.0 * pi * p.gamma300 * p.sigma0);
    p.debye_T = debye_temperature;
    return p;
}

RelaxationLaw relaxation() {
    RelaxationLaw law;
    law.gamma300 = gamma_300K;
    law.debye_T = debye_temperature;
    return law;
}

}  // namespace gold

}  // namespace lifgap
