// Generated by tools/gen_fixtures.py -- do not edit by hand.
// Reference values computed with mpmath at 15-30 significant digits.
#pragma once

namespace fixtures {
inline constexpr double xi1_300K = 246779025515306.06;
inline constexpr double gold_omega_p = 13673407031965146;
inline constexpr double eps_drude_imag_xi1 = 2526.5405698572581;
inline constexpr double eps_drude_real_xi1_re = -2932.6526912578611;
inline constexpr double eps_drude_real_xi1_im = 632.4294491763369;
inline constexpr double ac_conductivity_xi1_re = 13318856497109826;
inline constexpr double ac_conductivity_xi1_im = 61792111233897352;
inline constexpr double r_tm_plasma_xi1 = 0.98033849381720561;
inline constexpr double r_te_plasma_xi1 = 0.93648754255882349;
inline constexpr double r_tm_drude_xi_small = 0.99999999985912458;
inline constexpr double r_te_drude_xi_small = 0.001539177537110136;
inline constexpr double rho_gold_400nm = 0.02740652506167237;
inline constexpr double r_tm_zi_zeta1_y2 = 0.97297396771317091;
inline constexpr double r_te_zi_zeta1_y2 = 0.89610757106097816;
inline constexpr double zn_real_1e13_re = 0.0011516471649044516;
inline constexpr double zn_real_1e13_im = -0.0011516471649044516;
inline constexpr double r_tm_zn_real_re = 0.99539345999316631;
inline constexpr double r_tm_zn_real_im = 0.0045854168774463961;
inline constexpr double r_te_zn_real_re = 0.99884835359792623;
inline constexpr double r_te_zn_real_im = 0.0011503216374212592;
inline constexpr double J_rho_0p01 = 0.090715038845103332;
inline constexpr double J_rho_1e4 = 0.00096106887590234667;
inline constexpr double rho_gold_1um = 0.010962610024668949;
inline constexpr double J_rho_gold_1um = 0.098906931006059781;
inline constexpr double I0_x0p01 = -2.4036029561755896;
inline constexpr double I1_x0p01 = 9.6180999575178188;
inline constexpr double I0_x0p1 = -2.3757567052735213;
inline constexpr double I1_x0p1 = 9.6912002979776126;
inline constexpr double I0_x1 = -1.591499423118192;
inline constexpr double I1_x1 = 10.035398855569424;
inline constexpr double I2_x0p05 = -57.69871404477027;
inline constexpr double I2_x0p1 = -57.698500634566429;
inline constexpr double I2_x0p2 = -57.695778169670149;
inline constexpr double I2_x0p3 = -57.685961405467751;
inline constexpr double I2_x0p4 = -57.663242188522176;
inline constexpr double I2_x0p5 = -57.621261670079292;
inline constexpr double phi_diff_im_kt0p05 = 0.0080781396284405355;
inline constexpr double phi_diff_im_kt0p1 = 0.031952543244417327;
inline constexpr double dP_ideal_0p2um_300K = -2.0427479813304939e-06;
inline constexpr double dP_ideal_1um_300K = -2.0427474799815472e-06;
inline constexpr double P_plasma_1um_300K = -0.0011646113283591308;
inline constexpr double P0_plasma_0p2um = -0.50180919774917843;
inline constexpr double P0_plasma_0p3um = -0.11403291184901101;
inline constexpr double P0_zn_0p2um = -0.71939208685721912;
inline constexpr double P0_zn_0p3um = -0.14510024241509981;
inline constexpr double dP_zn_0p2um_300K = -0.012001462694115313;
}  // namespace fixtures
