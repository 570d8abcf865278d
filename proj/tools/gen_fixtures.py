#!/usr/bin/env python3
"""Arbitrary-precision reference values for the C++ test suite.

Every number frozen into tests/oracle_fixtures.hpp is computed here from
closed formulas or low-dimensional integrals, independently of the C++
code paths under test.  Run from the repository root:

    python3 tools/gen_fixtures.py > tests/oracle_fixtures.hpp
"""
import sys
import mpmath as mp

mp.mp.dps = 30

# CODATA 2018
HBAR = mp.mpf('1.054571817e-34')     # J s
C = mp.mpf('2.99792458e8')           # m/s
KB = mp.mpf('1.380649e-23')          # J/K
HBAR_EV = mp.mpf('6.582119569e-16')  # eV s


def ev_to_rad(x):
    return mp.mpf(x) / HBAR_EV


# gold, infrared-optics parameter set
OMEGA_P = ev_to_rad(9)
GAMMA300 = mp.mpf('5.32e13')
# gold, normal-skin parameter set
SIGMA0 = mp.mpf('3e17')
TAU = mp.mpf('1.88e-14')

XI1_300 = 2 * mp.pi * KB * 300 / HBAR
ZETA3 = mp.zeta(3)

lines = []


def emit(name, v):
    if isinstance(v, mp.mpc):
        lines.append(f"inline constexpr double {name}_re = {float(v.real):.17g};")
        lines.append(f"inline constexpr double {name}_im = {float(v.imag):.17g};")
    else:
        lines.append(f"inline constexpr double {name} = {float(v):.17g};")


def log(msg):
    print(msg, file=sys.stderr, flush=True)


# ---------------------------------------------------------------- materials
emit('xi1_300K', XI1_300)
emit('gold_omega_p', OMEGA_P)

# Drude permittivity on the imaginary axis at the first Matsubara frequency
emit('eps_drude_imag_xi1',
     1 + OMEGA_P**2 / (XI1_300 * (XI1_300 + GAMMA300)))

# Drude permittivity on the real axis at the same frequency
w = XI1_300
emit('eps_drude_real_xi1', 1 - OMEGA_P**2 / (w * (w + 1j * GAMMA300)))

# ac conductivity at the same frequency
emit('ac_conductivity_xi1', SIGMA0 / (1 - 1j * TAU * w))

# ------------------------------------------------------------- reflection
# plasma permittivity, imaginary axis, xi = xi_1(300 K), kperp = 1/(2a), a = 400 nm
a400 = mp.mpf('4e-7')
kperp = 1 / (2 * a400)
eps = 1 + (OMEGA_P / XI1_300)**2
q = mp.sqrt(kperp**2 + (XI1_300 / C)**2)
k = mp.sqrt(kperp**2 + eps * (XI1_300 / C)**2)
emit('r_tm_plasma_xi1', (eps * q - k) / (eps * q + k))
emit('r_te_plasma_xi1', (k - q) / (k + q))

# Drude permittivity at xi = 1e-6 xi_1 (approach to the (1, 0) limit)
xs = mp.mpf('1e-6') * XI1_300
epsd = 1 + OMEGA_P**2 / (xs * (xs + GAMMA300))
q = mp.sqrt(kperp**2 + (xs / C)**2)
k = mp.sqrt(kperp**2 + epsd * (xs / C)**2)
emit('r_tm_drude_xi_small', (epsd * q - k) / (epsd * q + k))
emit('r_te_drude_xi_small', (k - q) / (k + q))

# infrared-optics impedance in dimensionless variables, zeta = 1, y = 2,
# rho for gold at a = 400 nm
rho400 = C / (2 * a400 * OMEGA_P)
emit('rho_gold_400nm', rho400)
Z = rho400 * 1 / mp.sqrt(1 + rho400**2)
emit('r_tm_zi_zeta1_y2', (2 - Z) / (2 + Z))
emit('r_te_zi_zeta1_y2', (1 - 2 * Z) / (1 + 2 * Z))

# normal-skin impedance on the real axis, w = 1e13 rad/s, kz = w/(2c)
w = mp.mpf('1e13')
kz = w / (2 * C)
Zn = (1 - 1j) * mp.sqrt(w / (8 * mp.pi * SIGMA0))
emit('zn_real_1e13', Zn)
emit('r_tm_zn_real', (C * kz - Zn * w) / (C * kz + Zn * w))
emit('r_te_zn_real', (w - C * kz * Zn) / (w + C * kz * Zn))

# ------------------------------------------------------------- asymptotics
# J(rho) = zeta(3) + Int_0^inf y ln[1 - ((1-rho y)/(1+rho y))^2 e^-y] dy
# S_D(a,0) = kB/(16 pi a^2) J(rho);  series form J = 8 zeta(3) rho (1 - 6 rho + ...)
def J(rho):
    f = lambda y: y * mp.log(1 - ((1 - rho * y) / (1 + rho * y))**2 * mp.e**(-y))
    return ZETA3 + mp.quad(f, [0, 1, 5, 15, 40, 90, mp.inf])


log('J(rho) integrals...')
emit('J_rho_0p01', J(mp.mpf('0.01')))
emit('J_rho_1e4', J(mp.mpf('1e-4')))
rho_1um = C / (2 * mp.mpf('1e-6') * OMEGA_P)
emit('rho_gold_1um', rho_1um)
emit('J_rho_gold_1um', J(rho_1um))

# I0, I1 closed forms and I2 by quadrature
def I0(x):
    return -2 * (mp.polylog(3, mp.e**(-x)) + x * mp.polylog(2, mp.e**(-x)))


def I1(x):
    exm = mp.e**(-x)
    return 8 * (mp.polylog(3, exm) + x * mp.polylog(2, exm)
                - x**2 * mp.log(1 - exm))


def I2(x):
    f = lambda y: (x**4 + y**4) * mp.e**y / (y * (mp.e**y - 1)**2)
    return -8 * mp.quad(f, [x, x + 1, x + 5, x + 15, x + 40, mp.inf])


log('I integrals...')
for xv in ('0.01', '0.1', '1'):
    tag = xv.replace('.', 'p')
    emit(f'I0_x{tag}', I0(mp.mpf(xv)))
    emit(f'I1_x{tag}', I1(mp.mpf(xv)))
i2grid = ['0.05', '0.1', '0.2', '0.3', '0.4', '0.5']
for xv in i2grid:
    tag = xv.replace('.', 'p')
    emit(f'I2_x{tag}', I2(mp.mpf(xv)))

# Phi(i kappa t) - Phi(-i kappa t) for the infrared-optics impedance,
# rho = 0.01, evaluated along the shifted path y = x + u
def phi(x, rho):
    Zf = lambda z: rho * z / mp.sqrt(1 + rho**2 * z**2)

    def f(u):
        y = x + u
        Z = Zf(x)
        rtm = (y - Z * x) / (y + Z * x)
        rte = (x - y * Z) / (x + y * Z)
        return y * (mp.log(1 - rtm**2 * mp.e**(-y)) +
                    mp.log(1 - rte**2 * mp.e**(-y)))

    return mp.quad(f, [0, 1, 5, 15, 40, 90])


log('Phi differences...')
for kt in ('0.05', '0.1'):
    tag = kt.replace('.', 'p')
    d = phi(1j * mp.mpf(kt), mp.mpf('0.01')) - phi(-1j * mp.mpf(kt), mp.mpf('0.01'))
    emit(f'phi_diff_im_kt{tag}', d.imag)

# ---------------------------------------------------------------- lifshitz
# ideal-metal Matsubara pressure via the polylog closed form per term
def pressure_ideal(a, T):
    kappa = 4 * mp.pi * KB * a * T / (HBAR * C)

    def G(z):
        ez = mp.e**(-z)
        return z**2 * (-mp.log(1 - ez)) + 2 * z * mp.polylog(2, ez) \
            + 2 * mp.polylog(3, ez)

    s = mp.mpf('0.5') * 2 * ZETA3
    l = 1
    while True:
        t = G(kappa * l)
        s += t
        if t < mp.mpf('1e-30') * s:
            break
        l += 1
    return -(KB * T / (4 * mp.pi * a**3)) * s


def p0_ideal(a):
    return -mp.pi**2 * HBAR * C / (240 * a**4)


log('ideal metal references...')
for aum, tag in ((mp.mpf('2e-7'), '0p2um'), (mp.mpf('1e-6'), '1um')):
    emit(f'dP_ideal_{tag}_300K', pressure_ideal(aum, 300) - p0_ideal(aum))

# plasma-model and normal-skin-impedance Lifshitz quantities (identical plates)
def inner_pressure(zeta, pair_fn, pts_extra=90):
    def f(y):
        s = mp.mpf(0)
        for p in pair_fn(zeta, y):
            x = p * mp.e**(-y)
            s += y * y * x / (1 - x)
        return s
    lo = zeta
    return mp.quad(f, [lo, lo + 2, lo + 6, lo + 15, lo + 40, lo + pts_extra])


def plasma_pairs(zeta_p):
    def pairs(zeta, y):
        root = mp.sqrt(y * y + zeta_p**2)
        rte = (root - y) / (root + y)
        if zeta == 0:
            rtm = mp.mpf(1)
        else:
            eps = 1 + (zeta_p / zeta)**2
            rtm = (eps * y - root) / (eps * y + root)
        return (rtm * rtm, rte * rte)
    return pairs


def zn_pairs(zscale):
    def pairs(zeta, y):
        if zeta == 0:
            return (mp.mpf(1), mp.mpf(1))
        Z = zscale * mp.sqrt(zeta)
        rtm = (y - Z * zeta) / (y + Z * zeta)
        rte = (zeta - y * Z) / (zeta + y * Z)
        return (rtm * rtm, rte * rte)
    return pairs


def pressure_matsubara(a, T, pairs):
    kappa = 4 * mp.pi * KB * a * T / (HBAR * C)
    s = mp.mpf('0.5') * inner_pressure(mp.mpf(0), pairs)
    l = 1
    while True:
        t = inner_pressure(kappa * l, pairs)
        s += t
        if abs(t) < mp.mpf('1e-22') * abs(s):
            break
        l += 1
    return -(KB * T / (8 * mp.pi * a**3)) * s


def p0_integral(a, pairs):
    outer = lambda z: inner_pressure(z, pairs)
    val = mp.quad(outer, [mp.mpf('1e-10'), mp.mpf('0.5'), 2, 6, 15, 40, 90])
    return -(HBAR * C / (32 * mp.pi**2 * a**4)) * val


log('plasma pressure at 1 um (Matsubara sum)...')
mp.mp.dps = 20
zp_1um = 2 * mp.mpf('1e-6') * OMEGA_P / C
emit('P_plasma_1um_300K', pressure_matsubara(mp.mpf('1e-6'), 300, plasma_pairs(zp_1um)))

log('plasma P0 at 200/300 nm (2D quadrature, slow)...')
mp.mp.dps = 15
for aval, tag in ((mp.mpf('2e-7'), '0p2um'), (mp.mpf('3e-7'), '0p3um')):
    zp = 2 * aval * OMEGA_P / C
    emit(f'P0_plasma_{tag}', p0_integral(aval, plasma_pairs(zp)))

log('normal-skin P0 at 200/300 nm...')
for aval, tag in ((mp.mpf('2e-7'), '0p2um'), (mp.mpf('3e-7'), '0p3um')):
    zscale = mp.sqrt(C / (8 * mp.pi * aval * SIGMA0))
    emit(f'P0_zn_{tag}', p0_integral(aval, zn_pairs(zscale)))

log('normal-skin thermal correction at 200 nm (Matsubara route)...')
mp.mp.dps = 18
aval = mp.mpf('2e-7')
zscale = mp.sqrt(C / (8 * mp.pi * aval * SIGMA0))
p_zn = pressure_matsubara(aval, 300, zn_pairs(zscale))
mp.mp.dps = 15
p0_zn = p0_integral(aval, zn_pairs(zscale))
emit('dP_zn_0p2um_300K', p_zn - p0_zn)

# -------------------------------------------------------------------- emit
print('// Generated by tools/gen_fixtures.py -- do not edit by hand.')
print('// Reference values computed with mpmath at 15-30 significant digits.')
print('#pragma once')
print()
print('namespace fixtures {')
for ln in lines:
    print(ln)
print('}  // namespace fixtures')
