#!/usr/bin/env python3
"""Independent reference values for the ZnTe preset.

Separate implementation (numpy/scipy QUADPACK, mpmath for the 50-digit
index) used to freeze the regression constants in the C++ tests. Not part
of the build; run by hand when the model changes.
"""
import mpmath as mp
import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

C0 = 2.99792458e8
HBAR = 1.054571817e-34
EPS0 = 8.8541878128e-12
A, B, C2 = 4.27, 3.01, 0.142


def cm1(k):
    return 2 * np.pi * C0 * k * 100


W_TO, W_LO, GAMMA, EPS_INF = cm1(177), cm1(206), cm1(3.01), 6.7
WC, DW = 2 * np.pi * 255e12, 2 * np.pi * 150e12
L, W0, R41 = 7e-6, 3e-6, 4e-12
TIGHT = dict(limit=2000, epsabs=0, epsrel=1e-13)


def n_nir(w):
    lam = 2 * np.pi * C0 / w * 1e6
    return np.sqrt(A + B * lam**2 / (lam**2 - C2))


def n_thz(W):
    eps = EPS_INF * (1 + (W_LO**2 - W_TO**2) / (W_TO**2 - W**2 - 1j * GAMMA * W))
    return np.real(np.sqrt(eps + 0j))


def sinc(x):
    return 1.0 if x == 0 else np.sin(x) / x


def main():
    mp.mp.dps = 50
    w = 2 * mp.pi * mp.mpf(330) * mp.mpf(10) ** 12
    lam = 2 * mp.pi * mp.mpf(C0) / w * 10**6
    n330 = mp.sqrt(mp.mpf("4.27") + mp.mpf("3.01") * lam**2 / (lam**2 - mp.mpf("0.142")))
    print("n(330 THz)", mp.nstr(n330, 20))

    lam = 2 * np.pi * C0 / WC * 1e6
    n = n_nir(WC)
    ng = n + B * lam**2 * C2 / (n * (lam**2 - C2) ** 2)
    print("n", repr(n), "n_g", repr(ng))

    def R(W):
        return sinc(L * W * (n_thz(W) - ng) / (2 * C0)) * max(0.0, 1 - abs(W) / DW)

    cut = brentq(lambda W: np.pi * C0 / (n_thz(W) * W) - W0, 2 * np.pi * 10e12,
                 2 * np.pi * 100e12, xtol=1e-3, rtol=1e-15)
    print("cutoff", repr(cut), cut / 2 / np.pi / 1e12, "THz")

    def integrand(W):
        return W * (n / n_thz(W)) * R(W) ** 2

    j_cut = quad(integrand, cut, DW, **TIGHT)[0]
    j_open = sum(quad(integrand, a, b, **TIGHT)[0] for a, b in [(0, W_TO), (W_TO, W_LO), (W_LO, DW)])
    print("J", repr(j_cut), "J open", repr(j_open), "ratio", j_open / j_cut)

    wp = DW / np.log(330 / 180)
    e_rms = np.sqrt(HBAR * j_cut / (4 * np.pi**2 * EPS0 * C0 * n * W0**2))
    kappa = n**3 * L * wp * R41 / C0 * e_rms
    print("omega_p", repr(wp), "e_rms", repr(e_rms), "kappa", repr(kappa), "N*", 1 / kappa**2)

    oc = 2 * np.pi * 40e12
    o1, o2 = 0.5 * oc, 1.5 * oc

    def rho(W):
        return np.sqrt(W / n_thz(W)) * R(W) if W >= cut else 0.0

    I = quad(lambda W: rho(W) ** 2, cut, DW, **TIGHT)[0]
    Ia = quad(lambda W: rho(W) ** 2, o1, o2, **TIGHT)[0]
    Ib = quad(lambda W: rho(W) * rho(2 * oc - W), o1, o2, **TIGHT)[0]
    a, b = Ia / I, Ib / I
    print("I", repr(I), "Ia", repr(Ia), "Ib", repr(Ib), "a", repr(a), "b", repr(b))
    print("M=2 min", 1 + 4 * a - 2 * b * np.sqrt(6), "max", 1 + 4 * a + 2 * b * np.sqrt(6))

    q = (a / b) ** 2
    m = (-1 + np.sqrt(1 + 1 / (q - 1))) / 2
    print("M_opt", m, "floor", 1 + 2 * a * m - 2 * b * np.sqrt(m * (m + 1)))

    ws = np.arange(0, 160 + 1e-9, 0.005) * 2 * np.pi * 1e12
    vals = np.array([integrand(W) if W >= cut else 0.0 for W in ws])
    i = vals.argmax()
    print("integrand peak", ws[i] / 2 / np.pi / 1e12, "THz", repr(vals[i]))

    W = 2 * np.pi * 40e12
    arg = L * W * (n_thz(W) - ng) / (2 * C0)
    print("40 THz: sinc arg", arg, "sinc", sinc(arg), "n_Omega", n_thz(W))


if __name__ == "__main__":
    main()
