"""Independent reference computations used by the tests.

Nothing here imports vacuumlab. Constants are the exact SI values plus the
CODATA 2018 electron mass, evaluated in mpmath at 40 digits.
"""

import mpmath as mp
import numpy as np

mp.mp.dps = 40

H = mp.mpf("6.62607015e-34")
C = mp.mpf(299792458)
E_CHARGE = mp.mpf("1.602176634e-19")
M_E = mp.mpf("9.1093837015e-31")
HBAR = H / (2 * mp.pi)

# Frozen oracle values (40-digit mpmath, rounded to 17 significant digits).
PHI_MAX_1MM_1EV = 9.8663490229651233e-05        # hbar c / (2 * 1e-3 m * 1 eV)
CALIBRATED_A_1FM = 1.1086853143856781e-14       # sqrt(h d / (2 pi^2 m_e c)), d = 1e-15 m
TIME_500NM = 1.6678204759907602e-15             # 500e-9 m / c
HBAR_C = 3.1615267734966900e-26


def phi_max(D, delta_e_joule):
    return float(HBAR * C / (2 * mp.mpf(D) * mp.mpf(delta_e_joule)))


def boost_matrix(beta):
    """4x4 Lorentz boost matrix for velocity ``beta`` (3-vector), mpmath entries."""
    b = [mp.mpf(float(x)) for x in beta]
    b2 = sum(x * x for x in b)
    g = 1 / mp.sqrt(1 - b2)
    m = mp.matrix(4, 4)
    m[0, 0] = g
    for i in range(3):
        m[0, i + 1] = m[i + 1, 0] = -g * b[i]
        for j in range(3):
            m[i + 1, j + 1] = (1 if i == j else 0) + (g - 1) * b[i] * b[j] / b2 if b2 > 0 else (1 if i == j else 0)
    return m


def boost(components, beta):
    v = mp.matrix([mp.mpf(float(x)) for x in components])
    return [float(x) for x in boost_matrix(beta) * v]


def chain_frequencies(n_sites, K, m, periodic=True):
    """Normal-mode angular frequencies from the eigenvalues of the stiffness matrix."""
    a = np.zeros((n_sites, n_sites))
    for i in range(n_sites):
        a[i, i] = 2.0
        if i + 1 < n_sites:
            a[i, i + 1] = a[i + 1, i] = -1.0
    if periodic:
        a[0, -1] = a[-1, 0] = -1.0
    lam = np.linalg.eigvalsh(K / m * a)
    return np.sqrt(np.clip(lam, 0.0, None))


def fourier_sum(amplitudes, k_grid, omega, x, t):
    """F(x, t) = 1/sqrt(2 pi) sum A e^{i(kx - wt)} dk, evaluated term by term in mpmath."""
    dk = mp.mpf(float(k_grid[1] - k_grid[0]))
    out = []
    for xv in x:
        s = mp.mpc(0)
        for a, k, w in zip(amplitudes, k_grid, omega):
            s += mp.mpc(complex(a)) * mp.expj(mp.mpf(float(k)) * mp.mpf(float(xv)) - mp.mpf(float(w)) * mp.mpf(t))
        out.append(complex(s * dk / mp.sqrt(2 * mp.pi)))
    return np.array(out)


def traveling_wave_energy(A, wavelength, S):
    """Kinetic + potential energy of A sin(kx - wt) over one wavelength of a string (exact)."""
    # each term averages to S k^2 A^2 / 4 per unit length
    k = 2 * mp.pi / mp.mpf(wavelength)
    return float(2 * (mp.mpf(S) * k**2 * mp.mpf(A) ** 2 / 4) * mp.mpf(wavelength))


def time_average_power(k, w, S, A, n=2000):
    """Numerical time average of k w S A^2 sin^2(k x - w t) at x = 0 over one period."""
    period = 2 * mp.pi / mp.mpf(w)
    return float(mp.quad(lambda t: k * w * S * A**2 * mp.sin(-w * t) ** 2, [0, period]) / period)
