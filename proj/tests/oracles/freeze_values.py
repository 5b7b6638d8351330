"""Independent reference values for the C++ unit tests.

Everything here works on explicit 4x4 matrices built from Pauli tensor products and
brute-force searches over measurement directions; nothing reuses the closed forms.
Run: python3 tests/oracles/freeze_values.py
"""
import numpy as np
from scipy.optimize import minimize

I2 = np.eye(2)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]])
SZ = np.diag([1.0, -1.0]).astype(complex)


def rho(r3, s3, c1, c2, c3):
    return 0.25 * (np.kron(I2, I2) + r3 * np.kron(SZ, I2) + s3 * np.kron(I2, SZ)
                   + c1 * np.kron(SX, SX) + c2 * np.kron(SY, SY) + c3 * np.kron(SZ, SZ))


def entropy(evals):
    evals = np.clip(np.real(evals), 0, 1)
    nz = evals[evals > 1e-15]
    return float(-(nz * np.log2(nz)).sum())


def dephased(m, z):
    z = np.asarray(z, float)
    z = z / np.linalg.norm(z)
    proj0 = 0.5 * (I2 + z[0] * SX + z[1] * SY + z[2] * SZ)
    proj1 = I2 - proj0
    out = np.zeros((4, 4), complex)
    for b in (proj0, proj1):
        k = np.kron(I2, b)
        out += k @ m @ k
    return out


def min_measured_entropy(p):
    m = rho(*p)
    f = lambda ang: entropy(np.linalg.eigvalsh(dephased(m, [np.sin(ang[0]) * np.cos(ang[1]),
                                                          np.sin(ang[0]) * np.sin(ang[1]),
                                                          np.cos(ang[0])])))
    best = None
    for a in np.linspace(0, np.pi, 61):
        for b in np.linspace(0, 2 * np.pi, 61):
            v = f([a, b])
            if best is None or v < best[0]:
                best = (v, [a, b])
    res = minimize(f, best[1], method="Nelder-Mead", options={"xatol": 1e-12, "fatol": 1e-15, "maxiter": 20000})
    return min(res.fun, best[0])


def deficit(p):
    return min_measured_entropy(p) - entropy(np.linalg.eigvalsh(rho(*p)))


def show(name, v):
    print(f"{name} = {v:.17g}")


show("entropy(0.375,0.375,0.125,0.125)", entropy(np.array([0.375, 0.375, 0.125, 0.125])))
show("spectrum of rho(0.5,0,0,0,0)... evals", 0)
print("  ", np.sort(np.linalg.eigvalsh(rho(0, 0, 0.5, 0, 0)))[::-1])
p = (0.3, 0.4, 0.2, 0.1, 0.25)
print("eigvals rho(0.3,0.4,0.2,0.1,0.25) =", [f"{x:.17g}" for x in np.sort(np.linalg.eigvalsh(rho(*p)))[::-1]])
print("eigvals dephased d=(0.6,0.48,0.64) =",
      [f"{x:.17g}" for x in np.sort(np.linalg.eigvalsh(dephased(rho(*p), [0.6, 0.48, 0.64])))[::-1]])
show("F(0,0,0.3,0.2,0.1; d=(1,0,0))", entropy(np.linalg.eigvalsh(dephased(rho(0, 0, 0.3, 0.2, 0.1), [1, 0, 0]))))
show("2-S(dephased (0,0,0.5,0.2,0.1) along x)",
     2 - entropy(np.linalg.eigvalsh(dephased(rho(0, 0, 0.5, 0.2, 0.1), [1, 0, 0]))))
# theta_max: maximise c1^2 z1^2 + c2^2 z2^2 + c3^2 phi^2 on the circle at phi=0.5
alpha = np.linspace(0, 2 * np.pi, 2_000_001)
t = (1 - 0.25) * (0.09 * np.cos(alpha) ** 2 + 0.36 * np.sin(alpha) ** 2) + 0.01 * 0.25
show("theta_max(c=(0.3,0.6,0.1), phi=0.5) by alpha scan", t.max())
show("min measured entropy (0.3,0.4,0.2,0.1,0.25)", min_measured_entropy(p))
show("2 - min measured entropy (0.3,0.4,0.2,0.1,0.25)", 2 - min_measured_entropy(p))
show("deficit (0.3,0.4,0.2,0.1,0.25)", deficit(p))
show("deficit bell (0,0,0.3,0.2,0.1)", deficit((0, 0, 0.3, 0.2, 0.1)))
show("deficit bell (0,0,0.3,0.2,0.0)", deficit((0, 0, 0.3, 0.2, 0.0)))
for q in [(0.5, -0.45, 0.2, 0.2, 0.0), (0.5, 0.3, 0.2, 0.1, 0.4), (-0.2, 0.3, 0.1, 0.05, 0.5)]:
    print("min eig", q, np.linalg.eigvalsh(rho(*q)).min())
