"""Independent symbolic oracle for the regression numbers frozen in the C++ tests.

Run with: python3 tests/oracles/frozen_values.py
Indices printed 1-based.
"""
import itertools
import sympy as sp

x = sp.symbols("x1:4", real=True)
r2 = sum(xi**2 for xi in x)
r = sp.sqrt(r2)
eps = sp.LeviCivita
R3 = range(3)


def magnetic(A):
    return [[sum(eps(i, j, k) * (sp.diff(A[a][k], x[j])
                 + sp.Rational(1, 2) * sum(eps(a, b, c) * A[b][j] * A[c][k]
                                           for b in R3 for c in R3))
                 for j in R3 for k in R3) for i in R3] for a in R3]


def ampere(A):
    B = magnetic(A)
    return [[sum(eps(i, j, k) * sp.diff(B[a][k], x[j]) for j in R3 for k in R3)
             + sum(eps(i, j, k) * eps(a, b, c) * A[b][j] * B[c][k]
                   for j in R3 for k in R3 for b in R3 for c in R3)
             for i in R3] for a in R3]


def at(expr, pt):
    return expr.subs(dict(zip(x, pt)))


print("# ampere residual of A^a_j = delta^a_j x1 at (1,1,1)")
A_lin = [[x[0] if a == j else 0 for j in R3] for a in R3]
res = ampere(A_lin)
for a in R3:
    print([sp.nsimplify(at(res[a][i], (1, 1, 1))) for i in R3])

print("# monopole spin connection at (1,0,0): w^a_{ck} = eps_abc A^b_k")
A_mono = [[sum(eps(a, j, k) * x[k] for k in R3) / r2 for j in R3] for a in R3]
for a, c, k in itertools.product(R3, R3, R3):
    w = sum(eps(a, b, c) * A_mono[b][k] for b in R3)
    v = at(w, (1, 0, 0))
    if v != 0:
        print(f"w^{a+1}_{c+1}{k+1} = {v}")

print("# q=2 potential with h=delta: torsion T^k_ij = -(G^k_ij - G^k_ji), G^i_jk = eps_idj A^d_k at (1,0,0)")
A_q2 = [[2 * sum(eps(a, j, k) * x[k] for k in R3) / r2 for j in R3] for a in R3]
G = [[[sum(eps(i, d, j) * A_q2[d][k] for d in R3) for k in R3] for j in R3] for i in R3]
for k, i, j in itertools.product(R3, R3, R3):
    v = at(-(G[k][i][j] - G[k][j][i]), (1, 0, 0))
    if v != 0:
        print(f"T^{k+1}_{i+1}{j+1} = {v}")
print("B(q=2) simplified:", [[sp.simplify(b) for b in row] for row in magnetic(A_q2)])

print("# geodesic rhs with torsion, g = delta, T^1_12 = -T^1_21 = 1, v = (1,2,3)")
T = [[[0] * 3 for _ in R3] for _ in R3]
T[0][0][1], T[0][1][0] = 1, -1
v = [1, 2, 3]
acc = [sum(T[j][k][i] * v[j] * v[k] for j in R3 for k in R3) for i in R3]
# T_jk^i = g_jm T^m_kn g^ni = T^j_ki for g = delta
acc = [sum(T[j][k][i] * v[j] * v[k] for j in R3 for k in R3) for i in R3]
print("dv/ds =", acc)

print("# contorsion for g = delta, T^1_23 = -T^1_32 = 1")
T = [[[0] * 3 for _ in R3] for _ in R3]
T[0][1][2], T[0][2][1] = 1, -1
K = [[[sp.Rational(1, 2) * (T[k][i][j] + T[i][j][k] + T[j][i][k]) for j in R3] for i in R3] for k in R3]
for k, i, j in itertools.product(R3, R3, R3):
    if K[k][i][j] != 0:
        print(f"K^{k+1}_{i+1}{j+1} = {K[k][i][j]}")

print("# scalar curvature of conformally flat media")
def scalar_curvature(n):
    g = sp.diag(n**2, n**2, n**2); gi = g.inv()
    Gm = [[[sum(gi[k, m] * (sp.diff(g[j, m], x[i]) + sp.diff(g[i, m], x[j]) - sp.diff(g[i, j], x[m])) / 2
               for m in R3) for j in R3] for i in R3] for k in R3]
    Rm = lambda rr, s, i, j: (sp.diff(Gm[rr][s][j], x[i]) - sp.diff(Gm[rr][s][i], x[j])
                              + sum(Gm[rr][k][i] * Gm[k][s][j] - Gm[rr][k][j] * Gm[k][s][i] for k in R3))
    return sp.simplify(sum(Rm(rr, s, rr, j) * gi[s, j] for rr in R3 for s in R3 for j in R3))
for name, n in [("sphere 4/(4+r^2)", 4 / (4 + r2)), ("hyperbolic 4/(4-r^2)", 4 / (4 - r2)),
                ("unit spherical 1/(1+r^2)", 1 / (1 + r2)), ("unit hyperbolic 1/(1-r^2)", 1 / (1 - r2))]:
    print(name, scalar_curvature(n))

print("# ansatz ODE residual for f = r^-q, normalised by r^(q+3)")
q, rr = sp.symbols("q r", positive=True)
f = rr**(-q)
f1, f2, f3 = (sp.diff(f, rr, n) for n in (1, 2, 3))
ode = f3 + f1**2 / (rr * f) - 5 * f1 * f2 / f + 5 * f1**3 / f**2
print(sp.factor(sp.simplify(ode * rr**(q + 3))))
iso = 2 * f1 / (rr * f) + 4 * f1**2 / f**2 - f2 / f
rad = (f2 - f1 / rr - 2 * f1**2 / f) / (rr**2 * f)
print("reference isotropic bracket:", sp.factor(sp.simplify(iso * rr**2)), "/ r^2")
print("reference radial bracket:", sp.factor(sp.simplify(rad * rr**4)), "/ r^4")

print("# monopole B closed form check, gauss residual with E = delta")
Bm = magnetic(A_mono)
print([[sp.simplify(Bm[a][j] + x[a] * x[j] / r2**2) for j in R3] for a in R3])
print("G^a =", [sp.simplify(sum(eps(a, b, c) * A_mono[b][c] for b in R3 for c in R3)) for a in R3])
print("B at (0,2,0):", [[Bm[a][j].subs({x[0]: 0, x[1]: 2, x[2]: 0}) for j in R3] for a in R3])
