"""Reference radial integrals by one-dimensional quadrature over incomplete gammas.

For the region r2 < r1 the inner integral is a lower incomplete gamma, so

    I(n, n', z, z', L, s) = int_0^inf r^(n-s) e^(-z r) gamma(n'+L+1, z' r) / z'^(n'+L+1) dr

is the half-range integral of r<^L / r>^s, and the full range adds the
mirrored term. Printed as Rust tuples for tests/reference_values.rs.
"""
from mpmath import mp, mpf, quad, gammainc, exp, inf, nstr

mp.dps = 40


def half(n, np_, z, zp, L, s):
    a = np_ + L + 1
    f = lambda r: r ** (n - s) * exp(-z * r) * gammainc(a, 0, zp * r) / zp ** a
    peak = max((n + np_ + L + 1 - s) / (z + zp), mpf(1))
    return quad(f, [0, peak / 4, peak, 4 * peak, inf])


def full(n, np_, z, zp, L, s):
    return half(n, np_, z, zp, L, s) + half(np_, n, zp, z, L, s)


def m(x):
    return mpf(float(x))


RADIAL = [
    (2.5, 3.7, 1.1, 1.3, 0),
    (2.5, 3.7, 1.1, 1.3, 1),
    (2.5, 3.7, 1.1, 1.3, 5),
    (99.5, 99.51, 1.1, 1.2, 0),
    (99.5, 99.51, 1.1, 1.2, 10),
    (99.5, 99.51, 1.1, 1.2, 40),
    (1.1, 119.7, 0.3, 10.0, 0),
    (1.1, 119.7, 0.3, 10.0, 25),
    (50.25, 7.75, 9.0, 0.4, 3),
    (50.25, 7.75, 9.0, 0.4, 20),
    (3.3, 3.3, 2.0, 2.0, 2),
]
BREIT_N = [
    (5.5, 4.5, 1.2, 2.1, 2),
    (3.25, 6.5, 0.8, 1.7, 0),
]
BREIT_V = [
    (2.5, 1.5, 1.1, 0.8, 3.5, 1.4, 1),
    (3.0, 0.0, 1.0, 1.0, 4.0, 2.0, 0),
]

print("// R^L: (n, n', zeta, zeta', L, value)")
for n, np_, z, zp, L in RADIAL:
    v = full(m(n), m(np_), m(z), m(zp), L, L + 1)
    print(f"({n!r}, {np_!r}, {z!r}, {zp!r}, {L}, {nstr(v, 20)}),")

print("// N^L: (n, n', zeta, zeta', L, value)")
for n, np_, z, zp, L in BREIT_N:
    v = half(m(n), m(np_), m(z), m(zp), L, L + 3)
    print(f"({n!r}, {np_!r}, {z!r}, {zp!r}, {L}, {nstr(v, 20)}),")

print("// V^L: (n1, n1', zeta1, zeta1', n2, zeta2, L, value)")
for n1, n1p, z1, z1p, n2, z2, L in BREIT_V:
    zs = m(z1) + m(z1p)
    v = -m(z1p) * full(m(n1) + m(n1p), m(n2), zs, m(z2), L, L + 3)
    if n1p != 0.0:
        v += m(n1p) * full(m(n1) + m(n1p) - 1, m(n2), zs, m(z2), L, L + 3)
    print(f"({n1!r}, {n1p!r}, {z1!r}, {z1p!r}, {n2!r}, {z2!r}, {L}, {nstr(v, 20)}),")
