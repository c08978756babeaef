"""Arbitrary-precision reference values for the outage evaluators.

Integrates the FGM/exponential joint density over the triangle
A*g1 + B*g2 <= gamma directly in 2-D with mpmath; shares no code with the
C++ evaluators. Output is pasted into tests/test_outage.cpp.
"""
import mpmath as mp

mp.mp.dps = 30


def pdf(theta, l1, l2, x, y):
    e1, e2 = mp.e ** (-l1 * x), mp.e ** (-l2 * y)
    return l1 * l2 * e1 * e2 * (1 + theta * (2 * e1 - 1) * (2 * e2 - 1))


def outage(theta, l1, l2, a, b, gamma):
    if gamma == 0:
        return mp.mpf(0)
    return mp.quad(lambda y: mp.quad(lambda x: pdf(theta, l1, l2, x, y),
                                     [0, (gamma - b * y) / a]),
                   [0, gamma / b])


cases = [
    (0.5, 1, 1, 1, 5, 3),
    (0, 1, 1, 1, 1, 1),
    (1, 1, 2, 1, 0.5, 0.7),
    (-0.7, 0.5, 3, 2, 1, 2.5),
    (1, 1, 1, 1, 5, mp.mpf("3e-5")),
    (-1, 1, 1, 1, 5, mp.mpf("3e-5")),
    (0.25, 2, 0.5, 3, 0.25, 4),
]
for c in cases:
    print(c, mp.nstr(outage(*[mp.mpf(v) for v in c]), 20))

# Spearman rho of the FGM copula: 12 * int int C - 3
th = mp.mpf("0.9")
C = lambda u, v: u * v * (1 + th * (1 - u) * (1 - v))
print("spearman(0.9)", mp.nstr(12 * mp.quad(C, [0, 1], [0, 1]) - 3, 20))
# Pearson correlation of unit-rate exponential gains via the joint density
e_xy = mp.quad(lambda x, y: x * y * pdf(th, 1, 1, x, y), [0, mp.inf], [0, mp.inf])
print("pearson(0.9)", mp.nstr(e_xy - 1, 20))
