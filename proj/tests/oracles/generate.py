"""Independent multiprecision reference values for the numeric tests.

Run from this directory: python3 generate.py  (writes oracles.json)
"""
import json
import mpmath as mp

mp.mp.dps = 40


def cnum(z):
    z = mp.mpc(z)
    return [mp.nstr(z.real, 30), mp.nstr(z.imag, 30)]


def wave1_integrand(g, gam, c, x):
    ic = 1j * c
    lg = (2 * g / ic) * mp.log(c) - g * x / ic
    lg += mp.loggamma((gam + g) / ic + 0.5) + mp.loggamma((-gam + g) / ic + 0.5)
    return mp.exp(lg)


def wave1_trapezoid(gam, c, x, L, step):
    n = int(round(L / step))
    s = mp.mpf(0)
    for k in range(-n, n + 1):
        w = 0.5 if abs(k) == n else 1.0
        s += w * wave1_integrand(k * step, gam, c, x)
    return s * step


def wave1_bessel(gam, c, x):
    y = x - 2 * mp.log(c)
    return 4 * mp.pi * c * mp.exp(y / 2) * mp.besselk(2j * gam / c, 2 * mp.exp(y / 2))


def gustafson_rhs(k, odd_lo, odd_hi, c):
    ic = 1j * c
    v = c**k * (2 * mp.pi) ** k * 2**k * mp.factorial(k)
    for r in range(len(odd_lo)):
        for s in range(r + 1, len(odd_lo)):
            v *= mp.gamma((odd_lo[r] + odd_lo[s]) / ic + 1)
    for a in odd_lo:
        for b in odd_hi:
            v *= mp.gamma((a - b) / ic + 1)
    for r in range(len(odd_hi)):
        for s in range(r + 1, len(odd_hi)):
            v *= mp.gamma(-(odd_hi[r] + odd_hi[s]) / ic + 1)
    return v


def gustafson_lhs_k1(odd_lo, odd_hi, c):
    ic = 1j * c

    def f(g):
        v = mp.mpf(1)
        for s in (1, -1):
            for a in odd_lo:
                v *= mp.gamma((s * g + a) / ic + 0.5)
            for b in odd_hi:
                v *= mp.gamma((s * g - b) / ic + 0.5)
        return v / abs(mp.gamma(2 * g / ic)) ** 2

    return mp.quad(f, [-mp.inf, -5, 0, 5, mp.inf])


out = {}

lg_points = [1, 0.5, 2, 0.3 + 2j, 0.5 - 3.25j, 1e-3, -0.5, -2.75, -3.7 + 0.2j, -0.4 - 7j, 10 + 100j,
             500 - 800j, -120.3 + 45j, 7.5 + 0.01j, 0.25 + 60j, 1 - 1e-8j, -9.999 - 1e-3j, 300 + 0j]
out["log_gamma"] = [{"z": cnum(z), "value": cnum(mp.loggamma(z))} for z in lg_points]

gam, c, x = 0.7, 1.0, -0.3
out["wave1_dense"] = {"gamma": gam, "c": c, "x": x, "L": 60, "step": 0.01,
                      "value": cnum(wave1_trapezoid(gam, c, x, 60, 0.01))}

out["wave1_bessel"] = [{"gamma": g, "c": cc, "x": xx, "value": cnum(wave1_bessel(g, cc, xx))}
                       for (g, cc, xx) in [(0.7, 1.0, -0.3), (0.7, 1.3, 0.4), (1.5, 0.8, -1.0), (0.2, 2.0, 1.5),
                                           (0.0, 1.0, 0.0), (2.5, 1.0, 2.0)]]

gus = []
for (lo, hi, cc) in [([0.4], [-0.5, 0.9], 1.0), ([0.4], [-0.5, 0.9], 1.3), ([-0.2], [0.3, 1.1], 0.7)]:
    rhs = gustafson_rhs(1, lo, hi, cc)
    lhs = gustafson_lhs_k1(lo, hi, cc)
    gus.append({"k": 1, "lower": lo, "upper": hi, "c": cc, "rhs": cnum(rhs), "lhs_quad": cnum(lhs)})
for (lo, hi, cc) in [([0.3, -0.8], [0.5, -0.1, 1.2], 1.0), ([0.45, 0.2], [-0.6, 0.15, 0.9], 1.2)]:
    gus.append({"k": 2, "lower": lo, "upper": hi, "c": cc, "rhs": cnum(gustafson_rhs(2, lo, hi, cc))})
out["gustafson"] = gus

with open("oracles.json", "w") as f:
    json.dump(out, f, indent=1)
    f.write("\n")
