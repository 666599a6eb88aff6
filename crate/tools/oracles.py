"""Reference values frozen into the Rust test suites.

Run with `python3 tools/oracles.py`. Uses mpmath (50 digits) for log-gamma
and dense numpy scans of closed forms on the circle |z| = 0.999.
"""
import mpmath as mp
import numpy as np

mp.mp.dps = 50


def lgamma_grid():
    xs = np.linspace(0.5, 500.0, 100)
    print("// log-gamma grid: (x, ln Gamma(x))")
    for x in xs:
        print("    (%r, %s)," % (float(x), mp.nstr(mp.loggamma(mp.mpf(float(x))), 20)))


def circle(n, r=0.999):
    t = np.arange(n) * (2 * np.pi / n)
    return r * np.exp(1j * t)


def corollary_minima(n=1_000_000):
    z = circle(n)
    s2 = np.sqrt(z / 2)
    s = np.sqrt(z)
    rows = {
        # Corollary 1: alpha=0, beta=-1/3, gamma=1
        "c1_f_over_fm": np.exp(-z / 3),
        "c1_fm_over_f": np.exp(z / 3),
        "c1_fp": -np.exp(-z / 3) * (z - 3) / 3,
        "c1_one_over_fp": -3 * np.exp(z / 3) / (z - 3),
        # Corollary 2: alpha=1, beta=1/2, gamma=1
        "c2_f_over_fm": np.sinh(s2) / s2,
        "c2_fm_over_f": s2 / np.sinh(s2),
        "c2_fp": 0.5 * np.cosh(s2) + np.sinh(s2) / np.sqrt(2 * z),
        "c2_one_over_fp": 1 / (0.5 * np.cosh(s2) + np.sinh(s2) / np.sqrt(2 * z)),
        # Corollary 3: alpha=1, beta=-1/4, gamma=1
        "c3_f_over_fm": 2 / s * np.sin(s / 2),
        "c3_fm_over_f": (s / 2) / np.sin(s / 2),
        "c3_fp": 0.5 * np.cos(s / 2) + np.sin(s / 2) / s,
        "c3_one_over_fp": 1 / (0.5 * np.cos(s / 2) + np.sin(s / 2) / s),
        # Corollary 4: alpha=1, beta=1, gamma=1
        "c4_f_over_fm": np.sinh(s) / s,
        "c4_fm_over_f": s / np.sinh(s),
    }
    print("// corollary minima of Re{ratio} on |z| = 0.999, %d points" % n)
    for k, v in rows.items():
        print("    (\"%s\", %.17g)," % (k, v.real.min()))


def lemma2_sups(n=1_000_000):
    z = circle(n)
    print("// lemma 2 sups on |z| = 0.999")
    print("base a=0 b=-1/3 g=1: %.17g" % np.abs(z * np.exp(-z / 3)).max())
    s2 = np.sqrt(z / 2)
    print("deriv a=1 b=1/2 g=1: %.17g" % np.abs(0.5 * np.cosh(s2) + np.sinh(s2) / np.sqrt(2 * z)).max())


def general_case(n=200_000):
    # alpha=2, beta=1, gamma=2 -> c = 4, A_n = Gamma(4) / Gamma(4(n+1))
    c = 4
    coeffs = [mp.gamma(c) / mp.gamma(c * (k + 1)) for k in range(1, 30)]
    a = np.array([float(x) for x in coeffs])
    z = circle(n)
    g = np.ones_like(z)
    gp = np.ones_like(z)
    gi = np.ones_like(z)
    for k, ak in enumerate(a, start=1):
        g = g + ak * z**k
        gp = gp + (k + 1) * ak * z**k
        gi = gi + ak / (k + 1) * z**k
    print("// alpha=2 beta=1 gamma=2, m=0 minima on |z|=0.999")
    for name, v in [("f_over_fm", g), ("fm_over_f", 1 / g), ("fp_over_fmp", gp),
                    ("fmp_over_fp", 1 / gp), ("i_over_im", gi), ("im_over_i", 1 / gi)]:
        print("    (\"%s\", %.17g)," % (name, v.real.min()))


if __name__ == "__main__":
    lgamma_grid()
    corollary_minima()
    lemma2_sups()
    general_case()
