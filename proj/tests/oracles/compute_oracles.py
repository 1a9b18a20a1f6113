"""Independent reference values frozen into the C++ tests.

Run with `python3 tests/oracles/compute_oracles.py`. Uses mpmath at 40 digits
and numpy brute force; none of the values go through the library.
"""

import numpy as np
from mpmath import mp, mpf, log, exp, quad, inf, sqrt

mp.dps = 40


def llogl(t):
    return t * log(3 + t)


def bisect(g, lo, hi, steps=200):
    """Root of an increasing g on [lo, hi]."""
    lo, hi = mpf(lo), mpf(hi)
    for _ in range(steps):
        mid = (lo + hi) / 2
        if g(mid) > 0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


def llogl_inverse(s):
    return bisect(lambda t: llogl(t) - s, 0, 10 + 10 * s)


def llogl_conjugate(t):
    # stationary point of s t - s log(3 + s): t = log(3 + s) + s / (3 + s)
    g = lambda s: t - log(3 + s) - s / (3 + s)
    if g(mpf(0)) <= 0:
        return mpf(0)
    s = bisect(lambda s: -g(s), 0, exp(t))
    return s * t - llogl(s)


def llogl_conjugate_inverse(u):
    return bisect(lambda t: llogl_conjugate(t) - u, log(3), 60, steps=140)


def main():
    print("llogl_left_derivative_1", log(4) + mpf(1) / 4)
    print("llogl_inverse_norm_unit", 1 / llogl_inverse(1))
    for t in (4, 5, 6, 8):
        c = llogl_conjugate(mpf(t))
        print(f"llogl_conjugate_{t}", c, "ratio_to_exp", c / exp(t))
    for t in ("0.1", "1", "10", "100"):
        t = mpf(t)
        print(f"oneil_llogl_{t}", llogl_inverse(t) * llogl_conjugate_inverse(t) / t)
    # exp(t) - 1: conjugate inverse solves t log t - t + 1 = u on t >= 1
    for t in ("1",):
        t = mpf(t)
        inv = log(1 + t)
        cinv = bisect(lambda s: s * log(s) - s + 1 - t, 1, 10)
        print("oneil_exp_1", inv * cinv / t)

    # ||f||_{1/2,1} = int_0^inf mu_f(t)^2 dt with mu_f(f(x)) = 2x;
    # by parts this is 8 int_0^inf x f(x) dx, f(x) = (1+x)^-2 log(3+x)^-2.
    # Substituting x = e^u - 1 keeps the slow tail tractable.
    ex1 = 8 * quad(lambda u: (exp(u) - 1) * exp(u) / (exp(2 * u) * log(2 + exp(u)) ** 2), [0, 1, 10, 100, 1000, inf])
    print("ex1_lorentz_norm", ex1)
    for r in (10**3, 10**4, 10**5, 10**6):
        print(f"ex1_ladder_{r}", 2 * quad(lambda x: 1 / ((1 + x) * log(3 + x)), [0, 1, 10, 100, 1000, 10**4, 10**5, r]))
    # l^2 norm on Z of (1+|n|)^-1/2 log(3+|n|)^-1: partial sum, then the
    # tail integral in u = log(1+x) with Euler-Maclaurin end corrections.
    g = lambda x: 1 / ((1 + x) * log(3 + x) ** 2)
    big = 10**5
    s = mp.fsum(g(mpf(n)) for n in range(1, big))
    tail = quad(lambda u: exp(u) * g(exp(u) - 1), [log(1 + mpf(big)), inf])
    slope = mp.diff(g, big)
    s += tail + g(big) / 2 - slope / 12
    print("l2_norm", sqrt(1 / log(3) ** 2 + 2 * s))

    # Block certification by brute force: d_E = 1 / (sqrt-ish) closed forms.
    n = np.arange(1, 1001, dtype=np.float64)
    N, M = np.meshgrid(n, n, indexing="ij")
    mask = N < M
    card = (M - N)[mask]
    # GaussPower(p=2, q=1), Phi = t: d_E = 2 (sqrt m - sqrt n) / (m - n)^{1/2}
    d = 2 * (np.sqrt(M) - np.sqrt(N))[mask] / np.sqrt(card)
    print("gauss_2_1_min_D", repr(d.max()))
    # GaussPower(1, 1), Phi = t: d_E = 2
    # LogMap(1), Phi = e^t - 1: nu = 2 (a_m - a_n), a_k = 1/expm1(1/k);
    # d_E = 1 / (mu Phi^{-1}(1/nu)) with Phi^{-1}(s) = log1p(s).
    a = lambda k: 1.0 / np.expm1(1.0 / k)
    nu = 2 * (a(M) - a(N))[mask]
    d = 1.0 / (card * np.log1p(1.0 / nu))
    print("logmap_1_min_D", repr(d.max()))
    # OrliczInverse(LLogL, 1): a_k = 1 / Phi(1/k); Phi^{-1} by vectorized bisection.
    phi = lambda t: t * np.log(3 + t)
    a = lambda k: 1.0 / phi(1.0 / k)
    nu = 2 * (a(M) - a(N))[mask]
    target = 1.0 / nu
    lo = np.zeros_like(target)
    hi = np.maximum(1.0, target)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        up = phi(mid) > target
        hi = np.where(up, mid, hi)
        lo = np.where(up, lo, mid)
    d = 1.0 / (card * 0.5 * (lo + hi))
    print("orlicz_inverse_llogl_1_min_D", repr(d.max()))
    # OrliczInverse(LLogL, 1) singleton preimage {n}: 2 (a_{n+1} - a_n).
    ak = lambda k: 1 / llogl(1 / mpf(k))
    for k in (1, 5):
        print(f"orlicz_inverse_singleton_{k}", 2 * (ak(k + 1) - ak(k)))
    print("power_log_decay_mu_at_f10", 20)


if __name__ == "__main__":
    main()
