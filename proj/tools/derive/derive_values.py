#!/usr/bin/env python3
"""Reference values frozen into the tests, computed with mpmath.

Bessel sums split sum_n J(nx)/n^a into sum_n [J(nx) - H_K(nx)]/n^a, which decays fast,
plus the Hankel terms H_K summed exactly as polylogarithms.
"""
from mpmath import mp, mpf, pi, zeta, besselj, polylog, expj, sqrt, log, rf, gamma, fac, nsum, inf, altzeta, catalan, diff

mp.dps = 40


def hankel_coeff(nu, k):
    c = mpf(1)
    for i in range(1, k + 1):
        c *= (4 * nu**2 - (2 * i - 1) ** 2)
    return c / (fac(k) * 8**k)


def bessel_sum(nu, alpha, x, K=16, N=4000):
    def hk(z):
        w = z - nu * pi / 2 - pi / 4
        s = mpf(0)
        for k in range(K):
            a = hankel_coeff(nu, k)
            if k % 2 == 0:
                s += (-1) ** (k // 2) * a * mp.cos(w) / z**k
            else:
                s -= (-1) ** (k // 2) * a * mp.sin(w) / z**k
        return sqrt(2 / (pi * z)) * s

    head = mp.fsum((besselj(nu, n * x) - hk(n * x)) / mpf(n) ** alpha for n in range(1, N))
    phi = nu * pi / 2 + pi / 4
    tail = mpf(0)
    for k in range(K):
        a = hankel_coeff(nu, k)
        beta = alpha + mpf(1) / 2 + k
        e = polylog(beta, expj(x)) * expj(-phi)
        part = (mp.re(e) if k % 2 == 0 else -mp.im(e)) * (-1) ** (k // 2)
        tail += sqrt(2 / (pi * x)) * a * part / x**k
    return head + tail


def spherical_sum(p, alpha, x):
    # j_p(nx) = sqrt(pi/(2nx)) J_{p+1/2}(nx)
    return sqrt(pi / (2 * x)) * bessel_sum(p + mpf(1) / 2, alpha + mpf(1) / 2, x, K=p + 2)


def zeta_poch(weight, x, terms=400):
    t = (x / (2 * pi)) ** 2
    return mp.fsum(weight(n) * zeta(2 * n) * t**n for n in range(1, terms))


def trig(kind, s, x, y):
    e = polylog(s, expj(x)) * expj(y)
    return mp.re(e) if kind == "cos" else mp.im(e)


def show(name, v):
    print(f"{name:40s} {mp.nstr(v, 20)}")


show("zeta(3)", zeta(3))
show("zeta'(-1,1)", diff(lambda s: zeta(s, 1), -1))
show("zeta'(0,1/2)", diff(lambda s: zeta(s, mpf(1) / 2), 0))
show("zeta'(-3,0.3)", diff(lambda s: zeta(s, mpf("0.3")), -3))
show("zeta(-2.5,0.7)", zeta(mpf("-2.5"), mpf("0.7")))
show("J_1(1)", besselj(1, 1))
show("j_2(1)", sqrt(pi / 2) * besselj(mpf(5) / 2, 1))
show("trig cos s=1.5 x=pi/2", trig("cos", mpf("1.5"), pi / 2, 0))
show("trig sin s=2.5 x=1 y=0.3", trig("sin", mpf("2.5"), mpf(1), mpf("0.3")))
show("cos_odd m=2 x=1", trig("cos", 3, mpf(1), 0))
show("cos_odd m=3 x=2.5", trig("cos", 5, mpf("2.5"), 0))
show("S base m=1 x=pi", zeta_poch(lambda n: 1 / rf(2 * n, 1), pi))
show("S base m=2 x=pi", zeta_poch(lambda n: 1 / rf(2 * n, 3), pi))
show("S even m=1 x=pi", zeta_poch(lambda n: 1 / rf(2 * n, 2), pi))
show("S even m=2 x=2", zeta_poch(lambda n: 1 / rf(2 * n, 4), mpf(2)))
show("S_q q=14 x=0.5", zeta_poch(lambda n: 1 / rf(2 * n, 14), mpf("0.5")))
show("G m=1 p=1 x=pi", zeta_poch(lambda n: rf(1 + n, 1) / rf(2 * n, 4), pi))
show("G m=3 p=2 x=pi", zeta_poch(lambda n: rf(3 + n, 2) / rf(2 * n, 10), pi))
show("raw nu=0.3 a=2.1 x=2", bessel_sum(mpf("0.3"), mpf("2.1"), mpf(2)))
show("even nu=1 m=1 x=2", bessel_sum(mpf(1), mpf(3), mpf(2)))
show("odd nu=0.25 m=2 x=2", bessel_sum(mpf("0.25"), mpf("3.25"), mpf(2)))
show("half m=2 x=2", bessel_sum(mpf(1) / 2, mpf("3.5"), mpf(2)))
show("sph base p=1 a=3.2 x=2", spherical_sum(1, mpf("3.2"), mpf(2)))
show("sph closed p=1 m=1 x=2", spherical_sum(1, mpf(2), mpf(2)))
show("sph closed p=1 m=1 x=pi", spherical_sum(1, mpf(2), pi))
show("eta(3)/pi", altzeta(3) / pi)
show("sph closed p=2 m=3 x=pi", spherical_sum(2, mpf(7), pi))
for x in (1, 2, pi, 4):
    show(f"sum j_2(nx)/n^7 x={mp.nstr(x, 6)}", spherical_sum(2, mpf(7), mpf(x)))
show("pi^2/16", pi**2 / 16)
show("2G/pi", 2 * catalan / pi)
