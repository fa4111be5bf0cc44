"""High-precision reference values for the Möbius and Einstein models."""
from mpmath import mp, mpc, mpf, sqrt, conj, fabs

mp.dps = 50


def mobius_add(a, b):
    return (a + b) / (1 + conj(a) * b)


def mobius_gyr(a, b, c):
    return (1 + a * conj(b)) / (1 + conj(a) * b) * c


def scalar_compose(r, s):
    return (r + s) / (1 + r * s)


if __name__ == "__main__":
    a, b, z = mpc(0.5, 0), mpc(0, 0.5), mpc(0.3, 0)
    m = (1 + a * conj(b)) / (1 + conj(a) * b)
    print("multiplier", m, "abs", fabs(m))
    print("gyr(0.5,0.5i,0.3)", mobius_gyr(a, b, z))
    # generic route: -(a+b) + (a + (b + z))
    g = mobius_add(-mobius_add(a, b), mobius_add(a, mobius_add(b, z)))
    print("generic gyr", g)
    print("0.5 (+) 0.5", mobius_add(mpc(0.5), mpc(0.5)))
    print("gamma(0.6)", 1 / sqrt(1 - mpf("0.36")))
    for r in [mpf(1) / 2, mpf(1) / 3, mpf(1) / 4, mpf(1) / 5]:
        inner = scalar_compose(r, r)
        print("collinear r=%s: r+(r+r) = %s" % (mp.nstr(r, 6), mp.nstr(scalar_compose(r, inner), 20)))
