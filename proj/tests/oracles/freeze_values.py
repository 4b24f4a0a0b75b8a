"""Independent oracle for the frozen constants in the C++ tests.

Uses mpmath (60 digits) and sympy's prime generator; shares no code with
the library. Run: python3 tests/oracles/freeze_values.py
"""
from fractions import Fraction as F

from mpmath import ceil, exp, log, mp, mpf, root
from sympy import primerange

mp.dps = 60

THEOREMS = {
    "axler": (58837, F(1188, 1000), 3),
    "dusart": (396738, F(1, 25), 2),
    "trudgian": (2898242, F(1, 111), 2),
}


def mpq(fr):
    return mpf(fr.numerator) / fr.denominator


def k_max(name):
    x0, c, e = THEOREMS[name]
    return 1 + mpq(c) / log(x0) ** e


def bound(k, name):
    x0, c, e = THEOREMS[name]
    return int(ceil(mpq(k) * exp(root(mpq(c) / mpq(k - 1), e))))


def first_ramanujan(k, limit):
    ps = list(primerange(2, limit + 1))
    m = 0
    for i in range(1, len(ps)):
        if F(ps[i], ps[i - 1]) > k:
            m = i
    return ps[m], m + 1


if __name__ == "__main__":
    print("cor_bound(1.0008968291, axler) =", bound(F(10008968291, 10**10), "axler"))
    print("cor_bound(1.0004, axler) =", bound(F(10004, 10**4), "axler"))
    for name in THEOREMS:
        km = k_max(name)
        k = F(int(mp.floor(km * 10**15)), 10**15)
        print(f"{name}: k_max = {km}; k = {k} -> bound {bound(k, name)}, "
              f"ceil(k*x0) = {int(ceil(mpq(k) * THEOREMS[name][0]))}")
    for text in ["1.0005", "1.0003", "1.00025", "1.0002"]:
        k = F(text)
        b = min(bound(k, n) for n in THEOREMS if mpq(k) <= k_max(n))
        print(f"R_1({text}) = {first_ramanujan(k, b)} (bound {b})")
