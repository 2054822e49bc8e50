"""Independent expected-value computations used by the test suite.

The star oracle expands D^k through the explicit binomial formula on a
two-variable plane, a different route than the library's multiset expansion
over bivector entries, so agreement is meaningful.
"""

from fractions import Fraction
from math import comb, factorial

from moyalquot.gaussian import GaussianRational
from moyalquot.rational import RationalFunction
from moyalquot.series import HSeries

I = GaussianRational(0, 1)


def star_2d_oracle(f: RationalFunction, g: RationalFunction, order: int) -> HSeries:
    """f*g on a two-variable plane with {first, second} = 1."""
    first, second = f.vars
    coeffs = []
    for k in range(order + 1):
        term = RationalFunction.zero(f.vars)
        for j in range(k + 1):
            df = f
            for _ in range(k - j):
                df = df.derivative(first)
            for _ in range(j):
                df = df.derivative(second)
            dg = g
            for _ in range(k - j):
                dg = dg.derivative(second)
            for _ in range(j):
                dg = dg.derivative(first)
            sign = -1 if j % 2 else 1
            term = term + (comb(k, j) * sign) * (df * dg)
        scalar = (I * Fraction(1, 2)) ** k * Fraction(1, factorial(k))
        coeffs.append(scalar * term)
    return HSeries(coeffs)
