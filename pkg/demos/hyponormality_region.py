"""Where the certificate Q >= I >= P >= 0 holds, on a grid of alpha values."""

from fractions import Fraction

from gencesaro.exact import format_rational
from gencesaro.positivity import certify_theorem12

grid = [Fraction(k, 10) for k in range(0, 16)] + [Fraction(10)]
for alpha in grid:
    cert = certify_theorem12(alpha, 30)
    mark = "certified" if cert.hyponormal_certified else "-"
    print(f"alpha={format_rational(alpha):>5}  Q-I: {cert.q_minus_i.classification:22s} {mark}")
