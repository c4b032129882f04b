"""Leading minors of I - B*B for alpha strictly between 0 and 1.

A positive definite section is evidence, not proof; any nonpositive minor is
printed as a counterexample candidate.
"""

from fractions import Fraction

from gencesaro.positivity import certify_conjecture_route

N = 25
for k in range(1, 10):
    alpha = Fraction(k, 10)
    rep = certify_conjecture_route(alpha, N)
    smallest = min(rep.minors)
    print(f"alpha={alpha}  {rep.classification}  smallest minor ~ {float(smallest):.3e}")
    if rep.first_violation:
        print("   candidate:", rep.first_violation)
