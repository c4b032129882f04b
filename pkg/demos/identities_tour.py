"""Walk through the operator identities on finite sections and in closed form.

Each check compares two exact computations entry by entry; the telescoping
witnesses show why the infinite sums collapse to closed forms.
"""

from fractions import Fraction

from gencesaro.exact import ALPHA
from gencesaro.identities import (
    check_BB_identity, check_BM_identity, check_C1_identity, check_MQM_identity,
    mpm_series_witness,
)

alpha = Fraction(1, 3)

# one entry of M*PM as a telescoping series
w = mpm_series_witness(alpha, 1, 3)
print("summand  :", w.summand)
print("s(k)     :", w.s)
print("sum = s(0) =", w.initial_value)
print("partial sum to K=50 plus tail:", w.partial_sum(50) + w.remainder(50))

for check in (check_MQM_identity, check_BM_identity, check_BB_identity, check_C1_identity):
    rep = check(alpha, 12)
    print(f"{rep.identity:12s} alpha={alpha}  n=12  {rep.verdict}")

# the same identity as a rational-function identity in alpha
print("symbolic:", check_MQM_identity(ALPHA, 6).verdict)
