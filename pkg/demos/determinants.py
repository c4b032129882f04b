"""Symbolic determinants of the corner blocks and of I - B*B sections."""

from gencesaro.positivity import det_S_polynomial, det_Z, det_corner_Q, sturm_root_count

print("det of Q's 2x2 corner:", det_corner_Q())
print("det Z_0:", det_Z(0))
print("det Z_1:", det_Z(1))

for n in range(4):
    d = det_S_polynomial(n)
    pre, inner = d.display_split()
    roots = sturm_root_count(d.numerator, 0, None)
    den = " ".join(f"(alpha+{c})^{e}" for c, e in d.denominator_factors)
    print(f"det S_{n}: {pre} * ({inner}) / {den}")
    print(f"   positive real roots of the numerator: {roots}")
