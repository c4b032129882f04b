"""Print small sections of the operators, exactly."""

from fractions import Fraction

from gencesaro.operators import OperatorSpec, finite_section

alpha = Fraction(1, 2)
for kind in ("c1", "c2", "c2_Q", "b_matrix", "pB"):
    print(f"{kind} at alpha={alpha}:")
    for row in finite_section(OperatorSpec(kind, alpha), 4).to_strings():
        print("   " + "  ".join(f"{x:>9}" for x in row))
