"""Standard matrices and the unique factorization of c-matrices.

A matrix is standard when the diagonal is nonzero, positive entries sit on
or above the diagonal, negative ones on or below, and each row is a signed
root.  These axioms pin every signed root to one row, so a c-matrix factors
through a standard matrix in at most one way; the permutation part is what
the closed-form formula conjugates by.
"""

from quiverperm import (ExchangeMatrix, Permutation, Root, SignedGenerator,
                        check_preservation, factor_standard, framed,
                        is_standard, mutate)

candidates = [
    ((1, 1), (0, -1)),
    ((1, 0), (-1, -1)),
    ((0, -1), (-1, 0)),
    ((-1, -1), (1, 0)),
]
print("standardness of a few matrices:")
for c in candidates:
    print(f"  {c}: {is_standard(c)}")
print()

print("factoring the row-swapped negative identity:")
fact = factor_standard(((0, -1), (-1, 0)))
print("  rho =", fact.rho.cycle_string())
print("  standard part =", fact.m)
print("  rows restored:", fact.rho.apply_to_rows(fact.m) == ((0, -1), (-1, 0)))
print()

print("two positive roots fighting for row 1 cannot factor:")
print(" ", factor_standard(((1, 0), (1, 1))))
print()

print("uniqueness: permuting a standard matrix breaks standardness:")
c = ((1, 1), (0, -1))
for images in [(1, 2), (2, 1)]:
    rho = Permutation(images)
    print(f"  rho {rho.cycle_string():<4} standard: "
          f"{is_standard(rho.apply_to_rows(c))}")
print()

print("acting by an allowed generator and swapping (i+1, j) keeps a "
      "standard state standard:")
state = mutate(framed(ExchangeMatrix.straight_a(2)), 2)
print("  state c =", state.c)
g = SignedGenerator(Root(0, 2))
print(f"  check_preservation(state, {g}) =", check_preservation(state, g))
