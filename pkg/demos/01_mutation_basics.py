"""Mutating a framed quiver and reading the c-matrix.

The state is the n x 2n integer matrix [B | C].  Mutation at a vertex k
flips row/column k of B and row k of C, and adds correction terms to the
other rows.  Every row of C stays a signed root vector, and its sign tells
the color of the vertex: nonnegative green, nonpositive red.
"""

from quiverperm import (ExchangeMatrix, apply_sequence, coframed, format_state,
                        framed, is_all_red, mutate, state_to_json, vertex_color)

b0 = ExchangeMatrix.straight_a(2)
m = framed(b0)

print("framed straight A_2, [B | C]:")
print(format_state(m))
print("colors:", {k: vertex_color(m, k).value for k in (1, 2)})
print()

print("mutate at 2:")
m2 = mutate(m, 2)
print(format_state(m2))
print("colors:", {k: vertex_color(m2, k).value for k in (1, 2)})
print()

print("mutation is an involution; mutating at 2 again restores the start:")
print(mutate(m2, 2) == m)
print()

print("the sequence (2, 1, 2) ends on a row-swapped coframe:")
end = apply_sequence(m, (2, 1, 2))
print(format_state(end))
print("all red:", is_all_red(end))
print("coframe for comparison:")
print(format_state(coframed(b0)))
print()

print("states serialize to plain JSON:")
print(state_to_json(end))
