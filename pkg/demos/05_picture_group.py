"""Signed generators, words and their defining relations.

The generator x_ij acts on a state by mutating at the vertex whose c-vector
is +b_ij (the inverse generator looks for -b_ij); it is undefined when no
row matches.  Words multiply right to left.  The defining relations are
commutations for disjoint or nested intervals and hexagons
x_jk x_ij = x_ij x_ik x_jk; on states they hold up to a row permutation.
"""

from quiverperm import (ExchangeMatrix, Root, SignedGenerator, act, act_word,
                        allowed, build_exchange_graph, coframed, coxeter,
                        framed, relation_holds_on, relations)

m = framed(ExchangeMatrix.straight_a(2))

x01 = SignedGenerator(Root(0, 1))
x02 = SignedGenerator(Root(0, 2))
x12 = SignedGenerator(Root(1, 2))

print("which generators act on the framed state?")
for g in (x01, x02, x12):
    print(f"  {g}: vertex {allowed(m, g)}")
print()

print("acting by x12 mutates at vertex 2:")
print(" ", act(m, x12).c)
print()

print("the ascending word of simple generators turns the frame into the "
      "coframe:")
w = coxeter(2)
print(f"  {w.display} applied to the frame gives the coframe: "
      f"{act_word(m, w) == coframed(ExchangeMatrix.straight_a(2))}")
print()

print("defining relations for three endpoints:")
for rel in relations(2):
    print(f"  {rel.kind}: {rel.lhs.display} = {rel.rhs.display}")
print()

print("checking the hexagon on every reachable rank-2 state:")
rel = relations(2)[0]
graph = build_exchange_graph(2)
for key, state in sorted(graph.nodes.items()):
    print(f"  c = {key}: {relation_holds_on(state, rel).value}")
