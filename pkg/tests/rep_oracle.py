"""Brute-force representation oracle for the quiver 1 -> 2 -> ... -> n.

Pins the library's closed-form hom/ext/submodule criteria from first
principles: interval modules are explicit vector-space data, hom spaces
are solution spaces of the commuting-square linear system over exact
rationals, ext comes from a projective resolution, and submodule tests
check injectivity of an actual homomorphism.  Nothing here imports the
library; slow and literal on purpose.

Roots are plain pairs (i, j) with 0 <= i < j <= n; the corresponding
interval module is supported on vertices i+1 .. j.
"""

from fractions import Fraction


def support(root):
    i, j = root
    return set(range(i + 1, j + 1))


def _nullspace(rows, nvars):
    """Basis of the solution space of rows * x = 0 over the rationals."""
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for col in range(nvars):
        piv = next((k for k in range(r, len(mat)) if mat[k][col] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        mat[r] = [x / mat[r][col] for x in mat[r]]
        for k in range(len(mat)):
            if k != r and mat[k][col] != 0:
                factor = mat[k][col]
                mat[k] = [a - factor * b for a, b in zip(mat[k], mat[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(nvars) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * nvars
        vec[f] = Fraction(1)
        for row_idx, p in enumerate(pivots):
            vec[p] = -mat[row_idx][f]
        basis.append(vec)
    return basis


def hom_solutions(a, b, n):
    """Basis of Hom(M_a, M_b) as vertexwise scalar tuples.

    A homomorphism is a scalar phi_v per vertex v where both modules are
    nonzero, subject to one commuting-square equation per arrow v -> v+1
    whose source is in M_a and whose target vertex is in M_b.
    """
    sa, sb = support(a), support(b)
    common = sorted(sa & sb)
    index = {v: idx for idx, v in enumerate(common)}
    rows = []
    for v in range(1, n):
        if v in sa and v + 1 in sb:
            row = [Fraction(0)] * len(common)
            if v + 1 in sa and v + 1 in sb:
                row[index[v + 1]] += 1
            if v in sb and v in sa:
                row[index[v]] -= 1
            rows.append(row)
    return common, _nullspace(rows, len(common))


def hom_oracle(a, b, n):
    """dim Hom(M_a, M_b), by linear algebra."""
    return len(hom_solutions(a, b, n)[1])


def projective(v, n):
    """The projective at vertex v is the interval v .. n."""
    return (v - 1, n)


def ext_oracle(a, b, n):
    """dim Ext^1(M_a, M_b) via 0 -> P_{t+1} -> P_s -> M_a -> 0.

    Applying Hom(-, M_b) to the resolution of the interval s..t gives
    ext = hom(P_{t+1}, b) - hom(P_s, b) + hom(a, b).
    """
    s, t = a[0] + 1, a[1]
    value = hom_oracle(a, b, n) - hom_oracle(projective(s, n), b, n)
    if t < n:
        value += hom_oracle(projective(t + 1, n), b, n)
    return value


def is_submodule_oracle(s, b, n):
    """Whether M_s embeds in M_b: some homomorphism is injective, which
    for one-dimensional fibers means nonzero at every vertex of M_s."""
    supp_s = support(s)
    if not supp_s <= support(b):
        return False
    common, basis = hom_solutions(s, b, n)
    if len(basis) > 1:
        raise AssertionError("hom dimension above 1 breaks the injectivity "
                             "shortcut; extend the oracle")
    if not basis:
        return False
    phi = dict(zip(common, basis[0]))
    return all(phi.get(v, Fraction(0)) != 0 for v in supp_s)


def all_root_pairs(n):
    roots = [(i, j) for i in range(n) for j in range(i + 1, n + 1)]
    return [(a, b) for a in roots for b in roots]
