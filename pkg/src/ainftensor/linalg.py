"""Sparse exact linear algebra over the coefficient rings.

Vectors are dicts key -> scalar with zeros pruned, matching the element
representation.  Everything here is plain Gaussian elimination; sizes
in this library stay small, exactness is what matters.
"""


def vec_add(u, v, ring, scalar=None):
    out = dict(u)
    s = ring.one if scalar is None else scalar
    for k, c in v.items():
        nc = ring.add(out.get(k, ring.zero), ring.mul(c, s))
        if ring.is_zero(nc):
            out.pop(k, None)
        else:
            out[k] = nc
    return out


def vec_scale(u, s, ring):
    if ring.is_zero(s):
        return {}
    return {k: ring.mul(c, s) for k, c in u.items()}


def solve_linear(equations, ring):
    """Solve a sparse linear system.

    equations is a list of (row, rhs) with row a dict var -> coeff.
    Returns a dict var -> value with unconstrained variables omitted,
    or None when the system is inconsistent.
    """
    pivots = []
    for row, rhs in equations:
        row = dict(row)
        rhs = rhs
        for pvar, prow, prhs in pivots:
            c = row.get(pvar)
            if c is None or ring.is_zero(c):
                continue
            factor = ring.neg(c)
            row = vec_add(row, prow, ring, factor)
            rhs = ring.add(rhs, ring.mul(prhs, factor))
        if not row:
            if not ring.is_zero(rhs):
                return None
            continue
        pvar = min(row, key=repr)
        inv = ring.inv(row[pvar])
        row = vec_scale(row, inv, ring)
        rhs = ring.mul(rhs, inv)
        pivots.append((pvar, row, rhs))
    solution = {}
    for pvar, row, rhs in reversed(pivots):
        val = rhs
        for var, c in row.items():
            if var == pvar:
                continue
            val = ring.sub(val, ring.mul(c, solution.get(var, ring.zero)))
        if not ring.is_zero(val):
            solution[pvar] = val
    return solution


def decompose(vecs, target_vec, ring):
    """Write target_vec as a combination of vecs, or return None.

    vecs is a list of dict vectors; returns the coefficient list."""
    keys = set(target_vec)
    for v in vecs:
        keys.update(v)
    equations = []
    for k in sorted(keys, key=repr):
        row = {i: v.get(k, ring.zero) for i, v in enumerate(vecs)
               if not ring.is_zero(v.get(k, ring.zero))}
        equations.append((row, target_vec.get(k, ring.zero)))
    sol = solve_linear(equations, ring)
    if sol is None:
        return None
    return [sol.get(i, ring.zero) for i in range(len(vecs))]
