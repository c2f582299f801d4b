"""Solving for homotopies between functors.

Two functors F, G with the same object map are homotopic when F - G is
the differential of a degree 0 transformation T with vanishing T0.  At
each arity n the unknown component T^n enters D(T)^n linearly through
the hom complex differential

    L(T^n)(chain) = m1(T^n(chain)) + sum_k (-1)^(g + pre k)
                                     T^n(chain with m1 inserted at k),

all other terms involve T^{<n} only.  So the components are found
arity by arity by exact sparse elimination, restricted to the degree
slice sum(deg) - n forced on values.
"""

from . import elements as el
from . import signs
from . import linalg
from .category import composable_chains
from .prenat import Prenat, m1_value


def solve_homotopy(f, g, arity_cap, chains=None):
    """Find T of degree 0, T0 = 0, with D(T) = F - G up to arity_cap.

    Returns the transformation, or None if no homotopy exists at these
    arities.  F and G must share source, target and object map.
    """
    assert f.source is g.source and f.target is g.target
    assert f.obj_map == g.obj_map
    src, tgt = f.source, f.target
    ring = tgt.ring
    tables = {}
    partial = Prenat(f, g, 0, {}, name="solved")
    partial.components = tables

    for n in range(1, arity_cap + 1):
        level = chains[n] if chains is not None else \
            composable_chains(src, n)
        unknowns = {}
        for chain in level:
            want = el.out_deg(chain, -1)
            x, y = el.chain_src(chain), el.chain_tgt(chain)
            opts = [b for b in tgt.hom_basis(f.obj(x), g.obj(y))
                    if b.deg == want]
            unknowns[chain] = opts
        equations = []
        for chain in level:
            known = m1_value(partial, n, chain)
            rhs_elt = el.sub(
                el.sub(f.component(n, chain), g.component(n, chain), ring),
                known, ring)
            row_per_basis = {}
            for b, c in _linear_part(partial, n, chain, unknowns, ring):
                row_per_basis.setdefault(b, {})
                var = c[0]
                row_per_basis[b][var] = ring.add(
                    row_per_basis[b].get(var, ring.zero), c[1])
            space = set(row_per_basis)
            space.update(rhs_elt)
            for b in space:
                row = row_per_basis.get(b, {})
                row = {v: c for v, c in row.items() if not ring.is_zero(c)}
                rhs = rhs_elt.get(b, ring.zero)
                if row or not ring.is_zero(rhs):
                    equations.append((row, rhs))
        sol = linalg.solve_linear(equations, ring)
        if sol is None:
            return None
        for chain in level:
            val = el.zero()
            for i, b in enumerate(unknowns[chain]):
                c = sol.get((chain, i), ring.zero)
                if not ring.is_zero(c):
                    el.add_term(val, b, c, ring)
            if val:
                tables[(n, chain)] = val
        partial.components = tables
    return partial


def _linear_part(tr, n, chain, unknowns, ring):
    """Coefficient stream of the unknown T^n entries in D(T)^n.

    Yields (basis, ((chain, index), coeff)) pairs: the value basis
    morphism and the variable with its coefficient.
    """
    tgt = tr.low.target
    src = tr.low.source
    g = tr.g
    for i, b in enumerate(unknowns.get(chain, ())):
        var = (chain, i)
        for b2, c2 in tgt.m_op(1, (b,)).items():
            yield b2, (var, c2)
    for k in range(0, n):
        inner = src.m_op(1, (chain[k],))
        if not inner:
            continue
        sg = ring.coerce(signs.prenat_inner_sign(
            g, el.sdeg_prefix(chain, k)))
        for ib, ic in inner.items():
            sub = chain[:k] + (ib,) + chain[k + 1:]
            for i, b in enumerate(unknowns.get(sub, ())):
                yield b, ((sub, i), ring.mul(ic, sg))


def homotopy_defect(f, g, tr, arity_cap, chains=None):
    """Largest arity defect of D(tr) = F - G, as a list of nonzero
    (arity, chain, defect) triples."""
    from .prenat import functor_difference_defect
    src = f.source
    bad = []
    for n in range(1, arity_cap + 1):
        level = chains[n] if chains is not None else \
            composable_chains(src, n)
        for chain in level:
            dz = functor_difference_defect(f, g, tr, n, chain)
            if not el.is_zero(dz):
                bad.append((n, chain, dz))
    return bad
