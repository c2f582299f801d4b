"""Defect computations: exact left hand side minus right hand side.

Every identity the library claims is checked by computing a defect
element and asserting that it vanishes.  Nothing here is approximate;
a defect is an element over the ring and must come out as the empty
dict.
"""

from . import elements as el
from . import signs


def _compositions(d, min_part=1):
    """Ordered tuples of positive parts summing to d, bottom up."""
    if d == 0:
        return [()]
    out = []
    for first in range(min_part, d + 1):
        for rest in _compositions(d - first, min_part):
            out.append((first,) + rest)
    return out


def relation_defect(cat, chain):
    """Structure relation at the given chain.

    sum over m, k of (-1)^(pre k) m(a_d ... |m(block)| ... a_1) with the
    inner block of length m starting above the first k inputs.
    """
    d = len(chain)
    ring = cat.ring
    out = el.zero()
    for m in range(1, d + 1):
        for k in range(0, d - m + 1):
            inner = cat.m_op(m, chain[k:k + m])
            if not inner:
                continue
            sg = ring.coerce(signs.stasheff_sign(el.sdeg_prefix(chain, k)))
            for b, c in inner.items():
                outer = cat.m_op(d - m + 1, chain[:k] + (b,) + chain[k + m:])
                for b2, c2 in outer.items():
                    el.add_term(out, b2, ring.mul(ring.mul(c, c2), sg), ring)
    return out


def functor_defect(fun, chain):
    """Functor equation at the given chain.

    Left side: sum over splittings of the chain into consecutive blocks
    of the target operation applied to the block images, no signs.
    Right side: insertion of source operations with the relation sign.
    """
    src, tgt = fun.source, fun.target
    ring = tgt.ring
    d = len(chain)
    lhs = el.zero()
    for parts in _compositions(d):
        r = len(parts)
        slots = []
        pos = 0
        ok = True
        for s in parts:
            v = fun.component(s, chain[pos:pos + s])
            pos += s
            if not v:
                ok = False
                break
            slots.append(v)
        if not ok:
            continue
        for sub, coeff in el.expand_slots(slots, ring):
            for b, c in tgt.m_op(r, sub).items():
                el.add_term(lhs, b, ring.mul(c, coeff), ring)
    rhs = el.zero()
    for m in range(1, d + 1):
        for k in range(0, d - m + 1):
            inner = src.m_op(m, chain[k:k + m])
            if not inner:
                continue
            sg = ring.coerce(signs.stasheff_sign(el.sdeg_prefix(chain, k)))
            for b, c in inner.items():
                img = fun.component(d - m + 1, chain[:k] + (b,) + chain[k + m:])
                for b2, c2 in img.items():
                    el.add_term(rhs, b2, ring.mul(ring.mul(c, c2), sg), ring)
    return el.sub(lhs, rhs, ring)


def contraction_defect(cat, include, project, homo, b):
    """Defect of d T + T d = include(project(.)) - id at basis b.

    cat must be classical; include and project are arity one maps given
    as functions on basis morphisms, homo a degree -1 function.
    """
    ring = cat.ring
    out = el.zero()
    for c, co in homo(b).items():
        for c2, co2 in cat.cd(c).items():
            el.add_term(out, c2, ring.mul(co, co2), ring)
    for c, co in cat.cd(b).items():
        for c2, co2 in homo(c).items():
            el.add_term(out, c2, ring.mul(co, co2), ring)
    for c, co in project(b).items():
        for c2, co2 in include(c).items():
            el.add_term(out, c2, ring.neg(ring.mul(co, co2)), ring)
    el.add_term(out, b, ring.one, ring)
    return out


def strict_unit_defect(cat, chain_cap=None):
    """Check the strict unit axioms on the whole basis.

    Returns a list of (description, defect) pairs for all failures.
    m2(f, e_src) = f, m2(e_tgt, f) = (-1)^deg f f, and units inserted
    anywhere in higher operations give zero.
    """
    ring = cat.ring
    bad = []
    for x in cat.objects:
        e = cat.unit(x)
        if e is None:
            return [("missing unit at %r" % (x,), None)]
    for b in cat.all_basis():
        e_src = cat.unit(b.src)
        e_tgt = cat.unit(b.tgt)
        got = cat.m_op(2, (e_src, b))
        want = el.single(b, ring)
        dz = el.sub(got, want, ring)
        if not el.is_zero(dz):
            bad.append(("m2(%r, unit)" % (b,), dz))
        got = cat.m_op(2, (b, e_tgt))
        want = el.single(b, ring, ring.coerce(signs.parity(b.deg)))
        dz = el.sub(got, want, ring)
        if not el.is_zero(dz):
            bad.append(("m2(unit, %r)" % (b,), dz))
    cap = chain_cap or 3
    from .category import composable_chains
    for d in range(2, cap):
        for chain in composable_chains(cat, d):
            for pos in range(d + 1):
                at = chain[pos - 1].tgt if pos else chain[0].src
                e = cat.unit(at)
                full = chain[:pos] + (e,) + chain[pos:]
                if not el.composable(full):
                    continue
                got = cat.m_op(d + 1, full)
                if not el.is_zero(got):
                    bad.append(("unit in m%d at %r" % (d + 1, full), got))
    return bad


def max_abs(defect):
    return 0 if el.is_zero(defect) else len(defect)
