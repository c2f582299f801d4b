"""Basis morphisms and sparse elements of hom spaces.

A basis morphism is a named generator of a hom space together with its
source, target and integer degree.  An element is a finite linear
combination of basis morphisms, stored as a dict with zero coefficients
pruned.  All maps in the library are extended multilinearly over this
representation, so scalar coefficients never pick up signs on their own.

Composable chains are stored bottom up: chain[0] is the first morphism
to be applied (the rightmost entry in the usual right-to-left notation)
and chain[-1] the last.  Serialization reverses to the written order.
"""

from collections import namedtuple

Bm = namedtuple("Bm", ["src", "tgt", "name", "deg"])


def bm(src, tgt, name, deg):
    return Bm(src, tgt, name, deg)


def zero():
    return {}


def is_zero(elt):
    return not elt


def add_term(elt, b, coeff, ring):
    """Accumulate coeff * b into elt in place."""
    c = ring.add(elt.get(b, ring.zero), coeff)
    if ring.is_zero(c):
        elt.pop(b, None)
    else:
        elt[b] = c
    return elt


def add(e1, e2, ring):
    out = dict(e1)
    for b, c in e2.items():
        add_term(out, b, c, ring)
    return out


def sub(e1, e2, ring):
    out = dict(e1)
    for b, c in e2.items():
        add_term(out, b, ring.neg(c), ring)
    return out


def scale(elt, coeff, ring):
    if ring.is_zero(coeff):
        return {}
    return {b: ring.mul(c, coeff) for b, c in elt.items()}


def neg(elt, ring):
    return {b: ring.neg(c) for b, c in elt.items()}


def single(b, ring, coeff=None):
    c = ring.one if coeff is None else coeff
    if ring.is_zero(c):
        return {}
    return {b: c}


def equal(e1, e2, ring):
    return is_zero(sub(e1, e2, ring))


def convert(elt, src_ring, dst_ring):
    out = {}
    for b, c in elt.items():
        add_term(out, b, dst_ring.coerce(c), dst_ring)
    return out


def composable(chain):
    """True when consecutive entries can be composed, chain[0] first."""
    for i in range(len(chain) - 1):
        if chain[i].tgt != chain[i + 1].src:
            return False
    return True


def chain_src(chain):
    return chain[0].src


def chain_tgt(chain):
    return chain[-1].tgt


def sdeg(b):
    """Reduced degree, deg - 1.  Sign bookkeeping runs on these."""
    return b.deg - 1


def sdeg_prefix(chain, k):
    """Sum of reduced degrees of the first k entries of the chain."""
    return sum(b.deg - 1 for b in chain[:k])


def chain_deg(chain):
    return sum(b.deg for b in chain)


def out_deg(chain, map_sdeg):
    """Degree of the value of an arity len(chain) map of shifted
    intrinsic degree map_sdeg on the chain.  For the operations m this
    is sum(deg) + 2 - n, for functor components sum(deg) + 1 - n."""
    n = len(chain)
    return sum(b.deg for b in chain) - n + map_sdeg + 1


def expand_slots(slots, ring):
    """Iterate over basis chains in a product of elements.

    slots is a list whose entries are elements (dicts); yields pairs
    (chain_tuple, coefficient) over the support of the product, without
    any sign: coefficients are plain scalars.
    """
    combos = [((), ring.one)]
    for e in slots:
        nxt = []
        for chain, c in combos:
            for b, cb in e.items():
                nxt.append((chain + (b,), ring.mul(c, cb)))
        combos = nxt
    return combos
