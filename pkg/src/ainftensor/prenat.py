"""Prenatural transformations, their differential and composition.

A transformation T of degree g from a functor F to a functor G (both
from A to B) has a component T0 giving an element of B(F0 x, G0 x) of
degree g for every object, and components T^n on chains with values of
degree sum(deg) + g - n.

The differential has two families of terms.  The block family applies
a target operation to a tuple of G blocks above the T block above F
blocks, with sign (-1)^((g-1) * pre) where pre counts reduced degrees
below the T block; the T block may be empty.  The insertion family
inserts a source operation into T with sign -(-1)^(g-1) (-1)^pre.
Composition of S after T puts the S block above the T block and
carries sign (-1)^((s-1) pre_S + (t-1) pre_T + (s-1)(t-1)).

These signs are forced by the shift dictionary; the suite checks that
the differential squares to zero and that it reproduces the classical
homotopy equation at arity one.
"""

from . import elements as el
from . import signs
from .defects import _compositions


class Prenat(object):

    def __init__(self, low, high, g, t0, components=None, hook=None,
                 name=None):
        assert low.source is high.source and low.target is high.target
        self.low = low
        self.high = high
        self.g = g
        self._t0 = dict(t0)
        self.components = dict(components or {})
        self.hook = hook
        self.name = name
        self._memo = {}

    def t0(self, x):
        return self._t0.get(x, {})

    def component(self, d, chain):
        assert len(chain) == d and d >= 1
        key = (d, tuple(chain))
        if key in self.components:
            return self.components[key]
        if self.hook is not None:
            if key not in self._memo:
                self._memo[key] = self.hook(d, tuple(chain))
            return self._memo[key]
        return {}


def zero_prenat(low, high, g, name=None):
    return Prenat(low, high, g, {}, name=name)


def unit_prenat(fun):
    """Identity transformation of a functor into a unital target."""
    tgt = fun.target
    t0 = {}
    for x in fun.source.objects:
        e = tgt.unit(fun.obj(x))
        assert e is not None, "unit transformation needs units"
        t0[x] = el.single(e, tgt.ring)
    return Prenat(fun, fun, 0, t0, name="id_%s" % (fun.name,))


def _object_at(chain, pos, source):
    """Object sitting between inputs pos-1 and pos of the chain."""
    if pos == 0:
        return chain[0].src
    return chain[pos - 1].tgt


def _block_slots(tr, chain, below, size, parts_low, parts_high):
    """Slots for one block family term, bottom up, or None."""
    slots = []
    pos = 0
    for s in parts_low:
        v = tr.low.component(s, chain[pos:pos + s])
        if not v:
            return None
        slots.append(v)
        pos += s
    assert pos == below
    if size == 0:
        v = tr.t0(_object_at(chain, pos, tr.low.source))
    else:
        v = tr.component(size, chain[pos:pos + size])
    if not v:
        return None
    slots.append(v)
    pos += size
    for s in parts_high:
        v = tr.high.component(s, chain[pos:pos + s])
        if not v:
            return None
        slots.append(v)
        pos += s
    return slots


def m1_value(tr, d, chain):
    """Differential of the transformation, component at a chain.

    For d = 0 pass chain = (x,) with x an object."""
    B = tr.low.target
    ring = B.ring
    g = tr.g
    out = el.zero()
    if d == 0:
        x = chain[0]
        v = tr.t0(x)
        for b, c in v.items():
            for b2, c2 in B.m_op(1, (b,)).items():
                el.add_term(out, b2, ring.mul(c, c2), ring)
        return out
    for below in range(0, d + 1):
        for size in range(0, d - below + 1):
            above = d - below - size
            sg = ring.coerce(signs.prenat_block_sign(
                g, el.sdeg_prefix(chain, below)))
            for parts_low in _compositions(below):
                for parts_high in _compositions(above):
                    slots = _block_slots(tr, chain, below, size,
                                         parts_low, parts_high)
                    if slots is None:
                        continue
                    r = len(parts_low) + 1 + len(parts_high)
                    for sub, coeff in el.expand_slots(slots, ring):
                        for b, c in B.m_op(r, sub).items():
                            el.add_term(out, b,
                                        ring.mul(ring.mul(c, coeff), sg),
                                        ring)
    A = tr.low.source
    for m in range(1, d + 1):
        for k in range(0, d - m + 1):
            inner = A.m_op(m, chain[k:k + m])
            if not inner:
                continue
            sg = ring.coerce(signs.prenat_inner_sign(
                g, el.sdeg_prefix(chain, k)))
            for b, c in inner.items():
                v = tr.component(d - m + 1, chain[:k] + (b,) + chain[k + m:])
                for b2, c2 in v.items():
                    el.add_term(out, b2, ring.mul(ring.mul(c, c2), sg), ring)
    return out


def m1(tr):
    """Differential as a new transformation of degree g + 1."""
    t0 = {}
    for x in tr.low.source.objects:
        v = m1_value(tr, 0, (x,))
        if v:
            t0[x] = v
    return Prenat(tr.low, tr.high, tr.g + 1, t0,
                  hook=lambda d, chain: m1_value(tr, d, chain),
                  name="D(%s)" % (tr.name,))


def m2_value(s_tr, t_tr, d, chain):
    """Composition of s_tr after t_tr, component at a chain."""
    B = t_tr.low.target
    ring = B.ring
    sdg, tdg = s_tr.g, t_tr.g
    out = el.zero()
    if d == 0:
        x = chain[0]
        vt = t_tr.t0(x)
        vs = s_tr.t0(x)
        if not vt or not vs:
            return out
        sg = ring.coerce(signs.prenat2_sign(sdg, tdg, 0, 0))
        for sub, coeff in el.expand_slots([vt, vs], ring):
            for b, c in B.m_op(2, sub).items():
                el.add_term(out, b, ring.mul(ring.mul(c, coeff), sg), ring)
        return out
    for b_t in range(0, d + 1):
        for sz_t in range(0, d - b_t + 1):
            for mid in range(0, d - b_t - sz_t + 1):
                for sz_s in range(0, d - b_t - sz_t - mid + 1):
                    top = d - b_t - sz_t - mid - sz_s
                    pre_t = el.sdeg_prefix(chain, b_t)
                    pre_s = el.sdeg_prefix(chain, b_t + sz_t + mid)
                    sg = ring.coerce(signs.prenat2_sign(
                        sdg, tdg, pre_s, pre_t))
                    for p_low in _compositions(b_t):
                        for p_mid in _compositions(mid):
                            for p_top in _compositions(top):
                                slots = _two_block_slots(
                                    s_tr, t_tr, chain, b_t, sz_t, mid,
                                    sz_s, p_low, p_mid, p_top)
                                if slots is None:
                                    continue
                                r = len(slots)
                                for sub, coeff in el.expand_slots(slots,
                                                                 ring):
                                    for b, c in B.m_op(r, sub).items():
                                        el.add_term(
                                            out, b,
                                            ring.mul(ring.mul(c, coeff), sg),
                                            ring)
    return out


def _two_block_slots(s_tr, t_tr, chain, b_t, sz_t, mid, sz_s,
                     p_low, p_mid, p_top):
    slots = []
    pos = 0
    for s in p_low:
        v = t_tr.low.component(s, chain[pos:pos + s])
        if not v:
            return None
        slots.append(v)
        pos += s
    if sz_t == 0:
        v = t_tr.t0(_object_at(chain, pos, t_tr.low.source))
    else:
        v = t_tr.component(sz_t, chain[pos:pos + sz_t])
    if not v:
        return None
    slots.append(v)
    pos += sz_t
    for s in p_mid:
        v = t_tr.high.component(s, chain[pos:pos + s])
        if not v:
            return None
        slots.append(v)
        pos += s
    if sz_s == 0:
        v = s_tr.t0(_object_at(chain, pos, s_tr.low.source))
    else:
        v = s_tr.component(sz_s, chain[pos:pos + sz_s])
    if not v:
        return None
    slots.append(v)
    pos += sz_s
    for s in p_top:
        v = s_tr.high.component(s, chain[pos:pos + s])
        if not v:
            return None
        slots.append(v)
        pos += s
    return slots


def m2(s_tr, t_tr):
    """Composite transformation, S after T."""
    assert t_tr.high is s_tr.low or t_tr.high.obj_map == s_tr.low.obj_map
    t0 = {}
    for x in t_tr.low.source.objects:
        v = m2_value(s_tr, t_tr, 0, (x,))
        if v:
            t0[x] = v
    return Prenat(t_tr.low, s_tr.high, s_tr.g + t_tr.g, t0,
                  hook=lambda d, chain: m2_value(s_tr, t_tr, d, chain),
                  name="(%s*%s)" % (s_tr.name, t_tr.name))


def functor_difference_defect(f, g, tr, d, chain):
    """Defect of D(tr) = F - G at a chain; tr must have degree 0 with
    vanishing T0, and F, G must agree on objects."""
    ring = f.target.ring
    dv = m1_value(tr, d, chain)
    want = el.sub(f.component(d, chain), g.component(d, chain), ring)
    return el.sub(dv, want, ring)
