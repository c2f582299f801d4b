"""Functors between categories with higher components.

A functor holds an object map, an arity one component on basis
morphisms, and higher components; all components may be given by
tables or computed by a hook and memoised.  The functor equation is
never assumed, it is checked by defects.functor_defect.

Composition inserts no signs: (G . F)^d is the sum over splittings of
the chain of G applied to the tuple of F block images.
"""

from . import elements as el
from .defects import _compositions


class Functor(object):

    def __init__(self, source, target, obj_map, components=None, hook=None,
                 name=None):
        self.source = source
        self.target = target
        self.obj_map = dict(obj_map)
        self.components = dict(components or {})
        self.hook = hook
        self.name = name
        self._memo = {}

    def obj(self, x):
        return self.obj_map[x]

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

    def apply_blocks(self, parts, chain):
        """Elements F^{s_i}(block_i) for a splitting, bottom up, or
        None when one of them vanishes."""
        slots = []
        pos = 0
        for s in parts:
            v = self.component(s, chain[pos:pos + s])
            pos += s
            if not v:
                return None
            slots.append(v)
        return slots


def identity_functor(cat):
    def hook(d, chain):
        if d == 1:
            return el.single(chain[0], cat.ring)
        return {}
    return Functor(cat, cat, {x: x for x in cat.objects}, hook=hook,
                   name="id")


def strict_functor(source, target, obj_map, on_basis, name=None):
    """Functor with only an arity one component, given on basis."""
    def hook(d, chain):
        if d == 1:
            return on_basis(chain[0])
        return {}
    return Functor(source, target, obj_map, hook=hook, name=name)


def compose_functors(g, f):
    """g after f, no signs on the splitting sum."""
    assert f.target is g.source or f.target == g.source
    ring = g.target.ring

    def hook(d, chain):
        out = el.zero()
        for parts in _compositions(d):
            slots = f.apply_blocks(parts, chain)
            if slots is None:
                continue
            for sub, coeff in el.expand_slots(slots, ring):
                for b, c in g.component(len(parts), sub).items():
                    el.add_term(out, b, ring.mul(c, coeff), ring)
        return out

    obj_map = {x: g.obj(f.obj(x)) for x in f.obj_map}
    return Functor(f.source, g.target, obj_map, hook=hook,
                   name="(%s.%s)" % (g.name, f.name))


def pushforward(cat, phi_tables, units=None):
    """Transport the structure of cat along an invertible change of
    coordinates with identity arity one part.

    phi_tables maps (d, chain) with d >= 2 to elements; the arity one
    component is the identity.  Returns (new_cat, phi) where phi is the
    functor from cat to the new category.  The new operations are
    produced by solving the functor equation arity by arity; validity
    of the result is checked by the caller through relation_defect.
    """
    from .category import AinfCat
    ring = cat.ring

    def phi_component(d, chain):
        if d == 1:
            return el.single(chain[0], ring)
        return phi_tables.get((d, tuple(chain)), {})

    new_cat = AinfCat(ring, cat.objects, cat.hom, hook=None, units=units)

    def phi_blocks(parts, chain):
        slots = []
        pos = 0
        for s in parts:
            v = phi_component(s, chain[pos:pos + s])
            pos += s
            if not v:
                return None
            slots.append(v)
        return slots

    def hook(d, chain):
        from . import signs
        out = el.zero()
        for m in range(1, d + 1):
            for k in range(0, d - m + 1):
                inner = cat.m_op(m, chain[k:k + m])
                if not inner:
                    continue
                sg = ring.coerce(signs.stasheff_sign(el.sdeg_prefix(chain, k)))
                for b, c in inner.items():
                    img = phi_component(d - m + 1,
                                        chain[:k] + (b,) + chain[k + m:])
                    for b2, c2 in img.items():
                        el.add_term(out, b2, ring.mul(ring.mul(c, c2), sg),
                                    ring)
        for parts in _compositions(d):
            if len(parts) == d:
                continue
            slots = phi_blocks(parts, chain)
            if slots is None:
                continue
            for sub, coeff in el.expand_slots(slots, ring):
                for b, c in new_cat.m_op(len(parts), sub).items():
                    el.add_term(out, b, ring.neg(ring.mul(c, coeff)), ring)
        return out

    new_cat.hook = hook
    phi = Functor(cat, new_cat, {x: x for x in cat.objects},
                  hook=lambda d, chain: phi_component(d, chain), name="phi")
    return new_cat, phi
