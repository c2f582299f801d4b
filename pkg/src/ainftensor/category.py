"""Finite categories with exact structure tables.

Two flavours share one operation protocol m_op(d, chain):

* DgCat holds classical data, a composition table and a differential
  satisfying the classical Leibniz rule.  Its higher operations are the
  dictionary translation: m1 = d, m2 the twisted composition, m>=3 = 0.
* AinfCat holds operation tables per arity, or a compute hook for
  structures that are defined by a recursion (transferred products).

Chains are bottom up everywhere: chain[0] is the first input, so the
written form m(a_d, ..., a_1) corresponds to m_op(d, (a_1, ..., a_d)).
"""

from . import elements as el
from . import signs


class DgCat(object):
    """Classical differential graded category on a finite hom basis.

    comp maps pairs (b2, b1) with b1.tgt == b2.src to elements, absent
    pairs compose to zero.  diff maps basis morphisms to elements of
    degree one higher.  Units, when present, are honest basis elements
    that compose as identities and are closed.
    """

    is_dg = True

    def __init__(self, ring, objects, hom, comp, diff, units=None):
        self.ring = ring
        self.objects = list(objects)
        self.hom = {k: tuple(v) for k, v in hom.items()}
        self.comp = comp
        self.diff = diff
        self.units = units or {}

    def hom_basis(self, x, y):
        return self.hom.get((x, y), ())

    def all_basis(self):
        for key in sorted(self.hom, key=repr):
            for b in self.hom[key]:
                yield b

    def unit(self, x):
        return self.units.get(x)

    def cd(self, b):
        return self.diff.get(b, {})

    def cc(self, b2, b1):
        """Classical composite, b1 applied first."""
        assert b1.tgt == b2.src
        if self.units:
            if b1 == self.units.get(b1.src) and b1.src == b1.tgt:
                return el.single(b2, self.ring)
            if b2 == self.units.get(b2.tgt) and b2.src == b2.tgt:
                return el.single(b1, self.ring)
        return self.comp.get((b2, b1), {})

    def m_op(self, d, chain):
        if d == 1:
            return self.cd(chain[0])
        if d == 2:
            s = signs.dict_twist(chain[1].deg, chain[0].deg)
            return el.scale(self.cc(chain[1], chain[0]),
                            self.ring.coerce(s), self.ring)
        return {}

    def validate(self):
        """Degree checks, d squared, Leibniz and associativity on the
        whole basis.  Raises AssertionError on the first violation."""
        ring = self.ring
        for b in self.all_basis():
            db = self.cd(b)
            for c in db:
                assert c.deg == b.deg + 1 and c.src == b.src and c.tgt == b.tgt
            dd = el.zero()
            for c, co in db.items():
                for c2, co2 in self.cd(c).items():
                    el.add_term(dd, c2, ring.mul(co, co2), ring)
            assert el.is_zero(dd), "d^2 != 0 at %r" % (b,)
        for (b2, b1), val in self.comp.items():
            for c in val:
                assert c.deg == b1.deg + b2.deg
                assert c.src == b1.src and c.tgt == b2.tgt
        for x, e in self.units.items():
            assert e.deg == 0 and e.src == x and e.tgt == x
            assert el.is_zero(self.cd(e))
        for (x, y) in self.hom:
            for (y2, z) in self.hom:
                if y2 != y:
                    continue
                for b1 in self.hom[(x, y)]:
                    for b2 in self.hom[(y, z)]:
                        self._check_leibniz(b2, b1)
        return True

    def _check_leibniz(self, b2, b1):
        ring = self.ring
        lhs = el.zero()
        for c, co in self.cc(b2, b1).items():
            for c2, co2 in self.cd(c).items():
                el.add_term(lhs, c2, ring.mul(co, co2), ring)
        rhs = el.zero()
        for c, co in self.cd(b2).items():
            for c2, co2 in self.cc(c, b1).items():
                el.add_term(rhs, c2, ring.mul(co, co2), ring)
        sg = ring.coerce(signs.parity(b2.deg))
        for c, co in self.cd(b1).items():
            for c2, co2 in self.cc(b2, c).items():
                el.add_term(rhs, c2, ring.mul(ring.mul(co, co2), sg), ring)
        assert el.equal(lhs, rhs, ring), "Leibniz fails at %r, %r" % (b2, b1)


class AinfCat(object):
    """Category with operations given per arity up to a cap.

    tables maps (d, chain) to elements; chains not listed map to zero.
    A compute hook can replace the tables for structures built by a
    recursion, with results memoised.
    """

    is_dg = False

    def __init__(self, ring, objects, hom, tables=None, hook=None,
                 units=None, arity_cap=None):
        self.ring = ring
        self.objects = list(objects)
        self.hom = {k: tuple(v) for k, v in hom.items()}
        self.tables = dict(tables or {})
        self.hook = hook
        self.units = units or {}
        self.arity_cap = arity_cap
        self._memo = {}

    def hom_basis(self, x, y):
        return self.hom.get((x, y), ())

    def all_basis(self):
        for key in sorted(self.hom, key=repr):
            for b in self.hom[key]:
                yield b

    def unit(self, x):
        return self.units.get(x)

    def m_op(self, d, chain):
        assert len(chain) == d
        if self.arity_cap is not None and d > self.arity_cap:
            raise ValueError("arity %d above cap %d" % (d, self.arity_cap))
        key = (d, tuple(chain))
        if key in self.tables:
            return self.tables[key]
        if self.hook is not None:
            if key not in self._memo:
                self._memo[key] = self.hook(d, tuple(chain))
            return self._memo[key]
        return {}

    def validate_degrees(self):
        for (d, chain), val in self.tables.items():
            assert el.composable(chain)
            want = el.out_deg(chain, 1)
            for b in val:
                assert b.deg == want, "degree off in m%d at %r" % (d, chain)
                assert b.src == el.chain_src(chain)
                assert b.tgt == el.chain_tgt(chain)
        return True


def composable_chains(cat, d, objects=None):
    """All composable basis chains of length d, bottom up."""
    objs = list(objects) if objects is not None else cat.objects
    chains = [((), x) for x in objs]
    for _ in range(d):
        nxt = []
        for chain, x in chains:
            for y in objs:
                for b in cat.hom_basis(x, y):
                    nxt.append((chain + (b,), y))
        chains = nxt
    return [c for c, _ in chains]


def dg_as_ainf(cat):
    """Operation tables of a classical category, for serialization."""
    tables = {}
    for b in cat.all_basis():
        v = cat.m_op(1, (b,))
        if v:
            tables[(1, (b,))] = v
    for chain in composable_chains(cat, 2):
        v = cat.m_op(2, chain)
        if v:
            tables[(2, chain)] = v
    return tables
