"""Tensor of two classical categories, with the Koszul rule.

Objects are pairs, basis morphisms are pairs wrapped as Bm with name
(left, right) and added degree.  The differential treats the left
factor as written first:

    d(a (x) b) = da (x) b + (-1)^deg a  a (x) db

and composition crosses the right factor of the later morphism past
the left factor of the earlier one:

    (a2 (x) b2) . (a1 (x) b1) = (-1)^(deg b2 deg a1) (a2.a1) (x) (b2.b1)

Operators in a pair cross the same way when applied:

    (f (x) g)(a (x) b) = (-1)^(deg g deg a) f(a) (x) g(b)
"""

from . import elements as el
from . import signs
from .elements import Bm


def pair_bm(bl, br):
    return Bm((bl.src, br.src), (bl.tgt, br.tgt), (bl, br),
              bl.deg + br.deg)


def pair_elt(vl, vr, ring):
    """Tensor of two elements, no operator crossing involved."""
    out = el.zero()
    for bl, cl in vl.items():
        for br, cr in vr.items():
            el.add_term(out, pair_bm(bl, br), ring.mul(cl, cr), ring)
    return out


def apply_pair(fl, fr, fr_deg, b, ring):
    """Apply the operator pair (fl (x) fr) to a pair basis morphism,
    fr_deg the degree of the right operator."""
    bl, br = b.name
    sg = ring.coerce(signs.tensor_apply_sign(fr_deg, bl.deg))
    out = el.zero()
    vl = fl(bl)
    if not vl:
        return out
    vr = fr(br)
    if not vr:
        return out
    for cl, col in vl.items():
        for cr, cor in vr.items():
            el.add_term(out, pair_bm(cl, cr),
                        ring.mul(ring.mul(col, cor), sg), ring)
    return out


class DgTensorCat(object):
    """Classical tensor of two classical categories."""

    is_dg = True

    def __init__(self, left, right):
        assert left.ring == right.ring
        self.left = left
        self.right = right
        self.ring = left.ring
        self.objects = [(x, y) for x in left.objects for y in right.objects]

    def unit(self, xy):
        eL = self.left.unit(xy[0]) if hasattr(self.left, "unit") else None
        eR = self.right.unit(xy[1]) if hasattr(self.right, "unit") else None
        if eL is None or eR is None:
            return None
        return pair_bm(eL, eR)

    def hom_basis(self, xy, zw):
        basis = []
        for bl in self.left.hom_basis(xy[0], zw[0]):
            for br in self.right.hom_basis(xy[1], zw[1]):
                basis.append(pair_bm(bl, br))
        return tuple(basis)

    def cd(self, b):
        bl, br = b.name
        ring = self.ring
        out = el.zero()
        for c, co in self.left.cd(bl).items():
            el.add_term(out, pair_bm(c, br), co, ring)
        sg = ring.coerce(signs.tensor_diff_sign(bl.deg))
        for c, co in self.right.cd(br).items():
            el.add_term(out, pair_bm(bl, c), ring.mul(co, sg), ring)
        return out

    def cc(self, b2, b1):
        """Composite, b1 first."""
        a2, c2 = b2.name
        a1, c1 = b1.name
        ring = self.ring
        sg = ring.coerce(signs.tensor_compose_sign(c2.deg, a1.deg))
        out = el.zero()
        for x, cx in self.left.cc(a2, a1).items():
            for y, cy in self.right.cc(c2, c1).items():
                el.add_term(out, pair_bm(x, y),
                            ring.mul(ring.mul(cx, cy), sg), ring)
        return out

    def m_op(self, d, chain):
        if d == 1:
            return self.cd(chain[0])
        if d == 2:
            s = signs.dict_twist(chain[1].deg, chain[0].deg)
            return el.scale(self.cc(chain[1], chain[0]),
                            self.ring.coerce(s), self.ring)
        return {}
