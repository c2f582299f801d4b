"""Homotopy transfer along a contraction and the tensor construction.

hpt_transfer consumes a contraction of a target category B onto a
quiver Q: arity one maps include (degree 0, Q to B), project (degree 0,
B to Q) and homo (degree -1 on B) with

    d homo + homo d = include . project - id_B,

and produces the transferred operations on Q together with the functor
extending the inclusion:

    F^n = homo( sum_{r>=2} m_B^r(F blocks) ),
    m_Q^n = project( same inner sum ),          n >= 2,

both sign free, with F^1 = include and m_Q^1 = project . d . include.

dc_extend_inverse extends the projection of such a contraction with
classical B to a functor G with components project(nu^n) and a degree 0
transformation T with components homo(nu^n), where

    nu^n(f_n .. f_1) = (-1)^(sdeg f_1) m2(T^{n-1}(f_n .. f_2), f_1)
        + sum_j m2((F.G)^{n-j}(f_n .. f_{j+1}), T^j(f_j .. f_1))
        + sum_j (-1)^(pre j-1) T^{n-1}(f_n .., m2(f_{j+1}, f_j), .. f_1).

build_tensor assembles the product of two categories: words over each
factor, the classical tensor of the two word categories, and the
contraction (alpha, chi, H) on each side paired into a contraction of
the tensor, then transfers.
"""

from . import elements as el
from . import signs
from .category import AinfCat
from .defects import _compositions
from .functor import Functor, compose_functors
from .prenat import Prenat
from . import barcobar as bc
from . import dgtensor as dt


def _apply_map(fn, e, ring):
    out = el.zero()
    for b, c in e.items():
        for b2, c2 in fn(b).items():
            el.add_term(out, b2, ring.mul(c, c2), ring)
    return out


def hpt_transfer(target, objects, hom, obj_map, include, project, homo,
                 units=None, arity_cap=None):
    """Transfer the structure of target onto the quiver (objects, hom).

    include, project, homo act on basis morphisms and return elements;
    obj_map sends quiver objects to target objects.  Returns (Q, F, W)
    where W is the pair (G, T) of the extended projection and the
    homotopy with D(T) = F . G - id when the target is classical and
    the object map injective, None otherwise.
    """
    ring = target.ring
    inner_memo = {}
    target_dg = getattr(target, "is_dg", False)

    quiver = AinfCat(ring, objects, hom, units=units, arity_cap=arity_cap)

    fun = Functor(quiver, target, dict(obj_map), name="include")

    def inner(d, chain):
        key = (d, chain)
        if key not in inner_memo:
            out = el.zero()
            for parts in _compositions(d):
                r = len(parts)
                if r < 2 or (target_dg and r > 2):
                    continue
                slots = fun.apply_blocks(parts, chain)
                if slots is None:
                    continue
                for sub, coeff in el.expand_slots(slots, ring):
                    for b, c in target.m_op(r, sub).items():
                        el.add_term(out, b, ring.mul(c, coeff), ring)
            inner_memo[key] = out
        return inner_memo[key]

    def f_hook(d, chain):
        if d == 1:
            return include(chain[0])
        return _apply_map(homo, inner(d, chain), ring)

    def m_hook(d, chain):
        if d == 1:
            step = _apply_map(lambda b: target.m_op(1, (b,)),
                              include(chain[0]), ring)
            return _apply_map(project, step, ring)
        return _apply_map(project, inner(d, chain), ring)

    fun.hook = f_hook
    quiver.hook = m_hook
    wit = None
    if target_dg and len(set(obj_map.values())) == len(obj_map):
        wit = dc_extend_inverse(fun, project, homo)
    return quiver, fun, wit


def dc_extend_inverse(fun, project, homo):
    """Extend the projection of a contraction to a functor and produce
    the homotopy witnessing fun . G ~ id on the classical target.

    fun is a functor from A to a classical category B; project and homo
    are the arity one data of the contraction.  Returns (G, T) with G
    from B to A and T a degree 0 transformation from the identity of B
    to fun . G whose differential is the defect of the composite from
    the identity.
    """
    A, B = fun.source, fun.target
    assert getattr(B, "is_dg", False), "target must be classical"
    ring = B.ring
    obj_inv = {}
    for x in fun.obj_map:
        obj_inv[fun.obj(x)] = x
    assert len(obj_inv) == len(fun.obj_map), "object map must be injective"

    gfun = Functor(B, A, obj_inv, name="inverse")
    fg = compose_functors(fun, gfun)
    nu_memo = {}

    def tcomp(d, chain):
        if d == 1:
            return homo(chain[0])
        return _apply_map(homo, nu(d, chain), ring)

    def nu(d, chain):
        key = (d, chain)
        if key in nu_memo:
            return nu_memo[key]
        out = el.zero()
        v = tcomp(d - 1, chain[1:])
        sg = ring.coerce(signs.parity(chain[0].deg - 1))
        for tb, tc in v.items():
            for b, c in B.m_op(2, (chain[0], tb)).items():
                el.add_term(out, b, ring.mul(ring.mul(tc, c), sg), ring)
        for j in range(1, d):
            vt = tcomp(j, chain[:j])
            if not vt:
                continue
            vf = fg.component(d - j, chain[j:])
            for sub, coeff in el.expand_slots([vt, vf], ring):
                for b, c in B.m_op(2, sub).items():
                    el.add_term(out, b, ring.mul(c, coeff), ring)
        for j in range(1, d):
            pair = B.m_op(2, (chain[j - 1], chain[j]))
            if not pair:
                continue
            sg = ring.coerce(signs.parity(el.sdeg_prefix(chain, j - 1)))
            for pb, pc in pair.items():
                sub = chain[:j - 1] + (pb,) + chain[j + 1:]
                for b, c in tcomp(d - 1, sub).items():
                    el.add_term(out, b, ring.mul(ring.mul(pc, c), sg), ring)
        nu_memo[key] = out
        return out

    def g_hook(d, chain):
        if d == 1:
            return project(chain[0])
        return _apply_map(project, nu(d, chain), ring)

    gfun.hook = g_hook

    from .functor import identity_functor
    idb = identity_functor(B)
    witness = Prenat(idb, fg, 0, {}, hook=lambda d, chain: tcomp(d, chain),
                     name="retract")
    return gfun, witness


class TensorCat(AinfCat):
    """Product of two categories, operations built by transfer through
    the tensor of their word categories."""

    def __init__(self, left, right, arity_cap=5, letter_cap=None,
                 homo_flavor="left"):
        if letter_cap is None:
            letter_cap = max(arity_cap, 2) + 1
        assert homo_flavor in ("left", "right")
        self.left = left
        self.right = right
        self.homo_flavor = homo_flavor
        ring = left.ring
        assert ring == right.ring
        self.ua = bc.UnCat(left, letter_cap)
        self.ub = bc.UnCat(right, letter_cap)
        self.uu = dt.DgTensorCat(self.ua, self.ub)

        objects = [(x, y) for x in left.objects for y in right.objects]
        hom = {}
        lhom = getattr(left, "hom", None)
        rhom = getattr(right, "hom", None)
        if lhom is not None and rhom is not None:
            for (x, z1) in lhom:
                for (y, z2) in rhom:
                    basis = []
                    for a in lhom[(x, z1)]:
                        for b in rhom[(y, z2)]:
                            basis.append(dt.pair_bm(a, b))
                    hom[((x, y), (z1, z2))] = tuple(basis)
        units = {}
        for x in left.objects:
            for y in right.objects:
                ea, eb = left.unit(x), right.unit(y)
                if ea is not None and eb is not None:
                    units[(x, y)] = dt.pair_bm(ea, eb)

        ua, ub = self.ua, self.ub

        def include(q):
            a, b = q.name
            return dt.pair_elt(bc.alpha_component(ua, 1, (a,)),
                               bc.alpha_component(ub, 1, (b,)), ring)

        def project(u):
            wa, wb = u.name
            return dt.pair_elt(ua.chi1_bm(wa), ub.chi1_bm(wb), ring)

        def alpha_chi(ucat):
            def fn(w):
                return _apply_map(
                    lambda c: bc.alpha_component(ucat, 1, (c,)),
                    ucat.chi1_bm(w), ring)
            return fn

        def homo(u):
            first = dt.apply_pair(ua.hcontract_bm, alpha_chi(ub),
                                  0, u, ring)
            second = dt.apply_pair(
                lambda wa: el.single(wa, ring),
                ub.hcontract_bm, -1, u, ring)
            return el.add(first, second, ring)

        def homo_mirror(u):
            first = dt.apply_pair(
                ua.hcontract_bm,
                lambda wb: el.single(wb, ring), 0, u, ring)
            second = dt.apply_pair(alpha_chi(ua), ub.hcontract_bm,
                                   -1, u, ring)
            return el.add(first, second, ring)

        self.include1 = include
        self.project1 = project
        self.homo1 = homo if homo_flavor == "left" else homo_mirror

        obj_map = {xy: xy for xy in objects}
        qcat, eta, wit = hpt_transfer(self.uu, objects, hom, obj_map,
                                      include, project, self.homo1,
                                      units=units, arity_cap=arity_cap)
        AinfCat.__init__(self, ring, objects, hom, hook=qcat.hook,
                         units=units, arity_cap=arity_cap)
        eta.source = self
        self.eta = eta
        if wit is not None:
            wit[0].target = self
        self._quasi = wit

    def quasi_inverse(self):
        """The extension of the projection and its homotopy witness."""
        if self._quasi is None:
            self._quasi = dc_extend_inverse(self.eta, self.project1,
                                            self.homo1)
        return self._quasi


def build_tensor(left, right, arity_cap=5, letter_cap=None, homo_flavor="left"):
    return TensorCat(left, right, arity_cap, letter_cap, homo_flavor)
