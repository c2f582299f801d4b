"""Tensor products of functors and the coherence maps of the product.

The word category construction is functorial: a functor F induces a
map of word categories sending each group to the sum, over splittings
of the group into consecutive blocks, of the group of F block images,
with the per group gauge sign.  un_of_functor builds that map; it is a
strict functor of word categories and intertwines the inclusions,
word_map(F) . alpha = alpha . F, exactly.

On top of it sit the two tensors of functors:

* tensor_functors_quoted(F1, F2) is the composite
      Xi_tgt . (word_map(F1) (x) word_map(F2)) . eta_src,
  going through the classical tensor of the word categories.
* tensor_functors(F, G) conjugates the same middle by the quoted
  tensors of the word projections and inclusions, one level up: the
  outer legs are quoted tensors over the word categories themselves,
  with the extended projection standing in for its strict inverse.

The coherence maps of the product (swap, associator, unitors) have
arity one parts fixed by the classical picture; swap is the conjugated
word level swap, while the associator and the unitors are produced by
extend_arity1_functor, which solves the functor equation arity by
arity for the higher components by exact elimination.

The strand witnesses at the bottom of the file tensor a transformation
between classical functors with an identity strand: component n picks
up (-1)^n, the strand gauge sign, and the composite of the passive
letters.  Both homotopy stability statements (the differential witness
and the two sided quadruple) are built here and re-verified by the
suite.
"""

from . import elements as el
from . import signs
from . import barcobar as bc
from . import dgtensor as dt
from . import linalg
from .category import composable_chains
from .defects import _compositions
from .functor import Functor, compose_functors, identity_functor
from .prenat import Prenat
from .transfer import TensorCat, dc_extend_inverse


def _splittings(k):
    return _compositions(k)


def un_of_functor(fun, usrc, utgt):
    """The map of word categories induced by a functor.

    fun goes from usrc.base to utgt.base; the result is the strict
    functor usrc -> utgt acting per group by the bar coalgebra map of
    fun's components.
    """
    assert fun.source is usrc.base and fun.target is utgt.base
    ring = fun.target.ring

    def group_images(group):
        """Element like dict {out_group: coeff} for one group."""
        out = {}
        letter_sdegs = [b.deg - 1 for b in group]
        for parts in _splittings(len(group)):
            slots = fun.apply_blocks(parts, group)
            if slots is None:
                continue
            block_sdegs = []
            pos = 0
            for s in parts:
                block_sdegs.append(sum(letter_sdegs[pos:pos + s]))
                pos += s
            sg = ring.coerce(signs.unfun_group_sign(letter_sdegs,
                                                    block_sdegs))
            for sub, coeff in el.expand_slots(slots, ring):
                c = ring.mul(coeff, sg)
                prev = out.get(sub, ring.zero)
                nc = ring.add(prev, c)
                if ring.is_zero(nc):
                    out.pop(sub, None)
                else:
                    out[sub] = nc
        return out

    def on_word(b):
        acc = [((), ring.one)]
        for group in b.name:
            imgs = group_images(group)
            if not imgs:
                return {}
            nxt = []
            for groups, coeff in acc:
                for sub, c in imgs.items():
                    nxt.append((groups + (sub,), ring.mul(coeff, c)))
            acc = nxt
        out = el.zero()
        for groups, coeff in acc:
            el.add_term(out, utgt.check_cap(bc.word_bm(groups)), coeff,
                        ring)
        return out

    def hook(d, chain):
        if d == 1:
            return on_word(chain[0])
        return {}

    obj_map = {x: fun.obj(x) for x in usrc.objects}
    return Functor(usrc, utgt, obj_map, hook=hook,
                   name="word(%s)" % (fun.name,))


def dg_tensor_functors(fl, fr, src_pair, tgt_pair):
    """Classical tensor of two strict functors between classical
    categories: pairs map to pairs of images, no crossing sign."""
    ring = tgt_pair.ring

    def hook(d, chain):
        if d != 1:
            return {}
        blb, brb = chain[0].name
        return dt.pair_elt(fl.component(1, (blb,)),
                           fr.component(1, (brb,)), ring)

    obj_map = {}
    for xy in src_pair.objects:
        obj_map[xy] = (fl.obj(xy[0]), fr.obj(xy[1]))
    return Functor(src_pair, tgt_pair, obj_map, hook=hook,
                   name="(%s(x)%s)" % (fl.name, fr.name))


def tensor_functors_quoted(f1, f2, tsrc, ttgt):
    """Tensor of two functors through the word categories.

    f1 goes from tsrc.left to ttgt.left, f2 from tsrc.right to
    ttgt.right; the result runs eta of the source product, the pair of
    induced word maps, and the extended projection of the target
    product.  Its arity one part is the pair of arity one parts.
    """
    assert f1.source is tsrc.left and f1.target is ttgt.left
    assert f2.source is tsrc.right and f2.target is ttgt.right
    u1 = un_of_functor(f1, tsrc.ua, ttgt.ua)
    u2 = un_of_functor(f2, tsrc.ub, ttgt.ub)
    mid = dg_tensor_functors(u1, u2, tsrc.uu, ttgt.uu)
    xi, _ = ttgt.quasi_inverse()
    return compose_functors(xi, compose_functors(mid, tsrc.eta))


def chi_tilde(ucat):
    """The word projection extended to a functor, with its homotopy
    against the inclusion; the extension of the arity one projection
    through the contraction of the word category."""
    fun = bc.alpha_functor(ucat)
    return dc_extend_inverse(fun, ucat.chi1_bm, ucat.hcontract_bm)


def tensor_functors(f, g, tsrc, ttgt, word_arity_cap=2,
                    word_letter_cap=None):
    """Tensor of two functors, outer legs taken one word level up.

    The middle is the pair of induced word maps, viewed between the
    products of the word categories; it is conjugated by the quoted
    tensor of the inclusions on the source side and of the extended
    projections on the target side.  Agrees with tensor_functors_quoted
    up to homotopy; the caps bound the word level products.
    """
    assert f.source is tsrc.left and f.target is ttgt.left
    assert g.source is tsrc.right and g.target is ttgt.right
    wsrc = TensorCat(tsrc.ua, tsrc.ub, arity_cap=word_arity_cap,
                     letter_cap=word_letter_cap)
    wtgt = TensorCat(ttgt.ua, ttgt.ub, arity_cap=word_arity_cap,
                     letter_cap=word_letter_cap)
    qa = tensor_functors_quoted(bc.alpha_functor(tsrc.ua),
                                bc.alpha_functor(tsrc.ub), tsrc, wsrc)
    cta, _ = chi_tilde(ttgt.ua)
    ctb, _ = chi_tilde(ttgt.ub)
    qc = tensor_functors_quoted(cta, ctb, wtgt, ttgt)
    u1 = un_of_functor(f, tsrc.ua, ttgt.ua)
    u2 = un_of_functor(g, tsrc.ub, ttgt.ub)
    mid = dg_tensor_functors(u1, u2, wsrc, wtgt)
    return compose_functors(qc, compose_functors(mid, qa))


def extend_arity1_functor(source, target, obj_map, on_basis, arity_cap,
                          name=None):
    """Extend a degree preserving arity one map to a functor by solving
    the functor equation arity by arity.

    on_basis sends a source basis morphism to an element of the target;
    the unknown component at each arity enters the equation through the
    target differential and through insertions of the source
    differential, so each arity is one sparse linear solve.  Returns
    the functor, or None when some arity has no solution.
    """
    ring = target.ring
    tables = {}
    fun = Functor(source, target, dict(obj_map), name=name)

    def hook(d, chain):
        if d == 1:
            return on_basis(chain[0])
        return tables.get((d, tuple(chain)), {})

    fun.hook = hook

    for n in range(2, arity_cap + 1):
        level = composable_chains(source, n)
        unknowns = {}
        for chain in level:
            want = el.out_deg(chain, 0)
            x = fun.obj(el.chain_src(chain))
            y = fun.obj(el.chain_tgt(chain))
            unknowns[chain] = [b for b in target.hom_basis(x, y)
                               if b.deg == want]
        equations = []
        for chain in level:
            rhs_elt = _functor_slice_rest(fun, n, chain)
            row_per_basis = {}
            for b, var, c in _functor_linear_part(fun, n, chain,
                                                  unknowns, ring):
                row = row_per_basis.setdefault(b, {})
                row[var] = ring.add(row.get(var, ring.zero), c)
            space = set(row_per_basis)
            space.update(rhs_elt)
            for b in space:
                row = {v: c for v, c in row_per_basis.get(b, {}).items()
                       if not ring.is_zero(c)}
                rhs = ring.neg(rhs_elt.get(b, ring.zero))
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
                tables[(n, tuple(chain))] = val
        fun._memo.clear()
    return fun


def _functor_slice_rest(fun, n, chain):
    """Known part of the functor equation at a chain: splitting terms
    with at least two blocks minus insertions of operations of arity
    two and higher, with components above n treated as zero."""
    src, tgt = fun.source, fun.target
    ring = tgt.ring
    out = el.zero()
    for parts in _compositions(n):
        if len(parts) == 1:
            continue
        slots = fun.apply_blocks(parts, chain)
        if slots is None:
            continue
        for sub, coeff in el.expand_slots(slots, ring):
            for b, c in tgt.m_op(len(parts), sub).items():
                el.add_term(out, b, ring.mul(c, coeff), ring)
    for m in range(2, n + 1):
        for k in range(0, n - m + 1):
            inner = src.m_op(m, chain[k:k + m])
            if not inner:
                continue
            sg = ring.coerce(signs.stasheff_sign(el.sdeg_prefix(chain, k)))
            for b, c in inner.items():
                img = fun.component(n - m + 1,
                                    chain[:k] + (b,) + chain[k + m:])
                for b2, c2 in img.items():
                    el.add_term(out, b2,
                                ring.neg(ring.mul(ring.mul(c, c2), sg)),
                                ring)
    return out


def _functor_linear_part(fun, n, chain, unknowns, ring):
    """Coefficients of the unknown arity n component in the functor
    equation at a chain: the target differential of the unknown at the
    chain itself, minus differential insertions reaching other chains.
    """
    src, tgt = fun.source, fun.target
    for i, b in enumerate(unknowns.get(chain, ())):
        for b2, c2 in tgt.m_op(1, (b,)).items():
            yield b2, (chain, i), c2
    for k in range(0, n):
        inner = src.m_op(1, (chain[k],))
        if not inner:
            continue
        sg = ring.coerce(signs.stasheff_sign(el.sdeg_prefix(chain, k)))
        for ib, ic in inner.items():
            sub = chain[:k] + (ib,) + chain[k + 1:]
            for i, b in enumerate(unknowns.get(sub, ())):
                yield b, (sub, i), ring.neg(ring.mul(ic, sg))


def swap_functor(tab, tba):
    """The swap of the two factors, conjugated from the word level.

    tab is the product of (A, B), tba the product of (B, A); the middle
    exchanges the word pair with the Koszul crossing sign.
    """
    ring = tab.ring

    def hook(d, chain):
        if d != 1:
            return {}
        wa, wb = chain[0].name
        sg = ring.coerce(signs.pair_swap_sign(wa.deg, wb.deg))
        return el.single(dt.pair_bm(wb, wa), ring, sg)

    obj_map = {(x, y): (y, x) for (x, y) in tab.uu.objects}
    mid = Functor(tab.uu, tba.uu, obj_map, hook=hook, name="swap")
    xi, _ = tba.quasi_inverse()
    return compose_functors(xi, compose_functors(mid, tab.eta))


def associator_functor(t_nested_right, t_nested_left, arity_cap=2):
    """The rebracketing functor from A (x) (B (x) C) to (A (x) B) (x) C,
    extended from the identity relabelling of the pair basis."""
    ring = t_nested_left.ring

    def on_basis(b):
        a, mid = b.name
        bb, cc = mid.name
        return el.single(dt.pair_bm(dt.pair_bm(a, bb), cc), ring)

    obj_map = {}
    for (x, yz) in t_nested_right.objects:
        y, z = yz
        obj_map[(x, yz)] = ((x, y), z)
    return extend_arity1_functor(t_nested_right, t_nested_left, obj_map,
                                 on_basis, arity_cap, name="assoc")


def unit_strand_functor(tcat, side, arity_cap=2):
    """Unitor dropping a one object, unit only strand.

    side "right" treats tcat as A (x) R, side "left" as R (x) A.  The
    arity one part relabels a (x) 1 (or 1 (x) a) to a; higher
    components are solved for, and come out zero exactly when the
    relabelling is strict in the present conventions.
    """
    assert side in ("left", "right")
    pick = (lambda b: b.name[0]) if side == "right" else \
        (lambda b: b.name[1])
    base = tcat.left if side == "right" else tcat.right
    ring = tcat.ring

    def on_basis(b):
        return el.single(pick(b), ring)

    obj_map = {}
    for xy in tcat.objects:
        obj_map[xy] = xy[0] if side == "right" else xy[1]
    return extend_arity1_functor(tcat, base, obj_map, on_basis,
                                 arity_cap, name="unitor_%s" % side)


def _compose_strand(ccat, c_chain):
    """Classical composite of the passive strand, bottom up input."""
    ring = ccat.ring
    acc = el.single(c_chain[0], ring)
    for nxt in c_chain[1:]:
        new = el.zero()
        for c, co in acc.items():
            for c2, co2 in ccat.cc(nxt, c).items():
                el.add_term(new, c2, ring.mul(co, co2), ring)
        acc = new
    return acc


def strand_prenat(tr, ccat, low_t, high_t):
    """Tensor a transformation between classical functors with the
    identity of a passive classical strand.

    low_t and high_t are the tensored functors; component n multiplies
    the component of tr on the active strand by the composite of the
    passive letters and the strand gauge sign, and the object component
    pairs with the strand units.
    """
    ring = low_t.target.ring
    t0 = {}
    for xy in low_t.source.objects:
        v = tr.t0(xy[0])
        if not v:
            continue
        e = ccat.unit(xy[1])
        assert e is not None, "passive strand needs units"
        t0[xy] = dt.pair_elt(v, el.single(e, ring), ring)

    def hook(d, chain):
        a_chain = tuple(b.name[0] for b in chain)
        c_chain = tuple(b.name[1] for b in chain)
        v = tr.component(d, a_chain)
        if not v:
            return {}
        comp = _compose_strand(ccat, c_chain)
        if not comp:
            return {}
        sg = ring.coerce(signs.whisk_sign(
            tr.g, d, [b.deg - 1 for b in a_chain],
            [b.deg - 1 for b in c_chain]))
        return el.scale(dt.pair_elt(v, comp, ring), sg, ring)

    return Prenat(low_t, high_t, tr.g, t0, hook=hook,
                  name="(%s(x)id)" % (tr.name,))


def build_stupidone_witness(tr, ccat, src_pair=None, tgt_pair=None):
    """Tensor a differential witness with an identity strand.

    tr is a transformation between classical functors F, G with
    vanishing object component whose differential is F - G; returns
    (witness, F strand, G strand) on the pair categories.
    """
    f, g = tr.low, tr.high
    if src_pair is None:
        src_pair = dt.DgTensorCat(f.source, ccat)
    if tgt_pair is None:
        tgt_pair = dt.DgTensorCat(f.target, ccat)
    idc = identity_functor(ccat)
    ft = dg_tensor_functors(f, idc, src_pair, tgt_pair)
    gt = dg_tensor_functors(g, idc, src_pair, tgt_pair)
    return strand_prenat(tr, ccat, ft, gt), ft, gt


def build_stupidonzio_witness(s_tr, t_tr, h_tr, hp_tr, ccat,
                              src_pair=None, tgt_pair=None):
    """Tensor a two sided homotopy equivalence quadruple with an
    identity strand.

    s_tr and t_tr are closed degree zero transformations between
    classical functors F, G in both directions, h_tr and hp_tr the
    homotopies of the two composites against the identities.  Returns
    the four tensored witnesses together with the strand functors.
    """
    f, g = s_tr.low, s_tr.high
    assert t_tr.low is g and t_tr.high is f
    if src_pair is None:
        src_pair = dt.DgTensorCat(f.source, ccat)
    if tgt_pair is None:
        tgt_pair = dt.DgTensorCat(f.target, ccat)
    idc = identity_functor(ccat)
    ft = dg_tensor_functors(f, idc, src_pair, tgt_pair)
    gt = dg_tensor_functors(g, idc, src_pair, tgt_pair)
    st = strand_prenat(s_tr, ccat, ft, gt)
    tt = strand_prenat(t_tr, ccat, gt, ft)
    lowh = ft if h_tr.low is f else gt
    highh = ft if h_tr.high is f else gt
    ht = strand_prenat(h_tr, ccat, lowh, highh)
    lowp = ft if hp_tr.low is f else gt
    highp = ft if hp_tr.high is f else gt
    hpt = strand_prenat(hp_tr, ccat, lowp, highp)
    return st, tt, ht, hpt, ft, gt
