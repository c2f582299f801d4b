"""Seeded instance builders for tests, demos and the CLI.

All randomness goes through random.Random(seed); coefficients are small
integers coerced into the requested ring, so an instance over Q and its
reduction mod p have literally the same tables.

Flavours:

* path_dg: the path category of a graded multigraph on up to three
  vertices, differential given by a matching on parallel edges and the
  Leibniz rule.  Honest units (empty paths), both parities of degrees.
* endo_dg: endomorphisms of small based complexes, composition of
  elementary maps, no units in the basis.
* pushforward_ainf: a path category pushed along a change of
  coordinates with random arity two part, producing nonzero higher
  operations while staying strictly unital.
* contraction_pair: a classical category together with an exact
  contraction onto chosen cohomology representatives, for exercising
  the transfer machinery directly.
* free_truncated: random operation tables with correct degrees and no
  relations, for serialization round trips only.
* FormalCat: operations return fresh formal symbols, for term by term
  comparisons of low arity identities.
"""

import random

from . import elements as el
from .elements import Bm
from . import linalg
from .category import DgCat, AinfCat
from .functor import pushforward
from .rings import Rationals


def _rand_coeff(rng, ring):
    return ring.coerce(rng.choice([1, -1, 2, -2, 3]))


def ring_category(ring=None):
    """One object, unit only: the monoidal unit."""
    ring = ring or Rationals()
    e = Bm("*", "*", ("e", "*"), 0)
    return DgCat(ring, ["*"], {("*", "*"): (e,)}, {}, {}, units={"*": e})


def path_dg(seed=0, ring=None, n_obj=2, max_para=2, deg_span=(-1, 2)):
    """Path category of a graded multigraph with a matching
    differential on parallel edges."""
    ring = ring or Rationals()
    rng = random.Random(seed)
    objs = ["x%d" % i for i in range(n_obj)]
    edges = {}
    for i in range(n_obj - 1):
        for j in range(i + 1, n_obj):
            if j - i > 1 and rng.random() < 0.5:
                continue
            k = rng.randint(1, max_para)
            edges[(i, j)] = []
            for t in range(k):
                deg = rng.randint(*deg_span)
                edges[(i, j)].append(
                    Bm(objs[i], objs[j], ("g", i, j, t), deg))
    dpairs = {}
    for key, es in edges.items():
        used = set()
        for a in es:
            if a.name in used:
                continue
            for b in es:
                if b is a or b.name in used or b.deg != a.deg + 1:
                    continue
                if rng.random() < 0.7:
                    dpairs[a] = (b, _rand_coeff(rng, ring))
                    used.add(a.name)
                    used.add(b.name)
                    break
    paths = {}
    units = {}
    for i, x in enumerate(objs):
        e = Bm(x, x, ("e", x), 0)
        units[x] = e
        paths.setdefault((x, x), []).append(e)

    def extend(path):
        last = path[-1]
        for (a, _), es in edges.items():
            if objs[a] != last.tgt:
                continue
            for nxt in es:
                new = path + (nxt,)
                key = (path[0].src, nxt.tgt)
                pb = Bm(path[0].src, nxt.tgt,
                        ("p",) + tuple(p.name for p in new),
                        sum(p.deg for p in new))
                store.append((new, pb))
                paths.setdefault(key, []).append(pb)
                extend(new)

    store = []
    edge_bm = {}
    for es in edges.values():
        for a in es:
            pb = Bm(a.src, a.tgt, ("p", a.name), a.deg)
            edge_bm[a] = pb
            paths.setdefault((a.src, a.tgt), []).append(pb)
            store.append(((a,), pb))
            extend((a,))

    by_path = {tuple(p.name for p in pth): pb for pth, pb in store}

    def path_bm(pth):
        return by_path[tuple(p.name for p in pth)]

    comp = {}
    for pth1, pb1 in store:
        for pth2, pb2 in store:
            if pb1.tgt != pb2.src:
                continue
            comp[(pb2, pb1)] = el.single(path_bm(pth1 + pth2), ring)

    diff = {}
    for pth, pb in store:
        out = el.zero()
        for i, a in enumerate(pth):
            if a not in dpairs:
                continue
            b2, c = dpairs[a]
            sg = 1 if sum(p.deg for p in pth[i + 1:]) % 2 == 0 else -1
            new = pth[:i] + (b2,) + pth[i + 1:]
            el.add_term(out, path_bm(new), ring.mul(c, ring.coerce(sg)),
                        ring)
        if out:
            diff[pb] = out
    hom = {k: tuple(v) for k, v in paths.items()}
    cat = DgCat(ring, objs, hom, comp, diff, units=units)
    return cat


def loop_dg(seed=0, ring=None, with_edge=None, powers=None):
    """Truncated loop algebra, optionally with one outgoing edge: hom
    spaces e, a, .., a^p at the loop object and f, fa, .., fa^p along
    the edge, with a^{p+1} = 0.  Loops give honest length three
    compositions, which the acyclic path categories cannot."""
    ring = ring or Rationals()
    rng = random.Random(seed)
    if powers is None:
        powers = rng.choice((2, 3))
    if with_edge is None:
        # the short loop alone has no room for higher products; its
        # pushforwards only become honestly curved along an edge
        with_edge = True if powers == 2 else rng.random() < 0.6
    objs = ["w"]
    e = Bm("w", "w", ("e", "w"), 0)
    a = [e] + [Bm("w", "w", ("a", k), k) for k in range(1, powers + 1)]
    hom = {("w", "w"): tuple(a)}
    units = {"w": e}
    comp = {}
    for i in range(powers + 1):
        for j in range(powers + 1):
            if i and j:
                comp[(a[j], a[i])] = (el.single(a[i + j], ring)
                                      if i + j <= powers else el.zero())
    diff = {}
    ca = _rand_coeff(rng, ring)
    if rng.random() < 0.8:
        diff[a[1]] = el.single(a[2], ring, ca)
    else:
        ca = ring.zero
    if with_edge:
        objs.append("y")
        ey = Bm("y", "y", ("e", "y"), 0)
        units["y"] = ey
        gdeg = rng.randint(-2, 0)
        f = [Bm("w", "y", ("f", k), gdeg + k) for k in range(powers + 1)]
        hom[("y", "y")] = (ey,)
        hom[("w", "y")] = tuple(f)
        for i in range(powers + 1):
            for j in range(1, powers + 1):
                comp[(f[i], a[j])] = (el.single(f[i + j], ring)
                                      if i + j <= powers else el.zero())
        # d(f0) = cf f1 forces d(f1) = (cf + (-1)^g ca) f2 and
        # d(f2) = cf f3 by the Leibniz rule; d^2 = 0 then needs
        # cf (cf + (-1)^g ca) = 0, so cf is zero or kills the bracket
        if ring.is_zero(ca):
            cf = ring.zero
        elif rng.random() < 0.5:
            cf = ring.neg(ca) if gdeg % 2 == 0 else ca
        else:
            cf = ring.zero
        sg = ring.coerce(1 if gdeg % 2 == 0 else -1)
        cmid = ring.add(cf, ring.mul(sg, ca))
        for i, c in ((0, cf), (1, cmid), (2, cf)):
            if i + 1 <= powers and not ring.is_zero(c):
                diff[f[i]] = el.single(f[i + 1], ring, c)
    cat = DgCat(ring, objs, hom, comp, diff, units=units)
    return cat


def endo_dg(seed=0, ring=None, n_complex=2, rank=3, deg_span=(-1, 2)):
    """Endomorphism category of small complexes, elementary basis."""
    ring = ring or Rationals()
    rng = random.Random(seed)
    objs = []
    vecs = {}
    dmat = {}
    for ci in range(n_complex):
        name = "V%d" % ci
        objs.append(name)
        r = rng.randint(2, rank)
        degs = [rng.randint(*deg_span) for _ in range(r)]
        vecs[name] = degs
        dm = {}
        used = set()
        order = list(range(r))
        rng.shuffle(order)
        for a in order:
            if a in used:
                continue
            for b in range(r):
                if b in used or b == a or degs[b] != degs[a] + 1:
                    continue
                if rng.random() < 0.7:
                    dm[a] = (b, _rand_coeff(rng, ring))
                    used.add(a)
                    used.add(b)
                    break
        dmat[name] = dm
    hom = {}
    basis_at = {}
    for v in objs:
        for w in objs:
            bs = []
            for bidx, bdeg in enumerate(vecs[v]):
                for aidx, adeg in enumerate(vecs[w]):
                    bs.append(Bm(v, w, ("mat", aidx, bidx), adeg - bdeg))
            hom[(v, w)] = tuple(bs)
            basis_at[(v, w)] = {(b.name[1], b.name[2]): b for b in bs}

    def mat_bm(v, w, a, b):
        return basis_at[(v, w)][(a, b)]

    comp = {}
    for v in objs:
        for w in objs:
            for u in objs:
                for f in hom[(v, w)]:
                    for g in hom[(w, u)]:
                        if f.name[1] != g.name[2]:
                            continue
                        comp[(g, f)] = el.single(
                            mat_bm(v, u, g.name[1], f.name[2]), ring)
    diff = {}
    for v in objs:
        for w in objs:
            for f in hom[(v, w)]:
                a, b = f.name[1], f.name[2]
                out = el.zero()
                dm_w = dmat[w]
                if a in dm_w:
                    a2, c = dm_w[a]
                    el.add_term(out, mat_bm(v, w, a2, b), c, ring)
                dm_v = dmat[v]
                for b2, (bt, c) in dm_v.items():
                    if bt != b:
                        continue
                    sg = ring.coerce(-1 if f.deg % 2 == 0 else 1)
                    el.add_term(out, mat_bm(v, w, a, b2),
                                ring.mul(c, sg), ring)
                if out:
                    diff[f] = out
    return DgCat(ring, objs, hom, comp, diff)


def pushforward_ainf(seed=0, ring=None, base=None, density=1.0,
                     with_units=True):
    """Push a classical category along random coordinates; the result
    has honest higher operations and stays strictly unital."""
    ring = ring or Rationals()
    rng = random.Random(seed)
    cat = base or path_dg(seed=seed + 17, ring=ring, n_obj=4, max_para=3)
    units = set(cat.units.values())
    phi = {}
    from .category import composable_chains
    for chain in composable_chains(cat, 2):
        if any(b in units for b in chain):
            continue
        if rng.random() > density:
            continue
        want = el.out_deg(chain, 0)
        x, y = el.chain_src(chain), el.chain_tgt(chain)
        opts = [b for b in cat.hom_basis(x, y)
                if b.deg == want and b not in units]
        if not opts:
            continue
        val = el.zero()
        for b in rng.sample(opts, min(len(opts), 2)):
            el.add_term(val, b, _rand_coeff(rng, ring), ring)
        if val:
            phi[(2, chain)] = val
    new_cat, fn = pushforward(cat, phi,
                              units=dict(cat.units) if with_units else None)
    return new_cat, fn, cat


def contraction_pair(seed=0, ring=None, base=None):
    """A classical category with an exact contraction onto chosen
    representatives: returns (cat, objects, hom, include, project,
    homo) ready for hpt_transfer."""
    ring = ring or Rationals()
    cat = base or endo_dg(seed=seed, ring=ring)
    include_tab = {}
    project_tab = {}
    homo_tab = {}
    hom = {}
    for key in cat.hom:
        x, y = key
        vs = list(cat.hom[key])
        b_vecs = []
        c_vecs = []
        leads = []
        for v in vs:
            dv = cat.cd(v)
            cur_b = dict(dv)
            cur_c = el.single(v, ring)
            for i, lead in enumerate(leads):
                co = cur_b.get(lead)
                if co is None or ring.is_zero(co):
                    continue
                f = ring.neg(co)
                cur_b = linalg.vec_add(cur_b, b_vecs[i], ring, f)
                cur_c = linalg.vec_add(cur_c, c_vecs[i], ring, f)
            if cur_b:
                lead = next(iter(sorted(cur_b, key=repr)))
                inv = ring.inv(cur_b[lead])
                cur_b = linalg.vec_scale(cur_b, inv, ring)
                cur_c = linalg.vec_scale(cur_c, inv, ring)
                for i in range(len(b_vecs)):
                    co = b_vecs[i].get(lead)
                    if co is None or ring.is_zero(co):
                        continue
                    f = ring.neg(co)
                    b_vecs[i] = linalg.vec_add(b_vecs[i], cur_b, ring, f)
                    c_vecs[i] = linalg.vec_add(c_vecs[i], cur_c, ring, f)
                b_vecs.append(cur_b)
                c_vecs.append(cur_c)
                leads.append(lead)
        h_vecs = []
        h_names = []
        for v in vs:
            dv = cat.cd(v)
            if dv:
                back = linalg.decompose(b_vecs, dv, ring)
                if back is None:
                    raise AssertionError("differential not exact layer")
                cand = el.single(v, ring)
                for i, co in enumerate(back):
                    cand = linalg.vec_add(cand, c_vecs[i], ring,
                                          ring.neg(co))
            else:
                cand = el.single(v, ring)
            red = dict(cand)
            sofar = b_vecs + h_vecs
            back = linalg.decompose(sofar, red, ring) if sofar else None
            if back is not None:
                continue
            h_vecs.append(cand)
            h_names.append(Bm(x, y, ("h", x, y, len(h_names)), v.deg))
        if h_names:
            hom[key] = tuple(h_names)
        basis_all = b_vecs + c_vecs + h_vecs
        for v in vs:
            co = linalg.decompose(basis_all, el.single(v, ring), ring)
            assert co is not None, "basis decomposition failed"
            nb = len(b_vecs)
            t_val = el.zero()
            for i in range(nb):
                if not ring.is_zero(co[i]):
                    for k, cc in c_vecs[i].items():
                        el.add_term(t_val, k,
                                    ring.neg(ring.mul(co[i], cc)), ring)
            homo_tab[v] = t_val
            p_val = el.zero()
            for i in range(len(h_vecs)):
                c = co[nb + len(c_vecs) + i]
                if not ring.is_zero(c):
                    el.add_term(p_val, h_names[i], c, ring)
            project_tab[v] = p_val
        for name, vec in zip(h_names, h_vecs):
            include_tab[name] = vec
    objects = list(cat.objects)

    def include(b):
        return include_tab.get(b, {})

    def project(b):
        return project_tab.get(b, {})

    def homo(b):
        return homo_tab.get(b, {})

    return cat, objects, hom, include, project, homo


def free_truncated(seed=0, ring=None, arity_cap=3, n_obj=2, rank=2,
                   deg_span=(-1, 2), density=0.5):
    """Random degree correct tables with no relations imposed."""
    ring = ring or Rationals()
    rng = random.Random(seed)
    objs = ["y%d" % i for i in range(n_obj)]
    hom = {}
    for x in objs:
        for y in objs:
            bs = []
            for t in range(rng.randint(1, rank)):
                bs.append(Bm(x, y, ("f", x, y, t),
                             rng.randint(*deg_span)))
            hom[(x, y)] = tuple(bs)
    cat = AinfCat(ring, objs, hom, arity_cap=arity_cap)
    from .category import composable_chains
    tables = {}
    for d in range(1, arity_cap + 1):
        for chain in composable_chains(cat, d):
            if rng.random() > density:
                continue
            want = el.out_deg(chain, 1)
            x, y = el.chain_src(chain), el.chain_tgt(chain)
            opts = [b for b in hom[(x, y)] if b.deg == want]
            if not opts:
                continue
            val = el.zero()
            for b in rng.sample(opts, min(len(opts), 2)):
                el.add_term(val, b, _rand_coeff(rng, ring), ring)
            if val:
                tables[(d, chain)] = val
    cat.tables = tables
    return cat


class FormalCat(object):
    """Operations are fresh formal symbols of the correct degree.

    Objects form a chain z0 -> z1 -> ...; the letter at step i goes
    from z(i) to z(i+1) with a prescribed degree.  m_op on any
    composable chain returns the formal symbol ("m", arity, chain),
    so identities can be compared term by term.
    """

    is_dg = False

    def __init__(self, letter_degs, ring=None, tag="a", closed=True):
        self.ring = ring or Rationals()
        n = len(letter_degs)
        self.objects = ["z%s%d" % (tag, i) for i in range(n + 1)]
        self.letters = tuple(
            Bm(self.objects[i], self.objects[i + 1], (tag, i + 1), dg)
            for i, dg in enumerate(letter_degs))
        self.hom = {}
        for b in self.letters:
            self.hom.setdefault((b.src, b.tgt), []).append(b)
        self.closed = closed

    def hom_basis(self, x, y):
        return tuple(self.hom.get((x, y), ()))

    def unit(self, x):
        return None

    def m_op(self, d, chain):
        if not self.closed and any(b.name[0] == "m" for b in chain):
            return {}
        b = Bm(chain[0].src, chain[-1].tgt, ("m", d, tuple(chain)),
               el.out_deg(chain, 1))
        return el.single(b, self.ring)


def instance(seed, ring=None, flavor=None, with_units=True):
    """One seeded structure within the standard bounds: at most three
    objects, hom ranks at most four, degrees within [-2, 3].  Flavors
    dg and pushforward-ainfty pass the full defect suite; the
    free-truncated flavor has no relations imposed and is only for
    serialization and plumbing tests."""
    ring = ring or Rationals()
    rng = random.Random(seed)
    flavor = flavor or rng.choice(["dg", "pushforward-ainfty"])
    if flavor == "dg":
        # path degrees add along composites, so three objects force
        # single edges and a narrow span to stay inside the bounds
        if rng.random() < 0.5:
            cat = path_dg(seed=seed + 101, ring=ring, n_obj=2,
                          max_para=rng.choice((2, 3)),
                          deg_span=rng.choice(((-1, 2), (-2, 3), (0, 1))))
        else:
            cat = path_dg(seed=seed + 101, ring=ring, n_obj=3,
                          max_para=1,
                          deg_span=rng.choice(((-1, 1), (0, 1))))
        if not with_units:
            cat = DgCat(ring, cat.objects, cat.hom, cat.comp, cat.diff)
        return cat
    if flavor == "pushforward-ainfty":
        # acyclic path bases have no length three compositions, so
        # their pushforwards stay classical; loops are what give the
        # flavor its honest m3
        base = loop_dg(seed=seed + 301, ring=ring, powers=2)
        new_cat, _, _ = pushforward_ainf(seed=seed + 13, ring=ring,
                                         base=base,
                                         with_units=with_units)
        return new_cat
    if flavor == "free-truncated":
        return free_truncated(seed=seed + 7, ring=ring)
    raise ValueError("unknown flavor %r" % (flavor,))


def bounded_pair(seed, ring=None):
    """Two bounded instances for the product construction.  Word
    categories over a loop object are large, so the curved flavor is
    paired with a light classical partner; two curved factors at once
    put the full arity five sweep out of desk range."""
    rng = random.Random(seed ^ 0x5eed)
    roll = rng.random()
    if roll < 0.4:
        flavors = ("pushforward-ainfty", "dg")
    elif roll < 0.55:
        flavors = ("dg", "pushforward-ainfty")
    else:
        flavors = ("dg", "dg")
    out = []
    for pos, fl in enumerate(flavors):
        s = seed * 2 + 1 + pos
        if fl == "pushforward-ainfty":
            out.append(instance(s, ring=ring, flavor=fl))
        elif "pushforward-ainfty" in flavors:
            out.append(path_dg(seed=s + 101, ring=ring, n_obj=2,
                               max_para=1,
                               deg_span=rng.choice(((-1, 1), (0, 1)))))
        else:
            out.append(instance(s, ring=ring, flavor=fl))
    return out[0], out[1], flavors


def seeded_pair(seed, ring=None, flavor=None):
    """A pair of factor categories for the product construction."""
    ring = ring or Rationals()
    rng = random.Random(seed)
    flavor = flavor or rng.choice(["dg-dg", "push-dg", "push-push"])
    if flavor == "dg-dg":
        a = path_dg(seed=seed * 2 + 1, ring=ring)
        b = path_dg(seed=seed * 2 + 2, ring=ring, n_obj=2)
        return a, b, flavor
    if flavor == "push-dg":
        a, _, _ = pushforward_ainf(seed=seed * 2 + 1, ring=ring)
        b = path_dg(seed=seed * 2 + 2, ring=ring)
        return a, b, flavor
    a, _, _ = pushforward_ainf(seed=seed * 2 + 1, ring=ring)
    b, _, _ = pushforward_ainf(seed=seed * 2 + 2, ring=ring)
    return a, b, flavor
