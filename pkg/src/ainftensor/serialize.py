"""JSON files for structures, functors and transformations.

One schema covers all three kinds: sparse tables keyed by chains of
basis labels, scalars as strings through the ring's fmt and parse.
Chains are listed in a file top down, the way a composite is written;
storage is bottom up, so dumping reverses each chain and loading
reverses it back.  Every file carries "order": "paper" to make the
convention explicit, a mandatory version field, and the ring name.

Morphism and object names may be nested tuples (pair categories, word
categories); they encode as tagged lists so that loading reproduces
the exact original names.  Basis morphisms appearing inside witness
values encode in full, since they live outside the file's own basis.
"""

import json

from . import elements as el
from . import signs
from .category import AinfCat, DgCat, composable_chains, dg_as_ainf
from .functor import Functor
from .prenat import Prenat
from .rings import ring_from_name

VERSION = 1


# ---------------------------------------------------------------- names

def encode_name(name):
    if isinstance(name, (str, int)):
        return name
    if isinstance(name, el.Bm):
        return ["bm", encode_name(name.src), encode_name(name.tgt),
                encode_name(name.name), name.deg]
    if isinstance(name, tuple):
        return ["t"] + [encode_name(x) for x in name]
    raise TypeError("cannot encode name %r" % (name,))


def decode_name(data):
    if isinstance(data, (str, int)):
        return data
    assert isinstance(data, list) and data, "bad name %r" % (data,)
    if data[0] == "t":
        return tuple(decode_name(x) for x in data[1:])
    if data[0] == "bm":
        return el.Bm(decode_name(data[1]), decode_name(data[2]),
                     decode_name(data[3]), data[4])
    raise ValueError("bad name tag %r" % (data[0],))


# ------------------------------------------------------------ structures

def _labels_for(cat):
    """Stable string label per basis morphism; plain unique string
    names are their own labels."""
    names = [b.name for b in cat.all_basis()]
    plain = all(isinstance(n, str) for n in names) and \
        len(set(names)) == len(names)
    labels = {}
    for i, b in enumerate(cat.all_basis()):
        labels[b] = b.name if plain else "b%d" % i
    return labels


def _obj_labels(objects):
    plain = all(isinstance(x, str) for x in objects) and \
        len(set(objects)) == len(objects)
    return {x: (x if plain else "o%d" % i)
            for i, x in enumerate(objects)}


def _value_data(v, labels, ring):
    out = []
    for b in sorted(v, key=repr):
        out.append([labels[b], ring.fmt(v[b])])
    return out


def _chain_data(chain, labels):
    # written order: last applied first
    return [labels[b] for b in reversed(chain)]


def structure_data(cat, arity_cap=None):
    labels = _labels_for(cat)
    olab = _obj_labels(cat.objects)
    basis = []
    for b in cat.all_basis():
        entry = {"label": labels[b], "src": olab[b.src],
                 "tgt": olab[b.tgt], "deg": b.deg}
        if labels[b] != b.name:
            entry["name"] = encode_name(b.name)
        basis.append(entry)
    objects = []
    for x in cat.objects:
        if olab[x] == x:
            objects.append({"label": olab[x]})
        else:
            objects.append({"label": olab[x], "name": encode_name(x)})
    if cat.is_dg:
        tables = dg_as_ainf(cat)
    elif cat.tables:
        tables = cat.tables
    else:
        assert arity_cap is not None, \
            "hook backed structure needs an arity cap to serialize"
        tables = {}
        for d in range(1, arity_cap + 1):
            for chain in composable_chains(cat, d):
                v = cat.m_op(d, chain)
                if v:
                    tables[(d, tuple(chain))] = v
    ops = {}
    for (d, chain), v in sorted(tables.items(), key=repr):
        ops.setdefault(str(d), []).append(
            {"chain": _chain_data(chain, labels),
             "value": _value_data(v, labels, cat.ring)})
    data = {
        "version": VERSION,
        "kind": "structure",
        "flavor": "dg" if cat.is_dg else "ainf",
        "ring": cat.ring.name,
        "order": "paper",
        "objects": objects,
        "basis": basis,
        "ops": ops,
    }
    if cat.units:
        data["units"] = {olab[x]: labels[e]
                         for x, e in sorted(cat.units.items(), key=repr)}
    cap = getattr(cat, "arity_cap", None) or arity_cap
    if not cat.is_dg and cap is not None:
        data["arity_cap"] = cap
    return data


def _load_quiver(data):
    ring = ring_from_name(data["ring"])
    objs = []
    obj_of = {}
    for o in data["objects"]:
        x = decode_name(o["name"]) if "name" in o else o["label"]
        objs.append(x)
        obj_of[o["label"]] = x
    bm_of = {}
    hom = {}
    for b in data["basis"]:
        name = decode_name(b["name"]) if "name" in b else b["label"]
        src, tgt = obj_of[b["src"]], obj_of[b["tgt"]]
        m = el.bm(src, tgt, name, b["deg"])
        assert b["label"] not in bm_of, "duplicate label %r" % b["label"]
        bm_of[b["label"]] = m
        hom.setdefault((src, tgt), []).append(m)
    hom = {k: tuple(v) for k, v in hom.items()}
    return ring, objs, obj_of, bm_of, hom


def _load_value(data, bm_of, ring):
    v = el.zero()
    for lbl, s in data:
        assert lbl in bm_of, "unknown label %r" % (lbl,)
        el.add_term(v, bm_of[lbl], ring.parse(s), ring)
    return v


def _load_chain(lbls, bm_of):
    chain = tuple(bm_of[l] for l in reversed(lbls))
    assert el.composable(chain), "chain not composable: %r" % (lbls,)
    return chain


def _load_tables(ops, bm_of, ring):
    tables = {}
    for dstr, rows in ops.items():
        d = int(dstr)
        for row in rows:
            chain = _load_chain(row["chain"], bm_of)
            assert len(chain) == d, "chain length != arity %d" % d
            v = _load_value(row["value"], bm_of, ring)
            if v:
                tables[(d, chain)] = v
    return tables


def _load_structure_parts(data):
    assert data.get("version") == VERSION, "unsupported version"
    assert data.get("kind") == "structure", "not a structure file"
    assert data.get("order") == "paper", "unknown chain order"
    ring, objs, obj_of, bm_of, hom = _load_quiver(data)
    tables = _load_tables(data.get("ops", {}), bm_of, ring)
    units = {obj_of[k]: bm_of[v]
             for k, v in data.get("units", {}).items()}
    if data.get("flavor") == "dg":
        for (d, chain) in tables:
            if d > 2:
                raise ValueError("dg structure with m%d table" % d)
    return ring, objs, hom, tables, units


def load_structure_raw(data):
    """Table view of a structure file: the operations exactly as
    listed, with no reconstruction of classical composition.  This is
    what verification runs on, so a corrupted table entry is seen even
    where the classical category would regenerate the value."""
    ring, objs, hom, tables, units = _load_structure_parts(data)
    return AinfCat(ring, objs, hom, tables=tables, units=units,
                   arity_cap=data.get("arity_cap"))


def load_structure(data):
    ring, objs, hom, tables, units = _load_structure_parts(data)
    if data.get("flavor") == "dg":
        diff = {}
        comp = {}
        for (d, chain), v in tables.items():
            if d == 1:
                diff[chain[0]] = v
            else:
                s = signs.dict_twist(chain[1].deg, chain[0].deg)
                raw = el.scale(v, ring.coerce(s), ring)
                b1, b2 = chain
                if units and (b1 == units.get(b1.src) or
                              b2 == units.get(b2.tgt)):
                    continue  # unit composites are implied
                comp[(b2, b1)] = raw
        return DgCat(ring, objs, hom, comp, diff, units=units)
    return AinfCat(ring, objs, hom, tables=tables, units=units,
                   arity_cap=data.get("arity_cap"))


# -------------------------------------------------------------- functors

def _map_tables_data(components, labels_src, labels_tgt, ring):
    out = {}
    for (d, chain), v in sorted(components.items(), key=repr):
        if el.is_zero(v):
            continue
        out.setdefault(str(d), []).append(
            {"chain": _chain_data(chain, labels_src),
             "value": _value_data(v, labels_tgt, ring)})
    return out


def materialize_functor(fun, arity_cap):
    """Component tables of a functor up to an arity cap."""
    comps = {}
    for d in range(1, arity_cap + 1):
        for chain in composable_chains(fun.source, d):
            v = fun.component(d, chain)
            if not el.is_zero(v):
                comps[(d, tuple(chain))] = v
    return comps


def functor_data(fun, arity_cap=None, src_data=None, tgt_data=None):
    if fun.components and fun.hook is None:
        comps = fun.components
    else:
        assert arity_cap is not None, \
            "hook backed functor needs an arity cap to serialize"
        comps = materialize_functor(fun, arity_cap)
    labels_src = _labels_for(fun.source)
    labels_tgt = _labels_for(fun.target)
    olab_src = _obj_labels(fun.source.objects)
    olab_tgt = _obj_labels(fun.target.objects)
    return {
        "version": VERSION,
        "kind": "functor",
        "ring": fun.source.ring.name,
        "order": "paper",
        "source": src_data or structure_data(fun.source,
                                             arity_cap=arity_cap),
        "target": tgt_data or structure_data(fun.target,
                                             arity_cap=arity_cap),
        "objects": {olab_src[x]: olab_tgt[fun.obj(x)]
                    for x in fun.source.objects},
        "tables": _map_tables_data(comps, labels_src, labels_tgt,
                                   fun.source.ring),
    }


def load_functor(data, source=None, target=None):
    assert data.get("version") == VERSION, "unsupported version"
    assert data.get("kind") == "functor", "not a functor file"
    src = source if source is not None else load_structure(data["source"])
    tgt = target if target is not None else load_structure(data["target"])
    _, _, obj_src, bm_src, _ = _load_quiver(data["source"])
    _, _, obj_tgt, bm_tgt, _ = _load_quiver(data["target"])
    # map freshly decoded morphisms onto the ones of src and tgt
    bm_src = {k: _match_bm(src, b) for k, b in bm_src.items()}
    bm_tgt = {k: _match_bm(tgt, b) for k, b in bm_tgt.items()}
    obj_map = {}
    for k, v in data["objects"].items():
        obj_map[obj_src[k]] = obj_tgt[v]
    comps = {}
    for dstr, rows in data.get("tables", {}).items():
        d = int(dstr)
        for row in rows:
            chain = _load_chain([r for r in row["chain"]], bm_src)
            assert len(chain) == d
            v = _load_value(row["value"], bm_tgt, tgt.ring)
            if v:
                comps[(d, chain)] = v
    return Functor(src, tgt, obj_map, components=comps)


def _match_bm(cat, b):
    for c in cat.hom_basis(b.src, b.tgt):
        if c == b:
            return c
    raise ValueError("morphism %r not in structure" % (b,))


# ------------------------------------------------------- transformations

def prenat_data(tr, arity_cap=None):
    if tr.components and tr.hook is None:
        comps = tr.components
    else:
        assert arity_cap is not None, \
            "hook backed transformation needs an arity cap to serialize"
        comps = {}
        for d in range(1, arity_cap + 1):
            for chain in composable_chains(tr.low.source, d):
                v = tr.component(d, chain)
                if not el.is_zero(v):
                    comps[(d, tuple(chain))] = v
    src_data = structure_data(tr.low.source, arity_cap=arity_cap)
    tgt_data = structure_data(tr.low.target, arity_cap=arity_cap)
    labels_src = _labels_for(tr.low.source)
    labels_tgt = _labels_for(tr.low.target)
    olab_src = _obj_labels(tr.low.source.objects)
    ring = tr.low.source.ring
    t0 = {}
    for x in tr.low.source.objects:
        v = tr.t0(x)
        if not el.is_zero(v):
            t0[olab_src[x]] = _value_data(v, labels_tgt, ring)
    return {
        "version": VERSION,
        "kind": "prenat",
        "ring": ring.name,
        "order": "paper",
        "degree": tr.g,
        "low": functor_data(tr.low, arity_cap=arity_cap,
                            src_data=src_data, tgt_data=tgt_data),
        "high": functor_data(tr.high, arity_cap=arity_cap,
                             src_data=src_data, tgt_data=tgt_data),
        "t0": t0,
        "tables": _map_tables_data(comps, labels_src, labels_tgt, ring),
    }


def load_prenat(data):
    assert data.get("version") == VERSION, "unsupported version"
    assert data.get("kind") == "prenat", "not a transformation file"
    low = load_functor(data["low"])
    high = load_functor(data["high"], source=low.source, target=low.target)
    src, tgt = low.source, low.target
    _, _, obj_src, bm_src, _ = _load_quiver(data["low"]["source"])
    _, _, obj_tgt, bm_tgt, _ = _load_quiver(data["low"]["target"])
    bm_src = {k: _match_bm(src, b) for k, b in bm_src.items()}
    bm_tgt = {k: _match_bm(tgt, b) for k, b in bm_tgt.items()}
    t0 = {}
    for k, val in data.get("t0", {}).items():
        t0[obj_src[k]] = _load_value(val, bm_tgt, tgt.ring)
    comps = {}
    for dstr, rows in data.get("tables", {}).items():
        d = int(dstr)
        for row in rows:
            chain = _load_chain(row["chain"], bm_src)
            assert len(chain) == d
            v = _load_value(row["value"], bm_tgt, tgt.ring)
            if v:
                comps[(d, chain)] = v
    return Prenat(low, high, data["degree"], t0, components=comps)


# ---------------------------------------------------- witnesses and unit

def witness_data(tcat, arity_cap=2):
    """Tables of the inclusion, its quasi inverse and the homotopy of a
    transferred tensor structure, values written in full since they
    live in the word pair category."""
    ring = tcat.ring
    eta = tcat.eta
    out = {"eta": {}, "xi": {}, "homotopy": {}}
    for d in range(1, arity_cap + 1):
        rows = []
        for chain in composable_chains(tcat, d):
            v = eta.component(d, chain)
            if el.is_zero(v):
                continue
            rows.append({
                "chain": [encode_name(b.name) for b in reversed(chain)],
                "value": [[encode_name(b.name), ring.fmt(c)]
                          for b, c in sorted(v.items(), key=repr)]})
        if rows:
            out["eta"][str(d)] = rows
    qi, hom_tr = tcat.quasi_inverse()
    for d in (1,):
        rows = []
        hrows = []
        for chain in composable_chains(tcat, d):
            u = chain[0]
            uu_letter = _match_uu_letter(tcat, u)
            if uu_letter is None:
                continue
            v = qi.component(1, (uu_letter,))
            if not el.is_zero(v):
                rows.append({
                    "chain": [encode_name(uu_letter.name)],
                    "value": _value_data(v, _labels_for(tcat), ring)})
            h = hom_tr.component(1, (uu_letter,)) if hom_tr else {}
            if not el.is_zero(h):
                hrows.append({
                    "chain": [encode_name(uu_letter.name)],
                    "value": [[encode_name(b.name), ring.fmt(c)]
                              for b, c in sorted(h.items(), key=repr)]})
        if rows:
            out["xi"][str(d)] = rows
        if hrows:
            out["homotopy"][str(d)] = hrows
    return out


def _match_uu_letter(tcat, q):
    v = tcat.include1(q)
    if len(v) != 1:
        return None
    return next(iter(v))


def monoidal_unit_data(ring=None):
    """The one object, one morphism strictly unital structure."""
    from .generators import ring_category
    return structure_data(ring_category(ring))


# ------------------------------------------------------------------ io

def dump_file(path, data):
    with open(path, "w") as fh:
        json.dump(data, fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_file(path):
    with open(path) as fh:
        data = json.load(fh)
    kind = data.get("kind")
    if kind == "structure":
        return load_structure(data)
    if kind == "functor":
        return load_functor(data)
    if kind == "prenat":
        return load_prenat(data)
    raise ValueError("unknown kind %r" % (kind,))


def same_structure(c1, c2, arity_cap=3):
    """Content equality of two structures on matched bases."""
    if c1.ring != c2.ring or list(c1.objects) != list(c2.objects):
        return False
    for key in set(c1.hom) | set(c2.hom):
        if c1.hom.get(key, ()) != c2.hom.get(key, ()):
            return False
    if c1.units != c2.units:
        return False
    for d in range(1, arity_cap + 1):
        for chain in composable_chains(c1, d):
            if not el.equal(c1.m_op(d, chain), c2.m_op(d, chain), c1.ring):
                return False
    return True
