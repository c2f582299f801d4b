"""Command line driver for building and verifying tensor structures.

Subcommands: verify, tensor, transfer, compose, homotopy-solve, gen,
coherence.  Exit code 0 when every checked identity holds exactly, 1
when an identity fails (the first failing arity, chain and defect are
printed), 2 on malformed files or arguments.
"""

import argparse
import json
import sys

from . import elements as el
from . import serialize as sz
from .barcobar import UnCat, alpha_component
from .category import composable_chains
from .defects import functor_defect, relation_defect, strict_unit_defect
from .functor import compose_functors, identity_functor
from .functors_tensor import (associator_functor, swap_functor,
                              unit_strand_functor)
from .generators import ring_category, seeded_pair
from .homotopy import homotopy_defect, solve_homotopy
from .prenat import m1_value
from .rings import ring_from_name
from .transfer import build_tensor, hpt_transfer


class Report(object):

    def __init__(self, command, args):
        self.command = command
        self.args = args
        self.checks = []
        self.failed = False

    def ok(self, name, detail=None):
        self.checks.append({"name": name, "ok": True, "detail": detail})
        if not self.args.json_report:
            print("ok    %s" % name + (": %s" % detail if detail else ""))

    def fail(self, name, detail):
        self.checks.append({"name": name, "ok": False, "detail": detail})
        self.failed = True
        if not self.args.json_report:
            print("FAIL  %s: %s" % (name, detail))

    def finish(self):
        code = 1 if self.failed else 0
        if self.args.json_report:
            print(json.dumps({
                "command": self.command,
                "seed": self.args.seed,
                "arity_cap": self.args.arity_cap,
                "word_cap": self.args.word_cap,
                "checks": self.checks,
                "ok": not self.failed,
                "exit": code,
            }, sort_keys=True, indent=1))
        return code


def chain_str(chain):
    """Chain in written order, last applied first."""
    return "[" + ", ".join(_name_str(b) for b in reversed(chain)) + "]"


def _name_str(b):
    return b.name if isinstance(b.name, str) else repr(b.name)


def defect_str(dz):
    parts = ["%s: %s" % (_name_str(b), c) for b, c in
             sorted(dz.items(), key=repr)]
    return "{" + ", ".join(parts) + "}"


def _load(path):
    try:
        return sz.load_file(path)
    except (OSError, ValueError, KeyError, AssertionError,
            json.JSONDecodeError) as exc:
        print("schema error in %s: %s" % (path, exc), file=sys.stderr)
        raise SystemExit(2)


def _structure_cap(cat, flag_cap):
    cap = getattr(cat, "arity_cap", None)
    return min(flag_cap, cap) if cap else flag_cap


def check_structure(cat, cap, rep, label="structure"):
    """Full defect suite on one structure."""
    if not cat.is_dg:
        try:
            cat.validate_degrees()
        except AssertionError as exc:
            rep.fail("%s degrees" % label, str(exc))
            return
    rep.ok("%s degrees" % label)
    for d in range(1, cap + 1):
        for chain in composable_chains(cat, d):
            dz = relation_defect(cat, chain)
            if not el.is_zero(dz):
                rep.fail("%s relations" % label,
                         "(arity %d, chain %s, defect %s)"
                         % (d, chain_str(chain), defect_str(dz)))
                return
    rep.ok("%s relations up to arity %d" % (label, cap))
    if cat.units:
        bad = strict_unit_defect(cat, chain_cap=min(cap, 3))
        if bad:
            desc, dz = bad[0]
            rep.fail("%s units" % label, "%s, defect %s"
                     % (desc, defect_str(dz) if dz else "missing"))
            return
        rep.ok("%s units strict" % label)


def cmd_verify(args, rep):
    try:
        with open(args.files[0]) as fh:
            data = json.load(fh)
        kind = data.get("kind")
        if kind == "structure":
            # verify the tables as listed, so corrupted entries are not
            # papered over by classical reconstruction
            cat = sz.load_structure_raw(data)
        elif kind == "functor":
            cat = sz.load_functor(data)
        else:
            raise ValueError("verify expects a structure or functor file")
    except (OSError, ValueError, KeyError, AssertionError,
            json.JSONDecodeError) as exc:
        print("schema error in %s: %s" % (args.files[0], exc),
              file=sys.stderr)
        raise SystemExit(2)
    if kind == "functor":
        check_functor_file(cat, args, rep)
        return
    check_structure(cat, _structure_cap(cat, args.arity_cap), rep)


def check_functor_file(fun, args, rep):
    cap = min(_structure_cap(fun.source, args.arity_cap),
              _structure_cap(fun.target, args.arity_cap))
    for d in range(1, cap + 1):
        for chain in composable_chains(fun.source, d):
            dz = functor_defect(fun, chain)
            if not el.is_zero(dz):
                rep.fail("functor equation",
                         "(arity %d, chain %s, defect %s)"
                         % (d, chain_str(chain), defect_str(dz)))
                return
    rep.ok("functor equation up to arity %d" % cap)


def cmd_tensor(args, rep):
    left = _load(args.files[0])
    right = _load(args.files[1])
    if left.ring != right.ring:
        print("factors over different rings", file=sys.stderr)
        raise SystemExit(2)
    cap = args.arity_cap
    tc = build_tensor(left, right, arity_cap=cap,
                      letter_cap=args.word_cap)
    check_structure(tc, cap, rep, label="tensor")
    if args.out:
        data = sz.structure_data(tc, arity_cap=cap)
        if args.witnesses:
            data["witnesses"] = sz.witness_data(tc, arity_cap=min(cap, 2))
        sz.dump_file(args.out, data)
        rep.ok("written", args.out)


def cmd_transfer(args, rep):
    base = _load(args.files[0])
    if not base.units:
        print("transfer needs a strictly unital structure",
              file=sys.stderr)
        raise SystemExit(2)
    cap = _structure_cap(base, args.arity_cap)
    ucat = UnCat(base, args.word_cap)
    ring = base.ring

    def include(b):
        return alpha_component(ucat, 1, (b,))

    def project(w):
        return ucat.chi1_bm(w)

    def homo(w):
        return ucat.hcontract_bm(w)

    tcat, eta, _ = hpt_transfer(
        ucat, base.objects, base.hom, {x: x for x in base.objects},
        include, project, homo, units=base.units, arity_cap=cap)
    check_structure(tcat, cap, rep, label="transferred")
    agree = True
    for d in range(1, cap + 1):
        for chain in composable_chains(base, d):
            if not el.equal(tcat.m_op(d, chain), base.m_op(d, chain),
                            ring):
                agree = False
    rep.ok("reproduces input: %s" % agree)
    if args.out:
        sz.dump_file(args.out, sz.structure_data(tcat, arity_cap=cap))
        rep.ok("written", args.out)


def cmd_compose(args, rep):
    try:
        with open(args.files[1]) as fh:
            gdata = json.load(fh)
        with open(args.files[0]) as fh:
            fdata = json.load(fh)
        g = sz.load_functor(gdata)
        f = sz.load_functor(fdata, source=g.target)
    except (OSError, ValueError, KeyError, AssertionError,
            json.JSONDecodeError) as exc:
        print("schema error: %s" % exc, file=sys.stderr)
        raise SystemExit(2)
    comp = compose_functors(f, g)
    cap = min(_structure_cap(g.source, args.arity_cap),
              _structure_cap(f.target, args.arity_cap))
    for d in range(1, cap + 1):
        for chain in composable_chains(g.source, d):
            dz = functor_defect(comp, chain)
            if not el.is_zero(dz):
                rep.fail("composite functor equation",
                         "(arity %d, chain %s, defect %s)"
                         % (d, chain_str(chain), defect_str(dz)))
                return
    rep.ok("composite functor equation up to arity %d" % cap)
    if args.out:
        sz.dump_file(args.out, sz.functor_data(comp, arity_cap=cap))
        rep.ok("written", args.out)


def cmd_homotopy_solve(args, rep):
    try:
        with open(args.files[0]) as fh:
            fdata = json.load(fh)
        with open(args.files[1]) as fh:
            gdata = json.load(fh)
        f = sz.load_functor(fdata)
        g = sz.load_functor(gdata, source=f.source, target=f.target)
    except (OSError, ValueError, KeyError, AssertionError,
            json.JSONDecodeError) as exc:
        print("schema error: %s" % exc, file=sys.stderr)
        raise SystemExit(2)
    if f.obj_map != g.obj_map:
        rep.fail("homotopy", "object maps differ")
        return
    cap = min(_structure_cap(f.source, args.arity_cap),
              _structure_cap(f.target, args.arity_cap))
    tr = solve_homotopy(f, g, cap)
    if tr is None:
        rep.fail("homotopy", "no homotopy at arity cap %d" % cap)
        return
    bad = homotopy_defect(f, g, tr, cap)
    if bad:
        n, chain, dz = bad[0]
        rep.fail("homotopy defect",
                 "(arity %d, chain %s, defect %s)"
                 % (n, chain_str(chain), defect_str(dz)))
        return
    rep.ok("homotopy solved, differential matches up to arity %d" % cap)
    if args.out:
        sz.dump_file(args.out, sz.prenat_data(tr, arity_cap=cap))
        rep.ok("written", args.out)


def cmd_gen(args, rep):
    ring = ring_from_name(args.ring)
    if args.unit:
        data = sz.monoidal_unit_data(ring)
        if args.out:
            sz.dump_file(args.out, data)
            rep.ok("written", args.out)
        else:
            print(json.dumps(data, sort_keys=True, indent=1))
        return
    left, right, flavor = seeded_pair(args.seed, ring=ring)
    cap = args.arity_cap
    ldata = sz.structure_data(left, arity_cap=cap)
    rdata = sz.structure_data(right, arity_cap=cap)
    rep.ok("generated pair", "flavor %s" % flavor)
    if args.out:
        lpath = args.out + ".left.json"
        rpath = args.out + ".right.json"
        sz.dump_file(lpath, ldata)
        sz.dump_file(rpath, rdata)
        rep.ok("written", "%s, %s" % (lpath, rpath))
    else:
        print(json.dumps({"version": sz.VERSION, "kind": "pair",
                          "flavor": flavor, "left": ldata,
                          "right": rdata}, sort_keys=True, indent=1))


def cmd_coherence(args, rep):
    from .generators import path_dg
    ring = ring_from_name(args.ring)
    seed = args.seed
    a0 = path_dg(seed=seed * 3 + 1, ring=ring, n_obj=2, max_para=1)
    b0 = path_dg(seed=seed * 3 + 2, ring=ring, n_obj=2, max_para=1)
    rc = ring_category(ring)

    for side, tc in (("right", build_tensor(a0, rc, 3)),
                     ("left", build_tensor(rc, a0, 3))):
        u = unit_strand_functor(tc, side, arity_cap=3)
        if u is None:
            rep.fail("unitor %s" % side, "no comparison at cap 3")
        else:
            rep.ok("unitor %s solved" % side)

    tab = build_tensor(a0, b0, 3)
    tba = build_tensor(b0, a0, 3)
    sw = swap_functor(tab, tba)
    sw2 = swap_functor(tba, tab)
    for d in (1, 2):
        for chain in composable_chains(tab, d)[:6]:
            dz = functor_defect(sw, chain)
            if not el.is_zero(dz):
                rep.fail("swap functor equation",
                         "(arity %d, chain %s, defect %s)"
                         % (d, chain_str(chain), defect_str(dz)))
                return
    rep.ok("swap functor equation")
    rt = compose_functors(sw2, sw)
    hsw = solve_homotopy(rt, identity_functor(tab), 2)
    if hsw is None:
        rep.fail("double swap", "no homotopy to the identity at cap 2")
    else:
        rep.ok("double swap homotopic to identity")

    c0 = path_dg(seed=seed * 3 + 3, ring=ring, n_obj=2, max_para=1)
    tbc = build_tensor(b0, c0, 3)
    ta_bc = build_tensor(a0, tbc, 2)
    tab_c = build_tensor(tab, c0, 2)
    assoc = associator_functor(ta_bc, tab_c, arity_cap=2)
    if assoc is None:
        rep.fail("associator", "no comparison functor at cap 2")
    else:
        rep.ok("associator solved at cap 2")


COMMANDS = {
    "verify": (cmd_verify, 1),
    "tensor": (cmd_tensor, 2),
    "transfer": (cmd_transfer, 1),
    "compose": (cmd_compose, 2),
    "homotopy-solve": (cmd_homotopy_solve, 2),
    "gen": (cmd_gen, 0),
    "coherence": (cmd_coherence, 0),
}


def main(argv=None):
    parser = argparse.ArgumentParser(prog="ainftensor", description=__doc__)
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("files", nargs="*")
    parser.add_argument("--arity-cap", type=int, default=5)
    parser.add_argument("--word-cap", type=int, default=6)
    parser.add_argument("--ring", default="q")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out")
    parser.add_argument("--witnesses", action="store_true")
    parser.add_argument("--unit", action="store_true",
                        help="gen: emit the monoidal unit structure")
    parser.add_argument("--json-report", action="store_true")
    args = parser.parse_args(argv)
    try:
        ring_from_name(args.ring)
    except ValueError as exc:
        print(exc, file=sys.stderr)
        return 2
    fn, nfiles = COMMANDS[args.command]
    if len(args.files) != nfiles:
        print("%s expects %d file argument(s)" % (args.command, nfiles),
              file=sys.stderr)
        return 2
    rep = Report(args.command, args)
    fn(args, rep)
    return rep.finish()


if __name__ == "__main__":
    sys.exit(main())
