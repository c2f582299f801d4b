"""The word category over a base category and its contraction data.

A morphism of the word category U(A) is a word: a nonempty tuple of
groups, each group a nonempty tuple of composable basis morphisms of
the base.  Words and groups are stored bottom up, entry 0 first.  The
degree of a group is 1 + sum of reduced letter degrees and the degree
of a word is the sum over its groups.

U(A) is an honest differential graded category: composition is word
concatenation, and the differential acts on one group at a time by
collapsing an inner block of letters through a base operation or by
splitting the group in two, extended to words by the Leibniz rule.

The contraction package consists of the inclusion alpha (a chain into
one group), the projection chi1 (stabilise the reduction step, then
read off the single letter part), the merge R of a leading singleton
group into its neighbour, the reduction r = id - dR - Rd, and the
homotopy H = sum of R r^j.  Together they exhibit the base as a
deformation retract of its word category, which is what the transfer
machinery consumes.
"""

from . import elements as el
from . import signs
from .elements import Bm


def gdeg(group):
    return 1 + sum(b.deg - 1 for b in group)


def word_letters(word):
    return sum(len(g) for g in word)


def word_bm(word):
    """Wrap a word as a basis morphism of the word category."""
    word = tuple(tuple(g) for g in word)
    assert word and all(word), "empty word or group"
    flat = [b for g in word for b in g]
    assert el.composable(tuple(flat)), "letters not composable"
    return Bm(flat[0].src, flat[-1].tgt, word, sum(gdeg(g) for g in word))


def singletons(chain):
    """The word with one singleton group per letter."""
    return word_bm(tuple((b,) for b in chain))


class M1View(object):
    """The base with only its differential kept, higher operations
    dropped.  Words over this view carry the chain level structure."""

    def __init__(self, base):
        self.base = base
        self.ring = base.ring
        self.objects = base.objects

    def m_op(self, d, chain):
        if d == 1:
            return self.base.m_op(1, chain)
        return {}


class UnCat(object):
    """Word category over a base with operations."""

    is_dg = True

    def __init__(self, base, letter_cap=None):
        self.base = base
        self.ring = base.ring
        self.objects = list(base.objects)
        self.letter_cap = letter_cap
        self._dmemo = {}
        self._rmemo = {}

    def check_cap(self, b):
        if self.letter_cap is not None:
            assert word_letters(b.name) <= self.letter_cap, \
                "word above letter cap"
        return b

    def unit(self, x):
        return None

    def cc(self, b2, b1):
        """Concatenation, b1 first."""
        assert b1.tgt == b2.src
        return el.single(word_bm(b1.name + b2.name), self.ring)

    def cd(self, b):
        if b not in self._dmemo:
            self._dmemo[b] = self._d_word(b.name)
        return self._dmemo[b]

    def m_op(self, d, chain):
        if d == 1:
            return self.cd(chain[0])
        if d == 2:
            s = signs.dict_twist(chain[1].deg, chain[0].deg)
            return el.scale(self.cc(chain[1], chain[0]),
                            self.ring.coerce(s), self.ring)
        return {}

    def _d_word(self, word):
        ring = self.ring
        out = el.zero()
        above_deg = [0] * len(word)
        acc = 0
        for i in range(len(word) - 1, -1, -1):
            above_deg[i] = acc
            acc += gdeg(word[i])
        for i, group in enumerate(word):
            lsign = ring.coerce(signs.parity(above_deg[i]))
            for term, coeff in self._d_group(group):
                new = word[:i] + term + word[i + 1:]
                el.add_term(out, word_bm(new), ring.mul(coeff, lsign), ring)
        return out

    def _d_group(self, group):
        """Differential of one group, as (replacement, coeff) pairs;
        a replacement is a tuple of groups."""
        ring = self.ring
        n = len(group)
        terms = []
        for m in range(1, n + 1):
            for k in range(0, n - m + 1):
                block = group[k:k + m]
                inner = self.base.m_op(m, block)
                if not inner:
                    continue
                above = sum(b.deg - 1 for b in group[k + m:])
                sg = ring.coerce(signs.cobar_collapse_sign(
                    above, [b.deg - 1 for b in block]))
                for b, c in inner.items():
                    new = group[:k] + (b,) + group[k + m:]
                    terms.append(((new,), ring.mul(c, sg)))
        for p in range(1, n):
            bot, top = group[:p], group[p:]
            sg = ring.coerce(signs.cobar_split_sign(
                sum(b.deg - 1 for b in bot), sum(b.deg - 1 for b in top)))
            terms.append(((bot, top), sg))
        return terms

    def merge_lead(self, b):
        """R: merge a leading singleton group into the group below."""
        word = b.name
        if len(word) < 2 or len(word[-1]) != 1:
            return {}
        lead = word[-1][0]
        nxt = word[-2]
        rest = word[:-2]
        sg = signs.rmerge_sign(lead.deg - 1,
                               sum(x.deg - 1 for x in nxt),
                               sum(x.deg - 1 for g in rest for x in g))
        merged = rest + (nxt + (lead,),)
        return el.single(word_bm(merged), self.ring, self.ring.coerce(sg))

    def merge_elt(self, e):
        ring = self.ring
        out = el.zero()
        for b, c in e.items():
            for b2, c2 in self.merge_lead(b).items():
                el.add_term(out, b2, ring.mul(c, c2), ring)
        return out

    def d_elt(self, e):
        ring = self.ring
        out = el.zero()
        for b, c in e.items():
            for b2, c2 in self.cd(b).items():
                el.add_term(out, b2, ring.mul(c, c2), ring)
        return out

    def rstep_bm(self, b):
        """r = id - d R - R d on a basis word, memoised."""
        if b not in self._rmemo:
            ring = self.ring
            out = el.single(b, ring)
            out = el.sub(out, self.d_elt(self.merge_lead(b)), ring)
            out = el.sub(out, self.merge_elt(self.cd(b)), ring)
            self._rmemo[b] = out
        return self._rmemo[b]

    def rstep(self, e):
        ring = self.ring
        out = el.zero()
        for b, c in e.items():
            for b2, c2 in self.rstep_bm(b).items():
                el.add_term(out, b2, ring.mul(c, c2), ring)
        return out

    def reduce_full(self, e):
        """Iterate r until stable; lands on single letter words."""
        n = 0
        for b in e:
            n = max(n, word_letters(b.name))
        for _ in range(max(n - 1, 0)):
            e = self.rstep(e)
        return e

    def chi1(self, e):
        """Project a word element to the base along the contraction."""
        ring = self.ring
        out = el.zero()
        for b, c in self.reduce_full(e).items():
            word = b.name
            assert len(word) == 1 and len(word[0]) == 1, \
                "reduction did not reach a letter"
            letter = word[0][0]
            sg = ring.coerce(signs.chi_letter_sign(letter.deg))
            el.add_term(out, letter, ring.mul(c, sg), ring)
        return out

    def chi1_bm(self, b):
        return self.chi1(el.single(b, self.ring))

    def hcontract(self, e):
        """H = (global sign) sum_j R r^j, letter count strictly drops."""
        ring = self.ring
        out = el.zero()
        n = 0
        for b in e:
            n = max(n, word_letters(b.name))
        cur = e
        for _ in range(max(n - 1, 0) + 1):
            for b, c in self.merge_elt(cur).items():
                el.add_term(out, b, c, ring)
            cur = self.rstep(cur)
        return el.scale(out, ring.coerce(signs.hsum_sign()), ring)

    def hcontract_bm(self, b):
        return self.hcontract(el.single(b, self.ring))


def alpha_component(ucat, d, chain):
    """Inclusion of a chain as a one group word, with its gauge sign."""
    sg = signs.alpha_sign([b.deg - 1 for b in chain])
    return el.single(word_bm((tuple(chain),)), ucat.ring,
                     ucat.ring.coerce(sg))


def alpha_functor(ucat):
    from .functor import Functor
    base = ucat.base

    def hook(d, chain):
        return alpha_component(ucat, d, chain)

    return Functor(base, ucat, {x: x for x in base.objects}, hook=hook,
                   name="alpha")


def xi_functor(ucat):
    """Evaluation of singleton words by classical composition, zero on
    words with a larger group; a strict functor for a classical base."""
    from .functor import strict_functor
    base = ucat.base
    ring = ucat.ring

    def on_basis(b):
        word = b.name
        if any(len(g) != 1 for g in word):
            return {}
        letters = [g[0] for g in word]
        sg = ring.coerce(signs.xi_sign([x.deg - 1 for x in letters]))
        acc = el.single(letters[0], ring, sg)
        for nxt in letters[1:]:
            new = el.zero()
            for c, co in acc.items():
                for c2, co2 in base.cc(nxt, c).items():
                    el.add_term(new, c2, ring.mul(co, co2), ring)
            acc = new
        return acc

    return strict_functor(ucat, base, {x: x for x in base.objects},
                          on_basis, name="xi")


def chi1_functor(ucat):
    """Arity one projection packaged as map data for transfer input."""
    def fn(b):
        return ucat.chi1_bm(b)
    return fn
