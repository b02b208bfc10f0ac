"""Positive-word arithmetic over the interval generators ``<w>``,
``w`` a nontrivial member of a noncrossing-partition lattice, together
with the group completion.

One formal generator per member of the interval minus the identity, and
one relation ``<w1><w2> = <w3>`` whenever ``w1 w2 == w3`` in the group
with reflection lengths adding.  Words are tuples of member *indices*
into the lattice's member list (index 0, the identity, never appears in
a word: the identity generator is the empty word).  All the per-letter
operations -- partial products, quotients, meets, joins, the gamma
conjugations -- are tabulated once per lattice, so word rewriting is
pure integer work.

The canonical form is the left-weighted ("greedy") normal form obtained
by the local slide: for an adjacent pair (a, b), let s be the meet of
a^-1*gamma and b; while s is nontrivial replace (a, b) by (a*s, s^-1*b),
dropping identity factors.  Its fixpoint is the factorwise-unique
normal form; uniqueness is validated in the test suite against the
brute-force closure of the defining relations before anything else
relies on it.

Group elements are written ``gamma^-k * P`` with P positive
(:class:`GroupForm`); a mixed word is made positive by pushing powers
of ``<gamma>`` through from the left, conjugating each passed factor
and absorbing each inverse into a complement.
"""

from __future__ import annotations

import os
from collections import deque
from typing import Iterable, NamedTuple, Sequence

from .coxeter import Element, ParseError
from .lattice import NCLattice, _find_conjugator

DEFAULT_BUDGET = 10 ** 6
ORACLE_LENGTH_GUARD = 12


class BudgetExceeded(RuntimeError):
    """Relation-closure search outgrew its node budget (or the input
    word was too long to even try)."""


class NotEqualInput(ValueError):
    """A common-prefix/suffix extraction was fed words that are not
    positively equal."""


class NotDivisible(ValueError):
    """The requested generator does not divide the word on that side."""


Word = tuple  # tuple of member indices, all nonzero


class GroupForm(NamedTuple):
    """``gamma^-gamma_power * factors`` with ``factors`` a normal form."""

    gamma_power: int
    factors: Word


def _env_budget(override: int | None) -> int:
    if override is not None:
        return override
    return int(os.environ.get("NCGAR_BUDGET", str(DEFAULT_BUDGET)))


class DualMonoid:
    def __init__(self, lat: NCLattice):
        self.lattice = lat
        self.system = lat.system
        members = lat.members
        n = self.size = len(members)
        self.gamma_idx = lat.index[lat.gamma]
        self.length = list(lat.rank_of)
        self.simples = range(1, n)
        idx = lat.index
        mul, inv = self.system.multiply, self.system.inverse
        prod = [[-1] * n for _ in range(n)]
        comp = [[-1] * n for _ in range(n)]
        lquot = [[-1] * n for _ in range(n)]
        rquot = [[-1] * n for _ in range(n)]
        for i, u in enumerate(members):
            ui = inv(u)
            li = self.length[i]
            for j, w in enumerate(members):
                k = idx.get(mul(u, w), -1)
                prod[i][j] = k
                if k >= 0 and li + self.length[j] == self.length[k]:
                    comp[i][j] = k
                lquot[i][j] = idx.get(mul(ui, w), -1)
                rquot[i][j] = idx.get(mul(u, inv(w)), -1)
        self.prod, self.comp, self.lquot, self.rquot = prod, comp, lquot, rquot
        self.meet_idx = lat.meet_table
        self.join_idx = lat.join_table
        self.compl_left = [lquot[i][self.gamma_idx] for i in range(n)]
        gam, gai = lat.gamma, inv(lat.gamma)
        self.gconj = [idx[mul(mul(gam, w), gai)] for w in members]
        self.gconj_inv = [idx[mul(mul(gai, w), gam)] for w in members]
        # reversal map: inversion carries this interval onto the interval
        # below gamma^-1 and turns every relation around; conjugating back
        # by some v with v gamma^-1 v^-1 == gamma gives an
        # anti-automorphism <w> -> <v w^-1 v^-1>, which makes the suffix
        # operations mirrors of the prefix ones
        v = _find_conjugator(self.system, gai, gam)
        if v is None:
            raise AssertionError("gamma is not conjugate to its inverse")
        vi = inv(v)
        self.phi = [idx[mul(mul(v, inv(w)), vi)] for w in members]
        self.phi_inv = [idx[mul(mul(vi, inv(w)), v)] for w in members]
        if min(self.compl_left) < 0 or min(self.phi) < 0 or min(self.phi_inv) < 0:
            raise AssertionError("complement/reversal left the interval")
        facts: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for i in range(1, n):
            row = comp[i]
            for j in range(1, n):
                if row[j] > 0:
                    facts[row[j]].append((i, j))
        self.factorizations = facts

    # -- words -----------------------------------------------------------

    def word_length(self, word: Word) -> int:
        return sum(self.length[f] for f in word)

    def word_from_elements(self, elems: Iterable[Element]) -> Word:
        out = []
        for e in elems:
            i = self.lattice.index.get(e)
            if i is None:
                raise ValueError(
                    f"{self.system.format_element(e)} is not in the interval")
            if i == 0:
                raise ValueError("the identity is not a generator; use the empty word")
            out.append(i)
        return tuple(out)

    def elements_of(self, word: Word) -> list[Element]:
        return [self.lattice.members[f] for f in word]

    def evaluate(self, word: Word) -> Element:
        """Natural projection onto the group: multiply the factors out."""
        acc = self.system.identity
        for f in word:
            acc = self.system.multiply(acc, self.lattice.members[f])
        return acc

    # -- relations and normal form ----------------------------------------

    def defining_relations(self) -> list[tuple[int, int, int]]:
        """All triples (i, j, k) with m_i * m_j == m_k and lengths adding."""
        out = []
        for k in range(1, self.size):
            for i, j in self.factorizations[k]:
                out.append((i, j, k))
        out.sort()
        return out

    def normal_form(self, word: Sequence[int]) -> Word:
        """Left-weighted normal form; slide order does not matter."""
        fs = [f for f in word if f != 0]
        meet = self.meet_idx
        compl = self.compl_left
        comp = self.comp
        lquot = self.lquot
        i = 0
        while i < len(fs) - 1:
            a, b = fs[i], fs[i + 1]
            s = meet[compl[a]][b]
            if s == 0:
                i += 1
                continue
            fs[i] = comp[a][s]
            rest = lquot[s][b]
            if rest == 0:
                del fs[i + 1]
            else:
                fs[i + 1] = rest
            if i:
                i -= 1
        return tuple(fs)

    def positively_equal(self, a: Sequence[int], b: Sequence[int]) -> bool:
        return self.normal_form(a) == self.normal_form(b)

    def is_normal_form(self, word: Sequence[int]) -> bool:
        return all(self.meet_idx[self.compl_left[word[i]]][word[i + 1]] == 0
                   for i in range(len(word) - 1))

    def oracle_closure(self, word: Sequence[int],
                       budget: int | None = None) -> set[Word]:
        """Every word reachable from ``word`` by single applications of a
        defining relation, by breadth-first search.  Independent of the
        normal form machinery; this is the ground truth it is tested
        against."""
        start = tuple(word)
        if self.word_length(start) > ORACLE_LENGTH_GUARD:
            raise BudgetExceeded(
                f"word length {self.word_length(start)} exceeds the "
                f"{ORACLE_LENGTH_GUARD} guard")
        limit = _env_budget(budget)
        comp = self.comp
        facts = self.factorizations
        seen = {start}
        queue = deque([start])
        while queue:
            w = queue.popleft()
            nbrs = []
            for i in range(len(w) - 1):
                c = comp[w[i]][w[i + 1]]
                if c > 0:
                    nbrs.append(w[:i] + (c,) + w[i + 2:])
            for i, f in enumerate(w):
                head, tail = w[:i], w[i + 1:]
                for a, b in facts[f]:
                    nbrs.append(head + (a, b) + tail)
            for nb in nbrs:
                if nb not in seen:
                    seen.add(nb)
                    if len(seen) > limit:
                        raise BudgetExceeded(f"closure exceeded {limit} words")
                    queue.append(nb)
        return seen

    # -- cancellation -------------------------------------------------------

    def left_cancel(self, u: int, a: Sequence[int], b: Sequence[int]) -> bool:
        """Whether <u>a and <u>b are positively equal; by left
        cancellation this coincides with a and b being positively equal."""
        return self.positively_equal((u,) + tuple(a), (u,) + tuple(b))

    def right_cancel(self, u: int, a: Sequence[int], b: Sequence[int]) -> bool:
        return self.positively_equal(tuple(a) + (u,), tuple(b) + (u,))

    def strip_prefix(self, nf: Word, j: int) -> Word:
        """Z with <j>Z positively equal to the given normal form."""
        if j == 0:
            return nf
        if not nf:
            raise NotDivisible("cannot strip a generator off the empty word")
        head = nf[0]
        if not self.lattice.down[head] >> j & 1:
            raise NotDivisible("generator does not left-divide the word")
        rest = self.lquot[j][head]
        return self.normal_form(((rest,) if rest else ()) + nf[1:])

    def strip_suffix(self, nf: Word, j: int) -> Word:
        rev = tuple(self.phi[f] for f in reversed(nf))
        stripped = self.strip_prefix(self.normal_form(rev), self.phi[j])
        return self.normal_form(tuple(self.phi_inv[f] for f in reversed(stripped)))

    def common_prefix(self, u: int, a: Sequence[int], w: int,
                      b: Sequence[int]) -> tuple[int, int, Word]:
        """Given <u>a positively equal to <w>b, return (e, f, C) with
        u v w = u*e = w*f (v the join), a ~ <e>C and b ~ <f>C.  All
        three claims are re-verified before returning."""
        a, b = tuple(a), tuple(b)
        if not self.positively_equal((u,) + a, (w,) + b):
            raise NotEqualInput("words do not share a positive equality")
        j = self.join_idx[u][w]
        e = self.lquot[u][j]
        f = self.lquot[w][j]
        c = self.strip_prefix(self.normal_form((u,) + a), j)
        ok = (self.comp[u][e] == j and self.comp[w][f] == j
              and self.positively_equal(a, ((e,) if e else ()) + c)
              and self.positively_equal(b, ((f,) if f else ()) + c))
        if not ok:
            raise AssertionError("common prefix extraction failed verification")
        return e, f, c

    def common_suffix(self, u: int, a: Sequence[int], w: int,
                      b: Sequence[int]) -> tuple[int, int, Word]:
        """Suffix mirror: given a<u> positively equal to b<w>, return
        (e, f, C) with join(u, w) = e*u = f*w, a ~ C<e> and b ~ C<f>."""
        a, b = tuple(a), tuple(b)
        if not self.positively_equal(a + (u,), b + (w,)):
            raise NotEqualInput("words do not share a positive equality")
        j = self.join_idx[u][w]
        e = self.rquot[j][u]
        f = self.rquot[j][w]
        c = self.strip_suffix(self.normal_form(a + (u,)), j)
        ok = (self.comp[e][u] == j and self.comp[f][w] == j
              and self.positively_equal(a, c + ((e,) if e else ()))
              and self.positively_equal(b, c + ((f,) if f else ())))
        if not ok:
            raise AssertionError("common suffix extraction failed verification")
        return e, f, c

    def join_prefix(self, p: Sequence[int], prefixes: Sequence[int]) -> Word:
        """Z with P positively equal to <a1 v ... v ak>Z."""
        p = tuple(p)
        nf = self.normal_form(p)
        j = 0
        for a in prefixes:
            self.strip_prefix(nf, a)  # NotDivisible if some a_i fails
            j = self.join_idx[j][a]
        z = self.strip_prefix(nf, j)
        if not self.positively_equal(p, ((j,) if j else ()) + z):
            raise NotDivisible("join of the prefixes does not divide the word")
        return z

    def join_suffix(self, p: Sequence[int], suffixes: Sequence[int]) -> Word:
        p = tuple(p)
        nf = self.normal_form(p)
        j = 0
        for a in suffixes:
            self.strip_suffix(nf, a)
            j = self.join_idx[j][a]
        z = self.strip_suffix(nf, j)
        if not self.positively_equal(p, z + ((j,) if j else ())):
            raise NotDivisible("join of the suffixes does not divide the word")
        return z

    # -- gamma bookkeeping ----------------------------------------------------

    def gamma_twist(self, word: Sequence[int], k: int) -> Word:
        """Conjugate every factor by gamma^k; satisfies
        gamma^k * A ~ twist(A, k) * gamma^k."""
        out = tuple(word)
        for _ in range(k):
            out = tuple(self.gconj[f] for f in out)
        return out

    def positive_lift(self, mixed: Sequence[tuple[int, int]]) -> GroupForm:
        """Rewrite a mixed word as gamma^-k * P with P positive and k the
        number of inverse letters.

        One <gamma> is pushed rightward through the accumulated positive
        prefix for each inverse letter (conjugating every factor it
        passes), then absorbed: <gamma><w>^-1 collapses to the
        complement <gamma w^-1>.
        """
        k = sum(1 for _, sign in mixed if sign < 0)
        positive: list[int] = []
        for f, sign in mixed:
            if sign > 0:
                positive.append(f)
            else:
                positive = [self.gconj[x] for x in positive]
                g = self.rquot[self.gamma_idx][f]
                if g:
                    positive.append(g)
        return GroupForm(k, self.normal_form(positive))

    def canonical_group_form(self, g: GroupForm) -> GroupForm:
        k, nf = g.gamma_power, self.normal_form(g.factors)
        while k > 0 and nf and nf[0] == self.gamma_idx:
            k -= 1
            nf = nf[1:]
        return GroupForm(k, nf)

    def group_equal(self, g: GroupForm, h: GroupForm) -> bool:
        """Pad both forms to the larger gamma power and compare the
        normal forms factor by factor."""
        k = max(g.gamma_power, h.gamma_power)
        pg = self.normal_form((self.gamma_idx,) * (k - g.gamma_power) + g.factors)
        ph = self.normal_form((self.gamma_idx,) * (k - h.gamma_power) + h.factors)
        return pg == ph

    def group_multiply(self, g: GroupForm, h: GroupForm) -> GroupForm:
        """Product in the group completion, canonicalised."""
        shifted = self.gamma_twist(g.factors, h.gamma_power)
        return self.canonical_group_form(
            GroupForm(g.gamma_power + h.gamma_power,
                      self.normal_form(shifted + h.factors)))

    def group_form_of_word(self, word: Sequence[int]) -> GroupForm:
        return self.canonical_group_form(GroupForm(0, self.normal_form(word)))

    # -- text ------------------------------------------------------------------

    def word_to_text(self, word: Sequence[int]) -> str:
        if not word:
            return "e"
        fmt = self.system.format_element
        return "*".join(fmt(self.lattice.members[f]) for f in word)

    def group_form_to_text(self, g: GroupForm) -> str:
        word = self.word_to_text(g.factors)
        if g.gamma_power == 0:
            return word
        return f"g^-{g.gamma_power} * {word}"

    def parse_mixed(self, text: str) -> list[tuple[int, int]]:
        """Parse ``f1*f2^-1*...`` into (index, sign) pairs."""
        stripped = text.strip()
        if stripped == "e":
            return []
        out = []
        pos = 0
        for token in text.split("*"):
            tok = token.strip()
            sign = 1
            if tok.endswith("^-1"):
                sign = -1
                tok = tok[:-3].strip()
            if not tok:
                raise ParseError(text, pos, "empty word factor")
            elem = self.system.parse_element(tok)
            i = self.lattice.index.get(elem)
            if i is None:
                raise ParseError(text, pos, f"{tok} is not in the interval")
            if i == 0:
                raise ParseError(text, pos,
                                 "explicit identity factors are not allowed")
            out.append((i, sign))
            pos += len(token) + 1
        return out

    def parse_word(self, text: str) -> Word:
        mixed = self.parse_mixed(text)
        if any(sign < 0 for _, sign in mixed):
            raise ParseError(text, 0, "positive word expected, found an inverse")
        return tuple(f for f, _ in mixed)

    def word_to_json(self, g: GroupForm) -> str:
        import json

        fmt = self.system.format_element
        payload = {
            "gamma_power": g.gamma_power,
            "factors": [fmt(self.lattice.members[f]) for f in g.factors],
        }
        return json.dumps(payload, separators=(",", ":")) + "\n"
