"""The free module R^m: module monomials, module orders, division and Gröbner bases.

A module monomial ``x^a e_i`` is the pair ``(i, a)`` with a 0-based index
``i``; it prints as ``x^a*e_{i+1}``.  Module elements are immutable mappings
from module monomials to nonzero coefficients.
"""

from __future__ import annotations

import operator

from .ring import Polynomial, PolynomialRing, divides, mono_div, mono_lcm

__all__ = [
    "ModuleElement", "ModuleOrder", "SchreyerOrder", "PositionOverTerm",
    "schreyer_compare", "image_of", "module_divide", "module_buchberger",
    "minimal_monomials", "minimal_module_monomials", "in_monomial_module",
    "monomial_modules_equal", "spoly_module",
]


# --------------------------------------------------------------------------
# orders
# --------------------------------------------------------------------------

class ModuleOrder:
    """A module monomial order given by a sort key on ``(index, exps)`` pairs."""

    def __init__(self, key, rank: int):
        self.key = key
        self.rank = rank

    def compare(self, a, b) -> int:
        for i, _ in (a, b):
            if not 0 <= i < self.rank:
                raise IndexError(f"basis index {i + 1} outside rank {self.rank}")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


class SchreyerOrder(ModuleOrder):
    """The Schreyer order induced by a tuple ``F`` on ``R^m``.

    ``x^a e_i < x^b e_j`` iff ``x^a LM(f_i) < x^b LM(f_j)``, or the two
    products agree and ``i < j``.
    """

    def __init__(self, F):
        F = list(F)
        if not F:
            raise ValueError("Schreyer order needs a nonempty tuple")
        self.ring = F[0].ring
        self.lms = tuple(f.lm for f in F)
        base = self.ring.key
        lms = self.lms
        add = operator.add

        def key(mm):
            i, a = mm
            return (base(tuple(map(add, a, lms[i]))), i)

        super().__init__(key, len(F))


class PositionOverTerm(ModuleOrder):
    """Compare basis indices first, then the monomials with the ring order."""

    def __init__(self, ring: PolynomialRing, rank: int):
        base = ring.key

        def key(mm):
            return (mm[0], base(mm[1]))

        super().__init__(key, rank)


def schreyer_compare(a, b, order: SchreyerOrder) -> int:
    return order.compare(a, b)


# --------------------------------------------------------------------------
# elements
# --------------------------------------------------------------------------

def _maxpy(p: dict, terms: dict, a, shift: tuple | None = None):
    """In place ``p += a * x^shift * terms`` for module dicts."""
    add = operator.add
    for (i, m), c in terms.items():
        if shift is not None:
            m = tuple(map(add, m, shift))
        k = (i, m)
        v = p.get(k)
        if v is None:
            p[k] = a * c
        else:
            v = v + a * c
            if v:
                p[k] = v
            else:
                del p[k]


def _mul_poly(poly_terms: dict, terms: dict, out: dict | None = None, sign=1) -> dict:
    out = {} if out is None else out
    for m, c in poly_terms.items():
        _maxpy(out, terms, sign * c, m)
    return out


class ModuleElement:
    """An element of the free module ``R^rank``."""

    __slots__ = ("ring", "rank", "terms", "_hash")

    def __init__(self, ring: PolynomialRing, rank: int, terms: dict | None = None):
        self.ring = ring
        self.rank = rank
        self.terms = terms if terms is not None else {}
        self._hash = None

    @classmethod
    def basis(cls, ring, rank, i, mono=None, coeff=1):
        mono = ring.zero_mono if mono is None else tuple(mono)
        return cls(ring, rank, {(i, mono): ring.field(coeff)})

    @classmethod
    def from_components(cls, comps) -> ModuleElement:
        comps = list(comps)
        ring = comps[0].ring
        terms = {}
        for i, f in enumerate(comps):
            for m, c in f.terms.items():
                terms[(i, m)] = c
        return cls(ring, len(comps), terms)

    def component(self, i: int) -> Polynomial:
        return Polynomial(self.ring, {m: c for (j, m), c in self.terms.items() if j == i})

    def components(self) -> list:
        comps = [{} for _ in range(self.rank)]
        for (j, m), c in self.terms.items():
            comps[j][m] = c
        return [Polynomial(self.ring, d) for d in comps]

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def lead(self, order: ModuleOrder):
        if not self.terms:
            raise ValueError("the zero element has no leading term")
        mm = max(self.terms, key=order.key)
        return mm, self.terms[mm]

    def lm(self, order: ModuleOrder):
        return self.lead(order)[0]

    def monic(self, order: ModuleOrder) -> ModuleElement:
        if not self.terms:
            return self
        _, c = self.lead(order)
        if c == 1:
            return self
        inv = self.ring.field.one / c
        return ModuleElement(self.ring, self.rank, {k: v * inv for k, v in self.terms.items()})

    def _like(self, terms):
        return ModuleElement(self.ring, self.rank, terms)

    def _check(self, other):
        if not isinstance(other, ModuleElement) or other.rank != self.rank \
                or other.ring != self.ring:
            raise ValueError("module elements live in different free modules")

    def __add__(self, other):
        self._check(other)
        p = dict(self.terms)
        _maxpy(p, other.terms, self.ring.field.one)
        return self._like(p)

    def __sub__(self, other):
        self._check(other)
        p = dict(self.terms)
        _maxpy(p, other.terms, -self.ring.field.one)
        return self._like(p)

    def __neg__(self):
        return self._like({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("ring mismatch")
            return self._like(_mul_poly(other.terms, self.terms))
        c = self.ring.field(other)
        if not c:
            return self._like({})
        return self._like({k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def mul_term(self, mono, c=1) -> ModuleElement:
        p = {}
        _maxpy(p, self.terms, self.ring.field(c), tuple(mono))
        return self._like(p)

    def __eq__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self.rank == other.rank and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rank, frozenset(self.terms.items())))
        return self._hash

    def to_string(self, order: ModuleOrder | None = None) -> str:
        from .textio import format_module_element
        return format_module_element(self.terms, self.ring, order)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"ModuleElement({self})"


def image_of(u: ModuleElement, F) -> Polynomial:
    """The value of ``e_i -> f_i`` at ``u``."""
    F = list(F)
    if u.rank != len(F):
        raise ValueError(f"rank {u.rank} does not match tuple length {len(F)}")
    ring = F[0].ring if F else u.ring
    p = {}
    from .ring import _axpy
    for (i, m), c in u.terms.items():
        _axpy(p, F[i].terms, c, m)
    return Polynomial(ring, p)


# --------------------------------------------------------------------------
# monomial submodules
# --------------------------------------------------------------------------

def minimal_monomials(monos) -> list:
    """Minimal generators of the monomial ideal spanned by ``monos`` (sorted)."""
    uniq = sorted(set(map(tuple, monos)), key=lambda a: (sum(a), a))
    out = []
    for a in uniq:
        if not any(divides(b, a) for b in out):
            out.append(a)
    return sorted(out)


def minimal_module_monomials(mms) -> list:
    """Minimal generators of a monomial submodule, sorted by index then exponents."""
    by_index = {}
    for i, a in mms:
        by_index.setdefault(i, []).append(a)
    return [(i, a) for i in sorted(by_index) for a in minimal_monomials(by_index[i])]


def in_monomial_module(mm, gens) -> bool:
    i, a = mm
    return any(j == i and divides(b, a) for j, b in gens)


def monomial_modules_equal(A, B) -> bool:
    return minimal_module_monomials(A) == minimal_module_monomials(B)


# --------------------------------------------------------------------------
# division and Gröbner bases
# --------------------------------------------------------------------------

def _reduce(p: dict, divs: list, leads: list, lcs: list, key, tail_reduce: bool,
            quotients: list | None = None) -> dict:
    """Reduce the module dict ``p`` (consumed) by ``divs``; lowest index first."""
    by_pos = {}
    for k, (i, _) in enumerate(leads):
        by_pos.setdefault(i, []).append(k)
    r = {}
    while p:
        mm = max(p, key=key)
        i, a = mm
        pick = None
        for k in by_pos.get(i, ()):
            if divides(leads[k][1], a):
                pick = k
                break
        if pick is None:
            if not tail_reduce:
                r.update(p)
                break
            r[mm] = p.pop(mm)
            continue
        coef = p[mm] / lcs[pick]
        shift = mono_div(a, leads[pick][1])
        if quotients is not None:
            q = quotients[pick]
            q[shift] = q.get(shift, 0) + coef
        _maxpy(p, divs[pick], -coef, shift)
    return r


def module_divide(u: ModuleElement, V, order: ModuleOrder, tail_reduce: bool = True):
    """Divide ``u`` by the elements ``V``; returns ``(quotients, remainder)``.

    ``u == sum(h_k v_k) + r`` and no term of ``r`` (only its leading term when
    ``tail_reduce`` is off) is divisible by a leading monomial of ``V`` with the
    same basis index.
    """
    V = list(V)
    for v in V:
        u._check(v)
        if not v.terms:
            raise ZeroDivisionError("division by a zero module element")
    leads, lcs = [], []
    for v in V:
        mm, c = v.lead(order)
        leads.append(mm)
        lcs.append(c)
    quots = [{} for _ in V]
    r = _reduce(dict(u.terms), [v.terms for v in V], leads, lcs, order.key, tail_reduce, quots)
    ring = u.ring
    return [Polynomial(ring, {m: c for m, c in q.items() if c}) for q in quots], u._like(r)


def spoly_module(a: dict, lead_a, lc_a, b: dict, lead_b, lc_b) -> dict:
    """Module S-polynomial of two raw elements with leads in the same position."""
    lcm = mono_lcm(lead_a[1], lead_b[1])
    p = {}
    _maxpy(p, a, _inv(lc_a), mono_div(lcm, lead_a[1]))
    _maxpy(p, b, -_inv(lc_b), mono_div(lcm, lead_b[1]))
    return p


def _inv(c):
    return c ** -1


def _gb_core(elems: list, key, reduce: bool = True) -> list:
    """Buchberger on raw module dicts under the order ``key``.

    S-pairs are formed only between elements whose leading monomials share a
    basis index.  Pairs are treated smallest lcm first and Buchberger's chain
    criterion discards redundant ones.  Returns a reduced Gröbner basis (monic,
    sorted by leading monomial) when ``reduce`` is set.
    """
    G, leads, lcs = [], [], []

    def lead_of(d):
        mm = max(d, key=key)
        return mm, d[mm]

    pending = {}

    def add(d):
        mm, c = lead_of(d)
        n = len(G)
        G.append(d)
        leads.append(mm)
        lcs.append(c)
        for k in range(n):
            if leads[k][0] == mm[0]:
                pending[(k, n)] = (mm[0], mono_lcm(leads[k][1], mm[1]))

    for d in elems:
        d = _reduce(dict(d), G, leads, lcs, key, False)
        if d:
            add(d)

    while pending:
        pair = min(pending, key=lambda pr: (key(pending[pr]), pr))
        i, lcm = pending.pop(pair)
        a, b = pair
        skip = False
        for k in range(len(G)):
            if k in pair or leads[k][0] != i:
                continue
            if divides(leads[k][1], lcm) \
                    and (min(a, k), max(a, k)) not in pending \
                    and (min(b, k), max(b, k)) not in pending:
                skip = True
                break
        if skip:
            continue
        la, lb = leads[a], leads[b]
        p = {}
        _maxpy(p, G[a], _inv(lcs[a]), mono_div(lcm, la[1]))
        _maxpy(p, G[b], -_inv(lcs[b]), mono_div(lcm, lb[1]))
        p = _reduce(p, G, leads, lcs, key, False)
        if p:
            add(p)

    live = range(len(G))
    # minimalize: drop elements whose leading monomial is a multiple of another's
    keep = []
    for k in sorted(live, key=lambda k: (key(leads[k]), k)):
        i, a = leads[k]
        if any(leads[j][0] == i and divides(leads[j][1], a) for j in keep):
            continue
        keep.append(k)
    if not reduce:
        return [G[k] for k in keep]
    out = []
    kl = [leads[k] for k in keep]
    for idx, k in enumerate(keep):
        others = [j for j in range(len(keep)) if j != idx]
        d = dict(G[k])
        c = lcs[k]
        mm = leads[k]
        lead_term = d.pop(mm)
        tail = _reduce(d, [G[keep[j]] for j in others], [kl[j] for j in others],
                       [lcs[keep[j]] for j in others], key, True)
        tail[mm] = lead_term
        inv = _inv(c)
        out.append({t: v * inv for t, v in tail.items()})
    return out


def module_buchberger(V, order: ModuleOrder, reduce: bool = True) -> list:
    """A Gröbner basis of the submodule generated by ``V`` (reduced by default)."""
    V = [v for v in V if v.terms]
    if not V:
        return []
    ring, rank = V[0].ring, V[0].rank
    for v in V:
        V[0]._check(v)
    return [ModuleElement(ring, rank, d) for d in _gb_core([v.terms for v in V], order.key, reduce)]


def leading_module_monomials(G, order: ModuleOrder) -> list:
    return minimal_module_monomials([g.lm(order) for g in G if g.terms])
