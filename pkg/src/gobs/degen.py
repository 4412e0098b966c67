"""Weight vectors, homogenization by an extra variable ``t`` and the flatness
test for the family ``R[t]/<F^(t)>`` over the affine line.

The image of ``Syz(F^(t))`` under ``t -> 0`` is computed twice: directly from
a syzygy basis over ``R[t]``, and as the module of top terms of a syzygy basis
of ``F`` under the weight-refined order.  The two must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import ceil, gcd, lcm

from .errors import IncompatibleWeightError, InconsistencyError
from .freemod import (
    ModuleElement, ModuleOrder, SchreyerOrder, in_monomial_module,
    leading_module_monomials, minimal_module_monomials, module_buchberger,
    monomial_modules_equal,
)
from .obstruct import minimal_resolution, quotient_module
from .ring import Polynomial, PolynomialRing, TermOrder
from .syzygy import _check_tuple, leading_sets, syzygy_basis

__all__ = [
    "WeightVector", "HomogenizedTuple", "FlatnessReport", "compatible_weight",
    "check_weight", "homogenize", "homogenize_tuple", "substitute_t", "top_terms",
    "top_terms_module", "degeneration_check", "weight_support",
]


@dataclass(frozen=True)
class WeightVector:
    """A vector of positive integers, optionally with the monomial set it was
    certified on."""

    weights: tuple
    certified_on: tuple = ()

    def __post_init__(self):
        w = tuple(self.weights)
        if not w or any(not isinstance(c, int) or c < 1 for c in w):
            raise ValueError(f"weights must be positive integers, got {w}")
        object.__setattr__(self, "weights", w)

    def __len__(self):
        return len(self.weights)

    def degree(self, a) -> int:
        return sum(w * e for w, e in zip(self.weights, a))


def _dot(w, a):
    return sum(x * y for x, y in zip(w, a))


# --------------------------------------------------------------------------
# weight search
# --------------------------------------------------------------------------

def _normalize(cons):
    """Deduplicate ``a.x >= b`` constraints up to positive scaling, keeping
    the strongest right-hand side per direction."""
    best = {}
    for a, b in cons:
        pivot = next((abs(c) for c in a if c), None)
        if pivot is None:
            if b > 0:
                raise ValueError("weight constraints are infeasible")
            continue
        a = tuple(c / pivot for c in a)
        b = b / pivot
        if a not in best or b > best[a]:
            best[a] = b
    return list(best.items())


def _fourier_motzkin(cons, n):
    """A rational point satisfying every ``a.x >= b``; ``None`` if infeasible."""
    try:
        cur = _normalize(cons)
    except ValueError:
        return None
    eliminated = []
    for v in range(n - 1, 0, -1):
        pos = [c for c in cur if c[0][v] > 0]
        neg = [c for c in cur if c[0][v] < 0]
        rest = [c for c in cur if c[0][v] == 0]
        eliminated.append((v, pos, neg))
        for ap, bp in pos:
            for an, bn in neg:
                sp, sn = ap[v], -an[v]
                a = tuple(x / sp + y / sn for x, y in zip(ap, an))
                rest.append((a, bp / sp + bn / sn))
        try:
            cur = _normalize(rest)
        except ValueError:
            return None
    x = [Fraction(0)] * n

    def pick(v, constraints):
        lo, hi = None, None
        for a, b in constraints:
            c = a[v]
            if c == 0:
                continue
            bound = (b - sum(a[k] * x[k] for k in range(n) if k != v)) / c
            if c > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None and hi is not None and lo > hi:
            return None
        if lo is None:
            return Fraction(0) if hi is None else min(Fraction(0), hi)
        up = Fraction(ceil(lo))
        return up if hi is None or up <= hi else lo

    val = pick(0, cur)
    if val is None:
        return None
    x[0] = val
    for v, pos, neg in reversed(eliminated):
        val = pick(v, pos + neg)
        if val is None:
            return None
        x[v] = val
    return x


def check_weight(w, A, order: TermOrder) -> WeightVector:
    """Certify ``w`` on ``A`` by comparing every pair; raise
    ``IncompatibleWeightError`` naming the first violating pair."""
    weights = tuple(w.weights if isinstance(w, WeightVector) else w)
    A = sorted(set(map(tuple, A)), key=order.key)
    for a in A:
        if len(a) != len(weights):
            raise ValueError("weight length does not match the number of variables")
    degs = [_dot(weights, a) for a in A]
    for i in range(len(A)):
        for j in range(i + 1, len(A)):
            if degs[i] >= degs[j]:
                raise IncompatibleWeightError(
                    A[i], A[j],
                    f"weight {weights} is not compatible: {A[i]} < {A[j]} in the term order "
                    f"but their weights are {degs[i]} >= {degs[j]}")
    return WeightVector(weights, tuple(A))


def compatible_weight(A, order: TermOrder, nvars: int | None = None) -> WeightVector:
    """A positive integer vector ranking the monomials of ``A`` exactly as ``order`` does.

    Only consecutive monomials in sorted order need a constraint; the system is
    solved exactly by Fourier-Motzkin elimination and the result is scaled to
    coprime integers and certified on all pairs.
    """
    A = sorted(set(map(tuple, A)), key=order.key)
    if nvars is None:
        if not A:
            raise ValueError("cannot infer the number of variables from an empty set")
        nvars = len(A[0])
    cons = []
    for k in range(nvars):
        cons.append((tuple(Fraction(int(i == k)) for i in range(nvars)), Fraction(1)))
    for a, b in zip(A, A[1:]):
        cons.append((tuple(Fraction(y - x) for x, y in zip(a, b)), Fraction(1)))
    x = _fourier_motzkin(cons, nvars)
    if x is None:
        raise ValueError("no compatible weight exists; the term order is inconsistent on this set")
    scale = reduce(lcm, (v.denominator for v in x), 1)
    ints = [int(v * scale) for v in x]
    g = reduce(gcd, ints)
    return check_weight(tuple(v // g for v in ints), A, order)


# --------------------------------------------------------------------------
# homogenization and top terms
# --------------------------------------------------------------------------

def _weights(w):
    return w.weights if isinstance(w, WeightVector) else tuple(w)


def weighted_degree(f: Polynomial, w) -> int:
    if not f.terms:
        raise ValueError("the zero polynomial has no weighted degree")
    ws = _weights(w)
    return max(_dot(ws, a) for a in f.terms)


def homogenize(f: Polynomial, w, ring_t: PolynomialRing | None = None) -> Polynomial:
    """``sum c_a t^(deg_w f - w.a) x^a`` in ``R[t]``."""
    ws = _weights(w)
    top = weighted_degree(f, ws)
    ring_t = ring_t or f.ring.with_extra_variable("t")
    return Polynomial(ring_t, {a + (top - _dot(ws, a),): c for a, c in f.terms.items()})


def substitute_t(g: Polynomial, ring: PolynomialRing, value: int) -> Polynomial:
    """Set the last variable of ``g`` to ``0`` or ``1`` and land in ``ring``."""
    if value not in (0, 1):
        raise ValueError("only t = 0 and t = 1 are supported")
    out = {}
    for a, c in g.terms.items():
        if value == 0 and a[-1]:
            continue
        m = a[:-1]
        v = out.get(m, 0) + c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return Polynomial(ring, out)


def top_terms(f: Polynomial, w) -> Polynomial:
    ws = _weights(w)
    top = weighted_degree(f, ws)
    return Polynomial(f.ring, {a: c for a, c in f.terms.items() if _dot(ws, a) == top})


def top_terms_module(v: ModuleElement, w, F) -> ModuleElement:
    """Terms of ``v`` of maximal degree under ``deg(x^a e_i) = w.a + deg_w f_i``."""
    if not v.terms:
        raise ValueError("the zero element has no top terms")
    ws = _weights(w)
    shifts = [weighted_degree(f, ws) for f in F]
    deg = {mm: _dot(ws, mm[1]) + shifts[mm[0]] for mm in v.terms}
    top = max(deg.values())
    return ModuleElement(v.ring, v.rank, {mm: c for mm, c in v.terms.items() if deg[mm] == top})


@dataclass(frozen=True)
class HomogenizedTuple:
    elements: tuple
    source: tuple
    weight: WeightVector


def homogenize_tuple(F, w) -> HomogenizedTuple:
    F = tuple(f.monic() for f in _check_tuple(F))
    ring_t = F[0].ring.with_extra_variable("t")
    w = w if isinstance(w, WeightVector) else WeightVector(tuple(w))
    return HomogenizedTuple(tuple(homogenize(f, w, ring_t) for f in F), F, w)


# --------------------------------------------------------------------------
# flatness
# --------------------------------------------------------------------------

def weight_support(F) -> list:
    """Monomials of ``F`` together with ``x^a LM(f_i)`` for each term
    ``x^a e_i`` of the syzygy basis of ``F``."""
    F = _check_tuple(F)
    A = {a for f in F for a in f.terms}
    for v in syzygy_basis(F).elements:
        for i, a in v.terms:
            A.add(tuple(x + y for x, y in zip(a, F[i].lm)))
    return sorted(A)


@dataclass(frozen=True)
class FlatnessReport:
    weight: WeightVector
    lims: tuple           # minimal generators of <LImS>, via syzygies over R[t]
    lims_top_terms: tuple  # the same module via top terms of a syzygy basis of F
    ls: tuple
    lsl: tuple
    flat: bool
    routes_agree: bool
    chain_holds: bool
    m_ranks: list         # <LImS>/<LS>
    n_ranks: list         # <LSL>/<LImS>


def _contained(A, B) -> bool:
    return all(in_monomial_module(a, B) for a in A)


def _lims_over_t(F, w, order):
    ht = homogenize_tuple(F, w)
    ring, m = F[0].ring, len(F)
    images = []
    for v in syzygy_basis(ht.elements).elements:
        terms = {(i, a[:-1]): c for (i, a), c in v.terms.items() if a[-1] == 0}
        if terms:
            images.append(ModuleElement(ring, m, terms))
    return tuple(leading_module_monomials(module_buchberger(images, order), order))


def _lims_top_terms(F, w, order):
    ws = w.weights
    shifts = [weighted_degree(f, ws) for f in F]
    skey = order.key

    def key(mm):
        return (_dot(ws, mm[1]) + shifts[mm[0]], skey(mm))

    V = syzygy_basis(F).elements
    gb = module_buchberger(V, ModuleOrder(key, len(F)))
    tops = [top_terms_module(v, ws, F) for v in gb]
    return tuple(leading_module_monomials(module_buchberger(tops, order), order))


def degeneration_check(F, weight=None) -> FlatnessReport:
    """Decide flatness of ``R[t]/<F^(t)>`` and split the obstruction module.

    Without ``weight`` a compatible one is derived from :func:`weight_support`;
    a supplied weight is certified on the same set first.
    """
    F = tuple(f.monic() for f in _check_tuple(F))
    ring = F[0].ring
    A = weight_support(F)
    if weight is None:
        w = compatible_weight(A, ring.order, ring.nvars)
    else:
        w = check_weight(weight, A, ring.order)
    order = SchreyerOrder(F)
    sets = leading_sets(F)
    lims = _lims_over_t(F, w, order)
    lims2 = _lims_top_terms(F, w, order)
    agree = monomial_modules_equal(lims, lims2)
    chain = _contained(sets.ls, lims) and _contained(lims, sets.lsl)
    if not agree or not chain:
        raise InconsistencyError(
            f"degeneration invariants failed (routes agree: {agree}, chain: {chain})")
    flat = _contained(sets.lsl, lims)
    shifts = tuple(sum(f.lm) for f in F)
    m_ranks = minimal_resolution(quotient_module(ring, shifts, lims, sets.ls)).ranks
    n_ranks = minimal_resolution(quotient_module(ring, shifts, sets.lsl, lims)).ranks
    return FlatnessReport(w, tuple(minimal_module_monomials(lims)),
                          tuple(minimal_module_monomials(lims2)), sets.ls, sets.lsl,
                          flat, agree, chain, m_ranks, n_ranks)
