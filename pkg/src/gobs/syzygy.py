"""Syzygies of a tuple F and of its leading monomials.

``Syz(LM F)`` is known in closed form (the Schreyer generators).  ``Syz(F)``
is computed by running Buchberger on ``F`` while tracking how each new element
is written in terms of ``F``, lifting the Schreyer syzygies of the resulting
Gröbner basis back to ``R^m``, and finishing with a module Gröbner basis under
the Schreyer order of ``F``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import InconsistencyError
from .freemod import (
    ModuleElement, SchreyerOrder, _gb_core, _inv, _maxpy, _mul_poly,
    in_monomial_module, minimal_module_monomials,
)
from .ring import _axpy, coprime, divides, mono_div, mono_lcm

__all__ = [
    "SyzygyBasis", "LeadingSets", "lm_syzygy_generators", "syzygy_generators",
    "syzygy_basis", "leading_sets",
]


def _check_tuple(F):
    F = tuple(F)
    if not F:
        raise ValueError("empty tuple")
    ring = F[0].ring
    for f in F:
        if f.ring != ring:
            raise ValueError("polynomials live in different rings")
        if not f.terms:
            raise ValueError("the tuple contains the zero polynomial")
    return F


def lm_syzygy_generators(F) -> list:
    """The Schreyer generators ``m_i e_i - m_j e_j`` (i < j) of ``Syz(LM F)``.

    Under the Schreyer order of ``F`` their leading monomials are the
    ``m_j e_j``, which generate the initial module of ``Syz(LM F)``.
    """
    F = _check_tuple(F)
    ring, m = F[0].ring, len(F)
    one = ring.field.one
    out = []
    for i in range(m):
        for j in range(i + 1, m):
            lcm = mono_lcm(F[i].lm, F[j].lm)
            terms = {(i, mono_div(lcm, F[i].lm)): one, (j, mono_div(lcm, F[j].lm)): -one}
            out.append(ModuleElement(ring, m, terms))
    return out


def _lsl_monomials(F) -> list:
    out = []
    for j in range(1, len(F)):
        for i in range(j):
            out.append((j, mono_div(mono_lcm(F[i].lm, F[j].lm), F[j].lm)))
    return minimal_module_monomials(out)


def _poly_reduce_tracked(p: dict, G, leads, lcs, key, quots):
    """Top-reduce ``p`` by ``G`` (lowest index first), recording quotients."""
    while p:
        m = max(p, key=key)
        for k, lm in enumerate(leads):
            if divides(lm, m):
                break
        else:
            return p
        coef = p[m] / lcs[k]
        shift = mono_div(m, lm)
        q = quots.setdefault(k, {})
        q[shift] = q.get(shift, 0) + coef
        _axpy(p, G[k], -coef, shift)
    return p


def _extended_buchberger(F):
    """Gröbner basis ``G`` of ``<F>`` with ``F`` as a prefix, plus the rows
    expressing each ``g_k`` as a combination of ``F`` (raw module dicts)."""
    ring, m = F[0].ring, len(F)
    key = ring.key
    one = ring.field.one
    G = [dict(f.terms) for f in F]
    reps = [{(i, ring.zero_mono): one} for i in range(m)]
    leads = [f.lm for f in F]
    lcs = [f.lc for f in F]
    pending = {(i, j): mono_lcm(leads[i], leads[j]) for i in range(m) for j in range(i + 1, m)}

    while pending:
        pair = min(pending, key=lambda pr: (key(pending[pr]), pr))
        lcm = pending.pop(pair)
        a, b = pair
        if coprime(leads[a], leads[b]):
            continue
        if any(k not in pair and divides(leads[k], lcm)
               and (min(a, k), max(a, k)) not in pending
               and (min(b, k), max(b, k)) not in pending for k in range(len(G))):
            continue
        sa, sb = mono_div(lcm, leads[a]), mono_div(lcm, leads[b])
        ca, cb = _inv(lcs[a]), -_inv(lcs[b])
        p = {}
        _axpy(p, G[a], ca, sa)
        _axpy(p, G[b], cb, sb)
        quots = {}
        p = _poly_reduce_tracked(p, G, leads, lcs, key, quots)
        if not p:
            continue
        rep = {}
        _maxpy(rep, reps[a], ca, sa)
        _maxpy(rep, reps[b], cb, sb)
        for k, q in quots.items():
            _mul_poly(q, reps[k], rep, -1)
        n = len(G)
        G.append(p)
        reps.append(rep)
        lm = max(p, key=key)
        leads.append(lm)
        lcs.append(p[lm])
        for k in range(n):
            pending[(k, n)] = mono_lcm(leads[k], lm)
    return G, reps, leads, lcs


def syzygy_generators(F) -> list:
    """A generating set of ``Syz(F)`` (not yet a Gröbner basis)."""
    F = _check_tuple(F)
    ring, m = F[0].ring, len(F)
    key = ring.key
    G, reps, leads, lcs = _extended_buchberger(F)
    out = []
    for i in range(len(G)):
        # Schreyer syzygies tau_ij (j > i) lead with (lcm/LM g_i) eps_i; only the
        # ones with minimal leading monomial are needed to generate Syz(G).
        cands = {}
        for j in range(i + 1, len(G)):
            mu = mono_div(mono_lcm(leads[i], leads[j]), leads[i])
            cands.setdefault(mu, j)
        mus = sorted(cands, key=lambda a: (sum(a), a))
        kept = []
        for mu in mus:
            if not any(divides(nu, mu) for nu in kept):
                kept.append(mu)
        for mu in kept:
            j = cands[mu]
            lcm = mono_lcm(leads[i], leads[j])
            si, sj = mu, mono_div(lcm, leads[j])
            ci, cj = _inv(lcs[i]), -_inv(lcs[j])
            p = {}
            _axpy(p, G[i], ci, si)
            _axpy(p, G[j], cj, sj)
            quots = {}
            rest = _poly_reduce_tracked(p, G, leads, lcs, key, quots)
            if rest:
                raise InconsistencyError("S-polynomial of a Gröbner basis did not reduce to zero")
            u = {}
            _maxpy(u, reps[i], ci, si)
            _maxpy(u, reps[j], cj, sj)
            for k, q in quots.items():
                _mul_poly(q, reps[k], u, -1)
            if u:
                out.append(ModuleElement(ring, m, u))
    return out


@dataclass(frozen=True)
class SyzygyBasis:
    """A Gröbner basis of ``Syz(F)`` under the Schreyer order of ``F``."""

    F: tuple
    order: SchreyerOrder = field(repr=False)
    elements: tuple
    leading: tuple  # minimal generators of <LM(Syz F)>

    def contains_lm(self, mm) -> bool:
        return in_monomial_module(mm, self.leading)


@lru_cache(maxsize=512)
def _syzygy_basis(F: tuple) -> SyzygyBasis:
    order = SchreyerOrder(F)
    gens = syzygy_generators(F)
    ring, m = F[0].ring, len(F)
    gb = [ModuleElement(ring, m, d) for d in _gb_core([g.terms for g in gens], order.key)]
    leading = minimal_module_monomials([g.lm(order) for g in gb])
    return SyzygyBasis(F, order, tuple(gb), tuple(leading))


def syzygy_basis(F) -> SyzygyBasis:
    """Reduced Gröbner basis of ``Syz(F)`` (monic elements) under the Schreyer order."""
    return _syzygy_basis(_check_tuple(F))


@dataclass(frozen=True)
class LeadingSets:
    """Minimal generators of ``<LM(Syz F)>`` (``ls``) and ``<LM(Syz LM F)>`` (``lsl``)."""

    ls: tuple
    lsl: tuple

    def equal(self) -> bool:
        return all(in_monomial_module(s, self.ls) for s in self.lsl)


def leading_sets(F) -> LeadingSets:
    F = _check_tuple(F)
    ls = syzygy_basis(F).leading
    lsl = tuple(_lsl_monomials(F))
    for s in ls:
        if not in_monomial_module(s, lsl):
            raise InconsistencyError(f"LM(Syz F) generator {s} is not in LM(Syz LM F)")
    return LeadingSets(ls, lsl)
