"""Monomial quotient modules ``<LSL>/<LS>`` and their minimal free resolutions.

A quotient of monomial submodules of ``R^m`` splits as a direct sum over the
basis indices of quotients ``L_j/K_j`` of monomial ideals.  Each summand is
presented as a cokernel, resolved with a Schreyer frame and then minimized
by cancelling unit entries.  Basis element ``x^a e_j`` has degree
``|a| + deg LM(f_j)``.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb

from .errors import InconsistencyError
from .freemod import _gb_core, _inv, _maxpy, _reduce, in_monomial_module, minimal_monomials
from .ring import Polynomial, PolynomialRing, divides, mono_div, mono_lcm, mono_mul
from .syzygy import _check_tuple, leading_sets

__all__ = [
    "ObstructionModule", "ResolutionReport", "gobs", "quotient_module",
    "minimal_resolution", "hilbert_series", "euler_check", "format_betti",
]


@dataclass(frozen=True)
class ObstructionModule:
    """``<numerator>/<denominator>`` inside ``R^rank``.

    ``components`` lists ``(j, L_j, K_j)`` for every index whose numerator
    ideal is nonzero; ``shifts[j]`` is the degree of ``e_j``.
    """

    ring: PolynomialRing
    rank: int
    shifts: tuple
    numerator: tuple
    denominator: tuple
    components: tuple

    @property
    def nonzero_generators(self) -> tuple:
        """Numerator generators that survive in the quotient."""
        return tuple(s for s in self.numerator if not in_monomial_module(s, self.denominator))

    def is_zero(self) -> bool:
        return not self.nonzero_generators


def _split(mms) -> dict:
    out = {}
    for i, a in mms:
        out.setdefault(i, []).append(a)
    return {i: tuple(minimal_monomials(v)) for i, v in out.items()}


def quotient_module(ring, shifts, numerator, denominator) -> ObstructionModule:
    """``<numerator>/<denominator>``; raises if the denominator is not contained."""
    num, den = _split(numerator), _split(denominator)
    for i, K in den.items():
        L = num.get(i, ())
        for n in K:
            if not any(divides(l, n) for l in L):
                raise InconsistencyError(f"denominator generator {n} at index {i + 1} "
                                         "is not in the numerator")
    comps = tuple((i, num[i], den.get(i, ())) for i in sorted(num))
    flat_num = tuple((i, a) for i in sorted(num) for a in num[i])
    flat_den = tuple((i, a) for i in sorted(den) for a in den[i])
    return ObstructionModule(ring, len(shifts), tuple(shifts), flat_num, flat_den, comps)


def gobs(F) -> ObstructionModule:
    """The obstruction module ``<LM Syz(LM F)>/<LM Syz F>`` of a tuple."""
    F = _check_tuple(F)
    sets = leading_sets(F)
    return quotient_module(F[0].ring, tuple(sum(f.lm) for f in F), sets.lsl, sets.ls)


# --------------------------------------------------------------------------
# resolutions
# --------------------------------------------------------------------------

@dataclass
class ResolutionReport:
    """A free resolution ``F_0 <- F_1 <- ...`` of a graded module.

    ``differentials[i]`` is the map ``F_{i+1} -> F_i`` stored as one dict
    per column, mapping row indices to nonzero polynomial entries.
    """

    ranks: list
    differentials: list
    degrees: list
    minimal: bool
    ring: PolynomialRing | None = None
    components: list = field(default_factory=list)

    def compose_to_zero(self) -> bool:
        for d, e in zip(self.differentials, self.differentials[1:]):
            for col in e:
                acc = {}
                for k, q in col.items():
                    for r, p in d[k].items():
                        acc[r] = acc[r] + q * p if r in acc else q * p
                if any(v.terms for v in acc.values()):
                    return False
        return True

    def has_unit_entries(self) -> bool:
        return any(p.is_constant() for d in self.differentials for col in d for p in col.values())

    def is_graded(self) -> bool:
        for i, d in enumerate(self.differentials):
            for k, col in enumerate(d):
                for r, p in col.items():
                    want = self.degrees[i + 1][k] - self.degrees[i][r]
                    if any(sum(m) != want for m in p.terms):
                        return False
        return True


def _sort_for_next(elems, leads, level, nvars):
    """Order a Gröbner basis so that, within each position, the exponent of
    the variable ``level`` in the leading monomial does not increase."""
    if level >= nvars:
        return list(range(len(elems)))
    return sorted(range(len(elems)), key=lambda k: (leads[k][0], -leads[k][1][level]))


def _next_syzygies(cur, key, ring):
    """Schreyer syzygies of the Gröbner basis ``cur`` under ``key``.

    Returns ``(taus, next_key)``; the ``taus`` form a Gröbner basis of the
    syzygy module under the induced order.
    """
    leads, lcs = [], []
    for d in cur:
        mm = max(d, key=key)
        leads.append(mm)
        lcs.append(d[mm])

    def next_key(mm, _leads=leads, _key=key):
        i, a = mm
        pos, b = _leads[i]
        return (_key((pos, mono_mul(a, b))), -i)

    taus = []
    for i in range(len(cur)):
        cands = {}
        for j in range(i + 1, len(cur)):
            if leads[j][0] != leads[i][0]:
                continue
            mu = mono_div(mono_lcm(leads[i][1], leads[j][1]), leads[i][1])
            cands.setdefault(mu, j)
        kept = []
        for mu in sorted(cands, key=lambda a: (sum(a), a)):
            if not any(divides(nu, mu) for nu in kept):
                kept.append(mu)
        for mu in kept:
            j = cands[mu]
            lcm = mono_mul(mu, leads[i][1])
            nu = mono_div(lcm, leads[j][1])
            ci, cj = _inv(lcs[i]), -_inv(lcs[j])
            s = {}
            _maxpy(s, cur[i], ci, mu)
            _maxpy(s, cur[j], cj, nu)
            quots = [{} for _ in cur]
            if _reduce(s, cur, leads, lcs, key, True, quots):
                raise InconsistencyError("Schreyer frame element is not a Gröbner basis")
            tau = {(i, mu): ci, (j, nu): cj}
            for k, q in enumerate(quots):
                for m, c in q.items():
                    if not c:
                        continue
                    mm = (k, m)
                    v = tau.get(mm, 0) - c
                    if v:
                        tau[mm] = v
                    else:
                        tau.pop(mm, None)
            taus.append(tau)
    return taus, next_key


def _columns(elems, ring):
    cols = []
    for d in elems:
        col = {}
        for (i, m), c in d.items():
            col.setdefault(i, {})[m] = c
        cols.append({i: Polynomial(ring, t) for i, t in col.items()})
    return cols


def _frame(ring, gens, kgens, shift):
    """Non-minimal resolution of ``<gens>/<kgens>`` (one monomial-ideal summand)."""
    one = ring.field.one
    rels = []
    for q in range(len(gens)):
        for p in range(q):
            lcm = mono_lcm(gens[p], gens[q])
            rels.append({(p, mono_div(lcm, gens[p])): one, (q, mono_div(lcm, gens[q])): -one})
    for n in kgens:
        p = next(p for p, g in enumerate(gens) if divides(g, n))
        rels.append({(p, mono_div(n, gens[p])): one})
    base = ring.key

    def key(mm):
        return (mm[0], base(mm[1]))

    cur = _gb_core(rels, key)
    degrees = [[shift + sum(g) for g in gens]]
    mats = []
    level = 0
    while cur:
        leads = [max(d, key=key) for d in cur]
        perm = _sort_for_next(cur, leads, level, ring.nvars)
        cur = [cur[k] for k in perm]
        leads = [leads[k] for k in perm]
        degrees.append([sum(a) + degrees[-1][i] for i, a in leads])
        mats.append(_columns(cur, ring))
        cur, key = _next_syzygies(cur, key, ring)
        level += 1
    return degrees, mats


def _minimize(degrees, mats):
    """Cancel unit entries, rightmost differential first."""
    alive = [set(range(len(d))) for d in degrees]
    for i in range(len(mats) - 1, -1, -1):
        cols = mats[i]
        while True:
            hit = None
            for k in sorted(alive[i + 1]):
                for r, p in cols[k].items():
                    if r in alive[i] and p.is_constant():
                        hit = (r, k)
                        break
                if hit:
                    break
            if hit is None:
                break
            r, k = hit
            pivot = cols[k]
            inv = _inv(pivot[r].lc)
            for j in alive[i + 1]:
                if j == k or r not in cols[j]:
                    continue
                f = cols[j].pop(r).scale(inv)
                col = cols[j]
                for s, v in pivot.items():
                    if s == r:
                        continue
                    new = col[s] - f * v if s in col else -(f * v)
                    if new.terms:
                        col[s] = new
                    else:
                        col.pop(s, None)
            alive[i + 1].discard(k)
            alive[i].discard(r)
            if i + 1 < len(mats):
                for col in mats[i + 1]:
                    col.pop(k, None)
    # reindex
    index = [{old: new for new, old in enumerate(sorted(a))} for a in alive]
    new_degrees = [[degrees[i][old] for old in sorted(alive[i])] for i in range(len(degrees))]
    new_mats = []
    for i, cols in enumerate(mats):
        new_mats.append([{index[i][r]: p for r, p in cols[k].items() if r in alive[i]}
                         for k in sorted(alive[i + 1])])
    while new_degrees and not new_degrees[-1]:
        new_degrees.pop()
    new_mats = new_mats[:max(len(new_degrees) - 1, 0)]
    return new_degrees, new_mats


def _resolve_summand(args):
    ring, j, L, K, shift = args
    degrees, mats = _frame(ring, L, K, shift)
    degrees, mats = _minimize(degrees, mats)
    report = ResolutionReport([len(d) for d in degrees], mats, degrees, True, ring)
    report.minimal = not report.has_unit_entries()
    return j, report


def _thread_count(threads):
    if threads is not None:
        return max(1, int(threads))
    try:
        return max(1, int(os.environ.get("GOBS_THREADS", "1")))
    except ValueError:
        return 1


def minimal_resolution(M: ObstructionModule, threads: int | None = None) -> ResolutionReport:
    """Minimal free resolution of ``M`` as the direct sum of its summands' resolutions.

    Summands may be resolved on a thread pool (``threads`` or ``GOBS_THREADS``);
    results are merged in index order.
    """
    jobs = [(M.ring, j, L, K, M.shifts[j]) for j, L, K in M.components
            if not all(any(divides(k, l) for k in K) for l in L)]
    n = _thread_count(threads)
    if n > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=n) as pool:
            parts = list(pool.map(_resolve_summand, jobs))
    else:
        parts = [_resolve_summand(job) for job in jobs]
    length = max((len(r.ranks) for _, r in parts), default=0)
    degrees = [[] for _ in range(length)]
    mats = [[] for _ in range(max(length - 1, 0))]
    for _, rep in parts:
        offsets = [len(d) for d in degrees]
        for i, d in enumerate(rep.degrees):
            degrees[i].extend(d)
        for i, cols in enumerate(rep.differentials):
            mats[i].extend({r + offsets[i]: p for r, p in col.items()} for col in cols)
    ranks = [len(d) for d in degrees]
    minimal = all(r.minimal for _, r in parts)
    return ResolutionReport(ranks, mats, degrees, minimal, M.ring, parts)


# --------------------------------------------------------------------------
# Hilbert functions
# --------------------------------------------------------------------------

def _monomials_of_degree(n, d):
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


def hilbert_series(M: ObstructionModule, truncation_degree: int) -> list:
    """Dimensions of the graded pieces of ``M`` in degrees ``0..truncation_degree``,
    by counting monomials of ``L_j`` outside ``K_j``."""
    n = M.ring.nvars
    out = [0] * (truncation_degree + 1)
    for j, L, K in M.components:
        shift = M.shifts[j]
        for d in range(max(shift, 0), truncation_degree + 1):
            for a in _monomials_of_degree(n, d - shift):
                if any(divides(l, a) for l in L) and not any(divides(k, a) for k in K):
                    out[d] += 1
    return out


def euler_check(report: ResolutionReport, M: ObstructionModule, upto: int = 10) -> bool:
    """Compare the alternating sum of the free modules' Hilbert functions with
    the Hilbert function of ``M`` in degrees ``0..upto``."""
    n = M.ring.nvars
    hf = hilbert_series(M, upto)
    for d in range(upto + 1):
        total = 0
        for i, degs in enumerate(report.degrees):
            s = sum(comb(d - b + n - 1, n - 1) for b in degs if b <= d)
            total += -s if i % 2 else s
        if total != hf[d]:
            return False
    return True


def format_betti(ranks) -> str:
    """``R^3 <- R^6 <- R^3 <- 0``, or ``0`` for the zero module."""
    if not ranks:
        return "0"
    return " <- ".join(f"R^{r}" for r in ranks) + " <- 0"
