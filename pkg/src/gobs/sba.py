"""The signature-ordered completion loop, a plain Buchberger oracle and
reduced Gröbner bases."""

from __future__ import annotations

from dataclasses import dataclass, field

from .freemod import minimal_monomials
from .ring import Polynomial, _axpy, coprime, divide, divides, mono_div, mono_lcm
from .signatures import (
    minimum_obstruction, signature, spair_preimage, spolynomial, standard_spairs,
)
from .syzygy import _check_tuple, syzygy_basis

__all__ = ["Step", "Trace", "GroebnerBasisResult", "run_sba", "buchberger", "reduced_gb"]


@dataclass
class Step:
    """One pass over the sorted guessed signatures of ``F_{i-1}`` that ended
    in a nonzero remainder."""

    tuple_before: tuple
    guessed: list            # sorted, deduplicated guessed signatures
    processed: list          # (guessed signature, remainder was zero)
    appended: Polynomial     # monic
    guessed_signature: tuple
    pair: object = None              # the S-pair that produced ``appended``
    signature: tuple | None = None   # recomputed against Syz(F_{i-1})
    betti: list | None = None        # ranks of the resolution of G_obs(F_{i-1})


@dataclass
class Trace:
    steps: list = field(default_factory=list)

    def __len__(self):
        return len(self.steps)


@dataclass
class GroebnerBasisResult:
    final: tuple
    reduced: tuple
    trace: Trace
    final_betti: list | None = None

    @property
    def appended(self) -> list:
        return [s.appended for s in self.trace.steps]

    @property
    def betti_table(self) -> list | None:
        if self.final_betti is None:
            return None
        return [s.betti for s in self.trace.steps] + [self.final_betti]


def run_sba(F, betti: bool = False, signatures: bool = True,
            tie: str = "latest") -> GroebnerBasisResult:
    """Complete ``F`` to a Gröbner basis by always resolving the smallest
    guessed signature whose S-polynomial does not reduce to zero.

    Each nonzero remainder is made monic, appended, and the scan restarts
    under the Schreyer order of the enlarged tuple.  With ``signatures`` the
    true signature of every appended generator is recomputed from the
    syzygy module of the previous tuple; with ``betti`` the ranks of the
    minimal resolution of the obstruction module are attached per step.
    """
    F = _check_tuple(F)
    if betti:
        from .obstruct import gobs, minimal_resolution

        def ranks(T):
            return minimal_resolution(gobs(T)).ranks
    trace = Trace()
    while True:
        pairs = standard_spairs(F, tie=tie)
        processed = []
        hit = None
        for p in pairs:
            quots, r = divide(spolynomial(p, F), F)
            processed.append((p.right, not r.terms))
            if r.terms:
                hit = (p, quots, r)
                break
        if hit is None:
            break
        p, quots, r = hit
        step = Step(F, [q.right for q in pairs], processed, r.monic(), p.right, p)
        if signatures:
            step.signature = signature(r, spair_preimage(p, F, quots), syzygy_basis(F))
        if betti:
            step.betti = ranks(F)
        trace.steps.append(step)
        F = F + (step.appended,)
    return GroebnerBasisResult(F, reduced_gb(F), trace, ranks(F) if betti else None)


def buchberger(F) -> tuple:
    """Classical Buchberger completion with the product and chain criteria.

    Returns ``F`` followed by the new (monic) elements, unreduced.
    """
    F = _check_tuple(F)
    ring = F[0].ring
    key = ring.key
    G = list(F)
    leads = [f.lm for f in G]
    pending = {(i, j): mono_lcm(leads[i], leads[j])
               for i in range(len(G)) for j in range(i + 1, len(G))}
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
        s = {}
        _axpy(s, G[a].terms, 1 / G[a].lc, mono_div(lcm, leads[a]))
        _axpy(s, G[b].terms, -1 / G[b].lc, mono_div(lcm, leads[b]))
        if not s:
            continue
        _, r = divide(Polynomial(ring, s), G)
        if not r.terms:
            continue
        r = r.monic()
        n = len(G)
        G.append(r)
        leads.append(r.lm)
        for k in range(n):
            pending[(k, n)] = mono_lcm(leads[k], r.lm)
    return tuple(G)


def reduced_gb(G) -> tuple:
    """The reduced Gröbner basis of ``<G>``, sorted by leading monomial ascending.

    Raises ``ValueError`` when ``G`` is not a Gröbner basis.
    """
    G = _check_tuple(G)
    if minimum_obstruction(G) is not None:
        raise ValueError("input is not a Gröbner basis")
    key = G[0].ring.key
    keep = {}
    for lm in minimal_monomials([g.lm for g in G]):
        keep[lm] = next(g for g in G if g.lm == lm)
    basis = [keep[lm] for lm in sorted(keep, key=key)]
    out = []
    for i, g in enumerate(basis):
        others = basis[:i] + basis[i + 1:]
        lead = g.lt
        if others:
            _, tail = divide(g - lead, others)
        else:
            tail = g - lead
        out.append((lead + tail).monic())
    return tuple(out)
