"""S-pairs, guessed signatures, signatures and the Gröbner criterion."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InconsistencyError
from .freemod import (
    ModuleElement, SchreyerOrder, image_of, in_monomial_module, module_divide,
)
from .ring import Polynomial, divide, mono_div, mono_lcm, mono_mul
from .syzygy import SyzygyBasis, _check_tuple, leading_sets

__all__ = [
    "SPair", "Obstruction", "standard_spairs", "spolynomial", "spair_preimage",
    "signature", "is_groebner", "minimum_obstruction",
]


@dataclass(frozen=True)
class SPair:
    """A pair ``(x^g e_k, x^d e_l)`` with ``k < l`` and ``x^g LM(f_k) = x^d LM(f_l)``."""

    left: tuple
    right: tuple
    standard: bool = True

    @property
    def guessed_signature(self) -> tuple:
        return self.right

    @property
    def indices(self) -> tuple:
        return self.left[0], self.right[0]


def _validate(p: SPair, F):
    (k, g), (l, d) = p.left, p.right
    if not (0 <= k < l < len(F)):
        raise ValueError(f"invalid S-pair indices {k + 1}, {l + 1}")
    if mono_mul(g, F[k].lm) != mono_mul(d, F[l].lm):
        raise ValueError("S-pair components do not cancel leading monomials")


def standard_spairs(F, dedup: bool = True, tie: str = "latest") -> list:
    """Standard S-pairs of ``F`` sorted ascending by guessed signature.

    With ``dedup`` each guessed signature ``x^d e_l`` appears once.  Its
    partner index ``k`` is the largest available (``tie="latest"``) or the
    smallest (``tie="earliest"``).
    """
    if tie not in ("latest", "earliest"):
        raise ValueError(f"unknown tie rule {tie!r}")
    F = _check_tuple(F)
    order = SchreyerOrder(F)
    pairs = []
    seen = set()
    for l in range(1, len(F)):
        ks = range(l - 1, -1, -1) if tie == "latest" else range(l)
        for k in ks:
            lcm = mono_lcm(F[k].lm, F[l].lm)
            right = (l, mono_div(lcm, F[l].lm))
            if dedup and right in seen:
                continue
            seen.add(right)
            pairs.append(SPair((k, mono_div(lcm, F[k].lm)), right, True))
    pairs.sort(key=lambda p: (order.key(p.right), p.left[0]))
    return pairs


def spolynomial(p: SPair, F) -> Polynomial:
    F = _check_tuple(F)
    _validate(p, F)
    (k, g), (l, d) = p.left, p.right
    one = F[0].ring.field.one
    return F[k].mul_term(g, one / F[k].lc) - F[l].mul_term(d, one / F[l].lc)


def spair_preimage(p: SPair, F, quotients) -> ModuleElement:
    """``x^g/LC(f_k) e_k - x^d/LC(f_l) e_l - sum h_t e_t`` for a division of Spoly(p)."""
    F = _check_tuple(F)
    ring, m = F[0].ring, len(F)
    one = ring.field.one
    (k, g), (l, d) = p.left, p.right
    u = ModuleElement(ring, m, {(k, g): one / F[k].lc})
    u = u - ModuleElement(ring, m, {(l, d): one / F[l].lc})
    for t, h in enumerate(quotients):
        if h.terms:
            u = u - ModuleElement(ring, m, {(t, a): c for a, c in h.terms.items()})
    return u


def signature(f: Polynomial, u: ModuleElement, syz: SyzygyBasis) -> tuple:
    """The signature of ``f`` with respect to ``syz.F``, given any preimage ``u``.

    ``u`` is top-reduced by the syzygy Gröbner basis until its leading monomial
    leaves ``<LM(Syz F)>``; that leading monomial is the signature.
    """
    if not f.terms:
        raise ValueError("the zero polynomial has no signature")
    if image_of(u, syz.F) != f:
        raise ValueError("u is not a preimage of f")
    if syz.elements:
        _, u = module_divide(u, syz.elements, syz.order, tail_reduce=False)
    mm = u.lm(syz.order)
    if syz.contains_lm(mm):
        raise InconsistencyError("reduced preimage still leads inside LM(Syz F)")
    return mm


@dataclass(frozen=True)
class Obstruction:
    """The smallest element of ``LSL \\ LS`` together with the data realizing it."""

    signature: tuple
    pair: SPair
    remainder: Polynomial
    preimage: ModuleElement


def minimum_obstruction(F, strategy: str = "lowest", tail_reduce: bool = True,
                        tie: str = "latest"):
    """Scan standard guessed signatures upward; return the first nonzero remainder.

    Returns ``None`` when every standard S-polynomial reduces to zero, i.e.
    when ``F`` is a Gröbner basis.
    """
    F = _check_tuple(F)
    for p in standard_spairs(F, tie=tie):
        quots, r = divide(spolynomial(p, F), F, tail_reduce=tail_reduce, strategy=strategy)
        if r.terms:
            return Obstruction(p.right, p, r, spair_preimage(p, F, quots))
    return None


def is_groebner(F):
    """Decide whether ``F`` is a Gröbner basis by comparing ``<LS>`` and ``<LSL>``.

    Returns ``(True, None)`` or ``(False, witness)`` where the witness is the
    smallest minimal generator of ``<LSL>`` outside ``<LS>``.  The answer is
    cross-checked against the standard S-pair scan.
    """
    F = _check_tuple(F)
    sets = leading_sets(F)
    order = SchreyerOrder(F)
    outside = [s for s in sets.lsl if not in_monomial_module(s, sets.ls)]
    witness = min(outside, key=order.key) if outside else None
    obs = minimum_obstruction(F)
    if (obs is None) != (witness is None) or (obs is not None and obs.signature != witness):
        raise InconsistencyError(
            f"syzygy criterion (witness {witness}) disagrees with S-pair scan "
            f"({None if obs is None else obs.signature})")
    return witness is None, witness
