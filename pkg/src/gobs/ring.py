"""Exact coefficient fields, term orders and sparse multivariate polynomials.

Monomials are plain tuples of non-negative exponents.  A polynomial is an
immutable mapping ``monomial -> nonzero coefficient`` tied to a
:class:`PolynomialRing`, which fixes the variables, the term order and the
coefficient field.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from functools import cached_property

__all__ = [
    "QQ", "GF", "ModInt", "RationalField", "PrimeField",
    "TermOrder", "PolynomialRing", "Polynomial",
    "mono_mul", "mono_div", "mono_lcm", "divides", "compare_monomials",
    "divide", "DIVISOR_STRATEGIES",
]


# --------------------------------------------------------------------------
# coefficient fields
# --------------------------------------------------------------------------

class RationalField:
    """The field of rational numbers, backed by :class:`fractions.Fraction`."""

    characteristic = 0
    name = "QQ"

    def __call__(self, value) -> Fraction:
        if isinstance(value, ModInt):
            raise TypeError("cannot coerce a prime-field residue into QQ")
        return Fraction(value)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class ModInt:
    """Residue class modulo a prime ``p``; value always in ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModInt):
            if other.p != self.p:
                raise TypeError(f"mixing GF({self.p}) and GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return ModInt(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.v == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return ModInt(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return ModInt(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if k < 0:
            return ModInt(pow(self.v, -1, self.p), self.p) ** (-k)
        return ModInt(pow(self.v, k, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"ModInt({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class PrimeField:
    """The prime field GF(p) for a word-sized prime ``p < 2**31``."""

    def __init__(self, p: int):
        p = int(p)
        if not p < 2**31 or not _is_prime(p):
            raise ValueError(f"GF(p) needs a prime p < 2^31, got {p}")
        self.characteristic = p
        self.p = p
        self.name = f"GF({p})"

    def __call__(self, value) -> ModInt:
        if isinstance(value, ModInt):
            if value.p != self.p:
                raise TypeError(f"mixing GF({value.p}) and GF({self.p})")
            return value
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in {self.name}")
            return ModInt(value.numerator * pow(value.denominator, -1, self.p), self.p)
        if isinstance(value, int):
            return ModInt(value, self.p)
        raise TypeError(f"cannot coerce {value!r} into {self.name}")

    @property
    def zero(self):
        return ModInt(0, self.p)

    @property
    def one(self):
        return ModInt(1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.name


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


# --------------------------------------------------------------------------
# monomials
# --------------------------------------------------------------------------

def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(map(operator.add, a, b))


def mono_div(a: tuple, b: tuple) -> tuple:
    """``a / b``; the caller guarantees ``b | a``."""
    return tuple(map(operator.sub, a, b))


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(map(max, a, b))


def divides(a: tuple, b: tuple) -> bool:
    """True iff x^a divides x^b."""
    return all(map(operator.le, a, b))


def coprime(a: tuple, b: tuple) -> bool:
    return not any(i and j for i, j in zip(a, b))


# --------------------------------------------------------------------------
# term orders
# --------------------------------------------------------------------------

_ORDER_KINDS = ("lex", "grlex", "grevlex", "weight", "block")


class TermOrder:
    """A multiplicative well-order on monomials, realized by a sort key.

    ``kind`` is one of ``lex``, ``grlex``, ``grevlex`` or ``weight`` (compare
    ``weights . a`` first, break ties by lex).  Variables are ranked in the
    order they are listed by the ring, the first one being the largest.

    The ``block`` kind is used internally for ``R[t]``: the first ``n``
    exponents are compared with ``base`` and the trailing ones break ties
    lexicographically, so the extra variables are smaller than everything.
    """

    def __init__(self, kind: str = "grevlex", weights=None, base: TermOrder | None = None,
                 split: int | None = None):
        if kind == "deglex":
            kind = "grlex"
        if kind not in _ORDER_KINDS:
            raise ValueError(f"unknown term order {kind!r}")
        self.kind = kind
        self.weights = tuple(int(w) for w in weights) if weights is not None else None
        self.base = base
        self.split = split
        if kind == "weight":
            if not self.weights or any(w <= 0 for w in self.weights):
                raise ValueError("weight order needs strictly positive integer weights")
        if kind == "block" and (base is None or split is None):
            raise ValueError("block order needs a base order and a split point")
        self.key = self._make_key()

    def _make_key(self):
        if self.kind == "lex":
            return _lex_key
        if self.kind == "grlex":
            return _grlex_key
        if self.kind == "grevlex":
            return _grevlex_key
        if self.kind == "weight":
            w = self.weights

            def key(a):
                return (sum(map(operator.mul, w, a)), a)
            return key
        n = self.split
        base_key = self.base.key

        def key(a):
            return (base_key(a[:n]), a[n:])
        return key

    def _ident(self):
        return (self.kind, self.weights, self.base._ident() if self.base else None,
                self.split)

    def __eq__(self, other):
        return isinstance(other, TermOrder) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        if self.kind == "weight":
            return f"weight({','.join(map(str, self.weights))})"
        if self.kind == "block":
            return f"block({self.base!r})"
        return self.kind


def _lex_key(a):
    return a


def _grlex_key(a):
    return (sum(a), a)


def _grevlex_key(a):
    return (sum(a), tuple(-e for e in reversed(a)))


def compare_monomials(a: tuple, b: tuple, order: TermOrder, nvars: int | None = None) -> int:
    """Return -1, 0 or 1 as ``a`` is smaller, equal or greater than ``b``."""
    if len(a) != len(b) or (nvars is not None and len(a) != nvars):
        raise ValueError(f"monomial length mismatch: {a} vs {b}")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


# --------------------------------------------------------------------------
# rings and polynomials
# --------------------------------------------------------------------------

class PolynomialRing:
    """``K[x_1, ..., x_n]`` with a fixed term order."""

    def __init__(self, variables, order="grevlex", field=QQ):
        if isinstance(variables, str):
            variables = [v.strip() for v in variables.replace(",", " ").split()]
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        self.nvars = len(self.variables)
        if isinstance(order, str):
            order = TermOrder(order)
        self.order = order
        self.field = field
        if order.kind == "weight" and len(order.weights) != self.nvars:
            raise ValueError("weight vector length does not match the variable count")
        self.key = order.key
        self.zero_mono = (0,) * self.nvars
        self._hash = hash((self.variables, order, field))

    def __eq__(self, other):
        return self is other or (
            isinstance(other, PolynomialRing)
            and self.variables == other.variables
            and self.order == other.order
            and self.field == other.field)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"{self.field!r}[{', '.join(self.variables)}] ({self.order!r})"

    # constructors
    def __call__(self, value) -> Polynomial:
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise ValueError("polynomial belongs to a different ring")
            return value
        if isinstance(value, str):
            from .textio import parse_polynomial
            return parse_polynomial(value, self)
        return self.constant(value)

    def constant(self, c) -> Polynomial:
        c = self.field(c)
        return Polynomial(self, {self.zero_mono: c} if c else {})

    def monomial(self, exps, coeff=1) -> Polynomial:
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError(f"monomial {exps} has wrong length for {self}")
        c = self.field(coeff)
        return Polynomial(self, {exps: c} if c else {})

    def from_dict(self, terms: dict) -> Polynomial:
        f = self.field
        out = {}
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != self.nvars:
                raise ValueError(f"monomial {m} has wrong length for {self}")
            c = f(c)
            if c:
                out[m] = c
        return Polynomial(self, out)

    @property
    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    @property
    def one(self) -> Polynomial:
        return self.constant(1)

    @cached_property
    def gens(self) -> tuple:
        out = []
        for i in range(self.nvars):
            e = [0] * self.nvars
            e[i] = 1
            out.append(self.monomial(e))
        return tuple(out)

    def format_monomial(self, m: tuple) -> str:
        parts = []
        for v, e in zip(self.variables, m):
            if e == 1:
                parts.append(v)
            elif e:
                parts.append(f"{v}^{e}")
        return "*".join(parts) if parts else "1"

    def with_extra_variable(self, name: str = "t") -> PolynomialRing:
        """``R[t]`` with the block order in which ``t`` is smaller than every x."""
        if name in self.variables:
            raise ValueError(f"variable {name!r} already in ring")
        order = TermOrder("block", base=self.order, split=self.nvars)
        return PolynomialRing(self.variables + (name,), order, self.field)


def _axpy(p: dict, terms: dict, a, shift: tuple | None = None):
    """In place ``p += a * x^shift * terms``."""
    add = operator.add
    for m, c in terms.items():
        if shift is not None:
            m = tuple(map(add, m, shift))
        v = p.get(m)
        if v is None:
            p[m] = a * c
        else:
            v = v + a * c
            if v:
                p[m] = v
            else:
                del p[m]


class Polynomial:
    """An immutable sparse polynomial; ``terms`` never stores a zero coefficient."""

    __slots__ = ("ring", "terms", "_lead", "_hash")

    def __init__(self, ring: PolynomialRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lead = None
        self._hash = None

    # leading data ------------------------------------------------------
    def _leading(self):
        if self._lead is None:
            if not self.terms:
                raise ValueError("the zero polynomial has no leading term")
            m = max(self.terms, key=self.ring.key)
            self._lead = (m, self.terms[m])
        return self._lead

    @property
    def lm(self) -> tuple:
        return self._leading()[0]

    @property
    def lc(self):
        return self._leading()[1]

    @property
    def lt(self) -> Polynomial:
        m, c = self._leading()
        return Polynomial(self.ring, {m: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def monomials(self) -> list:
        """Monomials in decreasing term order."""
        return sorted(self.terms, key=self.ring.key, reverse=True)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        c = self.lc
        if c == 1:
            return self
        inv = self.ring.field.one / c
        return Polynomial(self.ring, {m: v * inv for m, v in self.terms.items()})

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring.zero_mono in self.terms)

    # arithmetic -------------------------------------------------------
    def _check(self, other: Polynomial):
        if other.ring is not self.ring and other.ring != self.ring:
            raise ValueError("ring mismatch")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._lift(other)
        p = dict(self.terms)
        _axpy(p, other.terms, self.ring.field.one)
        return Polynomial(self.ring, p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        p = dict(self.terms)
        _axpy(p, other.terms, -self.ring.field.one)
        return Polynomial(self.ring, p)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def scale(self, c) -> Polynomial:
        c = self.ring.field(c)
        if not c:
            return self.ring.zero
        return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, mono: tuple, c=1) -> Polynomial:
        c = self.ring.field(c)
        if not c:
            return self.ring.zero
        add = operator.add
        return Polynomial(self.ring, {tuple(map(add, m, mono)): v * c
                                      for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        if len(other.terms) < len(self.terms):
            a, b = other, self
        else:
            a, b = self, other
        p = {}
        for m, c in a.terms.items():
            _axpy(p, b.terms, c, m)
        return Polynomial(self.ring, p)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = self.ring.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction, ModInt)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __str__(self):
        from .textio import format_polynomial
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self})"


# --------------------------------------------------------------------------
# division
# --------------------------------------------------------------------------

DIVISOR_STRATEGIES = ("lowest", "highest", "sparsest")


def _select(m, leads, sizes, strategy):
    found = None
    for i, lm in enumerate(leads):
        if divides(lm, m):
            if strategy == "lowest":
                return i
            if strategy == "highest":
                found = i
            elif found is None or sizes[i] < sizes[found]:
                found = i
    return found


def divide(f: Polynomial, divisors, tail_reduce: bool = True, strategy: str = "lowest"):
    """Multivariate division of ``f`` by the tuple ``divisors``.

    Returns ``(quotients, remainder)`` with ``f == sum(q_i * f_i) + r`` and
    ``LM(q_i f_i) <= LM(f)``.  The divisor used for a term is picked by
    ``strategy``: the lowest index (default), the highest index, or the divisor
    with the fewest terms.  With ``tail_reduce`` every term of ``r`` is
    irreducible, otherwise only its leading term is.
    """
    divisors = list(divisors)
    if not divisors:
        raise ValueError("empty divisor tuple")
    if strategy not in DIVISOR_STRATEGIES:
        raise ValueError(f"unknown divisor strategy {strategy!r}")
    ring = f.ring
    for g in divisors:
        f._check(g)
        if not g.terms:
            raise ZeroDivisionError("division by the zero polynomial")
    key = ring.key
    leads = [g.lm for g in divisors]
    lcs = [g.lc for g in divisors]
    sizes = [len(g.terms) for g in divisors]
    p = dict(f.terms)
    r = {}
    quots = [{} for _ in divisors]
    while p:
        m = max(p, key=key)
        i = _select(m, leads, sizes, strategy)
        if i is None:
            if not tail_reduce:
                r.update(p)
                break
            r[m] = p.pop(m)
            continue
        coef = p[m] / lcs[i]
        shift = mono_div(m, leads[i])
        quots[i][shift] = coef
        _axpy(p, divisors[i].terms, -coef, shift)
    return [Polynomial(ring, q) for q in quots], Polynomial(ring, r)


def lm_ideal(F) -> list:
    """Minimal generators of the monomial ideal spanned by the LMs of ``F``."""
    from .freemod import minimal_monomials
    return minimal_monomials([f.lm for f in F if f.terms])
