"""Exponents on P* = (-inf, 0) U (1, inf], conjugates, and parameter triples.

Every exponent is stored by its reciprocal.  ``1/inf = 0`` is then an exact
floating-point zero, and infinity never appears as a float downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from numbers import Real

from .errors import DomainError

__all__ = [
    "Exponent",
    "INF",
    "DerivedExponents",
    "ParamTriple",
    "as_exponent",
    "reciprocal",
    "conjugate",
    "harmonic_diff",
    "harmonic_sum",
    "validate_triple",
    "check_modulus",
    "complementary_modulus",
]

_INF_WORDS = {"inf", "+inf", "infinity", "+infinity", "∞"}


@dataclass(frozen=True)
class Exponent:
    """An element of P*, held as its reciprocal ``recip = 1/value``.

    ``recip == 0`` is the tagged infinity.  Any finite ``recip < 1`` is a
    member of P*: negative reciprocals are negative exponents, reciprocals
    in (0, 1) are exponents in (1, inf).
    """

    recip: float

    def __post_init__(self):
        recip = float(self.recip)
        if not math.isfinite(recip) or recip >= 1.0:
            raise DomainError(f"reciprocal {recip!r} does not describe an exponent in P*")
        # normalise -0.0 so that equality and hashing see a single infinity
        object.__setattr__(self, "recip", recip + 0.0)

    @classmethod
    def from_value(cls, value: float) -> Exponent:
        if math.isnan(value):
            raise DomainError("exponent is NaN", param="p")
        if math.isinf(value):
            if value < 0:
                raise DomainError("-inf is not in P*", param="p")
            return cls(0.0)
        if 0.0 <= value <= 1.0:
            raise DomainError(f"exponent {value!r} lies in [0, 1], outside P*", param="p")
        return cls(1.0 / value)

    @classmethod
    def from_conjugate(cls, c: float) -> Exponent:
        """Inverse of :func:`conjugate`: the e in P* whose conjugate is ``c > 0``."""
        if not c > 0 or not math.isfinite(c):
            raise DomainError(f"conjugate {c!r} must be a positive finite real")
        return cls(1.0 - 1.0 / c)

    @property
    def is_infinite(self) -> bool:
        return self.recip == 0.0

    @property
    def value(self) -> float:
        """Plain float for display; ``math.inf`` for the tagged infinity."""
        return math.inf if self.is_infinite else 1.0 / self.recip

    def __float__(self) -> float:
        return self.value

    def __str__(self) -> str:
        return "inf" if self.is_infinite else repr(self.value)


INF = Exponent(0.0)


def as_exponent(value) -> Exponent:
    """Coerce a float, int, string such as ``"inf"``, or Exponent to an Exponent."""
    if isinstance(value, Exponent):
        return value
    if isinstance(value, str):
        text = value.strip().lower()
        if text in _INF_WORDS:
            return INF
        try:
            value = float(text)
        except ValueError:
            raise DomainError(f"cannot parse exponent {value!r}", param="p") from None
    if isinstance(value, bool) or not isinstance(value, Real):
        raise DomainError(f"exponent must be real, got {type(value).__name__}", param="p")
    return Exponent.from_value(float(value))


def reciprocal(x) -> float:
    """1/x under the convention 1/inf = 0; ``x`` may be an Exponent or a nonzero real."""
    if isinstance(x, Exponent):
        return x.recip
    x = float(x)
    if math.isinf(x):
        return 0.0
    if x == 0.0:
        raise DomainError("reciprocal of zero is not representable")
    return 1.0 / x


def conjugate(e) -> float:
    """The conjugate exponent e* with 1/e + 1/e* = 1.

    For e in P* the result lies in (0, inf); ``conjugate(INF) == 1``.
    """
    recip = reciprocal(e)
    if recip == 1.0:
        raise DomainError("the conjugate of 1 is undefined")
    return 1.0 / (1.0 - recip)


def _from_recip(recip: float) -> Exponent | None:
    return Exponent(recip) if recip < 1.0 else None


def harmonic_diff(a, b) -> Exponent | None:
    """s with 1/s = 1/a - 1/b, or ``None`` when 1/s >= 1 puts s outside P*."""
    return _from_recip(reciprocal(a) - reciprocal(b))


def harmonic_sum(a, b) -> Exponent | None:
    """u with 1/u = 1/a + 1/b, or ``None`` when 1/u >= 1."""
    return _from_recip(reciprocal(a) + reciprocal(b))


@dataclass(frozen=True)
class DerivedExponents:
    """Conjugates of p, q, r and the reciprocals of s, u, v.

    1/s = 1/p - 1/q, 1/u = 1/p + 1/r, 1/v = 1/p - 1/r*.  Only ``u`` can fall
    outside P*; that case is kept (``u is None``) because it marks divergence
    of K at k = 1.
    """

    p_conj: float
    q_conj: float
    r_conj: float
    s_recip: float
    u_recip: float
    v_recip: float

    @property
    def s(self) -> Exponent | None:
        return _from_recip(self.s_recip)

    @property
    def u(self) -> Exponent | None:
        return _from_recip(self.u_recip)

    @property
    def v(self) -> Exponent | None:
        return _from_recip(self.v_recip)


@dataclass(frozen=True)
class ParamTriple:
    p: Exponent
    q: float
    r: float
    derived: DerivedExponents = field(repr=False, compare=False)

    @property
    def recip_p(self) -> float:
        return self.p.recip

    def __str__(self) -> str:
        return f"(p={self.p}, q={self.q!r}, r={self.r!r})"


def _check_index(name: str, x) -> float:
    if isinstance(x, bool) or not isinstance(x, Real):
        raise DomainError(f"{name} must be real, got {type(x).__name__}", param=name)
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}", param=name)
    if not x > 1.0:
        raise DomainError(f"{name} must exceed 1, got {x!r}", param=name)
    return x


def validate_triple(p, q, r) -> ParamTriple:
    """Check p in P*, q, r in (1, inf) and precompute every derived exponent."""
    p = as_exponent(p)
    q = _check_index("q", q)
    r = _check_index("r", r)
    rp, rq, rr = p.recip, 1.0 / q, 1.0 / r
    derived = DerivedExponents(
        p_conj=1.0 / (1.0 - rp),
        q_conj=q / (q - 1.0),
        r_conj=r / (r - 1.0),
        s_recip=rp - rq,
        u_recip=rp + rr,
        v_recip=rp - (1.0 - rr),
    )
    return ParamTriple(p=p, q=q, r=r, derived=derived)


def check_modulus(k, *, closed: bool = True) -> float:
    """Validate a modulus in [0, 1] (``closed``) or [0, 1)."""
    if isinstance(k, bool) or not isinstance(k, Real):
        raise DomainError(f"modulus must be real, got {type(k).__name__}", param="k")
    k = float(k)
    upper_ok = k <= 1.0 if closed else k < 1.0
    if not (k >= 0.0 and upper_ok):
        interval = "[0, 1]" if closed else "[0, 1)"
        raise DomainError(f"modulus k={k!r} outside {interval}", param="k")
    return k


def one_minus_power(k: float, q: float) -> float:
    """1 - k**q without cancellation for k close to 1."""
    if k == 0.0:
        return 1.0
    return -math.expm1(q * math.log(k))


def complementary_modulus(k: float, q: float, r: float) -> float:
    """k' = (1 - k**q)**(1/r), so that k'**r + k**q = 1."""
    k = check_modulus(k)
    _check_index("q", q)
    _check_index("r", r)
    return one_minus_power(k, q) ** (1.0 / r)
