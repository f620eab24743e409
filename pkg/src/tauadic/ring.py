"""Exact integer arithmetic in the quartic ring Z[tau].

tau is an algebraic integer satisfying

    tau^4 = mu*tau^3 + 2*mu*tau - 4,    mu in {+1, -1},

and elements are written s + t*tau + u*tau^2 + v*tau^3 with arbitrary
precision integer coefficients.  mu is derived from the curve coefficient
a in {0, 1} via mu = (-1)**(1 - a).

All residues below are least nonnegative (Python's ``%`` convention), so
``s % 8 > 4`` means s mod 8 in {5, 6, 7}.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Union


class NotDivisibleError(ArithmeticError):
    """Quotient by tau requested for an element tau does not divide."""


def check_mu(mu: int) -> int:
    if mu not in (1, -1):
        raise ValueError(f"mu must be +1 or -1, got {mu!r}")
    return mu


def mu_from_curve_coeff(a: int) -> int:
    """Sign parameter of the characteristic equation for curve coefficient a."""
    if a not in (0, 1):
        raise ValueError(f"curve coefficient must be 0 or 1, got {a!r}")
    return 1 if a == 1 else -1


def curve_coeff_from_mu(mu: int) -> int:
    return (1 + check_mu(mu)) // 2


class ZTau(NamedTuple):
    """Ring element s + t*tau + u*tau^2 + v*tau^3 with exact int coefficients."""

    s: int
    t: int
    u: int
    v: int

    def __add__(self, other: "ZTau") -> "ZTau":  # type: ignore[override]
        return ZTau(self.s + other.s, self.t + other.t,
                    self.u + other.u, self.v + other.v)

    def __sub__(self, other: "ZTau") -> "ZTau":
        return ZTau(self.s - other.s, self.t - other.t,
                    self.u - other.u, self.v - other.v)

    def __neg__(self) -> "ZTau":
        return ZTau(-self.s, -self.t, -self.u, -self.v)

    def is_zero(self) -> bool:
        return self == ZERO

    def __str__(self) -> str:
        return format_element(self)


ZERO = ZTau(0, 0, 0, 0)
ONE = ZTau(1, 0, 0, 0)
TAU = ZTau(0, 1, 0, 0)


def add(a: ZTau, b: ZTau) -> ZTau:
    return a + b


def negate(a: ZTau) -> ZTau:
    return -a


def _reduction_rows(mu: int) -> tuple[ZTau, ZTau, ZTau]:
    # tau^4, tau^5, tau^6 expanded on the basis (1, tau, tau^2, tau^3).
    t4 = ZTau(-4, 2 * mu, 0, mu)
    t5 = ZTau(-4 * mu, -2, 2 * mu, 1)
    t6 = ZTau(-4, -2 * mu, -2, 3 * mu)
    return t4, t5, t6


def multiply(a: ZTau, b: ZTau, mu: int) -> ZTau:
    """Ring product, schoolbook convolution reduced by the degree-4 relation."""
    check_mu(mu)
    p = [0] * 7
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                p[i + j] += x * y
    res = ZTau(p[0], p[1], p[2], p[3])
    for coeff, row in zip(p[4:], _reduction_rows(mu)):
        if coeff:
            res = ZTau(res.s + coeff * row.s, res.t + coeff * row.t,
                       res.u + coeff * row.u, res.v + coeff * row.v)
    return res


def scalar_multiply(k: int, a: ZTau) -> ZTau:
    return ZTau(k * a.s, k * a.t, k * a.u, k * a.v)


def tau_divides(a: ZTau) -> bool:
    """tau | a holds exactly when 4 | s."""
    return a.s % 4 == 0


def quotient_by_tau(a: ZTau, mu: int) -> ZTau:
    """The unique b with tau*b = a.  Requires tau | a."""
    check_mu(mu)
    if a.s % 4 != 0:
        raise NotDivisibleError(f"tau does not divide {a} (s = {a.s} not 0 mod 4)")
    sp = a.s // 4
    return ZTau(2 * mu * sp + a.t, a.u, mu * sp + a.v, -sp)


def tau_sq_divides(a: ZTau, mu: int) -> bool:
    """tau^2 | a, tested via the congruences 4 | s and 4 | (mu*s/2 + t)."""
    check_mu(mu)
    if a.s % 4 != 0:
        return False
    return (mu * (a.s // 2) + a.t) % 4 == 0


DigitLike = Union[int, tuple, ZTau]


def as_element(c: DigitLike) -> ZTau:
    """Coerce an expansion digit (int, (c', c'') pair, or ZTau) to a ring element."""
    if isinstance(c, ZTau):
        return c
    if isinstance(c, int):
        return ZTau(c, 0, 0, 0)
    cp, cpp = c
    return ZTau(cp, cpp, 0, 0)


def evaluate_expansion(digits: Iterable[DigitLike], mu: int) -> ZTau:
    """Value of a little-endian digit sequence: sum of digits[i] * tau^i.

    The empty sequence evaluates to 0.
    """
    check_mu(mu)
    acc = ZERO
    for c in reversed(list(digits)):
        acc = multiply(acc, TAU, mu) + as_element(c)
    return acc


def format_element(a: ZTau) -> str:
    """Canonical text form: four signed decimal integers, comma separated."""
    return f"{a.s},{a.t},{a.u},{a.v}"


def parse_element(text: str) -> ZTau:
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError(f"element must be 's,t,u,v', got {text!r}")
    try:
        return ZTau(*(int(p.strip()) for p in parts))
    except ValueError as exc:
        raise ValueError(f"element must be four integers, got {text!r}") from exc
