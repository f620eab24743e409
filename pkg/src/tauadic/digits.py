"""Expansion digits and digit sets.

Two digit alphabets are used by the recoders:

* the GLS alphabet, the integers {-3, ..., 3}, chosen per position by a
  residue rule on (s mod 8, t mod 4, v mod 2);
* sixteen 13-element tau-NAF alphabets of digits c' + c''*tau with
  -2 <= c', c'' <= 2 and (|c'|, |c''|) != (2, 2), indexed j = 1..16.

A tau-NAF digit c for alpha = s + t*tau + ... must satisfy two congruences
so that alpha - c is divisible by tau^2:

    4 | (Rs - c')           where Rs = s mod 8,
    4 | (Rt - c'' + 2*mu*(Rs - c')/4)    where Rt = t mod 4.

Each residue cell (Rs, Rt) admits one or two such digits; a usable digit
set contains exactly one per cell.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import NamedTuple

from .ring import ZTau, check_mu, tau_divides


class InvalidResidueError(ValueError):
    """Residue cell with Rs divisible by 4 (digit 0 is forced there)."""


class ElementDivisibleError(ValueError):
    """Nonzero-digit selection requested for an element divisible by tau."""


class Digit(NamedTuple):
    """Expansion coefficient a + b*tau."""

    a: int
    b: int

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __neg__(self) -> "Digit":
        return Digit(-self.a, -self.b)

    def __str__(self) -> str:
        return format_digit(self)


ZERO_DIGIT = Digit(0, 0)


def as_digit(c) -> Digit:
    if isinstance(c, Digit):
        return c
    if isinstance(c, int):
        return Digit(c, 0)
    cp, cpp = c
    return Digit(cp, cpp)


def digit_element(c: Digit) -> ZTau:
    return ZTau(c.a, c.b, 0, 0)


def format_digit(c: Digit) -> str:
    """Canonical text: "a" when b = 0, else "a+bt" with explicit sign, e.g. "2-1t"."""
    if c.b == 0:
        return str(c.a)
    sign = "+" if c.b > 0 else "-"
    return f"{c.a}{sign}{abs(c.b)}t"


_DIGIT_RE = re.compile(r"^(-?\d+)(?:([+-])(\d+)t)?$")


def parse_digit(text: str) -> Digit:
    m = _DIGIT_RE.match(text.strip())
    if not m:
        raise ValueError(f"malformed digit {text!r}")
    a = int(m.group(1))
    if m.group(2) is None:
        return Digit(a, 0)
    b = int(m.group(3))
    return Digit(a, b if m.group(2) == "+" else -b)


GLS_DIGITS = tuple(range(-3, 4))


def gls_digit(s_mod8: int, t_mod4: int, v_mod2: int) -> int:
    """GLS digit for the residue triple (s mod 8, t mod 4, v mod 2).

    0 when 4 | s; otherwise s mod 4, shifted down by 4 according to the
    sign-selection rule so the result lies in {-3, ..., 3}.
    """
    if not (0 <= s_mod8 <= 7 and 0 <= t_mod4 <= 3 and 0 <= v_mod2 <= 1):
        raise ValueError(f"residues out of range: ({s_mod8}, {t_mod4}, {v_mod2})")
    c = s_mod8 % 4
    if c == 0:
        return 0
    t_odd = t_mod4 % 2 == 1
    if ((t_mod4 == 0 and s_mod8 > 4)
            or (t_mod4 == 2 and s_mod8 < 4)
            or (t_odd and s_mod8 > 4 and v_mod2 == 0)
            or (t_odd and s_mod8 < 4 and v_mod2 == 1)):
        c -= 4
    return c


def tnaf_candidates(r_s: int, r_t: int, mu: int) -> tuple[Digit, ...]:
    """All digits c with tau^2 | (alpha - c) for elements with these residues.

    Returns one or two digits, sorted by (a, b).
    """
    check_mu(mu)
    if not (0 <= r_s <= 7 and 0 <= r_t <= 3):
        raise ValueError(f"residues out of range: ({r_s}, {r_t})")
    if r_s % 4 == 0:
        raise InvalidResidueError(f"Rs = {r_s} is divisible by 4; the digit is 0")
    out = []
    for cp in range(-2, 3):
        if (r_s - cp) % 4 != 0:
            continue
        ctilde = (r_s - cp) // 4
        for cpp in range(-2, 3):
            if (abs(cp), abs(cpp)) == (2, 2):
                continue
            if (r_t - cpp + 2 * mu * ctilde) % 4 == 0:
                out.append(Digit(cp, cpp))
    return tuple(sorted(out))


@dataclass(frozen=True)
class TnafDigitSet:
    """One of the sixteen 13-digit tau-NAF alphabets."""

    j: int
    mu: int
    digits: frozenset

    def __contains__(self, c: Digit) -> bool:
        return c in self.digits

    def sorted_digits(self) -> list[Digit]:
        return sorted(self.digits)

    def to_json(self) -> str:
        obj = {"j": self.j, "mu": self.mu,
               "digits": [[c.a, c.b] for c in self.sorted_digits()]}
        return json.dumps(obj, separators=(",", ":"))


# The 9 digits shared by every tau-NAF alphabet.
_BASE_DIGITS = frozenset(
    [ZERO_DIGIT, Digit(1, 0), Digit(-1, 0), Digit(2, 0), Digit(-2, 0),
     Digit(1, 1), Digit(1, -1), Digit(-1, 1), Digit(-1, -1)]
)


def build_tnaf_digit_set(j: int, mu: int) -> TnafDigitSet:
    """Digit set number j (1..16): base digits plus one of each +-(2+tau),
    +-(2-tau) and one of each 1+-2*mu*tau, -1+-2*mu*tau, selected by the
    two index digits j1 = (j-1) div 4 and j2 = (j-1) mod 4."""
    check_mu(mu)
    if not 1 <= j <= 16:
        raise ValueError(f"digit set index must be 1..16, got {j}")
    j1, j2 = (j - 1) // 4, (j - 1) % 4
    sign1a = -1 if (j1 // 2) % 2 else 1   # picks +-(2 + tau)
    sign1b = -1 if j1 % 2 else 1          # picks +-(2 - tau)
    sign2a = -1 if (j2 // 2) % 2 else 1   # picks 1 +- 2*mu*tau
    sign2b = -1 if j2 % 2 else 1          # picks -1 +- 2*mu*tau
    extra = [
        Digit(2 * sign1a, sign1a),
        Digit(2 * sign1b, -sign1b),
        Digit(1, 2 * mu * sign2a),
        Digit(-1, 2 * mu * sign2b),
    ]
    return TnafDigitSet(j=j, mu=mu, digits=_BASE_DIGITS | frozenset(extra))


def all_tnaf_digit_sets(mu: int) -> list[TnafDigitSet]:
    return [build_tnaf_digit_set(j, mu) for j in range(1, 17)]


def tnaf_digit(a: ZTau, dset: TnafDigitSet) -> Digit:
    """The unique digit of the set with tau^2 | (a - digit).

    Residues are taken from the full element so the s mod 8 dependence
    cannot be supplied wrongly by the caller.
    """
    if tau_divides(a):
        raise ElementDivisibleError(f"tau divides {a}; digit 0 is forced")
    cands = tnaf_candidates(a.s % 8, a.t % 4, dset.mu)
    hits = [c for c in cands if c in dset.digits]
    if len(hits) != 1:
        raise RuntimeError(
            f"digit set j={dset.j} mu={dset.mu} has {len(hits)} candidates "
            f"for residues ({a.s % 8}, {a.t % 4}); the set is not usable")
    return hits[0]


def _residue_cells() -> list[tuple[int, int]]:
    return [(r_s, r_t) for r_s in (1, 2, 3, 5, 6, 7) for r_t in range(4)]


def validate_digit_set(dset: TnafDigitSet) -> bool:
    """Usability check for an arbitrary digit collection.

    True iff (i) all digits are in the allowed coefficient box, (ii) no two
    digits share a constant part and differ by 4 in the tau part, (iii) no
    two digits differ by 4 in the constant part and 2*mu in the tau part,
    and (iv) every residue cell (Rs, Rt) has exactly one candidate digit in
    the set.  (ii) and (iii) are the two pair patterns that would break
    uniqueness of the recoding; (iv) is what makes it total and sparse.
    """
    digits = dset.digits
    for c in digits:
        if not (-2 <= c.a <= 2 and -2 <= c.b <= 2) or (abs(c.a), abs(c.b)) == (2, 2):
            return False
    for x in digits:
        for y in digits:
            if x == y:
                continue
            if x.a == y.a and abs(x.b - y.b) == 4:
                return False
            if abs(x.a - y.a) == 4 and abs(x.b - y.b) == 2:
                return False
    for r_s, r_t in _residue_cells():
        cands = tnaf_candidates(r_s, r_t, dset.mu)
        if sum(1 for c in cands if c in digits) != 1:
            return False
    return True
