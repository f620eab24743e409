"""The two digit recoders and expansion utilities.

Both recoders peel one digit per step: choose a digit c congruent to the
element in the right sense, replace alpha by (alpha - c)/tau, repeat until
zero.  The GLS recoder picks integer digits in {-3..3} so that every four
consecutive digits contain a zero; the tau-NAF recoder picks digits from a
13-element set so that no two adjacent digits are both nonzero (the chosen
digit always leaves alpha - c divisible by tau^2, forcing the next digit
to be 0).

Digit sequences are little-endian in memory and in serialized form; the
human-readable display is the big-endian tuple "(c_{l-1}, ..., c_0)_t".
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .digits import (Digit, TnafDigitSet, ZERO_DIGIT, as_digit,
                     build_tnaf_digit_set, digit_element, format_digit,
                     gls_digit, parse_digit, tnaf_digit)
from .ring import (ZTau, ZERO, check_mu, evaluate_expansion, quotient_by_tau,
                   tau_divides)
from .normform import norm_sq

GLS = "gls"
TNAF = "tnaf"


class GuardExceededError(RuntimeError):
    """A recoding loop ran past its iteration guard; this signals a bug,
    since the norm-descent argument bounds the length of every expansion."""


@dataclass(frozen=True)
class Expansion:
    """A finite digit recoding of a ring element (little-endian digits)."""

    kind: str                      # GLS or TNAF
    mu: int
    digit_set_id: Optional[int]    # 1..16 for TNAF, None for GLS
    digits: tuple                  # of Digit
    source: ZTau

    @property
    def length(self) -> int:
        return len(self.digits)

    @property
    def weight(self) -> int:
        return sum(1 for c in self.digits if not c.is_zero())

    def display(self) -> str:
        inner = ", ".join(format_digit(c) for c in reversed(self.digits))
        return f"({inner})_t"

    def to_json(self) -> str:
        obj = {
            "kind": self.kind,
            "mu": self.mu,
            "digit_set": self.digit_set_id,
            "element": list(self.source),
            "digits": [[c.a, c.b] for c in self.digits],
            "length": self.length,
            "hamming_weight": self.weight,
        }
        return json.dumps(obj, separators=(",", ":"))


def expansion_from_json(text: str) -> Expansion:
    obj = json.loads(text)
    return Expansion(
        kind=obj["kind"],
        mu=obj["mu"],
        digit_set_id=obj["digit_set"],
        digits=tuple(Digit(a, b) for a, b in obj["digits"]),
        source=ZTau(*obj["element"]),
    )


def _iteration_guard(a: ZTau, mu: int) -> int:
    # Norm descent caps expansion length at O(log norm); the slack absorbs
    # the plateau below the descent threshold.
    return 4 * norm_sq(a, mu).bit_length() + 64


def expand_gls(a: ZTau, mu: int) -> Expansion:
    """GLS recoding of a; the zero element yields the empty expansion."""
    check_mu(mu)
    s, t, u, v = a
    digits = []
    guard = _iteration_guard(a, mu)
    while (s, t, u, v) != (0, 0, 0, 0):
        if len(digits) > guard:
            raise GuardExceededError(f"GLS recoding of {a} exceeded {guard} digits")
        c = gls_digit(s % 8, t % 4, v % 2)
        digits.append(Digit(c, 0))
        d = mu * (s - c) // 4
        s, t, u, v = 2 * d + t, u, d + v, -mu * d
    return Expansion(kind=GLS, mu=mu, digit_set_id=None,
                     digits=tuple(digits), source=a)


def expand_tnaf(a: ZTau, mu: int, j: int) -> Expansion:
    """tau-NAF recoding of a over digit set j; zero yields the empty expansion."""
    dset = build_tnaf_digit_set(j, mu)
    cur = a
    digits = []
    guard = _iteration_guard(a, mu)
    while cur != ZERO:
        if len(digits) > guard:
            raise GuardExceededError(f"tau-NAF recoding of {a} exceeded {guard} digits")
        if tau_divides(cur):
            c = ZERO_DIGIT
        else:
            c = tnaf_digit(cur, dset)
        digits.append(c)
        cur = quotient_by_tau(cur - digit_element(c), mu)
    return Expansion(kind=TNAF, mu=mu, digit_set_id=j,
                     digits=tuple(digits), source=a)


def hamming_weight(e: Expansion) -> int:
    return e.weight


def strip_top_zeros(digits: Sequence) -> tuple:
    """Drop high-order zero digits; the denoted expansion is unchanged."""
    out = [as_digit(c) for c in digits]
    while out and out[-1].is_zero():
        out.pop()
    return tuple(out)


def is_naf(digits: Sequence, dset: TnafDigitSet) -> bool:
    """Valid tau-NAF word: digits in the set, no two adjacent nonzero,
    top digit nonzero (empty is valid)."""
    ds = [as_digit(c) for c in digits]
    if any(c not in dset.digits for c in ds):
        return False
    if ds and ds[-1].is_zero():
        return False
    return all(ds[i].is_zero() or ds[i + 1].is_zero() for i in range(len(ds) - 1))


def is_gls_window_valid(digits: Sequence) -> bool:
    """Valid GLS word: integer digits in {-3..3}, a zero in every window of
    four consecutive digits, top digit nonzero (empty is valid)."""
    ds = [as_digit(c) for c in digits]
    if any(c.b != 0 or not -3 <= c.a <= 3 for c in ds):
        return False
    if ds and ds[-1].is_zero():
        return False
    return all(any(ds[i + k].is_zero() for k in range(4))
               for i in range(len(ds) - 3))


def min_hamming_weight(a: ZTau, mu: int, digit_set: Iterable, max_len: int) -> Optional[int]:
    """Least weight of ANY digit string of length <= max_len over the given
    digits evaluating to a -- no adjacency or window constraint.

    Depth-first search branching on the digits that keep the quotient in
    the ring, pruning on the best weight found.  None if no string of the
    allowed length represents a.
    """
    check_mu(mu)
    if max_len < 1:
        raise ValueError(f"max_len must be >= 1, got {max_len}")
    digits = [as_digit(c) for c in digit_set]
    by_residue: dict[int, list[Digit]] = {r: [] for r in range(4)}
    for c in digits:
        by_residue[c.a % 4].append(c)

    best: list[Optional[int]] = [None]

    def search(cur: ZTau, depth_left: int, weight: int) -> None:
        if best[0] is not None and weight >= best[0]:
            return
        if cur == ZERO:
            best[0] = weight
            return
        if depth_left == 0:
            return
        for c in by_residue[cur.s % 4]:
            nxt = quotient_by_tau(cur - digit_element(c), mu)
            search(nxt, depth_left - 1, weight + (0 if c.is_zero() else 1))

    search(a, max_len, 0)
    return best[0]


def enumerate_naf_words(a: ZTau, dset: TnafDigitSet, max_len: int) -> list[tuple]:
    """All tau-NAF words of length <= max_len over the set evaluating to a.

    Exhaustive: branches over every set digit that keeps the quotient in
    the ring, subject only to the adjacency rule, so it finds every valid
    word -- not just the one the recoder picks.  Words are little-endian
    digit tuples with nonzero top digit.
    """
    mu = dset.mu
    by_residue: dict[int, list[Digit]] = {r: [] for r in range(4)}
    for c in dset.sorted_digits():
        by_residue[c.a % 4].append(c)

    words: list[tuple] = []
    prefix: list[Digit] = []

    def search(cur: ZTau, depth_left: int, prev_nonzero: bool) -> None:
        if cur == ZERO:
            if not prefix or not prefix[-1].is_zero():
                words.append(tuple(prefix))
            # a nonzero continuation of the zero element is impossible
            # (no nonzero digit has a constant part divisible by 4)
            return
        if depth_left == 0:
            return
        for c in by_residue[cur.s % 4]:
            if prev_nonzero and not c.is_zero():
                continue
            prefix.append(c)
            search(quotient_by_tau(cur - digit_element(c), mu),
                   depth_left - 1, not c.is_zero())
            prefix.pop()

    search(a, max_len, False)
    return words


def norm_trace(a: ZTau, mu: int, method: str, j: Optional[int] = None) -> list[int]:
    """Squared norms of the successive loop states of a recoding,
    from norm_sq(a) down to the final 0."""
    check_mu(mu)
    trace = [norm_sq(a, mu)]
    if method == GLS:
        s, t, u, v = a
        guard = _iteration_guard(a, mu)
        while (s, t, u, v) != (0, 0, 0, 0):
            if len(trace) > guard:
                raise GuardExceededError(f"GLS trace of {a} exceeded {guard} steps")
            c = gls_digit(s % 8, t % 4, v % 2)
            d = mu * (s - c) // 4
            s, t, u, v = 2 * d + t, u, d + v, -mu * d
            trace.append(norm_sq(ZTau(s, t, u, v), mu))
        return trace
    if method == TNAF:
        if j is None:
            raise ValueError("tau-NAF trace needs a digit set index")
        dset = build_tnaf_digit_set(j, mu)
        cur = a
        guard = _iteration_guard(a, mu)
        while cur != ZERO:
            if len(trace) > guard:
                raise GuardExceededError(f"tau-NAF trace of {a} exceeded {guard} steps")
            c = ZERO_DIGIT if tau_divides(cur) else tnaf_digit(cur, dset)
            cur = quotient_by_tau(cur - digit_element(c), mu)
            trace.append(norm_sq(cur, mu))
        return trace
    raise ValueError(f"unknown method {method!r}")


def parse_digit_word(text: str) -> tuple:
    """Parse a semicolon-separated big-endian digit word into little-endian
    digits, e.g. "1-1t;0;0;-1+2t"."""
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_digit(p) for p in reversed(text.split(";")))


def format_digit_word(digits: Sequence) -> str:
    """Inverse of parse_digit_word (big-endian, semicolon separated)."""
    return ";".join(format_digit(as_digit(c)) for c in reversed(list(digits)))


def check_expansion(e: Expansion) -> None:
    """Raise if an expansion violates its structural contract."""
    if evaluate_expansion(e.digits, e.mu) != e.source:
        raise AssertionError(f"expansion of {e.source} does not round-trip")
    if e.digits and e.digits[-1].is_zero():
        raise AssertionError(f"expansion of {e.source} has a zero top digit")
    if e.kind == TNAF:
        dset = build_tnaf_digit_set(e.digit_set_id, e.mu)
        if not is_naf(e.digits, dset):
            raise AssertionError(f"expansion of {e.source} is not a valid NAF word")
    elif e.kind == GLS:
        if not is_gls_window_valid(e.digits):
            raise AssertionError(f"expansion of {e.source} violates the window rule")
    else:
        raise AssertionError(f"unknown expansion kind {e.kind!r}")
