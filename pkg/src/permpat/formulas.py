"""Closed forms for avoider counts: exact integer evaluation and rendering.

Every variant evaluates exactly in integer arithmetic; no floats anywhere.
Fibonacci values use the f(1) = f(2) = 1 convention and every row that needs
a different indexing carries an explicit calibrated index map (see
``catalog.CALIBRATION``).  Tribonacci values are seeded t(1), t(2), t(3) =
1, 2, 4, matching the oracle counts of the row that uses them.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import comb
from typing import Callable, Sequence


def binomial(n: int, k: int) -> int:
    """C(n, k), zero whenever n < k or n < 0 (table polynomials rely on this)."""
    if n < 0 or k < 0 or n < k:
        return 0
    return comb(n, k)


@functools.lru_cache(maxsize=None)
def fibonacci(m: int) -> int:
    """Fibonacci numbers with f(1) = f(2) = 1."""
    if m < 1:
        raise ValueError(f"fibonacci index must be >= 1, got {m}")
    a, b = 1, 1
    for _ in range(m - 1):
        a, b = b, a + b
    return a


@functools.lru_cache(maxsize=None)
def tribonacci(m: int) -> int:
    """Tribonacci numbers with t(1), t(2), t(3) = 1, 2, 4."""
    if m < 1:
        raise ValueError(f"tribonacci index must be >= 1, got {m}")
    a, b, c = 1, 2, 4
    if m == 1:
        return a
    if m == 2:
        return b
    for _ in range(m - 3):
        a, b, c = b, c, a + b + c
    return c


def gf_coefficients(num: Sequence[int], den: Sequence[int], n_max: int) -> list[int]:
    """Power-series coefficients a_0..a_n_max of num(x)/den(x).

    Uses the linear recurrence den * A = num; requires den[0] != 0 and exact
    integer divisibility at every step.

    >>> gf_coefficients((1,), (1, -1), 4)
    [1, 1, 1, 1, 1]
    >>> gf_coefficients((1, -3, 3, -1), (1, -4, 5, -3), 3)
    [1, 1, 2, 5]
    """
    num = list(num)
    den = list(den)
    if not den or den[0] == 0:
        raise ValueError("denominator must have a nonzero constant term")
    coeffs: list[int] = []
    for j in range(n_max + 1):
        s = num[j] if j < len(num) else 0
        for i in range(1, min(j, len(den) - 1) + 1):
            s -= den[i] * coeffs[j - i]
        q, r = divmod(s, den[0])
        if r:
            raise ValueError("series coefficients are not integral")
        coeffs.append(q)
    return coeffs


# --- formula variants ------------------------------------------------------

@dataclass(frozen=True)
class Catalan:
    def eval(self, n: int) -> int:
        return comb(2 * n, n) // (n + 1)

    def render(self) -> str:
        return "C(2n,n)/(n+1)"


@dataclass(frozen=True)
class BinomialPoly:
    """sum of coeff * C(n + offset, k) terms plus a constant."""

    terms: tuple[tuple[int, int, int], ...]  # (coeff, offset, k)
    constant: int = 0

    def eval(self, n: int) -> int:
        return sum(c * binomial(n + off, k) for c, off, k in self.terms) + self.constant

    def render(self) -> str:
        return _render_terms(self.terms, self.constant)


@dataclass(frozen=True)
class PowerLinear:
    """(lin_a*n + lin_b) * 2^(n+shift) plus a binomial correction."""

    lin_a: int
    lin_b: int
    shift: int
    terms: tuple[tuple[int, int, int], ...] = ()
    constant: int = 0

    def eval(self, n: int) -> int:
        coef = self.lin_a * n + self.lin_b
        s = n + self.shift
        if s >= 0:
            power = coef << s
        else:
            power, r = divmod(coef, 1 << -s)
            if r:
                raise ValueError(f"2^({n}{self.shift:+d}) term is not integral at n={n}")
        return power + sum(c * binomial(n + off, k) for c, off, k in self.terms) + self.constant

    def render(self) -> str:
        if self.lin_a == 0:
            head = f"{self.lin_b}*" if self.lin_b != 1 else ""
        else:
            head = f"({self.lin_a}n{self.lin_b:+d})*" if self.lin_b else f"{self.lin_a}n*"
        exp = f"n{self.shift:+d}" if self.shift else "n"
        tail = _render_terms(self.terms, self.constant, leading=False)
        return f"{head}2^({exp}){tail}"


@dataclass(frozen=True)
class FibonacciForm:
    """f(stretch*n + offset) + addend under f(1) = f(2) = 1."""

    stretch: int
    offset: int
    addend: int = 0

    def eval(self, n: int) -> int:
        return fibonacci(self.stretch * n + self.offset) + self.addend

    def render(self) -> str:
        idx = f"{self.stretch}n" if self.stretch != 1 else "n"
        if self.offset:
            idx += f"{self.offset:+d}"
        tail = f"{self.addend:+d}" if self.addend else ""
        return f"f({idx}){tail} [f(1)=f(2)=1]"


@dataclass(frozen=True)
class TribonacciForm:
    offset: int = 0

    def eval(self, n: int) -> int:
        return tribonacci(n + self.offset)

    def render(self) -> str:
        idx = "n" if not self.offset else f"n{self.offset:+d}"
        return f"t({idx}) [t(1),t(2),t(3)=1,2,4]"


@dataclass(frozen=True)
class RationalGF:
    num: tuple[int, ...]
    den: tuple[int, ...]

    def eval(self, n: int) -> int:
        return _gf_prefix(self.num, self.den, n)[n]

    def render(self) -> str:
        return f"[x^n] {_render_poly(self.num)}/({_render_poly(self.den)})"


@dataclass(frozen=True)
class Linear:
    a: int
    b: int

    def eval(self, n: int) -> int:
        return self.a * n + self.b

    def render(self) -> str:
        if self.a == 1 and self.b == 0:
            return "n"
        return f"{self.a}n{self.b:+d}" if self.b else f"{self.a}n"


@dataclass(frozen=True)
class Constant:
    value: int
    from_n: int = 1

    def eval(self, n: int) -> int:
        return self.value

    def render(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class ZeroBeyond:
    from_n: int

    def eval(self, n: int) -> int:
        return 0

    def render(self) -> str:
        return f"0 (n>={self.from_n})"


# generators for rows whose claim lists the avoider sets verbatim; populated
# by the catalog module at import time
FAMILY_REGISTRY: dict[str, Callable[[int], frozenset]] = {}


@dataclass(frozen=True)
class ExplicitFamily:
    name: str

    def family(self, n: int) -> frozenset:
        return FAMILY_REGISTRY[self.name](n)

    def eval(self, n: int) -> int:
        return len(self.family(n))

    def render(self) -> str:
        return f"|explicit avoider list [{self.name}]|"


CountFormula = (
    Catalan
    | BinomialPoly
    | PowerLinear
    | FibonacciForm
    | TribonacciForm
    | RationalGF
    | Linear
    | Constant
    | ZeroBeyond
    | ExplicitFamily
)


def evaluate(formula: CountFormula, n: int) -> int:
    """Exact value of a count formula at n >= 1 (n below a row's validity
    threshold is still evaluable; the caller decides whether to compare)."""
    return formula.eval(n)


def render(formula: CountFormula) -> str:
    return formula.render()


@functools.lru_cache(maxsize=None)
def _gf_prefix(num: tuple[int, ...], den: tuple[int, ...], n_max: int) -> tuple[int, ...]:
    return tuple(gf_coefficients(num, den, n_max))


def _render_terms(terms, constant, leading=True) -> str:
    parts = []
    for c, off, k in terms:
        arg = "n" if not off else f"n{off:+d}"
        if k == 1:
            base = arg if not off else f"({arg})"
        else:
            base = f"C({arg},{k})"
        if c == 1:
            parts.append(f"+{base}")
        elif c == -1:
            parts.append(f"-{base}")
        else:
            parts.append(f"{c:+d}{base}")
    if constant:
        parts.append(f"{constant:+d}")
    s = "".join(parts)
    if leading and s.startswith("+"):
        s = s[1:]
    return s


def _render_poly(coeffs) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            parts.append(f"{c}")
        else:
            x = "x" if i == 1 else f"x^{i}"
            if c == 1:
                parts.append(f"+{x}")
            elif c == -1:
                parts.append(f"-{x}")
            else:
                parts.append(f"{c:+d}{x}")
    return "".join(parts) or "0"
