"""Jones polynomials: a bracket state-sum oracle and the torus closed form.

The Kauffman bracket of a closed-braid diagram sums A^(a - b) * d^(loops - 1)
over all 2^c smoothings (a type-A smoothings, b type-B, d = -A^2 - A^-2),
with smoothings iterated in binary-counter order and loops counted by
union-find over the arcs of the diagram.  Multiplying by (-A)^(-3w) (writhe
w = c, every crossing positive) and substituting t = A^-4 gives the Jones
polynomial under the dynamics chirality convention, which fixes
V(trefoil) = t + t^3 - t^4; the mirror is t -> 1/t and is never applied
implicitly.

Torus knots additionally have the closed form

    V(p, q) = t^((p-1)(q-1)/2) (1 - t^(p+1) - t^(q+1) + t^(p+q)) / (1 - t^2)

whose division is performed exactly and guarded: a numerator not divisible by
1 - t^2 raises instead of rounding.  Jones polynomials for multi-component
links are only available through the bracket oracle.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping, Sequence

from .errors import (
    DivisionRemainderError,
    InternalInconsistencyError,
    NotCoprimeError,
    TooManyCrossingsError,
    ValidationError,
)

DEFAULT_MAX_CROSSINGS = 20


class LaurentPoly:
    """Integer Laurent polynomial with exponents in quarter-integer units.

    The key e stands for var**(e/4).  Quarter units let one exact type carry
    both the bracket variable (integer exponents, stored as multiples of 4)
    and the Jones variable, whose exponents for links live in (1/2)Z.  Zero
    coefficients are never stored; all arithmetic is exact over the integers.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        cleaned: dict[int, int] = {}
        for exponent, coefficient in items:
            if coefficient:
                cleaned[int(exponent)] = cleaned.get(int(exponent), 0) + int(coefficient)
        self._coeffs = {e: c for e, c in cleaned.items() if c}

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, coefficient: int, quarter_exponent: int) -> "LaurentPoly":
        return cls({quarter_exponent: coefficient})

    @classmethod
    def var_power(cls, exponent: int) -> "LaurentPoly":
        """var**exponent for integer ``exponent`` (stored as 4 * exponent)."""
        return cls({4 * exponent: 1})

    def items(self):
        return self._coeffs.items()

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Sorted (quarter_exponent, coefficient) pairs; the wire form."""
        return tuple(sorted(self._coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self.pairs())

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    def __pow__(self, power: int) -> "LaurentPoly":
        if power < 0:
            raise ValidationError("negative powers are not defined for polynomials")
        result, base = LaurentPoly.one(), self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def map_exponents(self, fn) -> "LaurentPoly":
        out: dict[int, int] = {}
        for e, c in self._coeffs.items():
            new = fn(e)
            if new in out:
                raise InternalInconsistencyError("exponent map is not injective")
            out[new] = c
        return LaurentPoly(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.format()!r})"

    def format(self, var: str = "t") -> str:
        """Human-readable form, fractional exponents rendered as e/4 or e/2."""
        if not self._coeffs:
            return "0"
        chunks: list[str] = []
        for e, c in sorted(self._coeffs.items()):
            if e == 0:
                body = str(abs(c))
            else:
                if e % 4 == 0:
                    exp = str(e // 4)
                elif e % 2 == 0:
                    exp = f"({e // 2}/2)"
                else:
                    exp = f"({e}/4)"
                power = var if exp == "1" else f"{var}^{exp}"
                body = power if abs(c) == 1 else f"{abs(c)}*{power}"
            sign = "-" if c < 0 else "+"
            chunks.append(f"{sign} {body}")
        joined = " ".join(chunks)
        return joined[2:] if joined.startswith("+ ") else "-" + joined[2:]


def divide_exact(numerator: LaurentPoly, denominator: LaurentPoly) -> LaurentPoly:
    """Exact Laurent division; raises DivisionRemainderError if inexact."""
    if not denominator:
        raise ValidationError("division by the zero polynomial")
    if not numerator:
        return LaurentPoly.zero()
    remainder = dict(numerator.items())
    den = sorted(denominator.items())
    den_lead_exp, den_lead_coeff = den[-1]
    den_min_exp = den[0][0]
    min_quotient_exp = min(remainder) - den_min_exp
    quotient: dict[int, int] = {}
    while remainder:
        lead_exp = max(remainder)
        lead_coeff = remainder[lead_exp]
        shift = lead_exp - den_lead_exp
        if lead_coeff % den_lead_coeff or shift < min_quotient_exp:
            raise DivisionRemainderError("division left a nonzero remainder")
        q = lead_coeff // den_lead_coeff
        quotient[shift] = quotient.get(shift, 0) + q
        for e, c in den:
            target = e + shift
            value = remainder.get(target, 0) - q * c
            if value:
                remainder[target] = value
            else:
                remainder.pop(target, None)
    return LaurentPoly(quotient)


def _crossing_positions(crossings: Sequence) -> list[int]:
    positions = []
    for crossing in crossings:
        positions.append(int(getattr(crossing, "position", crossing)))
    return positions


def kauffman_bracket(
    crossings: Sequence,
    n: int,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
) -> LaurentPoly:
    """Bracket polynomial (in A) of the closure of a positive braid word.

    ``crossings`` is a braid word as generator positions, either bare ints or
    crossing records with a ``position`` attribute.  States are enumerated in
    binary-counter order (bit j set = B-smoothing at crossing j); a type-B
    smoothing merges the two incoming arcs at a cap and opens one fresh arc
    at the cup, so loop counting is union-find over the arc endpoints, with
    the braid closure identifying bottom and top positions.
    """
    if n < 1:
        raise ValidationError("strand count must be >= 1")
    positions = _crossing_positions(crossings)
    for p in positions:
        if not 1 <= p <= n - 1:
            raise ValidationError(f"generator index {p} outside 1..{n - 1}")
    c = len(positions)
    if c > max_crossings:
        raise TooManyCrossingsError(f"{c} crossings exceeds the limit of {max_crossings}")
    pos0 = [p - 1 for p in positions]

    # multiplicity of each (a_count - b_count, loop_count) pair over all states
    counts: dict[tuple[int, int], int] = {}
    base = list(range(n))
    for state in range(1 << c):
        parent = base.copy()
        arc = base.copy()
        fresh = n
        bits = state
        for p in pos0:
            if bits & 1:
                x = arc[p]
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                y = arc[p + 1]
                while parent[y] != y:
                    parent[y] = parent[parent[y]]
                    y = parent[y]
                if x != y:
                    parent[x] = y
                parent.append(fresh)
                arc[p] = arc[p + 1] = fresh
                fresh += 1
            bits >>= 1
        for i in range(n):
            x = arc[i]
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            y = i
            while parent[y] != y:
                parent[y] = parent[parent[y]]
                y = parent[y]
            if x != y:
                parent[x] = y
        loops = 0
        for i in range(fresh):
            if parent[i] == i:
                loops += 1
        key = (c - 2 * state.bit_count(), loops)
        counts[key] = counts.get(key, 0) + 1

    delta = LaurentPoly({8: -1, -8: -1})  # -A^2 - A^-2 in quarter units
    max_loops = max(loops for _, loops in counts)
    delta_powers = [LaurentPoly.one()]
    for _ in range(max_loops - 1):
        delta_powers.append(delta_powers[-1] * delta)
    total: dict[int, int] = {}
    for (net_a, loops), multiplicity in counts.items():
        for e, coeff in delta_powers[loops - 1].items():
            exponent = e + 4 * net_a
            total[exponent] = total.get(exponent, 0) + multiplicity * coeff
    return LaurentPoly(total)


def jones_of_braid(
    crossings: Sequence,
    n: int,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
) -> LaurentPoly:
    """Jones polynomial (in t) of the closure of a positive braid word.

    Normalizes the bracket by (-A)^(-3w) with writhe w equal to the crossing
    count (all crossings positive), then substitutes t = A^-4.
    """
    bracket = kauffman_bracket(crossings, n, max_crossings=max_crossings)
    w = len(_crossing_positions(crossings))
    sign = -1 if w % 2 else 1
    normalized = bracket * LaurentPoly.monomial(sign, -12 * w)

    def to_jones(e: int) -> int:
        if e % 4:
            raise InternalInconsistencyError("bracket exponent not a multiple of 4")
        return -e // 4

    return normalized.map_exponents(to_jones)


def jones_torus(p: int, q: int) -> LaurentPoly:
    """Closed-form Jones polynomial of the (p, q) torus knot.

    V = t^((p-1)(q-1)/2) (1 - t^(p+1) - t^(q+1) + t^(p+q)) / (1 - t^2); the
    division must be exact, and the guard raising otherwise is what certifies
    the numerator.  Symmetric in p and q.
    """
    if p < 2 or q < 2:
        raise ValidationError("torus parameters must both be >= 2")
    if math.gcd(p, q) != 1:
        raise NotCoprimeError(f"({p}, {q}) is a torus link, not a knot")
    numerator = (
        LaurentPoly.one()
        - LaurentPoly.var_power(p + 1)
        - LaurentPoly.var_power(q + 1)
        + LaurentPoly.var_power(p + q)
    )
    denominator = LaurentPoly.one() - LaurentPoly.var_power(2)
    quotient = divide_exact(numerator, denominator)
    # (p-1)(q-1) is even for coprime p, q, so the prefactor exponent is integral
    return LaurentPoly.monomial(1, 2 * (p - 1) * (q - 1)) * quotient
