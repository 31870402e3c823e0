"""Hyperbolic matrix classes in PSL(2, Z) and their cyclic LR words.

The generators are realized as the unipotent pair

    L = [[1, 1], [0, 1]],   R = [[1, 0], [1, 1]],

so a cyclic word with both letters multiplies out to a hyperbolic matrix
with non-negative entries, and conversely every hyperbolic conjugacy class
with trace > 2 is that of exactly one aperiodic cyclic word.  Decoding runs
the continued-fraction expansion of the attracting fixed point in exact
integer surd arithmetic: the expansion is eventually periodic, the periodic
part (doubled when odd) gives alternating L/R run lengths, and the run
letter is fixed by the global parity of the quotient's position, since each
expansion step conjugates by a determinant -1 element that swaps the lobes.

The Rademacher value of a word is its letter-count imbalance #L - #R.  The
independent cross-check is Dedekind-sum arithmetic on the matrix: with
A = [[a, b], [c, d]] and c != 0,

    Phi(A) = (a + d)/c - 12 sign(c) s(d, |c|),
    Psi(A) = Phi(A) - 3 sign(c (a + d)),

where s(h, k) is the classical Dedekind sawtooth sum.  Psi is a conjugacy
invariant and must equal the letter count on every mixed word.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, isqrt

from .errors import (
    InternalInconsistencyError,
    NotHyperbolicError,
    NotPrimitiveError,
    ParabolicError,
    ValidationError,
)
from .words import CyclicWord, canonicalize


@dataclass(frozen=True)
class Mat2Z:
    """A 2x2 integer matrix of determinant 1, equal up to global sign."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.a * self.d - self.b * self.c != 1:
            raise ValidationError(
                f"determinant {self.a * self.d - self.b * self.c} != 1"
            )

    @classmethod
    def identity(cls) -> "Mat2Z":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_rows(cls, rows) -> "Mat2Z":
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))

    def to_rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    @property
    def trace(self) -> int:
        return self.a + self.d

    @property
    def is_hyperbolic(self) -> bool:
        return abs(self.trace) > 2

    def __mul__(self, other: "Mat2Z") -> "Mat2Z":
        return Mat2Z(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "Mat2Z":
        return Mat2Z(self.d, -self.b, -self.c, self.a)

    def normalized(self) -> "Mat2Z":
        """The projective representative with trace > 0 (sign of (c, b) breaks
        the tie for trace 0)."""
        t = self.trace
        if t < 0 or (t == 0 and (self.c < 0 or (self.c == 0 and self.b < 0))):
            return Mat2Z(-self.a, -self.b, -self.c, -self.d)
        return self


L_MATRIX = Mat2Z(1, 1, 0, 1)
R_MATRIX = Mat2Z(1, 0, 1, 1)
_GENERATORS = {"L": L_MATRIX, "R": R_MATRIX}


def matrix_of_word(word: CyclicWord | str) -> Mat2Z:
    """Product of the generator matrices in word order.

    Requires both letters (a single-letter word is parabolic).  The result is
    hyperbolic with non-negative entries; its trace, hence its conjugacy
    class, does not depend on the rotation chosen.
    """
    w = canonicalize(word)
    if len(set(w.letters)) < 2:
        raise ParabolicError(f"{w.letters!r} uses one letter only")
    result = Mat2Z.identity()
    for letter in w.letters:
        result = result * _GENERATORS[letter]
    if min(result.a, result.b, result.c, result.d) < 0 or result.trace <= 2:
        raise InternalInconsistencyError("word matrix left the positive monoid")
    return result


def _floor_surd(p: int, root: int, q: int) -> int:
    """floor((p + sqrt(disc)) / q) given root = isqrt(disc), disc irrational."""
    if q > 0:
        return (p + root) // q
    return -((p + root) // -q) - 1


def word_of_matrix(matrix: Mat2Z) -> CyclicWord:
    """The canonical cyclic word whose matrix is conjugate to ``matrix``.

    Runs the integer continued-fraction expansion of the attracting fixed
    point ((a - d) + sqrt(trace^2 - 4)) / (2c).  The (P, Q) surd states
    eventually cycle; the cycle's quotients are alternating run lengths, with
    the letter of each run decided by the parity of its position in the full
    expansion (L at even positions).  A proper power of a shorter class has
    the same fixed points, so it decodes to the primitive word and is
    reported as an error via the trace check.
    """
    m = matrix.normalized()
    t = m.trace
    if t <= 2:
        raise NotHyperbolicError(f"trace {t} <= 2 carries no closed geodesic")
    disc = t * t - 4
    p, q = m.a - m.d, 2 * m.c
    if q == 0:
        raise NotHyperbolicError("lower-left entry 0 is impossible for hyperbolic")
    if (disc - p * p) % q:
        scale = abs(q)
        p, disc, q = p * scale, disc * scale * scale, q * scale
    root = isqrt(disc)
    if root * root == disc:
        raise InternalInconsistencyError("trace^2 - 4 cannot be a perfect square")

    quotients: list[int] = []
    seen: dict[tuple[int, int], int] = {}
    state = (p, q)
    while state not in seen:
        seen[state] = len(quotients)
        sp, sq = state
        digit = _floor_surd(sp, root, sq)
        quotients.append(digit)
        np_ = digit * sq - sp
        state = (np_, (disc - np_ * np_) // sq)
    start = seen[state]
    period = quotients[start:]
    if len(period) % 2:
        period = period + period

    runs: list[str] = []
    for offset, count in enumerate(period, start=start):
        if count < 1:
            raise InternalInconsistencyError("periodic quotient < 1")
        runs.append(("L" if offset % 2 == 0 else "R") * count)
    word = canonicalize("".join(runs))
    if matrix_of_word(word).trace != t:
        raise NotPrimitiveError(
            f"trace {t} is a proper power of the class of {word.letters!r}"
        )
    return word


def _sawtooth(x: Fraction) -> Fraction:
    if x.denominator == 1:
        return Fraction(0)
    return x - floor(x) - Fraction(1, 2)


def dedekind_sum(h: int, k: int) -> Fraction:
    """s(h, k) = sum_{i=1}^{k-1} ((i/k)) ((h i / k)) with the sawtooth ((x))."""
    if k < 1:
        raise ValidationError("k must be >= 1")
    return sum(
        (_sawtooth(Fraction(i, k)) * _sawtooth(Fraction(h * i, k)) for i in range(1, k)),
        Fraction(0),
    )


def _sign(value: int) -> int:
    return (value > 0) - (value < 0)


def rademacher_phi(matrix: Mat2Z) -> Fraction:
    """Phi on the trace-positive representative; (a+d)/c - 12 sign(c) s(d, |c|),
    or b/d for upper-triangular matrices."""
    m = matrix.normalized()
    if m.c == 0:
        return Fraction(m.b, m.d)
    return Fraction(m.a + m.d, m.c) - 12 * _sign(m.c) * dedekind_sum(m.d, abs(m.c))


def rademacher_psi(matrix: Mat2Z) -> int:
    """The conjugacy-invariant Psi = Phi - 3 sign(c (a + d)); always an integer."""
    m = matrix.normalized()
    value = rademacher_phi(m) - 3 * _sign(m.c * (m.a + m.d))
    if value.denominator != 1:
        raise InternalInconsistencyError(f"Psi came out non-integral: {value}")
    return int(value)


def rademacher(word: CyclicWord | str) -> int:
    """Rademacher value of a mixed word: #L - #R.

    Agrees with the Dedekind-sum invariant of the word's matrix under this
    module's generator realization; that equality is enforced by the test
    suite rather than recomputed here.
    """
    w = canonicalize(word)
    if len(set(w.letters)) < 2:
        raise ParabolicError(f"{w.letters!r} uses one letter only")
    return w.letters.count("L") - w.letters.count("R")
