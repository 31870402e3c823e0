"""T-links: concatenated torus-braid blocks, and their Lorenz counterparts.

A T-braid with parameters ((p_1, q_1), ..., (p_k, q_k)), p_1 < ... < p_k, is
the braid on p_k strands

    (s_1 s_2 ... s_{p_1 - 1})^{q_1} ... (s_1 s_2 ... s_{p_k - 1})^{q_k}

and its closure is a T-link.  T-links coincide with Lorenz links, with the
trip parameters of the Lorenz braid equal to the T-link parameters; both
directions of that correspondence are implemented here, and the package's
test suite certifies it by comparing Jones polynomials of the two closures
rather than by isotopy.

Blocks with p_i = 1 contribute no letters to the braid word (a full twist on
one strand).  They still arise as trip parameters of Lorenz braids whose
words contain consecutive L's, so parameter lists admit p_1 = 1 and an empty
list (the degenerate unknot); `TLinkParams.is_normalized` reports whether the
stricter normalization p_1 >= 2, q_k >= 2 holds.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import LorenzBraid, strand_profile
from .errors import InfeasibleError, InvalidParamsError


@dataclass(frozen=True)
class TLinkParams:
    """Ordered torus-block parameters ((p_1, q_1), ..., (p_k, q_k))."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        previous = 0
        for p, q in self.pairs:
            if p < 1 or q < 1:
                raise InvalidParamsError(f"block ({p}, {q}) must be positive")
            if p <= previous:
                raise InvalidParamsError("block widths p_i must strictly increase")
            previous = p

    @property
    def is_normalized(self) -> bool:
        """Whether the trivial-case-free normalization holds: p_1 >= 2, q_k >= 2
        (the last condition waived for a single block)."""
        if not self.pairs:
            return False
        if self.pairs[0][0] < 2:
            return False
        return len(self.pairs) == 1 or self.pairs[-1][1] >= 2

    @property
    def strands(self) -> int:
        """Strand count of the T-braid: the widest block (1 when empty)."""
        return self.pairs[-1][0] if self.pairs else 1

    def to_json_list(self) -> list[list[int]]:
        return [list(pq) for pq in self.pairs]

    @classmethod
    def from_pairs(cls, pairs) -> "TLinkParams":
        return cls(tuple((int(p), int(q)) for p, q in pairs))


def t_braid_word(params: TLinkParams) -> list[int]:
    """Generator indices of the T-braid: each (p, q) block contributes
    (s_1 ... s_{p-1}) repeated q times, for a total of sum q_i (p_i - 1)."""
    word: list[int] = []
    for p, q in params.pairs:
        word.extend(list(range(1, p)) * q)
    return word


def to_lorenz(params: TLinkParams) -> LorenzBraid:
    """The unique Lorenz braid whose trip parameters equal ``params``.

    For each block (p_i, q_i) there are q_i rightward strands of displacement
    p_i, packed at start positions 1..m in non-decreasing displacement order;
    leftward strands fill the remaining start positions and take the unused
    targets in increasing order, the unique order-preserving completion.
    """
    displacements = [p for p, q in params.pairs for _ in range(q)]
    m = len(displacements)
    if m == 0:
        return LorenzBraid(1, (1,), ("L",), (0,))
    n = m + params.pairs[-1][0]
    over_targets = [j + displacements[j - 1] for j in range(1, m + 1)]
    under_targets = sorted(set(range(1, n + 1)) - set(over_targets))
    for offset, target in enumerate(under_targets, start=m + 1):
        if target >= offset:
            raise InfeasibleError(
                f"leftward strand at {offset} would not move left (target {target})"
            )
    targets = tuple(over_targets + under_targets)
    letters = ("L",) * m + ("R",) * (n - m)

    components = [0] * n
    label, seen = 0, [False] * (n + 1)
    for start in range(1, n + 1):
        if seen[start]:
            continue
        pos = start
        while not seen[pos]:
            seen[pos] = True
            components[pos - 1] = label
            pos = targets[pos - 1]
        label += 1

    braid = LorenzBraid(n, targets, letters, tuple(components))
    if strand_profile(braid).trip != params.pairs:
        raise InfeasibleError("constructed braid does not reproduce the parameters")
    return braid


def from_lorenz(braid: LorenzBraid) -> TLinkParams:
    """T-link parameters of a Lorenz braid: exactly its trip parameters."""
    return TLinkParams(strand_profile(braid).trip)
