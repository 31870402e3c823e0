"""Lorenz braids: the positive permutation braids carried by the template.

Cutting the template open along its branch line turns a family of closed
orbits into a braid whose strands each cross any other strand at most once.
Strands that round the left lobe move rightward and pass in front; strands
that round the right lobe move leftward behind them.  Every crossing is
positive, the dynamics sign convention used throughout this package.

Construction from words: every rotation of every component word is one
strand.  Rotations are sorted by their infinite periodic extensions (a
tie-free order for valid word families), and the strand starting at the rank
of rotation r ends at the rank of r shifted by one letter.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InternalInconsistencyError, OddInterCrossingsError
from .words import CyclicWord, LinkWords, canonicalize, extend_periodic

EAR_TYPES = ("LL", "LR", "RL", "RR")


class Crossing(NamedTuple):
    """One positive crossing: generator position plus the strand ids involved."""

    position: int  # 1-based generator index; crosses positions (position, position + 1)
    over: int  # start position of the overcrossing (left-lobe) strand
    under: int  # start position of the undercrossing (right-lobe) strand


class StrandMeta(NamedTuple):
    """Per-strand labels: component, ear type, crossing role, displacement.

    ``over`` is True for strands that move right and pass in front; the fixed
    strands of the degenerate one-letter words cross nothing and report False.
    """

    component: int
    ear_type: str
    over: bool
    displacement: int


@dataclass(frozen=True)
class LorenzBraid:
    """A positive permutation braid with per-strand letter and component labels.

    ``targets[i - 1]`` is the end position of the strand starting at position
    i (1-based).  ``letters[i - 1]`` records which lobe the strand rounds,
    and ``components[i - 1]`` the link component it belongs to.  Left-lobe
    strands occupy an initial block of start positions and have strictly
    increasing targets; right-lobe strands fill the rest, also with
    increasing targets.  Fixed strands (target == start) occur only for the
    two degenerate lobe-boundary unknots named by the words L and R.
    """

    n: int
    targets: tuple[int, ...]
    letters: tuple[str, ...]
    components: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.n
        if n < 1 or len(self.targets) != n or len(self.letters) != n or len(self.components) != n:
            raise InternalInconsistencyError("field lengths disagree with strand count")
        if sorted(self.targets) != list(range(1, n + 1)):
            raise InternalInconsistencyError("targets is not a permutation of 1..n")
        if any(letter not in "LR" for letter in self.letters):
            raise InternalInconsistencyError("strand letters must be L or R")
        l_count = sum(1 for letter in self.letters if letter == "L")
        if any(letter == "R" for letter in self.letters[:l_count]):
            raise InternalInconsistencyError("left-lobe strands must form an initial block")
        for i, (letter, target) in enumerate(zip(self.letters, self.targets), start=1):
            displacement = target - i
            if letter == "L" and displacement < 0:
                raise InternalInconsistencyError(f"left-lobe strand {i} moves left")
            if letter == "R" and displacement > 0:
                raise InternalInconsistencyError(f"right-lobe strand {i} moves right")
        for block in (range(1, l_count + 1), range(l_count + 1, n + 1)):
            block_targets = [self.targets[i - 1] for i in block]
            if block_targets != sorted(block_targets):
                raise InternalInconsistencyError("targets must increase within each lobe block")
        counts = self.ear_counts
        if counts[1] != counts[2]:
            raise InternalInconsistencyError("strands entering and leaving the right lobe differ")
        self._check_components()

    def _check_components(self) -> None:
        labels = set(self.components)
        if labels != set(range(len(labels))):
            raise InternalInconsistencyError("component labels must be 0..mu-1")
        cycle_label: dict[int, int] = {}
        for cycle in self.cycles():
            comp = {self.components[i - 1] for i in cycle}
            if len(comp) != 1:
                raise InternalInconsistencyError("a cycle mixes component labels")
            label = comp.pop()
            if label in cycle_label:
                raise InternalInconsistencyError("two cycles share a component label")
            cycle_label[label] = cycle[0]
        if len(cycle_label) != len(labels):
            raise InternalInconsistencyError("component labels do not match cycles")

    # -- derived structure ------------------------------------------------

    @property
    def l_count(self) -> int:
        return sum(1 for letter in self.letters if letter == "L")

    @property
    def r_count(self) -> int:
        return self.n - self.l_count

    @property
    def component_count(self) -> int:
        return len(set(self.components))

    def displacement(self, start: int) -> int:
        return self.targets[start - 1] - start

    @property
    def over_positions(self) -> tuple[int, ...]:
        """Start positions of strands that move right (displacement > 0)."""
        return tuple(i for i in range(1, self.n + 1) if self.displacement(i) > 0)

    @property
    def under_positions(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.n + 1) if self.displacement(i) < 0)

    def ear_type(self, start: int) -> str:
        """Lobe pair (this pass, next pass) of the strand starting at ``start``."""
        return self.letters[start - 1] + self.letters[self.targets[start - 1] - 1]

    def strand_meta(self, start: int) -> StrandMeta:
        displacement = self.displacement(start)
        return StrandMeta(
            component=self.components[start - 1],
            ear_type=self.ear_type(start),
            over=displacement > 0,
            displacement=displacement,
        )

    @property
    def ear_counts(self) -> tuple[int, int, int, int]:
        """Strand counts by ear type, ordered (LL, LR, RL, RR)."""
        counter = Counter(self.ear_type(i) for i in range(1, self.n + 1))
        return tuple(counter.get(t, 0) for t in EAR_TYPES)  # type: ignore[return-value]

    @property
    def crossings(self) -> int:
        """Crossing count of the diagram: the inversion number of the permutation."""
        t = self.targets
        return sum(1 for i in range(self.n) for j in range(i + 1, self.n) if t[i] > t[j])

    def cycles(self) -> list[tuple[int, ...]]:
        """Permutation cycles in orbit order, each starting at its least position."""
        seen = [False] * (self.n + 1)
        out: list[tuple[int, ...]] = []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            pos = self.targets[start - 1]
            while pos != start:
                cycle.append(pos)
                seen[pos] = True
                pos = self.targets[pos - 1]
            out.append(tuple(cycle))
        return out

    # -- wire form ---------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "targets": list(self.targets),
            "components": list(self.components),
            "types": [self.ear_type(i) for i in range(1, self.n + 1)],
            "trip": [list(pq) for pq in strand_profile(self).trip],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "LorenzBraid":
        letters = tuple(t[0] for t in data["types"])
        return cls(
            n=int(data["n"]),
            targets=tuple(int(t) for t in data["targets"]),
            letters=letters,
            components=tuple(int(c) for c in data["components"]),
        )


@dataclass(frozen=True)
class StrandProfile:
    """Trip parametrization of a Lorenz braid.

    ``trip`` lists (displacement p_i, multiplicity q_i) over the rightward
    strands with p_1 < p_2 < ...; ``crossings`` is sum q_i * p_i, which equals
    the inversion count of the braid permutation.  The four ear-type counts
    are carried along for the braid-index and symmetry formulas.
    """

    ll: int
    lr: int
    rl: int
    rr: int
    trip: tuple[tuple[int, int], ...]
    crossings: int

    @property
    def ear_counts(self) -> tuple[int, int, int, int]:
        return (self.ll, self.lr, self.rl, self.rr)


def _sorted_rotations(link: LinkWords) -> list[tuple[str, int, int]]:
    """All rotations as (spelling, component, offset), in extension order."""
    rotations = [
        (word.rotation(k), ci, k)
        for ci, word in enumerate(link.words)
        for k in range(len(word))
    ]
    key_len = 2 * max(len(w) for w in link.words)
    rotations.sort(key=lambda item: extend_periodic(item[0], key_len))
    for (a, _, _), (b, _, _) in zip(rotations, rotations[1:]):
        if extend_periodic(a, key_len) == extend_periodic(b, key_len):
            raise InternalInconsistencyError(f"rotation order tied on {a!r}")
    return rotations


def braid_of_words(link: LinkWords) -> LorenzBraid:
    """The Lorenz braid whose closure is the link named by ``link``.

    The strand count is the total letter count; strand i is overcrossing
    exactly when its rotation begins with L (fixed strands of the degenerate
    one-letter words excepted).
    """
    rotations = _sorted_rotations(link)
    rank = {(ci, k): pos for pos, (_, ci, k) in enumerate(rotations, start=1)}
    n = len(rotations)
    targets = [0] * n
    letters = [""] * n
    components = [0] * n
    for pos, (spelling, ci, k) in enumerate(rotations, start=1):
        length = len(link.words[ci])
        targets[pos - 1] = rank[(ci, (k + 1) % length)]
        letters[pos - 1] = spelling[0]
        components[pos - 1] = ci
    return LorenzBraid(n, tuple(targets), tuple(letters), tuple(components))


def position_sequences(link: LinkWords) -> list[tuple[int, ...]]:
    """Per component, the rank of each successive rotation of the word.

    Element k of a sequence is the sorted position of the rotation starting k
    letters into the canonical spelling; the braid strand starting at rank k
    ends at rank k+1.
    """
    rotations = _sorted_rotations(link)
    rank = {(ci, k): pos for pos, (_, ci, k) in enumerate(rotations, start=1)}
    return [
        tuple(rank[(ci, k)] for k in range(len(word)))
        for ci, word in enumerate(link.words)
    ]


def words_of_braid(braid: LorenzBraid) -> list[CyclicWord]:
    """Read each cycle's letters back into a canonical cyclic word.

    Components built by :func:`lorenzlinks.tlink.to_lorenz` may repeat a word
    (parallel orbits), so the result is a list, not a LinkWords.
    """
    out = []
    for cycle in braid.cycles():
        out.append(canonicalize("".join(braid.letters[i - 1] for i in cycle)))
    return out


def strand_profile(braid: LorenzBraid) -> StrandProfile:
    """Group the rightward strands by displacement and count crossings."""
    groups = Counter(braid.displacement(i) for i in braid.over_positions)
    trip = tuple(sorted(groups.items()))
    total = sum(p * q for p, q in trip)
    if total != braid.crossings:
        raise InternalInconsistencyError(
            f"sum q_i p_i = {total} but inversion count = {braid.crossings}"
        )
    ll, lr, rl, rr = braid.ear_counts
    return StrandProfile(ll=ll, lr=lr, rl=rl, rr=rr, trip=trip, crossings=total)


def braid_generators(braid: LorenzBraid) -> list[Crossing]:
    """A positive braid word realizing the permutation, one crossing per pair.

    Rightward strands are slid to their targets one at a time, rightmost
    first, so each slide passes only leftward strands.  The word length is
    the inversion count of the permutation.  Any other single-crossing
    realization presents the same braid element, so downstream consumers may
    treat the result as a crossing multiset.
    """
    arrangement = list(range(1, braid.n + 1))
    out: list[Crossing] = []
    for over in reversed(braid.over_positions):
        target = braid.targets[over - 1]
        if arrangement[over - 1] != over:
            raise InternalInconsistencyError("slide order corrupted the prefix")
        for idx in range(over - 1, target - 1):
            under = arrangement[idx + 1]
            if braid.letters[under - 1] != "R":
                raise InternalInconsistencyError("two left-lobe strands crossed")
            out.append(Crossing(position=idx + 1, over=over, under=under))
            arrangement[idx], arrangement[idx + 1] = arrangement[idx + 1], arrangement[idx]
    inverse = [0] * braid.n
    for start, target in enumerate(braid.targets, start=1):
        inverse[target - 1] = start
    if arrangement != inverse:
        raise InternalInconsistencyError("generator sweep does not realize the permutation")
    if len(out) != braid.crossings:
        raise InternalInconsistencyError("generator count differs from inversion count")
    return out


def linking_matrix(braid: LorenzBraid) -> list[list[int]]:
    """Pairwise linking numbers of the closure's components.

    With every crossing positive, the linking number of components A and B is
    half their total crossing count, equivalently the number of crossings
    with the overstrand in A; both counts are computed and must agree.  The
    diagonal is left zero.
    """
    mu = braid.component_count
    over_counts = [[0] * mu for _ in range(mu)]
    for crossing in braid_generators(braid):
        a = braid.components[crossing.over - 1]
        b = braid.components[crossing.under - 1]
        over_counts[a][b] += 1
    matrix = [[0] * mu for _ in range(mu)]
    for a in range(mu):
        for b in range(a + 1, mu):
            total = over_counts[a][b] + over_counts[b][a]
            if total % 2:
                raise OddInterCrossingsError(
                    f"components {a} and {b} cross {total} times"
                )
            if over_counts[a][b] != over_counts[b][a]:
                raise OddInterCrossingsError(
                    f"asymmetric over-counts for components {a} and {b}"
                )
            matrix[a][b] = matrix[b][a] = total // 2
    return matrix
