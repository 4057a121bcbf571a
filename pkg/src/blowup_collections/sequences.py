"""Ordered sequences of line bundles and their exceptionality verdicts.

A *collection* here is an ordered tuple of divisor classes ``(D_1, ..., D_l)``
on one of the three blow-up models, standing for the sequence of line
bundles ``O(D_1), ..., O(D_l)``.  The sequence is exceptional exactly when
for every pair ``j < i`` all cohomology of ``O(D_j - D_i)`` vanishes; the
three-valued pair verdicts combine with precedence
``NONZERO > UNKNOWN > ZERO`` into a collection verdict.

Twisting every member by a fixed line bundle changes nothing, so
collections are *normalized* to start at the trivial class ``(0, 0)``.
All operations return new value objects; nothing is mutated.

Mutation-style operations on normalized length-6 collections:

* :func:`helix_rotate_right` / :func:`helix_rotate_left` -- move the first
  bundle to the end twisted by the anticanonical class (resp. the inverse),
  then renormalize;
* :func:`transpose_orthogonal` -- swap an adjacent pair whose two
  difference classes both have vanishing cohomology (completely orthogonal
  neighbours), then renormalize;
* :func:`augment_point_blowup` -- lift a full exceptional collection of
  ``O(d_1), ..., O(d_4)`` on projective 3-space to a length-6 collection on
  the point blow-up by inserting exceptional-divisor twists around a chosen
  position.

EXAMPLES::

    >>> X = variety_model("point")
    >>> seq = make_collection("point", [(0, 0), (1, -1), (1, 0), (2, -2), (2, -1), (3, -2)])
    >>> collection_verdict(X, seq)
    <VanishingVerdict.ZERO: 'Zero'>
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from .geometry import DivisorClass, VarietyModel, ZERO_CLASS, E_CLASS, variety_model
from .vanishing import VanishingVerdict, coh_zero, meet_verdicts

__all__ = [
    "Collection",
    "make_collection",
    "normalize",
    "pair_verdict",
    "collection_verdict",
    "helix_rotate_right",
    "helix_rotate_left",
    "transpose_orthogonal",
    "augment_point_blowup",
]

PairLike = Union[DivisorClass, Sequence[int]]


@dataclass(frozen=True, order=True)
class Collection:
    """Immutable ordered sequence of 1 to 6 divisor classes on one variety."""

    variety: str
    entries: tuple[DivisorClass, ...]

    def __post_init__(self) -> None:
        if self.variety not in ("point", "line", "cubic"):
            raise ValueError(f"unknown variety tag {self.variety!r}")
        if not (1 <= len(self.entries) <= 6):
            raise ValueError(
                f"a collection holds between 1 and 6 entries, got {len(self.entries)}"
            )
        if not all(isinstance(e, DivisorClass) for e in self.entries):
            raise ValueError("collection entries must be DivisorClass instances")

    @property
    def is_normalized(self) -> bool:
        return self.entries[0] == ZERO_CLASS

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def to_json_dict(self) -> dict:
        return {
            "variety": self.variety,
            "entries": [[e.a, e.b] for e in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @staticmethod
    def from_json_dict(data: Mapping) -> "Collection":
        try:
            variety = data["variety"]
            raw_entries = data["entries"]
        except (KeyError, TypeError) as exc:
            raise ValueError(
                'collection JSON must carry "variety" and "entries" keys'
            ) from exc
        return make_collection(variety, raw_entries)

    @staticmethod
    def from_json(text: str) -> "Collection":
        return Collection.from_json_dict(json.loads(text))

    def __str__(self) -> str:
        return "[" + ", ".join(str(e) for e in self.entries) + "]"


def _as_class(entry: PairLike) -> DivisorClass:
    if isinstance(entry, DivisorClass):
        return entry
    a, b = entry
    if not (isinstance(a, int) and isinstance(b, int)):
        raise ValueError(f"divisor coordinates must be integers, got {entry!r}")
    return DivisorClass(a, b)


def make_collection(variety: str, entries: Iterable[PairLike]) -> Collection:
    """Build a :class:`Collection` from pairs or :class:`DivisorClass` values."""
    return Collection(variety, tuple(_as_class(e) for e in entries))


def _check_model(model: VarietyModel, seq: Collection) -> None:
    if model.tag != seq.variety:
        raise ValueError(
            f"collection is tagged {seq.variety!r} but the model is {model.tag!r}"
        )


def normalize(seq: Collection) -> Collection:
    """Translate all entries so the first becomes ``(0, 0)``.

    Exceptionality is invariant under this twist, and normalization is
    idempotent.
    """
    first = seq.entries[0]
    if first == ZERO_CLASS:
        return seq
    return Collection(seq.variety, tuple(e - first for e in seq.entries))


def pair_verdict(
    model: VarietyModel, earlier: DivisorClass, later: DivisorClass
) -> VanishingVerdict:
    """Verdict for the ordered pair requirement between two members.

    For ``earlier`` preceding ``later`` the requirement is that all
    cohomology of the difference ``O(earlier - later)`` vanishes.
    """
    return coh_zero(model, earlier - later)


def collection_verdict(model: VarietyModel, seq: Collection) -> VanishingVerdict:
    """Combined verdict over all ordered pairs ``j < i`` of the sequence.

    ``ZERO`` certifies an exceptional collection; ``NONZERO`` refutes it;
    ``UNKNOWN`` (cubic model only) means at least one pair is undecided and
    none is refuted.
    """
    _check_model(model, seq)
    return meet_verdicts(
        pair_verdict(model, seq.entries[j], seq.entries[i])
        for i in range(len(seq.entries))
        for j in range(i)
    )


def _require_rotatable(seq: Collection) -> None:
    if len(seq.entries) != 6:
        raise ValueError("helix rotation needs a length-6 collection")
    if not seq.is_normalized:
        raise ValueError("helix rotation needs a normalized collection")


def helix_rotate_right(model: VarietyModel, seq: Collection) -> Collection:
    """One right helix turn: first bundle moves to the end, twisted by ``-K``.

    On a normalized length-6 collection the head ``(0, 0)`` is dropped and
    ``-K`` is appended, after which the result is renormalized.  Six right
    turns are the identity on exceptional collections of length 6.
    """
    _check_model(model, seq)
    _require_rotatable(seq)
    rotated = seq.entries[1:] + (seq.entries[0] - model.canonical,)
    return normalize(Collection(seq.variety, rotated))


def helix_rotate_left(model: VarietyModel, seq: Collection) -> Collection:
    """One left helix turn, the exact inverse of :func:`helix_rotate_right`."""
    _check_model(model, seq)
    _require_rotatable(seq)
    rotated = (seq.entries[-1] + model.canonical,) + seq.entries[:-1]
    return normalize(Collection(seq.variety, rotated))


def transpose_orthogonal(model: VarietyModel, seq: Collection, index: int) -> Collection:
    """Swap the completely orthogonal neighbours at ``index`` and ``index + 1``.

    ``index`` is 0-based.  The swap is legal only when *both* difference
    classes of the adjacent pair have vanishing cohomology, which leaves
    every pair requirement of the sequence intact; otherwise ``ValueError``
    is raised.  The result is renormalized (a swap in position 0 moves the
    origin).
    """
    _check_model(model, seq)
    if not 0 <= index < len(seq.entries) - 1:
        raise ValueError(
            f"transposition index {index} out of range for length {len(seq.entries)}"
        )
    left, right = seq.entries[index], seq.entries[index + 1]
    if not (
        coh_zero(model, left - right) is VanishingVerdict.ZERO
        and coh_zero(model, right - left) is VanishingVerdict.ZERO
    ):
        raise ValueError(
            f"entries {index + 1} and {index + 2} are not mutually orthogonal"
        )
    swapped = list(seq.entries)
    swapped[index], swapped[index + 1] = right, left
    return normalize(Collection(seq.variety, tuple(swapped)))


def augment_point_blowup(degrees: Sequence[int], index: int) -> Collection:
    """Lift a length-4 exceptional collection from projective 3-space.

    INPUT:

    - ``degrees`` -- the four twists ``d_1 <= ... <= d_4`` of a full
      exceptional collection ``O(d_1), ..., O(d_4)`` downstairs;
    - ``index`` -- 1-based position ``i`` with ``2 <= i <= 4`` around which
      the exceptional-divisor staircase is inserted.

    The lift pulls back each ``O(d_j)`` and inserts twists by the
    exceptional divisor ``E``: members before the pivot gain ``2E``, the
    pivot pair contributes ``(E, 2E)`` and ``(0, E)`` steps, and members
    after position ``i`` are plain pullbacks, producing the length-6
    sequence ``(d_1 H + 2E, ..., d_{i-1} H + E, d_{i-1} H + 2E,
    d_i H, d_i H + E, d_{i+1} H, ...)`` on the point blow-up.

    EXAMPLES::

        >>> print(augment_point_blowup((0, 1, 2, 3), 3))
        [2E, H+E, H+2E, 2H, 2H+E, 3H]
    """
    degrees = tuple(degrees)
    if len(degrees) < 4:
        raise ValueError("need the four twists of a full collection downstairs")
    if len(degrees) > 4:
        raise ValueError(
            "only length-4 source collections are supported: the lift adds two "
            "members and the result must fit in a length-6 collection"
        )
    if any(not isinstance(d, int) for d in degrees):
        raise ValueError("twists must be integers")
    if not 2 <= index <= len(degrees):
        raise ValueError(
            f"pivot index {index} out of range; need 2 <= index <= {len(degrees)}"
        )
    # The staircase below is the n = 3 instance (ambient projective space of
    # dimension 3) of a construction that twists the i-n+1+m-th member by
    # (n-1-m)E and (n-m)E for m = 1..n-1.
    n = 3
    base = [DivisorClass(d, 0) for d in degrees]
    lifted: list[DivisorClass] = [base[j] + (n - 1) * E_CLASS for j in range(index - n + 1)]
    for m in range(1, n):
        k = index - n + m  # 0-based index of the member entering the staircase
        lifted.append(base[k] + (n - 1 - m) * E_CLASS)
        lifted.append(base[k] + (n - m) * E_CLASS)
    lifted.extend(base[index:])
    return Collection("point", tuple(lifted))
