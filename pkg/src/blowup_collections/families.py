"""Candidate line-bundle families and the catalogue of collection types.

Candidates
----------

A divisor class ``D`` can follow the trivial bundle in an exceptional
collection only when all cohomology of ``O(-D)`` vanishes (or, on the cubic
model, is undecided).  The classes with that property organize into named
*families* per variety -- the row/column labels ``B0, B1, ...`` of the
pairwise-compatibility tables:

* point: ``B0(a) = aH - (a-1)E`` (one integer parameter) plus six sporadic
  classes ``B1..B6``;
* line: two parameterized families ``B0(a) = aH - (a-1)E`` and
  ``B1(b) = bH - (b-2)E`` plus two sporadic classes ``B2, B3``;
* cubic: ``B0(b) = (2b+1)H - bE`` plus eight sporadic classes ``B1..B8``
  and two *undecided* families ``B9, B10`` (duals of the two undecided
  vanishing regions, supported on an integral conic).

Types
-----

The complete classification of normalized length-6 exceptional collections
consists of finitely many *types*, each a pattern with 0, 1 or 2 integer
parameters: 9 types for the point model, 2 two-parameter types for the
line model, and 15 types for the cubic model.  This module stores the
patterns, instantiates them (:func:`type_instance`,
:func:`expected_instances`) and inverts them (:func:`classify_collection`).

EXAMPLES::

    >>> X = variety_model("point")
    >>> label = classify_collection(X, type_instance("point", 1, (3,)))
    >>> (label.index, label.params)
    (1, (3,))
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .geometry import DivisorClass, VarietyModel, ZERO_CLASS, variety_model
from .vanishing import VanishingVerdict, classified_case, coh_zero
from .sequences import Collection

__all__ = [
    "LineBundleFamily",
    "FAMILIES",
    "family_labels",
    "family_by_label",
    "family_label_of",
    "candidate_classes",
    "TypeLabel",
    "type_indices",
    "type_param_count",
    "type_instance",
    "expected_instances",
    "matching_type_labels",
    "classify_collection",
]


@dataclass(frozen=True)
class LineBundleFamily:
    """One named family of candidate classes.

    ``kind`` is ``"parameterized"`` (affine line ``base + t*direction``),
    ``"sporadic"`` (a single class, ``direction == (0, 0)``), or
    ``"undecided"`` (cubic model only: the classes whose duals fall in one
    of the two undecided vanishing regions; membership is by predicate, not
    by affine formula).
    """

    label: str
    kind: str
    base: DivisorClass = ZERO_CLASS
    direction: DivisorClass = ZERO_CLASS
    param_name: str = ""

    def member(self, t: int) -> DivisorClass:
        if self.kind == "sporadic":
            if t != 0:
                raise ValueError(f"family {self.label} has a single member")
            return self.base
        if self.kind != "parameterized":
            raise ValueError(f"family {self.label} has no affine parameterization")
        return self.base + t * self.direction


def _parameterized(label: str, base: tuple[int, int], param: str) -> LineBundleFamily:
    return LineBundleFamily(
        label=label,
        kind="parameterized",
        base=DivisorClass(*base),
        direction=_DIRECTIONS[param],
        param_name=param,
    )


def _sporadic(label: str, base: tuple[int, int]) -> LineBundleFamily:
    return LineBundleFamily(label=label, kind="sporadic", base=DivisorClass(*base))


def _undecided(label: str) -> LineBundleFamily:
    return LineBundleFamily(label=label, kind="undecided")


# Step directions of the parameterized families, keyed by the conventional
# parameter letter: a-indexed families step by H - E, b-indexed ones by
# H - E on the line model and by 2H - E on the cubic model.
_DIRECTIONS = {
    "a": DivisorClass(1, -1),
    "b": DivisorClass(1, -1),
    "b2": DivisorClass(2, -1),
}

FAMILIES: dict[str, tuple[LineBundleFamily, ...]] = {
    "point": (
        _parameterized("B0", (0, 1), "a"),
        _sporadic("B1", (1, -1)),
        _sporadic("B2", (1, -2)),
        _sporadic("B3", (2, 0)),
        _sporadic("B4", (2, -2)),
        _sporadic("B5", (3, 0)),
        _sporadic("B6", (3, -1)),
    ),
    "line": (
        _parameterized("B0", (0, 1), "a"),
        _parameterized("B1", (0, 2), "b"),
        _sporadic("B2", (1, -1)),
        _sporadic("B3", (3, 0)),
    ),
    "cubic": (
        _parameterized("B0", (1, 0), "b2"),
        _sporadic("B1", (1, -1)),
        _sporadic("B2", (2, 0)),
        _sporadic("B3", (2, -1)),
        _sporadic("B4", (3, 0)),
        _sporadic("B5", (4, -2)),
        _sporadic("B6", (7, -4)),
        _sporadic("B7", (0, 1)),
        _sporadic("B8", (-3, 3)),
        _undecided("B9"),
        _undecided("B10"),
    ),
}


def family_labels(variety: str) -> tuple[str, ...]:
    return tuple(f.label for f in FAMILIES[variety])


def family_by_label(variety: str, label: str) -> LineBundleFamily:
    for fam in FAMILIES[variety]:
        if fam.label == label:
            return fam
    raise ValueError(f"no family {label!r} on the {variety} model")


def family_label_of(model: VarietyModel, d: DivisorClass) -> Optional[str]:
    """Label of the candidate family containing ``d``, or ``None``.

    A class belongs to family ``B(k-1)`` exactly when ``-d`` falls in
    vanishing case ``k``; the vanishing cases are pairwise disjoint, so
    the label is unambiguous.
    """
    case = classified_case(model, -d)
    if case is None:
        return None
    return f"B{case - 1}"


def candidate_classes(
    model: VarietyModel, window: int
) -> list[tuple[DivisorClass, str]]:
    """All candidate classes with ``|a|, |b| <= window``, with family labels.

    Sorted lexicographically for deterministic downstream reports.  Every
    returned class satisfies ``coh_zero(-D) in {ZERO, UNKNOWN}``.
    """
    found = []
    for a in range(-window, window + 1):
        for b in range(-window, window + 1):
            d = DivisorClass(a, b)
            label = family_label_of(model, d)
            if label is not None:
                found.append((d, label))
    return found


@dataclass(frozen=True, order=True)
class TypeLabel:
    """Identifier of one classification type, e.g. type (1) at ``a = 3``."""

    variety: str
    index: int
    params: tuple[int, ...] = ()

    def render(self) -> str:
        fam = _TYPE_PATTERNS[self.variety][self.index]
        if not self.params:
            return f"({self.index})"
        named = ", ".join(
            f"{name}={value}" for name, value in zip(fam.param_names, self.params)
        )
        return f"({self.index})[{named}]"

    def to_json_dict(self) -> dict:
        return {
            "variety": self.variety,
            "index": self.index,
            "params": list(self.params),
        }


@dataclass(frozen=True)
class _Entry:
    """One slot of a type pattern: fixed class or family member.

    A fixed slot stores the class itself.  A parameterized slot stores
    which pattern parameter it consumes, the offset added to it, and the
    family whose affine parameterization realizes the slot.
    """

    fixed: Optional[DivisorClass] = None
    family_label: str = ""
    param_index: int = 0
    shift: int = 0


@dataclass(frozen=True)
class _TypePattern:
    variety: str
    index: int
    param_names: tuple[str, ...]
    entries: tuple[_Entry, ...] = field(default_factory=tuple)

    def instantiate(self, params: Sequence[int]) -> tuple[DivisorClass, ...]:
        if len(params) != len(self.param_names):
            raise ValueError(
                f"type ({self.index}) on the {self.variety} model takes "
                f"{len(self.param_names)} parameter(s), got {len(params)}"
            )
        out = []
        for entry in self.entries:
            if entry.fixed is not None:
                out.append(entry.fixed)
            else:
                fam = family_by_label(self.variety, entry.family_label)
                out.append(fam.member(params[entry.param_index] + entry.shift))
        return tuple(out)


def _F(a: int, b: int) -> _Entry:
    return _Entry(fixed=DivisorClass(a, b))


def _M(family_label: str, param_index: int = 0, shift: int = 0) -> _Entry:
    return _Entry(family_label=family_label, param_index=param_index, shift=shift)


def _pattern(variety, index, param_names, entries) -> _TypePattern:
    return _TypePattern(variety, index, tuple(param_names), tuple(entries))


_TYPE_PATTERNS: dict[str, dict[int, _TypePattern]] = {
    "point": {
        1: _pattern("point", 1, ("a",),
                    [_F(1, -1), _F(2, -2), _M("B0"), _M("B0", 0, 1), _M("B0", 0, 2)]),
        2: _pattern("point", 2, ("a",),
                    [_F(1, -1), _M("B0"), _M("B0", 0, 1), _M("B0", 0, 2), _F(3, -1)]),
        3: _pattern("point", 3, ("a",),
                    [_M("B0"), _M("B0", 0, 1), _M("B0", 0, 2), _F(2, 0), _F(3, -1)]),
        4: _pattern("point", 4, (),
                    [_F(1, -1), _F(1, 0), _F(2, -2), _F(2, -1), _F(3, -2)]),
        5: _pattern("point", 5, (),
                    [_F(0, 1), _F(1, -1), _F(1, 0), _F(2, -1), _F(3, -1)]),
        6: _pattern("point", 6, (),
                    [_F(1, -2), _F(1, -1), _F(2, -2), _F(3, -2), _F(4, -3)]),
        7: _pattern("point", 7, (),
                    [_F(0, 1), _F(1, 0), _F(2, 0), _F(3, -1), _F(3, 0)]),
        8: _pattern("point", 8, (),
                    [_F(1, -1), _F(2, -1), _F(3, -2), _F(3, -1), _F(4, -3)]),
        9: _pattern("point", 9, (),
                    [_F(1, 0), _F(2, -1), _F(2, 0), _F(3, -2), _F(3, -1)]),
    },
    "line": {
        1: _pattern("line", 1, ("a", "b"),
                    [_M("B0", 0, 0), _M("B0", 0, 1),
                     _M("B1", 1, 0), _M("B1", 1, 1), _F(3, 0)]),
        2: _pattern("line", 2, ("a", "b"),
                    [_F(1, -1), _M("B0", 0, 0), _M("B0", 0, 1),
                     _M("B1", 1, 0), _M("B1", 1, 1)]),
    },
    "cubic": {
        1: _pattern("cubic", 1, (),
                    [_F(1, 0), _F(3, -1), _F(0, 1), _F(2, 0), _F(3, 0)]),
        2: _pattern("cubic", 2, (),
                    [_F(2, -1), _F(-1, 1), _F(1, 0), _F(2, 0), _F(3, -1)]),
        3: _pattern("cubic", 3, (),
                    [_F(-3, 2), _F(-1, 1), _F(0, 1), _F(1, 0), _F(2, 0)]),
        4: _pattern("cubic", 4, (),
                    [_F(2, -1), _F(3, -1), _F(4, -2), _F(5, -2), _F(7, -3)]),
        5: _pattern("cubic", 5, (),
                    [_F(1, 0), _F(2, -1), _F(3, -1), _F(5, -2), _F(2, 0)]),
        6: _pattern("cubic", 6, (),
                    [_F(1, -1), _F(2, -1), _F(4, -2), _F(1, 0), _F(3, -1)]),
        7: _pattern("cubic", 7, (),
                    [_F(2, -1), _F(-3, 2), _F(4, -2), _F(-1, 1), _F(1, 0)]),
        8: _pattern("cubic", 8, (),
                    [_F(-5, 3), _F(2, -1), _F(-3, 2), _F(-1, 1), _F(2, 0)]),
        9: _pattern("cubic", 9, (),
                    [_F(7, -4), _F(2, -1), _F(4, -2), _F(7, -3), _F(9, -4)]),
        10: _pattern("cubic", 10, (),
                     [_F(-5, 3), _F(-3, 2), _F(0, 1), _F(2, 0), _F(-3, 3)]),
        11: _pattern("cubic", 11, (),
                     [_F(2, -1), _F(5, -2), _F(7, -3), _F(2, 0), _F(9, -4)]),
        12: _pattern("cubic", 12, (),
                     [_F(3, -1), _F(5, -2), _F(0, 1), _F(7, -3), _F(2, 0)]),
        13: _pattern("cubic", 13, ("b",),
                     [_F(2, -1), _F(4, -2),
                      _M("B0", 0, -2), _M("B0", 0, -1), _M("B0", 0, 0)]),
        14: _pattern("cubic", 14, ("b",),
                     [_F(2, -1), _M("B0", 0, -2), _M("B0", 0, -1), _M("B0", 0, 0),
                      _F(2, 0)]),
        15: _pattern("cubic", 15, ("b",),
                     [_M("B0", 0, -2), _M("B0", 0, -1), _M("B0", 0, 0),
                      _F(0, 1), _F(2, 0)]),
    },
}


def type_indices(variety: str) -> tuple[int, ...]:
    return tuple(sorted(_TYPE_PATTERNS[variety]))


def type_param_count(variety: str, index: int) -> int:
    return len(_TYPE_PATTERNS[variety][index].param_names)


def type_instance(variety: str, index: int, params: Sequence[int] = ()) -> Collection:
    """Normalized length-6 collection realizing one type at given parameters.

    EXAMPLES::

        >>> print(type_instance("cubic", 7))
        [0, 2H-E, -3H+2E, 4H-2E, -H+E, H]
    """
    try:
        pattern = _TYPE_PATTERNS[variety][index]
    except KeyError:
        raise ValueError(f"no type ({index}) on the {variety} model") from None
    tail = pattern.instantiate(tuple(params))
    return Collection(variety, (ZERO_CLASS,) + tail)


def expected_instances(
    model: VarietyModel, window: int
) -> list[tuple[Collection, TypeLabel]]:
    """All type instances whose entries fit in ``|a|, |b| <= window``.

    The parameter scan covers ``[-window - 6, window + 6]`` per parameter,
    which is exhaustive: every pattern contains a slot whose coordinates
    grow linearly with each parameter with offsets bounded by 6.
    """
    out = []
    lo, hi = -window - 6, window + 6

    def fits(entries: tuple[DivisorClass, ...]) -> bool:
        return all(abs(e.a) <= window and abs(e.b) <= window for e in entries)

    for index in type_indices(model.tag):
        pattern = _TYPE_PATTERNS[model.tag][index]
        arity = len(pattern.param_names)
        if arity == 0:
            grid: list[tuple[int, ...]] = [()]
        elif arity == 1:
            grid = [(t,) for t in range(lo, hi + 1)]
        else:
            grid = [(s, t) for s in range(lo, hi + 1) for t in range(lo, hi + 1)]
        for params in grid:
            entries = pattern.instantiate(params)
            if fits(entries):
                out.append(
                    (
                        Collection(model.tag, (ZERO_CLASS,) + entries),
                        TypeLabel(model.tag, index, params),
                    )
                )
    out.sort(key=lambda pair: (pair[1].index, pair[1].params))
    return out


def _unify(pattern: _TypePattern, tail: tuple[DivisorClass, ...]) -> Optional[tuple[int, ...]]:
    """Solve for pattern parameters matching ``tail`` exactly, if any."""
    params: list[Optional[int]] = [None] * len(pattern.param_names)
    for entry, actual in zip(pattern.entries, tail):
        if entry.fixed is not None:
            if actual != entry.fixed:
                return None
            continue
        fam = family_by_label(pattern.variety, entry.family_label)
        step = fam.direction
        # Affine solve: actual = base + t * step with step.a != 0 always.
        offset = actual - fam.base
        if offset.a % step.a != 0:
            return None
        t = offset.a // step.a
        if fam.base + t * step != actual:
            return None
        value = t - entry.shift
        known = params[entry.param_index]
        if known is None:
            params[entry.param_index] = value
        elif known != value:
            return None
    if any(p is None for p in params):  # pragma: no cover - patterns use all params
        return None
    solved = tuple(int(p) for p in params)  # type: ignore[arg-type]
    return solved if pattern.instantiate(solved) == tail else None


def matching_type_labels(model: VarietyModel, seq: Collection) -> tuple[TypeLabel, ...]:
    """All type labels whose instance equals the given normalized collection."""
    if seq.variety != model.tag:
        raise ValueError(
            f"collection is tagged {seq.variety!r} but the model is {model.tag!r}"
        )
    if len(seq.entries) != 6 or not seq.is_normalized:
        raise ValueError("classification expects a normalized length-6 collection")
    tail = seq.entries[1:]
    labels = []
    for index in type_indices(model.tag):
        pattern = _TYPE_PATTERNS[model.tag][index]
        params = _unify(pattern, tail)
        if params is not None:
            labels.append(TypeLabel(model.tag, index, params))
    return tuple(labels)


def classify_collection(model: VarietyModel, seq: Collection) -> Optional[TypeLabel]:
    """The unique type label realizing ``seq``, or ``None`` if there is none.

    The type catalogue is collision-free: distinct (type, parameters)
    pairs produce distinct collections, so a multiple match would flag
    corrupted pattern data and raises ``ValueError``.
    """
    labels = matching_type_labels(model, seq)
    if not labels:
        return None
    if len(labels) > 1:
        raise ValueError(
            "ambiguous classification: "
            + ", ".join(label.render() for label in labels)
        )
    return labels[0]
