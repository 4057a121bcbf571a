"""Collections: normalization, verdicts, rotations, transpositions, lifts."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blowup_collections.geometry import DivisorClass, ZERO_CLASS, variety_model
from blowup_collections.vanishing import VanishingVerdict
from blowup_collections.sequences import (
    Collection,
    augment_point_blowup,
    collection_verdict,
    helix_rotate_left,
    helix_rotate_right,
    make_collection,
    normalize,
    pair_verdict,
    transpose_orthogonal,
)
from blowup_collections.families import type_instance

ZERO = VanishingVerdict.ZERO
NONZERO = VanishingVerdict.NONZERO

entries_strategy = st.lists(
    st.builds(DivisorClass, st.integers(-20, 20), st.integers(-20, 20)),
    min_size=1,
    max_size=6,
)
collections_strategy = st.builds(
    Collection, st.sampled_from(("point", "line", "cubic")), entries_strategy.map(tuple)
)
full_collections = st.builds(
    Collection,
    st.sampled_from(("point", "line", "cubic")),
    st.lists(
        st.builds(DivisorClass, st.integers(-15, 15), st.integers(-15, 15)),
        min_size=6, max_size=6,
    ).map(tuple),
)


def test_collection_length_bounds():
    with pytest.raises(ValueError, match="between 1 and 6"):
        Collection("point", ())
    with pytest.raises(ValueError, match="between 1 and 6"):
        Collection("point", tuple(DivisorClass(i, 0) for i in range(7)))
    with pytest.raises(ValueError, match="unknown variety"):
        Collection("plane", (ZERO_CLASS,))


def test_normalize_examples():
    seq = make_collection("point", [(2, 1), (3, 0), (4, -1)])
    assert normalize(seq) == make_collection("point", [(0, 0), (1, -1), (2, -2)])
    assert normalize(normalize(seq)) == normalize(seq)
    already = make_collection("line", [(0, 0), (1, 0)])
    assert normalize(already) is already


@settings(max_examples=60)
@given(collections_strategy)
def test_normalize_idempotent_and_anchored(seq):
    normalized = normalize(seq)
    assert normalized.is_normalized
    assert normalize(normalized) == normalized
    assert len(normalized) == len(seq)


@settings(max_examples=60)
@given(
    collections_strategy,
    st.builds(DivisorClass, st.integers(-10, 10), st.integers(-10, 10)),
)
def test_verdict_invariant_under_translation(seq, shift):
    model = variety_model(seq.variety)
    shifted = Collection(seq.variety, tuple(e + shift for e in seq.entries))
    assert collection_verdict(model, seq) is collection_verdict(model, shifted)


def test_pair_verdict_orientation():
    model = variety_model("point")
    # H may follow the trivial bundle (difference -H has vanishing
    # cohomology) but not precede it.
    assert pair_verdict(model, ZERO_CLASS, DivisorClass(1, 0)) is ZERO
    assert pair_verdict(model, DivisorClass(1, 0), ZERO_CLASS) is NONZERO


def test_collection_verdicts():
    point = variety_model("point")
    assert collection_verdict(point, type_instance("point", 4)) is ZERO
    repeated = make_collection("point", [(0, 0), (1, -1), (1, -1)])
    assert collection_verdict(point, repeated) is NONZERO
    single = make_collection("point", [(5, 3)])
    assert collection_verdict(point, single) is ZERO
    cubic = variety_model("cubic")
    assert collection_verdict(cubic, type_instance("cubic", 13, (0,))) is ZERO


def test_collection_verdict_rejects_model_mismatch():
    with pytest.raises(ValueError, match="tagged"):
        collection_verdict(variety_model("line"), make_collection("point", [(0, 0)]))


def test_undetermined_collection_verdict():
    cubic = variety_model("cubic")
    # Prefix of the trivial bundle and one conic-supported candidate: one
    # backward difference is undecided, none refuted.
    seq = make_collection("cubic", [(0, 0), (23, -15)])
    assert collection_verdict(cubic, seq) is VanishingVerdict.UNKNOWN


# --- rotations -----------------------------------------------------------


@pytest.mark.parametrize("tag,index,params", [
    ("point", 4, ()), ("point", 1, (3,)), ("line", 1, (0, 1)),
    ("cubic", 7, ()), ("cubic", 13, (2,)),
])
def test_rotations_invert_each_other(tag, index, params):
    model = variety_model(tag)
    seq = type_instance(tag, index, params)
    assert helix_rotate_left(model, helix_rotate_right(model, seq)) == seq
    assert helix_rotate_right(model, helix_rotate_left(model, seq)) == seq


@pytest.mark.parametrize("tag,index,params", [
    ("point", 4, ()), ("point", 7, ()), ("point", 2, (-1,)),
    ("line", 2, (4, -2)), ("cubic", 1, ()), ("cubic", 10, ()),
    ("cubic", 15, (-3,)),
])
def test_six_rotations_are_the_identity(tag, index, params):
    model = variety_model(tag)
    seq = type_instance(tag, index, params)
    current = seq
    for _ in range(6):
        current = helix_rotate_right(model, current)
    assert current == seq


@settings(max_examples=40)
@given(full_collections)
def test_rotations_invert_on_arbitrary_sequences(seq):
    model = variety_model(seq.variety)
    normalized = normalize(seq)
    assert helix_rotate_left(model, helix_rotate_right(model, normalized)) == normalized


def test_rotation_preserves_exceptionality():
    model = variety_model("cubic")
    seq = type_instance("cubic", 9)
    rotated = helix_rotate_right(model, seq)
    assert collection_verdict(model, rotated) is ZERO


def test_rotation_requires_normalized_length_6():
    model = variety_model("point")
    with pytest.raises(ValueError, match="length-6"):
        helix_rotate_right(model, make_collection("point", [(0, 0), (1, -1)]))
    shifted = Collection(
        "point", tuple(e + DivisorClass(1, 0) for e in type_instance("point", 4).entries)
    )
    with pytest.raises(ValueError, match="normalized"):
        helix_rotate_right(model, shifted)


# --- transpositions ------------------------------------------------------


def test_transpose_swaps_orthogonal_neighbours():
    model = variety_model("point")
    seq = type_instance("point", 1, (1,))
    # Entries 3 and 4 (1-based) are (2,-2) and (1,0): both differences
    # (1,-2) and (-1,2) have vanishing cohomology.
    swapped = transpose_orthogonal(model, seq, 2)
    assert swapped == type_instance("point", 4)
    back = transpose_orthogonal(model, swapped, 2)
    assert back == seq


def test_transpose_preserves_all_other_pairs():
    model = variety_model("point")
    seq = type_instance("point", 1, (1,))
    swapped = transpose_orthogonal(model, seq, 2)
    assert collection_verdict(model, swapped) is ZERO
    assert sorted(swapped.entries) == sorted(seq.entries)


def test_transpose_rejects_non_orthogonal_pairs():
    model = variety_model("point")
    seq = type_instance("point", 4)
    with pytest.raises(ValueError, match="not mutually orthogonal"):
        transpose_orthogonal(model, seq, 0)


def test_transpose_index_bounds():
    model = variety_model("point")
    seq = type_instance("point", 4)
    with pytest.raises(ValueError, match="out of range"):
        transpose_orthogonal(model, seq, 5)
    with pytest.raises(ValueError, match="out of range"):
        transpose_orthogonal(model, seq, -1)


def test_transpose_renormalizes_at_the_head():
    model = variety_model("cubic")
    seq = type_instance("cubic", 13, (0,))
    # Entries 1 and 2 (1-based) are 0 and 2H-E; their differences
    # (-2, 1) and (2, -1)... the former vanishes, the latter does not,
    # so position 1 must be rejected.
    with pytest.raises(ValueError, match="not mutually orthogonal"):
        transpose_orthogonal(model, seq, 0)


# --- lifts from projective 3-space ---------------------------------------


def test_augment_pivot_3_matches_pinned_sequence():
    lifted = augment_point_blowup((0, 1, 2, 3), 3)
    assert lifted == make_collection(
        "point", [(0, 2), (1, 1), (1, 2), (2, 0), (2, 1), (3, 0)]
    )


@pytest.mark.parametrize("pivot,type_index", [(2, 5), (3, 4), (4, 9)])
def test_augment_normalizes_to_catalogue_types(pivot, type_index):
    model = variety_model("point")
    lifted = augment_point_blowup((0, 1, 2, 3), pivot)
    assert collection_verdict(model, lifted) is ZERO
    assert normalize(lifted) == type_instance("point", type_index)


def test_augment_validates_input():
    with pytest.raises(ValueError, match="pivot index"):
        augment_point_blowup((0, 1, 2, 3), 1)
    with pytest.raises(ValueError, match="pivot index"):
        augment_point_blowup((0, 1, 2, 3), 5)
    with pytest.raises(ValueError, match="four twists"):
        augment_point_blowup((0, 1, 2), 2)
    with pytest.raises(ValueError, match="length-4"):
        augment_point_blowup((0, 1, 2, 3, 4), 3)


# --- JSON round-trips ----------------------------------------------------


@settings(max_examples=60)
@given(collections_strategy)
def test_collection_json_round_trip(seq):
    again = Collection.from_json(seq.to_json())
    assert again == seq
    payload = json.loads(seq.to_json())
    assert payload["variety"] == seq.variety
    assert payload["entries"] == [[e.a, e.b] for e in seq.entries]


def test_collection_json_rejects_malformed_payloads():
    with pytest.raises(ValueError, match="variety"):
        Collection.from_json('{"entries": [[0, 0]]}')
    with pytest.raises(ValueError, match="integers"):
        Collection.from_json('{"variety": "point", "entries": [[0.5, 0]]}')
