"""Candidate families, the type catalogue, and classification."""

import pytest

from blowup_collections.geometry import DivisorClass, variety_model
from blowup_collections.vanishing import VanishingVerdict, coh_zero
from blowup_collections.sequences import Collection, make_collection, normalize
from blowup_collections.families import (
    FAMILIES,
    TypeLabel,
    candidate_classes,
    classify_collection,
    expected_instances,
    family_by_label,
    family_label_of,
    family_labels,
    matching_type_labels,
    type_indices,
    type_instance,
)

# Frozen candidate counts for the window |a|, |b| <= 15.
CANDIDATE_COUNTS_WINDOW_15 = {"point": 36, "line": 61, "cubic": 24}

# Frozen window-15 instance counts per variety and in total.
INSTANCE_COUNTS_WINDOW_15 = {"point": 90, "line": 1624, "cubic": 54}

# Frozen full entry lists of all parameter-free types, keyed by
# (variety, index); transcribed independently of the pattern encoding.
SPORADIC_TYPE_ENTRIES = {
    ("point", 4): [(1, -1), (1, 0), (2, -2), (2, -1), (3, -2)],
    ("point", 5): [(0, 1), (1, -1), (1, 0), (2, -1), (3, -1)],
    ("point", 6): [(1, -2), (1, -1), (2, -2), (3, -2), (4, -3)],
    ("point", 7): [(0, 1), (1, 0), (2, 0), (3, -1), (3, 0)],
    ("point", 8): [(1, -1), (2, -1), (3, -2), (3, -1), (4, -3)],
    ("point", 9): [(1, 0), (2, -1), (2, 0), (3, -2), (3, -1)],
    ("cubic", 1): [(1, 0), (3, -1), (0, 1), (2, 0), (3, 0)],
    ("cubic", 2): [(2, -1), (-1, 1), (1, 0), (2, 0), (3, -1)],
    ("cubic", 3): [(-3, 2), (-1, 1), (0, 1), (1, 0), (2, 0)],
    ("cubic", 4): [(2, -1), (3, -1), (4, -2), (5, -2), (7, -3)],
    ("cubic", 5): [(1, 0), (2, -1), (3, -1), (5, -2), (2, 0)],
    ("cubic", 6): [(1, -1), (2, -1), (4, -2), (1, 0), (3, -1)],
    ("cubic", 7): [(2, -1), (-3, 2), (4, -2), (-1, 1), (1, 0)],
    ("cubic", 8): [(-5, 3), (2, -1), (-3, 2), (-1, 1), (2, 0)],
    ("cubic", 9): [(7, -4), (2, -1), (4, -2), (7, -3), (9, -4)],
    ("cubic", 10): [(-5, 3), (-3, 2), (0, 1), (2, 0), (-3, 3)],
    ("cubic", 11): [(2, -1), (5, -2), (7, -3), (2, 0), (9, -4)],
    ("cubic", 12): [(3, -1), (5, -2), (0, 1), (7, -3), (2, 0)],
}


def test_family_rosters():
    assert family_labels("point") == ("B0", "B1", "B2", "B3", "B4", "B5", "B6")
    assert family_labels("line") == ("B0", "B1", "B2", "B3")
    assert family_labels("cubic") == tuple(f"B{i}" for i in range(11))
    kinds = [fam.kind for fam in FAMILIES["cubic"]]
    assert kinds.count("parameterized") == 1
    assert kinds.count("sporadic") == 8
    assert kinds.count("undecided") == 2


@pytest.mark.parametrize("tag,pairs", [
    ("point", {(0, 1): "B0", (1, 0): "B0", (4, -3): "B0", (1, -1): "B1",
               (1, -2): "B2", (2, 0): "B3", (2, -2): "B4", (3, 0): "B5",
               (3, -1): "B6", (0, 0): None, (2, -4): None}),
    ("line", {(0, 1): "B0", (5, -4): "B0", (0, 2): "B1", (4, -2): "B1",
              (1, 1): "B1", (1, -1): "B2", (3, 0): "B3", (2, 2): None}),
    ("cubic", {(1, 0): "B0", (5, -2): "B0", (-5, 3): "B0", (1, -1): "B1",
               (2, 0): "B2", (2, -1): "B3", (3, 0): "B4", (4, -2): "B5",
               (7, -4): "B6", (0, 1): "B7", (-3, 3): "B8", (1, 1): None}),
])
def test_family_membership(tag, pairs):
    model = variety_model(tag)
    for pair, label in pairs.items():
        assert family_label_of(model, DivisorClass(*pair)) == label, pair


def test_undecided_family_membership():
    model = variety_model("cubic")
    assert family_label_of(model, DivisorClass(23, -15)) == "B9"
    assert family_label_of(model, DivisorClass(-19, 14)) == "B10"


def test_candidate_counts_window_15():
    for tag, expected in CANDIDATE_COUNTS_WINDOW_15.items():
        model = variety_model(tag)
        candidates = candidate_classes(model, 15)
        assert len(candidates) == expected
        # Postcondition: every candidate's dual is confirmed or undecided.
        for d, label in candidates:
            assert label in family_labels(tag)
            assert coh_zero(model, -d) in (
                VanishingVerdict.ZERO, VanishingVerdict.UNKNOWN
            )


def test_candidates_sorted_deterministically():
    model = variety_model("point")
    candidates = candidate_classes(model, 12)
    assert candidates == sorted(candidates)


def test_undecided_candidates_enter_at_window_23():
    model = variety_model("cubic")
    labels_19 = {label for _, label in candidate_classes(model, 19)}
    labels_23 = {label for _, label in candidate_classes(model, 23)}
    assert "B9" not in labels_19 and "B10" in labels_19
    assert "B9" in labels_23


def test_sporadic_family_member_guard():
    fam = family_by_label("point", "B1")
    assert fam.member(0) == DivisorClass(1, -1)
    with pytest.raises(ValueError, match="single member"):
        fam.member(1)
    with pytest.raises(ValueError, match="parameterization"):
        family_by_label("cubic", "B9").member(0)


def test_type_catalogue_shape():
    assert type_indices("point") == tuple(range(1, 10))
    assert type_indices("line") == (1, 2)
    assert type_indices("cubic") == tuple(range(1, 16))


@pytest.mark.parametrize("key,entries", sorted(SPORADIC_TYPE_ENTRIES.items()))
def test_sporadic_type_instances_pinned(key, entries):
    tag, index = key
    seq = type_instance(tag, index)
    assert seq.is_normalized
    assert [e.as_pair() for e in seq.entries[1:]] == entries


def test_parameterized_type_instances():
    assert [e.as_pair() for e in type_instance("point", 1, (3,)).entries] == [
        (0, 0), (1, -1), (2, -2), (3, -2), (4, -3), (5, -4)
    ]
    assert [e.as_pair() for e in type_instance("line", 2, (0, 1)).entries] == [
        (0, 0), (1, -1), (0, 1), (1, 0), (1, 1), (2, 0)
    ]
    assert [e.as_pair() for e in type_instance("cubic", 14, (1,)).entries] == [
        (0, 0), (2, -1), (-1, 1), (1, 0), (3, -1), (2, 0)
    ]


def test_type_instance_validates():
    with pytest.raises(ValueError, match="no type"):
        type_instance("point", 10)
    with pytest.raises(ValueError, match="parameter"):
        type_instance("point", 1, (1, 2))


def test_classify_round_trips_all_instances():
    for tag in ("point", "line", "cubic"):
        model = variety_model(tag)
        for seq, label in expected_instances(model, 12):
            assert classify_collection(model, seq) == label


def test_classify_examples():
    point = variety_model("point")
    label = classify_collection(point, type_instance("point", 1, (3,)))
    assert label == TypeLabel("point", 1, (3,))
    assert label.render() == "(1)[a=3]"
    cubic = variety_model("cubic")
    assert classify_collection(cubic, type_instance("cubic", 4)) == TypeLabel(
        "cubic", 4, ()
    )


def test_classify_rejects_permuted_sequences():
    point = variety_model("point")
    seq = type_instance("point", 4)
    permuted = Collection("point", (seq.entries[0],) + tuple(reversed(seq.entries[1:])))
    assert classify_collection(point, permuted) is None
    assert matching_type_labels(point, permuted) == ()


def test_classify_requires_normalized_length_6():
    point = variety_model("point")
    with pytest.raises(ValueError, match="normalized length-6"):
        classify_collection(point, make_collection("point", [(0, 0), (1, -1)]))
    shifted = Collection(
        "point",
        tuple(e + DivisorClass(0, 1) for e in type_instance("point", 4).entries),
    )
    with pytest.raises(ValueError, match="normalized length-6"):
        classify_collection(point, shifted)
    assert classify_collection(point, normalize(shifted)) == TypeLabel("point", 4, ())


def test_expected_instances_window_15_counts():
    for tag, expected in INSTANCE_COUNTS_WINDOW_15.items():
        model = variety_model(tag)
        instances = expected_instances(model, 15)
        assert len(instances) == expected
        # Entries stay within the window, and no two labels collide.
        seqs = [seq for seq, _ in instances]
        assert len(set(seqs)) == len(seqs)
        for seq, _ in instances:
            assert all(abs(e.a) <= 15 and abs(e.b) <= 15 for e in seq.entries)


def test_expected_instances_parameter_ranges_window_15():
    point = variety_model("point")
    by_index = {}
    for _, label in expected_instances(point, 15):
        by_index.setdefault(label.index, []).append(label.params)
    for index in (1, 2, 3):
        params = sorted(p[0] for p in by_index[index])
        assert params == list(range(-14, 14)), index
    line = variety_model("line")
    a_values = set()
    b_values = set()
    for _, label in expected_instances(line, 15):
        a_values.add(label.params[0])
        b_values.add(label.params[1])
    assert sorted(a_values) == list(range(-14, 15))
    assert sorted(b_values) == list(range(-13, 15))
    cubic = variety_model("cubic")
    for index in (13, 14, 15):
        params = sorted(
            label.params[0]
            for _, label in expected_instances(cubic, 15)
            if label.index == index
        )
        assert params == list(range(-6, 8)), index
